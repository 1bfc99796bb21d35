#pragma once

#include <type_traits>
#include <utility>
#include <variant>

#include "hasse/complex.hpp"
#include "hasse/meta.hpp"
#include "hasse/simplex_set.hpp"
#include "hasse/traversal.hpp"
#include "hasse/types.hpp"

namespace hasse {

/// The collapse map: f itself when f misses s, otherwise p joined with
/// whatever of f survives outside s.
inline SimplexName phi(const SimplexName& f, const SimplexName& s, VertexKey p) {
    if (!f.intersects(s)) return f;
    return f.minus(s).with(p);
}

/// Result of planning a collapse of s onto the fresh vertex `new_vertex`:
/// for every post-collapse simplex name, the set of old simplices that
/// map onto it. Simplices outside the complete neighborhood of s are
/// invariant and never appear.
template <class Traits>
struct DecimationMapping {
    VertexKey new_vertex = 0;
    SimplexMap<Traits> table;
};

/// Plans the collapse of s without mutating the complex. Walks the closure
/// of s (outer), the live star of each closure member (inner), and the
/// closure of each star member (grab); grabbed simplices leave the working
/// neighborhood so each lands in exactly one group. Groups for one target
/// merge across visits, which catches non-manifold splits of a group.
template <class Traits, int L>
DecimationMapping<Traits> build_mapping(const Complex<Traits>& complex,
                                        SimplexHandle<Traits, L> s)
    requires(L >= 1)
{
    if (!complex.is_live(s)) throw NotFoundError("simplex is not live");

    DecimationMapping<Traits> mapping;
    mapping.new_vertex = complex.fresh_vertex_key();

    // Complete neighborhood: everything whose name meets s, i.e. the star
    // of the vertices of s.
    SimplexSet<Traits> vertex_seeds;
    for (VertexKey v : s.name())
        vertex_seeds.insert(*complex.template get_simplex<0>(SimplexName{v}));
    SimplexSet<Traits> remaining = star(complex, vertex_seeds);

    bfs_down(complex, make_set(s), [&](auto i) {
        const SimplexName iname = i.name();
        bfs_up(complex, make_set(i), [&](auto j) {
            if (!remaining.contains(j)) return true; // already grouped; keep walking
            SimplexName target = j.name().minus(iname).with(mapping.new_vertex);
            SimplexSet<Traits> grab;
            bfs_down(complex, make_set(j), [&](auto k) {
                if (remaining.contains(k)) {
                    remaining.erase(k);
                    grab.insert(k);
                }
                return true;
            });
            auto& group = mapping.table[target];
            group = set_union(group, grab);
            return true;
        });
        return true;
    });
    return mapping;
}

/// Callback that fills every new simplex with the level's default payload.
struct DefaultRemapCallback {
    template <class Traits, int L>
    auto operator()(const Complex<Traits>&, const SimplexName&, const SimplexSet<Traits>&,
                    std::integral_constant<int, L>) const {
        if constexpr (!std::is_void_v<NodeDataOf<Traits, L>>)
            return NodeDataOf<Traits, L>{};
    }
};

namespace detail {

template <class Traits>
struct Staged {
    template <int L>
    struct Item {
        using T = NodeDataOf<Traits, L>;
        SimplexName name;
        std::conditional_t<std::is_void_v<T>, std::monostate, T> value;
    };
    template <int L> using Level = std::vector<Item<L>>;
    using Tuple = meta::LevelTuple<Level, Traits::dimension + 1>;
};

} // namespace detail

/// Collapses s onto a fresh vertex, remapping user data through the
/// callback. The callback is invoked once per mapping group, in ascending
/// target-name order, as
///
///   cb(complex, target_name, grabbed_set, integral_constant<int, K>{})
///
/// and must return the node payload for level K (nothing for payload-free
/// levels). Grabbed handles stay readable during the callback; it must not
/// mutate the complex. All callbacks run before the first removal, so a
/// throwing callback leaves the complex untouched. New relations created
/// by the re-insertion take default payloads. Returns the new vertex.
template <class Traits, int L, class Callback>
SimplexHandle<Traits, 0> decimate(Complex<Traits>& complex, SimplexHandle<Traits, L> s,
                                  Callback&& cb)
    requires(L >= 1)
{
    constexpr int N = Traits::dimension;

    DecimationMapping<Traits> mapping = build_mapping(complex, s);

    SimplexSet<Traits> doomed;
    for (auto& [target, group] : mapping.table) doomed = set_union(doomed, group);

    typename detail::Staged<Traits>::Tuple staged;
    for (auto& [target, group] : mapping.table) {
        meta::dispatch_level<0, N>(target.dimension(), [&](auto lc) {
            constexpr int K = lc();
            auto& items = std::get<std::size_t(K)>(staged);
            if constexpr (std::is_void_v<NodeDataOf<Traits, K>>) {
                cb(std::as_const(complex), target, group, lc);
                items.push_back({target, {}});
            } else {
                items.push_back({target, cb(std::as_const(complex), target, group, lc)});
            }
        });
    }

    // performRemoval: the whole neighborhood goes, top level first. Every
    // coface of a doomed simplex is doomed, so each removal deletes
    // exactly one node.
    meta::static_for_reverse<0, N>([&](auto lc) {
        for (auto h : doomed.template level<lc()>()) complex.remove(h);
    });

    // performInsertion: levels ascending; ordinary insertion backfilling
    // restores relations to untouched simplices. Payloads are assigned
    // explicitly so that targets created as faces of higher targets still
    // receive their mapped data.
    meta::static_for<0, N>([&](auto lc) {
        constexpr int K = lc();
        for (auto& item : std::get<std::size_t(K)>(staged)) {
            auto h = complex.template insert<K>(item.name);
            if constexpr (!std::is_void_v<NodeDataOf<Traits, K>>)
                h.data() = std::move(item.value);
        }
    });

    return *complex.template get_simplex<0>(SimplexName{mapping.new_vertex});
}

template <class Traits, int L>
SimplexHandle<Traits, 0> decimate(Complex<Traits>& complex, SimplexHandle<Traits, L> s)
    requires(L >= 1)
{
    return decimate(complex, s, DefaultRemapCallback{});
}

} // namespace hasse
