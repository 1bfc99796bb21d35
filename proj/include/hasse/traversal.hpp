#pragma once

#include <type_traits>

#include "hasse/complex.hpp"
#include "hasse/meta.hpp"
#include "hasse/simplex_set.hpp"

namespace hasse {

namespace detail {

// Visitors may return bool (false prunes expansion through the node) or
// void (always expand).
template <class Visitor, class Handle>
bool invoke_visit(Visitor& vis, Handle h) {
    if constexpr (std::is_void_v<decltype(vis(h))>) {
        vis(h);
        return true;
    } else {
        return static_cast<bool>(vis(h));
    }
}

} // namespace detail

/// Breadth-first traversal through coboundary relations, level by level
/// ascending. Each reachable simplex is visited at most once; within a
/// level, visits run in ascending internal id. The visitor is called with
/// the typed handle; overload per level for level-specific work, with a
/// generic catch-all for the rest.
template <class Traits, class Visitor>
void bfs_up(const Complex<Traits>& complex, const SimplexSet<Traits>& seeds, Visitor&& vis) {
    (void)complex;
    constexpr int N = Traits::dimension;
    SimplexSet<Traits> frontier = seeds;
    meta::static_for<0, N>([&](auto lc) {
        constexpr int L = lc();
        for (auto h : frontier.template level<L>()) {
            if (!detail::invoke_visit(vis, h)) continue;
            if constexpr (L < N) {
                for (VertexKey v : h.cover()) frontier.insert(*h.up(v));
            }
        }
    });
}

/// Mirror of bfs_up through boundary relations, level by level descending.
/// The root simplex is never visited.
template <class Traits, class Visitor>
void bfs_down(const Complex<Traits>& complex, const SimplexSet<Traits>& seeds, Visitor&& vis) {
    (void)complex;
    constexpr int N = Traits::dimension;
    SimplexSet<Traits> frontier = seeds;
    meta::static_for_reverse<0, N>([&](auto lc) {
        constexpr int L = lc();
        for (auto h : frontier.template level<L>()) {
            if (!detail::invoke_visit(vis, h)) continue;
            if constexpr (L > 0) {
                for (VertexKey v : h.name()) frontier.insert(*h.down(v));
            }
        }
    });
}

/// Star: every simplex that contains a member of the input (the members
/// themselves included).
template <class Traits>
SimplexSet<Traits> star(const Complex<Traits>& complex, const SimplexSet<Traits>& input) {
    SimplexSet<Traits> out;
    bfs_up(complex, input, [&](auto h) { out.insert(h); });
    return out;
}

/// Closure: every face of every member of the input, members included.
/// The root simplex is excluded by SimplexSet convention.
template <class Traits>
SimplexSet<Traits> closure(const Complex<Traits>& complex, const SimplexSet<Traits>& input) {
    SimplexSet<Traits> out;
    bfs_down(complex, input, [&](auto h) { out.insert(h); });
    return out;
}

/// Link: faces of the closed star that do not intersect the input,
/// computed as closure(star(X)) minus star(closure(X)).
template <class Traits>
SimplexSet<Traits> link(const Complex<Traits>& complex, const SimplexSet<Traits>& input) {
    return set_difference(closure(complex, star(complex, input)),
                          star(complex, closure(complex, input)));
}

template <class Traits, int L>
SimplexSet<Traits> star(const Complex<Traits>& complex, SimplexHandle<Traits, L> h) {
    return star(complex, make_set(h));
}

template <class Traits, int L>
SimplexSet<Traits> closure(const Complex<Traits>& complex, SimplexHandle<Traits, L> h) {
    return closure(complex, make_set(h));
}

template <class Traits, int L>
SimplexSet<Traits> link(const Complex<Traits>& complex, SimplexHandle<Traits, L> h) {
    return link(complex, make_set(h));
}

/// All simplices of dimension <= k.
template <class Traits>
SimplexSet<Traits> k_skeleton(const Complex<Traits>& complex, int k) {
    SimplexSet<Traits> out;
    meta::static_for<0, Traits::dimension>([&](auto lc) {
        if (lc() <= k)
            for (auto h : complex.template level<lc()>()) out.insert(h);
    });
    return out;
}

/// Same-level simplices sharing a coboundary coface with s, pushed to a
/// caller-supplied sink. The sink's container decides whether duplicates
/// are kept.
template <class Traits, int L, class OutIter>
void neighbors_up(const Complex<Traits>& complex, SimplexHandle<Traits, L> s, OutIter out) {
    (void)complex;
    if constexpr (L < Traits::dimension) {
        for (VertexKey a : s.cover()) {
            auto coface = *s.up(a);
            for (VertexKey b : coface.name()) {
                auto nbor = *coface.down(b);
                if (nbor != s) *out++ = nbor;
            }
        }
    }
}

template <class Traits, int L>
SimplexSet<Traits> neighbors_up(const Complex<Traits>& complex, SimplexHandle<Traits, L> s) {
    (void)complex;
    SimplexSet<Traits> out;
    if constexpr (L < Traits::dimension) {
        for (VertexKey a : s.cover()) {
            auto coface = *s.up(a);
            for (VertexKey b : coface.name()) {
                auto nbor = *coface.down(b);
                if (nbor != s) out.insert(nbor);
            }
        }
    }
    return out;
}

/// Same-level simplices sharing a boundary face with s. Vertices have no
/// neighbors here: their only shared face would be the root, which is
/// excluded by convention.
template <class Traits, int L>
SimplexSet<Traits> neighbors_down(const Complex<Traits>& complex, SimplexHandle<Traits, L> s) {
    (void)complex;
    SimplexSet<Traits> out;
    if constexpr (L > 0) {
        for (VertexKey b : s.name()) {
            auto face = *s.down(b);
            for (VertexKey a : face.cover()) {
                auto nbor = *face.up(a);
                if (nbor != s) out.insert(nbor);
            }
        }
    }
    return out;
}

} // namespace hasse
