#pragma once

#include <cassert>
#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <type_traits>
#include <vector>

#include "hasse/meta.hpp"
#include "hasse/types.hpp"

namespace hasse {

/// Schema of a complex: the dimension N, one node payload type per level
/// -1..N and one relation payload type per relation level 0..N (level k
/// relations join (k-1)-simplices to k-simplices). `void` marks a level
/// that carries no payload and consumes no per-node storage.
template <class T>
concept ComplexTraits = requires {
    { T::dimension } -> std::convertible_to<int>;
    typename T::NodeTypes;
    typename T::RelationTypes;
};

template <ComplexTraits Traits>
class Complex;

template <class Traits, int L>
using NodeDataOf = meta::TypeAt<typename Traits::NodeTypes, std::size_t(L + 1)>;

template <class Traits, int L>
using RelationDataOf = meta::TypeAt<typename Traits::RelationTypes, std::size_t(L)>;

namespace detail {

template <class T> struct DataBox { T data{}; };
template <> struct DataBox<void> {};

template <class... Ts>
constexpr bool payloads_default_constructible(meta::TypeList<Ts...>) {
    return ((std::is_void_v<Ts> || std::is_default_constructible_v<Ts>) && ...);
}

template <class Traits, int Level> struct Node;

template <class Traits, int Level, bool HasUp = (Level < int(Traits::dimension))>
struct UpPart {
    std::map<VertexKey, Node<Traits, Level + 1>*> up;
};
template <class Traits, int Level> struct UpPart<Traits, Level, false> {};

template <class Traits, int Level, bool HasDown = (Level >= 0)>
struct DownPart {
    // One shared record per boundary relation; the coboundary direction on
    // the lower node stores only the pointer back up.
    struct Entry {
        Node<Traits, Level - 1>* node;
        [[no_unique_address]] DataBox<RelationDataOf<Traits, Level>> rel;
    };
    std::map<VertexKey, Entry> down;
};
template <class Traits, int Level> struct DownPart<Traits, Level, false> {};

/// One simplex of the Hasse diagram. The key set of `down` is the name of
/// the simplex; up[v] points at name+{v}, down[v] at name-{v}.
template <class Traits, int Level>
struct Node : UpPart<Traits, Level>,
              DownPart<Traits, Level>,
              DataBox<NodeDataOf<Traits, Level>> {
    static constexpr int level = Level;
    std::uint64_t iid{};
};

} // namespace detail

/// Reference to one simplex of a Complex<Traits>. `level` is the simplex
/// dimension; the root simplex has level -1. Handles behave like
/// iterators: copying is cheap and a handle dies with its simplex.
template <class Traits, int L>
class SimplexHandle {
    using NodeT = detail::Node<Traits, L>;
    static constexpr int dimension = Traits::dimension;

public:
    static constexpr int level = L;

    SimplexHandle() = default;

    explicit operator bool() const { return node_ != nullptr; }

    // Cached at construction so that stale handles can still be identified
    // (and liveness-checked) without touching freed memory.
    std::uint64_t iid() const { return iid_; }

    SimplexName name() const {
        if constexpr (L < 0) {
            return {};
        } else {
            std::vector<VertexKey> keys;
            keys.reserve(node_->down.size());
            for (const auto& [v, entry] : node_->down) keys.push_back(v);
            return SimplexName::sorted_unchecked(std::move(keys));
        }
    }

    /// Keys v such that name+{v} is in the complex, ascending.
    std::vector<VertexKey> cover() const {
        if constexpr (L >= dimension) {
            return {};
        } else {
            std::vector<VertexKey> keys;
            keys.reserve(node_->up.size());
            for (const auto& [v, n] : node_->up) keys.push_back(v);
            return keys;
        }
    }

    std::optional<SimplexHandle<Traits, L + 1>> up(VertexKey v) const
        requires(L < int(Traits::dimension))
    {
        auto it = node_->up.find(v);
        if (it == node_->up.end()) return std::nullopt;
        return SimplexHandle<Traits, L + 1>(it->second);
    }

    std::optional<SimplexHandle<Traits, L - 1>> down(VertexKey v) const
        requires(L >= 0)
    {
        auto it = node_->down.find(v);
        if (it == node_->down.end()) return std::nullopt;
        return SimplexHandle<Traits, L - 1>(it->second.node);
    }

    /// Payload of this simplex. Ill-formed when the schema stores no
    /// payload at this level.
    auto& data() const
        requires(!std::is_void_v<NodeDataOf<Traits, L>>)
    {
        return node_->data;
    }

    /// Payload of the boundary relation name-{v} -> name.
    auto& relation_down(VertexKey v) const
        requires(L >= 0 && !std::is_void_v<RelationDataOf<Traits, L < 0 ? 0 : L>>)
    {
        auto it = node_->down.find(v);
        if (it == node_->down.end())
            throw NotFoundError("no boundary relation for key " + std::to_string(v));
        return it->second.rel.data;
    }

    /// Payload of the coboundary relation name -> name+{v}. Both
    /// directions view the same record.
    auto& relation_up(VertexKey v) const
        requires(L < int(Traits::dimension) &&
                 !std::is_void_v<RelationDataOf<Traits, (L < int(Traits::dimension) ? L + 1 : 0)>>)
    {
        auto it = node_->up.find(v);
        if (it == node_->up.end())
            throw NotFoundError("no coboundary relation for key " + std::to_string(v));
        return it->second->down.at(v).rel.data;
    }

    friend bool operator==(SimplexHandle a, SimplexHandle b) { return a.node_ == b.node_; }

    /// Orders valid handles by internal id (deterministic across runs
    /// given the same insertion sequence).
    friend bool operator<(SimplexHandle a, SimplexHandle b) { return a.iid_ < b.iid_; }

private:
    friend class Complex<Traits>;
    template <class T2, int K> friend class SimplexHandle;

    explicit SimplexHandle(NodeT* node) : node_(node), iid_(node ? node->iid : 0) {}

    NodeT* node_ = nullptr;
    std::uint64_t iid_ = 0;
};

struct ComplexCounts {
    std::vector<std::size_t> levels; // index k = number of live k-simplices
    std::size_t relations = 0;
};

/// An abstract simplicial complex stored as a Hasse diagram, with payload
/// types fixed per level by the Traits schema.
///
/// Thread model: any number of concurrent readers between mutations; all
/// mutating operations require exclusive access for their full duration.
template <ComplexTraits Traits>
class Complex {
    template <int L> using NodeT = detail::Node<Traits, L>;

public:
    using TraitsType = Traits;
    static constexpr int dimension = Traits::dimension;

    template <int L> using Handle = SimplexHandle<Traits, L>;
    using RootHandle = Handle<-1>;

    template <int L> using NodeData = NodeDataOf<Traits, L>;
    template <int L> using RelationData = RelationDataOf<Traits, L>;

    static_assert(dimension >= 0, "complex dimension must be non-negative");
    static_assert(Traits::NodeTypes::size == std::size_t(dimension) + 2,
                  "need one node payload type per level -1..N");
    static_assert(Traits::RelationTypes::size == std::size_t(dimension) + 1,
                  "need one relation payload type per relation level 0..N");
    static_assert(detail::payloads_default_constructible(typename Traits::NodeTypes{}),
                  "auto-created simplices take default payloads");
    static_assert(detail::payloads_default_constructible(typename Traits::RelationTypes{}),
                  "auto-created relations take default payloads");

    Complex() : root_(std::make_unique<NodeT<-1>>()) { root_->iid = next_iid_++; }

    Complex(const Complex&) = delete;
    Complex& operator=(const Complex&) = delete;
    Complex(Complex&&) = default;
    Complex& operator=(Complex&&) = default;

    RootHandle root() const { return RootHandle(root_.get()); }

    /// Inserts the named simplex together with every missing face and
    /// boundary/coboundary relation. Existing simplices and their payloads
    /// are untouched; inserting twice returns the same handle.
    template <int L>
    Handle<L> insert(const SimplexName& name) {
        static_assert(0 <= L && L <= dimension, "level outside schema");
        check_name_level(name, L);
        insert_subtree<-1>(root_.get(), std::span<const VertexKey>(name.keys()));
        return *get_simplex<L>(name);
    }

    /// As insert(name), then assigns the payload of the named simplex.
    /// Auto-created faces keep default payloads.
    template <int L>
    Handle<L> insert(const SimplexName& name, NodeData<L> value)
        requires(!std::is_void_v<NodeData<L>>)
    {
        auto h = insert<L>(name);
        h.data() = std::move(value);
        return h;
    }

    /// Runtime-dimension insertion. Rejects names beyond the schema
    /// dimension; the empty name (root) is a no-op.
    void insert_any(const SimplexName& name) {
        if (name.dimension() > dimension)
            throw DimensionError("simplex " + name.to_string() + " exceeds schema dimension " +
                                 std::to_string(dimension));
        if (name.empty()) return;
        meta::dispatch_level<0, dimension>(name.dimension(),
                                           [&](auto lc) { insert<lc()>(name); });
    }

    /// Removes the simplex and its entire star (every coface), top level
    /// down. Returns the number of simplices deleted.
    template <int L>
    std::size_t remove(Handle<L> s)
        requires(L >= 0)
    {
        if (!is_live(s)) throw NotFoundError("simplex is not live");
        return remove_star<L>(s.node_);
    }

    std::size_t remove(const SimplexName& name) {
        if (name.empty())
            throw std::invalid_argument("cannot remove the root simplex; use clear()");
        std::size_t count = 0;
        bool found = false;
        if (name.dimension() <= dimension) {
            meta::dispatch_level<0, dimension>(name.dimension(), [&](auto lc) {
                if (auto h = get_simplex<lc()>(name)) {
                    count = remove<lc()>(*h);
                    found = true;
                }
            });
        }
        if (!found) throw NotFoundError("no simplex named " + name.to_string());
        return count;
    }

    /// Removes every simplex, leaving only the root. Internal id and
    /// fresh-key counters keep running (ids are never reused).
    void clear() {
        meta::static_for<0, dimension>([&](auto lc) { registry<lc()>().clear(); });
        root_->up.clear();
        relation_count_ = 0;
    }

    template <int L>
    std::optional<Handle<L>> get_simplex(const SimplexName& name) const {
        static_assert(-1 <= L && L <= dimension, "level outside schema");
        check_name_level(name, L);
        return walk_up<-1, L>(root_.get(), std::span<const VertexKey>(name.keys()));
    }

    bool contains(const SimplexName& name) const {
        if (name.empty()) return true;
        if (name.dimension() > dimension) return false;
        bool present = false;
        meta::dispatch_level<0, dimension>(name.dimension(), [&](auto lc) {
            present = get_simplex<lc()>(name).has_value();
        });
        return present;
    }

    /// Calls f on the typed handle of the named simplex (levels 0..N);
    /// returns false when absent.
    template <class F>
    bool visit_simplex(const SimplexName& name, F&& f) const {
        if (name.empty() || name.dimension() > dimension) return false;
        bool found = false;
        meta::dispatch_level<0, dimension>(name.dimension(), [&](auto lc) {
            if (auto h = get_simplex<lc()>(name)) {
                f(*h);
                found = true;
            }
        });
        return found;
    }

    /// Live simplices of one level as a range of handles, ascending
    /// internal id. Do not mutate the complex while iterating.
    template <int L>
    auto level() const {
        static_assert(0 <= L && L <= dimension, "level outside schema");
        const auto& reg = registry<L>();
        return reg | std::views::transform(
                         [](const auto& kv) { return Handle<L>(kv.second.get()); });
    }

    std::size_t level_count(int level) const {
        std::size_t n = 0;
        meta::dispatch_level<0, dimension>(level, [&](auto lc) { n = registry<lc()>().size(); });
        return n;
    }

    /// Number of live simplices, root excluded.
    std::size_t simplex_count() const {
        std::size_t n = 0;
        meta::static_for<0, dimension>([&](auto lc) { n += registry<lc()>().size(); });
        return n;
    }

    std::size_t relation_count() const { return relation_count_; }

    ComplexCounts counts() const {
        ComplexCounts c;
        c.levels.resize(dimension + 1);
        meta::static_for<0, dimension>(
            [&](auto lc) { c.levels[std::size_t(lc())] = registry<lc()>().size(); });
        c.relations = relation_count_;
        return c;
    }

    /// A key strictly greater than every key ever used in this complex.
    VertexKey fresh_vertex_key() const { return next_fresh_key_; }

    template <int L>
    bool is_live(Handle<L> h) const {
        if (!h) return false;
        if constexpr (L == -1) {
            return h.node_ == root_.get();
        } else if constexpr (L < -1 || L > dimension) {
            return false;
        } else {
            // Internal ids are never reused, so a stale handle's id either
            // misses the registry or maps to a different node.
            const auto& reg = registry<L>();
            auto it = reg.find(h.iid_);
            return it != reg.end() && it->second.get() == h.node_;
        }
    }

private:
    template <int L>
    using Registry = std::map<std::uint64_t, std::unique_ptr<NodeT<L>>>;
    using Registries = meta::LevelTuple<Registry, dimension + 1>;

    template <int L>
    Registry<L>& registry() {
        return std::get<std::size_t(L)>(registries_);
    }
    template <int L>
    const Registry<L>& registry() const {
        return std::get<std::size_t(L)>(registries_);
    }

    static void check_name_level(const SimplexName& name, int level) {
        if (name.dimension() != level)
            throw std::invalid_argument("name " + name.to_string() + " is not a " +
                                        std::to_string(level) + "-simplex");
    }

    template <int L>
    void link(NodeT<L>* lower, NodeT<L + 1>* upper, VertexKey v) {
        upper->down.emplace(v, typename detail::DownPart<Traits, L + 1>::Entry{lower, {}});
        lower->up.emplace(v, upper);
        ++relation_count_;
    }

    /// Returns base+{v}, creating and wiring the node if missing. New nodes
    /// are connected to every face of base that already carries v
    /// (backfilling); those cofaces exist by the insertion order.
    template <int L>
    NodeT<L + 1>* ensure_child(NodeT<L>* base, VertexKey v) {
        if (auto it = base->up.find(v); it != base->up.end()) return it->second;
        auto owned = std::make_unique<NodeT<L + 1>>();
        NodeT<L + 1>* node = owned.get();
        node->iid = next_iid_++;
        registry<L + 1>().emplace(node->iid, std::move(owned));
        if constexpr (L + 1 == 0) next_fresh_key_ = std::max(next_fresh_key_, v + 1);
        link(base, node, v);
        if constexpr (L >= 0) {
            for (auto& [u, entry] : base->down) {
                NodeT<L>* coface = entry.node->up.at(v);
                link(coface, node, u);
            }
        }
        return node;
    }

    /// Ensures base+S exists for every nonempty subset S of keys,
    /// creating nodes in an order that keeps backfilling valid.
    template <int L>
    void insert_subtree(NodeT<L>* base, std::span<const VertexKey> keys) {
        if constexpr (L < dimension) {
            for (std::size_t i = 0; i < keys.size(); ++i) {
                NodeT<L + 1>* child = ensure_child(base, keys[i]);
                insert_subtree<L + 1>(child, keys.first(i));
            }
        } else {
            assert(keys.empty() && "insertion beyond schema dimension");
            (void)base;
            (void)keys;
        }
    }

    template <int From, int To>
    std::optional<Handle<To>> walk_up(NodeT<From>* node,
                                      std::span<const VertexKey> keys) const {
        if constexpr (From == To) {
            (void)keys;
            return Handle<To>(node);
        } else {
            auto it = node->up.find(keys.front());
            if (it == node->up.end()) return std::nullopt;
            return walk_up<From + 1, To>(it->second, keys.subspan(1));
        }
    }

    template <int L>
    using StarLevel = std::map<std::uint64_t, NodeT<L>*>;

    template <int L>
    std::size_t remove_star(NodeT<L>* seed) {
        // Collect the star of seed, per level keyed by iid.
        meta::LevelTuple<StarLevel, dimension + 1> star;
        std::get<std::size_t(L)>(star).emplace(seed->iid, seed);
        meta::static_for<L, dimension - 1>([&](auto lc) {
            constexpr int K = lc();
            for (auto& [iid, node] : std::get<std::size_t(K)>(star))
                for (auto& [v, upper] : node->up)
                    std::get<std::size_t(K + 1)>(star).emplace(upper->iid, upper);
        });
        // Delete top level down so that coboundary maps of survivors are
        // detached exactly once.
        std::size_t removed = 0;
        meta::static_for_reverse<L, dimension>([&](auto lc) {
            constexpr int K = lc();
            for (auto& [iid, node] : std::get<std::size_t(K)>(star)) {
                for (auto& [u, entry] : node->down) {
                    entry.node->up.erase(u);
                    --relation_count_;
                }
                if constexpr (K < dimension)
                    assert(node->up.empty() && "cofaces must be deleted first");
                registry<K>().erase(iid);
                ++removed;
            }
        });
        return removed;
    }

    std::unique_ptr<NodeT<-1>> root_;
    Registries registries_;
    std::uint64_t next_iid_ = 0;
    std::size_t relation_count_ = 0;
    VertexKey next_fresh_key_ = 0;
};

/// Follows coboundary relations from h through the given keys, one map
/// lookup and one hop per key. Key order does not affect the result.
template <class H>
std::optional<H> get_simplex_up(H h) {
    if (!h) return std::nullopt;
    return h;
}

template <class H, class... Rest>
auto get_simplex_up(H h, VertexKey v, Rest... rest)
    -> decltype(get_simplex_up(*h.up(v), rest...)) {
    if (h) {
        if (auto next = h.up(v)) return get_simplex_up(*next, rest...);
    }
    return std::nullopt;
}

/// Mirror of get_simplex_up through boundary relations (name minus keys).
template <class H>
std::optional<H> get_simplex_down(H h) {
    if (!h) return std::nullopt;
    return h;
}

template <class H, class... Rest>
auto get_simplex_down(H h, VertexKey v, Rest... rest)
    -> decltype(get_simplex_down(*h.down(v), rest...)) {
    if (h) {
        if (auto next = h.down(v)) return get_simplex_down(*next, rest...);
    }
    return std::nullopt;
}

} // namespace hasse
