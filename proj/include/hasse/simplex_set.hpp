#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "hasse/complex.hpp"
#include "hasse/meta.hpp"
#include "hasse/types.hpp"

namespace hasse {

/// A set of simplex handles spanning multiple levels: one ordered set per
/// dimension 0..N, keyed by internal id. The root simplex is never a
/// member. All handles must reference the same complex.
template <class Traits>
class SimplexSet {
public:
    static constexpr int dimension = Traits::dimension;
    template <int L>
    using Handle = SimplexHandle<Traits, L>;
    template <int L>
    using LevelSet = std::set<Handle<L>>; // Handle operator< orders by iid

    SimplexSet() = default;

    template <int L>
    bool insert(SimplexHandle<Traits, L> h) {
        static_assert(0 <= L && L <= dimension, "root and out-of-range levels not storable");
        return std::get<std::size_t(L)>(sets_).insert(h).second;
    }

    template <int L>
    bool erase(SimplexHandle<Traits, L> h) {
        return std::get<std::size_t(L)>(sets_).erase(h) > 0;
    }

    template <int L>
    bool contains(SimplexHandle<Traits, L> h) const {
        const auto& s = std::get<std::size_t(L)>(sets_);
        return s.find(h) != s.end();
    }

    template <int L>
    const LevelSet<L>& level() const {
        return std::get<std::size_t(L)>(sets_);
    }

    std::size_t size() const {
        std::size_t n = 0;
        meta::static_for<0, dimension>([&](auto lc) { n += level<lc()>().size(); });
        return n;
    }

    bool empty() const { return size() == 0; }

    void clear() {
        meta::static_for<0, dimension>(
            [&](auto lc) { std::get<std::size_t(lc())>(sets_).clear(); });
    }

    /// Visits every member, levels ascending, internal id ascending within
    /// a level.
    template <class F>
    void for_each(F&& f) const {
        meta::static_for<0, dimension>([&](auto lc) {
            for (auto h : level<lc()>()) f(h);
        });
    }

    /// Sorted names of all members.
    std::vector<SimplexName> names() const {
        std::vector<SimplexName> out;
        out.reserve(size());
        for_each([&](auto h) { out.push_back(h.name()); });
        std::sort(out.begin(), out.end());
        return out;
    }

    friend bool operator==(const SimplexSet& a, const SimplexSet& b) {
        bool eq = true;
        meta::static_for<0, dimension>([&](auto lc) {
            if (a.level<lc()>() != b.level<lc()>()) eq = false;
        });
        return eq;
    }

private:
    meta::LevelTuple<LevelSet, dimension + 1> sets_;
};

template <class Traits>
SimplexSet<Traits> set_union(const SimplexSet<Traits>& a, const SimplexSet<Traits>& b) {
    SimplexSet<Traits> out = a;
    b.for_each([&](auto h) { out.insert(h); });
    return out;
}

template <class Traits>
SimplexSet<Traits> set_intersection(const SimplexSet<Traits>& a, const SimplexSet<Traits>& b) {
    SimplexSet<Traits> out;
    a.for_each([&](auto h) {
        if (b.contains(h)) out.insert(h);
    });
    return out;
}

template <class Traits>
SimplexSet<Traits> set_difference(const SimplexSet<Traits>& a, const SimplexSet<Traits>& b) {
    SimplexSet<Traits> out;
    a.for_each([&](auto h) {
        if (!b.contains(h)) out.insert(h);
    });
    return out;
}

template <class Traits>
bool set_equals(const SimplexSet<Traits>& a, const SimplexSet<Traits>& b) {
    return a == b;
}

/// Single-handle set.
template <class Traits, int L>
SimplexSet<Traits> make_set(SimplexHandle<Traits, L> h) {
    SimplexSet<Traits> s;
    s.insert(h);
    return s;
}

/// Map from a post-decimation simplex name to the set of pre-decimation
/// simplices that collapse onto it.
template <class Traits>
using SimplexMap = std::map<SimplexName, SimplexSet<Traits>>;

} // namespace hasse
