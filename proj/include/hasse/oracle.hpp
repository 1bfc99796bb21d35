#pragma once

#include <cassert>
#include <cstddef>
#include <set>
#include <vector>

#include "hasse/types.hpp"

namespace hasse {

/// Ground-truth oracle: a simplicial complex held as a plain set of names,
/// closed under subsets, with every query answered by a direct scan of the
/// defining formula. Quadratic or worse on purpose; never used for
/// performance work. Stores no payloads.
class NaiveComplex {
public:
    NaiveComplex() = default;

    explicit NaiveComplex(const std::vector<SimplexName>& facets) {
        for (const auto& f : facets) insert(f);
    }

    void insert(const SimplexName& name) {
        for (const auto& sub : subsets_of(name)) names_.insert(sub);
        check_closed();
    }

    /// Removes the name and everything containing it.
    std::size_t remove(const SimplexName& name) {
        std::size_t count = 0;
        for (auto it = names_.begin(); it != names_.end();) {
            if (name.subset_of(*it)) {
                it = names_.erase(it);
                ++count;
            } else {
                ++it;
            }
        }
        check_closed();
        return count;
    }

    bool contains(const SimplexName& name) const {
        return names_.find(name) != names_.end();
    }

    const std::set<SimplexName>& names() const { return names_; }

    std::size_t level_count(int k) const {
        std::size_t n = 0;
        for (const auto& s : names_)
            if (s.dimension() == k) ++n;
        return n;
    }

    std::set<SimplexName> star(const SimplexName& f) const {
        std::set<SimplexName> out;
        for (const auto& s : names_)
            if (f.subset_of(s)) out.insert(s);
        return out;
    }

    std::set<SimplexName> star(const std::set<SimplexName>& input) const {
        std::set<SimplexName> out;
        for (const auto& f : input)
            for (const auto& s : star(f)) out.insert(s);
        return out;
    }

    std::set<SimplexName> closure(const SimplexName& f) const {
        std::set<SimplexName> out;
        for (const auto& s : names_)
            if (s.subset_of(f)) out.insert(s);
        return out;
    }

    std::set<SimplexName> closure(const std::set<SimplexName>& input) const {
        std::set<SimplexName> out;
        for (const auto& f : input)
            for (const auto& s : closure(f)) out.insert(s);
        return out;
    }

    /// Faces of the closed star of f that do not intersect f.
    std::set<SimplexName> link(const SimplexName& f) const {
        std::set<SimplexName> out;
        for (const auto& s : closure(star(f)))
            if (!s.intersects(f)) out.insert(s);
        return out;
    }

    std::set<SimplexName> link(const std::set<SimplexName>& input) const {
        std::set<SimplexName> closed_star = closure(star(input));
        std::set<SimplexName> out;
        for (const auto& s : closed_star) {
            bool meets_input = false;
            for (const auto& f : input)
                if (s.intersects(f)) meets_input = true;
            // Matches closure(star(X)) - star(closure(X)): s is dropped
            // exactly when it contains a face of some member of X, i.e.
            // shares a vertex with the closure of X.
            if (!meets_input) out.insert(s);
        }
        return out;
    }

    /// Same-level simplices sharing a coboundary coface with s.
    std::set<SimplexName> neighbors_up(const SimplexName& s) const {
        std::set<SimplexName> out;
        for (const auto& c : names_) {
            if (c.dimension() != s.dimension() + 1 || !s.subset_of(c)) continue;
            for (const auto& t : names_)
                if (t != s && t.dimension() == s.dimension() && t.subset_of(c)) out.insert(t);
        }
        return out;
    }

    /// Same-level simplices sharing a boundary face with s. Vertices get
    /// none (the shared face would be the root, which is excluded).
    std::set<SimplexName> neighbors_down(const SimplexName& s) const {
        std::set<SimplexName> out;
        for (const auto& b : names_) {
            if (b.dimension() != s.dimension() - 1 || !b.subset_of(s)) continue;
            for (const auto& t : names_)
                if (t != s && t.dimension() == s.dimension() && b.subset_of(t)) out.insert(t);
        }
        return out;
    }

    std::set<SimplexName> k_skeleton(int k) const {
        std::set<SimplexName> out;
        for (const auto& s : names_)
            if (s.dimension() <= k) out.insert(s);
        return out;
    }

    /// The image of the whole complex under the collapse of s onto p,
    /// straight from the definition.
    std::set<SimplexName> phi_image(const SimplexName& s, VertexKey p) const {
        std::set<SimplexName> out;
        for (const auto& f : names_) {
            if (!f.intersects(s)) out.insert(f);
            else out.insert(f.minus(s).with(p));
        }
        return out;
    }

    static std::vector<SimplexName> subsets_of(const SimplexName& name) {
        std::vector<SimplexName> out;
        const std::size_t n = name.size();
        assert(n < 20 && "oracle names are meant to be small");
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            std::vector<VertexKey> keys;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) keys.push_back(name[i]);
            out.push_back(SimplexName::sorted_unchecked(std::move(keys)));
        }
        return out;
    }

private:
    // Checking the drop-one-key faces of every member implies the full
    // closure property by induction on dimension.
    void check_closed() const {
        for (const auto& s : names_) {
            if (s.size() < 2) continue;
            for (VertexKey v : s)
                assert(contains(s.without(v)) && "oracle lost the closure property");
        }
    }

    std::set<SimplexName> names_;
};

} // namespace hasse
