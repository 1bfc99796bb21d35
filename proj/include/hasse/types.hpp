#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace hasse {

/// Opaque vertex label. Only the numeric total order matters; keys are
/// wide so that fresh-key allocation during repeated decimation never
/// runs out.
using VertexKey = std::uint64_t;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotFoundError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// The name of a simplex: a strictly increasing, duplicate-free sequence
/// of vertex keys. The empty name refers to the root simplex (dimension -1).
/// Arbitrary input sequences are canonicalized (sorted, deduplicated).
class SimplexName {
public:
    SimplexName() = default;

    SimplexName(std::initializer_list<VertexKey> keys)
        : keys_(keys) { canonicalize(); }

    explicit SimplexName(std::vector<VertexKey> keys)
        : keys_(std::move(keys)) { canonicalize(); }

    /// Wraps a sequence already known to be sorted and duplicate-free.
    static SimplexName sorted_unchecked(std::vector<VertexKey> keys) {
        SimplexName n;
        n.keys_ = std::move(keys);
        return n;
    }

    int dimension() const { return static_cast<int>(keys_.size()) - 1; }
    std::size_t size() const { return keys_.size(); }
    bool empty() const { return keys_.empty(); }

    VertexKey operator[](std::size_t i) const { return keys_[i]; }
    auto begin() const { return keys_.begin(); }
    auto end() const { return keys_.end(); }
    const std::vector<VertexKey>& keys() const { return keys_; }

    bool contains(VertexKey v) const {
        return std::binary_search(keys_.begin(), keys_.end(), v);
    }

    bool subset_of(const SimplexName& other) const {
        return std::includes(other.keys_.begin(), other.keys_.end(),
                             keys_.begin(), keys_.end());
    }

    bool intersects(const SimplexName& other) const {
        auto a = keys_.begin();
        auto b = other.keys_.begin();
        while (a != keys_.end() && b != other.keys_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    SimplexName union_with(const SimplexName& other) const {
        std::vector<VertexKey> out;
        out.reserve(keys_.size() + other.keys_.size());
        std::set_union(keys_.begin(), keys_.end(),
                       other.keys_.begin(), other.keys_.end(),
                       std::back_inserter(out));
        return sorted_unchecked(std::move(out));
    }

    SimplexName minus(const SimplexName& other) const {
        std::vector<VertexKey> out;
        out.reserve(keys_.size());
        std::set_difference(keys_.begin(), keys_.end(),
                            other.keys_.begin(), other.keys_.end(),
                            std::back_inserter(out));
        return sorted_unchecked(std::move(out));
    }

    SimplexName intersection_with(const SimplexName& other) const {
        std::vector<VertexKey> out;
        std::set_intersection(keys_.begin(), keys_.end(),
                              other.keys_.begin(), other.keys_.end(),
                              std::back_inserter(out));
        return sorted_unchecked(std::move(out));
    }

    /// Name with v added (no-op if already present).
    SimplexName with(VertexKey v) const {
        auto out = keys_;
        auto it = std::lower_bound(out.begin(), out.end(), v);
        if (it == out.end() || *it != v) out.insert(it, v);
        return sorted_unchecked(std::move(out));
    }

    /// Name with v removed (no-op if absent).
    SimplexName without(VertexKey v) const {
        auto out = keys_;
        auto it = std::lower_bound(out.begin(), out.end(), v);
        if (it != out.end() && *it == v) out.erase(it);
        return sorted_unchecked(std::move(out));
    }

    friend bool operator==(const SimplexName&, const SimplexName&) = default;
    friend auto operator<=>(const SimplexName&, const SimplexName&) = default;

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < keys_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(keys_[i]);
        }
        s += '}';
        return s;
    }

    friend std::ostream& operator<<(std::ostream& os, const SimplexName& n) {
        return os << n.to_string();
    }

private:
    void canonicalize() {
        std::sort(keys_.begin(), keys_.end());
        keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
    }

    std::vector<VertexKey> keys_;
};

} // namespace hasse
