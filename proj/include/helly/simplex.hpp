#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "helly/error.hpp"

namespace helly {

/// A simplex: a strictly increasing list of vertex ids. The empty simplex is
/// a valid value. Also used as a plain vertex set (matroid ground subsets,
/// induced-subcomplex arguments) since both are sorted id sets.
class Simplex {
public:
    Simplex() = default;

    Simplex(std::initializer_list<int> vs) : Simplex(std::vector<int>(vs)) {}

    explicit Simplex(std::vector<int> vs) : v_(std::move(vs)) {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
        for (int x : v_)
            require(x >= 0, Errc::InvalidVertex, "negative vertex id " + std::to_string(x));
    }

    int size() const { return static_cast<int>(v_.size()); }
    int dim() const { return size() - 1; }
    bool is_empty() const { return v_.empty(); }

    bool contains(int v) const { return std::binary_search(v_.begin(), v_.end(), v); }

    bool subset_of(const Simplex& o) const {
        return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
    }

    bool disjoint_from(const Simplex& o) const {
        auto a = v_.begin();
        auto b = o.v_.begin();
        while (a != v_.end() && b != o.v_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return false;
        }
        return true;
    }

    Simplex unite(const Simplex& o) const {
        std::vector<int> out;
        out.reserve(v_.size() + o.v_.size());
        std::set_union(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(), std::back_inserter(out));
        return Simplex(raw_tag{}, std::move(out));
    }

    Simplex with(int v) const { return unite(Simplex{v}); }

    Simplex intersect(const Simplex& o) const {
        std::vector<int> out;
        std::set_intersection(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                              std::back_inserter(out));
        return Simplex(raw_tag{}, std::move(out));
    }

    Simplex minus(const Simplex& o) const {
        std::vector<int> out;
        std::set_difference(v_.begin(), v_.end(), o.v_.begin(), o.v_.end(),
                            std::back_inserter(out));
        return Simplex(raw_tag{}, std::move(out));
    }

    Simplex minus(int v) const { return minus(Simplex{v}); }

    const std::vector<int>& vertices() const { return v_; }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    int operator[](int i) const { return v_[static_cast<size_t>(i)]; }

    // Lexicographic on vertex sequences; a proper prefix sorts first, so
    // {} < {0} < {0,1} < {1}. This is the enumeration order used throughout.
    auto operator<=>(const Simplex&) const = default;

    std::string str() const {
        std::ostringstream os;
        os << '{';
        for (size_t i = 0; i < v_.size(); ++i) os << (i ? "," : "") << v_[i];
        os << '}';
        return os.str();
    }

private:
    struct raw_tag {};
    Simplex(raw_tag, std::vector<int> sorted) : v_(std::move(sorted)) {}

    std::vector<int> v_;
};

/// Alias for readability where a Simplex is used as a set of vertices rather
/// than as a face.
using VertexSet = Simplex;

/// Visit every k-subset of `pool` (sorted ids) in lexicographic order.
/// The callback receives the subset as a Simplex; returning true stops early.
template <typename F>
bool for_each_subset_of_size(const std::vector<int>& pool, int k, F&& visit) {
    const int n = static_cast<int>(pool.size());
    if (k < 0 || k > n) return false;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        std::vector<int> cur(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = pool[static_cast<size_t>(idx[static_cast<size_t>(i)])];
        if (visit(Simplex(std::move(cur)))) return true;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

/// Visit every subset of `pool`, sizes ascending and lexicographic within a
/// size. Returning true from the callback stops early.
template <typename F>
bool for_each_subset_by_size(const std::vector<int>& pool, F&& visit) {
    for (int k = 0; k <= static_cast<int>(pool.size()); ++k)
        if (for_each_subset_of_size(pool, k, visit)) return true;
    return false;
}

struct SimplexHash {
    size_t operator()(const Simplex& s) const {
        uint64_t h = 1469598103934665603ull;
        for (int v : s) {
            h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

} // namespace helly
