#pragma once

// Independent brute-force oracles. Everything here takes a different route
// than the implementation it cross-checks: hull membership goes through
// barycentric coordinates on affinely independent subsets instead of the LP,
// planar intersection goes through the candidate-point lattice, matroid
// checks enumerate subsets directly. Used by the test suites and by the
// run-suite command; never by the implementations themselves.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "helly/complex.hpp"
#include "helly/error.hpp"
#include "helly/geometry.hpp"
#include "helly/matroid.hpp"
#include "helly/rational.hpp"
#include "helly/simplex.hpp"
#include "helly/tverberg.hpp"

namespace helly::oracle {

/// q ∈ conv(P) tested via Caratheodory: some affinely independent subset of
/// at most d+1 points contains q with nonnegative barycentric coordinates.
inline bool in_hull(const Point& q, const std::vector<Point>& P) {
    if (P.empty()) return false;
    const int d = q.dim();
    std::vector<int> ids(P.size());
    std::iota(ids.begin(), ids.end(), 0);
    for (int s = 1; s <= d + 1; ++s) {
        bool hit = for_each_subset_of_size(ids, s, [&](Simplex S) {
            // Barycentric system [points; ones] λ = [q; 1], solved by full
            // elimination on the (d+1) x s matrix: s pivot columns means the
            // subset is affinely independent and λ is unique.
            std::vector<std::vector<Rational>> M(static_cast<size_t>(d) + 1,
                                                 std::vector<Rational>(static_cast<size_t>(s)));
            for (int c = 0; c < d; ++c)
                for (int j = 0; j < s; ++j)
                    M[static_cast<size_t>(c)][static_cast<size_t>(j)] = P[static_cast<size_t>(S[j])][static_cast<size_t>(c)];
            for (int j = 0; j < s; ++j) M[static_cast<size_t>(d)][static_cast<size_t>(j)] = 1;

            // Reduce the overdetermined system [M | rhs] and read a unique λ.
            std::vector<Rational> rhs(static_cast<size_t>(d) + 1, Rational(0));
            for (int c = 0; c < d; ++c) rhs[static_cast<size_t>(c)] = q[static_cast<size_t>(c)];
            rhs[static_cast<size_t>(d)] = 1;

            // Gaussian elimination on (d+1) x s, tracking pivot columns.
            size_t row = 0;
            std::vector<int> pivot_col;
            for (int col = 0; col < s && row <= static_cast<size_t>(d); ++col) {
                size_t pr = row;
                while (pr <= static_cast<size_t>(d) && M[pr][static_cast<size_t>(col)] == 0) ++pr;
                if (pr > static_cast<size_t>(d)) continue;
                std::swap(M[pr], M[row]);
                std::swap(rhs[pr], rhs[row]);
                for (size_t r = 0; r <= static_cast<size_t>(d); ++r) {
                    if (r == row || M[r][static_cast<size_t>(col)] == 0) continue;
                    const Rational f = M[r][static_cast<size_t>(col)] / M[row][static_cast<size_t>(col)];
                    for (int c = col; c < s; ++c) M[r][static_cast<size_t>(c)] -= f * M[row][static_cast<size_t>(c)];
                    rhs[r] -= f * rhs[row];
                }
                pivot_col.push_back(col);
                ++row;
            }
            if (static_cast<int>(pivot_col.size()) < s) return false; // affinely dependent
            for (size_t r = row; r <= static_cast<size_t>(d); ++r)
                if (rhs[r] != 0) return false; // inconsistent: q outside affine hull
            std::vector<Rational> lambda(static_cast<size_t>(s));
            for (size_t i = 0; i < pivot_col.size(); ++i)
                lambda[static_cast<size_t>(pivot_col[i])] = rhs[i] / M[i][static_cast<size_t>(pivot_col[i])];
            for (const Rational& l : lambda)
                if (l < 0) return false;
            return true;
        });
        if (hit) return true;
    }
    return false;
}

/// Intersection point of segments ab and cd if it exists in both (proper or
/// endpoint); collinear overlaps are covered by endpoint candidates elsewhere.
inline std::optional<Point> segment_intersection_2d(const Point& a, const Point& b,
                                                    const Point& c, const Point& d) {
    const Rational rx = b[0] - a[0], ry = b[1] - a[1];
    const Rational sx = d[0] - c[0], sy = d[1] - c[1];
    const Rational den = rx * sy - ry * sx;
    if (den == 0) return std::nullopt;
    const Rational qpx = c[0] - a[0], qpy = c[1] - a[1];
    const Rational t = (qpx * sy - qpy * sx) / den;
    const Rational u = (qpx * ry - qpy * rx) / den;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    return Point({a[0] + t * rx, a[1] + t * ry});
}

/// Intersection emptiness for families of hulls (and boxes, passed as their
/// corner hulls) in dimension ≤ 2 via the candidate-point lattice: every
/// nonempty intersection of convex polygons contains a point that is either a
/// vertex of one polygon or the crossing of two edges of different polygons.
inline bool hulls_intersect(const std::vector<std::vector<Point>>& hulls, int dim) {
    require(dim == 1 || dim == 2, Errc::BadParams, "candidate oracle handles d <= 2");
    require(!hulls.empty(), Errc::BadParams, "no hulls");
    if (dim == 1) {
        Rational lo = hulls[0][0][0], hi = lo;
        bool first = true;
        for (const auto& h : hulls) {
            Rational mn = h[0][0], mx = h[0][0];
            for (const Point& p : h) {
                mn = std::min(mn, p[0]);
                mx = std::max(mx, p[0]);
            }
            if (first) {
                lo = mn;
                hi = mx;
                first = false;
            } else {
                lo = std::max(lo, mn);
                hi = std::min(hi, mx);
            }
        }
        return lo <= hi;
    }

    std::vector<Point> candidates;
    for (const auto& h : hulls)
        for (const Point& p : h) candidates.push_back(p);
    for (size_t i = 0; i < hulls.size(); ++i)
        for (size_t j = i + 1; j < hulls.size(); ++j)
            for (size_t a = 0; a < hulls[i].size(); ++a)
                for (size_t b = a + 1; b < hulls[i].size(); ++b)
                    for (size_t c = 0; c < hulls[j].size(); ++c)
                        for (size_t e = c + 1; e < hulls[j].size(); ++e)
                            if (auto pt = segment_intersection_2d(hulls[i][a], hulls[i][b],
                                                                  hulls[j][c], hulls[j][e]))
                                candidates.push_back(*pt);

    for (const Point& cand : candidates) {
        bool in_all = true;
        for (const auto& h : hulls)
            if (!oracle::in_hull(cand, h)) { in_all = false; break; }
        if (in_all) return true;
    }
    return false;
}

/// Rank of every subset (bitmask-indexed) — the brute-force view the suites
/// compare closed forms against.
inline std::vector<int> rank_table(const Matroid& m) {
    const int n = m.num_elements();
    require(n <= 16, Errc::BudgetExceeded, "rank table over more than 16 elements");
    std::vector<int> table(static_cast<size_t>(1) << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(i);
        table[mask] = m.rank(VertexSet(std::move(v)));
    }
    return table;
}

/// Max size of a subset S ⊆ A with base_rank(S) ≥ |S| - t, computed directly
/// from a base rank table. This is the tolerance rank without the closed form.
inline int tolerance_rank_brute(const std::vector<int>& base_table, unsigned A_mask, int t) {
    int best = 0;
    for (unsigned s = A_mask;; s = (s - 1) & A_mask) {
        const int size = __builtin_popcount(s);
        if (base_table[s] >= size - t) best = std::max(best, size);
        if (s == 0) break;
    }
    return best;
}

/// Existence of a partition with a Tverberg center of the stated size, by
/// enumerating full labelings × centers and running verify_center on each.
inline bool center_exists(const PointConfig& A, int r) {
    const int n = (r - 1) * (A.dim + 1);
    const int total = A.size();
    std::vector<int> ids(static_cast<size_t>(total));
    std::iota(ids.begin(), ids.end(), 0);
    std::vector<int> labels(static_cast<size_t>(total), 0);
    while (true) {
        bool found = for_each_subset_of_size(ids, n, [&](Simplex B) {
            return verify_center(A, labels, B.vertices()).ok;
        });
        if (found) return true;
        if (!next_tuple(labels, r)) break;
    }
    return false;
}

/// Greedy construction for the small-rank lemma: a t-subset U of the ground
/// set with rank(U) ≥ min(t, r). Extends an independent set first, then pads.
inline VertexSet lemma_small_rank_set(const Matroid& m, int t) {
    Simplex U;
    for (int v = 0; v < m.num_elements() && U.size() < t; ++v)
        if (m.is_independent(U.with(v))) U = U.with(v);
    for (int v = 0; v < m.num_elements() && U.size() < t; ++v)
        if (!U.contains(v)) U = U.with(v);
    return U;
}

} // namespace helly::oracle
