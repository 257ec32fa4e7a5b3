#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helly/error.hpp"
#include "helly/geometry.hpp"
#include "helly/rational.hpp"
#include "helly/rng.hpp"
#include "helly/simplex.hpp"

namespace helly {

struct PointConfig {
    int dim = 0;
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }

    void validate() const {
        require(!points.empty(), Errc::BadParams, "empty point configuration");
        for (const Point& p : points)
            require(p.dim() == dim, Errc::DimensionMismatch, "point dimension mismatch");
    }
};

/// Vertices v_1..v_r of a nondegenerate (r-1)-simplex in R^{r-1} with the
/// property Σλ_j v_j = 0 ⇔ all λ_j equal: e_1, ..., e_{r-1}, -(1,...,1).
inline std::vector<Point> simplex_vertices(int r) {
    require(r >= 2, Errc::BadParams, "need at least two parts");
    std::vector<Point> vs;
    for (int j = 0; j < r - 1; ++j) {
        Point p = Point::zero(r - 1);
        p[static_cast<size_t>(j)] = 1;
        vs.push_back(std::move(p));
    }
    vs.push_back(Point(std::vector<Rational>(static_cast<size_t>(r - 1), Rational(-1))));
    return vs;
}

/// (x; 1) ⊗ v_j for one point: entry [a*(r-1)+b] = (x;1)[a] * v_j[b].
inline Point sarkaria_lift_point(const Point& x, int part, const std::vector<Point>& vs) {
    const int d = x.dim();
    const int r = static_cast<int>(vs.size());
    Point out = Point::zero((d + 1) * (r - 1));
    for (int a = 0; a <= d; ++a) {
        const Rational xa = (a < d) ? x[static_cast<size_t>(a)] : Rational(1);
        for (int b = 0; b < r - 1; ++b)
            out[static_cast<size_t>(a * (r - 1) + b)] = xa * vs[static_cast<size_t>(part)][static_cast<size_t>(b)];
    }
    return out;
}

struct LiftedPoint {
    Point point;
    int part = 0;  // which P_j the source belongs to
    int index = 0; // index within that part
};

/// Advance a base-`base` odometer (last digit fastest). False once wrapped.
inline bool next_tuple(std::vector<int>& digits, int base) {
    int idx = static_cast<int>(digits.size()) - 1;
    while (idx >= 0 && digits[static_cast<size_t>(idx)] == base - 1) {
        digits[static_cast<size_t>(idx)] = 0;
        --idx;
    }
    if (idx < 0) return false;
    ++digits[static_cast<size_t>(idx)];
    return true;
}

/// Sarkaria's tensor trick: lifts r point sets in R^d into R^{(r-1)(d+1)} so
/// that ∩_j conv(P_j) = ∅ ⇔ 0 ∉ conv of the lifted union.
inline std::vector<LiftedPoint> sarkaria_lift(const std::vector<PointConfig>& parts) {
    require(parts.size() >= 2, Errc::BadParams, "lift needs at least two parts");
    const int d = parts[0].dim;
    for (const PointConfig& p : parts)
        require(p.dim == d, Errc::DimensionMismatch, "parts in different dimensions");
    const std::vector<Point> vs = simplex_vertices(static_cast<int>(parts.size()));
    std::vector<LiftedPoint> out;
    for (size_t j = 0; j < parts.size(); ++j)
        for (size_t i = 0; i < parts[j].points.size(); ++i)
            out.push_back({sarkaria_lift_point(parts[j].points[i], static_cast<int>(j), vs),
                           static_cast<int>(j), static_cast<int>(i)});
    return out;
}

struct ColorfulCaratheodory {
    std::vector<int> S; // indices into P, |S| = d
    std::vector<int> T; // indices into P, |T| = m; 0 ∈ conv(S ∪ {v}) for each v ∈ T
};

/// Exhaustive search for the colorful Caratheodory extension: a (d+m)-subset
/// of P carrying at least k colors, split into S (d points) and T (m points)
/// with 0 ∈ conv(S ∪ {v}) for every v ∈ T. When check_precondition is set,
/// first verifies that the hull of every union of r-k+1 color classes
/// contains the origin, which guarantees the search succeeds.
inline std::optional<ColorfulCaratheodory> colorful_caratheodory(
    const std::vector<Point>& P, const std::vector<int>& colors, int d, int m, int k,
    bool check_precondition = true) {
    require(P.size() == colors.size(), Errc::BadParams, "points/colors length mismatch");
    require(!P.empty() && P[0].dim() == d, Errc::DimensionMismatch, "ambient dimension mismatch");
    int r = 0;
    for (int c : colors) r = std::max(r, c + 1);
    require(static_cast<int>(P.size()) >= std::max(m + d, r), Errc::InputTooSmall,
            "|P| >= max{m+d, r} required");

    if (check_precondition) {
        std::vector<int> ids(static_cast<size_t>(r));
        std::iota(ids.begin(), ids.end(), 0);
        bool ok = true;
        for_each_subset_of_size(ids, r - k + 1, [&](Simplex classes) {
            std::vector<Point> pts;
            for (size_t i = 0; i < P.size(); ++i)
                if (classes.contains(colors[i])) pts.push_back(P[i]);
            if (!in_hull(Point::zero(d), pts)) { ok = false; return true; }
            return false;
        });
        if (!ok) return std::nullopt; // precondition genuinely fails
    }

    const int n = static_cast<int>(P.size());
    std::vector<int> all(static_cast<size_t>(n));
    std::iota(all.begin(), all.end(), 0);

    std::optional<ColorfulCaratheodory> found;
    for_each_subset_of_size(all, d + m, [&](Simplex U) {
        std::vector<bool> seen(static_cast<size_t>(r), false);
        int distinct = 0;
        for (int i : U)
            if (!seen[static_cast<size_t>(colors[static_cast<size_t>(i)])]) {
                seen[static_cast<size_t>(colors[static_cast<size_t>(i)])] = true;
                ++distinct;
            }
        if (distinct < k) return false;
        return for_each_subset_of_size(U.vertices(), d, [&](Simplex S) {
            std::vector<Point> base;
            for (int i : S) base.push_back(P[static_cast<size_t>(i)]);
            base.push_back(Point::zero(d)); // placeholder for the varying v
            for (int v : U.minus(S)) {
                base.back() = P[static_cast<size_t>(v)];
                if (!in_hull(Point::zero(d), base)) return false;
            }
            found = ColorfulCaratheodory{S.vertices(), U.minus(S).vertices()};
            return true;
        });
    });
    return found;
}

struct TverbergCertificate {
    std::vector<int> labels;          // part id (0-based) per point of A
    std::vector<int> center;          // indices of B, |B| = (r-1)(d+1)
    std::map<int, Point> witnesses;   // p ∉ B → common point of the r hulls
};

struct CenterCheck {
    bool ok = false;
    int failed_p = -1; // first p ∈ A∖B whose induced partition is not Tverberg
    std::map<int, Point> witnesses;
};

/// Check that B is a Tverberg center for the labeled partition: for every
/// p ∉ B the r hulls of (B ∪ {p}) ∩ A_i must share a point. A part that
/// misses B ∪ {p} entirely counts as a failure (its hull is empty).
/// r defaults to the number of labels in use; passing it explicitly makes a
/// partition with an absent part fail rather than shrink.
inline CenterCheck verify_center(const PointConfig& A, const std::vector<int>& labels,
                                 const std::vector<int>& center, int r = -1) {
    A.validate();
    require(labels.size() == A.points.size(), Errc::BadParams, "label/point count mismatch");
    if (r < 0)
        for (int l : labels) r = std::max(r, l + 1);
    for (int l : labels)
        require(l >= 0 && l < r, Errc::BadParams, "label outside 0..r-1");
    std::vector<bool> in_center(A.points.size(), false);
    for (int i : center) {
        require(i >= 0 && i < A.size(), Errc::BadParams, "center index out of range");
        in_center[static_cast<size_t>(i)] = true;
    }

    CenterCheck res;
    for (int p = 0; p < A.size(); ++p) {
        if (in_center[static_cast<size_t>(p)]) continue;
        std::vector<std::vector<Point>> parts(static_cast<size_t>(r));
        for (int i = 0; i < A.size(); ++i)
            if (in_center[static_cast<size_t>(i)] || i == p)
                parts[static_cast<size_t>(labels[static_cast<size_t>(i)])].push_back(A.points[static_cast<size_t>(i)]);
        bool empty_part = false;
        std::vector<ConvexBody> hulls;
        for (auto& part : parts) {
            if (part.empty()) { empty_part = true; break; }
            hulls.push_back(ConvexBody::hull(std::move(part)));
        }
        if (empty_part) return {false, p, {}};
        IntersectionResult ir = bodies_intersect(hulls, A.dim);
        if (!ir.intersecting) return {false, p, {}};
        res.witnesses[p] = *ir.common_point;
    }
    res.ok = true;
    return res;
}

struct TverbergBudget {
    int max_points = 10;
    int max_parts = 3;
    int max_dim = 2;
};

namespace detail {

/// Proof-faithful search: r labeled copies of each point, Sarkaria lift with
/// the point index as the color, then a colorful transversal scan in the
/// lifted space. For the transversal {x̄_i^{b_i}} a base S of n colors with
/// 0 ∈ conv(S ∪ {v}) for every leftover v yields the partition (labels b)
/// and the center (the colors of S). Hull tests on (n+1)-subsets are memoized
/// per transversal.
inline std::optional<TverbergCertificate> center_search_lifted(const PointConfig& A, int r) {
    const int d = A.dim;
    const int n = (r - 1) * (d + 1);
    const int total = A.size();
    const std::vector<Point> vs = simplex_vertices(r);

    // lifted[i][j] = copy j of point i in R^n
    std::vector<std::vector<Point>> lifted(static_cast<size_t>(total));
    for (int i = 0; i < total; ++i)
        for (int j = 0; j < r; ++j)
            lifted[static_cast<size_t>(i)].push_back(sarkaria_lift_point(A.points[static_cast<size_t>(i)], j, vs));

    // Copy-coloring consistency: every color class of copies surrounds 0.
    for (int i = 0; i < total; ++i)
        require(in_hull(Point::zero(n), lifted[static_cast<size_t>(i)]), Errc::HypothesisViolated,
                "lifted copies of a point do not surround the origin");

    std::vector<int> b(static_cast<size_t>(total), 0); // transversal: copy choice per color
    while (true) {
        std::vector<Point> U;
        U.reserve(static_cast<size_t>(total));
        for (int i = 0; i < total; ++i) U.push_back(lifted[static_cast<size_t>(i)][static_cast<size_t>(b[static_cast<size_t>(i)])]);

        if (in_hull(Point::zero(n), U)) {
            std::map<uint32_t, bool> good; // (n+1)-subset mask → 0 ∈ conv?
            auto subset_good = [&](uint32_t mask) {
                auto it = good.find(mask);
                if (it != good.end()) return it->second;
                std::vector<Point> pts;
                for (int i = 0; i < total; ++i)
                    if (mask & (1u << i)) pts.push_back(U[static_cast<size_t>(i)]);
                bool ok = in_hull(Point::zero(n), pts);
                good.emplace(mask, ok);
                return ok;
            };
            std::vector<int> ids(static_cast<size_t>(total));
            std::iota(ids.begin(), ids.end(), 0);
            std::optional<Simplex> base;
            for_each_subset_of_size(ids, n, [&](Simplex S) {
                uint32_t smask = 0;
                for (int i : S) smask |= (1u << i);
                for (int v = 0; v < total; ++v) {
                    if (smask & (1u << v)) continue;
                    if (!subset_good(smask | (1u << v))) return false;
                }
                base = S;
                return true;
            });
            if (base) {
                TverbergCertificate cert;
                cert.labels.assign(b.begin(), b.end());
                cert.center = base->vertices();
                CenterCheck chk = verify_center(A, cert.labels, cert.center);
                require(chk.ok, Errc::HypothesisViolated,
                        "lifted transversal produced an unverifiable center");
                cert.witnesses = std::move(chk.witnesses);
                return cert;
            }
        }

        if (!next_tuple(b, r)) break; // next transversal, odometer order
    }
    return std::nullopt;
}

/// Fallback: enumerate centers B, labelings of B, then extend point by point
/// (each leftover point only needs one feasible part).
inline std::optional<TverbergCertificate> center_search_direct(const PointConfig& A, int r) {
    const int d = A.dim;
    const int n = (r - 1) * (d + 1);
    const int total = A.size();
    std::vector<int> ids(static_cast<size_t>(total));
    std::iota(ids.begin(), ids.end(), 0);

    std::optional<TverbergCertificate> found;
    for_each_subset_of_size(ids, n, [&](Simplex B) {
        std::vector<int> blab(static_cast<size_t>(n), 0);
        while (true) {
            std::vector<int> labels(static_cast<size_t>(total), -1);
            for (int i = 0; i < n; ++i) labels[static_cast<size_t>(B[i])] = blab[static_cast<size_t>(i)];
            bool all_ok = true;
            std::map<int, Point> wit;
            for (int p = 0; p < total && all_ok; ++p) {
                if (labels[static_cast<size_t>(p)] >= 0) continue;
                bool placed = false;
                for (int part = 0; part < r && !placed; ++part) {
                    std::vector<std::vector<Point>> parts(static_cast<size_t>(r));
                    for (int i : B) parts[static_cast<size_t>(labels[static_cast<size_t>(i)])].push_back(A.points[static_cast<size_t>(i)]);
                    parts[static_cast<size_t>(part)].push_back(A.points[static_cast<size_t>(p)]);
                    bool empty_part = false;
                    std::vector<ConvexBody> hulls;
                    for (auto& pp : parts) {
                        if (pp.empty()) { empty_part = true; break; }
                        hulls.push_back(ConvexBody::hull(pp));
                    }
                    if (empty_part) continue;
                    IntersectionResult ir = bodies_intersect(hulls, d);
                    if (ir.intersecting) {
                        labels[static_cast<size_t>(p)] = part;
                        wit[p] = *ir.common_point;
                        placed = true;
                    }
                }
                if (!placed) all_ok = false;
            }
            if (all_ok) {
                found = TverbergCertificate{labels, B.vertices(), std::move(wit)};
                return true;
            }
            if (!next_tuple(blab, r)) break;
        }
        return false;
    });
    return found;
}

} // namespace detail

/// Partition A into r parts with a Tverberg center of size (r-1)(d+1).
/// Follows the lift-and-transversal proof within the stated budgets, falling
/// back to direct center enumeration beyond them.
inline TverbergCertificate tverberg_with_center(const PointConfig& A, int r,
                                                const TverbergBudget& budget = {}) {
    A.validate();
    const int n = (r - 1) * (A.dim + 1);
    require(r >= 2, Errc::BadParams, "need at least two parts");
    require(A.size() > n, Errc::InputTooSmall,
            "|A| must exceed (r-1)(d+1) = " + std::to_string(n));
    require(A.size() <= 31, Errc::SearchBudgetExceeded, "point count beyond any search budget");

    if (A.size() <= budget.max_points && r <= budget.max_parts && A.dim <= budget.max_dim) {
        auto cert = detail::center_search_lifted(A, r);
        require(cert.has_value(), Errc::HypothesisViolated,
                "transversal search exhausted despite the theorem's guarantee");
        return *cert;
    }
    auto cert = detail::center_search_direct(A, r);
    require(cert.has_value(), Errc::HypothesisViolated,
            "direct center search exhausted despite the theorem's guarantee");
    return *cert;
}

struct ToleranceCertificate {
    std::vector<int> labels;
    int t = 0;
    int verified_up_to = 0;
    /// |∪ A_i ∩ B_{π(i)}| at each recursion level, outermost first; the proof
    /// guarantees every entry is ≥ the tolerance at that level + 1.
    std::vector<int> level_overlaps;
};

/// Exhaustively confirm tolerance t: every removal C of at most t points
/// leaves the r part hulls with a common point.
inline bool verify_tolerance(const PointConfig& A, const std::vector<int>& labels, int t,
                             int r = -1, long budget = 2000000) {
    A.validate();
    require(labels.size() == A.points.size(), Errc::BadParams, "label/point count mismatch");
    if (r < 0)
        for (int l : labels) r = std::max(r, l + 1);
    for (int l : labels)
        require(l >= 0 && l < r, Errc::BadParams, "label outside 0..r-1");
    long work = 0;
    for (int s = 0; s <= t; ++s) {
        long binom = 1;
        for (int i = 0; i < s; ++i) binom = binom * (A.size() - i) / (i + 1);
        work += binom;
    }
    require(work <= budget, Errc::BudgetExceeded, "too many removal sets");

    std::vector<int> ids(static_cast<size_t>(A.size()));
    std::iota(ids.begin(), ids.end(), 0);
    bool ok = true;
    for (int s = 0; s <= t && ok; ++s) {
        for_each_subset_of_size(ids, s, [&](Simplex C) {
            std::vector<std::vector<Point>> parts(static_cast<size_t>(r));
            for (int i = 0; i < A.size(); ++i)
                if (!C.contains(i)) parts[static_cast<size_t>(labels[static_cast<size_t>(i)])].push_back(A.points[static_cast<size_t>(i)]);
            std::vector<ConvexBody> hulls;
            for (auto& pp : parts) {
                if (pp.empty()) { ok = false; return true; }
                hulls.push_back(ConvexBody::hull(std::move(pp)));
            }
            if (!bodies_intersect(hulls, A.dim).intersecting) { ok = false; return true; }
            return false;
        });
    }
    return ok;
}

/// Tverberg partition with tolerance t by the center recursion: take a
/// partition with center B, recurse on A∖B at tolerance t-1, then merge along
/// the permutation maximizing the part overlap |∪ A_i ∩ B_{π(i)}| (ties to the
/// lexicographically smallest π). The averaging bound guarantees the best
/// overlap is at least t+1; that is asserted at every level.
inline ToleranceCertificate tolerant_tverberg(const PointConfig& A, int r, int t,
                                              const TverbergBudget& budget = {}) {
    A.validate();
    require(t >= 0, Errc::BadParams, "negative tolerance");
    const int need = (t + 1) * (r - 1) * (A.dim + 1) + 1;
    require(A.size() >= need, Errc::InputTooSmall,
            "|A| >= " + std::to_string(need) + " required");

    if (t == 0) {
        TverbergCertificate base = tverberg_with_center(A, r, budget);
        ToleranceCertificate cert{base.labels, 0, 0, {}};
        require(verify_tolerance(A, cert.labels, 0), Errc::HypothesisViolated,
                "base partition failed verification");
        return cert;
    }

    TverbergCertificate outer = tverberg_with_center(A, r, budget);
    std::vector<bool> in_center(A.points.size(), false);
    for (int i : outer.center) in_center[static_cast<size_t>(i)] = true;

    PointConfig rest;
    rest.dim = A.dim;
    std::vector<int> rest_index; // position in A of each point of rest
    for (int i = 0; i < A.size(); ++i)
        if (!in_center[static_cast<size_t>(i)]) {
            rest.points.push_back(A.points[static_cast<size_t>(i)]);
            rest_index.push_back(i);
        }

    ToleranceCertificate inner = tolerant_tverberg(rest, r, t - 1, budget);

    // Overlap-maximizing permutation π: part i of the outer partition is
    // matched with inner part π(i).
    std::vector<int> perm(static_cast<size_t>(r));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> best_perm;
    int best_overlap = -1;
    do {
        int overlap = 0;
        for (size_t j = 0; j < rest_index.size(); ++j) {
            const int a_part = outer.labels[static_cast<size_t>(rest_index[j])];
            if (perm[static_cast<size_t>(a_part)] == inner.labels[j]) ++overlap;
        }
        if (overlap > best_overlap) {
            best_overlap = overlap;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    require(best_overlap >= t + 1, Errc::HypothesisViolated,
            "permutation overlap below t+1; the averaging bound failed");

    // Merge: keep outer labels on B, remap inner labels outside B.
    std::vector<int> inv(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) inv[static_cast<size_t>(best_perm[static_cast<size_t>(i)])] = i;
    std::vector<int> merged = outer.labels;
    for (size_t j = 0; j < rest_index.size(); ++j)
        merged[static_cast<size_t>(rest_index[j])] = inv[static_cast<size_t>(inner.labels[j])];

    ToleranceCertificate cert{std::move(merged), t, t, {}};
    cert.level_overlaps.push_back(best_overlap);
    cert.level_overlaps.insert(cert.level_overlaps.end(), inner.level_overlaps.begin(),
                               inner.level_overlaps.end());
    require(verify_tolerance(A, cert.labels, t), Errc::HypothesisViolated,
            "merged partition failed exhaustive tolerance verification");
    return cert;
}

/// Sample (r-1)(d+1) random points (generic with probability 1 under the
/// integer sampler) and exhaustively confirm that no partition into r
/// nonempty parts is a Tverberg partition.
inline bool sharpness_probe(int d, int r, uint64_t seed) {
    require(d >= 1 && r >= 2, Errc::BadParams, "need d >= 1 and r >= 2");
    const int n = (r - 1) * (d + 1);
    Rng rng(seed);
    PointConfig A;
    A.dim = d;
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> c;
        for (int j = 0; j < d; ++j)
            c.emplace_back(rng.range(-1000000000, 1000000000));
        A.points.push_back(Point(std::move(c)));
    }

    std::vector<int> labels(static_cast<size_t>(n), 0);
    while (true) {
        std::vector<std::vector<Point>> parts(static_cast<size_t>(r));
        for (int i = 0; i < n; ++i) parts[static_cast<size_t>(labels[static_cast<size_t>(i)])].push_back(A.points[static_cast<size_t>(i)]);
        bool all_nonempty = true;
        for (const auto& p : parts)
            if (p.empty()) { all_nonempty = false; break; }
        if (all_nonempty) {
            std::vector<ConvexBody> hulls;
            for (auto& p : parts) hulls.push_back(ConvexBody::hull(std::move(p)));
            if (bodies_intersect(hulls, d).intersecting) return false;
        }
        if (!next_tuple(labels, r)) break;
    }
    return true;
}

} // namespace helly
