#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "helly/complex.hpp"
#include "helly/error.hpp"
#include "helly/linprog.hpp"
#include "helly/rational.hpp"
#include "helly/simplex.hpp"

namespace helly {

struct Point {
    std::vector<Rational> coords;

    Point() = default;
    explicit Point(std::vector<Rational> c) : coords(std::move(c)) {}

    int dim() const { return static_cast<int>(coords.size()); }
    const Rational& operator[](size_t i) const { return coords[i]; }
    Rational& operator[](size_t i) { return coords[i]; }
    bool operator==(const Point&) const = default;

    static Point zero(int d) { return Point(std::vector<Rational>(static_cast<size_t>(d), Rational(0))); }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < coords.size(); ++i)
            s += (i ? "," : "") + rational_str(coords[i]);
        return s + ")";
    }
};

inline Rational dot(const Point& a, const Point& b) {
    require(a.dim() == b.dim(), Errc::DimensionMismatch, "dot of mismatched dimensions");
    Rational s(0);
    for (size_t i = 0; i < a.coords.size(); ++i) s += a.coords[i] * b.coords[i];
    return s;
}

/// A convex body in R^d. Four variants:
///   Hull          — convex hull of a nonempty finite point set;
///   OpenHalfspace — {x : x·normal > 0}; the zero normal denotes ∅;
///   ClosedHalfspace — {x : x·normal ≥ offset};
///   AxisBox       — {x : lo ≤ x ≤ hi coordinatewise}.
struct ConvexBody {
    enum class Kind { Hull, OpenHalfspace, ClosedHalfspace, AxisBox };

    Kind kind = Kind::Hull;
    std::vector<Point> points; // Hull
    Point normal;              // halfspaces
    Rational offset;           // ClosedHalfspace
    std::vector<Rational> lo, hi; // AxisBox

    static ConvexBody hull(std::vector<Point> pts) {
        require(!pts.empty(), Errc::BadParams, "hull of no points");
        for (const Point& p : pts)
            require(p.dim() == pts[0].dim(), Errc::DimensionMismatch, "mixed-dimension hull");
        ConvexBody b;
        b.kind = Kind::Hull;
        b.points = std::move(pts);
        return b;
    }

    static ConvexBody open_halfspace(Point normal) {
        ConvexBody b;
        b.kind = Kind::OpenHalfspace;
        b.normal = std::move(normal);
        return b;
    }

    static ConvexBody closed_halfspace(Point normal, Rational offset) {
        ConvexBody b;
        b.kind = Kind::ClosedHalfspace;
        b.normal = std::move(normal);
        b.offset = std::move(offset);
        return b;
    }

    static ConvexBody box(std::vector<Rational> lo, std::vector<Rational> hi) {
        require(lo.size() == hi.size(), Errc::DimensionMismatch, "box bound length mismatch");
        for (size_t i = 0; i < lo.size(); ++i)
            require(lo[i] <= hi[i], Errc::BadParams, "box with lo > hi");
        ConvexBody b;
        b.kind = Kind::AxisBox;
        b.lo = std::move(lo);
        b.hi = std::move(hi);
        return b;
    }

    int dim() const {
        switch (kind) {
            case Kind::Hull: return points[0].dim();
            case Kind::OpenHalfspace:
            case Kind::ClosedHalfspace: return normal.dim();
            case Kind::AxisBox: return static_cast<int>(lo.size());
        }
        return 0;
    }

    bool is_zero_normal() const {
        for (const Rational& x : normal.coords)
            if (x != 0) return false;
        return true;
    }
};

struct IntersectionResult {
    bool intersecting = false;
    std::optional<Point> common_point;
};

/// Exact emptiness test for the intersection of convex bodies, by linear
/// feasibility. Hulls contribute convex-combination variables; halfspaces and
/// boxes contribute linear constraints. Strict inequalities (open halfspaces)
/// are handled by maximizing a shared slack ε with exact arithmetic: the open
/// system is feasible iff the relaxation admits ε > 0. No epsilons, no
/// floating point; the verdict is exact.
inline IntersectionResult bodies_intersect(std::span<const ConvexBody> bodies, int dim) {
    require(!bodies.empty(), Errc::BadParams, "intersection of an empty body list");
    for (const ConvexBody& b : bodies)
        require(b.dim() == dim, Errc::DimensionMismatch, "body dimension mismatch");

    bool any_strict = false;
    std::vector<const ConvexBody*> active;
    for (const ConvexBody& b : bodies) {
        if (b.kind == ConvexBody::Kind::OpenHalfspace) {
            if (b.is_zero_normal()) return {false, std::nullopt}; // the empty body
            any_strict = true;
            active.push_back(&b);
        } else if (b.kind == ConvexBody::Kind::ClosedHalfspace && b.is_zero_normal()) {
            if (b.offset > 0) return {false, std::nullopt};
            // 0 ≥ offset with offset ≤ 0: the whole space, no constraint.
        } else {
            active.push_back(&b);
        }
    }

    // Fast path: a hull meets an open halfspace iff a hull vertex does.
    if (active.size() == 2 && any_strict) {
        const ConvexBody* h = nullptr;
        const ConvexBody* o = nullptr;
        for (const ConvexBody* b : active)
            (b->kind == ConvexBody::Kind::Hull ? h : o) = b;
        if (h && o && o->kind == ConvexBody::Kind::OpenHalfspace) {
            for (const Point& p : h->points)
                if (dot(p, o->normal) > 0) return {true, p};
            return {false, std::nullopt};
        }
    }

    // Variable layout: x+ (dim), x- (dim), then per-body extras, then ε last.
    size_t nvars = 2 * static_cast<size_t>(dim);
    std::vector<size_t> lambda_base(active.size(), 0);
    size_t nrows = 0;
    for (size_t i = 0; i < active.size(); ++i) {
        switch (active[i]->kind) {
            case ConvexBody::Kind::Hull:
                lambda_base[i] = nvars;
                nvars += active[i]->points.size();
                nrows += static_cast<size_t>(dim) + 1;
                break;
            case ConvexBody::Kind::OpenHalfspace:
            case ConvexBody::Kind::ClosedHalfspace:
                lambda_base[i] = nvars;
                nvars += 1; // slack
                nrows += 1;
                break;
            case ConvexBody::Kind::AxisBox:
                lambda_base[i] = nvars;
                nvars += 2 * static_cast<size_t>(dim); // slacks per side
                nrows += 2 * static_cast<size_t>(dim);
                break;
        }
    }
    size_t eps_var = nvars;
    if (any_strict) {
        nvars += 2;            // ε and its cap slack
        nrows += 1;            // ε ≤ 1
    }

    std::vector<std::vector<Rational>> A(nrows, std::vector<Rational>(nvars, Rational(0)));
    std::vector<Rational> rhs(nrows, Rational(0));
    size_t row = 0;
    auto x_coef = [&](size_t r, int c, const Rational& v) {
        A[r][static_cast<size_t>(c)] += v;
        A[r][static_cast<size_t>(dim + c)] -= v;
    };

    for (size_t i = 0; i < active.size(); ++i) {
        const ConvexBody& b = *active[i];
        switch (b.kind) {
            case ConvexBody::Kind::Hull: {
                for (int c = 0; c < dim; ++c) {
                    for (size_t j = 0; j < b.points.size(); ++j)
                        A[row][lambda_base[i] + j] = b.points[j][static_cast<size_t>(c)];
                    x_coef(row, c, Rational(-1));
                    rhs[row] = 0;
                    ++row;
                }
                for (size_t j = 0; j < b.points.size(); ++j) A[row][lambda_base[i] + j] = 1;
                rhs[row] = 1;
                ++row;
                break;
            }
            case ConvexBody::Kind::ClosedHalfspace: {
                for (int c = 0; c < dim; ++c) x_coef(row, c, b.normal[static_cast<size_t>(c)]);
                A[row][lambda_base[i]] = -1;
                rhs[row] = b.offset;
                ++row;
                break;
            }
            case ConvexBody::Kind::OpenHalfspace: {
                for (int c = 0; c < dim; ++c) x_coef(row, c, b.normal[static_cast<size_t>(c)]);
                A[row][lambda_base[i]] = -1;
                A[row][eps_var] = -1;
                rhs[row] = 0;
                ++row;
                break;
            }
            case ConvexBody::Kind::AxisBox: {
                for (int c = 0; c < dim; ++c) {
                    x_coef(row, c, Rational(1));
                    A[row][lambda_base[i] + static_cast<size_t>(c)] = -1;
                    rhs[row] = b.lo[static_cast<size_t>(c)];
                    ++row;
                    x_coef(row, c, Rational(1));
                    A[row][lambda_base[i] + static_cast<size_t>(dim + c)] = 1;
                    rhs[row] = b.hi[static_cast<size_t>(c)];
                    ++row;
                }
                break;
            }
        }
    }
    if (any_strict) {
        A[row][eps_var] = 1;
        A[row][eps_var + 1] = 1;
        rhs[row] = 1;
        ++row;
    }

    std::vector<Rational> c(nvars, Rational(0));
    if (any_strict) c[eps_var] = 1;
    lp::Solution sol = lp::solve(std::move(A), std::move(rhs), std::move(c));
    if (sol.status != lp::Status::Optimal) return {false, std::nullopt};
    if (any_strict && sol.objective <= 0) return {false, std::nullopt};

    Point p = Point::zero(dim);
    for (int cidx = 0; cidx < dim; ++cidx)
        p[static_cast<size_t>(cidx)] =
            sol.x[static_cast<size_t>(cidx)] - sol.x[static_cast<size_t>(dim + cidx)];
    return {true, std::move(p)};
}

inline IntersectionResult bodies_intersect(const std::vector<ConvexBody>& bodies, int dim) {
    return bodies_intersect(std::span<const ConvexBody>(bodies.data(), bodies.size()), dim);
}

/// Exact test for q ∈ conv(P): feasibility of the convex-combination system.
inline bool in_hull(const Point& q, const std::vector<Point>& P) {
    if (P.empty()) return false;
    const int d = q.dim();
    for (const Point& p : P)
        require(p.dim() == d, Errc::DimensionMismatch, "hull point dimension mismatch");
    std::vector<std::vector<Rational>> A(static_cast<size_t>(d) + 1,
                                         std::vector<Rational>(P.size(), Rational(0)));
    std::vector<Rational> b(static_cast<size_t>(d) + 1, Rational(0));
    for (int c = 0; c < d; ++c) {
        for (size_t j = 0; j < P.size(); ++j) A[static_cast<size_t>(c)][j] = P[j][static_cast<size_t>(c)];
        b[static_cast<size_t>(c)] = q[static_cast<size_t>(c)];
    }
    for (size_t j = 0; j < P.size(); ++j) A[static_cast<size_t>(d)][j] = 1;
    b[static_cast<size_t>(d)] = 1;
    return lp::find_feasible(std::move(A), std::move(b)).has_value();
}

struct ColoredFamily {
    int dim = 0;
    std::vector<ConvexBody> bodies;
    std::vector<int> colors; // 0-based color ids

    int size() const { return static_cast<int>(bodies.size()); }

    int num_colors() const {
        int r = 0;
        for (int c : colors) r = std::max(r, c + 1);
        return r;
    }

    void validate() const {
        require(bodies.size() == colors.size(), Errc::BadParams,
                "bodies/colors length mismatch");
        for (const ConvexBody& b : bodies)
            require(b.dim() == dim, Errc::DimensionMismatch, "body dimension mismatch");
        std::vector<bool> seen(static_cast<size_t>(num_colors()), false);
        for (int c : colors) {
            require(c >= 0, Errc::BadParams, "negative color");
            seen[static_cast<size_t>(c)] = true;
        }
        for (bool s : seen) require(s, Errc::BadParams, "color class with no member");
    }

    std::vector<ConvexBody> select(const Simplex& idx) const {
        std::vector<ConvexBody> out;
        for (int i : idx) out.push_back(bodies[static_cast<size_t>(i)]);
        return out;
    }
};

struct NerveResult {
    SimplicialComplex complex;
    /// Vertices of bodies that are empty sets: ground vertices of the complex
    /// that belong to no face, not even as 0-faces.
    std::vector<int> empty_vertices;
};

/// Nerve of a family: one vertex per body, σ is a face iff the bodies of σ
/// have a common point. Faces are found level by level; a candidate is tested
/// only if all its boundary subsets are already faces (intersectingness is
/// closed under taking subfamilies).
inline NerveResult nerve(const ColoredFamily& family, int budget = 12) {
    family.validate();
    const int n = family.size();
    require(n <= budget, Errc::BudgetExceeded,
            "nerve of " + std::to_string(n) + " bodies exceeds budget " + std::to_string(budget));

    std::set<Simplex> faces;
    faces.insert(Simplex{});
    std::vector<int> empties;
    std::vector<Simplex> level;
    for (int i = 0; i < n; ++i) {
        if (bodies_intersect(family.select(Simplex{i}), family.dim).intersecting)
            level.push_back(Simplex{i});
        else
            empties.push_back(i);
    }
    for (const Simplex& s : level) faces.insert(s);

    while (!level.empty()) {
        std::vector<Simplex> next;
        for (const Simplex& s : level) {
            for (int v = s.vertices().empty() ? 0 : s.vertices().back() + 1; v < n; ++v) {
                Simplex cand = s.with(v);
                bool boundary_ok = true;
                for (int u : cand)
                    if (!faces.count(cand.minus(u))) { boundary_ok = false; break; }
                if (!boundary_ok) continue;
                if (bodies_intersect(family.select(cand), family.dim).intersecting) {
                    faces.insert(cand);
                    next.push_back(cand);
                }
            }
        }
        level = std::move(next);
    }

    std::vector<Simplex> facets;
    for (const Simplex& s : faces) {
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!s.contains(v) && faces.count(s.with(v))) maximal = false;
        if (maximal) facets.push_back(s);
    }
    return {SimplicialComplex::from_facets(n, std::move(facets)), std::move(empties)};
}

/// H_p = {x : x·p > 0} for each point, order preserved. The zero point maps
/// to the empty body.
inline std::vector<ConvexBody> dual_halfspaces(const std::vector<Point>& P) {
    std::vector<ConvexBody> out;
    out.reserve(P.size());
    for (const Point& p : P) out.push_back(ConvexBody::open_halfspace(p));
    return out;
}

} // namespace helly
