#include <catch2/catch_amalgamated.hpp>

#include "helly/collapse.hpp"
#include "helly/colorful.hpp"
#include "helly/generators.hpp"
#include "helly/geometry.hpp"
#include "helly/oracles.hpp"
#include "helly/rng.hpp"

using namespace helly;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

Point P1(long x) { return Point({R(x)}); }
Point P2(long x, long y) { return Point({R(x), R(y)}); }

bool body_in(const Point& x, const ConvexBody& b) {
    switch (b.kind) {
        case ConvexBody::Kind::Hull: return oracle::in_hull(x, b.points);
        case ConvexBody::Kind::OpenHalfspace: return dot(x, b.normal) > 0;
        case ConvexBody::Kind::ClosedHalfspace: return dot(x, b.normal) >= b.offset;
        case ConvexBody::Kind::AxisBox:
            for (size_t i = 0; i < b.lo.size(); ++i)
                if (x[i] < b.lo[i] || x[i] > b.hi[i]) return false;
            return true;
    }
    return false;
}

} // namespace

TEST_CASE("interval intersections") {
    auto a = ConvexBody::hull({P1(0), P1(2)});
    auto b = ConvexBody::hull({P1(1), P1(3)});
    auto r = bodies_intersect(std::vector<ConvexBody>{a, b}, 1);
    REQUIRE(r.intersecting);
    CHECK((*r.common_point)[0] >= R(1));
    CHECK((*r.common_point)[0] <= R(2));

    auto c = ConvexBody::hull({P1(5), P1(6)});
    CHECK_FALSE(bodies_intersect(std::vector<ConvexBody>{a, c}, 1).intersecting);

    // Three pairwise-intersecting intervals have a common point (Helly d=1).
    auto d = ConvexBody::hull({P1(1), P1(4)});
    auto e = ConvexBody::hull({P1(2), P1(5)});
    auto f = ConvexBody::hull({P1(0), P1(3)});
    CHECK(bodies_intersect(std::vector<ConvexBody>{d, e, f}, 1).intersecting);
}

TEST_CASE("parallel segments do not meet") {
    auto a = ConvexBody::hull({P2(0, 0), P2(1, 0)});
    auto b = ConvexBody::hull({P2(0, 1), P2(1, 1)});
    CHECK_FALSE(bodies_intersect(std::vector<ConvexBody>{a, b}, 2).intersecting);
}

TEST_CASE("open halfspaces are strict") {
    auto h = ConvexBody::open_halfspace(P2(1, 0)); // x > 0
    auto touching = ConvexBody::hull({P2(0, 0), P2(0, 1)});
    CHECK_FALSE(bodies_intersect(std::vector<ConvexBody>{h, touching}, 2).intersecting);
    auto crossing = ConvexBody::hull({P2(-1, 0), P2(1, 0)});
    CHECK(bodies_intersect(std::vector<ConvexBody>{h, crossing}, 2).intersecting);

    // Two opposite open halfspaces are disjoint, closed ones share the line.
    auto hpos = ConvexBody::open_halfspace(P1(1));
    auto hneg = ConvexBody::open_halfspace(P1(-1));
    CHECK_FALSE(bodies_intersect(std::vector<ConvexBody>{hpos, hneg}, 1).intersecting);
    auto cpos = ConvexBody::closed_halfspace(P1(1), R(0));
    auto cneg = ConvexBody::closed_halfspace(P1(-1), R(0));
    auto rr = bodies_intersect(std::vector<ConvexBody>{cpos, cneg}, 1);
    REQUIRE(rr.intersecting);
    CHECK((*rr.common_point)[0] == R(0));

    // The zero normal denotes the empty set.
    auto zero = ConvexBody::open_halfspace(P1(0));
    CHECK_FALSE(bodies_intersect(std::vector<ConvexBody>{zero}, 1).intersecting);
}

TEST_CASE("boxes") {
    auto bx = ConvexBody::box({R(0), R(0)}, {R(2), R(2)});
    auto seg = ConvexBody::hull({P2(1, 1), P2(3, 3)});
    CHECK(bodies_intersect(std::vector<ConvexBody>{bx, seg}, 2).intersecting);
    auto far = ConvexBody::hull({P2(5, 5)});
    CHECK_FALSE(bodies_intersect(std::vector<ConvexBody>{bx, far}, 2).intersecting);
    CHECK_THROWS_AS(ConvexBody::box({R(1)}, {R(0)}), Error);
}

TEST_CASE("hull membership") {
    CHECK(in_hull(Point::zero(2), {P2(1, 0), P2(-1, 1), P2(-1, -1)}));
    CHECK_FALSE(in_hull(Point::zero(1), {P1(1), P1(2)}));
    CHECK_FALSE(in_hull(Point::zero(2), {P2(1, 1), P2(-2, -1)}));
    CHECK(in_hull(P2(1, 1), {P2(0, 0), P2(2, 0), P2(0, 2), P2(2, 2)}));
}

TEST_CASE("intersection witness lies in every body") {
    Rng rng(51);
    for (int i = 0; i < 40; ++i) {
        const int dim = 1 + static_cast<int>(rng.below(2));
        std::vector<ConvexBody> bodies;
        const int nb = 2 + static_cast<int>(rng.below(3));
        for (int b = 0; b < nb; ++b) {
            const int kind = static_cast<int>(rng.below(3));
            if (kind == 0) {
                PointConfig pc = random_points(rng, dim, 1 + static_cast<int>(rng.below(4)), 20, 2);
                bodies.push_back(ConvexBody::hull(pc.points));
            } else if (kind == 1) {
                PointConfig pc = random_points(rng, dim, 1, 3, 1);
                bodies.push_back(ConvexBody::closed_halfspace(pc.points[0], R(rng.range(-5, 5))));
            } else {
                std::vector<Rational> lo, hi;
                for (int c = 0; c < dim; ++c) {
                    Rational a(rng.range(-10, 10)), b2(rng.range(-10, 10));
                    if (b2 < a) std::swap(a, b2);
                    lo.push_back(a);
                    hi.push_back(b2);
                }
                bodies.push_back(ConvexBody::box(std::move(lo), std::move(hi)));
            }
        }
        IntersectionResult r = bodies_intersect(bodies, dim);
        if (r.intersecting)
            for (const ConvexBody& b : bodies) CHECK(body_in(*r.common_point, b));
    }
}

TEST_CASE("agreement with the candidate-point oracle") {
    Rng rng(53);
    for (int i = 0; i < 120; ++i) {
        const int dim = 1 + static_cast<int>(rng.below(2));
        const int nb = 2 + static_cast<int>(rng.below(2));
        std::vector<ConvexBody> bodies;
        std::vector<std::vector<Point>> hulls;
        for (int b = 0; b < nb; ++b) {
            PointConfig pc = random_points(rng, dim, 1 + static_cast<int>(rng.below(5)), 12, 2);
            bodies.push_back(ConvexBody::hull(pc.points));
            hulls.push_back(pc.points);
        }
        CHECK(bodies_intersect(bodies, dim).intersecting == oracle::hulls_intersect(hulls, dim));
    }
}

TEST_CASE("in_hull agrees with the barycentric oracle") {
    Rng rng(59);
    for (int i = 0; i < 200; ++i) {
        const int dim = 1 + static_cast<int>(rng.below(3));
        PointConfig pc = random_points(rng, dim, 1 + static_cast<int>(rng.below(6)), 8, 2);
        PointConfig q = random_points(rng, dim, 1, 8, 2);
        CHECK(in_hull(q.points[0], pc.points) == oracle::in_hull(q.points[0], pc.points));
    }
}

TEST_CASE("nerve construction") {
    ColoredFamily two;
    two.dim = 1;
    two.bodies = {ConvexBody::hull({P1(0), P1(1)}), ConvexBody::hull({P1(5), P1(6)})};
    two.colors = {0, 1};
    NerveResult nv = nerve(two);
    CHECK(nv.complex.facets().size() == 2);
    CHECK(nv.complex.dim() == 0);
    CHECK(nv.empty_vertices.empty());

    ColoredFamily three;
    three.dim = 1;
    three.bodies = {ConvexBody::hull({P1(0), P1(4)}), ConvexBody::hull({P1(1), P1(5)}),
                    ConvexBody::hull({P1(2), P1(6)})};
    three.colors = {0, 1, 2};
    CHECK(nerve(three).complex.same_faces(SimplicialComplex::complete(3)));

    // An empty body contributes a ground vertex with no faces at all.
    ColoredFamily with_empty;
    with_empty.dim = 1;
    with_empty.bodies = {ConvexBody::hull({P1(0)}), ConvexBody::open_halfspace(P1(0))};
    with_empty.colors = {0, 1};
    NerveResult nv2 = nerve(with_empty);
    REQUIRE(nv2.empty_vertices.size() == 1);
    CHECK(nv2.empty_vertices[0] == 1);
    CHECK_FALSE(nv2.complex.is_face(Simplex{1}));
    CHECK(nv2.complex.num_vertices() == 2);
}

TEST_CASE("nerve monotonicity: shrinking a body never adds faces") {
    Rng rng(61);
    for (int i = 0; i < 15; ++i) {
        ColoredFamily fam;
        fam.dim = 2;
        const int nb = 3 + static_cast<int>(rng.below(3));
        for (int b = 0; b < nb; ++b) {
            PointConfig pc = random_points(rng, 2, 3 + static_cast<int>(rng.below(3)), 10, 1);
            fam.bodies.push_back(ConvexBody::hull(pc.points));
            fam.colors.push_back(b);
        }
        SimplicialComplex before = nerve(fam).complex;
        ColoredFamily shrunk = fam;
        std::vector<Point> fewer = fam.bodies[0].points;
        fewer.resize(std::max<size_t>(1, fewer.size() - 1));
        shrunk.bodies[0] = ConvexBody::hull(fewer);
        SimplicialComplex after = nerve(shrunk).complex;
        for (const Simplex& f : after.all_faces()) CHECK(before.is_face(f));
    }
}

TEST_CASE("halfspace duality") {
    auto ds = dual_halfspaces({P2(1, 0)});
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].kind == ConvexBody::Kind::OpenHalfspace);
    CHECK(bodies_intersect(std::vector<ConvexBody>{ds[0]}, 2).intersecting);

    auto zero = dual_halfspaces({Point::zero(2)});
    CHECK_FALSE(bodies_intersect(std::vector<ConvexBody>{zero[0]}, 2).intersecting);

    // 0 ∈ conv(P') ⇔ the dual halfspaces have empty intersection.
    Rng rng(67);
    for (int i = 0; i < 60; ++i) {
        const int dim = 1 + static_cast<int>(rng.below(3));
        PointConfig pc = random_points(rng, dim, 1 + static_cast<int>(rng.below(6)), 6, 2);
        std::vector<int> ids(pc.points.size());
        std::iota(ids.begin(), ids.end(), 0);
        for_each_subset_by_size(ids, [&](Simplex sub) {
            if (sub.is_empty()) return false;
            std::vector<Point> pts;
            for (int j : sub) pts.push_back(pc.points[static_cast<size_t>(j)]);
            const bool origin_in = in_hull(Point::zero(dim), pts);
            const bool duals_meet =
                bodies_intersect(dual_halfspaces(pts), dim).intersecting;
            CHECK(origin_in == !duals_meet);
            return false;
        });
    }
}

TEST_CASE("wegner collapsibility of interval and box nerves") {
    Rng rng(71);
    for (int i = 0; i < 10; ++i) {
        ColoredFamily fam = random_interval_family(rng, 3 + static_cast<int>(rng.below(5)));
        CHECK(find_d_collapse(nerve(fam).complex, 1, CollapseMode::Standard, {12, 400000})
                  .sequence.has_value());
    }
    for (int i = 0; i < 6; ++i) {
        ColoredFamily fam = random_box_family(rng, 2, 3 + static_cast<int>(rng.below(4)));
        CHECK(find_d_collapse(nerve(fam).complex, 2, CollapseMode::Standard, {12, 400000})
                  .sequence.has_value());
    }
}

TEST_CASE("colorful helly end to end") {
    // Two colors on the line; every bicolored pair meets, so at k=d+1=2, m=1
    // some color class must be intersecting.
    ColoredFamily fam;
    fam.dim = 1;
    auto iv = [&](long a, long b, int color) {
        fam.bodies.push_back(ConvexBody::hull({P1(a), P1(b)}));
        fam.colors.push_back(color);
    };
    iv(0, 10, 0);
    iv(1, 9, 1);
    iv(2, 8, 0);
    iv(3, 7, 1);
    ColorfulHellyResult res = colorful_helly(fam, 1, 1, 2);
    REQUIRE(res.hypothesis_holds);
    CHECK(static_cast<int>(res.classes.size()) >= 1);

    // Three colors with m=2 at full k: in every colorful triple each body
    // meets one of its two companions, so one whole class must intersect.
    ColoredFamily tri;
    tri.dim = 1;
    auto ivc = [&](long a2, long b2, int color) {
        tri.bodies.push_back(ConvexBody::hull({P1(a2), P1(b2)}));
        tri.colors.push_back(color);
    };
    ivc(0, 10, 0);
    ivc(2, 4, 1);
    ivc(6, 8, 1);
    ivc(3, 7, 2);
    ColorfulHellyResult res3 = colorful_helly(tri, 1, 2, 3);
    REQUIRE(res3.hypothesis_holds);
    CHECK(static_cast<int>(res3.classes.size()) >= 1);

    // A family violating the hypothesis reports a counterexample.
    ColoredFamily bad;
    bad.dim = 1;
    bad.bodies = {ConvexBody::hull({P1(0), P1(1)}), ConvexBody::hull({P1(5), P1(6)})};
    bad.colors = {0, 1};
    ColorfulHellyResult res2 = colorful_helly(bad, 1, 1, 2);
    CHECK_FALSE(res2.hypothesis_holds);
    REQUIRE(res2.bad_subfamily.has_value());
}
