#include <catch2/catch_amalgamated.hpp>

#include "helly/complex.hpp"
#include "helly/generators.hpp"
#include "helly/geometry.hpp"
#include "helly/homology.hpp"
#include "helly/rng.hpp"

using namespace helly;

namespace {

// Chain-complex identity ∂_k ∘ ∂_{k+1} = 0, multiplied out over the integers.
bool boundary_squares_to_zero(const SimplicialComplex& X, int k) {
    IntMatrix a = boundary_matrix(X, k);
    IntMatrix b = boundary_matrix(X, k + 1);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            long s = 0;
            for (int t = 0; t < a.cols; ++t) s += long(a.at(i, t)) * long(b.at(t, j));
            if (s != 0) return false;
        }
    return true;
}

} // namespace

TEST_CASE("frozen conventions on the smallest complexes") {
    // Pre-build oracle table: void errors; {∅} has only reduced homology at
    // index -1; a point is fully acyclic; two points have one extra component.
    CHECK_THROWS_AS(reduced_betti(SimplicialComplex::void_complex(2), 0), Error);

    auto E = SimplicialComplex::empty_complex(2);
    CHECK(reduced_betti(E, -1) == 1);
    CHECK(reduced_betti(E, 0) == 0);

    auto P = SimplicialComplex::from_facets(1, {Simplex{0}});
    CHECK(reduced_betti(P, -1) == 0);
    CHECK(reduced_betti(P, 0) == 0);

    auto PP = SimplicialComplex::from_facets(2, {Simplex{0}, Simplex{1}});
    CHECK(reduced_betti(PP, -1) == 0);
    CHECK(reduced_betti(PP, 0) == 1);
    CHECK(reduced_betti(PP, 5) == 0);
}

TEST_CASE("boundary matrices") {
    auto PP = boundary_complex(Simplex{0, 1}); // two points
    IntMatrix aug = boundary_matrix(PP, 0);
    CHECK(aug.rows == 1);
    CHECK(aug.cols == 2);
    CHECK(rank_q(aug) == 1);

    auto H = boundary_complex(Simplex{0, 1, 2}); // hollow triangle
    IntMatrix d1 = boundary_matrix(H, 1);
    CHECK(d1.rows == 3);
    CHECK(d1.cols == 3);
    CHECK(rank_q(d1) == 2);

    auto T = SimplicialComplex::from_facets(3, {Simplex{0, 1, 2}});
    IntMatrix d2 = boundary_matrix(T, 2);
    CHECK(d2.rows == 3);
    CHECK(d2.cols == 1);
    CHECK(rank_q(d2) == 1);

    CHECK_THROWS_AS(boundary_matrix(T, 5), Error);
}

TEST_CASE("reduced betti numbers") {
    auto H = boundary_complex(Simplex{0, 1, 2});
    CHECK(reduced_betti(H, 1) == 1);
    CHECK(reduced_betti(H, 0) == 0);

    auto F = SimplicialComplex::complete(4);
    for (int k = 0; k <= 3; ++k) CHECK(reduced_betti(F, k) == 0);

    auto S2 = boundary_complex(Simplex{0, 1, 2, 3}); // 2-sphere
    CHECK(reduced_betti(S2, 2) == 1);
    CHECK(reduced_betti(S2, 1) == 0);
}

TEST_CASE("torsion shows up over F2 only") {
    // Minimal 6-vertex projective plane: Euler characteristic 1, rationally
    // acyclic, but with surviving classes in dimensions 1 and 2 over F2.
    auto rp2 = SimplicialComplex::from_facets(
        6, {Simplex{0, 1, 3}, Simplex{0, 1, 4}, Simplex{0, 2, 3}, Simplex{0, 2, 5},
            Simplex{0, 4, 5}, Simplex{1, 2, 4}, Simplex{1, 2, 5}, Simplex{1, 3, 5},
            Simplex{2, 3, 4}, Simplex{3, 4, 5}});
    CHECK(rp2.faces(1).size() == 15);
    CHECK(reduced_betti(rp2, 1, Field::Q) == 0);
    CHECK(reduced_betti(rp2, 2, Field::Q) == 0);
    CHECK(reduced_betti(rp2, 1, Field::F2) == 1);
    CHECK(reduced_betti(rp2, 2, Field::F2) == 1);
}

TEST_CASE("both fields agree on the torsion-free corpus") {
    Rng rng(5);
    for (int i = 0; i < 40; ++i) {
        SimplicialComplex X = random_complex(rng, 6, 6, 4);
        if (X.is_void()) continue;
        auto q = reduced_betti_all(X, Field::Q);
        auto f2 = reduced_betti_all(X, Field::F2);
        CHECK(q == f2); // desk-scale random complexes here have no torsion
    }
}

TEST_CASE("chain complex identity") {
    Rng rng(9);
    for (int i = 0; i < 25; ++i) {
        SimplicialComplex X = random_complex(rng, 6, 6, 5);
        if (X.is_void()) continue;
        for (int k = 0; k < X.dim(); ++k) CHECK(boundary_squares_to_zero(X, k));
    }
}

TEST_CASE("d-Leray checks") {
    auto H = boundary_complex(Simplex{0, 1, 2});
    auto r1 = is_d_leray_induced(H, 1);
    CHECK_FALSE(r1.is_leray);
    REQUIRE(r1.witness.has_value());
    CHECK(r1.witness->first == Simplex{0, 1, 2});
    CHECK(r1.witness->second == 1);
    CHECK(is_d_leray_induced(H, 2).is_leray);

    CHECK(is_d_leray_links(H, 2).is_leray);
    CHECK_FALSE(is_d_leray_links(H, 1).is_leray);

    CHECK(is_d_leray_links(SimplicialComplex::complete(4), 0).is_leray);
    CHECK_FALSE(is_d_leray_links(boundary_complex(Simplex{0, 1, 2, 3}), 2).is_leray);
    CHECK(is_d_leray_links(boundary_complex(Simplex{0, 1, 2, 3}), 3).is_leray);
}

TEST_CASE("nerve of four intervals on a line is 1-Leray") {
    // [0,2],[1,3],[5/2,4],[7/2,5]: pairwise overlaps along the line.
    using helly::Rational;
    ColoredFamily fam;
    fam.dim = 1;
    auto iv = [&](const Rational& a, const Rational& b) {
        fam.bodies.push_back(ConvexBody::hull({Point({a}), Point({b})}));
        fam.colors.push_back(static_cast<int>(fam.colors.size()));
    };
    iv(0, 2);
    iv(1, 3);
    iv(Rational(5, 2), 4);
    iv(Rational(7, 2), 5);
    SimplicialComplex X = nerve(fam).complex;
    CHECK(is_d_leray_induced(X, 1).is_leray);
    CHECK(is_d_leray_links(X, 1).is_leray);
}

TEST_CASE("cone acyclicity") {
    Rng rng(21);
    for (int i = 0; i < 15; ++i) {
        SimplicialComplex X = random_complex(rng, 4, 4, 3);
        if (X.is_void()) continue;
        auto apex = SimplicialComplex::from_facets(VertexSet{9}, {Simplex{9}});
        SimplicialComplex cone = join(X, apex);
        for (int k = 0; k <= cone.dim(); ++k) CHECK(reduced_betti(cone, k) == 0);
    }
}

TEST_CASE("leray equivalence on random complexes") {
    Rng rng(13);
    for (int i = 0; i < 60; ++i) {
        SimplicialComplex X = random_complex(rng, 3 + i % 4, 6, 4);
        for (int d = 0; d <= 4; ++d)
            CHECK(is_d_leray_induced(X, d).is_leray == is_d_leray_links(X, d).is_leray);
    }
}

TEST_CASE("ell_sigma") {
    auto F = SimplicialComplex::complete(3);
    CHECK(ell_sigma(F, Simplex{}) == -1); // link is a nonempty cone: fully acyclic

    auto E = SimplicialComplex::empty_complex(1);
    CHECK(ell_sigma(E, Simplex{}) == 0); // link {∅}: homology survives at -1

    auto H = boundary_complex(Simplex{0, 1, 2});
    CHECK(ell_sigma(H, Simplex{}) == 2);
    CHECK(ell_sigma(H, Simplex{0}) == 1);
    CHECK_THROWS_AS(ell_sigma(H, Simplex{0, 1, 2}), Error);
}

TEST_CASE("leray sweep budget") {
    CHECK_THROWS_AS(is_d_leray_induced(SimplicialComplex::complete(14), 2, Field::Q, 12), Error);
}
