#include <catch2/catch_amalgamated.hpp>

#include "helly/collapse.hpp"
#include "helly/complex.hpp"
#include "helly/generators.hpp"
#include "helly/homology.hpp"
#include "helly/rng.hpp"

using namespace helly;

TEST_CASE("free faces") {
    auto T = SimplicialComplex::complete(3);
    auto ff = free_faces(T, 1);
    // ∅ and every vertex are free, all inside the single facet.
    REQUIRE(ff.size() == 4);
    CHECK(ff[0].first == Simplex{});
    CHECK(ff[0].second == Simplex{0, 1, 2});
    CHECK(ff[1].first == Simplex{0});

    auto H = boundary_complex(Simplex{0, 1, 2});
    CHECK(free_faces(H, 1).empty()); // every vertex lies in two edges

    auto P = SimplicialComplex::from_facets(3, {Simplex{0, 1}, Simplex{1, 2}});
    auto ffp = free_faces(P, 1);
    REQUIRE(ffp.size() == 2);
    CHECK(ffp[0] == std::make_pair(Simplex{0}, Simplex{0, 1}));
    CHECK(ffp[1] == std::make_pair(Simplex{2}, Simplex{1, 2}));
}

TEST_CASE("elementary collapse") {
    auto T = SimplicialComplex::complete(3);
    auto C = elementary_collapse(T, Simplex{0});
    REQUIRE(C.facets().size() == 1);
    CHECK(C.facets()[0] == Simplex{1, 2});

    auto P = SimplicialComplex::from_facets(3, {Simplex{0, 1}, Simplex{1, 2}});
    CHECK(elementary_collapse(P, Simplex{0}).facets()[0] == Simplex{1, 2});
    CHECK_THROWS_AS(elementary_collapse(P, Simplex{1}), Error);

    auto E = SimplicialComplex::empty_complex(2);
    CHECK(elementary_collapse(E, Simplex{}).is_void());
}

TEST_CASE("collapse search") {
    CHECK(find_d_collapse(SimplicialComplex::complete(3), 1).sequence.has_value());

    auto H = boundary_complex(Simplex{0, 1, 2});
    auto r1 = find_d_collapse(H, 1);
    CHECK_FALSE(r1.sequence.has_value());
    CHECK(r1.exhaustive);
    CHECK(find_d_collapse(H, 2).sequence.has_value());

    // exact-d mode terminates below dimension d-1 with free faces of size d.
    auto e = find_d_collapse(SimplicialComplex::complete(3), 1, CollapseMode::ExactD);
    REQUIRE(e.sequence.has_value());
    for (const CollapseStep& st : e.sequence->steps) CHECK(st.free_face.size() == 1);
    CHECK(verify_sequence(SimplicialComplex::complete(3), *e.sequence).valid);
}

TEST_CASE("verify sequence rejects tampering") {
    auto T = SimplicialComplex::complete(3);
    auto res = find_d_collapse(T, 1, CollapseMode::ExactD);
    REQUIRE(res.sequence.has_value());
    CHECK(verify_sequence(T, *res.sequence).valid);

    CollapseSequence bad = *res.sequence;
    bad.steps.insert(bad.steps.begin(), {Simplex{0, 1}, Simplex{0, 1, 2}});
    auto chk = verify_sequence(T, bad);
    CHECK_FALSE(chk.valid);
    CHECK(chk.failed_step == 0); // size 2 free face in an exact-1 sequence

    CollapseSequence trunc = *res.sequence;
    trunc.mode = CollapseMode::Standard;
    auto chk2 = verify_sequence(T, trunc);
    CHECK_FALSE(chk2.valid); // does not reach the void complex
    CHECK(chk2.failed_step == static_cast<int>(trunc.steps.size()));
}

TEST_CASE("reverse-collapse generator round trip") {
    Rng rng(3);
    for (int i = 0; i < 25; ++i) {
        const int d = 1 + static_cast<int>(rng.below(2));
        GeneratedCollapsible gen = random_collapsible_complex(rng, d, 6, 5);
        CHECK(verify_sequence(gen.complex, gen.certificate).valid);
    }
}

TEST_CASE("normal form equivalence on small random complexes") {
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
        SimplicialComplex X = random_complex(rng, 3 + i % 4, 6, 3);
        const int d = 1 + i % 3;
        const bool std_ok = find_d_collapse(X, d).sequence.has_value();
        const bool exact_ok = find_d_collapse(X, d, CollapseMode::ExactD).sequence.has_value();
        CHECK(std_ok == exact_ok);
    }
}

TEST_CASE("monotonicity in d") {
    Rng rng(23);
    for (int i = 0; i < 40; ++i) {
        SimplicialComplex X = random_complex(rng, 5, 5, 4);
        for (int d = 1; d <= 3; ++d) {
            if (find_d_collapse(X, d).sequence.has_value())
                CHECK(find_d_collapse(X, d + 1).sequence.has_value());
        }
    }
}

TEST_CASE("every complex on n vertices is n-collapsible") {
    Rng rng(29);
    for (int i = 0; i < 30; ++i) {
        const int n = 3 + i % 4; // up to 6
        SimplicialComplex X = random_complex(rng, n, n + 2, n);
        CHECK(find_d_collapse(X, n).sequence.has_value());
    }
}

TEST_CASE("collapsible implies leray") {
    Rng rng(31);
    for (int i = 0; i < 25; ++i) {
        const int d = 1 + static_cast<int>(rng.below(2));
        GeneratedCollapsible gen = random_collapsible_complex(rng, d, 6, 4);
        CHECK(is_d_leray_induced(gen.complex, d).is_leray);
    }
}

TEST_CASE("search budget surfaces as an error") {
    CHECK_THROWS_AS(find_d_collapse(SimplicialComplex::complete(13), 1), Error);
    // A full triangle next to a hollow one: the search walks through several
    // refuted states before giving up, tripping a one-state memo budget.
    CollapseBudget tiny{12, 1};
    auto X = SimplicialComplex::from_facets(
        6, {Simplex{0, 1, 2}, Simplex{3, 4}, Simplex{3, 5}, Simplex{4, 5}});
    CHECK_THROWS_AS(find_d_collapse(X, 1, CollapseMode::Standard, tiny), Error);
}
