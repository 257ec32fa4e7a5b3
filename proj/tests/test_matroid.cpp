#include <catch2/catch_amalgamated.hpp>

#include "helly/generators.hpp"
#include "helly/matroid.hpp"
#include "helly/oracles.hpp"
#include "helly/rng.hpp"

using namespace helly;

namespace {

// Rank axioms by full enumeration: normalization, unit increase,
// monotonicity, submodularity.
bool rank_axioms_hold(const Matroid& m) {
    const int n = m.num_elements();
    const std::vector<int> table = oracle::rank_table(m);
    if (table[0] != 0) return false;
    for (unsigned a = 0; a < (1u << n); ++a) {
        for (int i = 0; i < n; ++i) {
            if (a & (1u << i)) continue;
            const int grow = table[a | (1u << i)] - table[a];
            if (grow < 0 || grow > 1) return false;
        }
        for (unsigned b = 0; b < (1u << n); ++b)
            if (table[a | b] + table[a & b] > table[a] + table[b]) return false;
    }
    return true;
}

} // namespace

TEST_CASE("rank per kind") {
    Matroid u = Matroid::uniform(4, 2);
    CHECK(u.rank(u.ground()) == 2);
    CHECK(u.rank(Simplex{0}) == 1);

    Matroid p = Matroid::partition(5, {{0, 1}, {2}, {3, 4}});
    CHECK(p.rank(Simplex{0, 1, 2}) == 2);
    CHECK(p.rank_full() == 3);

    Matroid t = Matroid::uniform(4, 2).tolerance(1);
    CHECK(t.rank(t.ground()) == 3); // min(4, 2+1)

    Matroid l = Matroid::linear({{Rational(1), Rational(0)},
                                 {Rational(0), Rational(1)},
                                 {Rational(1), Rational(1)}});
    CHECK(l.rank_full() == 2);
    CHECK(l.rank(Simplex{0, 2}) == 2);
    CHECK(l.rank(Simplex{0}) == 1);

    CHECK_THROWS_AS(u.rank(Simplex{9}), Error);
}

TEST_CASE("independence") {
    Matroid base = Matroid::partition(4, {{0, 1}, {2, 3}});
    Matroid t0 = base.tolerance(0);
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<int> v;
        for (int i = 0; i < 4; ++i)
            if (mask & (1u << i)) v.push_back(i);
        Simplex s(std::move(v));
        CHECK(t0.is_independent(s) == base.is_independent(s));
    }
    Matroid t1 = base.tolerance(1);
    CHECK(t1.is_independent(Simplex{0, 1, 2}));       // rank 2 >= 3-1
    CHECK_FALSE(t1.is_independent(Simplex{0, 1, 2, 3})); // rank 2 < 4-1
}

TEST_CASE("span") {
    Matroid p = Matroid::partition(3, {{0, 1}, {2}});
    CHECK(p.span(Simplex{0}) == Simplex{0, 1});

    Matroid u = Matroid::uniform(4, 2);
    CHECK(u.span(Simplex{0, 1}) == Simplex{0, 1, 2, 3});

    Matroid l = Matroid::linear({{Rational(1)}, {Rational(2)}, {Rational(0)}});
    CHECK(l.span(Simplex{}) == Simplex{2}); // the zero vector is a loop
    Matroid loopless = Matroid::uniform(3, 2);
    CHECK(loopless.span(Simplex{}) == Simplex{});
}

TEST_CASE("tolerance construction") {
    Matroid u = Matroid::uniform(4, 2);
    CHECK_THROWS_AS(u.tolerance(3), Error);
    CHECK_THROWS_AS(u.tolerance(-1), Error);
    for (int n = 2; n <= 5; ++n)
        for (int r = 1; r <= n; ++r)
            for (int t = 0; t <= r; ++t)
                CHECK(Matroid::uniform(n, r).tolerance(t).rank_full() == std::min(n, r + t));

    // A loop becomes independent at tolerance 1.
    Matroid l = Matroid::linear({{Rational(0)}, {Rational(1)}});
    CHECK_FALSE(l.is_independent(Simplex{0}));
    CHECK(l.tolerance(1).is_independent(Simplex{0}));
}

TEST_CASE("matroid union rank") {
    Matroid m1 = Matroid::uniform(3, 1); // three parallel elements
    CHECK(matroid_union_rank(m1, m1, m1.ground()) == 2);

    Matroid any = Matroid::partition(4, {{0, 1}, {2, 3}});
    Matroid free_m = Matroid::uniform(4, 4);
    CHECK(matroid_union_rank(any, free_m, any.ground()) == 4);

    // Union with a uniform matroid of rank t is the tolerance matroid.
    Rng rng(41);
    for (int i = 0; i < 20; ++i) {
        const int n = 3 + static_cast<int>(rng.below(4));
        Matroid M = random_matroid(rng, n, static_cast<int>(rng.below(4)), false);
        for (int t = 0; t <= M.rank_full(); ++t) {
            Matroid Mt = M.tolerance(t);
            Matroid Ut = Matroid::uniform(n, t);
            for (int rep = 0; rep < 8; ++rep) {
                Simplex A = random_subset(rng, n, static_cast<int>(rng.range(0, n)));
                CHECK(matroid_union_rank(M, Ut, A) == Mt.rank(A));
            }
        }
    }
}

TEST_CASE("axiom checking") {
    Matroid t = Matroid::uniform(4, 2).tolerance(1);
    std::vector<Simplex> fam;
    for_each_subset_by_size(t.ground().vertices(), [&](Simplex s) {
        if (t.is_independent(s)) fam.push_back(std::move(s));
        return false;
    });
    CHECK(check_matroid_axioms(4, fam).ok);

    // Not downward closed: {0,1} without {1}.
    AxiomCheck broken =
        check_matroid_axioms(2, {Simplex{}, Simplex{0}, Simplex{0, 1}});
    CHECK_FALSE(broken.ok);
    CHECK(broken.violation == "not downward closed");

    // Forests of a triangle graph: every proper subset of the three edges.
    AxiomCheck graphic = check_matroid_axioms(
        3, {Simplex{}, Simplex{0}, Simplex{1}, Simplex{2}, Simplex{0, 1}, Simplex{0, 2},
            Simplex{1, 2}});
    CHECK(graphic.ok);

    // Exchange failure: two maximal sets of different sizes.
    AxiomCheck exch = check_matroid_axioms(3, {Simplex{}, Simplex{0}, Simplex{1}, Simplex{2},
                                               Simplex{1, 2}});
    CHECK_FALSE(exch.ok);
    CHECK(exch.violation == "exchange fails");
}

TEST_CASE("tolerance family is a matroid") {
    Rng rng(43);
    for (int i = 0; i < 25; ++i) {
        const int n = 3 + static_cast<int>(rng.below(5)); // up to 7
        Matroid M = random_matroid(rng, n, static_cast<int>(rng.below(4)), false);
        for (int t = 0; t <= M.rank_full(); ++t)
            CHECK(check_matroid_axioms(n, tolerance_family(M, t)).ok);
    }
}

TEST_CASE("tolerance composes additively") {
    // Wrapping twice equals one wrap at the summed tolerance: both sides have
    // rank min(|A|, rank(A)+s+t) on every subset.
    Rng rng(151);
    for (int i = 0; i < 20; ++i) {
        const int n = 3 + static_cast<int>(rng.below(4));
        Matroid M = random_matroid(rng, n, static_cast<int>(rng.below(4)), false);
        const int s = static_cast<int>(rng.range(0, M.rank_full()));
        Matroid Ms = M.tolerance(s);
        const int t = static_cast<int>(rng.range(0, Ms.rank_full() - s >= 0 ? Ms.rank_full() - s : 0));
        if (s + t > M.rank_full()) continue;
        Matroid nested = Ms.tolerance(t);
        Matroid flat = M.tolerance(s + t);
        for (int rep = 0; rep < 20; ++rep) {
            Simplex A = random_subset(rng, n, static_cast<int>(rng.range(0, n)));
            CHECK(nested.rank(A) == flat.rank(A));
        }
    }
}

TEST_CASE("span is a closure operator") {
    Rng rng(157);
    for (int i = 0; i < 25; ++i) {
        const int n = 3 + static_cast<int>(rng.below(4));
        Matroid M = random_matroid(rng, n);
        Simplex U = random_subset(rng, n, static_cast<int>(rng.range(0, n)));
        VertexSet sp = M.span(U);
        CHECK(U.subset_of(sp));
        CHECK(M.span(sp) == sp);
        CHECK(M.rank(sp) == M.rank(U));
    }
}

TEST_CASE("rank axioms on random matroids") {
    Rng rng(47);
    for (int i = 0; i < 30; ++i) {
        const int n = 3 + static_cast<int>(rng.below(4)); // up to 6
        CHECK(rank_axioms_hold(random_matroid(rng, n)));
    }
}

TEST_CASE("partition matroid validation") {
    CHECK_THROWS_AS(Matroid::partition(3, {{0, 1}}), Error);          // uncovered element
    CHECK_THROWS_AS(Matroid::partition(3, {{0, 1}, {1, 2}}), Error);  // overlap
    CHECK_THROWS_AS(Matroid::uniform(3, 4), Error);
}
