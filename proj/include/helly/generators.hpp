#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "helly/collapse.hpp"
#include "helly/complex.hpp"
#include "helly/geometry.hpp"
#include "helly/matroid.hpp"
#include "helly/rational.hpp"
#include "helly/rng.hpp"
#include "helly/simplex.hpp"
#include "helly/tverberg.hpp"

namespace helly {

inline Simplex random_subset(Rng& rng, int n, int size) {
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    rng.shuffle(pool);
    pool.resize(static_cast<size_t>(size));
    return Simplex(std::move(pool));
}

/// Random complex on `n` vertices given by random facets. Occasionally void
/// or {∅} so degenerate states stay covered.
inline SimplicialComplex random_complex(Rng& rng, int n, int max_facets, int max_facet_size) {
    if (rng.chance(1, 40)) return SimplicialComplex::void_complex(n);
    if (rng.chance(1, 40)) return SimplicialComplex::empty_complex(n);
    const int nf = static_cast<int>(rng.range(1, max_facets));
    std::vector<Simplex> fs;
    for (int i = 0; i < nf; ++i) {
        const int size = static_cast<int>(rng.range(1, std::min(n, max_facet_size)));
        fs.push_back(random_subset(rng, n, size));
    }
    return SimplicialComplex::from_facets(n, std::move(fs));
}

struct GeneratedCollapsible {
    SimplicialComplex complex;
    CollapseSequence certificate; // standard mode, free faces of size ≤ d
};

/// Build a d-collapsible complex by reverse elementary collapses: start from
/// the void complex, add a full simplex (reverse of the final ∅-collapse),
/// then repeatedly glue an interval [σ, τ] with σ ∉ X and τ∖{x} ∈ X for all
/// x ∈ σ — exactly the condition making σ a free face of τ afterwards.
/// Reversing the construction order yields a valid standard-mode certificate.
inline GeneratedCollapsible random_collapsible_complex(Rng& rng, int d, int n, int grow_steps) {
    require(d >= 1 && n >= 1, Errc::BadParams, "need d >= 1, n >= 1");
    std::vector<CollapseStep> rev;

    const int seed_size = static_cast<int>(rng.range(1, std::min(n, d + 2)));
    Simplex top = random_subset(rng, n, seed_size);
    SimplicialComplex X = SimplicialComplex::from_facets(n, {top});
    rev.push_back({Simplex{}, top});

    for (int step = 0; step < grow_steps; ++step) {
        bool applied = false;
        for (int attempt = 0; attempt < 30 && !applied; ++attempt) {
            const int ssize = static_cast<int>(rng.range(1, d));
            Simplex sigma = random_subset(rng, n, ssize);
            if (X.is_face(sigma)) continue;
            const int extra = static_cast<int>(rng.range(0, std::min(3, n - ssize)));
            std::vector<int> others;
            for (int v = 0; v < n; ++v)
                if (!sigma.contains(v)) others.push_back(v);
            rng.shuffle(others);
            others.resize(static_cast<size_t>(std::min<size_t>(others.size(), static_cast<size_t>(extra))));
            Simplex tau = sigma.unite(Simplex(std::move(others)));

            bool ok = true;
            for (int x : sigma)
                if (!X.is_face(tau.minus(x))) { ok = false; break; }
            if (!ok) continue;
            std::vector<Simplex> fs = X.facets();
            fs.push_back(tau);
            X = SimplicialComplex::from_facets(n, std::move(fs));
            rev.push_back({sigma, tau});
            applied = true;
        }
        if (!applied) break;
    }

    CollapseSequence seq{d, CollapseMode::Standard, {rev.rbegin(), rev.rend()}};
    return {std::move(X), std::move(seq)};
}

/// Random matroid of any kind; `kind` forces one, -1 draws one.
inline Matroid random_matroid(Rng& rng, int n, int kind = -1, bool allow_tolerance = true) {
    if (kind < 0) kind = static_cast<int>(rng.below(allow_tolerance ? 5 : 4));
    switch (kind) {
        case 0:
            return Matroid::uniform(n, static_cast<int>(rng.range(1, n)));
        case 1: {
            std::vector<int> perm(static_cast<size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            rng.shuffle(perm);
            const int nblocks = static_cast<int>(rng.range(1, n));
            std::vector<std::vector<int>> blocks(static_cast<size_t>(nblocks));
            for (int i = 0; i < n; ++i)
                blocks[static_cast<size_t>(i < nblocks ? i : rng.range(0, nblocks - 1))].push_back(perm[static_cast<size_t>(i)]);
            return Matroid::partition(n, std::move(blocks));
        }
        case 2: {
            const int dim = static_cast<int>(rng.range(1, std::max(1, n - 1)));
            std::vector<std::vector<Rational>> vectors;
            for (int i = 0; i < n; ++i) {
                std::vector<Rational> v;
                for (int c = 0; c < dim; ++c) v.emplace_back(rng.range(-3, 3));
                vectors.push_back(std::move(v));
            }
            return Matroid::linear(std::move(vectors));
        }
        case 3: {
            // Materialized family of a simpler random matroid.
            Matroid base = random_matroid(rng, n, static_cast<int>(rng.below(3)), false);
            std::vector<Simplex> fam;
            for_each_subset_by_size(base.ground().vertices(), [&](Simplex s) {
                if (base.is_independent(s)) fam.push_back(std::move(s));
                return false;
            });
            return Matroid::explicit_family(n, std::move(fam));
        }
        default: {
            Matroid base = random_matroid(rng, n, static_cast<int>(rng.below(4)), false);
            const int t = static_cast<int>(rng.range(0, base.rank_full()));
            return base.tolerance(t);
        }
    }
}

inline Matroid random_matroid_with_rank_at_least(Rng& rng, int n, int rmin, int max_tries = 200) {
    for (int i = 0; i < max_tries; ++i) {
        Matroid m = random_matroid(rng, n);
        if (m.rank_full() >= rmin) return m;
    }
    // Uniform matroids can always reach the target rank.
    return Matroid::uniform(n, rmin);
}

/// Random rational points; numerators in ±range, denominators in 1..max_den.
inline PointConfig random_points(Rng& rng, int dim, int count, int64_t range = 1000,
                                 int max_den = 4) {
    PointConfig A;
    A.dim = dim;
    for (int i = 0; i < count; ++i) {
        std::vector<Rational> c;
        for (int j = 0; j < dim; ++j)
            c.push_back(Rational(rng.range(-range, range), rng.range(1, max_den)));
        A.points.push_back(Point(std::move(c)));
    }
    return A;
}

/// Intervals on the line as 1-dimensional hulls, one color per body.
inline ColoredFamily random_interval_family(Rng& rng, int count, int64_t range = 100) {
    ColoredFamily f;
    f.dim = 1;
    for (int i = 0; i < count; ++i) {
        Rational a(rng.range(-range, range));
        Rational b(rng.range(-range, range));
        if (b < a) std::swap(a, b);
        f.bodies.push_back(ConvexBody::hull({Point({a}), Point({b})}));
        f.colors.push_back(i);
    }
    return f;
}

/// Axis-parallel boxes, one color per body.
inline ColoredFamily random_box_family(Rng& rng, int dim, int count, int64_t range = 100) {
    ColoredFamily f;
    f.dim = dim;
    for (int i = 0; i < count; ++i) {
        std::vector<Rational> lo, hi;
        for (int c = 0; c < dim; ++c) {
            Rational a(rng.range(-range, range));
            Rational b(rng.range(-range, range));
            if (b < a) std::swap(a, b);
            lo.push_back(std::move(a));
            hi.push_back(std::move(b));
        }
        f.bodies.push_back(ConvexBody::box(std::move(lo), std::move(hi)));
        f.colors.push_back(i);
    }
    return f;
}

} // namespace helly
