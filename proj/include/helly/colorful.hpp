#pragma once

#include <optional>
#include <vector>

#include "helly/error.hpp"
#include "helly/geometry.hpp"
#include "helly/matroid.hpp"
#include "helly/theorems.hpp"

namespace helly {

struct ColorfulHellyResult {
    bool hypothesis_holds = false;
    /// On failure: the offending d+m bodies and the d of them with no
    /// intersecting completion.
    std::optional<Simplex> bad_subfamily;
    std::optional<Simplex> bad_core;
    /// On success: ≥ r-k+1 color classes whose union is intersecting, the
    /// intersecting subfamily τ containing them, and a common point of τ.
    std::vector<int> classes;
    std::vector<int> tau;
    std::optional<Point> common_point;
};

/// Geometric colorful Helly: build the nerve and the partition matroid of the
/// coloring, check the collapsible-theorem hypothesis on them, and extract
/// r-k+1 color classes whose union is intersecting from a witness face whose
/// complement meets at most k-1 classes.
inline ColorfulHellyResult colorful_helly(const ColoredFamily& family, int d, int m, int k,
                                          int nerve_budget = 12) {
    family.validate();
    require(d == family.dim, Errc::DimensionMismatch,
            "parameter d must match the ambient dimension");
    const int r = family.num_colors();
    validate_parameters(d, r, m, k, family.size());

    NerveResult nv = nerve(family, nerve_budget);
    std::vector<std::vector<int>> blocks(static_cast<size_t>(r));
    for (int i = 0; i < family.size(); ++i)
        blocks[static_cast<size_t>(family.colors[static_cast<size_t>(i)])].push_back(i);
    Matroid M = Matroid::partition(family.size(), std::move(blocks));

    HypothesisReport hyp = hypothesis_collapsible(nv.complex, M, d, m, k);
    if (!hyp.holds) return {false, hyp.bad_U, hyp.bad_S, {}, {}, std::nullopt};

    // The nerve is d-collapsible (Wegner), so the witness exists.
    std::optional<Witness> w = find_witness(nv.complex, M, m, k, /*require_rank_clause=*/false);
    require(w.has_value(), Errc::HypothesisViolated,
            "no witness face despite a holding hypothesis");

    ColorfulHellyResult res;
    res.hypothesis_holds = true;
    res.tau = w->tau.vertices();
    for (int c = 0; c < r; ++c) {
        bool contained = true;
        for (int i = 0; i < family.size() && contained; ++i)
            if (family.colors[static_cast<size_t>(i)] == c && !w->tau.contains(i)) contained = false;
        if (contained) res.classes.push_back(c);
    }
    require(static_cast<int>(res.classes.size()) >= r - k + 1, Errc::HypothesisViolated,
            "witness complement meets more than k-1 classes");

    std::vector<ConvexBody> union_bodies;
    for (int i = 0; i < family.size(); ++i)
        for (int c : res.classes)
            if (family.colors[static_cast<size_t>(i)] == c) union_bodies.push_back(family.bodies[static_cast<size_t>(i)]);
    IntersectionResult ir = bodies_intersect(union_bodies, family.dim);
    require(ir.intersecting, Errc::HypothesisViolated, "selected color classes do not intersect");
    res.common_point = ir.common_point;
    return res;
}

} // namespace helly
