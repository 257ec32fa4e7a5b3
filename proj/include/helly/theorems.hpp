#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "helly/collapse.hpp"
#include "helly/complex.hpp"
#include "helly/error.hpp"
#include "helly/homology.hpp"
#include "helly/matroid.hpp"
#include "helly/simplex.hpp"

namespace helly {

/// Parameter regime shared by the colorful Helly extensions:
/// d ≥ 1, r ≥ d+1, 1 ≤ m ≤ r, m ≤ k ≤ min{m+d, r}, |V| ≥ max{m+d, r}.
/// Throws ParameterViolation naming the first failed inequality.
inline void validate_parameters(int d, int r, int m, int k, int n_vertices) {
    require(d >= 1, Errc::ParameterViolation, "d >= 1 fails (d=" + std::to_string(d) + ")");
    require(r >= d + 1, Errc::ParameterViolation,
            "r >= d+1 fails (r=" + std::to_string(r) + ", d=" + std::to_string(d) + ")");
    require(1 <= m && m <= r, Errc::ParameterViolation,
            "1 <= m <= r fails (m=" + std::to_string(m) + ", r=" + std::to_string(r) + ")");
    require(m <= k && k <= std::min(m + d, r), Errc::ParameterViolation,
            "m <= k <= min{m+d, r} fails (k=" + std::to_string(k) + ")");
    require(n_vertices >= std::max(m + d, r), Errc::ParameterViolation,
            "|V| >= max{m+d, r} fails (|V|=" + std::to_string(n_vertices) + ")");
}

struct HypothesisReport {
    bool holds = true;
    // Lexicographically smallest counterexample: the (d+m)-set U of rank ≥ k
    // and the subset of U witnessing the failure.
    std::optional<Simplex> bad_U;
    std::optional<Simplex> bad_S;
};

/// Hypothesis of the d-collapsible theorem, read over all labelings: every
/// U ⊆ V with |U| = d+m and ρ(U) ≥ k must, for every d-subset S ⊂ U, contain
/// some v ∈ U∖S with S ∪ {v} ∈ X.
inline HypothesisReport hypothesis_collapsible(const SimplicialComplex& X, const Matroid& M,
                                               int d, int m, int k) {
    validate_parameters(d, M.rank_full(), m, k, X.num_vertices());
    HypothesisReport rep;
    for_each_subset_of_size(X.vertex_set().vertices(), d + m, [&](Simplex U) {
        if (M.rank(U) < k) return false;
        return for_each_subset_of_size(U.vertices(), d, [&](Simplex S) {
            for (int v : U.minus(S))
                if (X.is_face(S.with(v))) return false;
            rep = {false, U, S};
            return true;
        });
    });
    return rep;
}

/// Hypothesis of the d-Leray theorem, read over all labelings: for every
/// qualifying U and every (d+1)-subset T ⊂ U, either T ∈ X or some
/// v ∈ U∖T satisfies σ ∪ {v} ∈ X for every proper σ ⊊ T.
inline HypothesisReport hypothesis_leray(const SimplicialComplex& X, const Matroid& M,
                                         int d, int m, int k) {
    validate_parameters(d, M.rank_full(), m, k, X.num_vertices());
    HypothesisReport rep;
    for_each_subset_of_size(X.vertex_set().vertices(), d + m, [&](Simplex U) {
        if (M.rank(U) < k) return false;
        return for_each_subset_of_size(U.vertices(), d + 1, [&](Simplex T) {
            if (X.is_face(T)) return false;
            for (int v : U.minus(T)) {
                bool all_proper = true;
                for_each_subset_by_size(T.vertices(), [&](Simplex s) {
                    if (s.size() == T.size()) return false;
                    if (!X.is_face(s.with(v))) { all_proper = false; return true; }
                    return false;
                });
                if (all_proper) return false;
            }
            rep = {false, U, T};
            return true;
        });
    });
    return rep;
}

/// The stronger, symmetric condition: every qualifying U has at most m-1
/// non-face (d+1)-subsets. Implies the Leray hypothesis, which implies the
/// collapsible one; all three coincide when m ≤ 2.
inline HypothesisReport hypothesis_strong(const SimplicialComplex& X, const Matroid& M,
                                          int d, int m, int k) {
    validate_parameters(d, M.rank_full(), m, k, X.num_vertices());
    HypothesisReport rep;
    for_each_subset_of_size(X.vertex_set().vertices(), d + m, [&](Simplex U) {
        if (M.rank(U) < k) return false;
        int missing = 0;
        Simplex first_missing;
        for_each_subset_of_size(U.vertices(), d + 1, [&](Simplex T) {
            if (!X.is_face(T)) {
                if (missing == 0) first_missing = T;
                ++missing;
            }
            return false;
        });
        if (missing > m - 1) {
            rep = {false, U, first_missing};
            return true;
        }
        return false;
    });
    return rep;
}

struct Witness {
    Simplex tau;
    int rank_tau = 0;
    int rank_complement = 0;
};

/// Scan all faces of X (lexicographically, smallest first) for one satisfying
/// the conclusion: ρ(V∖τ) ≤ k-1 and, when require_rank_clause is set, also
/// ρ(τ) ≥ r+1-m. Returns the first hit.
inline std::optional<Witness> find_witness(const SimplicialComplex& X, const Matroid& M,
                                           int m, int k, bool require_rank_clause,
                                           int vertex_budget = SimplicialComplex::kDefaultFaceBudget) {
    const int r = M.rank_full();
    const VertexSet V = X.vertex_set();
    for (const Simplex& tau : X.all_faces(vertex_budget)) {
        const int rc = M.rank(V.minus(tau));
        if (rc > k - 1) continue;
        const int rt = M.rank(tau);
        if (require_rank_clause && rt < r + 1 - m) continue;
        return Witness{tau, rt, rc};
    }
    return std::nullopt;
}

/// Constructive witness extraction replaying the d-collapsible proof on an
/// exact-d collapse certificate.
///
/// It forms R = {η ∈ X : |η| ≥ d+1, ρ(η) ≥ k-m-d+|η|} (the faces that are
/// also in the tolerance complex M^{d+m-k}), finds the last collapse state
/// X_n still containing all of R, takes the free face σ and its unique
/// maximal face τ at that step, grows a maximal η with σ∪η ∈ M^{d+m-k} and
/// σ∪{u} ∉ X_n for all u ∈ η, and returns τ. The proof's bookkeeping is
/// asserted along the way: |η| ≤ m-1, ρ(τ∪η) = r, and the two conclusion
/// inequalities; any failure surfaces as HypothesisViolated.
inline Witness extract_witness_from_collapse(const SimplicialComplex& X,
                                             const CollapseSequence& seq, const Matroid& M,
                                             int d, int m, int k,
                                             int vertex_budget = SimplicialComplex::kDefaultFaceBudget) {
    const int r = M.rank_full();
    validate_parameters(d, r, m, k, X.num_vertices());
    require(seq.mode == CollapseMode::ExactD && seq.d == d, Errc::BadParams,
            "extraction needs an exact-d certificate for the same d");
    require(verify_sequence(X, seq).valid, Errc::BadParams, "invalid collapse certificate");

    const int t = d + m - k; // tolerance level of the proof
    auto in_tolerance = [&](const Simplex& s) { return M.rank(s) >= s.size() - t; };

    std::vector<Simplex> R;
    for (const Simplex& eta : X.all_faces(vertex_budget))
        if (eta.size() >= d + 1 && in_tolerance(eta)) R.push_back(eta);
    require(!R.empty(), Errc::HypothesisViolated, "R is empty: hypothesis cannot hold");

    // First step whose free face is contained in some member of R; since no
    // member was removed earlier, this is the largest n with R ⊆ X_n.
    SimplicialComplex Xn = X;
    std::optional<CollapseStep> hit;
    for (const CollapseStep& st : seq.steps) {
        for (const Simplex& eta : R)
            if (st.free_face.subset_of(eta)) { hit = st; break; }
        if (hit) break;
        Xn = costar(Xn, st.free_face);
    }
    require(hit.has_value(), Errc::HypothesisViolated,
            "R survived the whole collapse; certificate inconsistent");
    const Simplex sigma = hit->free_face;
    const Simplex tau = hit->max_face;
    require(in_tolerance(sigma), Errc::HypothesisViolated,
            "free face escaped the tolerance complex");

    // Greedy maximal η: independence in M^t is downward closed, so an element
    // rejected now would be rejected against any superset as well.
    Simplex eta;
    for (int v : X.vertex_set().minus(sigma)) {
        if (Xn.is_face(sigma.with(v))) continue;
        if (in_tolerance(sigma.unite(eta).with(v))) eta = eta.with(v);
    }

    require(eta.size() <= m - 1, Errc::HypothesisViolated,
            "maximal eta " + eta.str() + " has size > m-1: the hypothesis fails");
    require(M.rank(tau.unite(eta)) == r, Errc::HypothesisViolated,
            "rank of tau ∪ eta is not full");

    Witness w{tau, M.rank(tau), M.rank(X.vertex_set().minus(tau))};
    require(w.rank_tau >= r + 1 - m, Errc::HypothesisViolated,
            "extracted witness violates rank(tau) >= r+1-m");
    require(w.rank_complement <= k - 1, Errc::HypothesisViolated,
            "extracted witness violates rank(V \\ tau) <= k-1");
    return w;
}

struct KmVerdict {
    bool hypothesis_held = false;
    bool conclusion_verified = false;
    // The face violating the hypothesis, or the independent non-face found.
    std::optional<Simplex> witness;
};

/// The Kalai–Meshulam criterion: if ρ(V∖σ) ≥ ℓ_σ + 1 for every face σ, then
/// some independent set of M is not a face of X. Both sides are evaluated by
/// enumeration.
inline KmVerdict check_km_lemma(const SimplicialComplex& X, const Matroid& M,
                                Field f = Field::Q,
                                int vertex_budget = SimplicialComplex::kDefaultFaceBudget) {
    const VertexSet V = X.vertex_set();
    for (const Simplex& s : X.all_faces(vertex_budget)) {
        if (M.rank(V.minus(s)) < ell_sigma(X, s, f, vertex_budget) + 1)
            return {false, false, s};
    }
    KmVerdict verdict{true, false, std::nullopt};
    for_each_subset_by_size(M.ground().vertices(), [&](Simplex I) {
        if (!M.is_independent(I)) return false;
        if (!I.subset_of(V) || !X.is_face(I)) {
            verdict.conclusion_verified = true;
            verdict.witness = I;
            return true;
        }
        return false;
    });
    return verdict;
}

/// Helly property of d-Leray complexes: if every (d+1)-subset of U is a face,
/// then U itself must be one. Returns the outcome of that assertion (true
/// vacuously when some (d+1)-subset is missing). Verifies d-Lerayness first
/// unless the caller passes assume_leray.
inline bool helly_for_leray(const SimplicialComplex& X, int d, const VertexSet& U,
                            bool assume_leray = false, int leray_budget = 12) {
    require(U.size() >= d + 1, Errc::ParameterViolation, "|U| >= d+1 required");
    if (!assume_leray)
        require(is_d_leray_induced(X, d, Field::Q, leray_budget).is_leray, Errc::NotDLeray,
                "complex is not d-Leray");
    bool all_faces = true;
    for_each_subset_of_size(U.vertices(), d + 1, [&](Simplex S) {
        if (!X.is_face(S)) { all_faces = false; return true; }
        return false;
    });
    if (!all_faces) return true;
    return X.is_face(U);
}

} // namespace helly
