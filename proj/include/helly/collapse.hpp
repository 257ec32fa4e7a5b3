#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "helly/complex.hpp"
#include "helly/error.hpp"
#include "helly/simplex.hpp"

namespace helly {

enum class CollapseMode { Standard, ExactD };

inline const char* collapse_mode_name(CollapseMode m) {
    return m == CollapseMode::Standard ? "standard" : "exact";
}

struct CollapseStep {
    Simplex free_face;
    Simplex max_face;

    bool operator==(const CollapseStep&) const = default;
};

/// Certificate of d-collapsibility: replaying the steps from the input
/// complex must satisfy the free-face and size conditions at every stage.
/// Standard mode ends at the void complex; exact mode uses free faces of
/// size exactly d and ends at a complex of dimension < d-1.
struct CollapseSequence {
    int d = 0;
    CollapseMode mode = CollapseMode::Standard;
    std::vector<CollapseStep> steps;
};

/// All pairs (σ, τ) where σ has at most max_size vertices and τ is the unique
/// facet containing σ. Sorted lexicographically by σ. ∅ is free exactly when
/// the complex has a single facet.
inline std::vector<std::pair<Simplex, Simplex>> free_faces(const SimplicialComplex& X,
                                                           int max_size) {
    std::vector<std::pair<Simplex, Simplex>> out;
    std::set<Simplex> seen;
    for (const Simplex& f : X.facets()) {
        for_each_subset_by_size(f.vertices(), [&](Simplex s) {
            if (s.size() > max_size) return false;
            seen.insert(std::move(s));
            return false;
        });
    }
    for (const Simplex& s : seen) {
        const Simplex* unique_facet = nullptr;
        int count = 0;
        for (const Simplex& f : X.facets()) {
            if (s.subset_of(f)) {
                ++count;
                if (count > 1) break;
                unique_facet = &f;
            }
        }
        if (count == 1) out.emplace_back(s, *unique_facet);
    }
    return out;
}

inline bool is_free_face(const SimplicialComplex& X, const Simplex& s, Simplex* facet_out = nullptr) {
    int count = 0;
    for (const Simplex& f : X.facets()) {
        if (s.subset_of(f)) {
            ++count;
            if (count > 1) return false;
            if (facet_out) *facet_out = f;
        }
    }
    return count == 1;
}

/// Remove the free face σ together with every face containing it; this is
/// exactly cost(X, σ).
inline SimplicialComplex elementary_collapse(const SimplicialComplex& X, const Simplex& sigma) {
    require(is_free_face(X, sigma), Errc::NotFreeFace, sigma.str() + " is not a free face");
    return costar(X, sigma);
}

struct CollapseBudget {
    int max_vertices = 12;
    std::size_t max_states = 5000;
};

struct CollapseSearchResult {
    std::optional<CollapseSequence> sequence; // present iff collapsible
    bool exhaustive = false;                  // search covered the whole tree
};

namespace detail {

inline bool collapse_done(const SimplicialComplex& X, int d, CollapseMode mode) {
    if (mode == CollapseMode::Standard) return X.is_void();
    return X.dim() < d - 1;
}

struct CollapseSearcher {
    int d;
    CollapseMode mode;
    CollapseBudget budget;
    std::unordered_set<std::string> dead; // canonical keys of refuted states
    std::vector<CollapseStep> steps;

    bool dfs(const SimplicialComplex& X) {
        if (collapse_done(X, d, mode)) return true;
        const std::string key = X.facet_key();
        if (dead.count(key)) return false;
        if (dead.size() >= budget.max_states)
            fail(Errc::BudgetExceeded,
                 "collapse search state budget " + std::to_string(budget.max_states) + " exhausted");
        for (auto& [sigma, tau] : free_faces(X, d)) {
            if (mode == CollapseMode::ExactD && sigma.size() != d) continue;
            steps.push_back({sigma, tau});
            if (dfs(costar(X, sigma))) return true;
            steps.pop_back();
        }
        dead.insert(key);
        return false;
    }
};

} // namespace detail

/// Complete backtracking search for a d-collapse certificate. Free faces are
/// explored in lexicographic order and refuted complexes are memoized, so the
/// result is deterministic and a negative answer is a proof by exhaustion.
/// Greedy free-face choice is not sufficient, hence the backtracking.
inline CollapseSearchResult find_d_collapse(const SimplicialComplex& X, int d,
                                            CollapseMode mode = CollapseMode::Standard,
                                            const CollapseBudget& budget = {}) {
    require(d >= 0, Errc::BadParams, "d must be nonnegative");
    require(X.num_vertices() <= budget.max_vertices, Errc::BudgetExceeded,
            "collapse search over " + std::to_string(X.num_vertices()) + " vertices");
    detail::CollapseSearcher s{d, mode, budget, {}, {}};
    if (s.dfs(X)) return {CollapseSequence{d, mode, std::move(s.steps)}, true};
    return {std::nullopt, true};
}

struct SequenceCheck {
    bool valid = false;
    /// Index of the first failing step; steps.size() when every step replays
    /// but the terminal condition fails. -1 when valid.
    int failed_step = -1;
};

/// Replay a certificate against X, checking the free-face condition, the size
/// bound for the mode, the recorded maximal face, and the terminal state.
inline SequenceCheck verify_sequence(const SimplicialComplex& X, const CollapseSequence& seq) {
    SimplicialComplex cur = X;
    for (size_t i = 0; i < seq.steps.size(); ++i) {
        const CollapseStep& st = seq.steps[i];
        const bool size_ok = seq.mode == CollapseMode::Standard ? st.free_face.size() <= seq.d
                                                                : st.free_face.size() == seq.d;
        Simplex facet;
        if (!size_ok || !is_free_face(cur, st.free_face, &facet) || facet != st.max_face)
            return {false, static_cast<int>(i)};
        cur = costar(cur, st.free_face);
    }
    if (!detail::collapse_done(cur, seq.d, seq.mode))
        return {false, static_cast<int>(seq.steps.size())};
    return {true, -1};
}

/// The complexes X = X_1, X_2, ..., X_{t+1} visited while replaying a valid
/// sequence (t = number of steps).
inline std::vector<SimplicialComplex> replay_states(const SimplicialComplex& X,
                                                    const CollapseSequence& seq) {
    std::vector<SimplicialComplex> states{X};
    for (const CollapseStep& st : seq.steps) states.push_back(costar(states.back(), st.free_face));
    return states;
}

} // namespace helly
