#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "helly/error.hpp"
#include "helly/simplex.hpp"

namespace helly {

/// Dimension value reported for the void complex (no faces at all). Any test
/// of the form dim(X) < d treats the void complex as collapsed past the end.
inline constexpr int kVoidDim = -2;

/// A finite abstract simplicial complex, stored by its maximal faces.
///
/// Two degenerate states are distinct: the *void* complex has no faces at all
/// (facet list empty) while the *empty* complex {∅} has exactly one facet, the
/// empty simplex. Downward closure is implicit: a simplex is a face iff it is
/// contained in some facet. Instances are immutable after construction.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(VertexSet vertices) {
        return SimplicialComplex(std::move(vertices), {});
    }

    static SimplicialComplex void_complex(int n_vertices) {
        return void_complex(ground(n_vertices));
    }

    static SimplicialComplex empty_complex(VertexSet vertices) {
        return SimplicialComplex(std::move(vertices), {Simplex{}});
    }

    static SimplicialComplex empty_complex(int n_vertices) {
        return empty_complex(ground(n_vertices));
    }

    /// Normalizing constructor: facets are deduplicated and reduced to the
    /// antichain of maximal ones. Every facet must live inside the vertex set.
    static SimplicialComplex from_facets(VertexSet vertices, std::vector<Simplex> facets) {
        for (const Simplex& f : facets)
            require(f.subset_of(vertices), Errc::InvalidVertex,
                    "facet " + f.str() + " not within vertex set");
        return SimplicialComplex(std::move(vertices), antichain(std::move(facets)));
    }

    static SimplicialComplex from_facets(int n_vertices, std::vector<Simplex> facets) {
        return from_facets(ground(n_vertices), std::move(facets));
    }

    /// The complete complex 2^V.
    static SimplicialComplex complete(VertexSet vertices) {
        Simplex top = vertices;
        return SimplicialComplex(std::move(vertices), {std::move(top)});
    }

    static SimplicialComplex complete(int n_vertices) { return complete(ground(n_vertices)); }

    bool is_void() const { return facets_.empty(); }
    bool is_empty_complex() const { return facets_.size() == 1 && facets_[0].is_empty(); }

    /// -2 (kVoidDim) for the void complex, -1 for {∅}, else max facet dimension.
    int dim() const {
        if (is_void()) return kVoidDim;
        int d = -1;
        for (const Simplex& f : facets_) d = std::max(d, f.dim());
        return d;
    }

    const VertexSet& vertex_set() const { return vertices_; }
    int num_vertices() const { return vertices_.size(); }
    const std::vector<Simplex>& facets() const { return facets_; }

    bool is_face(const Simplex& s) const {
        require(s.subset_of(vertices_), Errc::InvalidVertex,
                "simplex " + s.str() + " not within vertex set");
        for (const Simplex& f : facets_)
            if (s.subset_of(f)) return true;
        return false;
    }

    /// All faces of the given dimension, each once, in lexicographic order.
    std::vector<Simplex> faces(int dim, int vertex_budget = kDefaultFaceBudget) const {
        check_budget(vertex_budget);
        std::set<Simplex> out;
        for (const Simplex& f : facets_)
            for_each_subset_of_size(f.vertices(), dim + 1, [&](Simplex s) {
                out.insert(std::move(s));
                return false;
            });
        return {out.begin(), out.end()};
    }

    /// Every face (all dimensions, including ∅ when nonvoid), lexicographic.
    std::vector<Simplex> all_faces(int vertex_budget = kDefaultFaceBudget) const {
        check_budget(vertex_budget);
        std::set<Simplex> out;
        for (const Simplex& f : facets_)
            for_each_subset_by_size(f.vertices(), [&](Simplex s) {
                out.insert(std::move(s));
                return false;
            });
        return {out.begin(), out.end()};
    }

    std::string str() const {
        if (is_void()) return "void";
        std::string s;
        for (size_t i = 0; i < facets_.size(); ++i) {
            if (i) s += ' ';
            s += facets_[i].str();
        }
        return s;
    }

    /// Canonical key for memoization: vertex set is irrelevant to collapse
    /// search state, the sorted facet list determines the complex.
    std::string facet_key() const { return str(); }

    bool same_faces(const SimplicialComplex& o) const { return facets_ == o.facets_; }

    static constexpr int kDefaultFaceBudget = 20;

private:
    SimplicialComplex(VertexSet vertices, std::vector<Simplex> facets)
        : vertices_(std::move(vertices)), facets_(std::move(facets)) {}

    static VertexSet ground(int n) {
        require(n >= 0, Errc::BadParams, "negative vertex count");
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
        return VertexSet(std::move(v));
    }

    static std::vector<Simplex> antichain(std::vector<Simplex> fs) {
        std::sort(fs.begin(), fs.end());
        fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
        std::vector<Simplex> keep;
        for (size_t i = 0; i < fs.size(); ++i) {
            bool dominated = false;
            for (size_t j = 0; j < fs.size() && !dominated; ++j)
                if (i != j && fs[i].subset_of(fs[j]) && fs[i] != fs[j]) dominated = true;
            if (!dominated) keep.push_back(fs[i]);
        }
        return keep;
    }

    void check_budget(int vertex_budget) const {
        require(num_vertices() <= vertex_budget, Errc::BudgetExceeded,
                "face enumeration over " + std::to_string(num_vertices()) +
                    " vertices exceeds budget " + std::to_string(vertex_budget));
    }

    VertexSet vertices_;
    std::vector<Simplex> facets_; // sorted antichain; empty ⇔ void complex
};

/// X[U] = {σ ∈ X : σ ⊆ U}, a complex on vertex set U.
inline SimplicialComplex induced(const SimplicialComplex& X, const VertexSet& U) {
    require(U.subset_of(X.vertex_set()), Errc::InvalidVertex, "U not within vertex set");
    if (X.is_void()) return SimplicialComplex::void_complex(U);
    std::vector<Simplex> fs;
    fs.reserve(X.facets().size());
    for (const Simplex& f : X.facets()) fs.push_back(f.intersect(U));
    return SimplicialComplex::from_facets(U, std::move(fs));
}

/// lk(X,σ) = {τ : σ∩τ=∅, σ∪τ ∈ X} on vertex set V∖σ.
inline SimplicialComplex link(const SimplicialComplex& X, const Simplex& sigma) {
    require(X.is_face(sigma), Errc::NotAFace, sigma.str() + " is not a face");
    std::vector<Simplex> fs;
    for (const Simplex& f : X.facets())
        if (sigma.subset_of(f)) fs.push_back(f.minus(sigma));
    return SimplicialComplex::from_facets(X.vertex_set().minus(sigma), std::move(fs));
}

/// cost(X,σ) = {τ ∈ X : σ ⊄ τ}. For σ=∅ this is the void complex.
inline SimplicialComplex costar(const SimplicialComplex& X, const Simplex& sigma) {
    std::vector<Simplex> fs;
    for (const Simplex& f : X.facets()) {
        if (!sigma.subset_of(f)) {
            fs.push_back(f);
        } else {
            // Maximal subsets of f avoiding σ: drop one vertex of σ at a time.
            for (int v : sigma) fs.push_back(f.minus(v));
        }
    }
    return SimplicialComplex::from_facets(X.vertex_set(), std::move(fs));
}

/// Join of complexes on disjoint vertex sets: facets are pairwise unions.
inline SimplicialComplex join(const SimplicialComplex& X, const SimplicialComplex& Y) {
    require(X.vertex_set().disjoint_from(Y.vertex_set()), Errc::OverlappingVertexSets,
            "join requires disjoint vertex sets");
    VertexSet verts = X.vertex_set().unite(Y.vertex_set());
    if (X.is_void() || Y.is_void()) return SimplicialComplex::void_complex(verts);
    std::vector<Simplex> fs;
    for (const Simplex& a : X.facets())
        for (const Simplex& b : Y.facets()) fs.push_back(a.unite(b));
    return SimplicialComplex::from_facets(std::move(verts), std::move(fs));
}

/// ∂2^B: all proper subsets of B. For |B|=1 this is the empty complex {∅}.
inline SimplicialComplex boundary_complex(const VertexSet& B) {
    require(B.size() >= 1, Errc::EmptyGround, "boundary complex needs a nonempty vertex set");
    std::vector<Simplex> fs;
    for (int v : B) fs.push_back(B.minus(v));
    return SimplicialComplex::from_facets(B, std::move(fs));
}

} // namespace helly
