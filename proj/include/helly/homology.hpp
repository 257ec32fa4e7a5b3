#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "helly/complex.hpp"
#include "helly/error.hpp"
#include "helly/simplex.hpp"

namespace helly {

using BigInt = boost::multiprecision::cpp_int;

enum class Field { Q, F2 };

/// Dense signed boundary matrix; entries live in {-1,0,+1}.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int8_t> a; // row-major

    int8_t& at(int r, int c) { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
    int8_t at(int r, int c) const { return a[static_cast<size_t>(r) * static_cast<size_t>(cols) + static_cast<size_t>(c)]; }
};

/// Rank over the rationals by fraction-free (Bareiss) elimination. Entries are
/// promoted to arbitrary-precision integers so the computation is exact.
inline int rank_q(const IntMatrix& m) {
    std::vector<std::vector<BigInt>> w(static_cast<size_t>(m.rows),
                                       std::vector<BigInt>(static_cast<size_t>(m.cols)));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) w[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);

    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (w[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(w[static_cast<size_t>(pivot)], w[static_cast<size_t>(rank)]);
        const BigInt& p = w[static_cast<size_t>(rank)][static_cast<size_t>(col)];
        for (int r = rank + 1; r < m.rows; ++r) {
            BigInt f = w[static_cast<size_t>(r)][static_cast<size_t>(col)];
            for (int c = col; c < m.cols; ++c) {
                w[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    (p * w[static_cast<size_t>(r)][static_cast<size_t>(c)] -
                     f * w[static_cast<size_t>(rank)][static_cast<size_t>(c)]) /
                    prev;
            }
        }
        prev = p;
        ++rank;
    }
    return rank;
}

/// Rank over the two-element field; rows packed into 64-bit words.
inline int rank_f2(const IntMatrix& m) {
    const int words = (m.cols + 63) / 64;
    std::vector<std::vector<uint64_t>> w(static_cast<size_t>(m.rows),
                                         std::vector<uint64_t>(static_cast<size_t>(words), 0));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (m.at(r, c) & 1)
                w[static_cast<size_t>(r)][static_cast<size_t>(c / 64)] ^= (1ull << (c % 64));

    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        const int wd = col / 64;
        const uint64_t bit = 1ull << (col % 64);
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (w[static_cast<size_t>(r)][static_cast<size_t>(wd)] & bit) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(w[static_cast<size_t>(pivot)], w[static_cast<size_t>(rank)]);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            if (w[static_cast<size_t>(r)][static_cast<size_t>(wd)] & bit)
                for (int k = wd; k < words; ++k)
                    w[static_cast<size_t>(r)][static_cast<size_t>(k)] ^= w[static_cast<size_t>(rank)][static_cast<size_t>(k)];
        }
        ++rank;
    }
    return rank;
}

inline int matrix_rank(const IntMatrix& m, Field f) {
    return f == Field::Q ? rank_q(m) : rank_f2(m);
}

/// ∂_k of the augmented chain complex: rows are (k-1)-faces, columns are
/// k-faces, signs follow the alternating rule on sorted vertex lists. For k=0
/// the single row is the augmentation (indexed by ∅, all entries +1).
inline IntMatrix boundary_matrix(const SimplicialComplex& X, int k,
                                 int vertex_budget = SimplicialComplex::kDefaultFaceBudget) {
    require(!X.is_void(), Errc::VoidComplex, "boundary matrix of the void complex");
    require(k >= 0 && k <= X.dim(), Errc::DimensionOutOfRange,
            "k=" + std::to_string(k) + " outside 0..dim");
    const std::vector<Simplex> rows_faces = X.faces(k - 1, vertex_budget);
    const std::vector<Simplex> cols_faces = X.faces(k, vertex_budget);

    IntMatrix m;
    m.rows = static_cast<int>(rows_faces.size());
    m.cols = static_cast<int>(cols_faces.size());
    m.a.assign(static_cast<size_t>(m.rows) * static_cast<size_t>(m.cols), 0);

    for (int c = 0; c < m.cols; ++c) {
        const Simplex& s = cols_faces[static_cast<size_t>(c)];
        int sign = 1;
        for (int i = 0; i < s.size(); ++i) {
            Simplex face = s.minus(s[i]);
            auto it = std::lower_bound(rows_faces.begin(), rows_faces.end(), face);
            int r = static_cast<int>(it - rows_faces.begin());
            m.at(r, c) = static_cast<int8_t>(sign);
            sign = -sign;
        }
    }
    return m;
}

/// All reduced Betti numbers of X, indices -1..dim(X). Entry [k+1] is the rank
/// of the k-th reduced homology. Frozen conventions: the empty complex {∅} has
/// a single nonzero rank 1 at index -1; a nonempty cone has all ranks zero.
inline std::vector<int> reduced_betti_all(const SimplicialComplex& X, Field f = Field::Q,
                                          int vertex_budget = SimplicialComplex::kDefaultFaceBudget) {
    require(!X.is_void(), Errc::VoidComplex, "reduced homology of the void complex");
    const int d = X.dim();
    std::vector<int> nfaces(static_cast<size_t>(d + 2));   // index k+1 = # k-faces, k=-1..d
    std::vector<int> ranks(static_cast<size_t>(d + 3), 0); // index k+1 = rank ∂_k, k=-1..d+1
    nfaces[0] = 1;                                          // the empty simplex
    for (int k = 0; k <= d; ++k)
        nfaces[static_cast<size_t>(k + 1)] = static_cast<int>(X.faces(k, vertex_budget).size());
    for (int k = 0; k <= d; ++k)
        ranks[static_cast<size_t>(k + 1)] = matrix_rank(boundary_matrix(X, k, vertex_budget), f);

    std::vector<int> betti(static_cast<size_t>(d + 2));
    for (int k = -1; k <= d; ++k) {
        // dim ker ∂_k − rank ∂_{k+1}
        betti[static_cast<size_t>(k + 1)] = nfaces[static_cast<size_t>(k + 1)] -
                                            ranks[static_cast<size_t>(k + 1)] -
                                            ranks[static_cast<size_t>(k + 2)];
    }
    return betti;
}

/// Rank of the k-th reduced homology group, k ≥ -1.
inline int reduced_betti(const SimplicialComplex& X, int k, Field f = Field::Q,
                         int vertex_budget = SimplicialComplex::kDefaultFaceBudget) {
    require(!X.is_void(), Errc::VoidComplex, "reduced homology of the void complex");
    require(k >= -1, Errc::DimensionOutOfRange, "reduced homology index below -1");
    if (k > X.dim()) return 0;
    return reduced_betti_all(X, f, vertex_budget)[static_cast<size_t>(k + 1)];
}

struct LerayResult {
    bool is_leray = false;
    /// On failure: the offending induced vertex set (induced method) or face
    /// (link method), with the dimension k ≥ d where homology survives.
    std::optional<std::pair<Simplex, int>> witness;
};

/// d-Leray by definition: every induced subcomplex has trivial reduced
/// homology in dimensions ≥ d. Subsets are scanned smallest-first, then
/// lexicographically, so the reported witness is deterministic.
inline LerayResult is_d_leray_induced(const SimplicialComplex& X, int d, Field f = Field::Q,
                                      int vertex_budget = 12) {
    require(d >= 0, Errc::BadParams, "d must be nonnegative");
    require(X.num_vertices() <= vertex_budget, Errc::BudgetExceeded,
            "induced-subcomplex sweep over " + std::to_string(X.num_vertices()) + " vertices");
    if (X.is_void()) return {true, std::nullopt};

    LerayResult res{true, std::nullopt};
    for_each_subset_by_size(X.vertex_set().vertices(), [&](Simplex U) {
        SimplicialComplex sub = induced(X, U);
        if (sub.is_void() || sub.dim() < d) return false;
        std::vector<int> betti = reduced_betti_all(sub, f, vertex_budget);
        for (int k = d; k <= sub.dim(); ++k) {
            if (betti[static_cast<size_t>(k + 1)] != 0) {
                res = {false, std::make_pair(U, k)};
                return true;
            }
        }
        return false;
    });
    return res;
}

/// d-Leray via links: reduced homology of every link vanishes in dimensions
/// ≥ d. Equivalent to the induced-subcomplex definition.
inline LerayResult is_d_leray_links(const SimplicialComplex& X, int d, Field f = Field::Q,
                                    int vertex_budget = 12) {
    require(d >= 0, Errc::BadParams, "d must be nonnegative");
    require(X.num_vertices() <= vertex_budget, Errc::BudgetExceeded,
            "link sweep over " + std::to_string(X.num_vertices()) + " vertices");
    if (X.is_void()) return {true, std::nullopt};

    for (const Simplex& s : X.all_faces(vertex_budget)) {
        SimplicialComplex lk = link(X, s);
        if (lk.dim() < d) continue;
        std::vector<int> betti = reduced_betti_all(lk, f, vertex_budget);
        for (int k = d; k <= lk.dim(); ++k)
            if (betti[static_cast<size_t>(k + 1)] != 0) return {false, std::make_pair(s, k)};
    }
    return {true, std::nullopt};
}

/// ℓ_σ = min{k ≥ -1 : reduced homology of lk(X,σ) vanishes in all dims ≥ k}.
/// -1 means the link is acyclic through index -1 (e.g. a nonempty cone);
/// ℓ_σ = 0 for the link {∅} since its (-1)-st reduced homology survives.
inline int ell_sigma(const SimplicialComplex& X, const Simplex& sigma, Field f = Field::Q,
                     int vertex_budget = SimplicialComplex::kDefaultFaceBudget) {
    SimplicialComplex lk = link(X, sigma); // throws NotAFace when σ ∉ X
    std::vector<int> betti = reduced_betti_all(lk, f, vertex_budget);
    int ell = -1;
    for (int k = -1; k <= lk.dim(); ++k)
        if (betti[static_cast<size_t>(k + 1)] != 0) ell = k + 1;
    return ell;
}

} // namespace helly
