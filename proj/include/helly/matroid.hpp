#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "helly/error.hpp"
#include "helly/homology.hpp" // BigInt + Bareiss rank
#include "helly/rational.hpp"
#include "helly/simplex.hpp"

namespace helly {

/// A matroid given as a rank oracle over ground set 0..n-1.
///
/// Five kinds: uniform U_{n,r}; partition matroids with one slot per block
/// (rank counts blocks met); linear matroids over exact rational vectors;
/// explicit independent-set families; and the tolerance wrapper M^t whose
/// independent sets are {σ : ρ(σ) ≥ |σ|-t} and whose rank has the closed form
/// min{|A|, ρ(A)+t}. The tolerance kind never materializes its family.
class Matroid {
public:
    enum class Kind { Uniform, Partition, Linear, Explicit, Tolerance };

    static Matroid uniform(int n, int r) {
        require(n >= 1, Errc::EmptyGround, "uniform matroid needs elements");
        require(r >= 0 && r <= n, Errc::BadParams, "uniform rank outside 0..n");
        Matroid m(Kind::Uniform, n);
        m.uniform_rank_ = r;
        m.rank_full_ = r;
        return m;
    }

    static Matroid partition(int n, std::vector<std::vector<int>> blocks) {
        require(n >= 1, Errc::EmptyGround, "partition matroid needs elements");
        Matroid m(Kind::Partition, n);
        m.block_of_.assign(static_cast<size_t>(n), -1);
        for (size_t b = 0; b < blocks.size(); ++b) {
            for (int e : blocks[b]) {
                require(e >= 0 && e < n, Errc::BadParams, "block element out of range");
                require(m.block_of_[static_cast<size_t>(e)] < 0, Errc::BadParams,
                        "element " + std::to_string(e) + " in two blocks");
                m.block_of_[static_cast<size_t>(e)] = static_cast<int>(b);
            }
        }
        for (int e = 0; e < n; ++e)
            require(m.block_of_[static_cast<size_t>(e)] >= 0, Errc::BadParams,
                    "element " + std::to_string(e) + " not covered by any block");
        m.blocks_ = std::move(blocks);
        m.rank_full_ = 0;
        for (const auto& b : m.blocks_)
            if (!b.empty()) ++m.rank_full_;
        return m;
    }

    /// One rational vector per ground element; rank is matrix rank over Q.
    static Matroid linear(std::vector<std::vector<Rational>> vectors) {
        require(!vectors.empty(), Errc::EmptyGround, "linear matroid needs elements");
        const size_t dim = vectors[0].size();
        for (const auto& v : vectors)
            require(v.size() == dim, Errc::DimensionMismatch, "ragged vector list");
        Matroid m(Kind::Linear, static_cast<int>(vectors.size()));
        m.vectors_ = std::move(vectors);
        m.rank_full_ = m.rank_unchecked(full_set(m.n_));
        return m;
    }

    /// Explicit independent-set family. Not validated here: run
    /// check_matroid_axioms to certify it. Rank is still well defined as the
    /// max size of a listed member inside A (with ∅ always counted).
    static Matroid explicit_family(int n, std::vector<Simplex> independent) {
        require(n >= 1, Errc::EmptyGround, "explicit matroid needs elements");
        Matroid m(Kind::Explicit, n);
        std::sort(independent.begin(), independent.end());
        independent.erase(std::unique(independent.begin(), independent.end()), independent.end());
        for (const Simplex& s : independent)
            require(s.subset_of(full_set(n)), Errc::BadParams, "independent set outside ground");
        m.family_ = std::move(independent);
        m.rank_full_ = 0;
        for (const Simplex& s : m.family_) m.rank_full_ = std::max(m.rank_full_, s.size());
        return m;
    }

    /// The tolerance complex M^t = {σ : ρ(σ) ≥ |σ|-t}, itself a matroid.
    Matroid tolerance(int t) const {
        require(t >= 0 && t <= rank_full_, Errc::ToleranceOutOfRange,
                "t=" + std::to_string(t) + " outside 0..rank");
        Matroid m(Kind::Tolerance, n_);
        m.base_ = std::make_shared<Matroid>(*this);
        m.t_ = t;
        m.rank_full_ = std::min(n_, rank_full_ + t);
        return m;
    }

    Kind kind() const { return kind_; }
    int num_elements() const { return n_; }
    VertexSet ground() const { return full_set(n_); }
    /// Rank of the whole matroid (precomputed at construction).
    int rank_full() const { return rank_full_; }
    int tolerance_t() const { return t_; }
    const Matroid& tolerance_base() const { return *base_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int uniform_rank() const { return uniform_rank_; }
    const std::vector<std::vector<Rational>>& vectors() const { return vectors_; }
    const std::vector<Simplex>& family() const { return family_; }

    int rank(const VertexSet& A) const {
        require(A.subset_of(full_set(n_)), Errc::NotASubset, "rank argument outside ground set");
        return rank_unchecked(A);
    }

    bool is_independent(const VertexSet& A) const { return rank(A) == A.size(); }

    /// span_M(U) = {v : ρ(U ∪ {v}) = ρ(U)}.
    VertexSet span(const VertexSet& U) const {
        const int base = rank(U);
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (rank_unchecked(U.with(v)) == base) out.push_back(v);
        return VertexSet(std::move(out));
    }

private:
    Matroid(Kind k, int n) : kind_(k), n_(n) {}

    static VertexSet full_set(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i;
        return VertexSet(std::move(v));
    }

    int rank_unchecked(const VertexSet& A) const {
        switch (kind_) {
            case Kind::Uniform:
                return std::min(A.size(), uniform_rank_);
            case Kind::Partition: {
                std::set<int> met;
                for (int e : A) met.insert(block_of_[static_cast<size_t>(e)]);
                return static_cast<int>(met.size());
            }
            case Kind::Linear:
                return linear_rank(A);
            case Kind::Explicit: {
                int best = 0;
                for (const Simplex& s : family_)
                    if (s.subset_of(A)) best = std::max(best, s.size());
                return best;
            }
            case Kind::Tolerance:
                return std::min(A.size(), base_->rank_unchecked(A) + t_);
        }
        return 0;
    }

    int linear_rank(const VertexSet& A) const {
        if (A.size() == 0) return 0;
        const size_t dim = vectors_[0].size();
        // Clear denominators column-wise (scaling a column keeps the rank),
        // then run fraction-free elimination over the integers.
        std::vector<std::vector<BigInt>> cols;
        cols.reserve(static_cast<size_t>(A.size()));
        for (int e : A) {
            cpp_int l = 1;
            for (const Rational& x : vectors_[static_cast<size_t>(e)])
                l = lcm(l, denominator(x));
            std::vector<BigInt> col(dim);
            for (size_t i = 0; i < dim; ++i) {
                const Rational& x = vectors_[static_cast<size_t>(e)][i];
                col[i] = numerator(x) * (l / denominator(x));
            }
            cols.push_back(std::move(col));
        }
        return bigint_rank(cols, dim);
    }

    static int bigint_rank(std::vector<std::vector<BigInt>>& cols, size_t dim) {
        // Bareiss over the transpose (each entry of `cols` is one column).
        const size_t m = cols.size();
        int rank = 0;
        BigInt prev = 1;
        for (size_t row = 0; row < dim && rank < static_cast<int>(m); ++row) {
            size_t pivot = m;
            for (size_t c = static_cast<size_t>(rank); c < m; ++c)
                if (cols[c][row] != 0) { pivot = c; break; }
            if (pivot == m) continue;
            std::swap(cols[pivot], cols[static_cast<size_t>(rank)]);
            const BigInt p = cols[static_cast<size_t>(rank)][row];
            for (size_t c = static_cast<size_t>(rank) + 1; c < m; ++c) {
                const BigInt f = cols[c][row];
                for (size_t r = row; r < dim; ++r)
                    cols[c][r] = (p * cols[c][r] - f * cols[static_cast<size_t>(rank)][r]) / prev;
            }
            prev = p;
            ++rank;
        }
        return rank;
    }

    Kind kind_;
    int n_ = 0;
    int rank_full_ = 0;
    int uniform_rank_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;
    std::vector<std::vector<Rational>> vectors_;
    std::vector<Simplex> family_;
    std::shared_ptr<const Matroid> base_;
    int t_ = 0;
};

/// Rank of the matroid union M1 ∨ M2 on A via the matroid union theorem:
/// min over B ⊆ A of ρ1(B) + ρ2(B) + |A∖B|.
inline int matroid_union_rank(const Matroid& m1, const Matroid& m2, const VertexSet& A) {
    require(m1.num_elements() == m2.num_elements(), Errc::DimensionMismatch,
            "matroid union needs a common ground set");
    require(A.size() <= 16, Errc::BudgetExceeded, "matroid union rank over |A| > 16");
    const int k = A.size();
    int best = A.size(); // B = ∅
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> b;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) b.push_back(A[i]);
        VertexSet B(std::move(b));
        const int value = m1.rank(B) + m2.rank(B) + (A.size() - B.size());
        best = std::min(best, value);
    }
    return best;
}

struct AxiomCheck {
    bool ok = false;
    std::string violation; // human-readable description of the failing axiom
    std::optional<std::pair<Simplex, Simplex>> pair;
};

/// Verify the three independence axioms of an explicit family by full
/// enumeration: ∅ ∈ M, downward closure, and the exchange property. Sets are
/// packed into bitmasks so the pairwise exchange scan stays cheap.
inline AxiomCheck check_matroid_axioms(int n, const std::vector<Simplex>& family) {
    require(n <= 9, Errc::BudgetExceeded, "axiom check over more than 9 elements");
    auto unpack = [n](unsigned mask) {
        std::vector<int> v;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) v.push_back(i);
        return Simplex(std::move(v));
    };
    std::vector<bool> present(1u << n, false);
    std::vector<unsigned> masks;
    for (const Simplex& s : family) {
        unsigned m = 0;
        for (int v : s) {
            require(v < n, Errc::BadParams, "family member outside ground set");
            m |= (1u << v);
        }
        if (!present[m]) {
            present[m] = true;
            masks.push_back(m);
        }
    }
    if (!present[0]) return {false, "empty set missing", std::make_pair(Simplex{}, Simplex{})};
    for (unsigned m : masks)
        for (int i = 0; i < n; ++i)
            if ((m & (1u << i)) && !present[m ^ (1u << i)])
                return {false, "not downward closed", std::make_pair(unpack(m ^ (1u << i)), unpack(m))};
    for (unsigned a : masks) {
        const int asz = __builtin_popcount(a);
        for (unsigned b : masks) {
            if (asz >= __builtin_popcount(b)) continue;
            bool extended = false;
            for (unsigned rest = b & ~a; rest; rest &= rest - 1)
                if (present[a | (rest & -rest)]) { extended = true; break; }
            if (!extended) return {false, "exchange fails", std::make_pair(unpack(a), unpack(b))};
        }
    }
    return {true, "", std::nullopt};
}

/// Materialize {σ ⊆ ground : ρ(σ) ≥ |σ|-t}; test-side view of the tolerance
/// complex (the Matroid kind itself never builds this).
inline std::vector<Simplex> tolerance_family(const Matroid& m, int t) {
    require(m.num_elements() <= 20, Errc::BudgetExceeded, "family materialization too large");
    std::vector<Simplex> out;
    for_each_subset_by_size(m.ground().vertices(), [&](Simplex s) {
        if (m.rank(s) >= s.size() - t) out.push_back(std::move(s));
        return false;
    });
    return out;
}

} // namespace helly
