#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "helly/error.hpp"
#include "helly/rational.hpp"

namespace helly::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    Rational objective;
    std::vector<Rational> x;
};

/// Exact two-phase primal simplex for
///     maximize c·x  subject to  A x = b,  x ≥ 0,
/// over the rationals. Bland's smallest-index rule is used for both the
/// entering and the leaving variable, which rules out cycling, so the method
/// terminates on every input. No tolerances anywhere: every comparison is an
/// exact rational comparison.
class SimplexSolver {
public:
    SimplexSolver(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                  std::vector<Rational> c)
        : a_(std::move(A)), b_(std::move(b)), c_(std::move(c)) {
        m_ = a_.size();
        n_ = c_.size();
        for (const auto& row : a_)
            require(row.size() == n_, Errc::DimensionMismatch, "ragged constraint matrix");
        require(b_.size() == m_, Errc::DimensionMismatch, "rhs length mismatch");
    }

    Solution solve() {
        if (!phase_one()) return {Status::Infeasible, Rational(0), {}};
        return phase_two();
    }

private:
    // tableau_: m_ rows over n_ real + m_ artificial columns, plus rhs.
    size_t m_ = 0, n_ = 0;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> b_, c_;
    std::vector<std::vector<Rational>> t_; // current tableau rows, width cols_+1
    std::vector<Rational> obj_;            // reduced-cost row, width cols_+1 (last = -objective)
    std::vector<size_t> basis_;            // basic variable per row
    size_t cols_ = 0;                      // columns eligible to enter

    void pivot(size_t row, size_t col) {
        const Rational p = t_[row][col];
        for (auto& v : t_[row]) v /= p;
        for (size_t r = 0; r < t_.size(); ++r) {
            if (r == row) continue;
            const Rational f = t_[r][col];
            if (f == 0) continue;
            for (size_t j = 0; j <= cols_total(); ++j) t_[r][j] -= f * t_[row][j];
        }
        const Rational f = obj_[col];
        if (f != 0)
            for (size_t j = 0; j <= cols_total(); ++j) obj_[j] -= f * t_[row][j];
        basis_[row] = col;
    }

    size_t cols_total() const { return n_ + m_; }

    // Returns false on infeasibility.
    bool phase_one() {
        t_.assign(m_, std::vector<Rational>(cols_total() + 1, Rational(0)));
        basis_.assign(m_, 0);
        for (size_t r = 0; r < m_; ++r) {
            const bool flip = b_[r] < 0;
            for (size_t j = 0; j < n_; ++j) t_[r][j] = flip ? -a_[r][j] : a_[r][j];
            t_[r][n_ + r] = 1;
            t_[r][cols_total()] = flip ? -b_[r] : b_[r];
            basis_[r] = n_ + r;
        }
        // Maximize -(sum of artificials): reduced cost of x_j is sum of its
        // column, of the rhs the sum of b.
        obj_.assign(cols_total() + 1, Rational(0));
        for (size_t j = 0; j <= cols_total(); ++j) {
            if (j >= n_ && j < cols_total()) continue;
            Rational s(0);
            for (size_t r = 0; r < m_; ++r) s += t_[r][j];
            obj_[j] = s;
        }
        cols_ = cols_total();
        run_simplex();
        if (obj_[cols_total()] != 0) return false; // leftover infeasibility

        // Drive artificials out of the basis; drop redundant rows.
        for (size_t r = 0; r < t_.size();) {
            if (basis_[r] < n_) { ++r; continue; }
            size_t enter = n_;
            for (size_t j = 0; j < n_; ++j)
                if (t_[r][j] != 0) { enter = j; break; }
            if (enter < n_) {
                pivot(r, enter);
                ++r;
            } else {
                t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
            }
        }
        return true;
    }

    Solution phase_two() {
        cols_ = n_; // artificial columns may no longer enter
        obj_.assign(cols_total() + 1, Rational(0));
        for (size_t j = 0; j < n_; ++j) obj_[j] = c_[j];
        for (size_t r = 0; r < t_.size(); ++r) {
            const Rational cb = c_[basis_[r]];
            if (cb == 0) continue;
            for (size_t j = 0; j <= cols_total(); ++j) obj_[j] -= cb * t_[r][j];
        }
        if (!run_simplex()) return {Status::Unbounded, Rational(0), {}};

        Solution sol;
        sol.status = Status::Optimal;
        sol.objective = -obj_[cols_total()];
        sol.x.assign(n_, Rational(0));
        for (size_t r = 0; r < t_.size(); ++r)
            if (basis_[r] < n_) sol.x[basis_[r]] = t_[r][cols_total()];
        return sol;
    }

    // Returns false when unbounded.
    bool run_simplex() {
        while (true) {
            size_t enter = cols_;
            for (size_t j = 0; j < cols_; ++j)
                if (obj_[j] > 0) { enter = j; break; } // Bland: smallest index
            if (enter == cols_) return true;

            size_t leave = t_.size();
            Rational best;
            for (size_t r = 0; r < t_.size(); ++r) {
                if (t_[r][enter] <= 0) continue;
                Rational ratio = t_[r][cols_total()] / t_[r][enter];
                if (leave == t_.size() || ratio < best ||
                    (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == t_.size()) return false;
            pivot(leave, enter);
        }
    }
};

inline Solution solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b,
                      std::vector<Rational> c) {
    return SimplexSolver(std::move(A), std::move(b), std::move(c)).solve();
}

/// Pure feasibility of {A x = b, x ≥ 0}: a feasible point, or nothing.
inline std::optional<std::vector<Rational>> find_feasible(std::vector<std::vector<Rational>> A,
                                                          std::vector<Rational> b) {
    const size_t n = A.empty() ? 0 : A[0].size();
    Solution s = solve(std::move(A), std::move(b), std::vector<Rational>(n, Rational(0)));
    if (s.status != Status::Optimal) return std::nullopt;
    return s.x;
}

} // namespace helly::lp
