#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "hemsched/common.hpp"

namespace hemsched {

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Dense row-major matrix, sized on construction or grown row by row.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
    }
    double operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                     static_cast<std::size_t>(c)];
    }

    void append_row(const Vec& row) {
        if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(row.size());
        if (static_cast<int>(row.size()) != cols_)
            throw Error("Matrix::append_row: width mismatch");
        data_.insert(data_.end(), row.begin(), row.end());
        ++rows_;
    }

    Vec multiply(const Vec& x) const {
        if (static_cast<int>(x.size()) != cols_) throw Error("Matrix::multiply: size mismatch");
        Vec y(static_cast<std::size_t>(rows_), 0.0);
        for (int r = 0; r < rows_; ++r) {
            double s = 0.0;
            for (int c = 0; c < cols_; ++c) s += (*this)(r, c) * x[static_cast<std::size_t>(c)];
            y[static_cast<std::size_t>(r)] = s;
        }
        return y;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

inline const char* to_string(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "optimal";
        case LpStatus::Infeasible: return "infeasible";
        case LpStatus::Unbounded: return "unbounded";
        case LpStatus::IterationLimit: return "iteration-limit";
    }
    return "?";
}

/// min c'x + const  s.t.  A x <= b,  Aeq x = beq,  lower <= x <= upper.
/// Lower bounds default to 0 and must be finite; upper bounds may be +inf.
struct LpInstance {
    Vec objective;
    double objective_constant = 0.0;
    Matrix ineq_matrix;
    Vec ineq_rhs;
    Matrix eq_matrix;
    Vec eq_rhs;
    Vec lower;  // empty => all zero
    Vec upper;  // empty => all +inf

    int num_vars() const { return static_cast<int>(objective.size()); }

    void validate() const {
        const int n = num_vars();
        auto check_finite = [](double v, const char* what) {
            if (!std::isfinite(v)) throw Error(std::string("LpInstance: non-finite ") + what);
        };
        for (double v : objective) check_finite(v, "objective coefficient");
        if (ineq_matrix.rows() > 0 && ineq_matrix.cols() != n)
            throw Error("LpInstance: inequality matrix width mismatch");
        if (eq_matrix.rows() > 0 && eq_matrix.cols() != n)
            throw Error("LpInstance: equality matrix width mismatch");
        if (static_cast<int>(ineq_rhs.size()) != ineq_matrix.rows())
            throw Error("LpInstance: inequality rhs length mismatch");
        if (static_cast<int>(eq_rhs.size()) != eq_matrix.rows())
            throw Error("LpInstance: equality rhs length mismatch");
        if (!lower.empty() && static_cast<int>(lower.size()) != n)
            throw Error("LpInstance: lower bound length mismatch");
        if (!upper.empty() && static_cast<int>(upper.size()) != n)
            throw Error("LpInstance: upper bound length mismatch");
        for (int r = 0; r < ineq_matrix.rows(); ++r)
            for (int c = 0; c < n; ++c) check_finite(ineq_matrix(r, c), "inequality coefficient");
        for (double v : ineq_rhs) check_finite(v, "inequality rhs");
        for (int r = 0; r < eq_matrix.rows(); ++r)
            for (int c = 0; c < n; ++c) check_finite(eq_matrix(r, c), "equality coefficient");
        for (double v : eq_rhs) check_finite(v, "equality rhs");
        for (double v : lower)
            if (!std::isfinite(v)) throw Error("LpInstance: lower bounds must be finite");
        for (double v : upper)
            if (std::isnan(v) || v == -kInf) throw Error("LpInstance: bad upper bound");
    }

    double lower_of(int j) const { return lower.empty() ? 0.0 : lower[static_cast<std::size_t>(j)]; }
    double upper_of(int j) const { return upper.empty() ? kInf : upper[static_cast<std::size_t>(j)]; }
};

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    Vec x;
    double objective = 0.0;
    Vec ineq_duals;     // <= 0 for binding rows of a minimization
    Vec eq_duals;       // free sign
    Vec reduced_costs;  // per structural variable
    int iterations = 0;
    double feasibility_tol = 1e-8;
    double optimality_tol = 1e-9;

    /// Value of the dual certificate implied by (duals, reduced costs).
    /// By weak duality it never exceeds the objective of a feasible point.
    double dual_objective(const LpInstance& lp) const {
        double v = lp.objective_constant;
        for (std::size_t r = 0; r < ineq_duals.size(); ++r) v += ineq_duals[r] * lp.ineq_rhs[r];
        for (std::size_t r = 0; r < eq_duals.size(); ++r) v += eq_duals[r] * lp.eq_rhs[r];
        for (int j = 0; j < lp.num_vars(); ++j) {
            const double rc = reduced_costs[static_cast<std::size_t>(j)];
            if (rc > 0.0) {
                v += rc * lp.lower_of(j);
            } else if (rc < 0.0 && lp.upper_of(j) < kInf) {
                v += rc * lp.upper_of(j);
            }
            // rc < 0 with infinite upper bound only occurs within the
            // optimality tolerance; it contributes nothing.
        }
        return v;
    }
};

namespace detail {

/// Primal revised simplex over equality rows with per-column bounds.
/// Columns are stored densely and may be appended between optimize() calls;
/// the current basis is kept, so column generation resumes cheaply.
class RevisedSimplex {
public:
    enum class State : unsigned char { Basic, AtLower, AtUpper };

    explicit RevisedSimplex(Vec rhs) : m_(static_cast<int>(rhs.size())), rhs_(std::move(rhs)) {}

    int num_rows() const { return m_; }
    int num_cols() const { return static_cast<int>(cols_.size()); }

    int add_column(Vec coef, double cost, double lo, double up) {
        if (static_cast<int>(coef.size()) != m_) throw Error("RevisedSimplex: column size mismatch");
        if (!std::isfinite(lo)) throw Error("RevisedSimplex: lower bound must be finite");
        cols_.push_back(std::move(coef));
        costs_.push_back(cost);
        lo_.push_back(lo);
        up_.push_back(up);
        states_.push_back(State::AtLower);
        values_.push_back(lo);
        return num_cols() - 1;
    }

    void set_cost(int j, double c) { costs_[static_cast<std::size_t>(j)] = c; }
    double cost(int j) const { return costs_[static_cast<std::size_t>(j)]; }
    void fix_at_zero(int j) {
        lo_[static_cast<std::size_t>(j)] = 0.0;
        up_[static_cast<std::size_t>(j)] = 0.0;
        if (states_[static_cast<std::size_t>(j)] != State::Basic)
            values_[static_cast<std::size_t>(j)] = 0.0;
    }

    /// Install a starting basis (one column per row, in row order). All other
    /// columns sit at their lower bound. The basis matrix must be invertible.
    void force_basis(const std::vector<int>& basic_cols) {
        if (static_cast<int>(basic_cols.size()) != m_)
            throw Error("RevisedSimplex: basis size mismatch");
        for (std::size_t j = 0; j < states_.size(); ++j) {
            states_[j] = State::AtLower;
            values_[j] = lo_[j];
        }
        basis_ = basic_cols;
        for (int r = 0; r < m_; ++r) states_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] = State::Basic;
        refactor();
        recompute_basic_values();
    }

    const std::vector<int>& basis() const { return basis_; }
    State state(int j) const { return states_[static_cast<std::size_t>(j)]; }
    double value(int j) const { return values_[static_cast<std::size_t>(j)]; }

    double objective() const {
        double v = 0.0;
        for (std::size_t j = 0; j < values_.size(); ++j) v += costs_[j] * values_[j];
        return v;
    }

    /// Simplex multipliers y = c_B' B^{-1} for the current basis and costs.
    Vec duals() const {
        Vec y(static_cast<std::size_t>(m_), 0.0);
        for (int i = 0; i < m_; ++i) {
            const double cb = costs_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])];
            if (cb == 0.0) continue;
            for (int j = 0; j < m_; ++j)
                y[static_cast<std::size_t>(j)] += cb * binv(i, j);
        }
        return y;
    }

    double reduced_cost(int j, const Vec& y) const {
        double rc = costs_[static_cast<std::size_t>(j)];
        const Vec& a = cols_[static_cast<std::size_t>(j)];
        for (int i = 0; i < m_; ++i) rc -= y[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)];
        return rc;
    }

    /// Runs primal iterations until optimal, unbounded, or the limit.
    /// Requires a feasible current basis (as built by force_basis or kept
    /// from a previous call).
    LpStatus optimize(int max_iterations, int* iterations_done = nullptr) {
        int iters = 0;
        int degenerate_streak = 0;
        bool bland = false;
        LpStatus status = LpStatus::IterationLimit;
        while (iters < max_iterations) {
            const Vec y = duals();
            // Pricing. Dantzig rule, Bland's rule while degeneracy persists.
            int entering = -1;
            int direction = 0;  // +1 entering rises from lower, -1 falls from upper
            double best_violation = opt_tol_;
            for (int j = 0; j < num_cols(); ++j) {
                const auto js = static_cast<std::size_t>(j);
                if (states_[js] == State::Basic) continue;
                if (up_[js] - lo_[js] <= 0.0) continue;  // fixed, can never move
                const double rc = reduced_cost(j, y);
                double violation = 0.0;
                int dir = 0;
                if (states_[js] == State::AtLower && rc < -opt_tol_) {
                    violation = -rc;
                    dir = +1;
                } else if (states_[js] == State::AtUpper && rc > opt_tol_) {
                    violation = rc;
                    dir = -1;
                } else {
                    continue;
                }
                if (bland) {
                    entering = j;
                    direction = dir;
                    break;
                }
                if (violation > best_violation) {
                    best_violation = violation;
                    entering = j;
                    direction = dir;
                }
            }
            if (entering < 0) {
                status = LpStatus::Optimal;
                break;
            }

            // Direction through the basis: w = B^{-1} a_e; basic values move
            // at rate -direction * w per unit of entering movement.
            const Vec w = apply_binv(cols_[static_cast<std::size_t>(entering)]);
            double t_limit = up_[static_cast<std::size_t>(entering)] - lo_[static_cast<std::size_t>(entering)];
            int leaving_row = -1;
            double leaving_pivot = 0.0;
            int leave_to = 0;  // -1 lower, +1 upper
            for (int i = 0; i < m_; ++i) {
                const double rate = -direction * w[static_cast<std::size_t>(i)];
                if (std::abs(rate) <= pivot_tol_) continue;
                const int bj = basis_[static_cast<std::size_t>(i)];
                const auto bjs = static_cast<std::size_t>(bj);
                double t;
                int hits;
                if (rate < 0.0) {  // basic value decreases toward its lower bound
                    t = (values_[bjs] - lo_[bjs]) / (-rate);
                    hits = -1;
                } else {  // increases toward its upper bound
                    if (up_[bjs] == kInf) continue;
                    t = (up_[bjs] - values_[bjs]) / rate;
                    hits = +1;
                }
                if (t < 0.0) t = 0.0;
                const bool better =
                    t < t_limit - ratio_tie_tol_ ||
                    (t < t_limit + ratio_tie_tol_ && leaving_row >= 0 &&
                     std::abs(w[static_cast<std::size_t>(i)]) > std::abs(leaving_pivot));
                if (leaving_row < 0 ? t < t_limit : better) {
                    t_limit = t;
                    leaving_row = i;
                    leaving_pivot = w[static_cast<std::size_t>(i)];
                    leave_to = hits;
                }
            }

            if (t_limit == kInf) {
                status = LpStatus::Unbounded;
                break;
            }
            if (t_limit <= degen_tol_) {
                if (++degenerate_streak >= 40) bland = true;
            } else {
                degenerate_streak = 0;
                bland = false;
            }

            // Move basic values, then either flip the entering bound or pivot.
            for (int i = 0; i < m_; ++i) {
                const int bj = basis_[static_cast<std::size_t>(i)];
                values_[static_cast<std::size_t>(bj)] -= direction * t_limit * w[static_cast<std::size_t>(i)];
            }
            const auto es = static_cast<std::size_t>(entering);
            if (leaving_row < 0) {
                // Bound-to-bound flip; basis unchanged.
                states_[es] = direction > 0 ? State::AtUpper : State::AtLower;
                values_[es] = direction > 0 ? up_[es] : lo_[es];
            } else {
                const int lj = basis_[static_cast<std::size_t>(leaving_row)];
                const auto ljs = static_cast<std::size_t>(lj);
                states_[ljs] = leave_to < 0 ? State::AtLower : State::AtUpper;
                values_[ljs] = leave_to < 0 ? lo_[ljs] : up_[ljs];
                states_[es] = State::Basic;
                values_[es] = (direction > 0 ? lo_[es] : up_[es]) + direction * t_limit;
                basis_[static_cast<std::size_t>(leaving_row)] = entering;
                update_binv(leaving_row, w);
                if (++pivots_since_refactor_ >= refactor_every_) {
                    refactor();
                    recompute_basic_values();
                }
            }
            ++iters;
        }
        if (iterations_done) *iterations_done += iters;
        return status;
    }

    /// Largest violation of row equations at the current point; diagnostic.
    double residual_inf_norm() const {
        double worst = 0.0;
        for (int i = 0; i < m_; ++i) {
            double s = -rhs_[static_cast<std::size_t>(i)];
            for (int j = 0; j < num_cols(); ++j)
                s += cols_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] *
                     values_[static_cast<std::size_t>(j)];
            worst = std::max(worst, std::abs(s));
        }
        return worst;
    }

    void recompute_basic_values() {
        Vec r = rhs_;
        for (int j = 0; j < num_cols(); ++j) {
            const auto js = static_cast<std::size_t>(j);
            if (states_[js] == State::Basic || values_[js] == 0.0) continue;
            const Vec& a = cols_[js];
            for (int i = 0; i < m_; ++i) r[static_cast<std::size_t>(i)] -= a[static_cast<std::size_t>(i)] * values_[js];
        }
        const Vec xb = apply_binv(r);
        for (int i = 0; i < m_; ++i)
            values_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(i)])] = xb[static_cast<std::size_t>(i)];
    }

private:
    double binv(int r, int c) const {
        return binv_[static_cast<std::size_t>(r) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(c)];
    }
    double& binv(int r, int c) {
        return binv_[static_cast<std::size_t>(r) * static_cast<std::size_t>(m_) + static_cast<std::size_t>(c)];
    }

    Vec apply_binv(const Vec& v) const {
        Vec out(static_cast<std::size_t>(m_), 0.0);
        for (int i = 0; i < m_; ++i) {
            double s = 0.0;
            for (int j = 0; j < m_; ++j) s += binv(i, j) * v[static_cast<std::size_t>(j)];
            out[static_cast<std::size_t>(i)] = s;
        }
        return out;
    }

    /// Rank-one update of B^{-1} after the column in `leaving_row` is
    /// replaced; w = B^{-1} a_entering.
    void update_binv(int leaving_row, const Vec& w) {
        const double piv = w[static_cast<std::size_t>(leaving_row)];
        if (std::abs(piv) < 1e-12) {
            refactor();
            recompute_basic_values();
            return;
        }
        for (int j = 0; j < m_; ++j) binv(leaving_row, j) /= piv;
        for (int i = 0; i < m_; ++i) {
            if (i == leaving_row) continue;
            const double f = w[static_cast<std::size_t>(i)];
            if (f == 0.0) continue;
            for (int j = 0; j < m_; ++j) binv(i, j) -= f * binv(leaving_row, j);
        }
    }

    /// Rebuild B^{-1} from scratch by Gauss-Jordan with partial pivoting.
    void refactor() {
        const auto n = static_cast<std::size_t>(m_);
        std::vector<double> work(n * 2 * n, 0.0);
        for (int r = 0; r < m_; ++r) {
            const Vec& a = cols_[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])];
            for (int i = 0; i < m_; ++i)
                work[static_cast<std::size_t>(i) * 2 * n + static_cast<std::size_t>(r)] =
                    a[static_cast<std::size_t>(i)];
        }
        for (int i = 0; i < m_; ++i) work[static_cast<std::size_t>(i) * 2 * n + n + static_cast<std::size_t>(i)] = 1.0;
        for (int col = 0; col < m_; ++col) {
            int piv = -1;
            double pmax = 1e-12;
            for (int r = col; r < m_; ++r) {
                const double v = std::abs(work[static_cast<std::size_t>(r) * 2 * n + static_cast<std::size_t>(col)]);
                if (v > pmax) {
                    pmax = v;
                    piv = r;
                }
            }
            if (piv < 0) throw Error("RevisedSimplex: singular basis");
            if (piv != col)
                for (std::size_t j = 0; j < 2 * n; ++j)
                    std::swap(work[static_cast<std::size_t>(col) * 2 * n + j],
                              work[static_cast<std::size_t>(piv) * 2 * n + j]);
            const double d = work[static_cast<std::size_t>(col) * 2 * n + static_cast<std::size_t>(col)];
            for (std::size_t j = 0; j < 2 * n; ++j) work[static_cast<std::size_t>(col) * 2 * n + j] /= d;
            for (int r = 0; r < m_; ++r) {
                if (r == col) continue;
                const double f = work[static_cast<std::size_t>(r) * 2 * n + static_cast<std::size_t>(col)];
                if (f == 0.0) continue;
                for (std::size_t j = 0; j < 2 * n; ++j)
                    work[static_cast<std::size_t>(r) * 2 * n + j] -=
                        f * work[static_cast<std::size_t>(col) * 2 * n + j];
            }
        }
        binv_.assign(n * n, 0.0);
        for (int i = 0; i < m_; ++i)
            for (int j = 0; j < m_; ++j)
                binv(i, j) = work[static_cast<std::size_t>(i) * 2 * n + n + static_cast<std::size_t>(j)];
        pivots_since_refactor_ = 0;
    }

    int m_;
    Vec rhs_;
    std::vector<Vec> cols_;
    Vec costs_;
    Vec lo_;
    Vec up_;
    std::vector<State> states_;
    Vec values_;
    std::vector<int> basis_;
    std::vector<double> binv_;
    int pivots_since_refactor_ = 0;
    int refactor_every_ = 120;

    double opt_tol_ = 1e-9;
    double pivot_tol_ = 1e-10;
    double degen_tol_ = 1e-11;
    double ratio_tie_tol_ = 1e-9;
};

}  // namespace detail

/// Two-phase solve of a dense LP. Infeasible and unbounded instances are
/// reported through the status, never as numbers.
inline LpSolution solve_lp(const LpInstance& lp, int max_iterations = 100000) {
    lp.validate();
    const int n = lp.num_vars();
    const int m_ineq = lp.ineq_matrix.rows();
    const int m_eq = lp.eq_matrix.rows();
    const int m = m_ineq + m_eq;

    LpSolution sol;
    sol.x.assign(static_cast<std::size_t>(n), 0.0);

    for (int j = 0; j < n; ++j) {
        if (lp.lower_of(j) > lp.upper_of(j)) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
    }

    Vec rhs(static_cast<std::size_t>(m), 0.0);
    for (int r = 0; r < m_ineq; ++r) rhs[static_cast<std::size_t>(r)] = lp.ineq_rhs[static_cast<std::size_t>(r)];
    for (int r = 0; r < m_eq; ++r) rhs[static_cast<std::size_t>(m_ineq + r)] = lp.eq_rhs[static_cast<std::size_t>(r)];

    detail::RevisedSimplex splx(rhs);

    // Structural columns.
    for (int j = 0; j < n; ++j) {
        Vec col(static_cast<std::size_t>(m), 0.0);
        for (int r = 0; r < m_ineq; ++r) col[static_cast<std::size_t>(r)] = lp.ineq_matrix(r, j);
        for (int r = 0; r < m_eq; ++r) col[static_cast<std::size_t>(m_ineq + r)] = lp.eq_matrix(r, j);
        splx.add_column(std::move(col), 0.0, lp.lower_of(j), lp.upper_of(j));
    }
    // Slacks for inequality rows.
    std::vector<int> slack_idx(static_cast<std::size_t>(m_ineq));
    for (int r = 0; r < m_ineq; ++r) {
        Vec col(static_cast<std::size_t>(m), 0.0);
        col[static_cast<std::size_t>(r)] = 1.0;
        slack_idx[static_cast<std::size_t>(r)] = splx.add_column(std::move(col), 0.0, 0.0, kInf);
    }

    // Row residuals with every structural variable at its lower bound decide
    // which rows can start on their slack and which need an artificial.
    Vec residual = rhs;
    for (int j = 0; j < n; ++j) {
        const double xj = lp.lower_of(j);
        if (xj == 0.0) continue;
        for (int r = 0; r < m_ineq; ++r) residual[static_cast<std::size_t>(r)] -= lp.ineq_matrix(r, j) * xj;
        for (int r = 0; r < m_eq; ++r) residual[static_cast<std::size_t>(m_ineq + r)] -= lp.eq_matrix(r, j) * xj;
    }

    std::vector<int> basis(static_cast<std::size_t>(m), -1);
    std::vector<int> artificials;
    for (int r = 0; r < m; ++r) {
        const double res = residual[static_cast<std::size_t>(r)];
        if (r < m_ineq && res >= 0.0) {
            basis[static_cast<std::size_t>(r)] = slack_idx[static_cast<std::size_t>(r)];
            continue;
        }
        Vec col(static_cast<std::size_t>(m), 0.0);
        col[static_cast<std::size_t>(r)] = res < 0.0 ? -1.0 : 1.0;
        const int a = splx.add_column(std::move(col), 0.0, 0.0, kInf);
        basis[static_cast<std::size_t>(r)] = a;
        artificials.push_back(a);
    }

    // Phase 1: minimize the total artificial mass.
    for (int a : artificials) splx.set_cost(a, 1.0);
    splx.force_basis(basis);
    sol.iterations = 0;
    LpStatus st = splx.optimize(max_iterations, &sol.iterations);
    if (st == LpStatus::IterationLimit) {
        sol.status = st;
        return sol;
    }
    double phase1 = 0.0;
    for (int a : artificials) phase1 += splx.value(a);
    const double bscale = 1.0 + std::abs(*std::max_element(
                                    rhs.begin(), rhs.end(),
                                    [](double a, double b) { return std::abs(a) < std::abs(b); }));
    if (m > 0 && phase1 > sol.feasibility_tol * bscale) {
        sol.status = LpStatus::Infeasible;
        return sol;
    }

    // Phase 2: real costs; artificials pinned at zero.
    for (int a : artificials) {
        splx.set_cost(a, 0.0);
        splx.fix_at_zero(a);
    }
    for (int j = 0; j < n; ++j) splx.set_cost(j, lp.objective[static_cast<std::size_t>(j)]);
    st = splx.optimize(max_iterations, &sol.iterations);
    sol.status = st;
    if (st != LpStatus::Optimal) return sol;

    for (int j = 0; j < n; ++j) sol.x[static_cast<std::size_t>(j)] = splx.value(j);
    sol.objective = lp.objective_constant;
    for (int j = 0; j < n; ++j)
        sol.objective += lp.objective[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];

    const Vec y = splx.duals();
    sol.ineq_duals.assign(y.begin(), y.begin() + m_ineq);
    sol.eq_duals.assign(y.begin() + m_ineq, y.end());
    sol.reduced_costs.resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        sol.reduced_costs[static_cast<std::size_t>(j)] = splx.reduced_cost(j, y);
    return sol;
}

/// Plain-text dump for eyeballing an instance or feeding it to an external
/// solver by hand. Not a compatibility promise.
inline void write_lp_text(const LpInstance& lp, std::ostream& os) {
    os << "min " << lp.objective_constant;
    for (int j = 0; j < lp.num_vars(); ++j)
        os << " + " << lp.objective[static_cast<std::size_t>(j)] << " x" << j;
    os << "\nsubject to\n";
    for (int r = 0; r < lp.ineq_matrix.rows(); ++r) {
        os << "  ";
        for (int j = 0; j < lp.num_vars(); ++j) {
            const double v = lp.ineq_matrix(r, j);
            if (v != 0.0) os << (j ? " + " : "") << v << " x" << j;
        }
        os << " <= " << lp.ineq_rhs[static_cast<std::size_t>(r)] << "\n";
    }
    for (int r = 0; r < lp.eq_matrix.rows(); ++r) {
        os << "  ";
        for (int j = 0; j < lp.num_vars(); ++j) {
            const double v = lp.eq_matrix(r, j);
            if (v != 0.0) os << (j ? " + " : "") << v << " x" << j;
        }
        os << " = " << lp.eq_rhs[static_cast<std::size_t>(r)] << "\n";
    }
    os << "bounds\n";
    for (int j = 0; j < lp.num_vars(); ++j)
        os << "  " << lp.lower_of(j) << " <= x" << j << " <= " << lp.upper_of(j) << "\n";
}

}  // namespace hemsched
