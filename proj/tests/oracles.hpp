#pragma once

// Brute-force reference implementations used only by the test suites. They
// deliberately avoid the library's production code paths so that agreement
// is evidence, not tautology.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "hemsched/appliance.hpp"
#include "hemsched/lp.hpp"

namespace oracles {

/// Load at each slot as a sum of shifted profiles: a launch at s contributes
/// g(ell - s + 1) at slot ell.
inline hemsched::Vec shifted_profile_load(const hemsched::LoadProfile& profile,
                                          const std::vector<int>& launches,
                                          int horizon) {
    hemsched::Vec out(static_cast<std::size_t>(horizon), 0.0);
    for (int ell = 1; ell <= horizon; ++ell) {
        double s = 0.0;
        for (int launch : launches) s += profile.at(ell - launch + 1);
        out[static_cast<std::size_t>(ell - 1)] = s;
    }
    return out;
}

/// Minimum objective over all vertices of a bounded LP, found by enumerating
/// candidate active sets. Requires finite bounds on every variable. Returns
/// +inf when no feasible vertex exists.
inline double vertex_enumeration_optimum(const hemsched::LpInstance& lp) {
    const int n = static_cast<int>(lp.objective.size());
    struct Row {
        std::vector<double> a;
        double b;
        bool equality;
    };
    std::vector<Row> rows;
    for (int r = 0; r < lp.ineq_matrix.rows(); ++r) {
        Row row;
        row.a.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row.a[static_cast<std::size_t>(j)] = lp.ineq_matrix(r, j);
        row.b = lp.ineq_rhs[static_cast<std::size_t>(r)];
        row.equality = false;
        rows.push_back(row);
    }
    for (int r = 0; r < lp.eq_matrix.rows(); ++r) {
        Row row;
        row.a.resize(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) row.a[static_cast<std::size_t>(j)] = lp.eq_matrix(r, j);
        row.b = lp.eq_rhs[static_cast<std::size_t>(r)];
        row.equality = true;
        rows.push_back(row);
    }
    // Bounds participate as candidate active constraints too.
    for (int j = 0; j < n; ++j) {
        Row low;
        low.a.assign(static_cast<std::size_t>(n), 0.0);
        low.a[static_cast<std::size_t>(j)] = -1.0;
        low.b = -lp.lower[static_cast<std::size_t>(j)];
        low.equality = false;
        rows.push_back(low);
        Row up;
        up.a.assign(static_cast<std::size_t>(n), 0.0);
        up.a[static_cast<std::size_t>(j)] = 1.0;
        up.b = lp.upper[static_cast<std::size_t>(j)];
        up.equality = false;
        rows.push_back(up);
    }

    const int m = static_cast<int>(rows.size());
    std::vector<int> pick(static_cast<std::size_t>(n));
    double best = std::numeric_limits<double>::infinity();

    std::vector<double> sys(static_cast<std::size_t>(n * (n + 1)));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            // Equalities must all be active.
            for (int r = 0; r < m; ++r) {
                if (rows[static_cast<std::size_t>(r)].equality &&
                    std::find(pick.begin(), pick.end(), r) == pick.end())
                    return;
            }
            // Solve the n x n active system by Gaussian elimination.
            for (int i = 0; i < n; ++i) {
                const Row& row = rows[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
                for (int j = 0; j < n; ++j)
                    sys[static_cast<std::size_t>(i * (n + 1) + j)] = row.a[static_cast<std::size_t>(j)];
                sys[static_cast<std::size_t>(i * (n + 1) + n)] = row.b;
            }
            std::vector<double> x(static_cast<std::size_t>(n));
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
            bool singular = false;
            for (int col = 0; col < n && !singular; ++col) {
                int piv = -1;
                double pmax = 1e-9;
                for (int r = col; r < n; ++r) {
                    const double v = std::abs(sys[static_cast<std::size_t>(r * (n + 1) + col)]);
                    if (v > pmax) {
                        pmax = v;
                        piv = r;
                    }
                }
                if (piv < 0) {
                    singular = true;
                    break;
                }
                for (int j = 0; j <= n; ++j)
                    std::swap(sys[static_cast<std::size_t>(col * (n + 1) + j)],
                              sys[static_cast<std::size_t>(piv * (n + 1) + j)]);
                for (int r = 0; r < n; ++r) {
                    if (r == col) continue;
                    const double f = sys[static_cast<std::size_t>(r * (n + 1) + col)] /
                                     sys[static_cast<std::size_t>(col * (n + 1) + col)];
                    if (f == 0.0) continue;
                    for (int j = col; j <= n; ++j)
                        sys[static_cast<std::size_t>(r * (n + 1) + j)] -=
                            f * sys[static_cast<std::size_t>(col * (n + 1) + j)];
                }
            }
            if (singular) return;
            for (int i = 0; i < n; ++i)
                x[static_cast<std::size_t>(i)] = sys[static_cast<std::size_t>(i * (n + 1) + n)] /
                                                 sys[static_cast<std::size_t>(i * (n + 1) + i)];
            // Feasibility of the candidate vertex.
            const double ftol = 1e-7;
            for (const auto& row : rows) {
                double lhs = 0.0;
                for (int j = 0; j < n; ++j)
                    lhs += row.a[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
                if (row.equality) {
                    if (std::abs(lhs - row.b) > ftol) return;
                } else if (lhs > row.b + ftol) {
                    return;
                }
            }
            double obj = lp.objective_constant;
            for (int j = 0; j < n; ++j)
                obj += lp.objective[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
            best = std::min(best, obj);
            return;
        }
        for (int r = start; r <= m - (n - depth); ++r) {
            pick[static_cast<std::size_t>(depth)] = r;
            rec(r + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace oracles
