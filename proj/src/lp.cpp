// Copyright 2026 The gptkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gptk/lp.hpp"

#include <algorithm>

#include "gptk/errors.hpp"
#include "gptk/linalg.hpp"

namespace gptk {

namespace {

// Dense tableau simplex. Columns [0, n) are structural, [n, n+m) artificial,
// column n+m is the right-hand side. basis[i] is the variable of row i.
struct Tableau {
    Mat t;
    std::vector<int> basis;
    int n = 0;       // structural columns
    int m = 0;       // rows (shrinks if redundant rows are dropped)
    int rhs_col = 0; // fixed: n + original row count

    Rat &rhs(int row) { return t[row][rhs_col]; }

    void pivot(int row, int col) {
        Rat inv = 1 / t[row][col];
        for (Rat &v : t[row]) {
            v *= inv;
        }
        for (int r = 0; r < static_cast<int>(t.size()); ++r) {
            if (r != row && t[r][col] != 0) {
                Rat f = t[r][col];
                for (std::size_t j = 0; j < t[r].size(); ++j) {
                    t[r][j] -= f * t[row][j];
                }
            }
        }
        basis[row] = col;
    }

    // Bland's rule: smallest eligible entering index, leaving row by minimum
    // ratio with smallest basis variable breaking ties. Returns false when no
    // entering column exists (optimality), throws nothing; unboundedness is
    // reported through `unbounded`.
    bool step(const Vec &cost, int entering_limit, bool &unbounded) {
        int enter = -1;
        // reduced cost: cost[j] - sum_i cost[basis[i]] * t[i][j]
        Vec cb(m);
        for (int i = 0; i < m; ++i) {
            cb[i] = cost[basis[i]];
        }
        for (int j = 0; j < entering_limit; ++j) {
            bool basic = false;
            for (int i = 0; i < m; ++i) {
                if (basis[i] == j) {
                    basic = true;
                    break;
                }
            }
            if (basic) {
                continue;
            }
            Rat rc = cost[j];
            for (int i = 0; i < m; ++i) {
                if (cb[i] != 0 && t[i][j] != 0) {
                    rc -= cb[i] * t[i][j];
                }
            }
            if (rc > 0) {
                enter = j;
                break;
            }
        }
        if (enter < 0) {
            unbounded = false;
            return false;
        }
        int leave = -1;
        Rat best_ratio;
        for (int i = 0; i < m; ++i) {
            if (t[i][enter] > 0) {
                Rat ratio = rhs(i) / t[i][enter];
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
        }
        if (leave < 0) {
            unbounded = true;
            return false;
        }
        pivot(leave, enter);
        unbounded = false;
        return true;
    }
};

} // namespace

LpSolution lp_solve_standard(const Mat &a_in, const Vec &b_in, const Vec &c) {
    int m = static_cast<int>(a_in.size());
    int n = m > 0 ? static_cast<int>(a_in[0].size()) : static_cast<int>(c.size());
    if (static_cast<int>(c.size()) != n || static_cast<int>(b_in.size()) != m) {
        throw DimensionMismatch("lp_solve_standard");
    }

    Tableau tab;
    tab.n = n;
    tab.m = m;
    tab.rhs_col = n + m;
    tab.t.assign(m, Vec(n + m + 1, Rat(0)));
    std::vector<int> flipped(m, 0);
    for (int i = 0; i < m; ++i) {
        bool flip = b_in[i] < 0;
        flipped[i] = flip ? -1 : 1;
        for (int j = 0; j < n; ++j) {
            tab.t[i][j] = flip ? Rat(-a_in[i][j]) : a_in[i][j];
        }
        tab.t[i][n + i] = 1;
        tab.t[i][n + m] = flip ? Rat(-b_in[i]) : b_in[i];
    }
    tab.basis.resize(m);
    for (int i = 0; i < m; ++i) {
        tab.basis[i] = n + i;
    }

    // Phase 1: maximize -(sum of artificials).
    Vec phase1(n + m, Rat(0));
    for (int i = 0; i < m; ++i) {
        phase1[n + i] = -1;
    }
    bool unbounded = false;
    while (tab.step(phase1, n + m, unbounded)) {
    }

    Rat infeas = 0;
    for (int i = 0; i < m; ++i) {
        if (tab.basis[i] >= n) {
            infeas += tab.rhs(i);
        }
    }
    if (infeas > 0) {
        // y = cBᵀ B⁻¹, read from the artificial columns; then undo row flips.
        LpSolution sol;
        sol.status = LpStatus::Infeasible;
        sol.farkas = Vec(m, Rat(0));
        for (int k = 0; k < m; ++k) {
            Rat yk = 0;
            for (int i = 0; i < m; ++i) {
                if (tab.basis[i] >= n) {
                    yk -= tab.t[i][n + k];
                }
            }
            sol.farkas[k] = yk * flipped[k];
        }
        // Certificate is yᵀA >= 0 per column and yᵀb < 0; verify exactly.
        Rat yb = 0;
        for (int i = 0; i < m; ++i) {
            yb += sol.farkas[i] * b_in[i];
        }
        if (yb >= 0) {
            throw SingularSystem("lp: Farkas certificate failed verification (rhs)");
        }
        for (int j = 0; j < n; ++j) {
            Rat ya = 0;
            for (int i = 0; i < m; ++i) {
                ya += sol.farkas[i] * a_in[i][j];
            }
            if (ya < 0) {
                throw SingularSystem("lp: Farkas certificate failed verification (column)");
            }
        }
        return sol;
    }

    // Drive leftover artificials out of the basis; drop redundant rows.
    for (int i = static_cast<int>(tab.basis.size()) - 1; i >= 0; --i) {
        if (tab.basis[i] < n) {
            continue;
        }
        int col = -1;
        for (int j = 0; j < n; ++j) {
            if (tab.t[i][j] != 0) {
                col = j;
                break;
            }
        }
        if (col >= 0) {
            tab.pivot(i, col);
        } else {
            tab.t.erase(tab.t.begin() + i);
            tab.basis.erase(tab.basis.begin() + i);
            --tab.m;
        }
    }
    m = tab.m;

    // Phase 2: artificial columns are excluded from entering.
    Vec phase2(n + tab.m, Rat(0));
    for (int j = 0; j < n; ++j) {
        phase2[j] = c[j];
    }
    while (tab.step(phase2, n, unbounded)) {
    }
    if (unbounded) {
        LpSolution sol;
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    LpSolution sol;
    sol.status = LpStatus::Optimal;
    sol.x = zero_vec(n);
    for (int i = 0; i < tab.m; ++i) {
        if (tab.basis[i] < n) {
            sol.x[tab.basis[i]] = tab.rhs(i);
        }
    }
    sol.objective = dot(sol.x, c);
    return sol;
}

LpSolution lp_solve_general(const GeneralLp &p) {
    int n = static_cast<int>(p.objective.size());
    int me = static_cast<int>(p.eq_lhs.size());
    int mi = static_cast<int>(p.ineq_lhs.size());
    int cols = 2 * n + mi; // x = pos - neg, one slack per inequality

    Mat a(me + mi, Vec(cols, Rat(0)));
    Vec b(me + mi);
    for (int i = 0; i < me; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i][j] = p.eq_lhs[i][j];
            a[i][n + j] = -p.eq_lhs[i][j];
        }
        b[i] = p.eq_rhs[i];
    }
    for (int i = 0; i < mi; ++i) {
        for (int j = 0; j < n; ++j) {
            a[me + i][j] = p.ineq_lhs[i][j];
            a[me + i][n + j] = -p.ineq_lhs[i][j];
        }
        a[me + i][2 * n + i] = -1;
        b[me + i] = p.ineq_rhs[i];
    }
    Vec c(cols, Rat(0));
    for (int j = 0; j < n; ++j) {
        c[j] = p.maximize ? p.objective[j] : Rat(-p.objective[j]);
        c[n + j] = -c[j];
    }

    LpSolution inner = lp_solve_standard(a, b, c);
    LpSolution sol;
    sol.status = inner.status;
    if (inner.status == LpStatus::Optimal) {
        sol.x = zero_vec(n);
        for (int j = 0; j < n; ++j) {
            sol.x[j] = inner.x[j] - inner.x[n + j];
        }
        sol.objective = dot(sol.x, p.objective);
    } else if (inner.status == LpStatus::Infeasible) {
        sol.farkas = inner.farkas;
    }
    return sol;
}

} // namespace gptk
