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

/**
 * @file
 * Exact rational linear programming.
 *
 * Two-phase primal simplex with Bland's rule over arbitrary-precision
 * rationals. No floating tolerances anywhere: feasibility answers are exact
 * and infeasibility comes with a Farkas certificate that can be re-verified
 * outside the solver.
 */

#pragma once

#include <vector>

#include "gptk/rational.hpp"

namespace gptk {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;
    Vec x; ///< primal optimum (Optimal only)
    /// Infeasibility certificate y with yᵀA >= 0 (per column) and yᵀb < 0,
    /// in terms of the rows as given by the caller.
    Vec farkas;
};

/// maximize c·x  subject to  A x = b, x >= 0.
LpSolution lp_solve_standard(const Mat &a, const Vec &b, const Vec &c);

/**
 * General-form exact LP over free variables:
 *
 *   max / min  c·x   subject to   eq_lhs x = eq_rhs,  ineq_lhs x >= ineq_rhs.
 *
 * On infeasibility, `farkas` holds multipliers over the stacked rows
 * [eq; ineq] satisfying Aᵀy = 0, y_ineq <= 0 and yᵀb < 0.
 */
struct GeneralLp {
    Mat eq_lhs;
    Vec eq_rhs;
    Mat ineq_lhs;
    Vec ineq_rhs;
    Vec objective;
    bool maximize = true;
};

LpSolution lp_solve_general(const GeneralLp &problem);

} // namespace gptk
