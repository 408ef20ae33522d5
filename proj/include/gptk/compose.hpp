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
 * Bipartite composition. Joint elements are coefficient matrices in the
 * product of the subsystem conjugate bases, stored flattened row-major, so
 * the joint pairing is a plain entrywise contraction. The minimal rule keeps
 * products and their mixtures; the maximal rule keeps everything that is
 * non-negative on product effects; the generalized maximal rule intersects
 * the two one-directional extensions and remains correct for restricted
 * subsystems.
 */

#pragma once

#include <vector>

#include "gptk/geometry.hpp"
#include "gptk/theory.hpp"

namespace gptk {

enum class TensorRule { Min, Max, MaxGeneralized, Explicit };

struct JointSystem {
    GptSystem left;
    GptSystem right;
    TensorRule rule = TensorRule::Min;
    Cone state_cone; ///< dimension dim_left * dim_right
    std::vector<Vec> effect_generators;
    Vec unit;
};

/// Outer product, flattened row-major (left index major).
Vec product(const Vec &a, const Vec &b);

Mat as_matrix(const Vec &joint, int n, int m);
Vec flatten(const Mat &coords);

JointSystem min_tensor(const GptSystem &a, const GptSystem &b);

/// Throws RestrictedSubsystem unless both factors satisfy no-restriction.
JointSystem max_tensor(const GptSystem &a, const GptSystem &b);

JointSystem gen_max_tensor(const GptSystem &a, const GptSystem &b);

/// User-supplied joint cone; validates the min/genmax nesting and the
/// conditional-state condition on its generators.
JointSystem explicit_tensor(const GptSystem &a, const GptSystem &b, Cone joint_cone);

Rat joint_eval(const Vec &effect, const Vec &state);

enum class Side { Left, Right };

/// Marginal state of the kept side, contracting the other side with its unit.
Vec marginal(const JointSystem &sys, const Vec &state, Side keep);

struct ConditionalState {
    Vec sub;
    Vec normalized;
    Rat probability;
};

/**
 * Conditional state of the side opposite to `effect_side`, given that the
 * effect was observed there. Throws ZeroProbabilityCondition when the
 * conditioning probability vanishes.
 */
ConditionalState conditional(const JointSystem &sys, const Vec &state, const Vec &effect,
                             Side effect_side = Side::Right);

/**
 * Exact membership in the minimal tensor cone. Feasible answers carry the
 * convex decomposition into products of extremal subsystem states;
 * infeasible ones carry a separating functional over the joint space.
 */
Feasibility is_separable(const JointSystem &sys, const Vec &state);

/// Same question over an explicitly supplied finite set of product states.
Feasibility is_separable_over(const std::vector<Vec> &product_generators, const Vec &state);

/// Unique expansion coefficients of a joint state in products of the two
/// subsystem bases. Throws SingularBasis.
Mat product_basis_decomposition(const JointSystem &sys, const Vec &state,
                                const std::vector<Vec> &basis_a,
                                const std::vector<Vec> &basis_b);

/// Every product of extremal states, the minimal rule's generators.
std::vector<Vec> product_state_generators(const GptSystem &a, const GptSystem &b);

} // namespace gptk
