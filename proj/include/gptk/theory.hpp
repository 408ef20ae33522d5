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
 * Single-system GPT semantics: normalized states and their cone, effects
 * between the zero effect and the unit measure, norms, the maximal
 * consistent effect set, joint measurability, and the effect partial order.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gptk/geometry.hpp"
#include "gptk/rational.hpp"

namespace gptk {

/**
 * An immutable single system.
 *
 * Invariants (checked by validate_system): u(omega) = 1 on every state
 * vertex, every (effect, state) pairing lies in [0,1], and the effect body
 * contains the zero effect, the unit, and the complement of each of its
 * vertices.
 *
 * Numeric systems (the qubit ball) carry no vertex lists; the exact
 * operations below reject them and the dedicated qubit routines apply.
 */
struct GptSystem {
    std::string name;
    int dim = 0;
    ConvexBody state_body;
    Cone state_cone;
    ConvexBody effect_body;
    Vec unit;
    Vec zero;
    bool numeric = false;
    double tolerance = 0.0;
};

/// A set of jointly measurable, mutually excluding effects.
struct Measurement {
    std::vector<Vec> effects;
    bool complete = false;
};

/**
 * Assemble a system from state and effect generators. The effect list is
 * closed under complementation (u - e is appended for every generator) and
 * both lists are reduced to their extremal elements. No validation happens
 * here; call validate_system.
 */
GptSystem make_system(std::string name, std::vector<Vec> states, std::vector<Vec> effects,
                      Vec unit);

/// ||omega|| = u(omega). Throws NotAState outside the state cone.
Rat state_norm(const GptSystem &sys, const Vec &omega);

/// ||e|| = max over the state space, attained at a vertex. Throws NotAnEffect.
Rat effect_norm(const GptSystem &sys, const Vec &effect);

/// H-form of the maximal effect set: dual cone intersected with its
/// reflection at the unit measure.
BodyHrep emax_hrep(const GptSystem &sys);

/// Vertices of the maximal consistent effect set.
ConvexBody compute_emax(const GptSystem &sys, const CancelToken *cancel = nullptr);

struct NoRestrictionResult {
    bool holds = false;
    std::optional<Vec> missing; ///< an extremal maximal effect absent from the effect body
};

NoRestrictionResult check_no_restriction(const GptSystem &sys);

/// Membership of a vector in the system's effect body.
bool effect_member(const GptSystem &sys, const Vec &effect);

struct JointMeasurability {
    bool feasible = false;
    std::optional<Vec> and_effect; ///< lexicographically minimal AND effect
    std::optional<Vec> certificate;
};

/**
 * Four-set intersection criterion for joint measurability of two effects.
 * The witness is the AND effect from which the full Boolean algebra of
 * outcomes can be reconstructed.
 */
JointMeasurability jointly_measurable(const GptSystem &sys, const Vec &ei, const Vec &ej);

/// All vertices of the feasible AND-effect region (enumeration hook).
std::vector<Vec> jointly_measurable_witnesses(const GptSystem &sys, const Vec &ei,
                                              const Vec &ej);

/// {e_i AND e_j, e_i AND NOT e_j, NOT e_i AND e_j, NOT e_i AND NOT e_j}.
std::array<Vec, 4> boolean_effects(const Vec &ei, const Vec &ej, const Vec &unit,
                                   const Vec &and_effect);

/// Append the failure effect when the given effects do not sum to the unit.
Measurement complete_measurement(const GptSystem &sys, std::vector<Vec> effects);

/// Partial order induced by the dual cone: ei <= ej iff ej - ei is
/// non-negative on every state.
bool effect_leq(const GptSystem &sys, const Vec &ei, const Vec &ej);

struct ValidationIssue {
    std::string what;
};

struct ValidationReport {
    bool valid = true;
    std::vector<ValidationIssue> issues;
};

ValidationReport validate_system(const GptSystem &sys);

} // namespace gptk
