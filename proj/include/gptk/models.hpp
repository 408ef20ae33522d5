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
 * Built-in systems: classical n-level systems, the gbit, regular-polygon
 * theories, the numeric qubit shell, the Holevo restricted-classical
 * construction, and classicalization by effect extension.
 */

#pragma once

#include <optional>

#include "gptk/theory.hpp"

namespace gptk {

/// Classical k-level system: simplex states, hypercube effects.
GptSystem classical(int k);

/// The square-state-space generalized bit.
GptSystem gbit();

/**
 * Regular k-gon state space at height 1 (k >= 3), no-restriction effects.
 *
 * Vertices are exact rational points on the unit circle chosen within 1e-9
 * of the regular angles 2*pi*i/k, so the exact kernel applies throughout;
 * k = 4 lands on the gbit square exactly.
 */
GptSystem polygon(int k);

/// Numeric qubit shell (dim 4, tolerance 1e-9); operations live in qubit.hpp.
GptSystem qubit();

/**
 * Search for an invertible linear map carrying states onto states
 * bijectively whose adjoint carries the target's effects back onto the
 * source's. Returns the matrix of the map, or nullopt.
 */
std::optional<Mat> find_affine_isomorphism(const GptSystem &from, const GptSystem &to);

struct HolevoResult {
    GptSystem system;
    Mat state_projection; ///< 3 x 4, eliminates the fourth coordinate
    Mat effect_projection;
    Mat iso_to_gbit;
};

/**
 * Holevo's construction: a classical 4-level system whose effects are
 * restricted to the hyperplane x1 + x2 = x3 + x4, quotiented by the induced
 * operational equivalence. The result is a square-state-space system
 * together with the isomorphism onto the gbit.
 */
HolevoResult holevo_restricted();

struct ClassicalExtension {
    GptSystem classical_system;
    /// Value rows of the source's extremal effects in the new system.
    std::vector<Vec> embedded_effects;
};

/// Value row (e(omega_1), ..., e(omega_N)) of an effect over the extremal states.
Vec embed_effect(const GptSystem &sys, const Vec &effect);

/**
 * Extend a system with perfectly distinguishing effects: the result is the
 * classical system over the extremal states, with every original effect
 * represented as a coarse-graining that reproduces all pairings exactly.
 * Throws Unsupported for numeric systems.
 */
ClassicalExtension classical_extension(const GptSystem &sys);

} // namespace gptk
