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
 * CHSH scenario over a bipartite system: two binary measurements per side,
 * behaviors p(a,b|x,y), correlators, the CHSH value, exact maximization of
 * CHSH over the joint state cone, no-signaling verification, and the PR box.
 */

#pragma once

#include <array>
#include <string>
#include <vector>

#include "gptk/compose.hpp"

namespace gptk {

/// Conditional distribution of a 2-party, 2-setting, 2-outcome scenario.
struct Behavior {
    std::array<Rat, 16> p{};

    Rat &at(int a, int b, int x, int y) { return p[a * 8 + b * 4 + x * 2 + y]; }
    const Rat &at(int a, int b, int x, int y) const { return p[a * 8 + b * 4 + x * 2 + y]; }
};

/// A complete binary measurement: two effects summing to the unit measure.
struct BinaryMeasurement {
    Vec outcome0;
    Vec outcome1;
};

Behavior behavior_from(const JointSystem &sys, const Vec &state, const BinaryMeasurement &a0,
                       const BinaryMeasurement &a1, const BinaryMeasurement &b0,
                       const BinaryMeasurement &b1);

std::array<std::array<Rat, 2>, 2> correlators(const Behavior &b);

/// S = |C00 + C01 + C10 - C11|.
Rat chsh(const Behavior &b);

/// p(a,b|x,y) = 1/2 when a xor b = x·y, else 0.
Behavior pr_box();

struct ChshMax {
    Rat value;
    Vec state;
};

/**
 * Exact maximum of the CHSH value over the normalized joint states, by
 * evaluation on generators (minimal rule) or by exact LP over the halfspace
 * description. Throws UnboundedCone if the joint cone admits unbounded
 * CHSH, which signals an invalid joint system.
 */
ChshMax max_chsh(const JointSystem &sys, const BinaryMeasurement &a0,
                 const BinaryMeasurement &a1, const BinaryMeasurement &b0,
                 const BinaryMeasurement &b1);

struct NoSignalingReport {
    bool passes = true;
    std::vector<std::string> violations;
};

NoSignalingReport no_signaling_check(const Behavior &b);

} // namespace gptk
