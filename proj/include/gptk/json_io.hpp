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
 * File formats. Scalars cross the file boundary as exact "p/q" strings;
 * decimal input is accepted and parsed exactly. All emitters are
 * deterministic: identical inputs produce byte-identical files.
 */

#pragma once

#include <iosfwd>
#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

#include "gptk/bell.hpp"
#include "gptk/compose.hpp"
#include "gptk/tablecore.hpp"
#include "gptk/theory.hpp"

namespace gptk {

using Json = nlohmann::json;

Json vec_to_json(const Vec &v);
Vec vec_from_json(const Json &j);
Json mat_to_json(const Mat &m);
Mat mat_from_json(const Json &j);

/// CSV table: first row carries effect labels, first column state labels.
RawTable read_raw_table_csv(std::istream &in);
void write_raw_table_csv(std::ostream &out, const RawTable &table);

Json coordrep_to_json(const CoordRep &rep);

/// {"name", "dim", "states", "effects", "unit"}; numeric systems carry
/// "numeric": true and their tolerance.
Json system_to_json(const GptSystem &sys);
GptSystem system_from_json(const Json &j);

Json joint_system_to_json(const JointSystem &sys);
JointSystem joint_system_from_json(const Json &j);

/// Joint state interchange: {"left", "right", "rule", "coords"}.
Json joint_state_to_json(const JointSystem &sys, const Vec &state);
Vec joint_state_from_json(const Json &j, const JointSystem &sys);

struct ChshMeasurements {
    BinaryMeasurement a0, a1, b0, b1;
};

Json measurements_to_json(const ChshMeasurements &m);
ChshMeasurements measurements_from_json(const Json &j);

/// 16 rows of (a, b, x, y, p).
void write_behavior_csv(std::ostream &out, const Behavior &b);
Behavior read_behavior_csv(std::istream &in);

std::string rule_name(TensorRule rule);
TensorRule rule_from_name(const std::string &name);

} // namespace gptk
