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

// Shared test fixtures: the worked 5-effect/4-state example table and the
// systems derived from it.

#pragma once

#include <sstream>
#include <string>

#include "gptk/tablecore.hpp"
#include "gptk/theory.hpp"

namespace fixtures {

inline const char *kTable1Csv =
    ",e1,e2,e3,e4,e5\n"
    "w1,1,0,1,1,1\n"
    "w2,1/2,0,1,2/3,3/4\n"
    "w3,1/2,1/2,1,1/3,3/4\n"
    "w4,0,1/2,1,0,1/2\n";

inline gptk::RawTable table1_raw() {
    gptk::RawTable t;
    t.row_labels = {"w1", "w2", "w3", "w4"};
    t.col_labels = {"e1", "e2", "e3", "e4", "e5"};
    auto row = [](const char *a, const char *b, const char *c, const char *d, const char *e) {
        return gptk::Vec{gptk::rat_parse(a), gptk::rat_parse(b), gptk::rat_parse(c),
                         gptk::rat_parse(d), gptk::rat_parse(e)};
    };
    t.entries = {
        row("1", "0", "1", "1", "1"),
        row("1/2", "0", "1", "2/3", "3/4"),
        row("1/2", "1/2", "1", "1/3", "3/4"),
        row("0", "1/2", "1", "0", "1/2"),
    };
    return t;
}

/// The system built from the reduced table: coordinates over the basis
/// effects e1, e2, e3 with e3 the unit measure.
inline gptk::GptSystem table1_system() {
    using gptk::Rat;
    using gptk::rat;
    using gptk::Vec;
    std::vector<Vec> states = {
        {Rat(1), Rat(0), Rat(1)},
        {rat(1, 2), Rat(0), Rat(1)},
        {rat(1, 2), rat(1, 2), Rat(1)},
        {Rat(0), rat(1, 2), Rat(1)},
    };
    std::vector<Vec> effects = {
        {Rat(1), Rat(0), Rat(0)},
        {Rat(0), Rat(1), Rat(0)},
        {rat(2, 3), rat(-2, 3), rat(1, 3)},
    };
    return gptk::make_system("table1", std::move(states), std::move(effects),
                             {Rat(0), Rat(0), Rat(1)});
}

/// gbit with the effect set cut down to {0, u, e1, u-e1}.
inline gptk::GptSystem restricted_gbit() {
    using gptk::Rat;
    using gptk::rat;
    using gptk::Vec;
    std::vector<Vec> states = {
        {Rat(1), Rat(0), Rat(1)},
        {Rat(0), Rat(1), Rat(1)},
        {Rat(-1), Rat(0), Rat(1)},
        {Rat(0), Rat(-1), Rat(1)},
    };
    std::vector<Vec> effects = {
        {rat(1, 2), rat(1, 2), rat(1, 2)},
    };
    return gptk::make_system("gbit-restricted", std::move(states), std::move(effects),
                             {Rat(0), Rat(0), Rat(1)});
}

} // namespace fixtures
