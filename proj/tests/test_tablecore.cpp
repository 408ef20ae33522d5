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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"

#include "gptk/errors.hpp"
#include "gptk/linalg.hpp"
#include "gptk/tablecore.hpp"

using namespace gptk;

TEST_CASE("reduce_table merges duplicate columns and rows") {
    RawTable raw;
    raw.row_labels = {"w1", "w2"};
    raw.col_labels = {"m1", "m2", "m3"};
    raw.entries = {
        {rat(1), rat(1), rat(0)},
        {rat(0), rat(0), rat(1)},
    };
    ProbTable t = reduce_table(raw);
    REQUIRE(t.effects.size() == 2); // m1 == m2 merged
    CHECK(t.effects[0].members == std::vector<std::string>{"m1", "m2"});
    CHECK(t.states.size() == 2);
    CHECK(t.rank == 2);

    // duplicate states too
    raw.row_labels = {"w1", "w2", "w3"};
    raw.entries.push_back({rat(0), rat(0), rat(1)});
    ProbTable t2 = reduce_table(raw);
    CHECK(t2.states.size() == 2);
    CHECK(t2.states[1].members == std::vector<std::string>{"w2", "w3"});
}

TEST_CASE("reduce_table keeps the worked example intact") {
    ProbTable t = reduce_table(fixtures::table1_raw());
    CHECK(t.effects.size() == 5);
    CHECK(t.states.size() == 4);
    CHECK(t.rank == 3);
    // internal orientation: rows are effects
    CHECK(t.entries[0][1] == rat(1, 2));
    CHECK(t.entries[4][3] == rat(1, 2));
}

TEST_CASE("reduce_table trivial and error cases") {
    RawTable one;
    one.row_labels = {"w"};
    one.col_labels = {"e"};
    one.entries = {{rat(1)}};
    ProbTable t = reduce_table(one);
    CHECK(t.rank == 1);
    CHECK(t.entries == Mat{{rat(1)}});

    RawTable empty;
    CHECK_THROWS_AS(reduce_table(empty), EmptyTable);

    RawTable bad = one;
    bad.entries = {{rat(3, 2)}};
    CHECK_THROWS_AS(reduce_table(bad), ParseError);
}

TEST_CASE("dedup is idempotent") {
    RawTable raw = fixtures::table1_raw();
    ProbTable once = reduce_table(raw);
    RawTable again;
    again.col_labels.resize(once.effects.size());
    for (std::size_t i = 0; i < once.effects.size(); ++i) {
        again.col_labels[i] = once.effects[i].label;
    }
    again.row_labels.resize(once.states.size());
    for (std::size_t j = 0; j < once.states.size(); ++j) {
        again.row_labels[j] = once.states[j].label;
    }
    again.entries = transpose(once.entries);
    ProbTable twice = reduce_table(again);
    CHECK(twice.entries == once.entries);
}

TEST_CASE("convex redundancy finds e5 with the expected certificate") {
    ProbTable t = reduce_table(fixtures::table1_raw());
    std::vector<ConvexCertificate> certs = find_convex_redundant(t);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].is_effect);
    CHECK(certs[0].index == 4);
    REQUIRE(certs[0].combination.size() == 2);
    CHECK(certs[0].combination[0] == std::pair<int, Rat>{0, rat(1, 2)});
    CHECK(certs[0].combination[1] == std::pair<int, Rat>{2, rat(1, 2)});

    ProbTable dropped = drop_redundant(t, certs);
    CHECK(dropped.effects.size() == 4);
    CHECK(dropped.rank == 3);
    CHECK(find_convex_redundant(dropped).empty());
}

TEST_CASE("simplex table has no redundancy") {
    RawTable raw;
    raw.row_labels = {"a", "b", "c"};
    raw.col_labels = {"x", "y", "z"};
    raw.entries = {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}};
    CHECK(find_convex_redundant(reduce_table(raw)).empty());
}

TEST_CASE("midpoint effect is flagged, matching a direct algebraic oracle") {
    RawTable raw;
    raw.row_labels = {"w1", "w2"};
    raw.col_labels = {"e1", "e2", "e3"};
    raw.entries = {
        {rat(1), rat(0), rat(1, 2)},
        {rat(0), rat(1), rat(1, 2)},
    };
    ProbTable t = reduce_table(raw);

    // Oracle: with two candidate parents, e3 = λ e1 + (1-λ) e2 has the unique
    // solution λ = 1/2 from the first coordinate, valid iff λ in [0,1] and the
    // remaining coordinates agree.
    Rat lambda = (t.entries[2][0] - t.entries[1][0]) / (t.entries[0][0] - t.entries[1][0]);
    CHECK(lambda == rat(1, 2));
    CHECK(lambda * t.entries[0][1] + (1 - lambda) * t.entries[1][1] == t.entries[2][1]);

    std::vector<ConvexCertificate> certs = find_convex_redundant(t);
    REQUIRE(certs.size() == 1);
    CHECK(certs[0].index == 2);
}

TEST_CASE("rank examples") {
    ProbTable t = drop_redundant(reduce_table(fixtures::table1_raw()),
                                 find_convex_redundant(reduce_table(fixtures::table1_raw())));
    CHECK(compute_rank(t) == 3);

    RawTable ones;
    ones.row_labels = {"a", "b", "c", "d"};
    ones.col_labels = {"e"};
    ones.entries = {{rat(1)}, {rat(1)}, {rat(1)}, {rat(1)}};
    // all-ones table collapses to a single class of rank 1
    CHECK(reduce_table(ones).rank == 1);

    RawTable delta;
    delta.row_labels = {"a", "b", "c", "d"};
    delta.col_labels = {"p", "q", "r", "s"};
    delta.entries = Mat(4, zero_vec(4));
    for (int i = 0; i < 4; ++i) {
        delta.entries[i][i] = 1;
    }
    CHECK(reduce_table(delta).rank == 4);
}

TEST_CASE("rank is stable under appended convex combinations") {
    ProbTable t = reduce_table(fixtures::table1_raw());
    int before = compute_rank(t);
    ProbTable extended = t;
    // mix rows 0 and 1 with weights 1/3, 2/3
    Vec mix(t.entries[0].size());
    for (std::size_t j = 0; j < mix.size(); ++j) {
        mix[j] = rat(1, 3) * t.entries[0][j] + rat(2, 3) * t.entries[1][j];
    }
    extended.entries.push_back(mix);
    extended.effects.push_back({"mix", {"mix"}});
    CHECK(compute_rank(extended) == before);
}

TEST_CASE("coordinate representation reproduces the worked example") {
    ProbTable raw = reduce_table(fixtures::table1_raw());
    ProbTable t = drop_redundant(raw, find_convex_redundant(raw));
    CoordRep rep = coordinate_rep(t);
    CHECK(rep.dim == 3);
    CHECK(rep.basis_effect_rows == std::vector<int>{0, 1, 2});
    CHECK(rep.basis_state_cols == std::vector<int>{0, 1, 2});

    CHECK(rep.effect_coords[0] == Vec{rat(1), rat(0), rat(0)});
    CHECK(rep.effect_coords[3] == Vec{rat(2, 3), rat(-2, 3), rat(1, 3)});
    CHECK(rep.state_coords[1] == Vec{rat(1, 2), rat(0), rat(1)});

    CHECK(rep.conjugate_basis[0] == Vec{rat(2), rat(-2), rat(0), rat(0)});
    CHECK(rep.conjugate_basis[1] == Vec{rat(0), rat(-2), rat(2), rat(0)});
    CHECK(rep.conjugate_basis[2] == Vec{rat(-1), rat(2), rat(0), rat(0)});

    // the fourth state decomposes as -w1 + w2 + w3
    Mat deps = state_dependencies(t, rep);
    CHECK(deps[3] == Vec{rat(-1), rat(1), rat(1), rat(0)});

    // round trip: pairing reproduces every table entry exactly
    for (std::size_t i = 0; i < t.entries.size(); ++i) {
        for (std::size_t j = 0; j < t.entries[i].size(); ++j) {
            CHECK(evaluate(rep.effect_coords[i], rep.state_coords[j]) == t.entries[i][j]);
        }
    }
}

TEST_CASE("coordinate representation of a simplex table") {
    RawTable raw;
    raw.row_labels = {"a", "b", "c"};
    raw.col_labels = {"x", "y", "z"};
    raw.entries = {{rat(1), rat(0), rat(0)}, {rat(0), rat(1), rat(0)}, {rat(0), rat(0), rat(1)}};
    CoordRep rep = coordinate_rep(reduce_table(raw));
    CHECK(rep.dim == 3);
    for (int j = 0; j < 3; ++j) {
        Vec expect = zero_vec(3);
        expect[j] = 1;
        CHECK(rep.state_coords[j] == expect);
    }
}

TEST_CASE("evaluate") {
    CHECK(evaluate({rat(1), rat(0), rat(0)}, {rat(1, 2), rat(0), rat(1)}) == rat(1, 2));
    CHECK(evaluate({rat(2, 3), rat(-2, 3), rat(1, 3)}, {rat(1, 2), rat(1, 2), rat(1)}) ==
          rat(1, 3));
    CHECK(evaluate({rat(5), rat(-1)}, zero_vec(2)) == 0);
    CHECK_THROWS_AS(evaluate({rat(1)}, {rat(1), rat(2)}), DimensionMismatch);
}

TEST_CASE("certificates remain valid on random tables") {
    std::mt19937_64 rng(424242);
    std::uniform_int_distribution<int> num(0, 4);
    for (int trial = 0; trial < 15; ++trial) {
        RawTable raw;
        int rows = 3 + static_cast<int>(rng() % 3);
        int cols = 3 + static_cast<int>(rng() % 3);
        for (int r = 0; r < rows; ++r) {
            raw.row_labels.push_back("w" + std::to_string(r));
        }
        for (int c = 0; c < cols; ++c) {
            raw.col_labels.push_back("e" + std::to_string(c));
        }
        raw.entries.assign(rows, Vec(cols));
        for (int r = 0; r < rows; ++r) {
            for (int c = 0; c < cols; ++c) {
                raw.entries[r][c] = rat(num(rng), 4);
            }
        }
        ProbTable t = reduce_table(raw);
        for (const ConvexCertificate &cert : find_convex_redundant(t)) {
            Rat total = 0;
            Vec target = cert.is_effect ? t.entries[cert.index]
                                        : transpose(t.entries)[cert.index];
            Vec mix = zero_vec(static_cast<int>(target.size()));
            Mat pool = cert.is_effect ? t.entries : transpose(t.entries);
            for (const auto &[idx, w] : cert.combination) {
                CHECK(w > 0);
                CHECK(idx != cert.index);
                total += w;
                mix = vec_add(mix, vec_scale(pool[idx], w));
            }
            CHECK(total == 1);
            CHECK(mix == target);
        }
    }
}
