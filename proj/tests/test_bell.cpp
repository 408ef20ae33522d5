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

#include "doctest.h"
#include "fixtures.hpp"

#include "gptk/bell.hpp"
#include "gptk/errors.hpp"
#include "gptk/linalg.hpp"
#include "gptk/models.hpp"

using namespace gptk;

namespace {

BinaryMeasurement measurement_of(const GptSystem &sys, const Vec &e) {
    return {e, vec_sub(sys.unit, e)};
}

Vec pr_state() {
    return flatten(Mat{{rat(-1, 2), rat(1, 2), Rat(0)},
                       {rat(1, 2), rat(1, 2), Rat(0)},
                       {Rat(0), Rat(0), Rat(1)}});
}

struct GbitScenario {
    JointSystem joint;
    BinaryMeasurement a0, a1, b0, b1;
};

GbitScenario gbit_fiducial(bool maximal) {
    GptSystem g = gbit();
    GbitScenario s{maximal ? max_tensor(g, g) : min_tensor(g, g),
                   measurement_of(g, {rat(1, 2), rat(1, 2), rat(1, 2)}),
                   measurement_of(g, {rat(-1, 2), rat(1, 2), rat(1, 2)}),
                   measurement_of(g, {rat(1, 2), rat(1, 2), rat(1, 2)}),
                   measurement_of(g, {rat(-1, 2), rat(1, 2), rat(1, 2)})};
    return s;
}

} // namespace

TEST_CASE("behavior of a product state factorizes") {
    GptSystem g = gbit();
    JointSystem j = min_tensor(g, g);
    Vec w = product(g.state_body.vertices[0], g.state_body.vertices[2]);
    GbitScenario s = gbit_fiducial(false);
    Behavior b = behavior_from(j, w, s.a0, s.a1, s.b0, s.b1);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int a = 0; a < 2; ++a) {
                Rat pa = b.at(a, 0, x, y) + b.at(a, 1, x, y);
                for (int bb = 0; bb < 2; ++bb) {
                    Rat pb = b.at(0, bb, x, y) + b.at(1, bb, x, y);
                    CHECK(b.at(a, bb, x, y) == pa * pb);
                }
            }
        }
    }
    CHECK(no_signaling_check(b).passes);
}

TEST_CASE("classical deterministic behavior has 0/1 entries") {
    GptSystem c2 = classical(2);
    JointSystem j = min_tensor(c2, c2);
    Vec shared = product(c2.state_body.vertices[0], c2.state_body.vertices[0]);
    BinaryMeasurement read = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    BinaryMeasurement flipped = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    Behavior b = behavior_from(j, shared, read, flipped, read, flipped);
    for (const Rat &p : b.p) {
        CHECK((p == 0 || p == 1));
    }
    CHECK(no_signaling_check(b).passes);
}

TEST_CASE("chsh values") {
    Behavior uniform;
    for (Rat &p : uniform.p) {
        p = rat(1, 4);
    }
    CHECK(chsh(uniform) == 0);

    // perfectly correlated classical behavior: all four correlators are 1
    Behavior correlated;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            correlated.at(0, 0, x, y) = rat(1, 2);
            correlated.at(1, 1, x, y) = rat(1, 2);
        }
    }
    CHECK(chsh(correlated) == 2);

    CHECK(chsh(pr_box()) == 4);
}

TEST_CASE("pr box marginals are uniform and no-signaling") {
    Behavior b = pr_box();
    CHECK(no_signaling_check(b).passes);
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int a = 0; a < 2; ++a) {
                CHECK(b.at(a, 0, x, y) + b.at(a, 1, x, y) == rat(1, 2));
            }
        }
    }
}

TEST_CASE("max_chsh over the classical minimal tensor is the local bound 2") {
    GptSystem c2 = classical(2);
    JointSystem j = min_tensor(c2, c2);
    BinaryMeasurement read = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    BinaryMeasurement flipped = {{Rat(0), Rat(1)}, {Rat(1), Rat(0)}};
    ChshMax best = max_chsh(j, read, flipped, read, flipped);
    CHECK(best.value == 2);
    CHECK(joint_eval(j.unit, best.state) == 1);
    CHECK(member(j.state_cone, best.state).feasible);
}

TEST_CASE("max_chsh over the gbit minimal tensor stays local") {
    GbitScenario s = gbit_fiducial(false);
    ChshMax best = max_chsh(s.joint, s.a0, s.a1, s.b0, s.b1);
    CHECK(best.value == 2);
}

TEST_CASE("max_chsh over boxworld reaches the algebraic maximum with the PR state") {
    GbitScenario s = gbit_fiducial(true);
    ChshMax best = max_chsh(s.joint, s.a0, s.a1, s.b0, s.b1);
    CHECK(best.value == 4);
    CHECK(best.state == pr_state());

    Behavior b = behavior_from(s.joint, best.state, s.a0, s.a1, s.b0, s.b1);
    CHECK(b.p == pr_box().p);
    CHECK(no_signaling_check(b).passes);
}

TEST_CASE("hand-crafted signaling table is caught") {
    Behavior b = pr_box();
    // make Alice's marginal depend on Bob's setting
    b.at(0, 0, 0, 0) = rat(1, 2);
    b.at(0, 1, 0, 0) = rat(1, 2);
    b.at(1, 0, 0, 0) = Rat(0);
    b.at(1, 1, 0, 0) = Rat(0);
    NoSignalingReport report = no_signaling_check(b);
    CHECK(!report.passes);
    CHECK(!report.violations.empty());
}

TEST_CASE("incomplete measurements are rejected") {
    GptSystem g = gbit();
    JointSystem j = min_tensor(g, g);
    Vec e1 = {rat(1, 2), rat(1, 2), rat(1, 2)};
    BinaryMeasurement bad = {e1, e1};
    BinaryMeasurement good = measurement_of(g, e1);
    Vec w = product(g.state_body.vertices[0], g.state_body.vertices[0]);
    CHECK_THROWS_AS(behavior_from(j, w, bad, good, good, good), IncompleteMeasurement);
    CHECK_THROWS_AS(max_chsh(j, good, good, good, bad), IncompleteMeasurement);
}

TEST_CASE("unbounded joint cones are reported") {
    GptSystem c2 = classical(2);
    JointSystem j = min_tensor(c2, c2);
    // no halfspaces at all: every functional is unbounded over u(x) = 1
    j.state_cone.generators.reset();
    j.state_cone.halfspaces = std::vector<Vec>{};
    BinaryMeasurement read = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK_THROWS_AS(max_chsh(j, read, read, read, read), UnboundedCone);
}

TEST_CASE("behavior invariants reject unnormalized states") {
    GptSystem g = gbit();
    JointSystem j = min_tensor(g, g);
    GbitScenario s = gbit_fiducial(false);
    Vec w = vec_scale(product(g.state_body.vertices[0], g.state_body.vertices[0]), rat(1, 2));
    CHECK_THROWS_AS(behavior_from(j, w, s.a0, s.a1, s.b0, s.b1), NotAState);
}
