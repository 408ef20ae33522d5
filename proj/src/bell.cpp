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

#include "gptk/bell.hpp"

#include "gptk/errors.hpp"
#include "gptk/linalg.hpp"
#include "gptk/lp.hpp"

namespace gptk {

namespace {

void check_measurement(const GptSystem &side, const BinaryMeasurement &m, const char *label) {
    if (vec_add(m.outcome0, m.outcome1) != side.unit) {
        throw IncompleteMeasurement(std::string(label) +
                                    ": outcomes do not sum to the unit measure");
    }
    if (!effect_member(side, m.outcome0) || !effect_member(side, m.outcome1)) {
        throw IncompleteMeasurement(std::string(label) + ": outcome outside the effect body");
    }
}

const Vec &outcome(const BinaryMeasurement &m, int bit) {
    return bit == 0 ? m.outcome0 : m.outcome1;
}

// CHSH functional A0⊗B0 + A0⊗B1 + A1⊗B0 - A1⊗B1 with O = e0 - e1 per setting.
Vec chsh_functional(const BinaryMeasurement &a0, const BinaryMeasurement &a1,
                    const BinaryMeasurement &b0, const BinaryMeasurement &b1) {
    Vec oa0 = vec_sub(a0.outcome0, a0.outcome1);
    Vec oa1 = vec_sub(a1.outcome0, a1.outcome1);
    Vec ob0 = vec_sub(b0.outcome0, b0.outcome1);
    Vec ob1 = vec_sub(b1.outcome0, b1.outcome1);
    Vec f = product(oa0, vec_add(ob0, ob1));
    return vec_add(f, product(oa1, vec_sub(ob0, ob1)));
}

} // namespace

Behavior behavior_from(const JointSystem &sys, const Vec &state, const BinaryMeasurement &a0,
                       const BinaryMeasurement &a1, const BinaryMeasurement &b0,
                       const BinaryMeasurement &b1) {
    check_measurement(sys.left, a0, "A0");
    check_measurement(sys.left, a1, "A1");
    check_measurement(sys.right, b0, "B0");
    check_measurement(sys.right, b1, "B1");
    if (joint_eval(sys.unit, state) != 1) {
        throw NotAState("behavior_from expects a normalized joint state");
    }

    Behavior beh;
    const BinaryMeasurement *alice[2] = {&a0, &a1};
    const BinaryMeasurement *bob[2] = {&b0, &b1};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            Rat total = 0;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    Rat p = joint_eval(product(outcome(*alice[x], a), outcome(*bob[y], b)),
                                       state);
                    if (p < 0 || p > 1) {
                        throw NotAState("state produced probability " + rat_str(p));
                    }
                    beh.at(a, b, x, y) = p;
                    total += p;
                }
            }
            if (total != 1) {
                throw NotAState("setting (" + std::to_string(x) + "," + std::to_string(y) +
                                ") sums to " + rat_str(total));
            }
        }
    }
    return beh;
}

std::array<std::array<Rat, 2>, 2> correlators(const Behavior &b) {
    std::array<std::array<Rat, 2>, 2> c{};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            Rat v = 0;
            for (int oa = 0; oa < 2; ++oa) {
                for (int ob = 0; ob < 2; ++ob) {
                    Rat p = b.at(oa, ob, x, y);
                    v += ((oa ^ ob) == 0) ? p : Rat(-p);
                }
            }
            c[x][y] = v;
        }
    }
    return c;
}

Rat chsh(const Behavior &b) {
    std::array<std::array<Rat, 2>, 2> c = correlators(b);
    Rat s = c[0][0] + c[0][1] + c[1][0] - c[1][1];
    return s < 0 ? Rat(-s) : s;
}

Behavior pr_box() {
    Behavior b;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int oa = 0; oa < 2; ++oa) {
                for (int ob = 0; ob < 2; ++ob) {
                    b.at(oa, ob, x, y) = ((oa ^ ob) == (x & y)) ? rat(1, 2) : Rat(0);
                }
            }
        }
    }
    return b;
}

ChshMax max_chsh(const JointSystem &sys, const BinaryMeasurement &a0,
                 const BinaryMeasurement &a1, const BinaryMeasurement &b0,
                 const BinaryMeasurement &b1) {
    check_measurement(sys.left, a0, "A0");
    check_measurement(sys.left, a1, "A1");
    check_measurement(sys.right, b0, "B0");
    check_measurement(sys.right, b1, "B1");
    Vec functional = chsh_functional(a0, a1, b0, b1);

    ChshMax best;
    bool found = false;
    if (sys.state_cone.generators) {
        for (const Vec &g : *sys.state_cone.generators) {
            Rat norm = joint_eval(sys.unit, g);
            Rat value = joint_eval(functional, g);
            if (norm == 0) {
                if (value != 0) {
                    throw UnboundedCone();
                }
                continue;
            }
            Rat s = value / norm;
            if (s < 0) {
                s = -s;
            }
            if (!found || s > best.value) {
                best.value = s;
                best.state = vec_scale(g, 1 / norm);
                found = true;
            }
        }
        if (!found) {
            throw UnboundedCone("joint cone has no normalized states");
        }
        return best;
    }

    const std::vector<Vec> &halfspaces = sys.state_cone.halfspaces.value();
    for (int sign = 0; sign < 2; ++sign) {
        GeneralLp lp;
        lp.objective = sign == 0 ? functional : vec_scale(functional, Rat(-1));
        lp.maximize = true;
        lp.eq_lhs.push_back(sys.unit);
        lp.eq_rhs.push_back(1);
        for (const Vec &h : halfspaces) {
            lp.ineq_lhs.push_back(h);
            lp.ineq_rhs.push_back(0);
        }
        LpSolution sol = lp_solve_general(lp);
        if (sol.status == LpStatus::Unbounded) {
            throw UnboundedCone();
        }
        if (sol.status == LpStatus::Infeasible) {
            throw UnboundedCone("joint cone has no normalized states");
        }
        if (!found || sol.objective > best.value) {
            best.value = sol.objective;
            best.state = sol.x;
            found = true;
        }
    }
    return best;
}

NoSignalingReport no_signaling_check(const Behavior &b) {
    NoSignalingReport report;
    for (int a = 0; a < 2; ++a) {
        for (int x = 0; x < 2; ++x) {
            Rat m0 = b.at(a, 0, x, 0) + b.at(a, 1, x, 0);
            Rat m1 = b.at(a, 0, x, 1) + b.at(a, 1, x, 1);
            if (m0 != m1) {
                report.passes = false;
                report.violations.push_back("p(a=" + std::to_string(a) + "|x=" +
                                            std::to_string(x) + ") depends on y: " +
                                            rat_str(m0) + " vs " + rat_str(m1));
            }
        }
    }
    for (int bb = 0; bb < 2; ++bb) {
        for (int y = 0; y < 2; ++y) {
            Rat m0 = b.at(0, bb, 0, y) + b.at(1, bb, 0, y);
            Rat m1 = b.at(0, bb, 1, y) + b.at(1, bb, 1, y);
            if (m0 != m1) {
                report.passes = false;
                report.violations.push_back("p(b=" + std::to_string(bb) + "|y=" +
                                            std::to_string(y) + ") depends on x: " +
                                            rat_str(m0) + " vs " + rat_str(m1));
            }
        }
    }
    return report;
}

} // namespace gptk
