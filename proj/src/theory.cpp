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

#include "gptk/theory.hpp"

#include <algorithm>

#include "gptk/errors.hpp"
#include "gptk/linalg.hpp"
#include "gptk/lp.hpp"

namespace gptk {

namespace {

void reject_numeric(const GptSystem &sys, const char *op) {
    if (sys.numeric) {
        throw Unsupported(std::string(op) + ": numeric system '" + sys.name +
                          "' has no vertex lists; use the qubit routines");
    }
}

bool in_dual_cone(const GptSystem &sys, const Vec &e) {
    for (const Vec &g : sys.state_cone.generators.value()) {
        if (dot(e, g) < 0) {
            return false;
        }
    }
    return true;
}

} // namespace

GptSystem make_system(std::string name, std::vector<Vec> states, std::vector<Vec> effects,
                      Vec unit) {
    GptSystem sys;
    sys.name = std::move(name);
    sys.dim = static_cast<int>(unit.size());
    sys.unit = unit;
    sys.zero = zero_vec(sys.dim);

    sys.state_body.dim = sys.dim;
    sys.state_body.vertices = extremal_points(states);
    sys.state_cone = cone_from_generators(sys.state_body.vertices, sys.dim);

    std::vector<Vec> closed = std::move(effects);
    closed.push_back(sys.zero);
    closed.push_back(sys.unit);
    std::size_t given = closed.size();
    for (std::size_t i = 0; i < given; ++i) {
        closed.push_back(vec_sub(sys.unit, closed[i]));
    }
    sys.effect_body.dim = sys.dim;
    sys.effect_body.vertices = extremal_points(closed);
    return sys;
}

Rat state_norm(const GptSystem &sys, const Vec &omega) {
    reject_numeric(sys, "state_norm");
    if (static_cast<int>(omega.size()) != sys.dim) {
        throw DimensionMismatch("state_norm");
    }
    if (!member(sys.state_cone, omega).feasible) {
        throw NotAState();
    }
    return dot(sys.unit, omega);
}

Rat effect_norm(const GptSystem &sys, const Vec &effect) {
    reject_numeric(sys, "effect_norm");
    if (static_cast<int>(effect.size()) != sys.dim) {
        throw DimensionMismatch("effect_norm");
    }
    if (!in_dual_cone(sys, effect)) {
        throw NotAnEffect();
    }
    Rat best = 0;
    bool first = true;
    for (const Vec &omega : sys.state_body.vertices) {
        Rat v = dot(effect, omega);
        if (first || v > best) {
            best = v;
            first = false;
        }
    }
    return best;
}

BodyHrep emax_hrep(const GptSystem &sys) {
    reject_numeric(sys, "emax_hrep");
    BodyHrep rep;
    for (const Vec &g : sys.state_cone.generators.value()) {
        rep.lhs.push_back(g);
        rep.rhs.push_back(0);
        rep.lhs.push_back(vec_scale(g, Rat(-1)));
        rep.rhs.push_back(-dot(sys.unit, g));
    }
    return rep;
}

ConvexBody compute_emax(const GptSystem &sys, const CancelToken *cancel) {
    BodyHrep rep = emax_hrep(sys);
    PolyhedronVerts verts = enumerate_polyhedron(rep.lhs, rep.rhs, cancel);
    if (!verts.rays.empty()) {
        throw DegenerateInput("maximal effect set is unbounded; state cone is not "
                              "full-dimensional");
    }
    ConvexBody body;
    body.dim = sys.dim;
    body.vertices = std::move(verts.vertices);
    return body;
}

bool effect_member(const GptSystem &sys, const Vec &effect) {
    return member(sys.effect_body, effect).feasible;
}

NoRestrictionResult check_no_restriction(const GptSystem &sys) {
    reject_numeric(sys, "check_no_restriction");
    NoRestrictionResult result;
    result.holds = true;
    for (const Vec &v : compute_emax(sys).vertices) {
        if (!effect_member(sys, v)) {
            result.holds = false;
            result.missing = v;
            return result;
        }
    }
    return result;
}

namespace {

// Constraint block of {x in E} ∩ {ei - x in E} ∩ {ej - x in E} ∩
// {x - ei - ej + u in E}, in terms of E's facet description.
GeneralLp and_effect_region(const GptSystem &sys, const Vec &ei, const Vec &ej) {
    BodyHrep rep = body_hrep(sys.effect_body);
    GeneralLp lp;
    lp.objective = zero_vec(sys.dim);
    std::size_t rows = rep.lhs.size();
    Vec shift = vec_sub(vec_add(ei, ej), sys.unit);
    for (std::size_t r = 0; r < rows; ++r) {
        const Vec &a = rep.lhs[r];
        const Rat &b = rep.rhs[r];
        lp.ineq_lhs.push_back(a);
        lp.ineq_rhs.push_back(b);
        lp.ineq_lhs.push_back(vec_scale(a, Rat(-1)));
        lp.ineq_rhs.push_back(b - dot(a, ei));
        lp.ineq_lhs.push_back(vec_scale(a, Rat(-1)));
        lp.ineq_rhs.push_back(b - dot(a, ej));
        lp.ineq_lhs.push_back(a);
        lp.ineq_rhs.push_back(b + dot(a, shift));
    }
    return lp;
}

} // namespace

JointMeasurability jointly_measurable(const GptSystem &sys, const Vec &ei, const Vec &ej) {
    reject_numeric(sys, "jointly_measurable");
    if (!effect_member(sys, ei) || !effect_member(sys, ej)) {
        throw NotAnEffect("jointly_measurable expects effects from the effect body");
    }

    GeneralLp lp = and_effect_region(sys, ei, ej);
    LpSolution sol = lp_solve_general(lp);
    JointMeasurability jm;
    if (sol.status != LpStatus::Optimal) {
        jm.feasible = false;
        jm.certificate = sol.farkas;
        return jm;
    }

    // Lexicographically minimal witness: minimize coordinates one at a time.
    Vec fixed;
    for (int k = 0; k < sys.dim; ++k) {
        GeneralLp step = and_effect_region(sys, ei, ej);
        for (int t = 0; t < k; ++t) {
            Vec row = zero_vec(sys.dim);
            row[t] = 1;
            step.eq_lhs.push_back(std::move(row));
            step.eq_rhs.push_back(fixed[t]);
        }
        step.objective = zero_vec(sys.dim);
        step.objective[k] = 1;
        step.maximize = false;
        LpSolution s = lp_solve_general(step);
        if (s.status != LpStatus::Optimal) {
            throw SingularSystem("lexicographic refinement lost feasibility");
        }
        fixed.push_back(s.objective);
    }
    jm.feasible = true;
    jm.and_effect = fixed;
    return jm;
}

std::vector<Vec> jointly_measurable_witnesses(const GptSystem &sys, const Vec &ei,
                                              const Vec &ej) {
    reject_numeric(sys, "jointly_measurable_witnesses");
    GeneralLp lp = and_effect_region(sys, ei, ej);
    PolyhedronVerts verts = enumerate_polyhedron(lp.ineq_lhs, lp.ineq_rhs);
    return verts.vertices;
}

std::array<Vec, 4> boolean_effects(const Vec &ei, const Vec &ej, const Vec &unit,
                                   const Vec &and_effect) {
    Vec i_not_j = vec_sub(ei, and_effect);
    Vec not_i_j = vec_sub(ej, and_effect);
    Vec not_i_not_j = vec_add(vec_sub(unit, vec_add(ei, ej)), and_effect);
    return {and_effect, i_not_j, not_i_j, not_i_not_j};
}

Measurement complete_measurement(const GptSystem &sys, std::vector<Vec> effects) {
    reject_numeric(sys, "complete_measurement");
    Vec sum = zero_vec(sys.dim);
    for (const Vec &e : effects) {
        if (!effect_member(sys, e)) {
            throw NotAnEffect("complete_measurement: effect outside the effect body");
        }
        sum = vec_add(sum, e);
    }
    if (sum != sys.unit) {
        Vec failure = vec_sub(sys.unit, sum);
        if (!effect_member(sys, failure)) {
            throw InvalidCompletion();
        }
        effects.push_back(std::move(failure));
    }
    Measurement m;
    m.effects = std::move(effects);
    m.complete = true;
    return m;
}

bool effect_leq(const GptSystem &sys, const Vec &ei, const Vec &ej) {
    reject_numeric(sys, "effect_leq");
    return in_dual_cone(sys, vec_sub(ej, ei));
}

ValidationReport validate_system(const GptSystem &sys) {
    reject_numeric(sys, "validate_system");
    ValidationReport report;
    auto fail = [&report](std::string what) {
        report.valid = false;
        report.issues.push_back({std::move(what)});
    };

    for (std::size_t j = 0; j < sys.state_body.vertices.size(); ++j) {
        Rat norm = dot(sys.unit, sys.state_body.vertices[j]);
        if (norm != 1) {
            fail("state vertex " + std::to_string(j) + " has unit measure " + rat_str(norm));
        }
    }
    for (std::size_t i = 0; i < sys.effect_body.vertices.size(); ++i) {
        for (std::size_t j = 0; j < sys.state_body.vertices.size(); ++j) {
            Rat p = dot(sys.effect_body.vertices[i], sys.state_body.vertices[j]);
            if (p < 0 || p > 1) {
                fail("pairing of effect " + std::to_string(i) + " and state " +
                     std::to_string(j) + " is " + rat_str(p));
            }
        }
    }
    if (!effect_member(sys, sys.zero)) {
        fail("zero effect missing from the effect body");
    }
    if (!effect_member(sys, sys.unit)) {
        fail("unit measure missing from the effect body");
    }
    for (std::size_t i = 0; i < sys.effect_body.vertices.size(); ++i) {
        if (!effect_member(sys, vec_sub(sys.unit, sys.effect_body.vertices[i]))) {
            fail("complement of effect " + std::to_string(i) + " missing from the effect body");
        }
    }
    return report;
}

} // namespace gptk
