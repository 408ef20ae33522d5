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

#include "gptk/compose.hpp"

#include <algorithm>

#include "gptk/errors.hpp"
#include "gptk/linalg.hpp"

namespace gptk {

namespace {

void reject_numeric_pair(const GptSystem &a, const GptSystem &b, const char *op) {
    if (a.numeric || b.numeric) {
        throw Unsupported(std::string(op) + ": numeric subsystems are handled by the "
                                            "qubit routines");
    }
}

std::vector<Vec> pairwise_products(const std::vector<Vec> &left,
                                   const std::vector<Vec> &right) {
    std::vector<Vec> out;
    out.reserve(left.size() * right.size());
    for (const Vec &a : left) {
        for (const Vec &b : right) {
            out.push_back(product(a, b));
        }
    }
    return out;
}

std::vector<Vec> nonzero_canonical(std::vector<Vec> rows) {
    std::vector<Vec> out;
    for (Vec &r : rows) {
        Vec c = canon_ray(r);
        if (!is_zero_vec(c)) {
            out.push_back(std::move(c));
        }
    }
    std::sort(out.begin(), out.end(), vec_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

JointSystem base_joint(const GptSystem &a, const GptSystem &b, TensorRule rule) {
    JointSystem j;
    j.left = a;
    j.right = b;
    j.rule = rule;
    j.unit = product(a.unit, b.unit);
    j.effect_generators = pairwise_products(a.effect_body.vertices, b.effect_body.vertices);
    std::sort(j.effect_generators.begin(), j.effect_generators.end(), vec_lex_less);
    j.effect_generators.erase(
        std::unique(j.effect_generators.begin(), j.effect_generators.end()),
        j.effect_generators.end());
    j.state_cone.dim = a.dim * b.dim;
    return j;
}

} // namespace

Vec product(const Vec &a, const Vec &b) {
    Vec out;
    out.reserve(a.size() * b.size());
    for (const Rat &x : a) {
        for (const Rat &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

Mat as_matrix(const Vec &joint, int n, int m) {
    if (static_cast<int>(joint.size()) != n * m) {
        throw DimensionMismatch("as_matrix");
    }
    Mat coords(n, Vec(m));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < m; ++j) {
            coords[i][j] = joint[i * m + j];
        }
    }
    return coords;
}

Vec flatten(const Mat &coords) {
    Vec out;
    for (const Vec &row : coords) {
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

std::vector<Vec> product_state_generators(const GptSystem &a, const GptSystem &b) {
    return pairwise_products(a.state_body.vertices, b.state_body.vertices);
}

JointSystem min_tensor(const GptSystem &a, const GptSystem &b) {
    reject_numeric_pair(a, b, "min_tensor");
    JointSystem j = base_joint(a, b, TensorRule::Min);
    j.state_cone.generators = product_state_generators(a, b);
    return j;
}

JointSystem max_tensor(const GptSystem &a, const GptSystem &b) {
    reject_numeric_pair(a, b, "max_tensor");
    if (!check_no_restriction(a).holds || !check_no_restriction(b).holds) {
        throw RestrictedSubsystem();
    }
    JointSystem j = base_joint(a, b, TensorRule::Max);
    j.state_cone.halfspaces = nonzero_canonical(
        pairwise_products(a.effect_body.vertices, b.effect_body.vertices));
    return j;
}

JointSystem gen_max_tensor(const GptSystem &a, const GptSystem &b) {
    reject_numeric_pair(a, b, "gen_max_tensor");
    JointSystem j = base_joint(a, b, TensorRule::MaxGeneralized);
    Cone dual_a = dual_cone(a.state_cone);
    Cone dual_b = dual_cone(b.state_cone);
    std::vector<Vec> halfspaces = pairwise_products(a.effect_body.vertices,
                                                    ensure_generators(dual_b));
    std::vector<Vec> other = pairwise_products(ensure_generators(dual_a),
                                               b.effect_body.vertices);
    halfspaces.insert(halfspaces.end(), other.begin(), other.end());
    j.state_cone.halfspaces = nonzero_canonical(std::move(halfspaces));
    return j;
}

JointSystem explicit_tensor(const GptSystem &a, const GptSystem &b, Cone joint_cone) {
    reject_numeric_pair(a, b, "explicit_tensor");
    if (joint_cone.dim != a.dim * b.dim) {
        throw DimensionMismatch("explicit_tensor: cone dimension");
    }
    JointSystem j = base_joint(a, b, TensorRule::Explicit);

    JointSystem lower = min_tensor(a, b);
    for (const Vec &g : lower.state_cone.generators.value()) {
        if (!member(joint_cone, g).feasible) {
            throw DegenerateInput("explicit cone misses a separable state");
        }
    }
    JointSystem upper = gen_max_tensor(a, b);
    const std::vector<Vec> &gens = ensure_generators(joint_cone);
    for (const Vec &g : gens) {
        if (!member(upper.state_cone, g).feasible) {
            throw DegenerateInput("explicit cone exceeds the generalized maximal tensor");
        }
        // Conditional-state condition in both directions.
        Mat coords = as_matrix(g, a.dim, b.dim);
        Mat coords_t = transpose(coords);
        for (const Vec &f : b.effect_body.vertices) {
            if (!member(a.state_cone, mat_vec(coords, f)).feasible) {
                throw DegenerateInput("explicit cone yields an invalid conditional state");
            }
        }
        for (const Vec &e : a.effect_body.vertices) {
            if (!member(b.state_cone, mat_vec(coords_t, e)).feasible) {
                throw DegenerateInput("explicit cone yields an invalid conditional state");
            }
        }
    }
    j.state_cone = std::move(joint_cone);
    return j;
}

Rat joint_eval(const Vec &effect, const Vec &state) {
    if (effect.size() != state.size()) {
        throw DimensionMismatch("joint_eval");
    }
    return dot(effect, state);
}

Vec marginal(const JointSystem &sys, const Vec &state, Side keep) {
    Mat coords = as_matrix(state, sys.left.dim, sys.right.dim);
    if (keep == Side::Left) {
        return mat_vec(coords, sys.right.unit);
    }
    return mat_vec(transpose(coords), sys.left.unit);
}

ConditionalState conditional(const JointSystem &sys, const Vec &state, const Vec &effect,
                             Side effect_side) {
    Mat coords = as_matrix(state, sys.left.dim, sys.right.dim);
    ConditionalState c;
    if (effect_side == Side::Right) {
        c.sub = mat_vec(coords, effect);
        c.probability = dot(sys.left.unit, c.sub);
    } else {
        c.sub = mat_vec(transpose(coords), effect);
        c.probability = dot(sys.right.unit, c.sub);
    }
    if (c.probability == 0) {
        throw ZeroProbabilityCondition();
    }
    c.normalized = vec_scale(c.sub, 1 / c.probability);
    return c;
}

Feasibility is_separable_over(const std::vector<Vec> &product_generators, const Vec &state) {
    Cone separable;
    separable.dim = static_cast<int>(state.size());
    separable.generators = product_generators;
    return member(separable, state);
}

Feasibility is_separable(const JointSystem &sys, const Vec &state) {
    if (sys.left.numeric || sys.right.numeric) {
        throw Unsupported("is_separable over a continuum of extremal states; supply a "
                          "finite sample via is_separable_over");
    }
    return is_separable_over(product_state_generators(sys.left, sys.right), state);
}

Mat product_basis_decomposition(const JointSystem &sys, const Vec &state,
                                const std::vector<Vec> &basis_a,
                                const std::vector<Vec> &basis_b) {
    int n = sys.left.dim;
    int m = sys.right.dim;
    if (static_cast<int>(basis_a.size()) != n || static_cast<int>(basis_b.size()) != m) {
        throw SingularBasis("product_basis_decomposition: wrong basis size");
    }
    Mat a_cols(n, Vec(n)), b_cols(m, Vec(m));
    for (int c = 0; c < n; ++c) {
        for (int r = 0; r < n; ++r) {
            a_cols[r][c] = basis_a[c][r];
        }
    }
    for (int c = 0; c < m; ++c) {
        for (int r = 0; r < m; ++r) {
            b_cols[r][c] = basis_b[c][r];
        }
    }
    std::optional<Mat> a_inv = invert(a_cols);
    std::optional<Mat> b_inv = invert(b_cols);
    if (!a_inv || !b_inv) {
        throw SingularBasis();
    }
    // M = A C B^T  =>  C = A^{-1} M B^{-T}
    Mat coords = as_matrix(state, n, m);
    return mat_mul(mat_mul(*a_inv, coords), transpose(*b_inv));
}

} // namespace gptk
