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

#include "gptk/models.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gptk/errors.hpp"
#include "gptk/linalg.hpp"

namespace gptk {

GptSystem classical(int k) {
    if (k < 1) {
        throw DegenerateInput("classical(k) requires k >= 1");
    }
    std::vector<Vec> states;
    for (int i = 0; i < k; ++i) {
        Vec s = zero_vec(k);
        s[i] = 1;
        states.push_back(std::move(s));
    }
    std::vector<Vec> effects;
    for (long mask = 0; mask < (1L << k); ++mask) {
        Vec e = zero_vec(k);
        for (int i = 0; i < k; ++i) {
            if (mask & (1L << i)) {
                e[i] = 1;
            }
        }
        effects.push_back(std::move(e));
    }
    return make_system("classical-" + std::to_string(k), std::move(states), std::move(effects),
                       Vec(k, Rat(1)));
}

GptSystem gbit() {
    std::vector<Vec> states = {
        {Rat(1), Rat(0), Rat(1)},
        {Rat(0), Rat(1), Rat(1)},
        {Rat(-1), Rat(0), Rat(1)},
        {Rat(0), Rat(-1), Rat(1)},
    };
    std::vector<Vec> effects = {
        {rat(1, 2), rat(1, 2), rat(1, 2)},
        {rat(-1, 2), rat(1, 2), rat(1, 2)},
        {rat(-1, 2), rat(-1, 2), rat(1, 2)},
        {rat(1, 2), rat(-1, 2), rat(1, 2)},
    };
    return make_system("gbit", std::move(states), std::move(effects),
                       {Rat(0), Rat(0), Rat(1)});
}

namespace {

// Best rational approximation with bounded denominator (continued fractions).
Rat rational_approx(double x, long max_den) {
    bool neg = x < 0;
    double v = neg ? -x : x;
    long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        if (fl > 1e17) {
            break;
        }
        long a = static_cast<long>(fl);
        long p2 = a * p1 + p0;
        long q2 = a * q1 + q0;
        if (q2 > max_den) {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double rem = frac - fl;
        if (rem < 1e-15) {
            break;
        }
        frac = 1.0 / rem;
    }
    if (q1 == 0) {
        throw SingularSystem("rational approximation failed");
    }
    Rat r = rat(p1, q1);
    return neg ? Rat(-r) : r;
}

// Exact rational point on the unit circle within ~1e-9 of angle theta.
std::pair<Rat, Rat> circle_point(double theta) {
    const double pi = std::acos(-1.0);
    while (theta < 0) {
        theta += 2 * pi;
    }
    while (theta >= 2 * pi) {
        theta -= 2 * pi;
    }
    if (theta > pi) {
        auto [x, y] = circle_point(2 * pi - theta);
        return {x, Rat(-y)};
    }
    if (std::abs(theta - pi) < 1e-12) {
        return {Rat(-1), Rat(0)};
    }
    // Tangent half-angle parametrization keeps the point exactly on the circle.
    Rat t = rational_approx(std::tan(theta / 2), 2000000L);
    Rat t2 = t * t;
    return {(1 - t2) / (1 + t2), 2 * t / (1 + t2)};
}

} // namespace

GptSystem polygon(int k) {
    if (k < 3) {
        throw DegenerateInput("polygon(k) requires k >= 3");
    }
    const double pi = std::acos(-1.0);
    std::vector<Vec> states;
    for (int i = 0; i < k; ++i) {
        auto [x, y] = circle_point(2 * pi * i / k);
        states.push_back({x, y, Rat(1)});
    }
    Vec unit = {Rat(0), Rat(0), Rat(1)};
    GptSystem bare = make_system("polygon-" + std::to_string(k), states, {}, unit);
    ConvexBody emax = compute_emax(bare);
    return make_system("polygon-" + std::to_string(k), std::move(states),
                       std::move(emax.vertices), std::move(unit));
}

GptSystem qubit() {
    GptSystem sys;
    sys.name = "qubit";
    sys.dim = 4;
    sys.unit = {Rat(0), Rat(0), Rat(0), Rat(1)};
    sys.zero = zero_vec(4);
    sys.state_body.dim = 4;
    sys.state_cone.dim = 4;
    sys.effect_body.dim = 4;
    sys.numeric = true;
    sys.tolerance = 1e-9;
    return sys;
}

std::optional<Mat> find_affine_isomorphism(const GptSystem &from, const GptSystem &to) {
    if (from.dim != to.dim ||
        from.state_body.vertices.size() != to.state_body.vertices.size() ||
        from.effect_body.vertices.size() != to.effect_body.vertices.size()) {
        return std::nullopt;
    }
    const std::vector<Vec> &src = from.state_body.vertices;
    const std::vector<Vec> &dst = to.state_body.vertices;
    if (src.size() > 8) {
        throw Unsupported("isomorphism search over more than 8 state vertices");
    }

    std::vector<int> span_idx = independent_rows(src, from.dim);
    if (static_cast<int>(span_idx.size()) != from.dim) {
        throw Unsupported("isomorphism search needs full-dimensional state span");
    }
    Mat src_cols(from.dim, Vec(from.dim));
    for (int c = 0; c < from.dim; ++c) {
        for (int r = 0; r < from.dim; ++r) {
            src_cols[r][c] = src[span_idx[c]][r];
        }
    }
    std::optional<Mat> src_inv = invert(src_cols);
    if (!src_inv) {
        return std::nullopt;
    }

    std::vector<int> perm(dst.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        Mat dst_cols(to.dim, Vec(to.dim));
        for (int c = 0; c < to.dim; ++c) {
            for (int r = 0; r < to.dim; ++r) {
                dst_cols[r][c] = dst[perm[span_idx[c]]][r];
            }
        }
        Mat t = mat_mul(dst_cols, *src_inv);
        bool ok = true;
        for (std::size_t j = 0; j < src.size() && ok; ++j) {
            ok = (mat_vec(t, src[j]) == dst[perm[j]]);
        }
        if (!ok || !invert(t)) {
            continue;
        }
        // Effects must correspond under the adjoint.
        Mat t_adj = transpose(t);
        std::vector<Vec> pulled;
        for (const Vec &f : to.effect_body.vertices) {
            pulled.push_back(mat_vec(t_adj, f));
        }
        std::vector<Vec> want = from.effect_body.vertices;
        std::sort(pulled.begin(), pulled.end(), vec_lex_less);
        std::sort(want.begin(), want.end(), vec_lex_less);
        if (pulled != want) {
            continue;
        }
        if (mat_vec(t_adj, to.unit) != from.unit) {
            continue;
        }
        return t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

HolevoResult holevo_restricted() {
    HolevoResult result;
    // Representative with y4 = 0: (y1, y2, y3, y4) -> (y1+y4, y2+y4, y3-y4).
    result.state_projection = {
        {Rat(1), Rat(0), Rat(0), Rat(1)},
        {Rat(0), Rat(1), Rat(0), Rat(1)},
        {Rat(0), Rat(0), Rat(1), Rat(-1)},
    };
    result.effect_projection = {
        {Rat(1), Rat(0), Rat(0), Rat(0)},
        {Rat(0), Rat(1), Rat(0), Rat(0)},
        {Rat(0), Rat(0), Rat(1), Rat(0)},
    };

    GptSystem base = classical(4);
    std::vector<Vec> states;
    for (const Vec &s : base.state_body.vertices) {
        states.push_back(mat_vec(result.state_projection, s));
    }
    std::vector<Vec> effects;
    for (const Vec &e : base.effect_body.vertices) {
        if (e[0] + e[1] == e[2] + e[3]) {
            effects.push_back(mat_vec(result.effect_projection, e));
        }
    }
    result.system = make_system("holevo-restricted", std::move(states), std::move(effects),
                                {Rat(1), Rat(1), Rat(1)});

    std::optional<Mat> iso = find_affine_isomorphism(result.system, gbit());
    if (!iso) {
        throw SingularSystem("holevo construction failed to match the gbit");
    }
    result.iso_to_gbit = std::move(*iso);
    return result;
}

Vec embed_effect(const GptSystem &sys, const Vec &effect) {
    Vec row;
    for (const Vec &omega : sys.state_body.vertices) {
        row.push_back(dot(effect, omega));
    }
    return row;
}

ClassicalExtension classical_extension(const GptSystem &sys) {
    if (sys.numeric) {
        throw Unsupported("classical extension of a continuum of extremal states");
    }
    ClassicalExtension ext;
    ext.classical_system = classical(static_cast<int>(sys.state_body.vertices.size()));
    for (const Vec &e : sys.effect_body.vertices) {
        ext.embedded_effects.push_back(embed_effect(sys, e));
    }
    return ext;
}

} // namespace gptk
