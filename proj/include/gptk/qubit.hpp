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
 * Numeric qubit routines (tolerance 1e-9).
 *
 * States live in R^4 as (x, y, z, w): Bloch coordinates plus the weight w,
 * valid when x^2+y^2+z^2 <= w^2 and normalized when w = 1. Effects use the
 * same cone; stored effect vectors are pre-scaled so that the probability
 * pairing is the plain dot product and the unit measure is (0,0,0,1).
 * Two-qubit joint states are 4x4 coefficient matrices in the product of the
 * single-system coordinates.
 */

#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

namespace gptk::qubit {

inline constexpr double kTolerance = 1e-9;

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

double pairing(const Vec4 &effect, const Vec4 &state);

/// Lorentz-cone test |(x,y,z)| <= w, shared by states and effects (self-dual).
bool in_cone(const Vec4 &v, double tol = kTolerance);

/// Normalized state with the given Bloch direction (need not be unit length).
Vec4 pure_state(double bx, double by, double bz);

/// The unique effect answering 1 on the given pure state.
Vec4 identifying_effect(const Vec4 &pure);

/// Binary spin measurement along a Bloch direction: {E, u - E}.
std::pair<Vec4, Vec4> spin_measurement(double bx, double by, double bz);

Vec4 sample_pure(std::mt19937_64 &rng);

/// Random ray in R^4 (not necessarily inside the cone), for duality checks.
Vec4 sample_ray(std::mt19937_64 &rng);

Mat4 product_state(const Vec4 &a, const Vec4 &b);

/// The maximally entangled two-qubit state (|00> + |11>)/sqrt(2).
Mat4 bell_phi_plus();

/// (e_A ⊗ e_B)(M).
double product_effect_eval(const Vec4 &ea, const Vec4 &eb, const Mat4 &m);

Vec4 marginal_left(const Mat4 &m);
Vec4 marginal_right(const Mat4 &m);

struct Conditional {
    Vec4 sub;
    Vec4 normalized;
    double probability = 0;
};

/// Conditional state on the left system given an effect observed on the right.
Conditional condition_on_right(const Mat4 &m, const Vec4 &effect_b);

/// Coefficients c with M = sum_ij c[i][j] a_i b_j^T. Throws SingularBasis.
Mat4 decompose_in_product_basis(const Mat4 &m, const std::array<Vec4, 4> &basis_a,
                                const std::array<Vec4, 4> &basis_b);

Mat4 recompose(const Mat4 &coeffs, const std::array<Vec4, 4> &basis_a,
               const std::array<Vec4, 4> &basis_b);

/// CHSH measurement angles in the x-z plane of each Bloch ball.
struct ChshAngles {
    double a0 = 0, a1 = 0, b0 = 0, b1 = 0;
};

/// p(a,b|x,y) indexed a*8 + b*4 + x*2 + y.
std::array<double, 16> behavior_from_angles(const Mat4 &m, const ChshAngles &angles);

double chsh_from_behavior(const std::array<double, 16> &behavior);

/// Haar-random pure two-qubit state in joint coordinates.
Mat4 sample_pure_joint(std::mt19937_64 &rng);

struct NetMax {
    double value = 0;
    Mat4 state{};
};

/// Maximum CHSH value over a finite net of joint states at fixed angles.
NetMax max_chsh_over_net(const std::vector<Mat4> &net, const ChshAngles &angles);

} // namespace gptk::qubit
