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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "gptk/errors.hpp"
#include "gptk/qubit.hpp"

namespace qb = gptk::qubit;

namespace {

double norm3(const qb::Vec4 &v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

} // namespace

TEST_CASE("identifying effect answers 1 on its own pure state") {
    qb::Vec4 omega = qb::pure_state(1, 0, 0);
    qb::Vec4 e = qb::identifying_effect(omega);
    CHECK(qb::pairing(e, omega) == doctest::Approx(1.0).epsilon(1e-12));

    // density-matrix oracle: tr[E rho] with E = rho = (1 + sx)/2
    oracles::CMat2 rho = oracles::density_from_bloch(1, 0, 0, 1);
    CHECK(qb::pairing(e, omega) == doctest::Approx(oracles::trace_product(rho, rho)));
}

TEST_CASE("antipodal pure states are perfectly distinguished") {
    qb::Vec4 plus = qb::pure_state(0, 0, 1);
    qb::Vec4 minus = qb::pure_state(0, 0, -1);
    CHECK(qb::pairing(qb::identifying_effect(plus), minus) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("pairing of Bloch vectors at angle theta is (1+cos theta)/2") {
    const double pi = std::acos(-1.0);
    for (double theta : {pi / 2, pi / 3, 2 * pi / 3, 0.1}) {
        qb::Vec4 a = qb::pure_state(std::sin(theta), 0, std::cos(theta));
        qb::Vec4 b = qb::pure_state(0, 0, 1);
        double p = qb::pairing(qb::identifying_effect(a), b);
        CHECK(p == doctest::Approx((1 + std::cos(theta)) / 2).epsilon(1e-12));
        // oracle: tr[E rho] on explicit 2x2 matrices
        oracles::CMat2 e = oracles::projector_xz(theta);
        oracles::CMat2 rho = oracles::projector_xz(0);
        CHECK(p == doctest::Approx(oracles::trace_product(e, rho)).epsilon(1e-12));
    }
    qb::Vec4 a = qb::pure_state(1, 0, 0);
    CHECK(qb::pairing(qb::identifying_effect(a), qb::pure_state(0, 0, 1)) ==
          doctest::Approx(0.5));
}

TEST_CASE("spin measurement is complete") {
    auto [e0, e1] = qb::spin_measurement(0.3, -0.2, 0.9);
    for (int i = 0; i < 3; ++i) {
        CHECK(e0[i] + e1[i] == doctest::Approx(0.0));
    }
    CHECK(e0[3] + e1[3] == doctest::Approx(1.0));
}

TEST_CASE("self-duality of the qubit cone on sampled rays") {
    std::mt19937_64 rng(2026);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        qb::Vec4 r = qb::sample_ray(rng);
        double margin = r[3] - norm3(r);
        if (std::abs(margin) < 1e-6) {
            continue; // skip knife-edge rays; tolerance is 1e-9
        }
        ++checked;
        bool state_side = qb::in_cone(r);
        // dual-cone test: nonnegative pairing against pure states, with the
        // analytic minimizer -v/|v| included so the minimum is exact
        double min_pairing = r[3] - norm3(r);
        bool dual_side = min_pairing >= -qb::kTolerance;
        std::uniform_real_distribution<double> u(-1, 1);
        for (int k = 0; k < 50; ++k) {
            qb::Vec4 omega = qb::sample_pure(rng);
            double p = r[0] * omega[0] + r[1] * omega[1] + r[2] * omega[2] + r[3];
            CHECK(p >= min_pairing - 1e-9);
        }
        CHECK(state_side == dual_side);
    }
    CHECK(checked > 900);
}

TEST_CASE("bell state coordinates match the density-matrix oracle") {
    qb::Mat4 bell = qb::bell_phi_plus();
    oracles::CMat4 rho = oracles::bell_density();
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            oracles::CMat4 op = oracles::kron(oracles::pauli(mu), oracles::pauli(nu));
            CHECK(bell[mu][nu] ==
                  doctest::Approx(oracles::trace_product4(rho, op)).epsilon(1e-12));
        }
    }
}

TEST_CASE("bell state has completely mixed marginals") {
    qb::Mat4 bell = qb::bell_phi_plus();
    qb::Vec4 left = qb::marginal_left(bell);
    qb::Vec4 right = qb::marginal_right(bell);
    for (int i = 0; i < 3; ++i) {
        CHECK(left[i] == doctest::Approx(0.0));
        CHECK(right[i] == doctest::Approx(0.0));
    }
    CHECK(left[3] == doctest::Approx(1.0));
    CHECK(right[3] == doctest::Approx(1.0));
}

TEST_CASE("conditioning the bell state on |0> yields |0>") {
    qb::Mat4 bell = qb::bell_phi_plus();
    qb::Vec4 e0 = qb::identifying_effect(qb::pure_state(0, 0, 1));
    qb::Conditional c = qb::condition_on_right(bell, e0);
    CHECK(c.probability == doctest::Approx(0.5));
    CHECK(c.normalized[0] == doctest::Approx(0.0));
    CHECK(c.normalized[1] == doctest::Approx(0.0));
    CHECK(c.normalized[2] == doctest::Approx(1.0));
    CHECK(c.normalized[3] == doctest::Approx(1.0));

    // conditioning on an orthogonal-certain effect has probability zero
    qb::Mat4 product = qb::product_state(qb::pure_state(0, 0, 1), qb::pure_state(0, 0, 1));
    qb::Vec4 e1 = qb::identifying_effect(qb::pure_state(0, 0, -1));
    CHECK_THROWS_AS(qb::condition_on_right(product, e1), gptk::ZeroProbabilityCondition);
}

TEST_CASE("bell decomposition in the four standard states") {
    // basis: fully mixed, then the +x, +y, +z pure states
    std::array<qb::Vec4, 4> basis = {{
        {0, 0, 0, 1},
        {1, 0, 0, 1},
        {0, 1, 0, 1},
        {0, 0, 1, 1},
    }};
    qb::Mat4 coeffs = qb::decompose_in_product_basis(qb::bell_phi_plus(), basis, basis);
    qb::Mat4 expected = {{
        {2, -1, 1, -1},
        {-1, 1, 0, 0},
        {1, 0, -1, 0},
        {-1, 0, 0, 1},
    }};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(coeffs[i][j] == doctest::Approx(expected[i][j]).epsilon(1e-9));
        }
    }
    // round-trip
    qb::Mat4 back = qb::recompose(coeffs, basis, basis);
    qb::Mat4 bell = qb::bell_phi_plus();
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(back[i][j] == doctest::Approx(bell[i][j]).epsilon(1e-9));
        }
    }

    // a product state in bases containing its factors: single coefficient 1
    qb::Mat4 prod = qb::product_state(basis[1], basis[3]);
    qb::Mat4 pc = qb::decompose_in_product_basis(prod, basis, basis);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            CHECK(pc[i][j] == doctest::Approx(i == 1 && j == 3 ? 1.0 : 0.0).epsilon(1e-9));
        }
    }

    std::array<qb::Vec4, 4> degenerate = basis;
    degenerate[3] = basis[2];
    CHECK_THROWS_AS(qb::decompose_in_product_basis(qb::bell_phi_plus(), degenerate, basis),
                    gptk::SingularBasis);
}

TEST_CASE("bell state correlators at the optimal angles") {
    const double pi = std::acos(-1.0);
    qb::ChshAngles angles{0, pi / 2, pi / 4, -pi / 4};
    std::array<double, 16> behavior = qb::behavior_from_angles(qb::bell_phi_plus(), angles);

    // oracle: p(a,b|x,y) = tr[rho (Ea ⊗ Eb)] with explicit projectors
    oracles::CMat4 rho = oracles::bell_density();
    double alpha[2] = {0, pi / 2};
    double beta[2] = {pi / 4, -pi / 4};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    oracles::CMat2 ea = oracles::projector_xz(a == 0 ? alpha[x] : alpha[x] + pi);
                    oracles::CMat2 eb = oracles::projector_xz(b == 0 ? beta[y] : beta[y] + pi);
                    double expect = oracles::trace_product4(rho, oracles::kron(ea, eb));
                    CHECK(behavior[a * 8 + b * 4 + x * 2 + y] ==
                          doctest::Approx(expect).epsilon(1e-9));
                }
            }
        }
    }
    CHECK(qb::chsh_from_behavior(behavior) == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("random joint states are normalized, no-signaling, and respect Tsirelson") {
    std::mt19937_64 rng(77);
    const double pi = std::acos(-1.0);
    qb::ChshAngles angles{0, pi / 2, pi / 4, -pi / 4};
    for (int i = 0; i < 200; ++i) {
        qb::Mat4 m = qb::sample_pure_joint(rng);
        CHECK(m[3][3] == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(qb::in_cone(qb::marginal_left(m), 1e-9));
        CHECK(qb::in_cone(qb::marginal_right(m), 1e-9));
        std::array<double, 16> p = qb::behavior_from_angles(m, angles);
        for (int x = 0; x < 2; ++x) {
            for (int y = 0; y < 2; ++y) {
                double total = 0;
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        double v = p[a * 8 + b * 4 + x * 2 + y];
                        CHECK(v >= -1e-9);
                        CHECK(v <= 1 + 1e-9);
                        total += v;
                    }
                }
                CHECK(total == doctest::Approx(1.0).epsilon(1e-9));
            }
        }
        CHECK(qb::chsh_from_behavior(p) <= 2 * std::sqrt(2.0) + 1e-9);
    }
}

TEST_CASE("net maximization finds the bell state optimum") {
    std::mt19937_64 rng(123);
    const double pi = std::acos(-1.0);
    qb::ChshAngles angles{0, pi / 2, pi / 4, -pi / 4};
    std::vector<qb::Mat4> net;
    net.push_back(qb::bell_phi_plus());
    for (int i = 0; i < 500; ++i) {
        net.push_back(qb::sample_pure_joint(rng));
    }
    qb::NetMax best = qb::max_chsh_over_net(net, angles);
    CHECK(best.value == doctest::Approx(2 * std::sqrt(2.0)).epsilon(1e-9));
}
