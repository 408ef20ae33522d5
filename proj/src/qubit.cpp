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

#include "gptk/qubit.hpp"

#include <cmath>
#include <complex>

#include "gptk/errors.hpp"

namespace gptk::qubit {

namespace {

using Cx = std::complex<double>;

double norm3(double x, double y, double z) { return std::sqrt(x * x + y * y + z * z); }

} // namespace

double pairing(const Vec4 &effect, const Vec4 &state) {
    double s = 0;
    for (int i = 0; i < 4; ++i) {
        s += effect[i] * state[i];
    }
    return s;
}

bool in_cone(const Vec4 &v, double tol) {
    return norm3(v[0], v[1], v[2]) <= v[3] + tol;
}

Vec4 pure_state(double bx, double by, double bz) {
    double n = norm3(bx, by, bz);
    if (n == 0) {
        throw DegenerateInput("pure_state needs a nonzero Bloch direction");
    }
    return {bx / n, by / n, bz / n, 1.0};
}

Vec4 identifying_effect(const Vec4 &pure) {
    return {pure[0] / 2, pure[1] / 2, pure[2] / 2, pure[3] / 2};
}

std::pair<Vec4, Vec4> spin_measurement(double bx, double by, double bz) {
    Vec4 e = identifying_effect(pure_state(bx, by, bz));
    Vec4 complement = {-e[0], -e[1], -e[2], 1.0 - e[3]};
    return {e, complement};
}

Vec4 sample_pure(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double x = gauss(rng), y = gauss(rng), z = gauss(rng);
    while (norm3(x, y, z) < 1e-12) {
        x = gauss(rng);
        y = gauss(rng);
        z = gauss(rng);
    }
    return pure_state(x, y, z);
}

Vec4 sample_ray(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> w(0.0, 1.5);
    double x = gauss(rng), y = gauss(rng), z = gauss(rng);
    double n = norm3(x, y, z);
    if (n < 1e-12) {
        return {0, 0, 0, 1};
    }
    // Weight between 0 and 1.5 times the Bloch norm straddles the cone boundary.
    return {x, y, z, n * w(rng)};
}

Mat4 product_state(const Vec4 &a, const Vec4 &b) {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            m[i][j] = a[i] * b[j];
        }
    }
    return m;
}

Mat4 bell_phi_plus() {
    Mat4 m{};
    m[0][0] = 1;  // x ⊗ x
    m[1][1] = -1; // y ⊗ y
    m[2][2] = 1;  // z ⊗ z
    m[3][3] = 1;
    return m;
}

double product_effect_eval(const Vec4 &ea, const Vec4 &eb, const Mat4 &m) {
    double s = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            s += ea[i] * m[i][j] * eb[j];
        }
    }
    return s;
}

Vec4 marginal_left(const Mat4 &m) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i) {
        r[i] = m[i][3];
    }
    return r;
}

Vec4 marginal_right(const Mat4 &m) {
    Vec4 r{};
    for (int j = 0; j < 4; ++j) {
        r[j] = m[3][j];
    }
    return r;
}

Conditional condition_on_right(const Mat4 &m, const Vec4 &effect_b) {
    Conditional c;
    for (int i = 0; i < 4; ++i) {
        c.sub[i] = 0;
        for (int j = 0; j < 4; ++j) {
            c.sub[i] += m[i][j] * effect_b[j];
        }
    }
    c.probability = c.sub[3];
    if (std::abs(c.probability) <= kTolerance) {
        throw ZeroProbabilityCondition();
    }
    for (int i = 0; i < 4; ++i) {
        c.normalized[i] = c.sub[i] / c.probability;
    }
    return c;
}

namespace {

// Gaussian elimination with partial pivoting on a 4x4 system, vector rhs.
std::array<double, 4> solve4(std::array<std::array<double, 5>, 4> aug) {
    for (int c = 0; c < 4; ++c) {
        int piv = c;
        for (int r = c + 1; r < 4; ++r) {
            if (std::abs(aug[r][c]) > std::abs(aug[piv][c])) {
                piv = r;
            }
        }
        if (std::abs(aug[piv][c]) < 1e-12) {
            throw SingularBasis();
        }
        std::swap(aug[c], aug[piv]);
        for (int r = 0; r < 4; ++r) {
            if (r == c) {
                continue;
            }
            double f = aug[r][c] / aug[c][c];
            for (int j = c; j < 5; ++j) {
                aug[r][j] -= f * aug[c][j];
            }
        }
    }
    std::array<double, 4> x{};
    for (int i = 0; i < 4; ++i) {
        x[i] = aug[i][4] / aug[i][i];
    }
    return x;
}

// Coefficients expressing `target` in the four basis vectors.
std::array<double, 4> in_basis(const std::array<Vec4, 4> &basis, const Vec4 &target) {
    std::array<std::array<double, 5>, 4> aug{};
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            aug[r][c] = basis[c][r];
        }
        aug[r][4] = target[r];
    }
    return solve4(aug);
}

} // namespace

Mat4 decompose_in_product_basis(const Mat4 &m, const std::array<Vec4, 4> &basis_a,
                                const std::array<Vec4, 4> &basis_b) {
    // Rows first: express each row block in basis_b, then columns in basis_a.
    Mat4 half{};
    for (int i = 0; i < 4; ++i) {
        std::array<double, 4> coeff = in_basis(basis_b, m[i]);
        for (int j = 0; j < 4; ++j) {
            half[i][j] = coeff[j];
        }
    }
    Mat4 out{};
    for (int j = 0; j < 4; ++j) {
        Vec4 col = {half[0][j], half[1][j], half[2][j], half[3][j]};
        std::array<double, 4> coeff = in_basis(basis_a, col);
        for (int i = 0; i < 4; ++i) {
            out[i][j] = coeff[i];
        }
    }
    return out;
}

Mat4 recompose(const Mat4 &coeffs, const std::array<Vec4, 4> &basis_a,
               const std::array<Vec4, 4> &basis_b) {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (coeffs[i][j] == 0) {
                continue;
            }
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) {
                    m[r][c] += coeffs[i][j] * basis_a[i][r] * basis_b[j][c];
                }
            }
        }
    }
    return m;
}

std::array<double, 16> behavior_from_angles(const Mat4 &m, const ChshAngles &angles) {
    auto side = [](double theta) { return spin_measurement(std::sin(theta), 0, std::cos(theta)); };
    std::array<std::pair<Vec4, Vec4>, 2> a = {side(angles.a0), side(angles.a1)};
    std::array<std::pair<Vec4, Vec4>, 2> b = {side(angles.b0), side(angles.b1)};
    std::array<double, 16> p{};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int oa = 0; oa < 2; ++oa) {
                for (int ob = 0; ob < 2; ++ob) {
                    const Vec4 &ea = oa == 0 ? a[x].first : a[x].second;
                    const Vec4 &eb = ob == 0 ? b[y].first : b[y].second;
                    p[oa * 8 + ob * 4 + x * 2 + y] = product_effect_eval(ea, eb, m);
                }
            }
        }
    }
    return p;
}

double chsh_from_behavior(const std::array<double, 16> &behavior) {
    double c[2][2] = {{0, 0}, {0, 0}};
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            for (int oa = 0; oa < 2; ++oa) {
                for (int ob = 0; ob < 2; ++ob) {
                    double sign = ((oa ^ ob) == 0) ? 1.0 : -1.0;
                    c[x][y] += sign * behavior[oa * 8 + ob * 4 + x * 2 + y];
                }
            }
        }
    }
    return std::abs(c[0][0] + c[0][1] + c[1][0] - c[1][1]);
}

Mat4 sample_pure_joint(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::array<Cx, 4> psi;
    double norm2 = 0;
    do {
        norm2 = 0;
        for (Cx &amp : psi) {
            amp = Cx(gauss(rng), gauss(rng));
            norm2 += std::norm(amp);
        }
    } while (norm2 < 1e-12);
    double inv = 1.0 / std::sqrt(norm2);
    for (Cx &amp : psi) {
        amp *= inv;
    }

    // rho = |psi><psi|; coefficients are tr[rho (sigma_mu ⊗ sigma_nu)].
    Cx sigma[4][2][2] = {};
    sigma[0][0][1] = sigma[0][1][0] = Cx(1);               // x
    sigma[1][0][1] = Cx(0, -1);                            // y
    sigma[1][1][0] = Cx(0, 1);
    sigma[2][0][0] = Cx(1);                                // z
    sigma[2][1][1] = Cx(-1);
    sigma[3][0][0] = sigma[3][1][1] = Cx(1);               // identity
    Mat4 m{};
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            Cx val(0);
            for (int r1 = 0; r1 < 2; ++r1) {
                for (int c1 = 0; c1 < 2; ++c1) {
                    for (int r2 = 0; r2 < 2; ++r2) {
                        for (int c2 = 0; c2 < 2; ++c2) {
                            // <c1 c2| rho |r1 r2> * S[r1r2, c1c2]
                            Cx rho = psi[c1 * 2 + c2] * std::conj(psi[r1 * 2 + r2]);
                            val += rho * sigma[mu][r1][c1] * sigma[nu][r2][c2];
                        }
                    }
                }
            }
            m[mu][nu] = val.real();
        }
    }
    return m;
}

NetMax max_chsh_over_net(const std::vector<Mat4> &net, const ChshAngles &angles) {
    NetMax best;
    bool first = true;
    for (const Mat4 &m : net) {
        double s = chsh_from_behavior(behavior_from_angles(m, angles));
        if (first || s > best.value) {
            best.value = s;
            best.state = m;
            first = false;
        }
    }
    return best;
}

} // namespace gptk::qubit
