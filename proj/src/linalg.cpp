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

#include "gptk/linalg.hpp"

#include <cassert>

#include "gptk/errors.hpp"

namespace gptk {

Rat dot(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot: " + std::to_string(a.size()) +
                                " vs " + std::to_string(b.size()));
    }
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

Vec vec_add(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vec_add");
    }
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
    }
    return r;
}

Vec vec_sub(const Vec &a, const Vec &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vec_sub");
    }
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] - b[i];
    }
    return r;
}

Vec vec_scale(const Vec &a, const Rat &s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] * s;
    }
    return r;
}

bool is_zero_vec(const Vec &a) {
    for (const Rat &x : a) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

Vec zero_vec(int n) { return Vec(static_cast<std::size_t>(n), Rat(0)); }

Mat transpose(const Mat &m) {
    if (m.empty()) {
        return {};
    }
    Mat t(m[0].size(), Vec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m[i].size(); ++j) {
            t[j][i] = m[i][j];
        }
    }
    return t;
}

Vec mat_vec(const Mat &m, const Vec &x) {
    Vec r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        r[i] = dot(m[i], x);
    }
    return r;
}

Mat mat_mul(const Mat &a, const Mat &b) {
    Mat bt = transpose(b);
    Mat r(a.size(), Vec(bt.size()));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < bt.size(); ++j) {
            r[i][j] = dot(a[i], bt[j]);
        }
    }
    return r;
}

Mat identity_mat(int n) {
    Mat id(n, zero_vec(n));
    for (int i = 0; i < n; ++i) {
        id[i][i] = 1;
    }
    return id;
}

namespace {

// Row-reduce in place; returns pivot column per eliminated row.
std::vector<int> eliminate(Mat &m) {
    std::vector<int> pivot_cols;
    if (m.empty()) {
        return pivot_cols;
    }
    std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) {
            ++piv;
        }
        if (piv == m.size()) {
            continue;
        }
        std::swap(m[row], m[piv]);
        Rat inv = 1 / m[row][col];
        for (std::size_t j = col; j < cols; ++j) {
            m[row][j] *= inv;
        }
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != row && m[r][col] != 0) {
                Rat f = m[r][col];
                for (std::size_t j = col; j < cols; ++j) {
                    m[r][j] -= f * m[row][j];
                }
            }
        }
        pivot_cols.push_back(static_cast<int>(col));
        ++row;
    }
    return pivot_cols;
}

} // namespace

int rank_of(Mat m) { return static_cast<int>(eliminate(m).size()); }

std::vector<int> independent_rows(const Mat &m, int limit) {
    std::vector<int> chosen;
    Mat acc;
    int rank = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (limit >= 0 && static_cast<int>(chosen.size()) == limit) {
            break;
        }
        acc.push_back(m[i]);
        int r = rank_of(acc);
        if (r > rank) {
            rank = r;
            chosen.push_back(static_cast<int>(i));
        } else {
            acc.pop_back();
        }
    }
    return chosen;
}

std::vector<int> independent_cols(const Mat &m, int limit) {
    return independent_rows(transpose(m), limit);
}

std::optional<Vec> solve_square(Mat a, Vec b) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) {
            throw DimensionMismatch("solve_square: matrix not square");
        }
        a[i].push_back(b[i]);
    }
    std::vector<int> pivots = eliminate(a);
    if (pivots.size() != n || pivots.back() >= static_cast<int>(n)) {
        return std::nullopt;
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[pivots[i]] = a[i][n];
    }
    return x;
}

std::optional<Vec> solve_consistent(Mat a, Vec b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("solve_consistent");
    }
    std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i].push_back(b[i]);
    }
    std::vector<int> pivots = eliminate(a);
    // Inconsistent iff a pivot landed in the augmented column.
    for (int p : pivots) {
        if (p == static_cast<int>(cols)) {
            return std::nullopt;
        }
    }
    Vec x = zero_vec(static_cast<int>(cols));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        x[pivots[i]] = a[i][cols];
    }
    return x;
}

std::optional<Mat> invert(const Mat &a) {
    std::size_t n = a.size();
    Mat work(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) {
            throw DimensionMismatch("invert: matrix not square");
        }
        work[i] = a[i];
        for (std::size_t j = 0; j < n; ++j) {
            work[i].push_back(i == j ? Rat(1) : Rat(0));
        }
    }
    std::vector<int> pivots = eliminate(work);
    if (pivots.size() != n || pivots.back() >= static_cast<int>(n)) {
        return std::nullopt;
    }
    Mat inv(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            inv[pivots[i]][j] = work[i][n + j];
        }
    }
    return inv;
}

Mat nullspace(const Mat &a) {
    if (a.empty()) {
        return {};
    }
    std::size_t cols = a[0].size();
    Mat m = a;
    std::vector<int> pivots = eliminate(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) {
        is_pivot[p] = true;
    }
    Mat basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        Vec v = zero_vec(static_cast<int>(cols));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            v[pivots[i]] = -m[i][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace gptk
