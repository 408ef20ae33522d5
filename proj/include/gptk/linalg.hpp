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
 * Dense exact linear algebra over the rationals: rank, solves, inverses,
 * nullspaces, and basis selection. Everything is plain Gaussian elimination
 * with exact pivoting; instance sizes in this toolkit are small.
 */

#pragma once

#include <optional>
#include <vector>

#include "gptk/rational.hpp"

namespace gptk {

Rat dot(const Vec &a, const Vec &b);

Vec vec_add(const Vec &a, const Vec &b);
Vec vec_sub(const Vec &a, const Vec &b);
Vec vec_scale(const Vec &a, const Rat &s);
bool is_zero_vec(const Vec &a);
Vec zero_vec(int n);

Mat transpose(const Mat &m);
Vec mat_vec(const Mat &m, const Vec &x);
Mat mat_mul(const Mat &a, const Mat &b);
Mat identity_mat(int n);

int rank_of(Mat m);

/**
 * Indices of a maximal set of linearly independent rows, scanning in input
 * order (the first row that increases the rank is kept). If `limit` >= 0,
 * stops after that many rows.
 */
std::vector<int> independent_rows(const Mat &m, int limit = -1);
std::vector<int> independent_cols(const Mat &m, int limit = -1);

/// Exact solution of a square system; nullopt when singular.
std::optional<Vec> solve_square(Mat a, Vec b);

/// Any exact solution of a (possibly rectangular) consistent system Ax = b.
std::optional<Vec> solve_consistent(Mat a, Vec b);

std::optional<Mat> invert(const Mat &a);

/// Basis of {x : Ax = 0}.
Mat nullspace(const Mat &a);

} // namespace gptk
