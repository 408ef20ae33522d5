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
 * From raw measurement statistics to coordinates.
 *
 * A raw table lists the click probability of every (preparation, 1-bit
 * measurement) pair. Reduction merges operationally equivalent rows and
 * columns, convex-redundancy detection isolates the extremal elements with
 * exact certificates, and the coordinate representation expresses effects
 * in the first linearly independent rows and states in the conjugate basis,
 * making the probability pairing a plain dot product.
 */

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gptk/rational.hpp"

namespace gptk {

/// Raw statistics: rows are preparations, columns are 1-bit measurements.
struct RawTable {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Mat entries; ///< entries[r][c] = click probability of measurement c on preparation r
};

/// An operational equivalence class and the toolbox labels merged into it.
struct MergedClass {
    std::string label;
    std::vector<std::string> members;
};

/**
 * Reduced probability table. entries[i][j] = e_i(omega_j); no two rows and
 * no two columns are identical.
 */
struct ProbTable {
    std::vector<MergedClass> effects;
    std::vector<MergedClass> states;
    Mat entries;
    int rank = 0;
};

/// Exact convex-combination certificate for a redundant effect or state.
struct ConvexCertificate {
    bool is_effect = true;
    int index = 0;
    std::vector<std::pair<int, Rat>> combination; ///< indices into the surviving extremal elements
};

struct CoordRep {
    int dim = 0;
    std::vector<Vec> effect_coords;
    std::vector<Vec> state_coords;
    std::vector<int> basis_effect_rows;
    std::vector<int> basis_state_cols;
    /// n x N: row k expands the conjugate basis vector in the original states.
    Mat conjugate_basis;
};

/// Merge identical rows/columns into equivalence classes. Throws EmptyTable.
ProbTable reduce_table(const RawTable &raw);

/**
 * Every effect (row) and state (column) that is a convex combination of the
 * others, with exact non-negative coefficients summing to one. Coefficients
 * reference only surviving extremal elements.
 */
std::vector<ConvexCertificate> find_convex_redundant(const ProbTable &table);

/// Remove the flagged elements, keeping labels; recomputes the rank.
ProbTable drop_redundant(const ProbTable &table, const std::vector<ConvexCertificate> &certs);

/// Exact rank of the probability matrix over the rationals.
int compute_rank(const ProbTable &table);

/**
 * Coordinates with respect to the first `rank` linearly independent effects,
 * which receive canonical (Kronecker) coordinates; state coordinates are the
 * table columns restricted to the basis rows. Throws SingularSystem if the
 * selected state columns cannot determine the conjugate basis.
 */
CoordRep coordinate_rep(const ProbTable &table);

/// Bilinear pairing in conjugate bases: plain componentwise dot product.
Rat evaluate(const Vec &effect, const Vec &state);

/// Expansion of every state column in the basis state columns (n coefficients
/// per state), derived from the conjugate basis; used in reduction reports.
Mat state_dependencies(const ProbTable &table, const CoordRep &rep);

} // namespace gptk
