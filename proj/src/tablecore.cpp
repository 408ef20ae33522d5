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

#include "gptk/tablecore.hpp"

#include <algorithm>
#include <map>

#include "gptk/errors.hpp"
#include "gptk/geometry.hpp"
#include "gptk/linalg.hpp"

namespace gptk {

namespace {

// Group equal vectors, preserving first-occurrence order.
std::vector<std::vector<int>> equality_classes(const std::vector<Vec> &rows) {
    std::vector<std::vector<int>> classes;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool placed = false;
        for (std::vector<int> &cls : classes) {
            if (rows[cls.front()] == rows[i]) {
                cls.push_back(static_cast<int>(i));
                placed = true;
                break;
            }
        }
        if (!placed) {
            classes.push_back({static_cast<int>(i)});
        }
    }
    return classes;
}

std::vector<Vec> table_rows(const Mat &entries) { return entries; }

std::vector<Vec> table_cols(const Mat &entries) { return transpose(entries); }

} // namespace

ProbTable reduce_table(const RawTable &raw) {
    if (raw.entries.empty() || raw.entries[0].empty()) {
        throw EmptyTable();
    }
    std::size_t n_states = raw.entries.size();
    std::size_t n_effects = raw.entries[0].size();
    if (raw.row_labels.size() != n_states || raw.col_labels.size() != n_effects) {
        throw DimensionMismatch("reduce_table: labels do not match table shape");
    }
    for (const Vec &row : raw.entries) {
        if (row.size() != n_effects) {
            throw DimensionMismatch("reduce_table: ragged table");
        }
        for (const Rat &p : row) {
            if (p < 0 || p > 1) {
                throw ParseError("probability out of range: " + rat_str(p));
            }
        }
    }

    // Internal orientation: rows are effects, columns are states.
    Mat oriented = transpose(raw.entries);

    std::vector<std::vector<int>> effect_classes = equality_classes(table_rows(oriented));
    std::vector<std::vector<int>> state_classes = equality_classes(table_cols(oriented));

    ProbTable table;
    for (const std::vector<int> &cls : effect_classes) {
        MergedClass mc;
        mc.label = raw.col_labels[cls.front()];
        for (int i : cls) {
            mc.members.push_back(raw.col_labels[i]);
        }
        table.effects.push_back(std::move(mc));
    }
    for (const std::vector<int> &cls : state_classes) {
        MergedClass mc;
        mc.label = raw.row_labels[cls.front()];
        for (int j : cls) {
            mc.members.push_back(raw.row_labels[j]);
        }
        table.states.push_back(std::move(mc));
    }
    table.entries.assign(table.effects.size(), Vec(table.states.size()));
    for (std::size_t i = 0; i < effect_classes.size(); ++i) {
        for (std::size_t j = 0; j < state_classes.size(); ++j) {
            table.entries[i][j] = oriented[effect_classes[i].front()][state_classes[j].front()];
        }
    }
    table.rank = rank_of(table.entries);
    return table;
}

namespace {

// Convex-hull membership of `target` among `others`; empty result when extremal.
std::optional<std::vector<std::pair<int, Rat>>>
convex_combination(const std::vector<Vec> &others, const std::vector<int> &labels,
                   const Vec &target) {
    if (others.empty()) {
        return std::nullopt;
    }
    ConvexBody hull;
    hull.dim = static_cast<int>(target.size());
    hull.vertices = others;
    Feasibility f = member(hull, target);
    if (!f.feasible) {
        return std::nullopt;
    }
    std::vector<std::pair<int, Rat>> combo;
    for (std::size_t k = 0; k < others.size(); ++k) {
        if ((*f.combination)[k] != 0) {
            combo.emplace_back(labels[k], (*f.combination)[k]);
        }
    }
    return combo;
}

std::vector<int> redundant_indices(const std::vector<Vec> &elements) {
    std::vector<int> flagged;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        std::vector<Vec> others;
        std::vector<int> labels;
        for (std::size_t j = 0; j < elements.size(); ++j) {
            if (j != i) {
                others.push_back(elements[j]);
                labels.push_back(static_cast<int>(j));
            }
        }
        if (convex_combination(others, labels, elements[i])) {
            flagged.push_back(static_cast<int>(i));
        }
    }
    return flagged;
}

} // namespace

std::vector<ConvexCertificate> find_convex_redundant(const ProbTable &table) {
    std::vector<ConvexCertificate> certs;

    for (int pass = 0; pass < 2; ++pass) {
        bool effects = (pass == 0);
        std::vector<Vec> elements =
            effects ? table_rows(table.entries) : table_cols(table.entries);
        std::vector<int> flagged = redundant_indices(elements);
        std::vector<bool> is_flagged(elements.size(), false);
        for (int i : flagged) {
            is_flagged[i] = true;
        }
        // Certificates are recomputed against the extremal survivors only.
        for (int i : flagged) {
            std::vector<Vec> survivors;
            std::vector<int> labels;
            for (std::size_t j = 0; j < elements.size(); ++j) {
                if (!is_flagged[j]) {
                    survivors.push_back(elements[j]);
                    labels.push_back(static_cast<int>(j));
                }
            }
            auto combo = convex_combination(survivors, labels, elements[i]);
            if (!combo) {
                throw SingularSystem("redundant element lost its certificate");
            }
            ConvexCertificate cert;
            cert.is_effect = effects;
            cert.index = i;
            cert.combination = std::move(*combo);
            certs.push_back(std::move(cert));
        }
    }
    return certs;
}

ProbTable drop_redundant(const ProbTable &table, const std::vector<ConvexCertificate> &certs) {
    std::vector<bool> drop_effect(table.effects.size(), false);
    std::vector<bool> drop_state(table.states.size(), false);
    for (const ConvexCertificate &c : certs) {
        (c.is_effect ? drop_effect : drop_state)[c.index] = true;
    }
    ProbTable out;
    for (std::size_t i = 0; i < table.effects.size(); ++i) {
        if (!drop_effect[i]) {
            out.effects.push_back(table.effects[i]);
        }
    }
    for (std::size_t j = 0; j < table.states.size(); ++j) {
        if (!drop_state[j]) {
            out.states.push_back(table.states[j]);
        }
    }
    for (std::size_t i = 0; i < table.entries.size(); ++i) {
        if (drop_effect[i]) {
            continue;
        }
        Vec row;
        for (std::size_t j = 0; j < table.entries[i].size(); ++j) {
            if (!drop_state[j]) {
                row.push_back(table.entries[i][j]);
            }
        }
        out.entries.push_back(std::move(row));
    }
    out.rank = rank_of(out.entries);
    return out;
}

int compute_rank(const ProbTable &table) { return rank_of(table.entries); }

CoordRep coordinate_rep(const ProbTable &table) {
    CoordRep rep;
    rep.dim = compute_rank(table);
    int n = rep.dim;
    rep.basis_effect_rows = independent_rows(table.entries, n);
    rep.basis_state_cols = independent_cols(table.entries, n);

    Mat basis_rows;
    for (int r : rep.basis_effect_rows) {
        basis_rows.push_back(table.entries[r]);
    }
    Mat basis_rows_t = transpose(basis_rows);

    for (const Vec &row : table.entries) {
        std::optional<Vec> coords = solve_consistent(basis_rows_t, row);
        if (!coords) {
            throw SingularSystem("effect row escapes the basis row space");
        }
        rep.effect_coords.push_back(std::move(*coords));
    }

    std::size_t n_states = table.states.size();
    for (std::size_t j = 0; j < n_states; ++j) {
        Vec coords(n);
        for (int k = 0; k < n; ++k) {
            coords[k] = table.entries[rep.basis_effect_rows[k]][j];
        }
        rep.state_coords.push_back(std::move(coords));
    }

    // Conjugate basis vectors solved over the selected state columns.
    Mat square(n, Vec(n));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            square[r][c] = table.entries[rep.basis_effect_rows[r]][rep.basis_state_cols[c]];
        }
    }
    std::optional<Mat> inv = invert(square);
    if (!inv) {
        throw SingularSystem("selected state columns do not determine the conjugate basis");
    }
    rep.conjugate_basis.assign(n, zero_vec(static_cast<int>(n_states)));
    for (int k = 0; k < n; ++k) {
        // square * c = e_k  =>  c = inv * e_k, the k-th column of inv.
        for (int t = 0; t < n; ++t) {
            rep.conjugate_basis[k][rep.basis_state_cols[t]] = (*inv)[t][k];
        }
    }
    return rep;
}

Rat evaluate(const Vec &effect, const Vec &state) {
    if (effect.size() != state.size()) {
        throw DimensionMismatch("evaluate");
    }
    return dot(effect, state);
}

Mat state_dependencies(const ProbTable &table, const CoordRep &rep) {
    // omega_j = sum_k p(basis_k, j) * conjugate_k, re-expanded in the states.
    std::size_t n_states = table.states.size();
    Mat deps(n_states, zero_vec(static_cast<int>(n_states)));
    for (std::size_t j = 0; j < n_states; ++j) {
        for (int k = 0; k < rep.dim; ++k) {
            Rat coeff = rep.state_coords[j][k];
            if (coeff == 0) {
                continue;
            }
            for (std::size_t t = 0; t < n_states; ++t) {
                deps[j][t] += coeff * rep.conjugate_basis[k][t];
            }
        }
    }
    return deps;
}

} // namespace gptk
