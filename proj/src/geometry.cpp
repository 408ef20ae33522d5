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

#include "gptk/geometry.hpp"

#include <algorithm>
#include <cstdint>

#include "gptk/errors.hpp"
#include "gptk/linalg.hpp"
#include "gptk/lp.hpp"

namespace gptk {

namespace {

void check_cancel(const CancelToken *cancel) {
    if (cancel != nullptr && cancel->cancelled()) {
        throw OperationCancelled();
    }
}

// Small fixed-capacity bitset for tight-constraint bookkeeping.
struct TightSet {
    std::vector<std::uint64_t> words;

    explicit TightSet(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words[i / 64] |= (std::uint64_t{1} << (i % 64)); }

    bool contains_all_of(const TightSet &other) const {
        for (std::size_t w = 0; w < words.size(); ++w) {
            if ((other.words[w] & ~words[w]) != 0) {
                return false;
            }
        }
        return true;
    }

    static TightSet intersection(const TightSet &a, const TightSet &b) {
        TightSet r;
        r.words.resize(a.words.size());
        for (std::size_t w = 0; w < a.words.size(); ++w) {
            r.words[w] = a.words[w] & b.words[w];
        }
        return r;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words) {
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        }
        return c;
    }
};

struct PointedRay {
    Vec v;
    TightSet tight;
};

// Incremental double description for a pointed cone {y : rows·y >= 0} with
// rank(rows) equal to the ambient dimension.
std::vector<Vec> dd_pointed(const Mat &rows, int k, const CancelToken *cancel) {
    std::vector<int> start = independent_rows(rows, k);
    if (static_cast<int>(start.size()) != k) {
        throw SingularSystem("double description: constraint matrix lost rank");
    }

    Mat basis_rows;
    for (int idx : start) {
        basis_rows.push_back(rows[idx]);
    }
    std::optional<Mat> inv = invert(basis_rows);
    if (!inv) {
        throw SingularSystem("double description: initial basis not invertible");
    }

    std::size_t m = rows.size();
    std::vector<char> processed(m, 0);
    std::vector<PointedRay> rays;
    Mat inv_cols = transpose(*inv);
    for (int j = 0; j < k; ++j) {
        PointedRay r;
        r.v = canon_ray(inv_cols[j]);
        r.tight = TightSet(m);
        for (int i = 0; i < k; ++i) {
            if (i != j) {
                r.tight.set(start[i]);
            }
        }
        rays.push_back(std::move(r));
    }
    for (int idx : start) {
        processed[idx] = 1;
    }

    for (std::size_t row = 0; row < m; ++row) {
        if (processed[row]) {
            continue;
        }
        check_cancel(cancel);

        std::vector<Rat> value(rays.size());
        std::vector<std::size_t> pos, zero, neg;
        for (std::size_t i = 0; i < rays.size(); ++i) {
            value[i] = dot(rows[row], rays[i].v);
            if (value[i] > 0) {
                pos.push_back(i);
            } else if (value[i] == 0) {
                zero.push_back(i);
            } else {
                neg.push_back(i);
            }
        }

        std::vector<PointedRay> next;
        for (std::size_t i : pos) {
            next.push_back(rays[i]);
        }
        for (std::size_t i : zero) {
            PointedRay r = rays[i];
            r.tight.set(row);
            next.push_back(std::move(r));
        }
        for (std::size_t p : pos) {
            check_cancel(cancel);
            for (std::size_t q : neg) {
                TightSet common = TightSet::intersection(rays[p].tight, rays[q].tight);
                if (static_cast<int>(common.count()) < k - 2) {
                    continue;
                }
                bool adjacent = true;
                for (std::size_t w = 0; w < rays.size(); ++w) {
                    if (w == p || w == q) {
                        continue;
                    }
                    if (rays[w].tight.contains_all_of(common)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) {
                    continue;
                }
                PointedRay nr;
                nr.v = canon_ray(vec_sub(vec_scale(rays[q].v, value[p]),
                                         vec_scale(rays[p].v, value[q])));
                nr.tight = common;
                nr.tight.set(row);
                next.push_back(std::move(nr));
            }
        }
        rays = std::move(next);
        processed[row] = 1;
    }

    std::vector<Vec> out;
    out.reserve(rays.size());
    for (PointedRay &r : rays) {
        out.push_back(std::move(r.v));
    }
    return out;
}

} // namespace

Cone cone_from_generators(std::vector<Vec> generators, int dim) {
    Cone c;
    c.dim = dim;
    c.generators = extremal_rays(generators);
    return c;
}

Cone cone_from_halfspaces(std::vector<Vec> halfspaces, int dim) {
    Cone c;
    c.dim = dim;
    c.halfspaces = std::move(halfspaces);
    return c;
}

Vec canon_ray(const Vec &ray) {
    mpz_class denom_lcm = 1;
    for (const Rat &x : ray) {
        denom_lcm = lcm(denom_lcm, x.get_den());
    }
    std::vector<mpz_class> ints(ray.size());
    mpz_class content = 0;
    for (std::size_t i = 0; i < ray.size(); ++i) {
        ints[i] = ray[i].get_num() * (denom_lcm / ray[i].get_den());
        content = gcd(content, ints[i]);
    }
    Vec out(ray.size(), Rat(0));
    if (content == 0) {
        return out;
    }
    for (std::size_t i = 0; i < ray.size(); ++i) {
        out[i] = Rat(ints[i] / content);
    }
    return out;
}

bool vec_lex_less(const Vec &a, const Vec &b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) {
            return a[i] < b[i];
        }
    }
    return a.size() < b.size();
}

std::vector<Vec> dd_generators(const std::vector<Vec> &halfspaces, int dim,
                               const CancelToken *cancel) {
    for (const Vec &h : halfspaces) {
        if (static_cast<int>(h.size()) != dim) {
            throw DimensionMismatch("dd_generators: halfspace dimension");
        }
    }

    Mat nonzero;
    for (const Vec &h : halfspaces) {
        if (!is_zero_vec(h)) {
            nonzero.push_back(h);
        }
    }

    std::vector<Vec> out;
    Mat lineality = nonzero.empty() ? identity_mat(dim) : nullspace(nonzero);

    if (static_cast<int>(lineality.size()) < dim) {
        // Complement of the lineality space, attacked with pointed DD.
        Mat complement = lineality.empty() ? identity_mat(dim) : nullspace(lineality);
        int k = static_cast<int>(complement.size());
        Mat reduced(nonzero.size(), Vec(k));
        for (std::size_t i = 0; i < nonzero.size(); ++i) {
            for (int j = 0; j < k; ++j) {
                reduced[i][j] = dot(nonzero[i], complement[j]);
            }
        }
        for (const Vec &y : dd_pointed(reduced, k, cancel)) {
            Vec x = zero_vec(dim);
            for (int j = 0; j < k; ++j) {
                x = vec_add(x, vec_scale(complement[j], y[j]));
            }
            out.push_back(canon_ray(x));
        }
    }
    for (const Vec &l : lineality) {
        Vec c = canon_ray(l);
        out.push_back(c);
        out.push_back(vec_scale(c, Rat(-1)));
    }

    for (const Vec &g : out) {
        for (const Vec &h : halfspaces) {
            if (dot(h, g) < 0) {
                throw SingularSystem("double description produced an invalid generator");
            }
        }
    }
    std::sort(out.begin(), out.end(), vec_lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vec> hrep_to_vrep(const std::vector<Vec> &halfspaces, int dim,
                              const CancelToken *cancel) {
    return dd_generators(halfspaces, dim, cancel);
}

std::vector<Vec> vrep_to_hrep(const std::vector<Vec> &generators, int dim,
                              const CancelToken *cancel) {
    return dd_generators(generators, dim, cancel);
}

Cone dual_cone(const Cone &c) {
    Cone d;
    d.dim = c.dim;
    if (c.generators) {
        d.halfspaces = *c.generators;
    } else {
        Cone src = c;
        d.halfspaces = ensure_generators(src);
    }
    return d;
}

const std::vector<Vec> &ensure_generators(Cone &c, const CancelToken *cancel) {
    if (!c.generators) {
        c.generators = dd_generators(c.halfspaces.value(), c.dim, cancel);
    }
    return *c.generators;
}

const std::vector<Vec> &ensure_halfspaces(Cone &c, const CancelToken *cancel) {
    if (!c.halfspaces) {
        c.halfspaces = dd_generators(c.generators.value(), c.dim, cancel);
    }
    return *c.halfspaces;
}

Feasibility member(const Cone &c, const Vec &x) {
    if (static_cast<int>(x.size()) != c.dim) {
        throw DimensionMismatch("member(Cone)");
    }
    Feasibility f;
    if (c.generators) {
        const std::vector<Vec> &gens = *c.generators;
        Mat a(c.dim, Vec(gens.size()));
        for (std::size_t g = 0; g < gens.size(); ++g) {
            for (int i = 0; i < c.dim; ++i) {
                a[i][g] = gens[g][i];
            }
        }
        LpSolution lp = lp_solve_standard(a, x, zero_vec(static_cast<int>(gens.size())));
        if (lp.status == LpStatus::Optimal) {
            f.feasible = true;
            f.witness = x;
            f.combination = lp.x;
        } else {
            f.feasible = false;
            f.certificate = lp.farkas;
        }
        return f;
    }
    for (const Vec &h : c.halfspaces.value()) {
        if (dot(h, x) < 0) {
            f.feasible = false;
            f.certificate = h;
            return f;
        }
    }
    f.feasible = true;
    f.witness = x;
    return f;
}

Feasibility member(const ConvexBody &body, const Vec &x) {
    if (static_cast<int>(x.size()) != body.dim) {
        throw DimensionMismatch("member(ConvexBody)");
    }
    Feasibility f;
    std::size_t n = body.vertices.size();
    Mat a(body.dim + 1, Vec(n));
    for (std::size_t v = 0; v < n; ++v) {
        for (int i = 0; i < body.dim; ++i) {
            a[i][v] = body.vertices[v][i];
        }
        a[body.dim][v] = 1;
    }
    Vec b = x;
    b.push_back(1);
    LpSolution lp = lp_solve_standard(a, b, zero_vec(static_cast<int>(n)));
    if (lp.status == LpStatus::Optimal) {
        f.feasible = true;
        f.witness = x;
        f.combination = lp.x;
    } else {
        f.feasible = false;
        f.certificate = lp.farkas;
    }
    return f;
}

std::vector<Vec> extremal_rays(const std::vector<Vec> &rays) {
    // Canonicalize and deduplicate, preserving first-occurrence order.
    std::vector<Vec> canon;
    for (const Vec &r : rays) {
        Vec c = canon_ray(r);
        if (!is_zero_vec(c) && std::find(canon.begin(), canon.end(), c) == canon.end()) {
            canon.push_back(std::move(c));
        }
    }

    std::vector<Vec> kept;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < canon.size(); ++j) {
            if (j != i) {
                others.push_back(canon[j]);
            }
        }
        if (others.empty()) {
            kept.push_back(canon[i]);
            continue;
        }
        Cone rest;
        rest.dim = static_cast<int>(canon[i].size());
        rest.generators = std::move(others);
        if (!member(rest, canon[i]).feasible) {
            kept.push_back(canon[i]);
        }
    }
    return kept;
}

std::vector<Vec> extremal_points(const std::vector<Vec> &points) {
    std::vector<Vec> unique_pts;
    for (const Vec &p : points) {
        if (std::find(unique_pts.begin(), unique_pts.end(), p) == unique_pts.end()) {
            unique_pts.push_back(p);
        }
    }

    std::vector<Vec> kept;
    for (std::size_t i = 0; i < unique_pts.size(); ++i) {
        ConvexBody rest;
        rest.dim = static_cast<int>(unique_pts[i].size());
        for (std::size_t j = 0; j < unique_pts.size(); ++j) {
            if (j != i) {
                rest.vertices.push_back(unique_pts[j]);
            }
        }
        if (rest.vertices.empty() || !member(rest, unique_pts[i]).feasible) {
            kept.push_back(unique_pts[i]);
        }
    }
    return kept;
}

Cone project(const Cone &c, const Mat &map) {
    Cone image;
    image.dim = static_cast<int>(map.size());
    Cone src = c;
    std::vector<Vec> gens;
    for (const Vec &g : ensure_generators(src)) {
        gens.push_back(mat_vec(map, g));
    }
    image.generators = extremal_rays(gens);
    return image;
}

ConvexBody project(const ConvexBody &body, const Mat &map) {
    ConvexBody image;
    image.dim = static_cast<int>(map.size());
    std::vector<Vec> pts;
    for (const Vec &v : body.vertices) {
        pts.push_back(mat_vec(map, v));
    }
    image.vertices = extremal_points(pts);
    return image;
}

Feasibility intersect_shifted(const std::vector<ShiftedSet> &sets) {
    Feasibility f;
    if (sets.empty()) {
        throw DegenerateInput("intersect_shifted: no sets");
    }
    int dim = static_cast<int>(sets[0].shift.size());
    for (const ShiftedSet &s : sets) {
        if (s.set.dim != dim || static_cast<int>(s.shift.size()) != dim) {
            throw DimensionMismatch("intersect_shifted");
        }
        if (s.set.vertices.empty()) {
            f.feasible = false;
            return f;
        }
    }

    // Variables: x (dim), then one convex-weight block per set.
    int total = dim;
    std::vector<int> offset;
    for (const ShiftedSet &s : sets) {
        offset.push_back(total);
        total += static_cast<int>(s.set.vertices.size());
    }

    GeneralLp lp;
    lp.objective = zero_vec(total);
    for (std::size_t k = 0; k < sets.size(); ++k) {
        const ShiftedSet &s = sets[k];
        int nv = static_cast<int>(s.set.vertices.size());
        // x - sign * V lambda = shift
        for (int i = 0; i < dim; ++i) {
            Vec row = zero_vec(total);
            row[i] = 1;
            for (int j = 0; j < nv; ++j) {
                row[offset[k] + j] = Rat(-s.sign) * s.set.vertices[j][i];
            }
            lp.eq_lhs.push_back(std::move(row));
            lp.eq_rhs.push_back(s.shift[i]);
        }
        Vec sum_row = zero_vec(total);
        for (int j = 0; j < nv; ++j) {
            sum_row[offset[k] + j] = 1;
        }
        lp.eq_lhs.push_back(std::move(sum_row));
        lp.eq_rhs.push_back(1);
        for (int j = 0; j < nv; ++j) {
            Vec pos = zero_vec(total);
            pos[offset[k] + j] = 1;
            lp.ineq_lhs.push_back(std::move(pos));
            lp.ineq_rhs.push_back(0);
        }
    }

    LpSolution sol = lp_solve_general(lp);
    if (sol.status == LpStatus::Optimal) {
        f.feasible = true;
        f.witness = Vec(sol.x.begin(), sol.x.begin() + dim);
    } else {
        f.feasible = false;
        f.certificate = sol.farkas;
    }
    return f;
}

PolyhedronVerts enumerate_polyhedron(const Mat &lhs, const Vec &rhs, const CancelToken *cancel) {
    if (lhs.size() != rhs.size()) {
        throw DimensionMismatch("enumerate_polyhedron");
    }
    int dim = lhs.empty() ? 0 : static_cast<int>(lhs[0].size());
    std::vector<Vec> homog;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        Vec h = lhs[i];
        h.push_back(-rhs[i]);
        homog.push_back(std::move(h));
    }
    Vec t_pos = zero_vec(dim + 1);
    t_pos[dim] = 1;
    homog.push_back(std::move(t_pos));

    PolyhedronVerts result;
    for (const Vec &ray : dd_generators(homog, dim + 1, cancel)) {
        Rat t = ray[dim];
        Vec x(ray.begin(), ray.begin() + dim);
        if (t == 0) {
            result.rays.push_back(std::move(x));
        } else {
            result.vertices.push_back(vec_scale(x, 1 / t));
        }
    }
    return result;
}

BodyHrep body_hrep(const ConvexBody &body, const CancelToken *cancel) {
    // Homogenize at height 1, convert, read facets back as a·x >= b.
    std::vector<Vec> lifted;
    for (const Vec &v : body.vertices) {
        Vec l = v;
        l.push_back(1);
        lifted.push_back(std::move(l));
    }
    BodyHrep rep;
    for (const Vec &h : dd_generators(lifted, body.dim + 1, cancel)) {
        Vec a(h.begin(), h.begin() + body.dim);
        rep.lhs.push_back(std::move(a));
        rep.rhs.push_back(-h[body.dim]);
    }
    return rep;
}

bool cones_equal(const Cone &a, const Cone &b) {
    Cone ca = a;
    Cone cb = b;
    for (const Vec &g : ensure_generators(ca)) {
        if (!member(cb, g).feasible) {
            return false;
        }
    }
    for (const Vec &g : ensure_generators(cb)) {
        if (!member(ca, g).feasible) {
            return false;
        }
    }
    return true;
}

} // namespace gptk
