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
 * Exact convex-cone and polytope kernel.
 *
 * Representation conversion uses the double description method on exact
 * rationals; membership and redundancy questions are answered by the exact
 * LP with verifiable witnesses and certificates. Non-pointed cones are
 * handled through a lineality-space pre-pass, lower-dimensional inputs
 * through the induced affine hull.
 */

#pragma once

#include <atomic>
#include <optional>
#include <vector>

#include "gptk/rational.hpp"

namespace gptk {

/// Cooperative cancellation for long-running conversions.
class CancelToken {
  public:
    void cancel() { flag_.store(true, std::memory_order_relaxed); }
    bool cancelled() const { return flag_.load(std::memory_order_relaxed); }

  private:
    std::atomic<bool> flag_{false};
};

/**
 * Polyhedral cone with one or both representations.
 *
 * V-representation: generating rays (a non-pointed cone carries +/- pairs
 * spanning its lineality space). H-representation: outer normals h of the
 * halfspaces {x : h·x >= 0}.
 */
struct Cone {
    int dim = 0;
    std::optional<std::vector<Vec>> generators;
    std::optional<std::vector<Vec>> halfspaces;
};

Cone cone_from_generators(std::vector<Vec> generators, int dim);
Cone cone_from_halfspaces(std::vector<Vec> halfspaces, int dim);

/// Bounded convex polytope described by its extremal points.
struct ConvexBody {
    int dim = 0;
    std::vector<Vec> vertices;
};

/**
 * Outcome of an exact feasibility question. A feasible answer carries the
 * point and, where meaningful, the convex/conic combination producing it;
 * an infeasible answer carries a certificate that strictly separates (or
 * Farkas multipliers for compound systems).
 */
struct Feasibility {
    bool feasible = false;
    std::optional<Vec> witness;
    std::optional<Vec> combination;
    std::optional<Vec> certificate;
};

/// Positive scaling making the ray integral with content 1. Zero stays zero.
Vec canon_ray(const Vec &ray);

bool vec_lex_less(const Vec &a, const Vec &b);

/**
 * Generators of {x : h·x >= 0 for all h}. The workhorse behind both
 * conversion directions. Output rays are canonical, lexicographically
 * sorted, and irredundant; lineality directions appear as +/- pairs.
 */
std::vector<Vec> dd_generators(const std::vector<Vec> &halfspaces, int dim,
                               const CancelToken *cancel = nullptr);

std::vector<Vec> hrep_to_vrep(const std::vector<Vec> &halfspaces, int dim,
                              const CancelToken *cancel = nullptr);

/// By cone duality this is the same conversion run on the generator matrix.
std::vector<Vec> vrep_to_hrep(const std::vector<Vec> &generators, int dim,
                              const CancelToken *cancel = nullptr);

/// Dual cone {e : e·g >= 0 for every generator g}, delivered in H-form.
Cone dual_cone(const Cone &c);

const std::vector<Vec> &ensure_generators(Cone &c, const CancelToken *cancel = nullptr);
const std::vector<Vec> &ensure_halfspaces(Cone &c, const CancelToken *cancel = nullptr);

Feasibility member(const Cone &c, const Vec &x);
Feasibility member(const ConvexBody &body, const Vec &x);

/// Prune to extremal rays (duplicates under positive scaling merged).
std::vector<Vec> extremal_rays(const std::vector<Vec> &rays);
/// Prune to extremal points of the convex hull.
std::vector<Vec> extremal_points(const std::vector<Vec> &points);

/// Image under a linear map given by rows (k x n), reduced to irredundant form.
Cone project(const Cone &c, const Mat &map);
ConvexBody project(const ConvexBody &body, const Mat &map);

/// One term of an intersection query: shift + sign * set.
struct ShiftedSet {
    ConvexBody set;
    Vec shift;
    int sign = 1;
};

/// Decides whether the intersection of all shifted sets is non-empty.
Feasibility intersect_shifted(const std::vector<ShiftedSet> &sets);

/// Vertex/ray split of the polyhedron {x : A x >= b}.
struct PolyhedronVerts {
    std::vector<Vec> vertices;
    std::vector<Vec> rays;
};

PolyhedronVerts enumerate_polyhedron(const Mat &lhs, const Vec &rhs,
                                     const CancelToken *cancel = nullptr);

/// H-form (lhs x >= rhs) of the convex hull of a vertex list.
struct BodyHrep {
    Mat lhs;
    Vec rhs;
};

BodyHrep body_hrep(const ConvexBody &body, const CancelToken *cancel = nullptr);

/// Set equality via mutual membership of generators.
bool cones_equal(const Cone &a, const Cone &b);

} // namespace gptk
