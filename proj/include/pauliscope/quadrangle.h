// Copyright 2026 The Pauliscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef PAULISCOPE_QUADRANGLE_H
#define PAULISCOPE_QUADRANGLE_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pauliscope/geometry.h"
#include "pauliscope/pauli_system.h"

namespace pauliscope {

/// W(2) read off the two-qubit Pauli graph: points are the 15 vertices, lines
/// the maximal cliques. Throws AxiomViolation unless the result has 15 points,
/// 15 lines of size 3, 3 lines per point, 6 collinear neighbours per point,
/// is near-linear and satisfies the GQ axiom.
PointLineGeometry w2_from_graph(const Graph &g);

enum class HyperplaneKind { PerpSet, Grid, Ovoid };
std::string to_string(HyperplaneKind kind);

struct HyperplaneClass {
    HyperplaneKind kind;
    VertexSet points;
    /// The point whose perp-set this is (perp-sets only).
    std::optional<size_t> reference;
};

/// All proper geometric hyperplanes of a W(2), by brute force over every
/// point subset. Sorted by kind (perp-set, grid, ovoid), then lexicographically.
/// Throws AxiomViolation for a hyperplane that is none of the three kinds.
std::vector<HyperplaneClass> classify_hyperplanes(const PointLineGeometry &geom);

/// All partitions of the points into lines, as sorted line-index lists.
std::vector<std::vector<size_t>> spreads(const PointLineGeometry &geom);

struct Triad {
    VertexSet points;
    VertexSet centers;
};

struct TriadCensus {
    std::vector<Triad> tricentric;
    std::vector<Triad> unicentric;
};

/// Centers of three pairwise non-collinear points: the points collinear with all three.
VertexSet triad_centers(const PointLineGeometry &geom, const VertexSet &triad);
/// Every triad of a W(2), split by center count. Throws AxiomViolation on any
/// other count.
TriadCensus classify_triads(const PointLineGeometry &geom);

enum class FactorizationMode { FanoCube, MerminBipartite, OvoidPetersen };
std::string to_string(FactorizationMode mode);
FactorizationMode parse_factorization_mode(std::string_view name);

struct NamedCheck {
    std::string name;
    bool passed = false;
};

struct Factorization {
    FactorizationMode mode;
    /// FP, BP or I.
    VertexSet first;
    /// CB, MS or PG.
    VertexSet second;
    std::vector<NamedCheck> checks;
    bool all_passed() const;
    nlohmann::json to_json(const PauliSystem &sys) const;
};

/// Splits P[2,2] three ways:
///   fano_cube:        seed = one point X (default "a"); FP = perp-set of X.
///   mermin_bipartite: seed = a tricentric triad (default {1,2,3}); BP = triad plus centers.
///   ovoid_petersen:   seed = an ovoid (default: the least maximum independent set).
/// Throws std::invalid_argument for a seed of the wrong shape.
Factorization factorize(const PauliSystem &sys, FactorizationMode mode, const std::vector<std::string> &seed = {});

struct SignedLine {
    VertexSet points;
    /// +1 or -1: the product of the three operators is sign * identity.
    int sign = 0;
    /// 0 or 1: which parallel class of the grid the line belongs to.
    int parallel_class = 0;
};

struct MerminCertificate {
    std::vector<SignedLine> lines;
    size_t negative = 0;
    size_t positive = 0;
    int overall_sign = 0;
    /// overall_sign == -1: no +-1 assignment to the nine observables can
    /// reproduce all six line products.
    bool contradiction = false;
    /// All negative lines share a parallel class.
    bool polarized = false;
};

/// Certificate for nine two-qubit operators whose commuting triples form a
/// 3x3 grid. Throws std::invalid_argument when they do not.
MerminCertificate mermin_certificate(const PauliSystem &sys, const VertexSet &nine);

/// Lines {x, y, z} of pairwise non-commuting operators with x y = +-i z inside
/// a vertex set (the Desargues lines of the Petersen complement).
PointLineGeometry product_triples(const PauliSystem &sys, const VertexSet &points, bool commuting);

/// The six grid lines of a Mermin square plus, optionally, one parallel class
/// of transversals, which completes it to a Pappus (9_3) configuration.
PointLineGeometry mermin_configuration(const PauliSystem &sys, const VertexSet &nine, bool add_transversals);

enum class BasisKind { Unentangled, Entangled, Mixed };
std::string to_string(BasisKind kind);

struct LineBasis {
    BasisKind kind = BasisKind::Mixed;
    /// Schmidt rank (1 or 2) of each of the four joint eigenvectors.
    std::vector<int> schmidt_ranks;
    /// Structural prediction: unentangled iff the line meets {1,2,3,a,b,c}.
    bool meets_local_operators = false;
};

/// Joint eigenbasis of three commuting two-qubit operators, computed exactly
/// over the Gaussian rationals, classified by Schmidt rank. Throws
/// std::invalid_argument unless the line is three pairwise commuting operators.
LineBasis line_basis_entanglement(const PauliSystem &sys, const VertexSet &line);

/// {"points", "lines", "hyperplanes": [{"kind", "points"}], "spreads"}.
nlohmann::json geometry_json(const PointLineGeometry &geom, const std::vector<HyperplaneClass> &hyperplanes,
                             const std::vector<std::vector<size_t>> &spreads);

}  // namespace pauliscope

#endif
