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


#ifndef PAULISCOPE_RINGLINE_H
#define PAULISCOPE_RINGLINE_H

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "pauliscope/graph.h"
#include "pauliscope/quadrangle.h"

namespace pauliscope {

/// Elements of the ring of 2x2 matrices over Z2 are named 0'..15' as in
/// the usual two-qubit ring-line literature: 1' is the identity, 2' the swap,
/// 3' the all-ones matrix and so on. Entries are packed as bits
/// (a, b; c, d) -> a | b << 1 | c << 2 | d << 3.
using RingLabel = uint8_t;

uint8_t ring_matrix_bits(RingLabel label);
RingLabel ring_label_of_bits(uint8_t bits);
RingLabel ring_add(RingLabel a, RingLabel b);
RingLabel ring_mul(RingLabel a, RingLabel b);
/// "5'".
std::string ring_label_str(RingLabel label);

enum class RingKind { FullMatrix, F4, Dual, Product };
std::string to_string(RingKind kind);

/// The full matrix ring or one of its order-4 subrings:
/// F4 = {0', 1', 12', 13'}, Z2[x]/<x^2> = {0', 1', 8', 9'}, Z2 x Z2 = {0', 1', 14', 15'}.
struct Ring {
    RingKind kind;
    std::vector<RingLabel> elements;
    std::vector<RingLabel> units;
    std::vector<RingLabel> zero_divisors;
    bool contains(RingLabel x) const;
    bool is_unit(RingLabel x) const;
    /// Table entry [i][j] for elements[i], elements[j].
    std::vector<std::vector<RingLabel>> addition_table() const;
    std::vector<std::vector<RingLabel>> multiplication_table() const;
    nlohmann::json to_json() const;
};
Ring build_ring(RingKind kind);

struct RingPoint {
    RingLabel first = 0;
    RingLabel second = 0;
    bool operator==(const RingPoint &) const = default;
    std::string str() const;
};

/// The 2x2 matrix over the ring with rows (a, b) and (c, d) is invertible,
/// i.e. its 4x4 binary expansion has rank 4.
bool distant_rows(RingPoint x, RingPoint y);
/// Some (c, d) over the ring completes (a, b) to an invertible matrix.
bool admissible(const Ring &ring, RingPoint x);
/// Representative of the class {(u a, u b) : u a unit}: (1', b') when the
/// first entry can be made 1', otherwise (a', 1') when the second can,
/// otherwise the member with the least first entry whose second entry has a
/// zero first row (so (3', 14') rather than (3', 8')).
RingPoint canonical_point(const Ring &ring, RingPoint x);

struct ProjectiveLine {
    Ring ring;
    /// Ordered unit-unit, unit-zero-divisor, zero-divisor-unit,
    /// zero-divisor-zero-divisor, then by labels.
    std::vector<RingPoint> points;
    /// Edges join distinct neighbour (non-distant) points.
    Graph neighbor_graph;
    size_t index_of(RingPoint x) const;
    nlohmann::json to_json() const;
};
ProjectiveLine projective_line(const Ring &ring);

struct BpMsSplit {
    /// Points distant from both (1', 0') and (0', 1').
    VertexSet distant_both;
    /// Points neighbour to both.
    VertexSet neighbor_both;
    bool units_exactly_distant = false;
    bool zero_divisors_exactly_neighbor = false;
    bool bp_is_k33 = false;
    bool ms_is_grid = false;
    /// Every grid line of the nine points has a constant first or second coordinate.
    bool polarized = false;
    /// The neighbour graph on all fifteen is the two-qubit Pauli graph.
    bool fifteen_is_pauli_graph = false;
};
BpMsSplit bp_ms_from_reference_pair(const ProjectiveLine &full);

struct SubringHyperplane {
    RingKind ring;
    size_t points = 0;
    std::string hyperplane;
    /// Neighbour graph of the subring line versus the induced subgraph of P[2,2].
    bool isomorphic = false;
    /// Distinct subring points stay distinct on the full line.
    bool embeds = false;
};
std::vector<SubringHyperplane> subring_lines_as_hyperplanes();

struct PhaseLine {
    std::array<size_t, 3> points{};
    /// o_k o_l = i^mu o_m for the points in increasing order.
    unsigned mu = 0;
    bool isotropic = false;
};

struct Pg32Report {
    std::vector<PhaseLine> lines;
    size_t isotropic = 0;
    bool isotropic_mu_real = false;
    bool others_mu_imaginary = false;
    bool isotropic_are_w2_lines = false;
};
/// All 35 lines {x, y, x + y} of PG(3, 2) on the two-qubit operators.
Pg32Report pg32_line_phases();

}  // namespace pauliscope

#endif
