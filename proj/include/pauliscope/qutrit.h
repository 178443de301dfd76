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

#ifndef PAULISCOPE_QUTRIT_H
#define PAULISCOPE_QUTRIT_H

#include <array>
#include <string>
#include <vector>

#include "json.hpp"
#include "pauliscope/geometry.h"
#include "pauliscope/pauli_system.h"
#include "pauliscope/spectral.h"

namespace pauliscope {

/// The 40 maximal commuting sets of two qutrits under their usual names
/// (L1..L4, M1..M4, N1..N4, P1..P4, X1..X8, Y1..Y8, Z1..Z8), as label lists.
struct NamedLabels {
    std::string name;
    std::vector<std::string> labels;
};
const std::vector<NamedLabels> &reference_mcs_labels();

struct McsList {
    std::vector<std::string> names;
    /// Vertex sets of P[3,2], parallel to `names`.
    std::vector<VertexSet> sets;

    size_t size() const {
        return names.size();
    }
    size_t index_of(const std::string &name) const;
    nlohmann::json to_json(const PauliSystem &p9) const;
};

struct P9Analysis {
    size_t vertices = 0;
    size_t edges = 0;
    bool regular = false;
    size_t degree = 0;
    Spectrum spectrum;
    SrgCheck srg;
};

/// Throws std::invalid_argument unless `p9` is P[3,2].
P9Analysis p9_analysis(const PauliSystem &p9, size_t threads = 0);

struct McsMatch {
    /// Named list, in reference order.
    McsList list;
    size_t enumerated = 0;
    /// Every enumerated clique has eight operators.
    bool all_size_eight = false;
    /// Named sets that are not maximal cliques, e.g. "X3: 11,20,...".
    std::vector<std::string> missing;
    /// Maximal cliques absent from the named list.
    std::vector<std::string> extra;
    /// Every operator lies in exactly four sets.
    bool four_per_operator = false;
    /// Each clique plus the identity is closed under products up to phase.
    bool closed_under_products = false;

    bool matches() const {
        return missing.empty() && extra.empty() && all_size_eight && four_per_operator;
    }
};

McsMatch enumerate_mcs(const PauliSystem &p9);

struct DualGraph {
    McsList mcs;
    /// Vertices are the MCSs (labelled by name); edge iff they share an operator.
    Graph graph;
    SrgCheck srg;
    Spectrum spectrum;
    /// Lines are the four MCSs through an operator pair {p, p^2}.
    PointLineGeometry quadrangle;
    /// 40 lines of 4, 4 lines per point, GQ axiom, lines = maximal cliques of the graph.
    bool quadrangle_order_three = false;
};

/// Throws std::invalid_argument unless the named list matches the enumeration.
DualGraph dual_graph(const PauliSystem &p9, size_t threads = 0);

struct W9Hyperplanes {
    /// L, M, N, P induce the 4x4 rook graph.
    bool grid_is_rook = false;
    /// X1..X8 are pairwise disjoint.
    bool x_coclique = false;
    /// Y and Z induce the 4-cube.
    bool yz_hypercube = false;
    size_t independence_number = 0;
    /// All maximum independent sets, canonically sorted.
    std::vector<VertexSet> ovoids;
    /// Each ovoid's MCSs partition the 80 operators.
    bool ovoids_partition_operators = false;
    /// {L1, M2, N3, P4, X3, X8, Y4, Y6, Z2, Z7}.
    bool named_ovoid_independent = false;

    size_t reference = 0;
    VertexSet perp;
    std::array<VertexSet, 3> ovoids_through_reference;
    /// 1 + 12 + 27, the three ovoids are maximum independent sets meeting
    /// pairwise in the reference and covering its non-neighbours.
    bool reference_decomposition = false;
};

W9Hyperplanes w9_hyperplanes(const DualGraph &w9, size_t reference = 0);

/// The three ovoids through `reference` whose union is the reference plus
/// all its non-neighbours (first in search order); empty when none exist.
std::vector<VertexSet> ovoid_triple(const DualGraph &w9, size_t reference);

struct W9Tripartite {
    bool found = false;
    VertexSet coclique10;
    std::array<VertexSet, 2> cocliques9;
    std::vector<VertexSet> triangles;
    /// Operators common to the three MCSs of each triangle.
    std::vector<VertexSet> shared_pairs;
    /// Each triangle's MCSs meet in the same pair of operators.
    bool triangles_share_pair = false;
    /// The four pairs together form one MCS.
    bool pairs_form_mcs = false;
    bool partition = false;

    bool all_passed() const {
        return found && triangles_share_pair && pairs_form_mcs && partition;
    }
    nlohmann::json to_json(const DualGraph &w9, const PauliSystem &p9) const;
};

/// One 10-coclique, two 9-cocliques and four triangles covering W9.
W9Tripartite w9_tripartite(const DualGraph &w9, size_t reference = 0);

}  // namespace pauliscope

#endif
