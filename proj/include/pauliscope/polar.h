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


#ifndef PAULISCOPE_POLAR_H
#define PAULISCOPE_POLAR_H

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "pauliscope/graph.h"
#include "pauliscope/qudit_operator.h"
#include "pauliscope/spectral.h"

namespace pauliscope {

/// W_{2N-1}(2): the nonzero vectors of F_2^{2N} with the symplectic form
/// <x, y> = sum_j (x_j y'_j + z_j x'_j) mod 2.
///
/// Point i is the vector of vertex i of P[2, N]: bit 2j is the X exponent and
/// bit 2j+1 the Z exponent of qubit j (qubit 0 is the first tensor factor).
class SymplecticSpace {
   public:
    /// 1 <= rank <= 4.
    explicit SymplecticSpace(size_t rank);

    size_t rank() const {
        return rank_;
    }
    size_t size() const {
        return points_.size();
    }
    uint32_t point(size_t i) const {
        return points_[i];
    }
    size_t index_of(uint32_t vector) const {
        return index_[vector];
    }
    unsigned form(uint32_t a, uint32_t b) const;
    bool perpendicular(size_t a, size_t b) const {
        return form(points_[a], points_[b]) == 0;
    }
    /// Distinct perpendicular points joined; equals P[2, N] vertex for vertex.
    Graph collinearity_graph() const;

    static uint32_t vector_of(const QuditOperator &op);

   private:
    size_t rank_;
    std::vector<uint32_t> points_;
    std::vector<size_t> index_;
};

/// Every maximal totally isotropic subspace (nonzero vectors, as point sets),
/// built by subspace extension and sorted canonically. N <= 4.
std::vector<VertexSet> generators(size_t rank, size_t threads = 0);

struct CountingLaws {
    size_t points = 0;
    size_t spread_size = 0;
    size_t generator_size = 0;
    size_t non_perp = 0;
    /// Each value reproduced from the constructed space.
    bool verified = false;
};
CountingLaws counting_laws(size_t rank);

/// A spread of W_{2N-1}(2), the first in exact-cover search order. N <= 3.
std::vector<VertexSet> find_spread(size_t rank);
/// All spreads. N <= 2.
std::vector<std::vector<VertexSet>> enumerate_spreads(size_t rank);

/// P[2, N] with the reference triple (X, Y, Z on the first qubit, identity
/// elsewhere) removed, split into four groups by first tensor factor.
struct BlockStructure {
    size_t rank = 0;
    /// Vertices of P[2, N] in block order.
    std::vector<size_t> order;
    size_t block_size = 0;
    /// "O", "A" or "Â" for each of the 4x4 blocks.
    std::array<std::array<std::string, 4>, 4> names;
    bool diagonal_is_parent = false;
    bool first_row_is_a = false;
    bool others_are_a_hat = false;
    bool a_minus_o_is_identity = false;
    /// Reordered adjacency, one '0'/'1' string per row.
    std::vector<std::string> rows;
    bool all_passed() const {
        return diagonal_is_parent && first_row_is_a && others_are_a_hat && a_minus_o_is_identity;
    }
    /// 0/1 rows with a gap between blocks.
    std::string matrix_text() const;
    std::string grid_text() const;
    nlohmann::json to_json() const;
};
/// Throws std::invalid_argument unless 2 <= N <= 4.
BlockStructure block_structure(size_t rank);

struct NamedSpectrum {
    std::string name;
    size_t vertices = 0;
    Spectrum spectrum;
};

/// The distinguished three-qubit blocks: M3 (the 45 vertices outside the first
/// group), copies w (x) MS of the two-qubit Mermin square for w = X, Y, Z, and
/// E = I (x) MS joined with 1, 2 or 3 of the copies.
struct MerminBlocks {
    size_t m3_degree = 0;
    bool m3_regular = false;
    Spectrum m3;
    /// M3 and its complement share a spectrum (necessary for self-complementarity).
    bool m3_cospectral_with_complement = false;
    /// Each w (x) MS induces the 3x3 rook graph, as MS does.
    bool copies_are_grids = false;
    /// MS double, MS triple, E + MS, E + 2 MS, E + 3 MS.
    std::vector<NamedSpectrum> spectra;
};
MerminBlocks m3_and_mermin_blocks(size_t threads = 0);

}  // namespace pauliscope

#endif
