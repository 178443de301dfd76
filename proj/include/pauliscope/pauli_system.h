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

#ifndef PAULISCOPE_PAULI_SYSTEM_H
#define PAULISCOPE_PAULI_SYSTEM_H

#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "pauliscope/graph.h"
#include "pauliscope/qudit_operator.h"

namespace pauliscope {

inline constexpr size_t kDefaultVertexCap = 300;

/// The non-identity phase-free operators of n qudits in canonical label order,
/// together with their labels and commutation graph.
///
/// Canonical order reads each operator as a base-d^2 numeral over the named
/// single-qudit operators (qubits: I, X, Y, Z; qutrits: I, Z, X, Y, V, Z^2,
/// X^2, Y^2, V^2) with the first factor most significant. Labels:
///
///   two qubits:  1 2 3 a 4 5 6 b 7 8 9 c 10 11 12 (1 = I X, a = X I, 4 = X X)
///   two qutrits: k = I s_k, letters a..h = s_j I, 8(j-1)+k+8 = s_j s_k
///   otherwise:   factor names joined, e.g. "XIZ" (qubits) or "Z.X2" (qutrits)
///
/// For three qubits "a3", "b3", "c3" are accepted as aliases of XII, YII, ZII.
class PauliSystem {
   public:
    /// Throws std::invalid_argument for an unsupported dimension or arity and
    /// CapExceeded when d^(2n) - 1 exceeds `vertex_cap`.
    PauliSystem(unsigned dimension, size_t arity, size_t vertex_cap = kDefaultVertexCap);

    unsigned dimension() const {
        return dimension_;
    }
    size_t arity() const {
        return arity_;
    }
    size_t size() const {
        return operators_.size();
    }

    const QuditOperator &op(size_t index) const {
        return operators_[index];
    }
    const std::string &label(size_t index) const {
        return labels_[index];
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    /// Index of the phase-free class of a non-identity operator.
    size_t index_of(const QuditOperator &op) const;
    /// Throws std::invalid_argument for an unknown label.
    size_t index_of(std::string_view label) const;
    QuditOperator parse(std::string_view label) const;
    VertexSet vertex_set(std::initializer_list<std::string_view> labels) const;
    std::vector<std::string> labels_of(const VertexSet &s) const;

    const Graph &graph() const {
        return graph_;
    }

    /// Renders a product for the multiplication table: identity is "0" and
    /// phases prefix the label ("i3", "-12", "-i2"; qutrits "w*13", "w2*13").
    std::string format(const QuditOperator &op) const;
    /// Product of two vertices.
    QuditOperator product(size_t a, size_t b) const;

    std::string product_table_csv() const;
    std::string commutation_table_csv() const;
    /// {"d": d, "n": n, "labels": [...], "edges": [[i, j], ...]}.
    nlohmann::json adjacency_json() const;

   private:
    unsigned dimension_;
    size_t arity_;
    std::vector<QuditOperator> operators_;
    std::vector<std::string> labels_;
    std::unordered_map<std::string, size_t> by_label_;
    Graph graph_;
};

/// Convenience wrapper returning the labelled commutation graph P[d, n].
Graph build_pauli_graph(unsigned dimension, size_t arity, size_t vertex_cap = kDefaultVertexCap);

}  // namespace pauliscope

#endif
