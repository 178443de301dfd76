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

#ifndef PAULISCOPE_GRAPH_H
#define PAULISCOPE_GRAPH_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pauliscope/vertex_set.h"

namespace pauliscope {

/// Simple undirected graph with packed adjacency rows.
///
/// Adjacency is kept symmetric and loop-free by construction. Vertex labels are
/// optional; when present there is exactly one per vertex and they are unique.
class Graph {
   public:
    Graph() = default;
    explicit Graph(size_t num_vertices);
    Graph(size_t num_vertices, std::vector<std::string> labels);

    size_t size() const {
        return rows_.size();
    }
    /// Throws std::invalid_argument on a loop and std::out_of_range on a bad index.
    void add_edge(size_t a, size_t b);
    void remove_edge(size_t a, size_t b);
    bool adjacent(size_t a, size_t b) const {
        return rows_[a].test(b);
    }
    const VertexSet &neighbors(size_t v) const {
        return rows_[v];
    }
    size_t degree(size_t v) const {
        return rows_[v].count();
    }
    size_t edge_count() const;
    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<std::pair<size_t, size_t>> edges() const;

    bool has_labels() const {
        return !labels_.empty();
    }
    const std::vector<std::string> &labels() const {
        return labels_;
    }
    /// The vertex label, or its decimal index when the graph is unlabeled.
    std::string label(size_t v) const;
    std::optional<size_t> find_label(std::string_view label) const;
    /// Looks up each label; throws std::invalid_argument on an unknown one.
    VertexSet vertex_set(std::span<const std::string> labels) const;
    VertexSet vertex_set(std::initializer_list<std::string_view> labels) const;
    VertexSet all_vertices() const {
        return VertexSet::full(size());
    }

    bool operator==(const Graph &other) const {
        return rows_ == other.rows_;
    }

   private:
    std::vector<VertexSet> rows_;
    std::vector<std::string> labels_;
};

Graph induced_subgraph(const Graph &g, const VertexSet &s);
Graph complement(const Graph &g);
/// Vertices are the edges of `g` in `edges()` order, labelled "i-j".
Graph line_graph(const Graph &g);

Graph complete_graph(size_t n);
Graph empty_graph(size_t n);
Graph cycle_graph(size_t n);
Graph complete_bipartite_graph(size_t m, size_t n);
Graph petersen_graph();
Graph hypercube_graph(size_t dimension);
/// Cartesian product K_m x K_n, i.e. the collinearity graph of an m-by-n grid.
Graph rook_graph(size_t m, size_t n);
/// k triangles sharing one common vertex (vertex 0).
Graph friendship_graph(size_t k);

/// Relabels `g` so that vertex i of the result is vertex order[i] of g.
Graph permute(const Graph &g, std::span<const size_t> order);

std::string to_dot(const Graph &g, std::string_view name = "G");
/// {"v": n, "labels": [...], "edges": [[i, j], ...]} with i < j sorted lexicographically.
nlohmann::json to_json(const Graph &g);

}  // namespace pauliscope

#endif
