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

#ifndef PAULISCOPE_GRAPH_SEARCH_H
#define PAULISCOPE_GRAPH_SEARCH_H

#include <optional>
#include <stdexcept>
#include <vector>

#include "pauliscope/graph.h"

namespace pauliscope {

/// Thrown when an exact search is asked to run on a graph above its vertex cap.
/// Searches never fall back to heuristics.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr size_t kChromaticVertexCap = 64;
inline constexpr size_t kIndependentSetVertexCap = 128;
inline constexpr size_t kIsomorphismVertexCap = 300;

struct GraphInvariants {
    size_t vertices = 0;
    size_t edges = 0;
    std::vector<size_t> degrees;
    bool regular = false;
    /// Empty for forests.
    std::optional<size_t> girth;
    /// Empty for disconnected graphs.
    std::optional<size_t> diameter;
    bool connected = false;
};

GraphInvariants invariants(const Graph &g);
std::optional<size_t> girth(const Graph &g);

/// Exact chromatic number via DSATUR branch and bound.
size_t chromatic_number(const Graph &g, size_t cap = kChromaticVertexCap);

/// A largest clique (the first one found in index order).
VertexSet maximum_clique(const Graph &g);

struct IndependentSets {
    size_t size = 0;
    /// One witness (the lexicographically least) or all of them, canonically sorted.
    std::vector<VertexSet> witnesses;
};

IndependentSets max_independent_sets(const Graph &g, bool enumerate_all, size_t cap = kIndependentSetVertexCap);

/// Every independent set of the given size that contains `required`.
std::vector<VertexSet> independent_sets_of_size(const Graph &g, size_t size, const VertexSet &required);

struct VertexCover {
    VertexSet cover;
    Graph induced;
};

/// The complement of the lexicographically least maximum independent set.
VertexCover min_vertex_cover(const Graph &g, size_t cap = kIndependentSetVertexCap);

/// All maximal cliques (Bron-Kerbosch with pivoting), canonically sorted.
std::vector<VertexSet> maximal_cliques(const Graph &g);

/// A vertex map f with g.adjacent(u, v) == h.adjacent(f[u], f[v]) for all u, v.
std::optional<std::vector<size_t>> find_isomorphism(const Graph &g, const Graph &h);
bool is_isomorphic(const Graph &g, const Graph &h);
bool is_isomorphism(const Graph &g, const Graph &h, const std::vector<size_t> &map);

bool is_independent(const Graph &g, const VertexSet &s);
bool is_clique(const Graph &g, const VertexSet &s);

}  // namespace pauliscope

#endif
