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

#include "pauliscope/graph.h"

#include <set>
#include <sstream>
#include <stdexcept>

using namespace pauliscope;

Graph::Graph(size_t num_vertices) : rows_(num_vertices, VertexSet(num_vertices)) {
}

Graph::Graph(size_t num_vertices, std::vector<std::string> labels) : Graph(num_vertices) {
    if (!labels.empty()) {
        if (labels.size() != num_vertices) {
            throw std::invalid_argument("label count does not match vertex count");
        }
        std::set<std::string_view> seen(labels.begin(), labels.end());
        if (seen.size() != labels.size()) {
            throw std::invalid_argument("duplicate vertex label");
        }
    }
    labels_ = std::move(labels);
}

void Graph::add_edge(size_t a, size_t b) {
    if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
    }
    if (a >= size() || b >= size()) {
        throw std::out_of_range("edge endpoint out of range");
    }
    rows_[a].set(b);
    rows_[b].set(a);
}

void Graph::remove_edge(size_t a, size_t b) {
    rows_[a].reset(b);
    rows_[b].reset(a);
}

size_t Graph::edge_count() const {
    size_t twice = 0;
    for (const auto &row : rows_) {
        twice += row.count();
    }
    return twice / 2;
}

std::vector<std::pair<size_t, size_t>> Graph::edges() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t a = 0; a < size(); a++) {
        for (size_t b = rows_[a].next(a); b != VertexSet::npos; b = rows_[a].next(b)) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

std::string Graph::label(size_t v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<size_t> Graph::find_label(std::string_view label) const {
    for (size_t v = 0; v < labels_.size(); v++) {
        if (labels_[v] == label) {
            return v;
        }
    }
    return std::nullopt;
}

VertexSet Graph::vertex_set(std::span<const std::string> labels) const {
    VertexSet out(size());
    for (const auto &l : labels) {
        auto v = find_label(l);
        if (!v) {
            throw std::invalid_argument("unknown vertex label '" + l + "'");
        }
        out.set(*v);
    }
    return out;
}

VertexSet Graph::vertex_set(std::initializer_list<std::string_view> labels) const {
    std::vector<std::string> owned(labels.begin(), labels.end());
    return vertex_set(std::span<const std::string>(owned));
}

Graph pauliscope::induced_subgraph(const Graph &g, const VertexSet &s) {
    if (s.universe() != g.size()) {
        throw std::out_of_range("vertex set universe does not match graph size");
    }
    std::vector<size_t> keep = s.members();
    return permute(g, keep);
}

Graph pauliscope::permute(const Graph &g, std::span<const size_t> order) {
    std::vector<std::string> labels;
    if (g.has_labels()) {
        for (size_t v : order) {
            labels.push_back(g.labels()[v]);
        }
    }
    Graph out(order.size(), std::move(labels));
    for (size_t i = 0; i < order.size(); i++) {
        if (order[i] >= g.size()) {
            throw std::out_of_range("vertex " + std::to_string(order[i]) + " out of range");
        }
        for (size_t j = i + 1; j < order.size(); j++) {
            if (g.adjacent(order[i], order[j])) {
                out.add_edge(i, j);
            }
        }
    }
    return out;
}

Graph pauliscope::complement(const Graph &g) {
    Graph out(g.size(), g.labels());
    for (size_t a = 0; a < g.size(); a++) {
        for (size_t b = a + 1; b < g.size(); b++) {
            if (!g.adjacent(a, b)) {
                out.add_edge(a, b);
            }
        }
    }
    return out;
}

Graph pauliscope::line_graph(const Graph &g) {
    auto es = g.edges();
    std::vector<std::string> labels;
    for (auto [a, b] : es) {
        labels.push_back(g.label(a) + "-" + g.label(b));
    }
    Graph out(es.size(), std::move(labels));
    for (size_t i = 0; i < es.size(); i++) {
        for (size_t j = i + 1; j < es.size(); j++) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) {
                out.add_edge(i, j);
            }
        }
    }
    return out;
}

Graph pauliscope::complete_graph(size_t n) {
    return complement(Graph(n));
}

Graph pauliscope::empty_graph(size_t n) {
    return Graph(n);
}

Graph pauliscope::cycle_graph(size_t n) {
    Graph g(n);
    for (size_t k = 0; k < n; k++) {
        g.add_edge(k, (k + 1) % n);
    }
    return g;
}

Graph pauliscope::complete_bipartite_graph(size_t m, size_t n) {
    Graph g(m + n);
    for (size_t a = 0; a < m; a++) {
        for (size_t b = 0; b < n; b++) {
            g.add_edge(a, m + b);
        }
    }
    return g;
}

Graph pauliscope::petersen_graph() {
    Graph g(10);
    for (size_t k = 0; k < 5; k++) {
        g.add_edge(k, (k + 1) % 5);
        g.add_edge(k, k + 5);
        g.add_edge(5 + k, 5 + (k + 2) % 5);
    }
    return g;
}

Graph pauliscope::hypercube_graph(size_t dimension) {
    size_t n = size_t{1} << dimension;
    Graph g(n);
    for (size_t v = 0; v < n; v++) {
        for (size_t bit = 0; bit < dimension; bit++) {
            size_t u = v ^ (size_t{1} << bit);
            if (v < u) {
                g.add_edge(v, u);
            }
        }
    }
    return g;
}

Graph pauliscope::rook_graph(size_t m, size_t n) {
    Graph g(m * n);
    for (size_t a = 0; a < m * n; a++) {
        for (size_t b = a + 1; b < m * n; b++) {
            if (a / n == b / n || a % n == b % n) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

Graph pauliscope::friendship_graph(size_t k) {
    Graph g(2 * k + 1);
    for (size_t t = 0; t < k; t++) {
        g.add_edge(0, 2 * t + 1);
        g.add_edge(0, 2 * t + 2);
        g.add_edge(2 * t + 1, 2 * t + 2);
    }
    return g;
}

static std::string dot_quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + "\"";
}

std::string pauliscope::to_dot(const Graph &g, std::string_view name) {
    std::ostringstream out;
    out << "graph " << dot_quote(std::string(name)) << " {\n";
    for (size_t v = 0; v < g.size(); v++) {
        out << "  " << v << " [label=" << dot_quote(g.label(v)) << "];\n";
    }
    for (auto [a, b] : g.edges()) {
        out << "  " << a << " -- " << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

nlohmann::json pauliscope::to_json(const Graph &g) {
    nlohmann::json labels = nlohmann::json::array();
    for (size_t v = 0; v < g.size(); v++) {
        labels.push_back(g.label(v));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : g.edges()) {
        edges.push_back({a, b});
    }
    return {{"v", g.size()}, {"labels", labels}, {"edges", edges}};
}
