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


#include "pauliscope/geometry.h"

using namespace pauliscope;

std::vector<size_t> PointLineGeometry::lines_through(size_t point) const {
    std::vector<size_t> out;
    for (size_t l = 0; l < lines.size(); l++) {
        if (lines[l].test(point)) {
            out.push_back(l);
        }
    }
    return out;
}

bool PointLineGeometry::collinear(size_t a, size_t b) const {
    if (a == b) {
        return false;
    }
    for (const auto &l : lines) {
        if (l.test(a) && l.test(b)) {
            return true;
        }
    }
    return false;
}

bool PointLineGeometry::is_near_linear() const {
    for (size_t i = 0; i < lines.size(); i++) {
        for (size_t j = i + 1; j < lines.size(); j++) {
            if (lines[i].intersection_count(lines[j]) > 1) {
                return false;
            }
        }
    }
    return true;
}

bool PointLineGeometry::satisfies_gq_axiom() const {
    for (const auto &line : lines) {
        for (size_t p = 0; p < points.size(); p++) {
            if (line.test(p)) {
                continue;
            }
            size_t seen = 0;
            line.for_each([&](size_t q) { seen += collinear(p, q) ? 1 : 0; });
            if (seen != 1) {
                return false;
            }
        }
    }
    return true;
}

Graph PointLineGeometry::collinearity_graph() const {
    Graph g(points.size(), points);
    for (const auto &l : lines) {
        auto m = l.members();
        for (size_t i = 0; i < m.size(); i++) {
            for (size_t j = i + 1; j < m.size(); j++) {
                if (!g.adjacent(m[i], m[j])) {
                    g.add_edge(m[i], m[j]);
                }
            }
        }
    }
    return g;
}

bool PointLineGeometry::is_hyperplane(const VertexSet &s) const {
    for (const auto &l : lines) {
        size_t k = l.intersection_count(s);
        if (k != 1 && k != l.count()) {
            return false;
        }
    }
    return true;
}

nlohmann::json PointLineGeometry::to_json() const {
    nlohmann::json ls = nlohmann::json::array();
    for (const auto &l : lines) {
        nlohmann::json row = nlohmann::json::array();
        l.for_each([&](size_t p) { row.push_back(points[p]); });
        ls.push_back(row);
    }
    return {{"points", points}, {"lines", ls}};
}

bool pauliscope::verify_configuration(const PointLineGeometry &geom, size_t v, size_t e, size_t a, size_t b) {
    if (geom.num_points() != v || geom.num_lines() != e) {
        return false;
    }
    for (const auto &l : geom.lines) {
        if (l.count() != b) {
            return false;
        }
    }
    for (size_t p = 0; p < v; p++) {
        if (geom.lines_through(p).size() != a) {
            return false;
        }
    }
    return geom.is_near_linear();
}

PointLineGeometry pauliscope::fano_plane() {
    PointLineGeometry g;
    for (int i = 1; i <= 7; i++) {
        g.points.push_back(std::to_string(i));
    }
    // Lines {i, i+1, i+3} mod 7.
    for (size_t i = 0; i < 7; i++) {
        g.lines.push_back(VertexSet(7, {i, (i + 1) % 7, (i + 3) % 7}));
    }
    return g;
}

PointLineGeometry pauliscope::desargues_configuration() {
    PointLineGeometry g;
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < 5; i++) {
        for (size_t j = i + 1; j < 5; j++) {
            pairs.emplace_back(i, j);
            g.points.push_back(std::to_string(i) + std::to_string(j));
        }
    }
    for (size_t i = 0; i < 5; i++) {
        for (size_t j = i + 1; j < 5; j++) {
            for (size_t k = j + 1; k < 5; k++) {
                VertexSet line(10);
                for (size_t p = 0; p < 10; p++) {
                    auto [x, y] = pairs[p];
                    bool in = (x == i || x == j || x == k) && (y == i || y == j || y == k);
                    if (in) {
                        line.set(p);
                    }
                }
                g.lines.push_back(line);
            }
        }
    }
    return g;
}

PointLineGeometry pauliscope::pappus_configuration() {
    PointLineGeometry g;
    for (size_t x = 0; x < 3; x++) {
        for (size_t y = 0; y < 3; y++) {
            g.points.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    }
    // Directions (0,1), (1,1), (1,2); the class of direction (1,0) is dropped.
    for (auto [dx, dy] : {std::pair<size_t, size_t>{0, 1}, {1, 1}, {1, 2}}) {
        for (size_t start = 0; start < 9; start++) {
            VertexSet line(9);
            for (size_t k = 0; k < 3; k++) {
                size_t x = (start / 3 + k * dx) % 3, y = (start % 3 + k * dy) % 3;
                line.set(x * 3 + y);
            }
            g.lines.push_back(line);
        }
    }
    canonical_sort(g.lines);
    return g;
}

Graph pauliscope::levi_graph(const PointLineGeometry &geom) {
    size_t np = geom.num_points();
    Graph g(np + geom.num_lines());
    for (size_t l = 0; l < geom.num_lines(); l++) {
        geom.lines[l].for_each([&](size_t p) { g.add_edge(p, np + l); });
    }
    return g;
}
