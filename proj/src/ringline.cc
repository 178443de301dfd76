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


#include "pauliscope/ringline.h"

#include <algorithm>
#include <stdexcept>

#include "pauliscope/graph_search.h"
#include "pauliscope/pauli_system.h"
#include "pauliscope/polar.h"

using namespace pauliscope;

namespace {

// Matrix bits of 0'..15'.
constexpr std::array<uint8_t, 16> kBits{0, 9, 6, 15, 12, 5, 10, 3, 2, 11, 4, 13, 14, 7, 8, 1};

int entry(uint8_t m, int r, int c) {
    return (m >> (2 * r + c)) & 1;
}

uint8_t mul_bits(uint8_t x, uint8_t y) {
    uint8_t out = 0;
    for (int r = 0; r < 2; r++) {
        for (int c = 0; c < 2; c++) {
            int v = (entry(x, r, 0) & entry(y, 0, c)) ^ (entry(x, r, 1) & entry(y, 1, c));
            out |= static_cast<uint8_t>(v << (2 * r + c));
        }
    }
    return out;
}

// Rank over GF(2) of up to 4 rows of 4 bits.
int rank4(std::array<uint8_t, 4> rows) {
    int rank = 0;
    for (int bit = 0; bit < 4; bit++) {
        int piv = -1;
        for (int r = rank; r < 4; r++) {
            if (rows[r] >> bit & 1) {
                piv = r;
                break;
            }
        }
        if (piv < 0) {
            continue;
        }
        std::swap(rows[piv], rows[rank]);
        for (int r = 0; r < 4; r++) {
            if (r != rank && (rows[r] >> bit & 1)) {
                rows[r] ^= rows[rank];
            }
        }
        rank++;
    }
    return rank;
}

// Binary row i (0 or 1) of the 2x4 matrix [A | B].
uint8_t wide_row(RingLabel a, RingLabel b, int i) {
    uint8_t ma = kBits[a], mb = kBits[b];
    return static_cast<uint8_t>(entry(ma, i, 0) | entry(ma, i, 1) << 1 | entry(mb, i, 0) << 2 | entry(mb, i, 1) << 3);
}

int category(const Ring &ring, RingPoint p) {
    bool u1 = ring.is_unit(p.first), u2 = ring.is_unit(p.second);
    return u1 && u2 ? 0 : u1 ? 1 : u2 ? 2 : 3;
}

}  // namespace

uint8_t pauliscope::ring_matrix_bits(RingLabel label) {
    return kBits.at(label);
}

RingLabel pauliscope::ring_label_of_bits(uint8_t bits) {
    auto it = std::find(kBits.begin(), kBits.end(), bits);
    if (it == kBits.end()) {
        throw std::invalid_argument("not a 2x2 binary matrix");
    }
    return static_cast<RingLabel>(it - kBits.begin());
}

RingLabel pauliscope::ring_add(RingLabel a, RingLabel b) {
    return ring_label_of_bits(kBits.at(a) ^ kBits.at(b));
}

RingLabel pauliscope::ring_mul(RingLabel a, RingLabel b) {
    return ring_label_of_bits(mul_bits(kBits.at(a), kBits.at(b)));
}

std::string pauliscope::ring_label_str(RingLabel label) {
    return std::to_string(label) + "'";
}

std::string pauliscope::to_string(RingKind kind) {
    switch (kind) {
        case RingKind::FullMatrix:
            return "M2(Z2)";
        case RingKind::F4:
            return "F4";
        case RingKind::Dual:
            return "Z2[x]/<x^2>";
        case RingKind::Product:
            return "Z2xZ2";
    }
    return "?";
}

bool Ring::contains(RingLabel x) const {
    return std::find(elements.begin(), elements.end(), x) != elements.end();
}

bool Ring::is_unit(RingLabel x) const {
    return std::find(units.begin(), units.end(), x) != units.end();
}

std::vector<std::vector<RingLabel>> Ring::addition_table() const {
    std::vector<std::vector<RingLabel>> t;
    for (auto a : elements) {
        std::vector<RingLabel> row;
        for (auto b : elements) {
            row.push_back(ring_add(a, b));
        }
        t.push_back(row);
    }
    return t;
}

std::vector<std::vector<RingLabel>> Ring::multiplication_table() const {
    std::vector<std::vector<RingLabel>> t;
    for (auto a : elements) {
        std::vector<RingLabel> row;
        for (auto b : elements) {
            row.push_back(ring_mul(a, b));
        }
        t.push_back(row);
    }
    return t;
}

nlohmann::json Ring::to_json() const {
    auto names = [](const std::vector<RingLabel> &v) {
        std::vector<std::string> out;
        for (auto x : v) {
            out.push_back(ring_label_str(x));
        }
        return out;
    };
    auto table = [&](const std::vector<std::vector<RingLabel>> &t) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto &row : t) {
            out.push_back(names(row));
        }
        return out;
    };
    return {{"ring", to_string(kind)},
            {"elements", names(elements)},
            {"units", names(units)},
            {"zero_divisors", names(zero_divisors)},
            {"addition", table(addition_table())},
            {"multiplication", table(multiplication_table())}};
}

Ring pauliscope::build_ring(RingKind kind) {
    Ring r{kind, {}, {}, {}};
    switch (kind) {
        case RingKind::FullMatrix:
            for (RingLabel x = 0; x < 16; x++) {
                r.elements.push_back(x);
            }
            break;
        case RingKind::F4:
            r.elements = {0, 1, 12, 13};
            break;
        case RingKind::Dual:
            r.elements = {0, 1, 8, 9};
            break;
        case RingKind::Product:
            r.elements = {0, 1, 14, 15};
            break;
    }
    for (auto x : r.elements) {
        bool unit = std::any_of(r.elements.begin(), r.elements.end(), [&](RingLabel y) { return ring_mul(x, y) == 1 && ring_mul(y, x) == 1; });
        (unit ? r.units : r.zero_divisors).push_back(x);
    }
    return r;
}

std::string RingPoint::str() const {
    return "(" + ring_label_str(first) + "," + ring_label_str(second) + ")";
}

bool pauliscope::distant_rows(RingPoint x, RingPoint y) {
    return rank4({wide_row(x.first, x.second, 0), wide_row(x.first, x.second, 1), wide_row(y.first, y.second, 0),
                  wide_row(y.first, y.second, 1)}) == 4;
}

bool pauliscope::admissible(const Ring &ring, RingPoint x) {
    for (auto c : ring.elements) {
        for (auto d : ring.elements) {
            if (distant_rows(x, {c, d})) {
                return true;
            }
        }
    }
    return false;
}

RingPoint pauliscope::canonical_point(const Ring &ring, RingPoint x) {
    std::vector<RingPoint> orbit;
    for (auto u : ring.units) {
        orbit.push_back({ring_mul(u, x.first), ring_mul(u, x.second)});
    }
    auto lex = [](RingPoint a, RingPoint b) { return std::pair(a.first, a.second) < std::pair(b.first, b.second); };
    std::sort(orbit.begin(), orbit.end(), lex);
    for (const auto &p : orbit) {
        if (p.first == 1) {
            return p;
        }
    }
    for (const auto &p : orbit) {
        if (p.second == 1) {
            return p;
        }
    }
    // Both entries zero-divisors: least first entry, then a second entry
    // whose first row vanishes.
    auto top_row = [](RingLabel x) { return (kBits[x] & 3) != 0; };
    return *std::min_element(orbit.begin(), orbit.end(), [&](RingPoint a, RingPoint b) {
        return std::tuple(a.first, top_row(a.second), a.second) < std::tuple(b.first, top_row(b.second), b.second);
    });
}

size_t ProjectiveLine::index_of(RingPoint x) const {
    RingPoint c = canonical_point(ring, x);
    auto it = std::find(points.begin(), points.end(), c);
    if (it == points.end()) {
        throw std::invalid_argument("pair " + x.str() + " is not a point of the line");
    }
    return static_cast<size_t>(it - points.begin());
}

nlohmann::json ProjectiveLine::to_json() const {
    std::vector<std::string> names;
    for (const auto &p : points) {
        names.push_back(p.str());
    }
    nlohmann::json edges = nlohmann::json::array();
    for (auto [a, b] : neighbor_graph.edges()) {
        edges.push_back({a, b});
    }
    return {{"ring", to_string(ring.kind)}, {"points", names}, {"neighbor_edges", edges}};
}

ProjectiveLine pauliscope::projective_line(const Ring &ring) {
    ProjectiveLine line{ring, {}, {}};
    for (auto a : ring.elements) {
        for (auto b : ring.elements) {
            RingPoint p{a, b};
            if (!admissible(ring, p)) {
                continue;
            }
            RingPoint c = canonical_point(ring, p);
            if (std::find(line.points.begin(), line.points.end(), c) == line.points.end()) {
                line.points.push_back(c);
            }
        }
    }
    std::sort(line.points.begin(), line.points.end(), [&](RingPoint x, RingPoint y) {
        return std::tuple(category(ring, x), x.first, x.second) < std::tuple(category(ring, y), y.first, y.second);
    });
    std::vector<std::string> labels;
    for (const auto &p : line.points) {
        labels.push_back(p.str());
    }
    line.neighbor_graph = Graph(line.points.size(), labels);
    for (size_t i = 0; i < line.points.size(); i++) {
        for (size_t j = i + 1; j < line.points.size(); j++) {
            if (!distant_rows(line.points[i], line.points[j])) {
                line.neighbor_graph.add_edge(i, j);
            }
        }
    }
    return line;
}

BpMsSplit pauliscope::bp_ms_from_reference_pair(const ProjectiveLine &full) {
    if (full.ring.kind != RingKind::FullMatrix) {
        throw std::invalid_argument("the reference pair lives on the line over M2(Z2)");
    }
    RingPoint u0{1, 0}, v0{0, 1};
    size_t n = full.points.size();
    BpMsSplit out{VertexSet(n), VertexSet(n)};
    out.units_exactly_distant = out.zero_divisors_exactly_neighbor = true;
    for (size_t i = 0; i < n; i++) {
        RingPoint p = full.points[i];
        bool du = distant_rows(p, u0), dv = distant_rows(p, v0);
        if (du && dv) {
            out.distant_both.set(i);
        }
        if (!du && !dv) {
            out.neighbor_both.set(i);
        }
        bool both_units = full.ring.is_unit(p.first) && full.ring.is_unit(p.second);
        bool both_zero = !full.ring.is_unit(p.first) && !full.ring.is_unit(p.second);
        out.units_exactly_distant = out.units_exactly_distant && (both_units == (du && dv));
        out.zero_divisors_exactly_neighbor = out.zero_divisors_exactly_neighbor && (both_zero == (!du && !dv));
    }
    const Graph &g = full.neighbor_graph;
    out.bp_is_k33 = is_isomorphic(induced_subgraph(g, out.distant_both), complete_bipartite_graph(3, 3));
    Graph ms = induced_subgraph(g, out.neighbor_both);
    out.ms_is_grid = is_isomorphic(ms, rook_graph(3, 3));

    // Grid lines are the triangles of the nine-point neighbour graph.
    auto m = out.neighbor_both.members();
    size_t rows = 0, columns = 0, lines = 0;
    for (size_t i = 0; i < m.size(); i++) {
        for (size_t j = i + 1; j < m.size(); j++) {
            for (size_t k = j + 1; k < m.size(); k++) {
                if (!(g.adjacent(m[i], m[j]) && g.adjacent(m[i], m[k]) && g.adjacent(m[j], m[k]))) {
                    continue;
                }
                lines++;
                RingPoint a = full.points[m[i]], b = full.points[m[j]], c = full.points[m[k]];
                columns += (a.first == b.first && b.first == c.first) ? 1 : 0;
                rows += (a.second == b.second && b.second == c.second) ? 1 : 0;
            }
        }
    }
    out.polarized = lines == 6 && rows == 3 && columns == 3;

    PauliSystem sys(2, 2);
    out.fifteen_is_pauli_graph = is_isomorphic(induced_subgraph(g, out.distant_both | out.neighbor_both), sys.graph());
    return out;
}

std::vector<SubringHyperplane> pauliscope::subring_lines_as_hyperplanes() {
    PauliSystem sys(2, 2);
    ProjectiveLine full = projective_line(build_ring(RingKind::FullMatrix));
    struct Target {
        RingKind kind;
        std::string name;
        VertexSet set;
    };
    std::vector<Target> targets{
        {RingKind::F4, "ovoid", max_independent_sets(sys.graph(), false).witnesses.front()},
        {RingKind::Dual, "perp-set minus reference", sys.vertex_set({"1", "2", "3", "4", "5", "6"})},
        {RingKind::Product, "grid", sys.vertex_set({"4", "5", "6", "7", "8", "9", "10", "11", "12"})},
    };
    std::vector<SubringHyperplane> out;
    for (const auto &t : targets) {
        ProjectiveLine line = projective_line(build_ring(t.kind));
        SubringHyperplane h{t.kind, line.points.size(), t.name};
        h.isomorphic = is_isomorphic(line.neighbor_graph, induced_subgraph(sys.graph(), t.set));
        std::vector<size_t> images;
        for (const auto &p : line.points) {
            images.push_back(full.index_of(p));
        }
        std::sort(images.begin(), images.end());
        h.embeds = std::adjacent_find(images.begin(), images.end()) == images.end();
        out.push_back(h);
    }
    return out;
}

Pg32Report pauliscope::pg32_line_phases() {
    SymplecticSpace space(2);
    PauliSystem sys(2, 2);
    Pg32Report out;
    std::vector<VertexSet> iso_lines;
    for (size_t x = 0; x < 15; x++) {
        for (size_t y = x + 1; y < 15; y++) {
            size_t z = space.index_of(space.point(x) ^ space.point(y));
            if (z < y) {
                continue;
            }
            QuditOperator prod = sys.product(x, y);
            PhaseLine l{{x, y, z}, prod.phase(), space.perpendicular(x, y)};
            out.lines.push_back(l);
            if (l.isotropic) {
                iso_lines.push_back(VertexSet(15, {x, y, z}));
            }
        }
    }
    out.isotropic = iso_lines.size();
    out.isotropic_mu_real = out.others_mu_imaginary = true;
    for (const auto &l : out.lines) {
        if (l.isotropic) {
            out.isotropic_mu_real = out.isotropic_mu_real && l.mu % 2 == 0;
        } else {
            out.others_mu_imaginary = out.others_mu_imaginary && l.mu % 2 == 1;
        }
    }
    auto w2 = maximal_cliques(sys.graph());
    canonical_sort(iso_lines);
    canonical_sort(w2);
    out.isotropic_are_w2_lines = iso_lines == w2;
    return out;
}
