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

#include "pauliscope/qutrit.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pauliscope/exact_cover.h"
#include "pauliscope/graph_search.h"

using namespace pauliscope;

namespace {

// Houses L, M, N, P contain a letter a..d each; X, Y, Z have no local operators.
const char *const kMcsText = R"(L1 1,5,a,9,13,e,41,45
L2 2,6,a,10,14,e,42,46
L3 3,7,a,11,15,e,43,47
L4 4,8,a,12,16,e,44,48
M1 1,5,b,17,21,f,49,53
M2 2,6,b,18,22,f,50,54
M3 3,7,b,19,23,f,51,55
M4 4,8,b,20,24,f,52,56
N1 1,5,c,25,29,g,57,61
N2 2,6,c,26,30,g,58,62
N3 3,7,c,27,31,g,59,63
N4 4,8,c,28,32,g,60,64
P1 1,5,d,33,37,h,65,69
P2 2,6,d,34,38,h,66,70
P3 3,7,d,35,39,h,67,71
P4 4,8,d,36,40,h,68,72
X1 9,22,32,39,45,50,60,67
X2 10,17,27,40,46,53,63,68
X3 11,20,30,33,47,56,58,69
X4 12,23,25,34,48,51,61,70
X5 13,18,28,35,41,54,64,71
X6 14,21,31,36,42,49,59,72
X7 15,24,26,37,43,52,62,65
X8 16,19,29,38,44,55,57,66
Y1 9,23,30,40,45,51,58,68
Y2 10,19,32,33,46,55,60,69
Y3 11,22,25,36,47,50,61,72
Y4 12,17,26,39,48,53,62,67
Y5 13,20,27,34,41,56,63,70
Y6 14,23,28,37,42,51,64,65
Y7 15,18,29,40,43,54,57,68
Y8 16,21,30,35,44,49,58,71
Z1 9,24,31,38,45,52,59,66
Z2 10,24,25,35,46,52,61,71
Z3 11,17,28,38,47,53,64,66
Z4 12,18,31,33,48,54,59,69
Z5 13,19,26,36,41,55,62,72
Z6 14,20,29,39,42,56,57,67
Z7 15,21,32,34,43,49,60,70
Z8 16,22,27,37,44,50,63,65)";

void require_p9(const PauliSystem &p9) {
    if (p9.dimension() != 3 || p9.arity() != 2) {
        throw std::invalid_argument("expected the two-qutrit system P[3,2]");
    }
}

std::string describe(const PauliSystem &p9, const VertexSet &s) {
    std::string out;
    for (const auto &l : p9.labels_of(s)) {
        out += (out.empty() ? "" : ",") + l;
    }
    return out;
}

McsList named_list(const PauliSystem &p9) {
    McsList list;
    for (const auto &[name, labels] : reference_mcs_labels()) {
        VertexSet s(p9.size());
        for (const auto &l : labels) {
            s.set(p9.index_of(l));
        }
        list.names.push_back(name);
        list.sets.push_back(s);
    }
    return list;
}

bool closed_up_to_phase(const PauliSystem &p9, const VertexSet &s) {
    auto members = s.members();
    for (size_t a : members) {
        for (size_t b : members) {
            QuditOperator prod = p9.product(a, b);
            if (!prod.is_identity() && !s.test(p9.index_of(prod))) {
                return false;
            }
        }
    }
    return true;
}

VertexSet by_house(const McsList &list, const std::string &houses) {
    VertexSet out(list.size());
    for (size_t i = 0; i < list.size(); i++) {
        if (houses.find(list.names[i][0]) != std::string::npos) {
            out.set(i);
        }
    }
    return out;
}

}  // namespace

const std::vector<NamedLabels> &pauliscope::reference_mcs_labels() {
    static const std::vector<NamedLabels> list = [] {
        std::vector<NamedLabels> out;
        std::istringstream in(kMcsText);
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream fields(line);
            NamedLabels entry;
            std::string csv;
            fields >> entry.name >> csv;
            std::istringstream items(csv);
            std::string item;
            while (std::getline(items, item, ',')) {
                entry.labels.push_back(item);
            }
            out.push_back(std::move(entry));
        }
        return out;
    }();
    return list;
}

size_t McsList::index_of(const std::string &name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
        throw std::invalid_argument("unknown MCS name '" + name + "'");
    }
    return static_cast<size_t>(it - names.begin());
}

nlohmann::json McsList::to_json(const PauliSystem &p9) const {
    nlohmann::json out = nlohmann::json::array();
    for (size_t i = 0; i < size(); i++) {
        out.push_back({{"name", names[i]}, {"operators", p9.labels_of(sets[i])}});
    }
    return out;
}

P9Analysis pauliscope::p9_analysis(const PauliSystem &p9, size_t threads) {
    require_p9(p9);
    const Graph &g = p9.graph();
    P9Analysis out;
    out.vertices = g.size();
    out.edges = g.edge_count();
    out.degree = g.degree(0);
    out.regular = true;
    for (size_t v = 0; v < g.size(); v++) {
        out.regular = out.regular && g.degree(v) == out.degree;
    }
    out.spectrum = spectrum(g, threads);
    out.srg = verify_srg(g);
    return out;
}

McsMatch pauliscope::enumerate_mcs(const PauliSystem &p9) {
    require_p9(p9);
    McsMatch out;
    out.list = named_list(p9);
    auto cliques = maximal_cliques(p9.graph());
    out.enumerated = cliques.size();

    out.all_size_eight = true;
    out.closed_under_products = true;
    for (const auto &c : cliques) {
        out.all_size_eight = out.all_size_eight && c.count() == 8;
        out.closed_under_products = out.closed_under_products && closed_up_to_phase(p9, c);
    }

    for (size_t i = 0; i < out.list.size(); i++) {
        if (std::find(cliques.begin(), cliques.end(), out.list.sets[i]) == cliques.end()) {
            out.missing.push_back(out.list.names[i] + ": " + describe(p9, out.list.sets[i]));
        }
    }
    for (const auto &c : cliques) {
        if (std::find(out.list.sets.begin(), out.list.sets.end(), c) == out.list.sets.end()) {
            out.extra.push_back(describe(p9, c));
        }
    }

    std::vector<size_t> incidences(p9.size(), 0);
    for (const auto &s : out.list.sets) {
        s.for_each([&](size_t v) { incidences[v]++; });
    }
    out.four_per_operator = std::all_of(incidences.begin(), incidences.end(), [](size_t k) { return k == 4; });
    return out;
}

DualGraph pauliscope::dual_graph(const PauliSystem &p9, size_t threads) {
    McsMatch match = enumerate_mcs(p9);
    if (!match.matches()) {
        throw std::invalid_argument("named MCS list disagrees with the maximal cliques of P[3,2]");
    }
    DualGraph out;
    out.mcs = match.list;
    size_t n = out.mcs.size();
    out.graph = Graph(n, out.mcs.names);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (out.mcs.sets[a].intersects(out.mcs.sets[b])) {
                out.graph.add_edge(a, b);
            }
        }
    }
    out.srg = verify_srg(out.graph);
    out.spectrum = spectrum(out.graph, threads);

    // An operator and its square lie in the same four MCSs; those four form a line.
    out.quadrangle.points = out.mcs.names;
    std::set<std::vector<size_t>> seen;
    for (size_t v = 0; v < p9.size(); v++) {
        std::vector<size_t> through;
        for (size_t i = 0; i < n; i++) {
            if (out.mcs.sets[i].test(v)) {
                through.push_back(i);
            }
        }
        if (seen.insert(through).second) {
            out.quadrangle.lines.emplace_back(n, through);
        }
    }
    canonical_sort(out.quadrangle.lines);

    bool ok = out.quadrangle.num_lines() == 40;
    for (const auto &line : out.quadrangle.lines) {
        ok = ok && line.count() == 4;
    }
    for (size_t p = 0; p < n; p++) {
        ok = ok && out.quadrangle.lines_through(p).size() == 4;
    }
    ok = ok && out.quadrangle.is_near_linear() && out.quadrangle.satisfies_gq_axiom();
    auto cliques = maximal_cliques(out.graph);
    canonical_sort(cliques);
    out.quadrangle_order_three = ok && cliques == out.quadrangle.lines;
    return out;
}

std::vector<VertexSet> pauliscope::ovoid_triple(const DualGraph &w9, size_t reference) {
    const Graph &g = w9.graph;
    size_t n = g.size();
    VertexSet far = g.neighbors(reference).complement();
    far.reset(reference);

    std::vector<size_t> columns = far.members();
    std::vector<size_t> column_of(n, 0);
    for (size_t i = 0; i < columns.size(); i++) {
        column_of[columns[i]] = i;
    }
    auto through = independent_sets_of_size(g, 10, VertexSet(n, {reference}));
    ExactCover cover(columns.size());
    for (const auto &o : through) {
        std::vector<size_t> cols;
        o.for_each([&](size_t v) {
            if (v != reference) {
                cols.push_back(column_of[v]);
            }
        });
        cover.add_row(cols);
    }
    auto rows = cover.find_first();
    if (!rows) {
        return {};
    }
    std::vector<VertexSet> out;
    for (size_t r : *rows) {
        out.push_back(through[r]);
    }
    return out;
}

W9Hyperplanes pauliscope::w9_hyperplanes(const DualGraph &w9, size_t reference) {
    const Graph &g = w9.graph;
    const McsList &mcs = w9.mcs;
    W9Hyperplanes out;

    out.grid_is_rook = is_isomorphic(induced_subgraph(g, by_house(mcs, "LMNP")), rook_graph(4, 4));
    VertexSet x = by_house(mcs, "X");
    out.x_coclique = x.count() == 8 && is_independent(g, x);
    out.yz_hypercube = is_isomorphic(induced_subgraph(g, by_house(mcs, "YZ")), hypercube_graph(4));

    auto mis = max_independent_sets(g, true);
    out.independence_number = mis.size;
    out.ovoids = mis.witnesses;
    size_t operators = mcs.sets.empty() ? 0 : mcs.sets[0].universe();
    out.ovoids_partition_operators = !out.ovoids.empty();
    for (const auto &o : out.ovoids) {
        VertexSet cover(operators);
        size_t total = 0;
        o.for_each([&](size_t i) {
            cover |= mcs.sets[i];
            total += mcs.sets[i].count();
        });
        out.ovoids_partition_operators = out.ovoids_partition_operators && total == operators && cover.count() == operators;
    }

    VertexSet named(g.size());
    for (const char *name : {"L1", "M2", "N3", "P4", "X3", "X8", "Y4", "Y6", "Z2", "Z7"}) {
        named.set(mcs.index_of(name));
    }
    out.named_ovoid_independent = is_independent(g, named);

    out.reference = reference;
    out.perp = g.neighbors(reference);
    auto triple = ovoid_triple(w9, reference);
    bool ok = triple.size() == 3 && out.perp.count() == 12;
    if (triple.size() == 3) {
        VertexSet all = out.perp;
        all.set(reference);
        for (size_t i = 0; i < 3; i++) {
            out.ovoids_through_reference[i] = triple[i];
            ok = ok && triple[i].count() == out.independence_number && is_independent(g, triple[i]);
            all |= triple[i];
            for (size_t j = i + 1; j < 3; j++) {
                VertexSet meet = triple[i];
                meet &= triple[j];
                ok = ok && meet == VertexSet(g.size(), {reference});
            }
        }
        ok = ok && all.count() == g.size();
    }
    out.reference_decomposition = ok;
    return out;
}

W9Tripartite pauliscope::w9_tripartite(const DualGraph &w9, size_t reference) {
    const Graph &g = w9.graph;
    size_t n = g.size();
    W9Tripartite out;
    auto triple = ovoid_triple(w9, reference);
    if (triple.size() != 3) {
        return out;
    }
    out.found = true;
    out.coclique10 = triple[0];
    for (size_t i = 0; i < 2; i++) {
        out.cocliques9[i] = triple[i + 1];
        out.cocliques9[i].reset(reference);
    }
    // The neighbours of the reference split along the four lines through it.
    for (size_t line : w9.quadrangle.lines_through(reference)) {
        VertexSet t = w9.quadrangle.lines[line];
        t.reset(reference);
        out.triangles.push_back(t);
    }

    size_t operators = w9.mcs.sets[reference].universe();
    out.triangles_share_pair = out.triangles.size() == 4;
    VertexSet pairs(operators);
    for (const auto &t : out.triangles) {
        VertexSet common = VertexSet::full(operators);
        t.for_each([&](size_t i) { common &= w9.mcs.sets[i]; });
        bool pairwise_same = true;
        auto m = t.members();
        for (size_t i = 0; i < m.size(); i++) {
            for (size_t j = i + 1; j < m.size(); j++) {
                VertexSet meet = w9.mcs.sets[m[i]];
                meet &= w9.mcs.sets[m[j]];
                pairwise_same = pairwise_same && meet == common;
            }
        }
        out.triangles_share_pair = out.triangles_share_pair && t.count() == 3 && is_clique(g, t) && common.count() == 2 && pairwise_same;
        out.shared_pairs.push_back(common);
        pairs |= common;
    }
    out.pairs_form_mcs = std::find(w9.mcs.sets.begin(), w9.mcs.sets.end(), pairs) != w9.mcs.sets.end();

    VertexSet all(n);
    size_t total = out.coclique10.count();
    all |= out.coclique10;
    bool ok = out.coclique10.count() == 10 && is_independent(g, out.coclique10);
    for (const auto &c : out.cocliques9) {
        ok = ok && c.count() == 9 && is_independent(g, c);
        all |= c;
        total += c.count();
    }
    for (const auto &t : out.triangles) {
        all |= t;
        total += t.count();
    }
    out.partition = ok && total == n && all.count() == n;
    return out;
}

nlohmann::json W9Tripartite::to_json(const DualGraph &w9, const PauliSystem &p9) const {
    auto names = [&](const VertexSet &s) {
        std::vector<std::string> out;
        s.for_each([&](size_t i) { out.push_back(w9.mcs.names[i]); });
        return out;
    };
    nlohmann::json triangles_json = nlohmann::json::array();
    for (size_t i = 0; i < triangles.size(); i++) {
        triangles_json.push_back({{"mcs", names(triangles[i])}, {"shared", p9.labels_of(shared_pairs[i])}});
    }
    return {{"found", found},
            {"coclique10", names(coclique10)},
            {"coclique9", {names(cocliques9[0]), names(cocliques9[1])}},
            {"triangles", triangles_json},
            {"triangles_share_pair", triangles_share_pair},
            {"pairs_form_mcs", pairs_form_mcs},
            {"partition", partition}};
}
