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


#include "pauliscope/quadrangle.h"

#include <gmpxx.h>

#include <algorithm>
#include <array>

#include "pauliscope/exact_cover.h"
#include "pauliscope/graph_search.h"

using namespace pauliscope;

namespace {

void require_two_qubits(const PauliSystem &sys) {
    if (sys.dimension() != 2 || sys.arity() != 2) {
        throw std::invalid_argument("this operation needs the two-qubit system");
    }
}

/// Vertex index of the phase-free product a*b (a != b).
size_t product_vertex(const PauliSystem &sys, size_t a, size_t b) {
    return sys.index_of(sys.product(a, b).phase_free());
}

VertexSet closed_perp(const Graph &g, size_t v) {
    VertexSet s = g.neighbors(v);
    s.set(v);
    return s;
}

VertexSet seed_set(const PauliSystem &sys, const std::vector<std::string> &labels) {
    VertexSet s(sys.size());
    for (const auto &l : labels) {
        s.set(sys.index_of(l));
    }
    if (s.count() != labels.size()) {
        throw std::invalid_argument("seed labels must be distinct");
    }
    return s;
}

/// Every edge inside `part` multiplies to a vertex of `target`.
bool edges_multiply_into(const PauliSystem &sys, const VertexSet &part, const VertexSet &target) {
    const Graph &g = sys.graph();
    bool ok = true;
    part.for_each([&](size_t a) {
        (g.neighbors(a) & part).for_each([&](size_t b) { ok = ok && target.test(product_vertex(sys, a, b)); });
    });
    return ok;
}

// Exact arithmetic in Q(i) for the eigenbasis computation.
struct GaussQ {
    mpq_class re = 0, im = 0;
    GaussQ operator+(const GaussQ &o) const {
        return {re + o.re, im + o.im};
    }
    GaussQ operator-(const GaussQ &o) const {
        return {re - o.re, im - o.im};
    }
    GaussQ operator*(const GaussQ &o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussQ inverse() const {
        mpq_class n = re * re + im * im;
        return {re / n, -im / n};
    }
    bool is_zero() const {
        return sgn(re) == 0 && sgn(im) == 0;
    }
};

using CMatrix = std::vector<std::vector<GaussQ>>;

CMatrix qubit_matrix(FactorExponent e) {
    GaussQ one{1, 0}, minus{-1, 0}, i{0, 1}, mi{0, -1}, zero{0, 0};
    if (e.x == 0 && e.z == 0) {
        return {{one, zero}, {zero, one}};
    }
    if (e.x == 1 && e.z == 0) {
        return {{zero, one}, {one, zero}};
    }
    if (e.x == 0 && e.z == 1) {
        return {{one, zero}, {zero, minus}};
    }
    return {{zero, mi}, {i, zero}};  // Y = i X Z
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    size_t n = a.size(), m = b.size();
    CMatrix out(n * m, std::vector<GaussQ>(n * m));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            for (size_t k = 0; k < m; k++) {
                for (size_t l = 0; l < m; l++) {
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

/// Basis of the right nullspace of a matrix over Q(i), via reduced row echelon form.
std::vector<std::vector<GaussQ>> nullspace(CMatrix m) {
    size_t rows = m.size(), cols = m[0].size();
    std::vector<size_t> pivot_cols;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) {
            piv++;
        }
        if (piv == rows) {
            continue;
        }
        std::swap(m[piv], m[r]);
        GaussQ inv = m[r][c].inverse();
        for (auto &e : m[r]) {
            e = e * inv;
        }
        for (size_t i = 0; i < rows; i++) {
            if (i != r && !m[i][c].is_zero()) {
                GaussQ f = m[i][c];
                for (size_t k = 0; k < cols; k++) {
                    m[i][k] = m[i][k] - f * m[r][k];
                }
            }
        }
        pivot_cols.push_back(c);
        r++;
    }
    std::vector<std::vector<GaussQ>> basis;
    for (size_t free = 0; free < cols; free++) {
        if (std::find(pivot_cols.begin(), pivot_cols.end(), free) != pivot_cols.end()) {
            continue;
        }
        std::vector<GaussQ> v(cols);
        v[free] = {1, 0};
        for (size_t k = 0; k < pivot_cols.size(); k++) {
            v[pivot_cols[k]] = GaussQ{0, 0} - m[k][free];
        }
        basis.push_back(v);
    }
    return basis;
}

}  // namespace

PointLineGeometry pauliscope::w2_from_graph(const Graph &g) {
    PointLineGeometry geom;
    for (size_t v = 0; v < g.size(); v++) {
        geom.points.push_back(g.label(v));
    }
    geom.lines = maximal_cliques(g);
    auto fail = [](const std::string &what) { throw AxiomViolation("not W(2): " + what); };
    if (geom.num_points() != 15 || geom.num_lines() != 15) {
        fail("expected 15 points and 15 lines");
    }
    for (const auto &l : geom.lines) {
        if (l.count() != 3) {
            fail("a line does not have 3 points");
        }
    }
    for (size_t p = 0; p < 15; p++) {
        if (geom.lines_through(p).size() != 3) {
            fail("point " + geom.points[p] + " is not on 3 lines");
        }
        if (g.degree(p) != 6) {
            fail("point " + geom.points[p] + " is not collinear with 6 others");
        }
    }
    if (!geom.is_near_linear()) {
        fail("two lines share two points");
    }
    if (!geom.satisfies_gq_axiom()) {
        fail("GQ axiom");
    }
    return geom;
}

std::string pauliscope::to_string(HyperplaneKind kind) {
    switch (kind) {
        case HyperplaneKind::PerpSet:
            return "perp-set";
        case HyperplaneKind::Grid:
            return "grid";
        case HyperplaneKind::Ovoid:
            return "ovoid";
    }
    return "?";
}

std::vector<HyperplaneClass> pauliscope::classify_hyperplanes(const PointLineGeometry &geom) {
    size_t n = geom.num_points();
    if (n > 24) {
        throw std::invalid_argument("brute-force hyperplane search is limited to 24 points");
    }
    std::vector<uint32_t> line_masks;
    for (const auto &l : geom.lines) {
        uint32_t m = 0;
        l.for_each([&](size_t p) { m |= 1u << p; });
        line_masks.push_back(m);
    }
    Graph col = geom.collinearity_graph();
    std::vector<HyperplaneClass> out;
    uint32_t full = (n == 32) ? ~0u : (1u << n) - 1;
    for (uint32_t s = 1; s < full; s++) {
        bool ok = true;
        for (uint32_t m : line_masks) {
            int k = std::popcount(s & m);
            if (k != 1 && k != std::popcount(m)) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        VertexSet set(n);
        for (size_t p = 0; p < n; p++) {
            if (s >> p & 1) {
                set.set(p);
            }
        }
        HyperplaneClass h{HyperplaneKind::Ovoid, set, std::nullopt};
        size_t inside = 0;
        for (uint32_t m : line_masks) {
            inside += (s & m) == m ? 1 : 0;
        }
        if (inside == 0) {
            h.kind = HyperplaneKind::Ovoid;
        } else {
            for (size_t p = 0; p < n && !h.reference; p++) {
                if (closed_perp(col, p) == set) {
                    h.reference = p;
                }
            }
            if (h.reference) {
                h.kind = HyperplaneKind::PerpSet;
            } else {
                // A grid: 9 points on 6 lines, two through each point.
                bool grid = set.count() == 9 && inside == 6;
                set.for_each([&](size_t p) {
                    size_t through = 0;
                    for (uint32_t m : line_masks) {
                        through += ((s & m) == m && (m >> p & 1)) ? 1 : 0;
                    }
                    grid = grid && through == 2;
                });
                if (!grid) {
                    throw AxiomViolation("hyperplane " + set.str() + " is neither perp-set, grid nor ovoid");
                }
                h.kind = HyperplaneKind::Grid;
            }
        }
        out.push_back(h);
    }
    std::stable_sort(out.begin(), out.end(), [](const HyperplaneClass &a, const HyperplaneClass &b) {
        if (a.kind != b.kind) {
            return a.kind < b.kind;
        }
        return a.points.lex_less(b.points);
    });
    return out;
}

std::vector<std::vector<size_t>> pauliscope::spreads(const PointLineGeometry &geom) {
    ExactCover ec(geom.num_points());
    for (const auto &l : geom.lines) {
        ec.add_row(l.members());
    }
    auto all = ec.all();
    std::sort(all.begin(), all.end());
    return all;
}

VertexSet pauliscope::triad_centers(const PointLineGeometry &geom, const VertexSet &triad) {
    VertexSet centers(geom.num_points());
    for (size_t p = 0; p < geom.num_points(); p++) {
        bool all = true;
        triad.for_each([&](size_t q) { all = all && geom.collinear(p, q); });
        if (all) {
            centers.set(p);
        }
    }
    return centers;
}

TriadCensus pauliscope::classify_triads(const PointLineGeometry &geom) {
    size_t n = geom.num_points();
    Graph col = geom.collinearity_graph();
    TriadCensus census;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (col.adjacent(a, b)) {
                continue;
            }
            for (size_t c = b + 1; c < n; c++) {
                if (col.adjacent(a, c) || col.adjacent(b, c)) {
                    continue;
                }
                VertexSet t(n, {a, b, c});
                VertexSet centers = col.neighbors(a) & col.neighbors(b) & col.neighbors(c);
                if (centers.count() == 3) {
                    census.tricentric.push_back({t, centers});
                } else if (centers.count() == 1) {
                    census.unicentric.push_back({t, centers});
                } else {
                    throw AxiomViolation("triad " + t.str() + " has " + std::to_string(centers.count()) + " centers");
                }
            }
        }
    }
    return census;
}

std::string pauliscope::to_string(FactorizationMode mode) {
    switch (mode) {
        case FactorizationMode::FanoCube:
            return "fano_cube";
        case FactorizationMode::MerminBipartite:
            return "mermin_bipartite";
        case FactorizationMode::OvoidPetersen:
            return "ovoid_petersen";
    }
    return "?";
}

FactorizationMode pauliscope::parse_factorization_mode(std::string_view name) {
    for (auto m : {FactorizationMode::FanoCube, FactorizationMode::MerminBipartite, FactorizationMode::OvoidPetersen}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    throw std::invalid_argument("unknown factorization mode '" + std::string(name) + "'");
}

bool Factorization::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const NamedCheck &c) { return c.passed; });
}

nlohmann::json Factorization::to_json(const PauliSystem &sys) const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto &c : checks) {
        checks_json.push_back({{"name", c.name}, {"passed", c.passed}});
    }
    return {{"mode", to_string(mode)},
            {"first", sys.labels_of(first)},
            {"second", sys.labels_of(second)},
            {"checks", checks_json}};
}

Factorization pauliscope::factorize(const PauliSystem &sys, FactorizationMode mode, const std::vector<std::string> &seed) {
    require_two_qubits(sys);
    const Graph &g = sys.graph();
    PointLineGeometry w2 = w2_from_graph(g);
    Factorization f{mode, VertexSet(15), VertexSet(15), {}};
    auto check = [&](std::string name, bool ok) { f.checks.push_back({std::move(name), ok}); };

    switch (mode) {
        case FactorizationMode::FanoCube: {
            std::vector<std::string> s = seed.empty() ? std::vector<std::string>{"a"} : seed;
            if (s.size() != 1) {
                throw std::invalid_argument("fano_cube seed is a single point");
            }
            size_t x = sys.index_of(s[0]);
            f.first = closed_perp(g, x);
            f.second = f.first.complement();
            Graph fp = induced_subgraph(g, f.first);
            check("FP has 7 vertices and 9 edges", fp.size() == 7 && fp.edge_count() == 9);
            check("FP is the friendship graph F3", is_isomorphic(fp, friendship_graph(3)));
            check("CB is the 3-cube", is_isomorphic(induced_subgraph(g, f.second), hypercube_graph(3)));
            check("FP is a perp-set hyperplane", w2.is_hyperplane(f.first));
            check("two points of an FP line multiply to the third", edges_multiply_into(sys, f.first, f.first));
            check("CB edges multiply into FP", edges_multiply_into(sys, f.second, f.first));
            break;
        }
        case FactorizationMode::MerminBipartite: {
            std::vector<std::string> s = seed.empty() ? std::vector<std::string>{"1", "2", "3"} : seed;
            if (s.size() != 3) {
                throw std::invalid_argument("mermin_bipartite seed is a triad of 3 points");
            }
            VertexSet triad = seed_set(sys, s);
            if (!is_independent(g, triad)) {
                throw std::invalid_argument("mermin_bipartite seed points must be pairwise non-commuting");
            }
            VertexSet centers = triad_centers(w2, triad);
            if (centers.count() != 3) {
                throw std::invalid_argument("mermin_bipartite seed must be a tricentric triad");
            }
            f.first = triad | centers;
            f.second = f.first.complement();
            Graph ms = induced_subgraph(g, f.second);
            check("BP is K3,3", is_isomorphic(induced_subgraph(g, f.first), complete_bipartite_graph(3, 3)));
            bool regular = true;
            for (size_t v = 0; v < ms.size(); v++) {
                regular = regular && ms.degree(v) == 4;
            }
            check("MS is 4-regular with 18 edges", regular && ms.edge_count() == 18);
            check("MS is self-complementary", is_isomorphic(ms, complement(ms)));
            check("MS is a grid hyperplane", w2.is_hyperplane(f.second));
            check("BP edges multiply into MS", edges_multiply_into(sys, f.first, f.second));
            check("two points of an MS line multiply to the third", edges_multiply_into(sys, f.second, f.second));
            break;
        }
        case FactorizationMode::OvoidPetersen: {
            if (seed.empty()) {
                f.first = max_independent_sets(g, false).witnesses.front();
            } else {
                if (seed.size() != 5) {
                    throw std::invalid_argument("ovoid_petersen seed is an ovoid of 5 points");
                }
                f.first = seed_set(sys, seed);
                if (!is_independent(g, f.first) || !w2.is_hyperplane(f.first)) {
                    throw std::invalid_argument("ovoid_petersen seed is not an ovoid");
                }
            }
            f.second = f.first.complement();
            check("I is a maximum independent set", is_independent(g, f.first) && f.first.count() == max_independent_sets(g, false).size);
            check("I is an ovoid", w2.is_hyperplane(f.first));
            check("PG is the Petersen graph", is_isomorphic(induced_subgraph(g, f.second), petersen_graph()));
            check("PG edges multiply into I", edges_multiply_into(sys, f.second, f.first));
            break;
        }
    }
    return f;
}

MerminCertificate pauliscope::mermin_certificate(const PauliSystem &sys, const VertexSet &nine) {
    require_two_qubits(sys);
    const Graph &g = sys.graph();
    if (nine.count() != 9) {
        throw std::invalid_argument("a Mermin square has nine operators");
    }
    std::vector<VertexSet> lines;
    auto m = nine.members();
    for (size_t i = 0; i < 9; i++) {
        for (size_t j = i + 1; j < 9; j++) {
            for (size_t k = j + 1; k < 9; k++) {
                if (g.adjacent(m[i], m[j]) && g.adjacent(m[i], m[k]) && g.adjacent(m[j], m[k])) {
                    lines.push_back(VertexSet(sys.size(), {m[i], m[j], m[k]}));
                }
            }
        }
    }
    if (lines.size() != 6) {
        throw std::invalid_argument("operators do not carry exactly six commuting lines");
    }
    // Parallel classes: lines disjoint from the first line go with it.
    std::vector<int> cls(6, 1);
    cls[0] = 0;
    for (size_t l = 1; l < 6; l++) {
        if (!lines[l].intersects(lines[0])) {
            cls[l] = 0;
        }
    }
    for (size_t a = 0; a < 6; a++) {
        for (size_t b = a + 1; b < 6; b++) {
            size_t meet = lines[a].intersection_count(lines[b]);
            if ((cls[a] == cls[b] && meet != 0) || (cls[a] != cls[b] && meet != 1)) {
                throw std::invalid_argument("the six lines do not form a 3x3 grid");
            }
        }
    }
    if (std::count(cls.begin(), cls.end(), 0) != 3) {
        throw std::invalid_argument("the six lines do not form a 3x3 grid");
    }

    MerminCertificate cert;
    cert.overall_sign = 1;
    for (size_t l = 0; l < 6; l++) {
        auto p = lines[l].members();
        QuditOperator prod = multiply(multiply(sys.op(p[0]), sys.op(p[1])), sys.op(p[2]));
        if (!prod.is_identity() || prod.phase() % 2 != 0) {
            throw std::invalid_argument("a line does not multiply to plus or minus the identity");
        }
        int sign = prod.phase() == 0 ? 1 : -1;
        cert.lines.push_back({lines[l], sign, cls[l]});
        cert.overall_sign *= sign;
        (sign < 0 ? cert.negative : cert.positive)++;
    }
    cert.contradiction = cert.overall_sign == -1;
    int neg_class = -1;
    cert.polarized = true;
    for (const auto &l : cert.lines) {
        if (l.sign < 0) {
            if (neg_class >= 0 && neg_class != l.parallel_class) {
                cert.polarized = false;
            }
            neg_class = l.parallel_class;
        }
    }
    return cert;
}

PointLineGeometry pauliscope::product_triples(const PauliSystem &sys, const VertexSet &points, bool commuting) {
    const Graph &g = sys.graph();
    PointLineGeometry geom;
    auto m = points.members();
    for (size_t v : m) {
        geom.points.push_back(sys.label(v));
    }
    for (size_t i = 0; i < m.size(); i++) {
        for (size_t j = i + 1; j < m.size(); j++) {
            if (g.adjacent(m[i], m[j]) != commuting) {
                continue;
            }
            size_t z = product_vertex(sys, m[i], m[j]);
            auto it = std::find(m.begin(), m.end(), z);
            if (it == m.end() || static_cast<size_t>(it - m.begin()) <= j) {
                continue;
            }
            size_t k = static_cast<size_t>(it - m.begin());
            if (g.adjacent(m[i], m[k]) == commuting && g.adjacent(m[j], m[k]) == commuting) {
                geom.lines.push_back(VertexSet(m.size(), {i, j, k}));
            }
        }
    }
    canonical_sort(geom.lines);
    return geom;
}

PointLineGeometry pauliscope::mermin_configuration(const PauliSystem &sys, const VertexSet &nine, bool add_transversals) {
    PointLineGeometry geom = product_triples(sys, nine, true);
    if (add_transversals) {
        const Graph &g = sys.graph();
        auto m = nine.members();
        std::vector<VertexSet> transversals;
        for (size_t i = 0; i < 9; i++) {
            for (size_t j = i + 1; j < 9; j++) {
                for (size_t k = j + 1; k < 9; k++) {
                    if (!g.adjacent(m[i], m[j]) && !g.adjacent(m[i], m[k]) && !g.adjacent(m[j], m[k])) {
                        transversals.push_back(VertexSet(9, {i, j, k}));
                    }
                }
            }
        }
        // The parallel class of the first transversal.
        if (!transversals.empty()) {
            VertexSet first = transversals.front();
            geom.lines.push_back(first);
            for (size_t t = 1; t < transversals.size(); t++) {
                if (!transversals[t].intersects(first)) {
                    geom.lines.push_back(transversals[t]);
                }
            }
        }
        canonical_sort(geom.lines);
    }
    return geom;
}

std::string pauliscope::to_string(BasisKind kind) {
    switch (kind) {
        case BasisKind::Unentangled:
            return "unentangled";
        case BasisKind::Entangled:
            return "entangled";
        case BasisKind::Mixed:
            return "mixed";
    }
    return "?";
}

LineBasis pauliscope::line_basis_entanglement(const PauliSystem &sys, const VertexSet &line) {
    require_two_qubits(sys);
    const Graph &g = sys.graph();
    if (line.count() != 3 || !is_clique(g, line)) {
        throw std::invalid_argument("a line is three pairwise commuting operators");
    }
    auto p = line.members();
    auto matrix = [&](size_t v) {
        const auto &f = sys.op(v).factors();
        return kron(qubit_matrix(f[0]), qubit_matrix(f[1]));
    };
    CMatrix a = matrix(p[0]), b = matrix(p[1]);

    LineBasis out;
    std::array<int, 2> signs{1, -1};
    size_t total = 0;
    for (int s : signs) {
        for (int t : signs) {
            CMatrix stacked;
            for (size_t r = 0; r < 4; r++) {
                auto row = a[r];
                row[r] = row[r] - GaussQ{s, 0};
                stacked.push_back(row);
            }
            for (size_t r = 0; r < 4; r++) {
                auto row = b[r];
                row[r] = row[r] - GaussQ{t, 0};
                stacked.push_back(row);
            }
            for (const auto &v : nullspace(stacked)) {
                // The vector as a 2x2 coefficient matrix; rank 1 iff the determinant vanishes.
                GaussQ det = v[0] * v[3] - v[1] * v[2];
                out.schmidt_ranks.push_back(det.is_zero() ? 1 : 2);
                total++;
            }
        }
    }
    if (total != 4) {
        throw std::logic_error("joint eigenspaces do not span the space");
    }
    bool all1 = std::all_of(out.schmidt_ranks.begin(), out.schmidt_ranks.end(), [](int r) { return r == 1; });
    bool all2 = std::all_of(out.schmidt_ranks.begin(), out.schmidt_ranks.end(), [](int r) { return r == 2; });
    out.kind = all1 ? BasisKind::Unentangled : all2 ? BasisKind::Entangled : BasisKind::Mixed;
    out.meets_local_operators = line.intersects(sys.vertex_set({"1", "2", "3", "a", "b", "c"}));
    return out;
}

nlohmann::json pauliscope::geometry_json(const PointLineGeometry &geom, const std::vector<HyperplaneClass> &hyperplanes,
                                         const std::vector<std::vector<size_t>> &spread_list) {
    nlohmann::json out = geom.to_json();
    nlohmann::json hs = nlohmann::json::array();
    for (const auto &h : hyperplanes) {
        nlohmann::json pts = nlohmann::json::array();
        h.points.for_each([&](size_t p) { pts.push_back(geom.points[p]); });
        nlohmann::json entry{{"kind", to_string(h.kind)}, {"points", pts}};
        if (h.reference) {
            entry["reference"] = geom.points[*h.reference];
        }
        hs.push_back(entry);
    }
    nlohmann::json ss = nlohmann::json::array();
    for (const auto &s : spread_list) {
        nlohmann::json lines = nlohmann::json::array();
        for (size_t l : s) {
            nlohmann::json pts = nlohmann::json::array();
            geom.lines[l].for_each([&](size_t p) { pts.push_back(geom.points[p]); });
            lines.push_back(pts);
        }
        ss.push_back(lines);
    }
    out["hyperplanes"] = hs;
    out["spreads"] = ss;
    return out;
}
