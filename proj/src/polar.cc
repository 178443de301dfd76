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


#include "pauliscope/polar.h"

#include <algorithm>
#include <bit>
#include <bitset>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pauliscope/exact_cover.h"
#include "pauliscope/graph_search.h"
#include "pauliscope/parallel.h"
#include "pauliscope/pauli_system.h"

using namespace pauliscope;

namespace {

constexpr uint32_t kEvenBits = 0x55555555u;

// Digit order of the named qubit operators: I, X, Y, Z as (x, z) bit pairs.
constexpr std::array<uint32_t, 4> kDigitBits{0b00, 0b01, 0b11, 0b10};

void check_rank(size_t rank, size_t lo, size_t hi) {
    if (rank < lo || rank > hi) {
        throw std::invalid_argument("rank " + std::to_string(rank) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
    }
}

using Span = std::bitset<256>;

void extend(const SymplecticSpace &space, const std::vector<uint32_t> &basis, const Span &span, uint32_t top,
            std::set<std::vector<uint32_t>> &out) {
    if (basis.size() == space.rank()) {
        std::vector<uint32_t> members;
        for (uint32_t v = 1; v < 256; v++) {
            if (span.test(v)) {
                members.push_back(v);
            }
        }
        out.insert(members);
        return;
    }
    uint32_t limit = 1u << (2 * space.rank());
    for (uint32_t v = top + 1; v < limit; v++) {
        if (span.test(v)) {
            continue;
        }
        bool iso = std::all_of(basis.begin(), basis.end(), [&](uint32_t b) { return space.form(b, v) == 0; });
        if (!iso) {
            continue;
        }
        Span next = span;
        uint32_t next_top = v;
        for (uint32_t s = 0; s < limit; s++) {
            if (s == 0 || span.test(s)) {
                next.set(s ^ v);
                next_top = std::max(next_top, s ^ v);
            }
        }
        auto b = basis;
        b.push_back(v);
        extend(space, b, next, next_top, out);
    }
}

// Greedy maximal totally isotropic subspace containing the first point.
size_t greedy_generator_size(const SymplecticSpace &space) {
    std::vector<uint32_t> span{};
    std::vector<uint32_t> basis;
    for (size_t i = 0; i < space.size(); i++) {
        uint32_t v = space.point(i);
        if (std::find(span.begin(), span.end(), v) != span.end()) {
            continue;
        }
        if (std::all_of(basis.begin(), basis.end(), [&](uint32_t b) { return space.form(b, v) == 0; })) {
            basis.push_back(v);
            size_t old = span.size();
            span.push_back(v);
            for (size_t k = 0; k < old; k++) {
                span.push_back(span[k] ^ v);
            }
        }
    }
    return span.size();
}

ExactCover spread_problem(const SymplecticSpace &space, const std::vector<VertexSet> &gens) {
    ExactCover ec(space.size());
    for (const auto &g : gens) {
        ec.add_row(g.members());
    }
    return ec;
}

}  // namespace

SymplecticSpace::SymplecticSpace(size_t rank) : rank_(rank) {
    check_rank(rank, 1, 4);
    size_t count = (size_t{1} << (2 * rank)) - 1;
    index_.assign(count + 1, static_cast<size_t>(-1));
    for (size_t value = 1; value <= count; value++) {
        uint32_t v = 0;
        for (size_t j = 0; j < rank; j++) {
            size_t digit = (value >> (2 * (rank - 1 - j))) & 3;
            v |= kDigitBits[digit] << (2 * j);
        }
        index_[v] = points_.size();
        points_.push_back(v);
    }
}

unsigned SymplecticSpace::form(uint32_t a, uint32_t b) const {
    uint32_t xa = a & kEvenBits, za = (a >> 1) & kEvenBits;
    uint32_t xb = b & kEvenBits, zb = (b >> 1) & kEvenBits;
    return std::popcount((xa & zb) ^ (za & xb)) & 1;
}

Graph SymplecticSpace::collinearity_graph() const {
    Graph g(size());
    for (size_t a = 0; a < size(); a++) {
        for (size_t b = a + 1; b < size(); b++) {
            if (perpendicular(a, b)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

uint32_t SymplecticSpace::vector_of(const QuditOperator &op) {
    if (op.dimension() != 2) {
        throw std::invalid_argument("symplectic vectors are defined for qubits");
    }
    uint32_t v = 0;
    for (size_t j = 0; j < op.arity(); j++) {
        const auto &f = op.factors()[j];
        v |= (static_cast<uint32_t>(f.x) | static_cast<uint32_t>(f.z) << 1) << (2 * j);
    }
    return v;
}

std::vector<VertexSet> pauliscope::generators(size_t rank, size_t threads) {
    check_rank(rank, 1, 4);
    SymplecticSpace space(rank);
    uint32_t limit = 1u << (2 * rank);
    // Each subspace is reached along chains that add a vector larger than
    // everything spanned so far; the first vector is split across threads.
    std::set<std::vector<uint32_t>> found;
    std::mutex lock;
    parallel_for(limit - 1, threads == 0 ? default_thread_count() : threads, [&](size_t k) {
        uint32_t v = static_cast<uint32_t>(k + 1);
        std::set<std::vector<uint32_t>> local;
        Span span;
        span.set(v);
        extend(space, {v}, span, v, local);
        std::lock_guard<std::mutex> guard(lock);
        found.insert(local.begin(), local.end());
    });
    std::vector<VertexSet> out;
    for (const auto &members : found) {
        VertexSet s(space.size());
        for (uint32_t v : members) {
            s.set(space.index_of(v));
        }
        out.push_back(s);
    }
    canonical_sort(out);
    return out;
}

CountingLaws pauliscope::counting_laws(size_t rank) {
    check_rank(rank, 1, 4);
    CountingLaws laws;
    laws.points = (size_t{1} << (2 * rank)) - 1;
    laws.spread_size = (size_t{1} << rank) + 1;
    laws.generator_size = (size_t{1} << rank) - 1;
    laws.non_perp = size_t{1} << (2 * rank - 1);

    SymplecticSpace space(rank);
    bool ok = space.size() == laws.points;
    for (size_t a = 0; a < space.size() && ok; a++) {
        size_t non_perp = 0;
        for (size_t b = 0; b < space.size(); b++) {
            non_perp += space.perpendicular(a, b) ? 0 : 1;
        }
        ok = non_perp == laws.non_perp;
    }
    ok = ok && greedy_generator_size(space) == laws.generator_size;
    ok = ok && laws.points == laws.spread_size * laws.generator_size;
    if (rank <= 3) {
        ok = ok && find_spread(rank).size() == laws.spread_size;
    }
    laws.verified = ok;
    return laws;
}

std::vector<VertexSet> pauliscope::find_spread(size_t rank) {
    check_rank(rank, 1, 3);
    SymplecticSpace space(rank);
    auto gens = generators(rank);
    ExactCover ec = spread_problem(space, gens);
    auto sol = ec.find_first();
    if (!sol) {
        throw std::logic_error("no spread found");
    }
    std::vector<VertexSet> out;
    for (size_t r : *sol) {
        out.push_back(gens[r]);
    }
    return out;
}

std::vector<std::vector<VertexSet>> pauliscope::enumerate_spreads(size_t rank) {
    check_rank(rank, 1, 2);
    SymplecticSpace space(rank);
    auto gens = generators(rank);
    ExactCover ec = spread_problem(space, gens);
    std::vector<std::vector<VertexSet>> out;
    for (const auto &sol : ec.all()) {
        std::vector<VertexSet> spread;
        for (size_t r : sol) {
            spread.push_back(gens[r]);
        }
        out.push_back(spread);
    }
    return out;
}

BlockStructure pauliscope::block_structure(size_t rank) {
    check_rank(rank, 2, 4);
    Graph g = SymplecticSpace(rank).collinearity_graph();
    Graph parent = SymplecticSpace(rank - 1).collinearity_graph();
    size_t bs = parent.size();
    size_t stride = size_t{1} << (2 * (rank - 1));

    BlockStructure out;
    out.rank = rank;
    out.block_size = bs;
    for (size_t w = 0; w < 4; w++) {
        for (size_t p = 1; p < stride; p++) {
            out.order.push_back(w * stride + p - 1);
        }
    }
    auto entry = [&](size_t r, size_t c, size_t i, size_t j) {
        return g.adjacent(out.order[r * bs + i], out.order[c * bs + j]) ? 1 : 0;
    };
    auto o = [&](size_t i, size_t j) { return parent.adjacent(i, j) ? 1 : 0; };
    auto matches = [&](size_t r, size_t c, auto expected) {
        for (size_t i = 0; i < bs; i++) {
            for (size_t j = 0; j < bs; j++) {
                if (entry(r, c, i, j) != expected(i, j)) {
                    return false;
                }
            }
        }
        return true;
    };
    auto a = [&](size_t i, size_t j) { return o(i, j) + (i == j ? 1 : 0); };
    auto a_hat = [&](size_t i, size_t j) { return 1 - a(i, j); };

    out.diagonal_is_parent = out.first_row_is_a = out.others_are_a_hat = true;
    for (size_t r = 0; r < 4; r++) {
        for (size_t c = 0; c < 4; c++) {
            std::string name = matches(r, c, o) ? "O" : matches(r, c, a) ? "A" : matches(r, c, a_hat) ? "Â" : "?";
            out.names[r][c] = name;
            if (r == c) {
                out.diagonal_is_parent = out.diagonal_is_parent && name == "O";
            } else if (r == 0 || c == 0) {
                out.first_row_is_a = out.first_row_is_a && name == "A";
            } else {
                out.others_are_a_hat = out.others_are_a_hat && name == "Â";
            }
        }
    }
    // The first off-diagonal block minus the diagonal one is the identity.
    out.a_minus_o_is_identity = true;
    for (size_t i = 0; i < bs; i++) {
        for (size_t j = 0; j < bs; j++) {
            out.a_minus_o_is_identity = out.a_minus_o_is_identity && entry(0, 1, i, j) - entry(0, 0, i, j) == (i == j ? 1 : 0);
        }
    }
    for (size_t i = 0; i < out.order.size(); i++) {
        std::string row;
        for (size_t j = 0; j < out.order.size(); j++) {
            row += g.adjacent(out.order[i], out.order[j]) ? '1' : '0';
        }
        out.rows.push_back(row);
    }
    return out;
}

std::string BlockStructure::matrix_text() const {
    std::ostringstream out;
    for (size_t i = 0; i < rows.size(); i++) {
        if (i > 0 && i % block_size == 0) {
            out << '\n';
        }
        for (size_t j = 0; j < rows[i].size(); j++) {
            if (j > 0 && j % block_size == 0) {
                out << "  ";
            }
            out << rows[i][j];
        }
        out << '\n';
    }
    return out.str();
}

std::string BlockStructure::grid_text() const {
    std::ostringstream out;
    for (const auto &row : names) {
        for (size_t c = 0; c < 4; c++) {
            out << (c ? " " : "") << row[c];
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json BlockStructure::to_json() const {
    nlohmann::json grid = nlohmann::json::array();
    for (const auto &row : names) {
        grid.push_back(std::vector<std::string>(row.begin(), row.end()));
    }
    return {{"n", rank},
            {"block_size", block_size},
            {"blocks", grid},
            {"checks",
             {{"diagonal_is_parent", diagonal_is_parent},
              {"first_row_is_A", first_row_is_a},
              {"others_are_A_hat", others_are_a_hat},
              {"A_minus_O_is_identity", a_minus_o_is_identity}}}};
}

MerminBlocks pauliscope::m3_and_mermin_blocks(size_t threads) {
    Graph g = SymplecticSpace(3).collinearity_graph();
    PauliSystem two(2, 2);
    VertexSet ms = two.vertex_set({"4", "5", "6", "7", "8", "9", "10", "11", "12"});
    auto copy = [&](size_t w) {
        VertexSet s(g.size());
        ms.for_each([&](size_t p) { s.set(w * 16 + p); });
        return s;
    };

    MerminBlocks out;
    VertexSet m3(g.size());
    for (size_t w = 1; w < 4; w++) {
        for (size_t p = 1; p < 16; p++) {
            m3.set(w * 16 + p - 1);
        }
    }
    Graph m3g = induced_subgraph(g, m3);
    out.m3_degree = m3g.degree(0);
    out.m3_regular = true;
    for (size_t v = 0; v < m3g.size(); v++) {
        out.m3_regular = out.m3_regular && m3g.degree(v) == out.m3_degree;
    }
    out.m3 = spectrum(m3g, threads);
    out.m3_cospectral_with_complement = spectrum(complement(m3g), threads) == out.m3;

    Graph rook = rook_graph(3, 3);
    out.copies_are_grids = is_isomorphic(induced_subgraph(two.graph(), ms), rook);
    for (size_t w = 1; w < 4; w++) {
        out.copies_are_grids = out.copies_are_grids && is_isomorphic(induced_subgraph(g, copy(w)), rook);
    }

    auto add = [&](std::string name, const VertexSet &s) {
        out.spectra.push_back({std::move(name), s.count(), spectrum(induced_subgraph(g, s), threads)});
    };
    VertexSet e = copy(0);
    add("MS double", copy(1) | copy(2));
    add("MS triple", copy(1) | copy(2) | copy(3));
    add("E+MS", e | copy(1));
    add("E+2MS", e | copy(1) | copy(2));
    add("E+3MS", e | copy(1) | copy(2) | copy(3));
    return out;
}
