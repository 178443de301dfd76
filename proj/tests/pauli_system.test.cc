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


#include "pauliscope/pauli_system.h"

#include <set>
#include <sstream>

#include "pauliscope/two_qubit_tables.h"
#include "gtest/gtest.h"
#include "pauliscope/graph_search.h"

using namespace pauliscope;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) {
            row.push_back(cell);
        }
        if (!line.empty() && line.back() == ',') {
            row.push_back("");
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace

TEST(pauli_system, two_qubit_labels) {
    PauliSystem sys(2, 2);
    ASSERT_EQ(sys.size(), 15u);
    for (size_t i = 0; i < 15; i++) {
        EXPECT_EQ(sys.label(i), tables::kTwoQubitLabels[i]);
    }
    // 1 = I X, a = X I, 4 = X X, b = Y I, c = Z I, 12 = Z Z.
    EXPECT_EQ(sys.parse("1"), QuditOperator(2, {{0, 0}, {1, 0}}));
    EXPECT_EQ(sys.parse("a"), QuditOperator(2, {{1, 0}, {0, 0}}));
    EXPECT_EQ(sys.parse("4"), QuditOperator(2, {{1, 0}, {1, 0}}));
    EXPECT_EQ(sys.parse("b"), QuditOperator(2, {{1, 1}, {0, 0}}));
    EXPECT_EQ(sys.parse("12"), QuditOperator(2, {{0, 1}, {0, 1}}));
    EXPECT_THROW(sys.index_of("13"), std::invalid_argument);
}

TEST(pauli_system, product_table_matches_fixture) {
    PauliSystem sys(2, 2);
    auto rows = parse_csv(sys.product_table_csv());
    ASSERT_EQ(rows.size(), 16u);
    for (size_t j = 0; j < 15; j++) {
        EXPECT_EQ(rows[0][j + 1], tables::kTwoQubitLabels[j]);
    }
    for (size_t i = 0; i < 15; i++) {
        ASSERT_EQ(rows[i + 1].size(), 16u);
        for (size_t j = 0; j < 16; j++) {
            EXPECT_EQ(rows[i + 1][j], tables::kTwoQubitProducts[i][j]) << "row " << i << " col " << j;
        }
    }
}

TEST(pauli_system, product_spot_values) {
    PauliSystem sys(2, 2);
    auto prod = [&](std::string_view a, std::string_view b) {
        return sys.format(sys.product(sys.index_of(a), sys.index_of(b)));
    };
    EXPECT_EQ(prod("1", "2"), "i3");
    EXPECT_EQ(prod("4", "8"), "-12");
    EXPECT_EQ(prod("8", "10"), "6");
    EXPECT_EQ(prod("8", "12"), "-4");
    EXPECT_EQ(prod("1", "a"), "4");
    for (size_t v = 0; v < 15; v++) {
        EXPECT_EQ(sys.format(sys.product(v, v)), "0");
    }
}

TEST(pauli_system, commutation_table_matches_fixture) {
    PauliSystem sys(2, 2);
    auto rows = parse_csv(sys.commutation_table_csv());
    ASSERT_EQ(rows.size(), 16u);
    for (size_t i = 0; i < 15; i++) {
        std::string bits;
        for (size_t j = 1; j < 16; j++) {
            bits += rows[i + 1][j];
        }
        EXPECT_EQ(bits, tables::kTwoQubitCommutation[i]) << "row " << sys.label(i);
        EXPECT_EQ(bits[i], '0');
    }
    EXPECT_TRUE(commutes(sys.parse("1"), sys.parse("a")));
    EXPECT_FALSE(commutes(sys.parse("1"), sys.parse("2")));
}

TEST(pauli_system, graph_sizes) {
    struct Case {
        unsigned d;
        size_t n, v, degree;
    };
    for (auto c : {Case{2, 2, 15, 6}, Case{2, 3, 63, 30}, Case{3, 2, 80, 25}, Case{2, 1, 3, 0}, Case{3, 1, 8, 1}}) {
        PauliSystem sys(c.d, c.n);
        const Graph &g = sys.graph();
        ASSERT_EQ(g.size(), c.v);
        for (size_t v = 0; v < g.size(); v++) {
            EXPECT_EQ(g.degree(v), c.degree);
            EXPECT_FALSE(g.adjacent(v, v));
        }
    }
    EXPECT_EQ(PauliSystem(2, 2).graph().edge_count(), 45u);
    EXPECT_EQ(PauliSystem(3, 2).graph().edge_count(), 1000u);
}

TEST(pauli_system, qubit_degree_law) {
    // Each vertex of P[2,N] has 2^(2N-1) non-neighbours.
    for (size_t n = 1; n <= 4; n++) {
        PauliSystem sys(2, n);
        size_t expected = size_t{1} << (2 * n - 1);
        for (size_t v = 0; v < sys.size(); v++) {
            ASSERT_EQ(sys.size() - 1 - sys.graph().degree(v), expected);
        }
    }
}

TEST(pauli_system, label_round_trip_and_phase_closure) {
    for (auto [d, n] : {std::pair<unsigned, size_t>{2, 2}, {2, 3}, {3, 2}}) {
        PauliSystem sys(d, n);
        std::set<std::string> seen;
        for (size_t v = 0; v < sys.size(); v++) {
            EXPECT_EQ(sys.index_of(sys.label(v)), v);
            EXPECT_EQ(sys.index_of(sys.op(v)), v);
            EXPECT_EQ(sys.op(v).phase(), 0u);
            EXPECT_FALSE(sys.op(v).is_identity());
            seen.insert(sys.label(v));
        }
        EXPECT_EQ(seen.size(), sys.size());
        for (size_t a = 0; a < sys.size(); a++) {
            for (size_t b = 0; b < sys.size(); b++) {
                auto p = sys.product(a, b);
                EXPECT_LT(p.phase(), d == 2 ? 4u : 3u);
                bool same_class = sys.product(b, a).phase_free() == p.phase_free();
                EXPECT_TRUE(same_class);
                EXPECT_EQ(sys.graph().adjacent(a, b), a != b && sys.product(b, a) == p);
            }
        }
    }
}

TEST(pauli_system, qutrit_labels) {
    PauliSystem sys(3, 2);
    // s_1..s_8 = Z, X, Y, V, Z^2, X^2, Y^2, V^2.
    EXPECT_EQ(sys.parse("1"), QuditOperator(3, {{0, 0}, {0, 1}}));
    EXPECT_EQ(sys.parse("2"), QuditOperator(3, {{0, 0}, {1, 0}}));
    EXPECT_EQ(sys.parse("8"), QuditOperator(3, {{0, 0}, {2, 1}}));
    EXPECT_EQ(sys.parse("a"), QuditOperator(3, {{0, 1}, {0, 0}}));
    EXPECT_EQ(sys.parse("h"), QuditOperator(3, {{2, 1}, {0, 0}}));
    EXPECT_EQ(sys.parse("9"), QuditOperator(3, {{0, 1}, {0, 1}}));
    EXPECT_EQ(sys.parse("72"), QuditOperator(3, {{2, 1}, {2, 1}}));
    EXPECT_EQ(sys.parse("17"), QuditOperator(3, {{1, 0}, {0, 1}}));
    EXPECT_EQ(sys.label(0), "1");
    EXPECT_EQ(sys.label(8), "a");
    EXPECT_EQ(sys.label(9), "9");
    EXPECT_EQ(sys.label(79), "72");
}

TEST(pauli_system, other_arities) {
    PauliSystem q3(2, 3);
    EXPECT_EQ(q3.label(0), "IIX");
    EXPECT_EQ(q3.index_of("a3"), q3.index_of("XII"));
    EXPECT_EQ(q3.index_of("c3"), q3.index_of("ZII"));
    PauliSystem t1(3, 1);
    EXPECT_EQ(t1.labels(), (std::vector<std::string>{"Z", "X", "Y", "V", "Z2", "X2", "Y2", "V2"}));
    PauliSystem t3(3, 3, 1000);
    EXPECT_EQ(t3.size(), 728u);
    EXPECT_EQ(t3.label(0), "I.I.Z");
}

TEST(pauli_system, errors) {
    EXPECT_THROW(PauliSystem(5, 2), std::invalid_argument);
    EXPECT_THROW(PauliSystem(4, 1), std::invalid_argument);
    EXPECT_THROW(PauliSystem(2, 0), std::invalid_argument);
    EXPECT_THROW(PauliSystem(2, 5), CapExceeded);
    EXPECT_THROW(PauliSystem(3, 3), CapExceeded);
    EXPECT_NO_THROW(PauliSystem(2, 4));
}

TEST(pauli_system, adjacency_json) {
    PauliSystem sys(2, 2);
    auto j = sys.adjacency_json();
    EXPECT_EQ(j["d"], 2);
    EXPECT_EQ(j["n"], 2);
    EXPECT_EQ(j["labels"].size(), 15u);
    ASSERT_EQ(j["edges"].size(), 45u);
    std::vector<std::pair<size_t, size_t>> edges;
    for (const auto &e : j["edges"]) {
        ASSERT_LT(e[0].get<size_t>(), e[1].get<size_t>());
        edges.emplace_back(e[0], e[1]);
    }
    EXPECT_TRUE(std::is_sorted(edges.begin(), edges.end()));
}
