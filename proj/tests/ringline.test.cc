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

#include <gtest/gtest.h>

#include <set>

#include "operator_matrices.h"
#include "pauliscope/graph_search.h"
#include "pauliscope/pauli_system.h"

using namespace pauliscope;

namespace {

// Determinant of a label's matrix, from the entries.
int det(RingLabel x) {
    uint8_t m = ring_matrix_bits(x);
    int a = m & 1, b = m >> 1 & 1, c = m >> 2 & 1, d = m >> 3 & 1;
    return (a * d + b * c) % 2;
}

// Row space of [A | B] as a sorted list of its nonzero vectors.
std::vector<int> row_space(RingPoint p) {
    auto row = [&](int i) {
        uint8_t a = ring_matrix_bits(p.first), b = ring_matrix_bits(p.second);
        return (a >> (2 * i) & 3) | (b >> (2 * i) & 3) << 2;
    };
    std::set<int> s{row(0), row(1), row(0) ^ row(1)};
    s.erase(0);
    return {s.begin(), s.end()};
}

}  // namespace

TEST(ringline, full_ring_axioms) {
    auto r = build_ring(RingKind::FullMatrix);
    ASSERT_EQ(r.elements.size(), 16u);
    for (RingLabel a = 0; a < 16; a++) {
        EXPECT_EQ(ring_mul(a, 1), a);
        EXPECT_EQ(ring_mul(1, a), a);
        EXPECT_EQ(ring_add(a, 0), a);
        EXPECT_EQ(ring_add(a, a), 0);
        for (RingLabel b = 0; b < 16; b++) {
            EXPECT_EQ(ring_add(a, b), ring_add(b, a));
            for (RingLabel c = 0; c < 16; c++) {
                EXPECT_EQ(ring_mul(ring_mul(a, b), c), ring_mul(a, ring_mul(b, c)));
                EXPECT_EQ(ring_mul(a, ring_add(b, c)), ring_add(ring_mul(a, b), ring_mul(a, c)));
                EXPECT_EQ(ring_mul(ring_add(a, b), c), ring_add(ring_mul(a, c), ring_mul(b, c)));
            }
        }
    }
    // Not commutative: 2' 8' != 8' 2'.
    EXPECT_NE(ring_mul(2, 8), ring_mul(8, 2));
}

TEST(ringline, labels_and_units) {
    // A few labels written out entry by entry (a b; c d).
    EXPECT_EQ(ring_matrix_bits(1), 0b1001);
    EXPECT_EQ(ring_matrix_bits(2), 0b0110);
    EXPECT_EQ(ring_matrix_bits(3), 0b1111);
    EXPECT_EQ(ring_matrix_bits(8), 0b0010);
    EXPECT_EQ(ring_matrix_bits(15), 0b0001);
    auto r = build_ring(RingKind::FullMatrix);
    EXPECT_EQ(r.units, (std::vector<RingLabel>{1, 2, 9, 11, 12, 13}));
    EXPECT_EQ(r.zero_divisors.size(), 10u);
    for (RingLabel x = 0; x < 16; x++) {
        EXPECT_EQ(r.is_unit(x), det(x) == 1);
    }
    EXPECT_EQ(ring_label_str(13), "13'");
}

TEST(ringline, subrings) {
    auto f4 = build_ring(RingKind::F4);
    auto dual = build_ring(RingKind::Dual);
    auto prod = build_ring(RingKind::Product);
    for (const auto *r : {&f4, &dual, &prod}) {
        ASSERT_EQ(r->elements.size(), 4u);
        for (auto a : r->elements) {
            for (auto b : r->elements) {
                EXPECT_TRUE(r->contains(ring_add(a, b)));
                EXPECT_TRUE(r->contains(ring_mul(a, b)));
                EXPECT_EQ(ring_mul(a, b), ring_mul(b, a));
            }
        }
    }
    EXPECT_EQ(f4.units.size(), 3u);
    EXPECT_EQ(f4.zero_divisors, (std::vector<RingLabel>{0}));
    EXPECT_EQ(dual.units, (std::vector<RingLabel>{1, 9}));
    EXPECT_EQ(ring_mul(8, 8), 0);  // x^2 = 0
    EXPECT_EQ(prod.units, (std::vector<RingLabel>{1}));
    EXPECT_EQ(prod.zero_divisors, (std::vector<RingLabel>{0, 14, 15}));
    EXPECT_EQ(ring_mul(14, 14), 14);  // idempotents
    EXPECT_EQ(ring_mul(14, 15), 0);
    // x^2 + x + 1 = 0 in F4.
    EXPECT_EQ(ring_add(ring_add(ring_mul(12, 12), 12), 1), 0);
    auto j = f4.to_json();
    EXPECT_EQ(j["multiplication"].size(), 4u);
}

TEST(ringline, admissible_is_rank_two) {
    auto r = build_ring(RingKind::FullMatrix);
    for (RingLabel a = 0; a < 16; a++) {
        for (RingLabel b = 0; b < 16; b++) {
            EXPECT_EQ(admissible(r, {a, b}), row_space({a, b}).size() == 3u);
        }
    }
}

TEST(ringline, full_line_points) {
    auto line = projective_line(build_ring(RingKind::FullMatrix));
    ASSERT_EQ(line.points.size(), 35u);
    const std::vector<std::string> expected{
        "(1',1')",  "(1',2')",  "(1',9')",  "(1',11')", "(1',12')", "(1',13')", "(1',0')",  "(1',3')",  "(1',4')",
        "(1',5')",  "(1',6')",  "(1',7')",  "(1',8')",  "(1',10')", "(1',14')", "(1',15')", "(0',1')",  "(3',1')",
        "(4',1')",  "(5',1')",  "(6',1')",  "(7',1')",  "(8',1')",  "(10',1')", "(14',1')", "(15',1')", "(3',4')",
        "(3',10')", "(3',14')", "(5',4')",  "(5',10')", "(5',14')", "(6',4')",  "(6',10')", "(6',14')"};
    for (size_t i = 0; i < 35; i++) {
        EXPECT_EQ(line.points[i].str(), expected[i]);
    }
    // Points are row spaces, so they are the 35 lines of PG(3,2).
    std::set<std::vector<int>> spaces;
    for (const auto &p : line.points) {
        spaces.insert(row_space(p));
    }
    EXPECT_EQ(spaces.size(), 35u);
    EXPECT_EQ(line.index_of({2, 4}), line.index_of({1, ring_mul(2, 4)}));
    EXPECT_THROW(line.index_of({0, 0}), std::invalid_argument);
}

TEST(ringline, subring_line_sizes) {
    EXPECT_EQ(projective_line(build_ring(RingKind::F4)).points.size(), 5u);
    EXPECT_EQ(projective_line(build_ring(RingKind::Dual)).points.size(), 6u);
    EXPECT_EQ(projective_line(build_ring(RingKind::Product)).points.size(), 9u);
    EXPECT_EQ(projective_line(build_ring(RingKind::F4)).neighbor_graph.edge_count(), 0u);
    // Over Z2 x Z2 the line is P1(Z2) x P1(Z2): neighbours agree in one coordinate.
    EXPECT_TRUE(is_isomorphic(projective_line(build_ring(RingKind::Product)).neighbor_graph, rook_graph(3, 3)));
}

TEST(ringline, neighbor_relation_properties) {
    auto r = build_ring(RingKind::FullMatrix);
    auto line = projective_line(r);
    const Graph &g = line.neighbor_graph;
    for (size_t i = 0; i < 35; i++) {
        EXPECT_FALSE(distant_rows(line.points[i], line.points[i]));
        for (size_t j = 0; j < 35; j++) {
            EXPECT_EQ(distant_rows(line.points[i], line.points[j]), distant_rows(line.points[j], line.points[i]));
        }
    }
    // Right action of elementary and diagonal matrices over the ring.
    std::vector<std::array<RingLabel, 4>> movers;
    for (RingLabel x = 0; x < 16; x++) {
        movers.push_back({1, x, 0, 1});
        movers.push_back({1, 0, x, 1});
    }
    movers.push_back({0, 1, 1, 0});
    for (auto u : r.units) {
        movers.push_back({u, 0, 0, 1});
    }
    for (const auto &m : movers) {
        auto act = [&](RingPoint p) {
            return RingPoint{ring_add(ring_mul(p.first, m[0]), ring_mul(p.second, m[2])),
                             ring_add(ring_mul(p.first, m[1]), ring_mul(p.second, m[3]))};
        };
        for (size_t i = 0; i < 35; i++) {
            for (size_t j = i + 1; j < 35; j++) {
                EXPECT_EQ(g.adjacent(i, j), !distant_rows(act(line.points[i]), act(line.points[j])));
            }
        }
    }
}

TEST(ringline, bp_ms_split) {
    auto line = projective_line(build_ring(RingKind::FullMatrix));
    auto split = bp_ms_from_reference_pair(line);
    std::vector<std::string> distant, neighbor;
    split.distant_both.for_each([&](size_t i) { distant.push_back(line.points[i].str()); });
    split.neighbor_both.for_each([&](size_t i) { neighbor.push_back(line.points[i].str()); });
    EXPECT_EQ(distant, (std::vector<std::string>{"(1',1')", "(1',2')", "(1',9')", "(1',11')", "(1',12')", "(1',13')"}));
    EXPECT_EQ(neighbor, (std::vector<std::string>{"(3',4')", "(3',10')", "(3',14')", "(5',4')", "(5',10')", "(5',14')",
                                                  "(6',4')", "(6',10')", "(6',14')"}));
    EXPECT_TRUE(split.units_exactly_distant);
    EXPECT_TRUE(split.zero_divisors_exactly_neighbor);
    EXPECT_TRUE(split.bp_is_k33);
    EXPECT_TRUE(split.ms_is_grid);
    EXPECT_TRUE(split.polarized);
    EXPECT_TRUE(split.fifteen_is_pauli_graph);
    EXPECT_THROW(bp_ms_from_reference_pair(projective_line(build_ring(RingKind::F4))), std::invalid_argument);
}

TEST(ringline, subrings_as_hyperplanes) {
    auto hs = subring_lines_as_hyperplanes();
    ASSERT_EQ(hs.size(), 3u);
    EXPECT_EQ(hs[0].points, 5u);
    EXPECT_EQ(hs[0].hyperplane, "ovoid");
    EXPECT_EQ(hs[1].points, 6u);
    EXPECT_EQ(hs[2].points, 9u);
    EXPECT_EQ(hs[2].hyperplane, "grid");
    for (const auto &h : hs) {
        EXPECT_TRUE(h.isomorphic) << to_string(h.ring);
        EXPECT_TRUE(h.embeds) << to_string(h.ring);
    }
}

TEST(ringline, pg32_phases) {
    using pauliscope::testing::Gauss;
    auto rep = pg32_line_phases();
    ASSERT_EQ(rep.lines.size(), 35u);
    EXPECT_EQ(rep.isotropic, 15u);
    EXPECT_TRUE(rep.isotropic_mu_real);
    EXPECT_TRUE(rep.others_mu_imaginary);
    EXPECT_TRUE(rep.isotropic_are_w2_lines);

    PauliSystem sys(2, 2);
    size_t one = sys.index_of("1"), two = sys.index_of("2"), a = sys.index_of("a");
    for (const auto &l : rep.lines) {
        // Matrix oracle: o_k o_l = i^mu o_m.
        auto lhs = pauliscope::testing::mat_mul(pauliscope::testing::to_matrix<Gauss>(sys.op(l.points[0])),
                                                pauliscope::testing::to_matrix<Gauss>(sys.op(l.points[1])));
        auto rhs = pauliscope::testing::to_matrix<Gauss>(sys.op(l.points[2]).with_phase(l.mu));
        EXPECT_EQ(lhs, rhs);
        if (l.points[0] == one && l.points[1] == a) {
            EXPECT_EQ(sys.label(l.points[2]), "4");
            EXPECT_EQ(l.mu, 0u);
        }
        if (l.points[0] == one && l.points[1] == two) {
            EXPECT_EQ(l.mu, 1u);  // 1.2 = i3
        }
    }
}
