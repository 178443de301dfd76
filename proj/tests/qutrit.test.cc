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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "operator_matrices.h"
#include "pauliscope/graph_search.h"

using namespace pauliscope;
using pauliscope::testing::Eisen;
using pauliscope::testing::Matrix;

namespace {

const PauliSystem &p9() {
    static const PauliSystem sys(3, 2);
    return sys;
}

const DualGraph &w9() {
    static const DualGraph g = dual_graph(p9());
    return g;
}

Matrix<Eisen> matrix_of(size_t v) {
    return pauliscope::testing::to_matrix<Eisen>(p9().op(v));
}

// m == c * other for some power c of omega.
bool proportional(const Matrix<Eisen> &m, const Matrix<Eisen> &other) {
    Eisen c{1, 0};
    for (int k = 0; k < 3; k++) {
        if (pauliscope::testing::mat_scale(other, c) == m) {
            return true;
        }
        c = c * Eisen::tau();
    }
    return false;
}

std::set<std::string> names_of(const VertexSet &s) {
    std::set<std::string> out;
    s.for_each([&](size_t i) { out.insert(w9().mcs.names[i]); });
    return out;
}

}  // namespace

TEST(qutrit, p9_is_regular_not_strongly_regular) {
    auto a = p9_analysis(p9());
    EXPECT_EQ(a.vertices, 80u);
    EXPECT_TRUE(a.regular);
    EXPECT_EQ(a.degree, 25u);
    EXPECT_EQ(a.edges, 80u * 25 / 2);
    EXPECT_EQ(a.spectrum.str(), "{-7^15, -1^40, 5^24, 25}");
    EXPECT_EQ(a.srg.verdict, SrgVerdict::NotStronglyRegular);
    EXPECT_THROW(p9_analysis(PauliSystem(2, 2)), std::invalid_argument);
}

TEST(qutrit, commutation_matches_matrices) {
    std::mt19937 rng(9);
    std::uniform_int_distribution<size_t> pick(0, p9().size() - 1);
    for (int trial = 0; trial < 20; trial++) {
        size_t a = pick(rng), b = pick(rng);
        auto ma = matrix_of(a), mb = matrix_of(b);
        bool matrices_commute = pauliscope::testing::mat_mul(ma, mb) == pauliscope::testing::mat_mul(mb, ma);
        EXPECT_EQ(p9().graph().adjacent(a, b), matrices_commute && a != b) << p9().label(a) << " " << p9().label(b);
    }
}

TEST(qutrit, named_list_equals_maximal_cliques) {
    auto m = enumerate_mcs(p9());
    EXPECT_EQ(m.enumerated, (3u + 1) * (9 + 1));
    EXPECT_TRUE(m.all_size_eight);
    EXPECT_TRUE(m.missing.empty());
    EXPECT_TRUE(m.extra.empty());
    EXPECT_TRUE(m.four_per_operator);
    EXPECT_TRUE(m.closed_under_products);
    EXPECT_TRUE(m.matches());

    ASSERT_EQ(m.list.size(), 40u);
    EXPECT_EQ(m.list.sets[m.list.index_of("L1")], p9().vertex_set({"1", "5", "a", "9", "13", "e", "41", "45"}));
    EXPECT_EQ(m.list.sets[m.list.index_of("X1")], p9().vertex_set({"9", "22", "32", "39", "45", "50", "60", "67"}));
    EXPECT_THROW(m.list.index_of("Q1"), std::invalid_argument);
}

TEST(qutrit, named_sets_commute_as_matrices) {
    for (const auto &[name, labels] : reference_mcs_labels()) {
        ASSERT_EQ(labels.size(), 8u) << name;
        std::vector<Matrix<Eisen>> ms;
        for (const auto &l : labels) {
            ms.push_back(matrix_of(p9().index_of(l)));
        }
        for (size_t i = 0; i < ms.size(); i++) {
            for (size_t j = i + 1; j < ms.size(); j++) {
                EXPECT_EQ(pauliscope::testing::mat_mul(ms[i], ms[j]), pauliscope::testing::mat_mul(ms[j], ms[i])) << name;
            }
        }
    }
}

TEST(qutrit, cliques_close_under_matrix_products) {
    auto identity = pauliscope::testing::mat_identity<Eisen>(9);
    for (const auto &s : enumerate_mcs(p9()).list.sets) {
        auto members = s.members();
        for (size_t a : members) {
            for (size_t b : members) {
                auto prod = pauliscope::testing::mat_mul(matrix_of(a), matrix_of(b));
                bool ok = proportional(prod, identity);
                for (size_t c : members) {
                    ok = ok || proportional(prod, matrix_of(c));
                }
                EXPECT_TRUE(ok);
            }
        }
    }
}

TEST(qutrit, dual_graph_is_srg_40_12_2_4) {
    const auto &g = w9();
    ASSERT_EQ(g.graph.size(), 40u);
    ASSERT_EQ(g.srg.verdict, SrgVerdict::StronglyRegular);
    EXPECT_EQ(*g.srg.params, (SrgParams{40, 12, 2, 4}));
    EXPECT_EQ(g.spectrum.str(), "{-4^15, 2^24, 12}");

    size_t l1 = g.mcs.index_of("L1");
    EXPECT_EQ(names_of(g.graph.neighbors(l1)),
              (std::set<std::string>{"L2", "L3", "L4", "M1", "N1", "P1", "X1", "Y1", "Z1", "X5", "Y5", "Z5"}));

    // Adjacency straight from the label strings.
    const auto &ref = reference_mcs_labels();
    for (size_t a = 0; a < ref.size(); a++) {
        for (size_t b = a + 1; b < ref.size(); b++) {
            std::set<std::string> sa(ref[a].labels.begin(), ref[a].labels.end());
            bool meet = std::any_of(ref[b].labels.begin(), ref[b].labels.end(), [&](const auto &l) { return sa.count(l) > 0; });
            EXPECT_EQ(g.graph.adjacent(g.mcs.index_of(ref[a].name), g.mcs.index_of(ref[b].name)), meet);
        }
    }
}

TEST(qutrit, quadrangle_of_order_three) {
    const auto &g = w9();
    EXPECT_TRUE(g.quadrangle_order_three);
    EXPECT_EQ(g.quadrangle.num_points(), 40u);
    EXPECT_EQ(g.quadrangle.num_lines(), 40u);
    // Each line: four MCSs sharing exactly {p, p^2}.
    for (const auto &line : g.quadrangle.lines) {
        VertexSet common = VertexSet::full(p9().size());
        line.for_each([&](size_t i) { common &= g.mcs.sets[i]; });
        ASSERT_EQ(common.count(), 2u);
        auto m = common.members();
        auto sq = pauliscope::testing::mat_mul(matrix_of(m[0]), matrix_of(m[0]));
        EXPECT_TRUE(proportional(sq, matrix_of(m[1])));
    }
    // GQ(s, t) counts: (s+1)(st+1) points and lines.
    EXPECT_EQ(g.quadrangle.num_points(), (3u + 1) * (9 + 1));
}

TEST(qutrit, hyperplanes) {
    auto h = w9_hyperplanes(w9());
    EXPECT_TRUE(h.grid_is_rook);
    EXPECT_TRUE(h.x_coclique);
    EXPECT_TRUE(h.yz_hypercube);
    EXPECT_EQ(h.independence_number, 10u);
    // Hoffman bound n (-l) / (k - l) with l = -4.
    EXPECT_EQ(40u * 4 / (12 + 4), h.independence_number);
    EXPECT_TRUE(h.named_ovoid_independent);
    EXPECT_TRUE(h.ovoids_partition_operators);
    EXPECT_FALSE(h.ovoids.empty());
    EXPECT_TRUE(h.reference_decomposition);
    EXPECT_EQ(h.perp.count(), 12u);

    VertexSet named(40);
    for (const char *n : {"L1", "M2", "N3", "P4", "X3", "X8", "Y4", "Y6", "Z2", "Z7"}) {
        named.set(w9().mcs.index_of(n));
    }
    EXPECT_NE(std::find(h.ovoids.begin(), h.ovoids.end(), named), h.ovoids.end());
    EXPECT_EQ(h.ovoids_through_reference[0], named);
}

TEST(qutrit, every_reference_splits_into_three_ovoids) {
    const Graph &g = w9().graph;
    for (size_t r = 0; r < g.size(); r++) {
        auto triple = ovoid_triple(w9(), r);
        ASSERT_EQ(triple.size(), 3u) << w9().mcs.names[r];
        VertexSet all = g.neighbors(r);
        for (const auto &o : triple) {
            EXPECT_EQ(o.count(), 10u);
            EXPECT_TRUE(o.test(r));
            EXPECT_TRUE(is_independent(g, o));
            all |= o;
        }
        EXPECT_EQ(all.count(), 40u);
    }
}

TEST(qutrit, tripartite_partition) {
    auto t = w9_tripartite(w9());
    EXPECT_TRUE(t.all_passed());
    EXPECT_EQ(t.coclique10.count(), 10u);
    EXPECT_EQ(t.cocliques9[0].count(), 9u);
    EXPECT_EQ(t.cocliques9[1].count(), 9u);
    ASSERT_EQ(t.triangles.size(), 4u);
    VertexSet pairs(p9().size());
    for (size_t i = 0; i < 4; i++) {
        EXPECT_EQ(t.triangles[i].count(), 3u);
        EXPECT_EQ(t.shared_pairs[i].count(), 2u);
        pairs |= t.shared_pairs[i];
    }
    EXPECT_EQ(pairs, p9().vertex_set({"1", "5", "a", "9", "13", "e", "41", "45"}));

    auto j = t.to_json(w9(), p9());
    EXPECT_EQ(j["coclique10"].size(), 10u);
    EXPECT_EQ(j["triangles"].size(), 4u);

    // Every reference works, not only L1.
    for (size_t r = 0; r < 40; r++) {
        EXPECT_TRUE(w9_tripartite(w9(), r).all_passed()) << r;
    }
}
