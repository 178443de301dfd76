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


#include "pauliscope/spectral.h"

#include <random>

#include "gtest/gtest.h"
#include "pauliscope/graph_search.h"
#include "pauliscope/pauli_system.h"

using namespace pauliscope;

namespace {

Graph random_graph(std::mt19937 &rng, size_t n, double p) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (coin(rng)) {
                g.add_edge(a, b);
            }
        }
    }
    return g;
}

// det(xI - A) at an integer point, by cofactor-free Gaussian elimination over Q.
mpq_class det_at(const Graph &g, long x) {
    size_t n = g.size();
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            m[i][j] = (i == j ? x : 0) - (g.adjacent(i, j) ? 1 : 0);
        }
    }
    mpq_class det = 1;
    for (size_t c = 0; c < n; c++) {
        size_t piv = c;
        while (piv < n && m[piv][c] == 0) {
            piv++;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (size_t r = c + 1; r < n; r++) {
            mpq_class u = m[r][c] / m[c][c];
            for (size_t k = c; k < n; k++) {
                m[r][k] -= u * m[c][k];
            }
        }
    }
    return det;
}

void expect_power_sums(const Graph &g, const Spectrum &s) {
    EXPECT_EQ(s.power_sum_1(), 0);
    EXPECT_EQ(s.power_sum_2(), mpq_class(2 * static_cast<long>(g.edge_count())));
    EXPECT_EQ(s.dimension, g.size());
}

}  // namespace

TEST(polynomial, arithmetic) {
    IntPoly p = IntPoly::linear(2) * IntPoly::linear(-1).pow(2);
    EXPECT_EQ(p.str(), "x^3 - 3x - 2");
    EXPECT_EQ(p.eval(2), 0);
    auto [q, r] = p.divmod_monic(IntPoly::linear(2));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(q, IntPoly::quadratic(2, 1));
    EXPECT_EQ(IntPoly().degree(), -1);
    EXPECT_EQ(IntPoly::quadratic(0, -2).reduce_mod(7), (std::vector<uint64_t>{5, 0, 1}));
}

TEST(spectral, small_char_polys) {
    EXPECT_EQ(char_poly(complete_graph(3)).str(), "x^3 - 3x - 2");
    EXPECT_EQ(char_poly(empty_graph(2)).str(), "x^2");
    IntPoly petersen = IntPoly::linear(3) * IntPoly::linear(1).pow(5) * IntPoly::linear(-2).pow(4);
    EXPECT_EQ(char_poly(petersen_graph()), petersen);
    EXPECT_EQ(char_poly_rational(petersen_graph()), petersen);
    EXPECT_EQ(char_poly(Graph(0)), IntPoly::constant(1));
}

TEST(spectral, char_poly_matches_determinant_oracle) {
    std::mt19937 rng(31);
    for (int t = 0; t < 15; t++) {
        Graph g = random_graph(rng, 3 + t % 9, 0.5);
        IntPoly p = char_poly(g, 2);
        EXPECT_EQ(p, char_poly_rational(g));
        for (long x = -3; x <= 3; x++) {
            EXPECT_EQ(mpq_class(p.eval(x)), det_at(g, x));
        }
    }
}

TEST(spectral, thread_count_does_not_change_result) {
    Graph g = PauliSystem(2, 3).graph();
    EXPECT_EQ(char_poly(g, 1), char_poly(g, 4));
}

TEST(spectral, pauli_spectra) {
    Graph p22 = PauliSystem(2, 2).graph();
    Spectrum s22 = spectrum(p22);
    EXPECT_EQ(s22, Spectrum::from_integers({{-3, 5}, {1, 9}, {6, 1}}));
    EXPECT_EQ(s22.str(), "{-3^5, 1^9, 6}");
    expect_power_sums(p22, s22);

    Graph p23 = PauliSystem(2, 3).graph();
    Spectrum s23 = spectrum(p23);
    EXPECT_EQ(s23, Spectrum::from_integers({{-5, 27}, {3, 35}, {30, 1}}));
    expect_power_sums(p23, s23);
    EXPECT_EQ(char_poly_rational(p23), char_poly(p23));

    Graph p32 = PauliSystem(3, 2).graph();
    Spectrum s32 = spectrum(p32);
    EXPECT_EQ(s32, Spectrum::from_integers({{-7, 15}, {-1, 40}, {5, 24}, {25, 1}}));
    expect_power_sums(p32, s32);
}

TEST(spectral, multiplicities_match_rank_oracle) {
    for (auto [d, n] : {std::pair<unsigned, size_t>{2, 2}, {2, 3}, {3, 2}}) {
        Graph g = PauliSystem(d, n).graph();
        Spectrum s = spectrum(g);
        for (const auto &e : s.integer) {
            EXPECT_EQ(nullity_rational(g, e.value), e.mult) << "eigenvalue " << e.value;
        }
        EXPECT_EQ(nullity_rational(g, 2), 0u);
    }
}

TEST(spectral, quadratic_surds) {
    Spectrum c5 = spectrum(cycle_graph(5));
    EXPECT_EQ(c5, Spectrum::from_integers({{2, 1}}).add_quadratic(-1, 5, 2, 2));
    EXPECT_EQ(c5.str(), "{2, (-1±√5)/2^2}");
    expect_power_sums(cycle_graph(5), c5);
    EXPECT_EQ(nullity_rational_quadratic(cycle_graph(5), 1, -1), 4u);

    Graph path3(3);
    path3.add_edge(0, 1);
    path3.add_edge(1, 2);
    Spectrum p3 = spectrum(path3);
    EXPECT_EQ(p3, Spectrum::from_integers({{0, 1}}).add_quadratic(0, 2, 1, 1));
    EXPECT_EQ(p3.quadratic[0].factor(), IntPoly::quadratic(0, -2));
    expect_power_sums(path3, p3);

    // 6 ± 3√6 renders with the square pulled out of q = 54.
    QuadraticPair pair{6, 54, 1, 1};
    EXPECT_EQ(pair.str(), "6±3√6");
    EXPECT_EQ(pair.factor(), IntPoly::quadratic(-12, -18));
}

TEST(spectral, residual_when_unfactorable) {
    // Path on 4 vertices: x^4 - 3x^2 + 1 = (x^2 - x - 1)(x^2 + x - 1).
    Graph path4(4);
    for (size_t v = 0; v + 1 < 4; v++) {
        path4.add_edge(v, v + 1);
    }
    Spectrum p4 = spectrum(path4);
    EXPECT_EQ(p4, Spectrum().add_quadratic(-1, 5, 2, 1).add_quadratic(1, 5, 2, 1));
    EXPECT_TRUE(p4.fully_factored());
    // The 7-cycle has cubic minimal factors, which stay in the residual.
    Graph c7 = cycle_graph(7);
    Spectrum s7 = spectrum(c7);
    EXPECT_FALSE(s7.fully_factored());
    EXPECT_EQ(s7.residual.degree(), 6);
    EXPECT_TRUE(s7.to_json().contains("residual"));
    expect_power_sums(c7, s7);
}

TEST(spectral, random_power_sums) {
    std::mt19937 rng(77);
    for (int t = 0; t < 20; t++) {
        Graph g = random_graph(rng, 10, 0.4);
        expect_power_sums(g, spectrum(g));
    }
}

TEST(spectral, spectrum_json) {
    auto j = Spectrum::from_integers({{-3, 5}, {1, 9}}).add_quadratic(12, 24, 2, 1).to_json();
    EXPECT_EQ(j["integer"][0]["value"], -3);
    EXPECT_EQ(j["integer"][0]["mult"], 5);
    EXPECT_EQ(j["quadratic"][0]["q"], 24);
    EXPECT_FALSE(j.contains("residual"));
}

TEST(spectral, verify_srg) {
    auto c22 = verify_srg(PauliSystem(2, 2).graph());
    ASSERT_EQ(c22.verdict, SrgVerdict::StronglyRegular);
    EXPECT_EQ(*c22.params, (SrgParams{15, 6, 1, 3}));
    auto c23 = verify_srg(PauliSystem(2, 3).graph());
    EXPECT_EQ(*c23.params, (SrgParams{63, 30, 13, 15}));
    auto c24 = verify_srg(PauliSystem(2, 4).graph());
    ASSERT_EQ(c24.verdict, SrgVerdict::StronglyRegular);
    EXPECT_EQ(*c24.params, (SrgParams{255, 126, 61, 63}));
    EXPECT_EQ(verify_srg(PauliSystem(3, 2).graph()).verdict, SrgVerdict::NotStronglyRegular);
    EXPECT_EQ(verify_srg(complete_bipartite_graph(1, 3)).verdict, SrgVerdict::NotRegular);
    EXPECT_EQ(*verify_srg(petersen_graph()).params, (SrgParams{10, 3, 0, 1}));
    EXPECT_FALSE(verify_srg(PauliSystem(3, 2).graph()).params.has_value());
}

TEST(spectral, srg_agrees_with_spectrum) {
    // A connected regular graph is strongly regular iff it has 3 distinct eigenvalues.
    std::vector<Graph> graphs{PauliSystem(2, 2).graph(), PauliSystem(3, 2).graph(), petersen_graph(), hypercube_graph(3),
                              rook_graph(3, 4), cycle_graph(6), complement(line_graph(complete_graph(6)))};
    for (const auto &g : graphs) {
        Spectrum s = spectrum(g);
        auto check = verify_srg(g);
        EXPECT_EQ(check.verdict == SrgVerdict::StronglyRegular, s.distinct_count() == 3);
        if (check.params) {
            EXPECT_EQ(s, srg_spectrum(*check.params));
        }
    }
}

TEST(spectral, srg_multiplicities) {
    EXPECT_EQ(srg_multiplicities({15, 6, 1, 3}), (SrgEigen{1, -3, 9, 5}));
    EXPECT_EQ(srg_multiplicities({63, 30, 13, 15}), (SrgEigen{3, -5, 35, 27}));
    EXPECT_EQ(srg_multiplicities({40, 12, 2, 4}), (SrgEigen{2, -4, 24, 15}));
    EXPECT_THROW(srg_multiplicities({5, 2, 0, 1}), std::domain_error);
    EXPECT_TRUE((SrgParams{255, 126, 61, 63}).feasible());
    EXPECT_FALSE((SrgParams{15, 6, 1, 4}).feasible());
}

TEST(spectral, pg_params) {
    struct Row {
        long N, s, t, alpha, v, lines, D, lambda, mu;
    };
    for (auto r : {Row{2, 2, 2, 1, 15, 15, 6, 1, 3}, Row{3, 6, 4, 3, 63, 45, 30, 13, 15}, Row{4, 14, 8, 7, 255, 153, 126, 61, 63}}) {
        PgParams p = pg_params_for_qudits(2, r.N);
        EXPECT_EQ(p, (PgParams{r.s, r.t, r.alpha}));
        EXPECT_TRUE(p.valid());
        EXPECT_EQ(p.points(), r.v);
        EXPECT_EQ(p.lines(), r.lines);
        EXPECT_EQ(p.srg(), (SrgParams{r.v, r.D, r.lambda, r.mu}));
        // mu = r l + D and lambda = mu + r + l.
        SrgEigen e = srg_multiplicities(p.srg());
        EXPECT_EQ(p.srg().mu, e.r * e.l + r.D);
        EXPECT_EQ(p.srg().lambda, p.srg().mu + e.r + e.l);
    }
    EXPECT_EQ(pg_params_for_qudits(3, 2), (PgParams{3, 3, 1}));
    EXPECT_THROW(pg_params_for_qudits(6, 2), std::invalid_argument);
    EXPECT_THROW(pg_params_for_qudits(2, 1), std::invalid_argument);
    EXPECT_EQ(pg_params_for_qudits(4, 2), (PgParams{4, 4, 1}));
}

TEST(spectral, pseudo_geometric) {
    EXPECT_TRUE(is_pseudo_geometric(PauliSystem(2, 2).graph(), pg_params_for_qudits(2, 2)));
    EXPECT_TRUE(is_pseudo_geometric(PauliSystem(2, 3).graph(), pg_params_for_qudits(2, 3)));
    EXPECT_FALSE(is_pseudo_geometric(PauliSystem(3, 2).graph(), pg_params_for_qudits(3, 2)));
    EXPECT_FALSE(is_pseudo_geometric(petersen_graph(), pg_params_for_qudits(2, 2)));
}
