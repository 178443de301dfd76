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

// Acceptance run: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "../operator_matrices.h"
#include "pauliscope/claims.h"
#include "pauliscope/pauli_system.h"

using namespace pauliscope;

namespace {

const std::map<int, std::string> kTitles{
    {1, "two-qubit product and commutation tables"},
    {2, "invariants of P[2,2] and its subgraphs"},
    {3, "isomorphisms with L(K6), Petersen and L(K7)"},
    {4, "W(2) lines, hyperplanes, spreads, ovoids, triads"},
    {5, "Mermin square certificate"},
    {6, "(10_3), (9_2 6_3) and entangled line bases"},
    {7, "projective line over M2(Z2)"},
    {8, "counting laws and generators for N = 2, 3, 4"},
    {9, "spectra and strong regularity"},
    {10, "three-qubit blocks"},
    {11, "two-qutrit system and W9"},
    {12, "property suites"},
};

struct Tally {
    size_t claims = 0, bad = 0, flagged = 0;
    double seconds = 0;
    std::vector<std::string> failures;
};

// Commutation from the symplectic form against explicit matrices.
template <typename T>
size_t matrix_disagreements(unsigned d, size_t n, size_t samples, unsigned seed) {
    PauliSystem sys(d, n);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<size_t> pick(0, sys.size() - 1);
    size_t bad = 0;
    for (size_t k = 0; k < samples; k++) {
        const auto &p = sys.op(pick(rng));
        const auto &q = sys.op(pick(rng));
        auto mp = pauliscope::testing::to_matrix<T>(p);
        auto mq = pauliscope::testing::to_matrix<T>(q);
        bool matrices = pauliscope::testing::mat_mul(mp, mq) == pauliscope::testing::mat_mul(mq, mp);
        bad += matrices != commutes(p, q);
    }
    return bad;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    std::map<int, Tally> tally;
    for (Scope scope : {Scope::TwoQubit, Scope::NQubit, Scope::RingLine, Scope::Qutrit}) {
        auto start = clock::now();
        auto claims = verify_claims(scope);
        double seconds = std::chrono::duration<double>(clock::now() - start).count();
        std::map<int, bool> touched;
        for (const auto &c : claims) {
            if (c.criterion == 0) {
                continue;
            }
            Tally &t = tally[c.criterion];
            t.claims++;
            if (!c.acceptable()) {
                t.bad++;
                t.failures.push_back(c.line());
            }
            t.flagged += c.status() == ClaimStatus::Flagged;
            touched[c.criterion] = true;
        }
        for (auto [criterion, _] : touched) {
            tally[criterion].seconds += seconds;
        }
    }

    auto start = clock::now();
    Tally &props = tally[12];
    for (auto [d, n] : {std::pair<unsigned, size_t>{2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        size_t bad = d == 2 ? matrix_disagreements<pauliscope::testing::Gauss>(d, n, 100, 7 + static_cast<unsigned>(n))
                            : matrix_disagreements<pauliscope::testing::Eisen>(d, n, 100, 11 + static_cast<unsigned>(n));
        props.claims++;
        if (bad) {
            props.bad++;
            props.failures.push_back("matrix commutation oracle disagrees on " + std::to_string(bad) + " pairs of P[" + std::to_string(d) + "," +
                                     std::to_string(n) + "]");
        }
    }
    props.seconds += std::chrono::duration<double>(clock::now() - start).count();

    bool all = true;
    for (const auto &[criterion, title] : kTitles) {
        const Tally &t = tally[criterion];
        bool ok = t.claims > 0 && t.bad == 0;
        all = all && ok;
        std::printf("%s criterion %d: %s (%zu checks", ok ? "PASS" : "FAIL", criterion, title.c_str(), t.claims);
        if (t.flagged) {
            std::printf(", flagged discrepancies: %zu", t.flagged);
        }
        std::printf(", %.2fs)\n", t.seconds);
        for (const auto &f : t.failures) {
            std::printf("    %s\n", f.c_str());
        }
    }
    return all ? 0 : 1;
}
