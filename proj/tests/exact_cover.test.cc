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


#include "pauliscope/exact_cover.h"

#include <random>

#include "gtest/gtest.h"

using namespace pauliscope;

TEST(exact_cover, knuth_example) {
    // Knuth's 7-column dancing links example; unique solution {0, 3, 4}.
    ExactCover ec(7);
    ec.add_row({2, 4, 5});
    ec.add_row({0, 3, 6});
    ec.add_row({1, 2, 5});
    ec.add_row({0, 3});
    ec.add_row({1, 6});
    ec.add_row({3, 4, 6});
    auto all = ec.all();
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0], (std::vector<size_t>{0, 3, 4}));
    EXPECT_EQ(ec.find_first(), all[0]);
}

TEST(exact_cover, no_solution_and_errors) {
    ExactCover ec(3);
    ec.add_row({0, 1});
    ec.add_row({1, 2});
    EXPECT_FALSE(ec.find_first().has_value());
    EXPECT_THROW(ec.add_row({3}), std::out_of_range);
    EXPECT_THROW(ec.add_row({}), std::invalid_argument);
    EXPECT_EQ(ec.num_rows(), 2u);
}

TEST(exact_cover, matches_brute_force) {
    std::mt19937 rng(17);
    for (int t = 0; t < 40; t++) {
        size_t cols = 6;
        size_t rows = 12;
        std::vector<uint32_t> masks;
        ExactCover ec(cols);
        for (size_t r = 0; r < rows; r++) {
            uint32_t m = 0;
            while (m == 0) {
                m = rng() & 63;
            }
            masks.push_back(m);
            std::vector<size_t> c;
            for (size_t k = 0; k < cols; k++) {
                if (m >> k & 1) {
                    c.push_back(k);
                }
            }
            ec.add_row(c);
        }
        std::vector<std::vector<size_t>> brute;
        for (uint32_t pick = 0; pick < (1u << rows); pick++) {
            uint32_t seen = 0;
            bool ok = true;
            for (size_t r = 0; r < rows && ok; r++) {
                if (pick >> r & 1) {
                    ok = (seen & masks[r]) == 0;
                    seen |= masks[r];
                }
            }
            if (ok && seen == 63) {
                std::vector<size_t> s;
                for (size_t r = 0; r < rows; r++) {
                    if (pick >> r & 1) {
                        s.push_back(r);
                    }
                }
                brute.push_back(s);
            }
        }
        auto got = ec.all();
        std::sort(got.begin(), got.end());
        std::sort(brute.begin(), brute.end());
        EXPECT_EQ(got, brute);
    }
}
