// Copyright 2026 The QPA Calculator Authors
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


#include <gtest/gtest.h>

#include <algorithm>

#include "qpa/protocol.h"
#include "qpa/spectrum.h"
#include "qpa/young.h"

using namespace qpa;

namespace {

std::vector<Rational> rationals(const std::string &text) {
    return parse_rational_list(text);
}

// Every composition of m into d nonnegative parts.
void compositions(long m, int d, std::vector<long> &prefix, std::vector<RemovalVector> &out) {
    if (static_cast<int>(prefix.size()) == d - 1) {
        prefix.push_back(m);
        out.push_back(prefix);
        prefix.pop_back();
        return;
    }
    for (long r = 0; r <= m; r++) {
        prefix.push_back(r);
        compositions(m - r, d, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

TEST(Reindex, MovesTargetToTheEnd) {
    Reindexed a = reindex_spectrum(parse_spectrum("3/4,1/4"), 1);
    EXPECT_EQ(a.q, rationals("1/4,3/4"));
    EXPECT_EQ(a.sigma, (std::vector<int>{2, 1}));
    EXPECT_EQ(reindex_spectrum(parse_spectrum("1/2,1/3,1/6"), 2).q, rationals("1/2,1/6,1/3"));
    EXPECT_EQ(reindex_spectrum(parse_spectrum("1,0"), 1).q, rationals("0,1"));
    Reindexed b = reindex_spectrum(parse_spectrum("1/2,1/3,1/6"), 2);
    EXPECT_EQ(restore_spectrum(b), rationals("1/2,1/3,1/6"));
}

TEST(Overhang, Examples) {
    YoungDiagram s({7, 5, 3, 1});
    EXPECT_EQ(overhang_removal(s, 2, 4), (RemovalVector{0, 2, 2, 0}));
    EXPECT_EQ(apply_removal(s, overhang_removal(s, 2, 4)), YoungDiagram({7, 3, 1, 1}));
    EXPECT_EQ(terminal_index(s, 2, 4), 3);
    EXPECT_EQ(apply_removal(YoungDiagram({2, 0}), overhang_removal(YoungDiagram({2, 0}), 1, 1)), YoungDiagram({1, 0}));
}

TEST(Overhang, TwoRowColumnGoesToTheLastRow) {
    // Neither row 1 nor row 2 overhangs by two boxes, so the second box
    // comes out of row 3 and row 2 slides up.
    YoungDiagram s({1, 1, 0});
    EXPECT_EQ(terminal_index(s, 1, 2), 3);
    EXPECT_EQ(apply_removal(s, overhang_removal(s, 1, 2)), YoungDiagram({1, 0, -1}));
    EXPECT_FALSE(overhang_supported(s, 1, 2));
    EXPECT_TRUE(overhang_supported(s, 1, 1));
}

TEST(Overhang, ZeroRemovalStaysAtTarget) {
    EXPECT_EQ(terminal_index(YoungDiagram({4, 2, 0}), 2, 0), 2);
}

TEST(Overhang, MacroscopicTerminalIndex) {
    EXPECT_EQ(terminal_index_macro({0.75, 0.25}, 1, 0.25), 1);
    EXPECT_EQ(terminal_index_macro({0.5, 0.3, 0.2}, 1, 0.25), 2);
}

TEST(Environments, Examples) {
    auto a = enumerate_environments(YoungDiagram({2, 0}), 1);
    std::sort(a.begin(), a.end());
    EXPECT_EQ(a, (std::vector<RemovalVector>{{0, 1}, {1, 0}}));
    EXPECT_EQ(enumerate_environments(YoungDiagram({1, 1}), 1), (std::vector<RemovalVector>{{0, 1}}));
    auto b = enumerate_environments(YoungDiagram({2, 1, 0}), 2);
    std::sort(b.begin(), b.end());
    EXPECT_EQ(b, (std::vector<RemovalVector>{{0, 0, 2}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}}));
}

TEST(Environments, MatchBruteForceStripFilter) {
    for (int d = 2; d <= 4; d++) {
        for (long n = 0; n <= 6; n++) {
            for (const YoungDiagram &s : enumerate_diagrams(n, d)) {
                for (long m = 1; m <= 4; m++) {
                    std::vector<RemovalVector> all, want;
                    std::vector<long> prefix;
                    compositions(m, d, prefix, all);
                    for (const RemovalVector &r : all) {
                        bool strip = true;
                        for (int i = 1; i < d; i++) {
                            strip = strip && r[i - 1] <= s.gap(i, i + 1);
                        }
                        if (strip) {
                            want.push_back(r);
                        }
                    }
                    auto got = enumerate_environments(s, m);
                    std::sort(got.begin(), got.end());
                    std::sort(want.begin(), want.end());
                    EXPECT_EQ(got, want) << to_string(s) << " m=" << m;
                    for (const RemovalVector &r : got) {
                        EXPECT_TRUE(is_valid_removal(s, r));
                        EXPECT_TRUE(apply_removal(s, r).is_dominant());
                    }
                }
            }
        }
    }
}

TEST(Overhang, IsAlwaysAnAdmissibleEnvironment) {
    for (long n = 1; n <= 7; n++) {
        for (const YoungDiagram &s : enumerate_diagrams(n, 3)) {
            for (int k = 1; k <= 3; k++) {
                for (long m = 1; m <= 5; m++) {
                    RemovalVector r = overhang_removal(s, k, m);
                    EXPECT_TRUE(is_valid_removal(s, r)) << to_string(s) << " k=" << k << " m=" << m;
                    EXPECT_EQ(removal_total(r), m);
                }
            }
        }
    }
}
