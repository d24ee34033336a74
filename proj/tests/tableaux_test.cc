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

#include <functional>

#include "qpa/rational.h"
#include "qpa/schur.h"
#include "qpa/spectrum.h"
#include "qpa/young.h"

using namespace qpa;

namespace {

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

// Brute force over all fillings of the diagram cells with letters 1..d,
// keeping those with weakly increasing rows and strictly increasing
// columns. Calls visit with the letter counts of every survivor.
void for_each_ssyt(const YoungDiagram &shape, int d, const std::function<void(const std::vector<long> &)> &visit) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < shape.d(); i++) {
        for (long j = 0; j < shape.rows[i]; j++) {
            cells.emplace_back(i, static_cast<int>(j));
        }
    }
    std::vector<std::vector<int>> t(shape.d(), std::vector<int>(shape.d() ? shape.rows[0] : 0, 0));
    std::function<void(size_t)> rec = [&](size_t c) {
        if (c == cells.size()) {
            std::vector<long> counts(d, 0);
            for (auto [i, j] : cells) {
                counts[t[i][j] - 1]++;
            }
            visit(counts);
            return;
        }
        auto [i, j] = cells[c];
        for (int v = 1; v <= d; v++) {
            if (j > 0 && t[i][j - 1] > v) {
                continue;
            }
            if (i > 0 && t[i - 1][j] >= v) {
                continue;
            }
            t[i][j] = v;
            rec(c + 1);
        }
    };
    rec(0);
}

long count_standard(const YoungDiagram &shape) {
    // Remove the largest entry from every corner in turn.
    long n = shape.size();
    if (n == 0) {
        return 1;
    }
    long total = 0;
    for (int i = 0; i < shape.d(); i++) {
        bool corner = shape.rows[i] > 0 && (i + 1 == shape.d() || shape.rows[i + 1] < shape.rows[i]);
        if (corner) {
            YoungDiagram smaller = shape;
            smaller.rows[i]--;
            total += count_standard(smaller);
        }
    }
    return total;
}

}  // namespace

TEST(YoungDiagram, EnumeratesPartitions) {
    auto a = enumerate_diagrams(2, 2);
    ASSERT_EQ(a.size(), 2u);
    EXPECT_EQ(a[0], YoungDiagram({2, 0}));
    EXPECT_EQ(a[1], YoungDiagram({1, 1}));
    auto b = enumerate_diagrams(0, 3);
    ASSERT_EQ(b.size(), 1u);
    EXPECT_EQ(b[0], YoungDiagram({0, 0, 0}));
    auto c = enumerate_diagrams(4, 2);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[2], YoungDiagram({2, 2}));
}

TEST(YoungDiagram, ParseAndPrint) {
    EXPECT_EQ(parse_diagram("7,5,3,1"), YoungDiagram({7, 5, 3, 1}));
    EXPECT_EQ(to_string(YoungDiagram({1, 0, -1})), "1,0,-1");
    EXPECT_THROW(parse_diagram("1,x"), std::invalid_argument);
}

TEST(YoungDiagram, SpechtDimensionMatchesTableauCount) {
    EXPECT_EQ(specht_dim(YoungDiagram({2, 0})), 1);
    EXPECT_EQ(specht_dim(YoungDiagram({1, 1})), 1);
    EXPECT_EQ(specht_dim(YoungDiagram({2, 1})), 2);
    for (long n = 1; n <= 8; n++) {
        for (const YoungDiagram &s : enumerate_diagrams(n, 4)) {
            EXPECT_EQ(specht_dim(s), count_standard(s)) << to_string(s);
        }
    }
}

TEST(YoungDiagram, WeylDimensionMatchesTableauCount) {
    EXPECT_EQ(weyl_dim(YoungDiagram({1, 0}), 2), 2);
    EXPECT_EQ(weyl_dim(YoungDiagram({2, 0}), 2), 3);
    EXPECT_EQ(weyl_dim(YoungDiagram({1, 0, -1}), 3), 8);
    EXPECT_EQ(weyl_dim(YoungDiagram({2, 0, 0})), 6);
    for (int d = 1; d <= 4; d++) {
        for (long n = 0; n <= 5; n++) {
            for (const YoungDiagram &s : enumerate_diagrams(n, d)) {
                long count = 0;
                for_each_ssyt(s, d, [&](const std::vector<long> &) { count++; });
                EXPECT_EQ(weyl_dim(s), count) << to_string(s);
            }
        }
    }
}

TEST(GTPattern, CountsAndRanges) {
    auto two = enumerate_gt_patterns(YoungDiagram({2, 0}));
    ASSERT_EQ(two.size(), 3u);
    std::vector<long> bottoms;
    for (const GTPattern &w : two) {
        bottoms.push_back(w.w(1, 1));
    }
    std::sort(bottoms.begin(), bottoms.end());
    EXPECT_EQ(bottoms, (std::vector<long>{0, 1, 2}));
    auto column = enumerate_gt_patterns(YoungDiagram({1, 1}));
    ASSERT_EQ(column.size(), 1u);
    EXPECT_EQ(column[0].w(1, 1), 1);
    EXPECT_EQ(enumerate_gt_patterns(YoungDiagram({2, 1, 0})).size(), 8u);
}

TEST(GTPattern, OccupanciesSumToSize) {
    for (const GTPattern &w : enumerate_gt_patterns(YoungDiagram({4, 2, 1}))) {
        long total = 0;
        for (int b = 1; b <= 3; b++) {
            total += w.occupancy(b);
            long rows = 0;
            for (int l = 1; l <= 3; l++) {
                rows += w.row_occupancy(b, l);
            }
            EXPECT_EQ(rows, w.occupancy(b));
        }
        EXPECT_EQ(total, 7);
    }
}

TEST(Schur, SmallValues) {
    EXPECT_EQ(schur_polynomial(YoungDiagram({1, 0}), {q(1, 2), q(1, 2)}), 1);
    EXPECT_EQ(schur_polynomial(YoungDiagram({1, 1}), {q(3, 4), q(1, 4)}), q(3, 16));
    EXPECT_EQ(schur_polynomial(YoungDiagram({2, 0}), {q(3, 4), q(1, 4)}), q(13, 16));
}

TEST(Schur, AgreesWithTableauEnumeration) {
    std::vector<Rational> x = {q(2, 3), q(1, 5), q(3, 7), q(1, 11)};
    for (int d = 1; d <= 4; d++) {
        std::vector<Rational> xd(x.begin(), x.begin() + d);
        for (long n = 0; n <= 5; n++) {
            for (const YoungDiagram &s : enumerate_diagrams(n, d)) {
                Rational brute = 0;
                for_each_ssyt(s, d, [&](const std::vector<long> &c) {
                    Rational mono = 1;
                    for (int i = 0; i < d; i++) {
                        mono *= power(xd[i], c[i]);
                    }
                    brute += mono;
                });
                EXPECT_EQ(schur_polynomial(s, xd), brute) << to_string(s);
                EXPECT_EQ(schur_jacobi_trudi(s, xd), brute) << to_string(s);
            }
        }
    }
}

TEST(SchurWeyl, DistributionExamples) {
    Spectrum p = parse_spectrum("3/4,1/4");
    auto dist = sw_distribution(2, p);
    ASSERT_EQ(dist.size(), 2u);
    EXPECT_EQ(dist[0].second, q(13, 16));
    EXPECT_EQ(dist[1].second, q(3, 16));
    auto one = sw_distribution(1, parse_spectrum("1/2,1/3,1/6"));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].second, 1);
    Rational total = 0;
    for (const auto &[s, mass] : sw_distribution(4, parse_spectrum("1/2,1/3,1/6"))) {
        total += mass;
    }
    EXPECT_EQ(total, 1);
}

TEST(Rsk, InsertionShapes) {
    EXPECT_EQ(rsk_shape({1, 1, 1}, 2), YoungDiagram({3, 0}));
    EXPECT_EQ(rsk_shape({2, 1}, 2), YoungDiagram({1, 1}));
    EXPECT_EQ(rsk_shape({1, 3, 2, 2}, 3), YoungDiagram({3, 1, 0}));
}

TEST(Rsk, SampledFrequencyMatchesMass) {
    const int samples = 100000;
    int hits = 0;
    for (int i = 0; i < samples; i++) {
        hits += sample_sw(2, {0.75, 0.25}, 1000 + i) == YoungDiagram({2, 0});
    }
    EXPECT_NEAR(hits / static_cast<double>(samples), 13.0 / 16.0, 0.01);
}

TEST(Rsk, SamplingIsSeeded) {
    EXPECT_EQ(sample_sw(50, {0.5, 0.3, 0.2}, 7), sample_sw(50, {0.5, 0.3, 0.2}, 7));
}
