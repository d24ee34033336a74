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
#include <numeric>

#include "qpa/gyd.h"
#include "qpa/path_graph.h"
#include "qpa/schur.h"
#include "qpa/young.h"

using namespace qpa;

namespace {

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

ConstraintMap constraint(const GeneralizedDiagram &g, int lo, int hi) {
    ConstraintMap x;
    x.lower.assign(g.size(), lo);
    x.upper.assign(g.size(), hi);
    return x;
}

std::vector<std::vector<int>> permutations(int d) {
    std::vector<int> pi(d);
    std::iota(pi.begin(), pi.end(), 1);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(pi);
    } while (std::next_permutation(pi.begin(), pi.end()));
    return out;
}

}  // namespace

TEST(Gyd, ParseCanonicalizesTranslation) {
    EXPECT_EQ(parse_gyd("5,7;6,7"), parse_gyd("0,0;1,0"));
    EXPECT_EQ(to_string(parse_gyd("2,3;2,4")), "0,0;0,1");
}

TEST(Gyd, EnumerationExamples) {
    GeneralizedDiagram cell = parse_gyd("0,0");
    EXPECT_EQ(enumerate_gwt(cell, 3, ConstraintMap::trivial(cell, 3)).size(), 3u);
    GeneralizedDiagram column = parse_gyd("0,0;1,0");
    auto fills = enumerate_gwt(column, 2, ConstraintMap::trivial(column, 2));
    ASSERT_EQ(fills.size(), 1u);
    EXPECT_EQ(fills[0], (Filling{1, 2}));
    GeneralizedDiagram hook = diagram_cells(YoungDiagram({2, 1, 0}));
    EXPECT_EQ(static_cast<long>(enumerate_gwt(hook, 3, ConstraintMap::trivial(hook, 3)).size()), weyl_dim(YoungDiagram({2, 1, 0})));
}

TEST(Gyd, DisconnectedCellsAreIndependent) {
    GeneralizedDiagram apart = parse_gyd("0,0;2,2");
    EXPECT_EQ(enumerate_gwt(apart, 3, ConstraintMap::trivial(apart, 3)).size(), 9u);
}

TEST(Gyd, ConstrainedSchurExamples) {
    std::vector<Rational> x = {q(1, 2), q(1, 3), q(1, 6)};
    GeneralizedDiagram cell = parse_gyd("0,0");
    EXPECT_EQ(constrained_schur(cell, 3, constraint(cell, 2, 3), x), x[1] + x[2]);
    GeneralizedDiagram column = parse_gyd("0,0;1,0");
    EXPECT_EQ(constrained_schur(column, 2, ConstraintMap::trivial(column, 2), {q(3, 4), q(1, 4)}), q(3, 16));
    EXPECT_EQ(constrained_schur(GeneralizedDiagram(), 3, ConstraintMap{}, x), 1);
}

TEST(Gyd, OrdinaryDiagramsMatchSchur) {
    std::vector<Rational> x = {q(2, 3), q(1, 5), q(3, 7)};
    for (long n = 0; n <= 6; n++) {
        for (const YoungDiagram &s : enumerate_diagrams(n, 3)) {
            GeneralizedDiagram g = diagram_cells(s);
            EXPECT_EQ(constrained_schur(g, 3, ConstraintMap::trivial(g, 3), x), schur_polynomial(s, x)) << to_string(s);
        }
    }
}

TEST(Gyd, WeylAverageExamples) {
    std::vector<Rational> x = {q(1, 2), q(1, 3), q(1, 6)};
    GeneralizedDiagram g = diagram_cells(YoungDiagram({2, 1, 0}));
    auto constant = [](const Filling &) { return Rational(5); };
    EXPECT_EQ(constrained_weyl_average(g, 3, ConstraintMap::trivial(g, 3), x, constant), 5);
    GeneralizedDiagram cell = parse_gyd("0,0");
    auto top = [](const Filling &w) { return Rational(w[0] == 3 ? 1 : 0); };
    EXPECT_EQ(constrained_weyl_average(cell, 3, ConstraintMap::trivial(cell, 3), x, top), x[2] / (x[0] + x[1] + x[2]));
    // Strict columns cannot fit into a single letter.
    GeneralizedDiagram column = parse_gyd("0,0;1,0");
    EXPECT_EQ(constrained_weyl_average(column, 3, constraint(column, 2, 2), x, constant), 0);
}

TEST(Gyd, LowestAndHighestFillings) {
    GeneralizedDiagram g = diagram_cells(YoungDiagram({2, 1, 0}));
    EXPECT_EQ(lowest_filling(g, 3), (Filling{1, 1, 2}));
    EXPECT_EQ(highest_filling(g, 3), (Filling{2, 3, 3}));
}

TEST(PathGraph, IdentityAndReversal) {
    PathGraph id = PathGraph::from_permutation({1, 2, 3});
    PathGraph rev = PathGraph::from_permutation({3, 2, 1});
    for (int b = 2; b <= 3; b++) {
        for (int a = 1; a < b; a++) {
            EXPECT_EQ(id.edge(a, b), EdgeType::back);
            EXPECT_EQ(rev.edge(a, b), EdgeType::forward);
        }
    }
    EXPECT_THROW(PathGraph::from_permutation({1, 1, 3}), std::invalid_argument);
}

TEST(PathGraph, AllPermutationsGiveDistinctGraphs) {
    std::vector<PathGraph> graphs;
    for (const auto &pi : permutations(3)) {
        graphs.push_back(PathGraph::from_permutation(pi));
    }
    ASSERT_EQ(graphs.size(), 6u);
    for (size_t i = 0; i < graphs.size(); i++) {
        for (size_t j = i + 1; j < graphs.size(); j++) {
            EXPECT_FALSE(graphs[i] == graphs[j]);
        }
    }
}

TEST(PathGraph, TwoLetterEdgeVariable) {
    PathGraph g = PathGraph::from_permutation({1, 2});
    for (const GTPattern &w : enumerate_gt_patterns(YoungDiagram({2, 0}))) {
        EXPECT_EQ(wt_to_edge_vars(w, g)[0][1], 2 - w.w(1, 1));
    }
}

TEST(PathGraph, LowestWeightOccupancies) {
    YoungDiagram s({4, 2, 1});
    for (const auto &pi : permutations(3)) {
        PathGraph g = PathGraph::from_permutation(pi);
        GTPattern lw = lowest_weight_pattern(s, g);
        for (int j = 1; j <= 3; j++) {
            int inv = static_cast<int>(std::find(pi.begin(), pi.end(), j) - pi.begin()) + 1;
            EXPECT_EQ(lw.occupancy(j), s.row(inv)) << "letter " << j;
        }
    }
}

TEST(PathGraph, RoundTripAndMonomialFactorization) {
    std::vector<Rational> x = {q(1, 2), q(1, 3), q(1, 6)};
    for (const auto &pi : permutations(3)) {
        PathGraph g = PathGraph::from_permutation(pi);
        for (const YoungDiagram &s : enumerate_diagrams(5, 3)) {
            GTPattern lw = lowest_weight_pattern(s, g);
            for (const GTPattern &w : enumerate_gt_patterns(s)) {
                EdgeVariables t = wt_to_edge_vars(w, g);
                EXPECT_EQ(edge_vars_to_wt(t, s, g).level(1), w.level(1));
                EXPECT_EQ(edge_vars_to_wt(t, s, g).level(2), w.level(2));
                Rational lhs = 1;
                for (int j = 1; j <= 3; j++) {
                    long e = w.occupancy(j) - lw.occupancy(j);
                    lhs *= e >= 0 ? power(x[j - 1], e) : 1 / power(x[j - 1], -e);
                }
                Rational rhs = 1;
                for (int b = 2; b <= 3; b++) {
                    for (int a = 1; a < b; a++) {
                        EXPECT_GE(t[a - 1][b - 1], 0);
                        rhs *= power(edge_ratio(g, a, b, x), t[a - 1][b - 1]);
                    }
                }
                EXPECT_EQ(lhs, rhs);
            }
        }
    }
}

TEST(PathGraph, RejectsInadmissibleVariables) {
    PathGraph g = PathGraph::from_permutation({1, 2});
    EdgeVariables t = {{0, 3}, {0, 0}};
    EXPECT_THROW(edge_vars_to_wt(t, YoungDiagram({2, 0}), g), InadmissibleEdgeVariables);
}
