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

#include <cmath>

#include "qpa/fidelity.h"
#include "qpa/protocol.h"
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

GTPattern two_row(long top1, long top2, long bottom) {
    return GTPattern({{bottom}, {top1, top2}});
}

}  // namespace

TEST(UtilityComponent, Examples) {
    EXPECT_EQ(utility_component(YoungDiagram({2, 0}), {2, 0}, two_row(2, 0, 0)), 1);
    EXPECT_EQ(utility_component(YoungDiagram({2, 0}), {2, 0}, two_row(2, 0, 1)), 0);
    EXPECT_EQ(utility_component(YoungDiagram({1, 1}), {0, 1}, two_row(1, 1, 1)), q(1, 2));
}

TEST(UtilityComponent, SymmetricSubspaceReduction) {
    // On a one-row diagram with every box taken from the top row, the
    // component reduces to falling(#_2, m) / falling(n, m).
    for (long n = 1; n <= 8; n++) {
        for (long m = 1; m <= n; m++) {
            for (const GTPattern &w : enumerate_gt_patterns(YoungDiagram({n, 0}))) {
                Rational want = falling(Rational(w.occupancy(2)), m) / falling(Rational(n), m);
                EXPECT_EQ(utility_component(YoungDiagram({n, 0}), {m, 0}, w), want);
            }
        }
    }
}

TEST(SectorFidelity, AllSiteExamples) {
    Spectrum p = parse_spectrum("3/4,1/4");
    EXPECT_EQ(sector_fidelity_all(YoungDiagram({2, 0}), 1, {2, 0}, p), q(9, 13));
    EXPECT_EQ(sector_fidelity_all(YoungDiagram({2, 0}), 1, {2, 0}, parse_spectrum("1,0")), 1);
    EXPECT_EQ(sector_fidelity_all(YoungDiagram({1, 1}), 1, {0, 1}, p), q(1, 2));
    EXPECT_EQ(sector_fidelity_all(YoungDiagram({1, 1}), 1, {0, 1}, parse_spectrum("2/3,1/3")), q(1, 2));
}

TEST(FSymbols, Examples) {
    YoungDiagram s({2, 1, 0});
    YoungDiagram l({1, 1, 0});
    EXPECT_EQ(f_symbol_sq(s, l, 1, 1), 1);
    EXPECT_EQ(f_symbol_sq(s, l, 2, 1), 0);
    EXPECT_EQ(f_symbol_sq(s, l, 3, 1), 0);
    EXPECT_EQ(f_symbol_sq(YoungDiagram({2, 0}), YoungDiagram({0, 0}), 1, 2), 1);
}

TEST(SectorFidelity, OneSiteExamples) {
    Spectrum p = parse_spectrum("3/4,1/4");
    EXPECT_EQ(sector_fidelity_one(YoungDiagram({2, 0}), 1, YoungDiagram({1, 0}), p), q(21, 26));
}

TEST(SectorFidelity, ObjectivesAgreeForOneOutput) {
    for (const Spectrum &p : {parse_spectrum("1/2,3/10,1/5"), parse_spectrum("7/10,1/5,1/10")}) {
        for (long n = 1; n <= 6; n++) {
            for (const YoungDiagram &s : enumerate_diagrams(n, 3)) {
                for (int k = 1; k <= 3; k++) {
                    for (const RemovalVector &r : enumerate_environments(s, 1)) {
                        EXPECT_EQ(sector_fidelity_all(s, k, r, p), sector_fidelity_one(s, k, apply_removal(s, r), p));
                    }
                }
            }
        }
    }
}

TEST(SectorFidelity, OverhangWithRoomMatchesSingleRowRemoval) {
    Spectrum p = parse_spectrum("1/2,3/10,1/5");
    for (long n = 1; n <= 7; n++) {
        for (const YoungDiagram &s : enumerate_diagrams(n, 3)) {
            for (int k = 1; k <= 2; k++) {
                if (s.gap(k, k + 1) < 1) {
                    continue;
                }
                RemovalVector one(3, 0);
                one[k - 1] = 1;
                YoungDiagram mu = apply_removal(s, overhang_removal(s, k, 1));
                EXPECT_EQ(sector_fidelity_one(s, k, mu, p), sector_fidelity_all(s, k, one, p));
            }
        }
    }
}

TEST(OptimalChannel, TwoBoxExample) {
    SectorOptimum best = optimal_sector_channel(YoungDiagram({2, 0}), 1, 1, parse_spectrum("3/4,1/4"), Objective::all_site);
    EXPECT_EQ(best.best.removal, (RemovalVector{1, 0}));
    EXPECT_EQ(best.best.value, q(21, 26));
    for (const ChannelChoice &c : best.ranking) {
        if (c.removal == RemovalVector{0, 1}) {
            EXPECT_EQ(c.value, q(9, 26));
        }
    }
}

TEST(Overall, Examples) {
    for (const char *text : {"1/2,1/3,1/6", "3/4,1/4", "2/5,7/20,1/4"}) {
        Spectrum p = parse_spectrum(text);
        for (Objective obj : {Objective::all_site, Objective::one_site}) {
            OverallOptions opt;
            opt.objective = obj;
            EXPECT_EQ(overall_fidelity(1, 1, 1, p, opt).overall, p.p(1));
            for (int k = 1; k <= p.d(); k++) {
                // Keeping the single box is the identity channel.
                OverallOptions identity = opt;
                identity.rule = Rule::explicit_removal;
                identity.removal.assign(p.d(), 0);
                identity.removal[0] = 1;
                EXPECT_EQ(overall_fidelity(1, 1, k, p, identity).overall, p.p(k));
                EXPECT_GE(overall_fidelity(1, 1, k, p, opt).overall, p.p(k));
            }
        }
    }
    // For the smallest eigenvalue a covariant channel that swaps the box into
    // the conjugate slot does better than doing nothing.
    EXPECT_EQ(overall_fidelity(1, 1, 3, parse_spectrum("1/2,1/3,1/6"), OverallOptions{}).overall, q(17, 48));
    OverallOptions opt;
    EXPECT_EQ(overall_fidelity(2, 1, 1, parse_spectrum("3/4,1/4"), opt).overall, q(3, 4));
}

TEST(Overall, PureStateOrientation) {
    // Three inputs, two outputs: the target is already present.
    OverallOptions opt;
    EXPECT_EQ(overall_fidelity(3, 2, 1, parse_spectrum("1,0"), opt).overall, 1);
    // Two inputs, three outputs: universal symmetric cloning.
    opt.allow_cloning = true;
    EXPECT_EQ(overall_fidelity(2, 3, 1, parse_spectrum("1,0"), opt).overall, q(3, 4));
    opt.objective = Objective::one_site;
    EXPECT_EQ(overall_fidelity(2, 3, 1, parse_spectrum("1,0"), opt).overall, q(2 * 5 + 1, 3 * 4));
}

TEST(Overall, OptimalRuleNeverLoses) {
    Spectrum p = parse_spectrum("1/2,3/10,1/5");
    for (long n = 2; n <= 6; n++) {
        for (long m = 1; m <= 2; m++) {
            for (int k = 1; k <= 3; k++) {
                OverallOptions a;
                OverallOptions b;
                b.rule = Rule::optimal;
                EXPECT_LE(overall_fidelity(n, m, k, p, a).overall, overall_fidelity(n, m, k, p, b).overall);
            }
        }
    }
}

TEST(Overall, RejectsCloningWithoutFlag) {
    EXPECT_THROW(overall_fidelity(1, 2, 1, parse_spectrum("3/4,1/4"), OverallOptions{}), std::invalid_argument);
}

TEST(Overall, FlagsSectorsWithoutRoomForOverhang) {
    FidelityReport rep = overall_fidelity(2, 2, 1, parse_spectrum("1/2,3/10,1/5"), OverallOptions{});
    for (const SectorRow &row : rep.sectors) {
        EXPECT_EQ(row.fallback, row.sigma.row(1) < 2) << to_string(row.sigma);
    }
}

TEST(Losses, Transforms) {
    Losses one = loss_transforms(1.0);
    EXPECT_EQ(one.infidelity, 0.0);
    EXPECT_EQ(one.trace, 0.0);
    EXPECT_TRUE(std::isinf(one.cross_entropy));
    EXPECT_EQ(loss_transforms(0.0).infidelity, 1.0);
    EXPECT_DOUBLE_EQ(loss_transforms(0.75).trace, 0.25);
}
