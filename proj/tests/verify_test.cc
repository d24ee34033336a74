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

#include "qpa/verify.h"

using namespace qpa;

namespace {

Rational q(long a, long b) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

SuiteOptions small() {
    SuiteOptions o;
    o.cases = 60;
    o.workers = 2;
    return o;
}

}  // namespace

TEST(Verify, QuadraticFit) {
    std::vector<Rational> x = {q(1, 5), q(2, 5), q(1, 2)};
    std::vector<Rational> y;
    for (const Rational &t : x) {
        y.push_back(3 - 2 * t + 7 * t * t);
    }
    EXPECT_EQ(fit_quadratic(x, y), (std::vector<Rational>{3, -2, 7}));
    EXPECT_THROW(fit_quadratic({1, 2}, {1, 2}), std::invalid_argument);
}

TEST(Verify, PositivityOnUnitInterval) {
    EXPECT_TRUE(positive_on_unit_interval({0, 3, -3}));
    EXPECT_FALSE(positive_on_unit_interval({0, 0, 0}));
    EXPECT_FALSE(positive_on_unit_interval({q(-1, 10), 1, 0}));
    EXPECT_FALSE(positive_on_unit_interval({q(1, 4), -1, 1}));
    EXPECT_TRUE(positive_on_unit_interval({q(1, 4) + q(1, 100), -1, 1}));
}

TEST(Verify, UnknownSuiteThrows) {
    EXPECT_THROW(run_suite("nope", SuiteOptions{}), std::invalid_argument);
}

TEST(Verify, RandomizedSuitesAreReproducible) {
    for (const char *name : {"monotonicity", "log-convexity", "splitting"}) {
        SuiteOptions a = small();
        SuiteOptions b = small();
        b.workers = 1;
        SuiteResult ra = run_suite(name, a);
        SuiteResult rb = run_suite(name, b);
        EXPECT_TRUE(ra.passed) << name << ": " << ra.counterexample;
        EXPECT_EQ(ra.cases, rb.cases);
        EXPECT_EQ(ra.details, rb.details);
    }
}

TEST(Verify, SmallExhaustiveSuitesPass) {
    SuiteOptions o;
    o.max_n = 5;
    o.max_d = 3;
    for (const char *name : {"normalization", "f-symbols", "majorization", "occupancy", "depolarizing"}) {
        SuiteResult r = run_suite(name, o);
        EXPECT_TRUE(r.passed) << name << ": " << r.counterexample;
        EXPECT_GT(r.cases, 0) << name;
    }
}
