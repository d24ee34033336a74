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

#ifndef QPA_VERIFY_H
#define QPA_VERIFY_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpa/rational.h"

namespace qpa {

inline constexpr uint64_t kDefaultSeed = 20260418;

/// Zero fields select each suite's own default.
struct SuiteOptions {
    long max_n = 0;
    int max_d = 0;
    long cases = 0;
    uint64_t seed = kDefaultSeed;
    int workers = 0;
};

struct SuiteResult {
    std::string name;
    bool passed = true;
    long cases = 0;
    long violations = 0;
    /// First violating instance, smallest first for exhaustive suites.
    std::string counterexample;
    uint64_t seed = 0;
    /// Ordered key/value facts (window endpoints, fitted coefficients...).
    std::vector<std::pair<std::string, std::string>> details;
};

/// Names accepted by run_suite, in a fixed order.
const std::vector<std::string> &suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string &name, const SuiteOptions &options);

// Individual suites.
SuiteResult verify_normalization(const SuiteOptions &options);
SuiteResult verify_f_symbols(const SuiteOptions &options);
SuiteResult verify_majorization(const SuiteOptions &options);
SuiteResult verify_monotonicity(const SuiteOptions &options);
SuiteResult verify_occupancy(const SuiteOptions &options);
SuiteResult verify_log_convexity(const SuiteOptions &options);
SuiteResult verify_splitting(const SuiteOptions &options);
SuiteResult verify_concentration(const SuiteOptions &options);
SuiteResult verify_optimality(const SuiteOptions &options);
SuiteResult verify_depolarizing(const SuiteOptions &options);
SuiteResult verify_oracle_consistency(const SuiteOptions &options);
SuiteResult verify_pure_state(const SuiteOptions &options);
SuiteResult verify_two_copy_edge_case(const SuiteOptions &options);
SuiteResult verify_small_n_window(const SuiteOptions &options);
SuiteResult verify_intensive(const SuiteOptions &options);
SuiteResult verify_extensive(const SuiteOptions &options);
SuiteResult verify_sandwich(const SuiteOptions &options);

/// Coefficients (c0, c1, c2) of the quadratic through three points.
std::vector<Rational> fit_quadratic(const std::vector<Rational> &x, const std::vector<Rational> &y);

/// True when c0 + c1 t + c2 t^2 > 0 for every t in the open unit interval.
bool positive_on_unit_interval(const std::vector<Rational> &c);

}  // namespace qpa

#endif
