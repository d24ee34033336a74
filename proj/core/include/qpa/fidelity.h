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

#ifndef QPA_FIDELITY_H
#define QPA_FIDELITY_H

#include <optional>
#include <string>
#include <vector>

#include "qpa/protocol.h"
#include "qpa/rational.h"
#include "qpa/spectrum.h"
#include "qpa/young.h"

namespace qpa {

enum class Objective { all_site, one_site };
enum class Rule { overhang, optimal, explicit_removal };

std::string to_string(Objective o);
std::string to_string(Rule r);
Objective parse_objective(const std::string &text);
Rule parse_rule(const std::string &text);

/// Squared coupling coefficient for removing `removal` from `shape`, seen
/// from the basis vector `w` (top row equal to `shape`). Zero when some row
/// does not hold enough letters d to give away.
Rational utility_component(const YoungDiagram &shape, const RemovalVector &removal, const GTPattern &w);

/// Weyl average of utility_component under the reindexed spectrum q.
Rational sector_fidelity_all_q(const YoungDiagram &shape, const RemovalVector &removal, const std::vector<Rational> &q);
Rational sector_fidelity_all(const YoungDiagram &shape, int k, const RemovalVector &removal, const Spectrum &p);

/// Squared recoupling coefficient linking the environment `lambda` to the
/// intermediate diagram shape - e_i. Zero when shape - e_i is not
/// weakly decreasing.
Rational f_symbol_sq(const YoungDiagram &shape, const YoungDiagram &lambda, int i, long m);

/// Marginal single-copy fidelity for a symmetric output, decomposed into
/// single box removals.
Rational sector_fidelity_one_q(const YoungDiagram &shape, const YoungDiagram &lambda, const std::vector<Rational> &q);
Rational sector_fidelity_one(const YoungDiagram &shape, int k, const YoungDiagram &lambda, const Spectrum &p);

/// Objective value of one removal vector, q already reindexed.
Rational sector_value_q(const YoungDiagram &shape, const RemovalVector &removal, const std::vector<Rational> &q, Objective objective);

struct ChannelChoice {
    RemovalVector removal;
    YoungDiagram environment;
    Rational value;
};

struct SectorOptimum {
    ChannelChoice best;
    /// Every admissible environment, in enumeration order.
    std::vector<ChannelChoice> ranking;
};

/// Exhaustive argmax. Ties go to the lexicographically largest environment.
SectorOptimum optimal_sector_channel(const YoungDiagram &shape, int k, long m, const Spectrum &p, Objective objective);

struct Losses {
    double infidelity;
    double purified;
    double bures;
    double trace;
    /// +infinity when the fidelity is one.
    double cross_entropy;
};

Losses loss_transforms(double fidelity);

struct SectorRow {
    YoungDiagram sigma;
    Rational mass;
    RemovalVector removal;
    YoungDiagram mu;
    Rational fidelity;
    /// The requested rule could not be applied and the best admissible
    /// environment was used instead.
    bool fallback = false;
};

struct FidelityReport {
    long n = 0;
    int d = 0;
    int k = 0;
    long m = 0;
    Spectrum spectrum;
    Rule rule = Rule::overhang;
    Objective objective = Objective::all_site;
    Rational overall;
    std::vector<SectorRow> sectors;
    Losses losses{};
};

struct OverallOptions {
    Rule rule = Rule::overhang;
    Objective objective = Objective::all_site;
    /// Used with Rule::explicit_removal.
    RemovalVector removal;
    /// Permit m > n (the environment then carries negative rows).
    bool allow_cloning = false;
    /// 0 picks the default worker count.
    int workers = 0;
};

FidelityReport overall_fidelity(long n, long m, int k, const Spectrum &p, const OverallOptions &options);

/// Worker count from QPA_WORKERS, else the hardware concurrency.
int default_workers();

}  // namespace qpa

#endif
