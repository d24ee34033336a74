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

#ifndef QPA_ASYMPTOTICS_H
#define QPA_ASYMPTOTICS_H

#include <optional>
#include <string>
#include <vector>

#include "qpa/fidelity.h"
#include "qpa/protocol.h"
#include "qpa/rational.h"
#include "qpa/spectrum.h"
#include "qpa/young.h"

namespace qpa {

/// Constant in the polynomial tail bound.
inline constexpr double kTailConstant = 12.0;

/// (m/n) sum_{i != k} p_i / D_{k,i}^2.
double intensive_risk(const std::vector<double> &p, int k, double m, double n);

/// Limit of the all-site fidelity when m/n -> R.
double extensive_fidelity(const std::vector<double> &p, int k, double rate);

/// Leading one-site risk at rate R and n inputs.
double one_site_risk_asymptotic(const std::vector<double> &p, int k, double rate, double n);

struct BoundResult {
    double bound;
    double leading;
    double remainder;
    bool valid;
};

/// Dimension-uniform upper bound on the all-site risk; `valid` reports
/// whether n is past the threshold where the bound is proven.
BoundResult nonasymptotic_all_bound(const std::vector<double> &p, int k, double m, double n);
BoundResult nonasymptotic_one_bound(const std::vector<double> &p, int k, double m, double n);

/// Lower bound on the overhang sector fidelity when all m boxes come out of
/// row k (requires m <= gap(k, k+1)). Empty when that does not hold or a
/// rising/falling factor would be negative.
std::optional<Rational> sector_lower_bound(const YoungDiagram &shape, int k, long m, const Spectrum &p);

/// Upper bound on the sector fidelity of a removal with fewer than m boxes
/// taken from row k. Needs removal[i] <= gap(i, i+1) in every row; empty
/// when that fails, when removal[k-1] == m, or when a denominator vanishes.
std::optional<Rational> sector_upper_bound(const YoungDiagram &shape, int k, const RemovalVector &removal, const Spectrum &p);

struct Thresholds {
    /// Bound for gap(k-1, k); absent when k == 1.
    std::optional<Rational> upper_gap;
    /// Bound for gap(k, k+1); absent when k == d.
    std::optional<Rational> lower_gap;
};

/// Gap thresholds beyond which overhang removal is the unique optimum,
/// evaluated exactly.
Thresholds optimality_thresholds(const Spectrum &p, int k, long m, Objective objective);

/// Single-gap form: 2m^2 (2m - 1 + 1/D) for all-site, max(m, 2/D) for one-site.
double optimality_threshold(long m, double d_min, Objective objective);

/// True when every applicable gap of `shape` around row k strictly exceeds
/// its threshold.
bool thresholds_met(const YoungDiagram &shape, int k, const Thresholds &t);

/// 2 exp(-(sqrt(n) alpha - 4)^2 / 32); needs alpha > 4 / sqrt(n).
double concentration_bound(double n, double alpha);
/// Union over two neighbouring gaps: twice the single-gap bound.
double concentration_bound_joint(double n, double alpha);

enum class PhaseMode { all_site, one_site };

struct PhaseRow {
    double lambda;
    double rate;
    double fidelity;
    /// I* - k, or -1 when it grows without bound (infinite dimension).
    int phase;
};

/// One row per (lambda, R) pair; `spectra` holds p(lambda) in the same
/// order as `lambdas`. Invalid spectra are skipped and reported through
/// `skipped`.
std::vector<PhaseRow> phase_diagram(const std::vector<double> &lambdas, const std::vector<std::vector<double>> &spectra, int k,
                                    const std::vector<double> &rates, PhaseMode mode, double n, std::vector<std::string> *skipped);

/// Depolarized family in the limit d -> infinity, target k = 1.
std::vector<PhaseRow> phase_diagram_depolarized_limit(const std::vector<double> &lambdas, const std::vector<double> &rates,
                                                      PhaseMode mode, double n);

}  // namespace qpa

#endif
