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

#include "qpa/asymptotics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qpa/protocol.h"

namespace qpa {

namespace {

void check_target(const std::vector<double> &p, int k) {
    int d = static_cast<int>(p.size());
    if (k < 1 || k > d) {
        throw std::invalid_argument("target index k must lie in 1..d");
    }
    for (int i = 1; i <= d; i++) {
        // Grids built in binary64 land next to, not on, a degeneracy.
        if (i != k && std::abs(p[i - 1] - p[k - 1]) <= 1e-12) {
            throw std::invalid_argument("degenerate gap D_{k,i} = 0 at i = " + std::to_string(i));
        }
    }
}

double min_gap(const std::vector<double> &p, int k) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < p.size(); i++) {
        if (static_cast<int>(i) + 1 != k) {
            best = std::min(best, std::abs(p[k - 1] - p[i]));
        }
    }
    return best;
}

// sum_{i != k} p_i / (|D_{k,i}| D_min^e)
double weighted_gap_sum(const std::vector<double> &p, int k, double d_min, int e) {
    double s = 0;
    for (size_t i = 0; i < p.size(); i++) {
        if (static_cast<int>(i) + 1 != k) {
            s += p[i] / (std::abs(p[k - 1] - p[i]) * std::pow(d_min, e));
        }
    }
    return s;
}

double tail_threshold(double d_min) {
    double a = 16.0 * kTailConstant * kTailConstant / (d_min * d_min);
    return a * std::log(a);
}

}  // namespace

double intensive_risk(const std::vector<double> &p, int k, double m, double n) {
    check_target(p, k);
    double s = 0;
    for (size_t i = 0; i < p.size(); i++) {
        if (static_cast<int>(i) + 1 != k) {
            double g = p[k - 1] - p[i];
            s += p[i] / (g * g);
        }
    }
    return m / n * s;
}

double extensive_fidelity(const std::vector<double> &p, int k, double rate) {
    check_target(p, k);
    int d = static_cast<int>(p.size());
    int istar = terminal_index_macro(p, k, rate);
    double pk = p[k - 1];
    double f = 1;
    for (int i = k; i < istar; i++) {
        double g = pk - p[i];
        f *= g * g / (pk * rate);
    }
    for (int i = 1; i <= d; i++) {
        if (i >= k && i <= istar) {
            continue;
        }
        double g = pk - p[i - 1];
        f *= g * g / (g * g + p[i - 1] * rate);
    }
    return f;
}

double one_site_risk_asymptotic(const std::vector<double> &p, int k, double rate, double n) {
    double s = intensive_risk(p, k, 1, 1);
    int istar = terminal_index_macro(p, k, rate);
    for (int i = k + 1; i <= istar; i++) {
        s += 1.0 / (p[k - 1] - p[i - 1]) - 1.0 / rate;
    }
    return s / n;
}

BoundResult nonasymptotic_all_bound(const std::vector<double> &p, int k, double m, double n) {
    check_target(p, k);
    double d_min = min_gap(p, k);
    BoundResult r;
    r.leading = m / n * weighted_gap_sum(p, k, d_min, 1);
    r.remainder = m / n * 4.0 * std::sqrt(std::log(n)) / std::sqrt(n) * (1.0 + 6.0 * weighted_gap_sum(p, k, d_min, 2));
    r.bound = r.leading + r.remainder;
    r.valid = n >= tail_threshold(d_min);
    return r;
}

BoundResult nonasymptotic_one_bound(const std::vector<double> &p, int k, double m, double n) {
    BoundResult all = nonasymptotic_all_bound(p, k, m, n);
    BoundResult r;
    r.leading = all.leading / m;
    r.remainder = all.remainder / m;
    r.bound = r.leading + r.remainder;
    r.valid = all.valid;
    if (k < static_cast<int>(p.size())) {
        r.valid = r.valid && n >= 2.0 * m / (p[k - 1] - p[k]);
    }
    return r;
}

namespace {

// Sums of p_i/|D_{i,k}| over rows above and below the target.
std::pair<Rational, Rational> gap_weights(const Spectrum &p, int k) {
    Rational above = 0;
    Rational below = 0;
    for (int i = 1; i < k; i++) {
        above += p.p(i) / p.gap(i, k);
    }
    for (int i = k + 1; i <= p.d(); i++) {
        below += p.p(i) / p.gap(k, i);
    }
    return {above, below};
}

}  // namespace

std::optional<Rational> sector_lower_bound(const YoungDiagram &shape, int k, long m, const Spectrum &p) {
    int d = p.d();
    if (shape.d() != d || k < 1 || k > d || m < 1 || !p.nondegenerate_at(k)) {
        throw std::invalid_argument("sector_lower_bound: bad shape, target or count");
    }
    if (k < d && shape.gap(k, k + 1) < m) {
        return std::nullopt;
    }
    auto [above, below] = gap_weights(p, k);
    Rational bound = 1;
    if (k > 1) {
        Rational base = shape.gap(k - 1, k) + 2;
        if (base - above < 0) {
            return std::nullopt;
        }
        bound *= rising(base - above, m) / rising(base, m);
    }
    if (k < d) {
        Rational base = shape.gap(k, k + 1);
        if (base - below - (m - 1) < 0) {
            return std::nullopt;
        }
        bound *= falling(base - below, m) / falling(base, m);
    }
    return bound;
}

std::optional<Rational> sector_upper_bound(const YoungDiagram &shape, int k, const RemovalVector &removal, const Spectrum &p) {
    int d = p.d();
    if (shape.d() != d || static_cast<int>(removal.size()) != d || k < 1 || k > d || !p.nondegenerate_at(k)) {
        throw std::invalid_argument("sector_upper_bound: bad shape, removal or target");
    }
    long m = removal_total(removal);
    if (removal[k - 1] >= m) {
        return std::nullopt;
    }
    for (int i = 1; i < d; i++) {
        if (removal[i - 1] < 0 || removal[i - 1] > shape.gap(i, i + 1)) {
            return std::nullopt;
        }
    }
    if (removal[d - 1] < 0) {
        return std::nullopt;
    }
    auto [above, below] = gap_weights(p, k);
    long m_above = 0;
    long m_below = 0;
    for (int i = 1; i < k; i++) {
        m_above += removal[i - 1];
    }
    for (int i = k + 1; i <= d; i++) {
        m_below += removal[i - 1];
    }
    Rational bound = 1;
    if (m_above > 0) {
        long gap = shape.gap(k - 1, k);
        if (gap == 0) {
            return std::nullopt;
        }
        Rational base = Rational(m * m_above) * (m_above - 1 + above) / gap;
        bound *= power(base, static_cast<unsigned long>(m_above));
    }
    if (m_below > 0) {
        Rational gap = k < d ? Rational(shape.gap(k, k + 1)) : Rational(0);
        Rational base = Rational(m * m_below) * (2 * m_below - 1 + below) / (gap + 1 + m_below);
        bound *= power(base, static_cast<unsigned long>(m_below));
    }
    return bound;
}

Thresholds optimality_thresholds(const Spectrum &p, int k, long m, Objective objective) {
    int d = p.d();
    Rational above = 0;
    for (int i = 1; i < k; i++) {
        above += p.p(i) / p.gap(i, k);
    }
    Rational below = 0;
    for (int i = k + 1; i <= d; i++) {
        below += p.p(i) / p.gap(k, i);
    }
    Thresholds t;
    Rational mm = m;
    if (objective == Objective::all_site) {
        if (k > 1) {
            t.upper_gap = 2 * mm * mm * (mm - 1 + above);
        }
        if (k < d) {
            t.lower_gap = 2 * mm * mm * (2 * mm - 1 + below);
        }
    } else {
        if (k > 1) {
            t.upper_gap = 2 * above;
        }
        if (k < d) {
            Rational b = 2 * below;
            t.lower_gap = mm > b ? mm : b;
        }
    }
    return t;
}

double optimality_threshold(long m, double d_min, Objective objective) {
    double mm = static_cast<double>(m);
    if (objective == Objective::all_site) {
        return 2 * mm * mm * (2 * mm - 1 + 1.0 / d_min);
    }
    return std::max(mm, 2.0 / d_min);
}

bool thresholds_met(const YoungDiagram &shape, int k, const Thresholds &t) {
    if (t.upper_gap && !(Rational(shape.gap(k - 1, k)) > *t.upper_gap)) {
        return false;
    }
    if (t.lower_gap && !(Rational(shape.gap(k, k + 1)) > *t.lower_gap)) {
        return false;
    }
    return true;
}

double concentration_bound(double n, double alpha) {
    double s = std::sqrt(n);
    if (!(alpha > 4.0 / s)) {
        throw std::invalid_argument("concentration bound needs alpha > 4/sqrt(n)");
    }
    double x = s * alpha - 4.0;
    return 2.0 * std::exp(-x * x / 32.0);
}

double concentration_bound_joint(double n, double alpha) {
    return 2.0 * concentration_bound(n, alpha);
}

std::vector<PhaseRow> phase_diagram(const std::vector<double> &lambdas, const std::vector<std::vector<double>> &spectra, int k,
                                    const std::vector<double> &rates, PhaseMode mode, double n, std::vector<std::string> *skipped) {
    std::vector<PhaseRow> rows;
    for (size_t a = 0; a < lambdas.size(); a++) {
        const std::vector<double> &p = spectra[a];
        double total = 0;
        bool ok = !p.empty() && k >= 1 && k <= static_cast<int>(p.size());
        for (size_t i = 0; ok && i < p.size(); i++) {
            total += p[i];
            ok = p[i] >= 0 && (i == 0 || p[i] <= p[i - 1]);
        }
        ok = ok && std::abs(total - 1.0) < 1e-9;
        if (ok) {
            try {
                check_target(p, k);
            } catch (const std::invalid_argument &) {
                ok = false;
            }
        }
        if (!ok) {
            if (skipped) {
                std::ostringstream msg;
                msg << "lambda=" << lambdas[a] << ": not a sorted, normalized spectrum with a nondegenerate target";
                skipped->push_back(msg.str());
            }
            continue;
        }
        for (double rate : rates) {
            PhaseRow row{lambdas[a], rate, 0, terminal_index_macro(p, k, rate) - k};
            if (mode == PhaseMode::all_site) {
                row.fidelity = extensive_fidelity(p, k, rate);
            } else {
                row.fidelity = std::max(0.0, 1.0 - one_site_risk_asymptotic(p, k, rate, n));
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<PhaseRow> phase_diagram_depolarized_limit(const std::vector<double> &lambdas, const std::vector<double> &rates,
                                                      PhaseMode mode, double n) {
    // As d grows, p_1 -> 1 - eta and every other entry vanishes while the
    // gaps D_{1,i} all tend to 1 - eta. The product over the d - 1 small
    // factors converges to an exponential; past the first gap every row is
    // absorbed and the all-site value drops to zero.
    std::vector<PhaseRow> rows;
    for (double eta : lambdas) {
        double gap = 1.0 - eta;
        for (double rate : rates) {
            PhaseRow row{eta, rate, 0, 0};
            bool first = rate <= gap;
            row.phase = first ? 0 : -1;
            if (mode == PhaseMode::all_site) {
                row.fidelity = first ? std::exp(-eta * rate / (gap * gap)) : 0.0;
            } else {
                row.fidelity = first ? std::max(0.0, 1.0 - eta / (gap * gap) / n) : 0.0;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

}  // namespace qpa
