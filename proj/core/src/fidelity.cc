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

#include "qpa/fidelity.h"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

#include "qpa/parallel.h"
#include "qpa/schur.h"

namespace qpa {

std::string to_string(Objective o) {
    return o == Objective::all_site ? "all" : "one";
}

std::string to_string(Rule r) {
    switch (r) {
        case Rule::overhang:
            return "overhang";
        case Rule::optimal:
            return "optimal-per-sector";
        case Rule::explicit_removal:
            return "explicit";
    }
    return "?";
}

Objective parse_objective(const std::string &text) {
    if (text == "all" || text == "all-site") {
        return Objective::all_site;
    }
    if (text == "one" || text == "one-site") {
        return Objective::one_site;
    }
    throw std::invalid_argument("unknown objective '" + text + "' (expected all or one)");
}

Rule parse_rule(const std::string &text) {
    if (text == "overhang") {
        return Rule::overhang;
    }
    if (text == "optimal" || text == "optimal-per-sector") {
        return Rule::optimal;
    }
    if (text == "explicit") {
        return Rule::explicit_removal;
    }
    throw std::invalid_argument("unknown rule '" + text + "' (expected overhang, optimal-per-sector or explicit)");
}

Rational utility_component(const YoungDiagram &shape, const RemovalVector &removal, const GTPattern &w) {
    int d = shape.d();
    if (w.d() != d || static_cast<int>(removal.size()) != d || w.level(d) != shape.rows) {
        throw std::invalid_argument("utility_component: pattern, removal and shape disagree");
    }
    long m = removal_total(removal);
    // Shifted entries w~_{i,b} = w_{i,b} - i.
    auto top = [&](int i) {
        return w.w(i, d) - i;
    };
    auto below = [&](int j) {
        return w.w(j, d - 1) - j;
    };
    Rational value = Rational(factorial(m));
    for (int i = 1; i <= d; i++) {
        long mi = removal[i - 1];
        if (mi == 0) {
            continue;
        }
        value /= Rational(factorial(mi));
        for (int j = 1; j <= d - 1; j++) {
            value *= rising(Rational(below(j) - top(i)), mi);
            if (value == 0) {
                return 0;
            }
        }
        for (int j = 1; j <= d; j++) {
            if (j != i) {
                value /= rising(Rational(top(j) - top(i) + 1), mi);
            }
        }
    }
    return value;
}

Rational sector_fidelity_all_q(const YoungDiagram &shape, const RemovalVector &removal, const std::vector<Rational> &q) {
    if (!is_valid_removal(shape, removal)) {
        throw std::invalid_argument("removal " + to_string(removal) + " is not admissible for " + to_string(shape));
    }
    MonomialTable table(q, shape.size());
    Rational num = 0;
    Rational den = 0;
    for_each_gt_pattern(shape, [&](const GTPattern &w) {
        Rational weight = table.monomial(w);
        if (weight == 0) {
            return;
        }
        den += weight;
        num += weight * utility_component(shape, removal, w);
    });
    if (den == 0) {
        throw std::domain_error("sector " + to_string(shape) + " has zero weight under this spectrum");
    }
    return num / den;
}

Rational sector_fidelity_all(const YoungDiagram &shape, int k, const RemovalVector &removal, const Spectrum &p) {
    return sector_fidelity_all_q(shape, removal, reindex_spectrum(p, k).q);
}

Rational f_symbol_sq(const YoungDiagram &shape, const YoungDiagram &lambda, int i, long m) {
    int d = shape.d();
    if (lambda.d() != d) {
        throw std::invalid_argument("f_symbol_sq: shape and environment need the same row count");
    }
    if (m < 1 || shape.size() - lambda.size() != m) {
        throw std::invalid_argument("f_symbol_sq: |shape| - |lambda| must equal m >= 1");
    }
    YoungDiagram lowered = shape;
    lowered.rows[i - 1] -= 1;
    if (!lowered.is_dominant()) {
        return 0;
    }
    Rational num = 1;
    for (int j = 1; j <= d; j++) {
        num *= shape.row(i) - lambda.row(j) + j - i;
    }
    Rational den = m;
    for (int j = 1; j <= d; j++) {
        if (j != i) {
            den *= shape.row(i) - shape.row(j) + j - i;
        }
    }
    return num / den;
}

Rational sector_fidelity_one_q(const YoungDiagram &shape, const YoungDiagram &lambda, const std::vector<Rational> &q) {
    int d = shape.d();
    long m = shape.size() - lambda.size();
    RemovalVector full(d);
    for (int i = 0; i < d; i++) {
        full[i] = shape.rows[i] - lambda.rows[i];
    }
    if (!is_valid_removal(shape, full)) {
        throw std::invalid_argument("environment " + to_string(lambda) + " is not admissible for " + to_string(shape));
    }
    Rational total = 0;
    for (int i = 1; i <= d; i++) {
        Rational f2 = f_symbol_sq(shape, lambda, i, m);
        if (f2 == 0) {
            continue;
        }
        RemovalVector single(d, 0);
        single[i - 1] = 1;
        total += f2 * sector_fidelity_all_q(shape, single, q);
    }
    return total;
}

Rational sector_fidelity_one(const YoungDiagram &shape, int k, const YoungDiagram &lambda, const Spectrum &p) {
    return sector_fidelity_one_q(shape, lambda, reindex_spectrum(p, k).q);
}

Rational sector_value_q(const YoungDiagram &shape, const RemovalVector &removal, const std::vector<Rational> &q, Objective objective) {
    if (objective == Objective::all_site) {
        return sector_fidelity_all_q(shape, removal, q);
    }
    return sector_fidelity_one_q(shape, apply_removal(shape, removal), q);
}

namespace {

SectorOptimum optimum_q(const YoungDiagram &shape, long m, const std::vector<Rational> &q, Objective objective) {
    SectorOptimum out;
    for (const RemovalVector &r : enumerate_environments(shape, m)) {
        ChannelChoice c{r, apply_removal(shape, r), sector_value_q(shape, r, q, objective)};
        out.ranking.push_back(c);
    }
    out.best = out.ranking.front();
    for (const ChannelChoice &c : out.ranking) {
        if (c.value > out.best.value || (c.value == out.best.value && c.environment > out.best.environment)) {
            out.best = c;
        }
    }
    return out;
}

}  // namespace

SectorOptimum optimal_sector_channel(const YoungDiagram &shape, int k, long m, const Spectrum &p, Objective objective) {
    return optimum_q(shape, m, reindex_spectrum(p, k).q, objective);
}

Losses loss_transforms(double fidelity) {
    double l = 1.0 - fidelity;
    if (l < 0) {
        l = 0;
    }
    Losses out;
    out.infidelity = l;
    out.purified = 1.0 - std::sqrt(l);
    out.bures = 1.0 - std::sqrt(1.0 - std::sqrt(1.0 - l));
    out.trace = l;
    out.cross_entropy = l == 0 ? std::numeric_limits<double>::infinity() : -std::log(l);
    return out;
}

int default_workers() {
    if (const char *env = std::getenv("QPA_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) {
            return v;
        }
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

FidelityReport overall_fidelity(long n, long m, int k, const Spectrum &p, const OverallOptions &options) {
    if (n < 1 || m < 1) {
        throw std::invalid_argument("overall_fidelity needs n >= 1 and m >= 1");
    }
    if (m > n && !options.allow_cloning) {
        throw std::invalid_argument("m > n: the output would need more copies than the input provides");
    }
    FidelityReport report;
    report.n = n;
    report.d = p.d();
    report.k = k;
    report.m = m;
    report.spectrum = p;
    report.rule = options.rule;
    report.objective = options.objective;
    std::vector<Rational> q = reindex_spectrum(p, k).q;
    std::vector<YoungDiagram> shapes = enumerate_diagrams(n, p.d());
    report.sectors.resize(shapes.size());
    int workers = options.workers > 0 ? options.workers : default_workers();
    parallel_for(shapes.size(), workers, [&](size_t idx) {
        const YoungDiagram &shape = shapes[idx];
        SectorRow row;
        row.sigma = shape;
        row.mass = sw_mass(shape, p);
        row.removal = overhang_removal(shape, k, m);
        if (options.rule == Rule::overhang && m <= n && !overhang_supported(shape, k, m)) {
            row.fallback = true;
        }
        if (options.rule == Rule::explicit_removal) {
            if (is_valid_removal(shape, options.removal) && removal_total(options.removal) == m) {
                row.removal = options.removal;
            } else {
                row.fallback = true;
            }
        }
        row.mu = apply_removal(shape, row.removal);
        row.fidelity = 0;
        if (row.mass != 0) {
            if (options.rule == Rule::optimal || row.fallback) {
                ChannelChoice best = optimum_q(shape, m, q, options.objective).best;
                row.removal = best.removal;
                row.mu = best.environment;
                row.fidelity = best.value;
            } else {
                row.fidelity = sector_value_q(shape, row.removal, q, options.objective);
            }
        }
        report.sectors[idx] = std::move(row);
    });
    report.overall = 0;
    for (const SectorRow &row : report.sectors) {
        report.overall += row.mass * row.fidelity;
    }
    report.losses = loss_transforms(to_double(report.overall));
    return report;
}

}  // namespace qpa
