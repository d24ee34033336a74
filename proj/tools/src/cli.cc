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


#include "cli.h"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qpa/asymptotics.h"
#include "qpa/fidelity.h"
#include "qpa/protocol.h"
#include "qpa/rational.h"
#include "qpa/spectrum.h"
#include "qpa/verify.h"
#include "qpa/young.h"

namespace qpa::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Splits a comma list and parses each entry, reporting the 1-based column
// of the entry that failed.
template <typename T, typename Parse>
std::vector<T> parse_list(const std::string &flag, const std::string &text, Parse parse) {
    std::vector<T> out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(parse(item));
        } catch (const std::exception &e) {
            throw UsageError(flag + ", column " + std::to_string(start + 1) + ": " + e.what());
        }
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return out;
}

Spectrum spectrum_arg(const std::string &text) {
    std::vector<Rational> p = parse_list<Rational>("--spectrum", text, [](const std::string &s) {
        return parse_rational(s);
    });
    try {
        return Spectrum(p);
    } catch (const std::exception &e) {
        throw UsageError(std::string("--spectrum: ") + e.what());
    }
}

std::vector<long> integer_list(const std::string &flag, const std::string &text) {
    return parse_list<long>(flag, text, [](const std::string &s) {
        size_t used = 0;
        long v = std::stol(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument("'" + s + "' is not an integer");
        }
        return v;
    });
}

void require(bool condition, const std::string &what) {
    if (!condition) {
        throw UsageError("precondition failed: " + what);
    }
}

class Writer {
   public:
    explicit Writer(bool float_mode) : float_mode_(float_mode) {
    }
    Json value(const Rational &x) const {
        if (float_mode_) {
            return to_double(x);
        }
        return to_string(x);
    }
    Json values(const std::vector<Rational> &xs) const {
        Json a = Json::array();
        for (const Rational &x : xs) {
            a.push_back(value(x));
        }
        return a;
    }

   private:
    bool float_mode_;
};

Json losses_json(const Losses &l) {
    auto num = [](double x) -> Json {
        if (std::isinf(x)) {
            return "inf";
        }
        return x;
    };
    Json j;
    j["infidelity"] = num(l.infidelity);
    j["purified"] = num(l.purified);
    j["bures"] = num(l.bures);
    j["trace"] = num(l.trace);
    j["cross_entropy"] = num(l.cross_entropy);
    return j;
}

Json bound_json(const BoundResult &b) {
    Json j;
    j["bound"] = b.bound;
    j["leading"] = b.leading;
    j["remainder"] = b.remainder;
    j["valid"] = b.valid;
    return j;
}

std::string format_double(double x) {
    std::ostringstream s;
    s << std::setprecision(12) << x;
    return s.str();
}

struct SectorArgs {
    std::string shape, spectrum, removal, environment, objective = "all";
    int k = 1;
    long m = 1;
    bool float_mode = false;
};

int cmd_sector(const SectorArgs &a, std::ostream &out) {
    YoungDiagram shape = parse_diagram(a.shape);
    Spectrum p = spectrum_arg(a.spectrum);
    Objective obj = parse_objective(a.objective);
    require(shape.is_partition(), "shape " + to_string(shape) + " is a partition");
    require(shape.d() == p.d(), "shape rows (" + std::to_string(shape.d()) + ") == spectrum length (" + std::to_string(p.d()) + ")");
    require(a.k >= 1 && a.k <= p.d(), "1 <= k <= d");
    require(a.m >= 1, "m >= 1");
    require(p.nondegenerate_at(a.k), "p_k differs from every other spectrum entry");
    require(a.removal.empty() || a.environment.empty(), "at most one of --removal and --environment");

    RemovalVector removal;
    std::string rule = "overhang";
    if (!a.removal.empty()) {
        removal = integer_list("--removal", a.removal);
        rule = "explicit";
    } else if (!a.environment.empty()) {
        YoungDiagram env = parse_diagram(a.environment);
        require(env.d() == shape.d(), "environment has d rows");
        removal.resize(shape.d());
        for (int i = 0; i < shape.d(); i++) {
            removal[i] = shape.rows[i] - env.rows[i];
        }
        rule = "explicit";
    } else {
        removal = overhang_removal(shape, a.k, a.m);
    }
    require(static_cast<int>(removal.size()) == shape.d(), "removal has d entries");
    require(removal_total(removal) == a.m, "removal boxes sum to m");
    require(is_valid_removal(shape, removal), "removal " + to_string(removal) + " is admissible for shape " + to_string(shape));

    Writer w(a.float_mode);
    Rational value = sector_value_q(shape, removal, reindex_spectrum(p, a.k).q, obj);
    Json j;
    j["shape"] = to_string(shape);
    j["k"] = a.k;
    j["m"] = a.m;
    j["spectrum"] = w.values(p.probs());
    j["objective"] = to_string(obj);
    j["rule"] = rule;
    j["removal"] = to_string(removal);
    j["environment"] = to_string(apply_removal(shape, removal));
    j["overhang_supported"] = overhang_supported(shape, a.k, a.m);
    j["fidelity"] = w.value(value);
    out << j.dump(2) << "\n";
    return kExitOk;
}

struct OverallArgs {
    std::string spectrum, rule = "overhang", objective = "all", removal;
    long n = 1;
    long m = 1;
    int k = 1;
    int workers = 0;
    bool allow_cloning = false;
    bool sectors = false;
    bool float_mode = false;
};

int cmd_overall(const OverallArgs &a, std::ostream &out) {
    Spectrum p = spectrum_arg(a.spectrum);
    require(a.n >= 1, "n >= 1");
    require(a.m >= 1, "m >= 1");
    require(a.k >= 1 && a.k <= p.d(), "1 <= k <= d");
    require(a.allow_cloning || a.m <= a.n, "m <= n (pass --allow-cloning for m > n)");
    require(p.nondegenerate_at(a.k), "p_k differs from every other spectrum entry");
    OverallOptions opt;
    opt.rule = parse_rule(a.rule);
    opt.objective = parse_objective(a.objective);
    opt.allow_cloning = a.allow_cloning;
    opt.workers = a.workers;
    if (opt.rule == Rule::explicit_removal) {
        require(!a.removal.empty(), "--removal is given with --rule explicit");
        opt.removal = integer_list("--removal", a.removal);
    }
    FidelityReport rep = overall_fidelity(a.n, a.m, a.k, p, opt);

    Writer w(a.float_mode);
    Json j;
    j["n"] = rep.n;
    j["m"] = rep.m;
    j["d"] = rep.d;
    j["k"] = rep.k;
    j["spectrum"] = w.values(p.probs());
    j["rule"] = to_string(rep.rule);
    j["objective"] = to_string(rep.objective);
    j["overall"] = w.value(rep.overall);
    long fallbacks = 0;
    for (const SectorRow &row : rep.sectors) {
        fallbacks += row.fallback;
    }
    j["fallback_sectors"] = fallbacks;
    j["losses"] = losses_json(rep.losses);
    if (a.sectors) {
        Json rows = Json::array();
        for (const SectorRow &row : rep.sectors) {
            Json r;
            r["sigma"] = to_string(row.sigma);
            r["mass"] = w.value(row.mass);
            r["removal"] = to_string(row.removal);
            r["mu"] = to_string(row.mu);
            r["fidelity"] = w.value(row.fidelity);
            r["fallback"] = row.fallback;
            rows.push_back(r);
        }
        j["sectors"] = rows;
    }
    out << j.dump(2) << "\n";
    return kExitOk;
}

struct AsymptoteArgs {
    std::string spectrum;
    int k = 1;
    long m = 1;
    std::optional<long> n;
    std::optional<double> rate;
    bool float_mode = false;
};

int cmd_asymptote(const AsymptoteArgs &a, std::ostream &out) {
    Spectrum p = spectrum_arg(a.spectrum);
    require(a.k >= 1 && a.k <= p.d(), "1 <= k <= d");
    require(p.nondegenerate_at(a.k), "p_k differs from every other spectrum entry");
    require(a.m >= 1, "m >= 1");
    require(!a.n || *a.n >= 1, "n >= 1");
    require(!a.rate || *a.rate > 0, "R > 0");
    std::vector<double> pd = p.as_doubles();
    Writer w(a.float_mode);
    Json j;
    j["spectrum"] = w.values(p.probs());
    j["k"] = a.k;
    j["m"] = a.m;
    if (a.n) {
        double n = static_cast<double>(*a.n);
        j["n"] = *a.n;
        j["intensive_risk"] = intensive_risk(pd, a.k, static_cast<double>(a.m), n);
        j["all_site_bound"] = bound_json(nonasymptotic_all_bound(pd, a.k, static_cast<double>(a.m), n));
        j["one_site_bound"] = bound_json(nonasymptotic_one_bound(pd, a.k, static_cast<double>(a.m), n));
    }
    if (a.rate) {
        j["rate"] = *a.rate;
        j["terminal_index"] = terminal_index_macro(pd, a.k, *a.rate);
        j["extensive_fidelity"] = extensive_fidelity(pd, a.k, *a.rate);
        if (a.n) {
            j["one_site_risk"] = one_site_risk_asymptotic(pd, a.k, *a.rate, static_cast<double>(*a.n));
        }
    }
    Json th;
    for (Objective obj : {Objective::all_site, Objective::one_site}) {
        Thresholds t = optimality_thresholds(p, a.k, a.m, obj);
        Json entry;
        entry["upper_gap"] = t.upper_gap ? w.value(*t.upper_gap) : Json(nullptr);
        entry["lower_gap"] = t.lower_gap ? w.value(*t.lower_gap) : Json(nullptr);
        th[to_string(obj)] = entry;
    }
    j["optimality_thresholds"] = th;
    out << j.dump(2) << "\n";
    return kExitOk;
}

struct PhaseArgs {
    std::string family = "depolarized";
    std::string d = "3";
    std::string spectrum;
    std::string mode = "all";
    std::string format = "csv";
    int k = 1;
    long lambda_steps = 20;
    long rate_steps = 20;
    double rate_max = 1.0;
    double n = 100;
};

int cmd_phase_diagram(const PhaseArgs &a, std::ostream &out, std::ostream &err) {
    require(a.lambda_steps >= 1 && a.rate_steps >= 1, "grid step counts are positive");
    require(a.rate_max > 0, "rate-max > 0");
    PhaseMode mode = parse_objective(a.mode) == Objective::all_site ? PhaseMode::all_site : PhaseMode::one_site;
    std::vector<double> lambdas, rates;
    for (long i = 0; i <= a.lambda_steps; i++) {
        lambdas.push_back(static_cast<double>(i) / static_cast<double>(a.lambda_steps));
    }
    for (long j = 1; j <= a.rate_steps; j++) {
        rates.push_back(a.rate_max * static_cast<double>(j) / static_cast<double>(a.rate_steps));
    }

    std::vector<PhaseRow> rows;
    std::vector<std::string> skipped;
    if (a.family == "depolarized" && (a.d == "inf" || a.d == "infinity")) {
        require(a.k == 1, "k == 1 for the infinite-dimensional depolarized family");
        rows = phase_diagram_depolarized_limit(lambdas, rates, mode, a.n);
    } else {
        std::vector<std::vector<double>> spectra;
        if (a.family == "depolarized") {
            int d = static_cast<int>(integer_list("--d", a.d).at(0));
            require(d >= 2, "d >= 2");
            require(a.k >= 1 && a.k <= d, "1 <= k <= d");
            for (double eta : lambdas) {
                std::vector<double> p(d, eta / d);
                p[0] = 1 - eta * (d - 1) / d;
                spectra.push_back(p);
            }
        } else if (a.family == "interpolate") {
            // p(lambda) = (1 - lambda) e_1 + lambda q.
            require(!a.spectrum.empty(), "--spectrum is given with --family interpolate");
            std::vector<Rational> q = parse_list<Rational>("--spectrum", a.spectrum, [](const std::string &s) {
                return parse_rational(s);
            });
            int d = static_cast<int>(q.size());
            require(a.k >= 1 && a.k <= d, "1 <= k <= d");
            for (double t : lambdas) {
                std::vector<double> p(d);
                for (int i = 0; i < d; i++) {
                    p[i] = t * to_double(q[i]) + (i == 0 ? 1 - t : 0.0);
                }
                spectra.push_back(p);
            }
        } else {
            throw UsageError("unknown family '" + a.family + "' (expected depolarized or interpolate)");
        }
        rows = phase_diagram(lambdas, spectra, a.k, rates, mode, a.n, &skipped);
    }
    for (const std::string &s : skipped) {
        err << "skipped: " << s << "\n";
    }

    if (a.format == "json") {
        Json arr = Json::array();
        for (const PhaseRow &r : rows) {
            Json j;
            j["lambda"] = r.lambda;
            j["R"] = r.rate;
            j["fidelity"] = r.fidelity;
            j["phase"] = r.phase;
            arr.push_back(j);
        }
        out << arr.dump(2) << "\n";
    } else if (a.format == "csv") {
        out << "lambda,R,fidelity,phase\n";
        for (const PhaseRow &r : rows) {
            out << format_double(r.lambda) << "," << format_double(r.rate) << "," << format_double(r.fidelity) << "," << r.phase << "\n";
        }
    } else {
        throw UsageError("unknown format '" + a.format + "' (expected csv or json)");
    }
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    long max_n = 0;
    int max_d = 0;
    long cases = 0;
    uint64_t seed = kDefaultSeed;
    int workers = 0;
};

int cmd_verify(const VerifyArgs &a, std::ostream &out) {
    std::vector<std::string> names;
    if (a.suite == "all") {
        names = suite_names();
    } else {
        const auto &known = suite_names();
        require(std::find(known.begin(), known.end(), a.suite) != known.end(), "suite '" + a.suite + "' exists");
        names.push_back(a.suite);
    }
    SuiteOptions opt;
    opt.max_n = a.max_n;
    opt.max_d = a.max_d;
    opt.cases = a.cases;
    opt.seed = a.seed;
    opt.workers = a.workers;
    bool all_passed = true;
    Json suites = Json::array();
    for (const std::string &name : names) {
        SuiteResult r = run_suite(name, opt);
        all_passed = all_passed && r.passed;
        Json j;
        j["suite"] = r.name;
        j["passed"] = r.passed;
        j["cases"] = r.cases;
        j["violations"] = r.violations;
        j["seed"] = r.seed;
        j["counterexample"] = r.counterexample.empty() ? Json(nullptr) : Json(r.counterexample);
        Json details = Json::object();
        for (const auto &[key, value] : r.details) {
            details[key] = value;
        }
        j["details"] = details;
        suites.push_back(j);
    }
    Json top;
    top["passed"] = all_passed;
    top["suites"] = suites;
    out << top.dump(2) << "\n";
    return all_passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact and asymptotic fidelities for quantum purification and cloning of a target eigenvector"};
    app.name("qpa");
    app.require_subcommand(1);

    SectorArgs sa;
    CLI::App *sector = app.add_subcommand("sector", "Fidelity of one Schur-Weyl sector");
    sector->add_option("--shape", sa.shape, "Input sector, e.g. 4,2,1")->required();
    sector->add_option("--spectrum", sa.spectrum, "Eigenvalues p_1 >= ... >= p_d")->required();
    sector->add_option("--k", sa.k, "Target eigenvector index (1-based)");
    sector->add_option("--m", sa.m, "Number of output copies");
    sector->add_option("--removal", sa.removal, "Boxes removed per row; defaults to the overhang rule");
    sector->add_option("--environment", sa.environment, "Environment diagram instead of --removal");
    sector->add_option("--objective", sa.objective, "all or one");
    sector->add_flag("--float", sa.float_mode, "Print floating point values");

    OverallArgs oa;
    CLI::App *overall = app.add_subcommand("overall", "Overall fidelity summed over sectors");
    overall->add_option("--n", oa.n, "Number of input copies")->required();
    overall->add_option("--spectrum", oa.spectrum, "Eigenvalues p_1 >= ... >= p_d")->required();
    overall->add_option("--m", oa.m, "Number of output copies");
    overall->add_option("--k", oa.k, "Target eigenvector index (1-based)");
    overall->add_option("--rule", oa.rule, "overhang, optimal-per-sector or explicit");
    overall->add_option("--objective", oa.objective, "all or one");
    overall->add_option("--removal", oa.removal, "Removal vector for --rule explicit");
    overall->add_option("--workers", oa.workers, "Worker threads (0 reads QPA_WORKERS)");
    overall->add_flag("--allow-cloning", oa.allow_cloning, "Permit m > n");
    overall->add_flag("--sectors", oa.sectors, "Include the per-sector table");
    overall->add_flag("--float", oa.float_mode, "Print floating point values");

    AsymptoteArgs aa;
    CLI::App *asymptote = app.add_subcommand("asymptote", "Asymptotic laws, nonasymptotic bounds and optimality thresholds");
    asymptote->add_option("--spectrum", aa.spectrum, "Eigenvalues p_1 >= ... >= p_d")->required();
    asymptote->add_option("--k", aa.k, "Target eigenvector index (1-based)");
    asymptote->add_option("--m", aa.m, "Number of output copies");
    asymptote->add_option("--n", aa.n, "Number of input copies");
    asymptote->add_option("--rate", aa.rate, "Output rate R = m/n");
    asymptote->add_flag("--float", aa.float_mode, "Print thresholds as floating point values");

    PhaseArgs pa;
    CLI::App *phase = app.add_subcommand("phase-diagram", "Table of asymptotic fidelity over (lambda, R)");
    phase->add_option("--family", pa.family, "depolarized or interpolate");
    phase->add_option("--d", pa.d, "Dimension, or inf for the depolarized limit");
    phase->add_option("--spectrum", pa.spectrum, "Endpoint spectrum for --family interpolate");
    phase->add_option("--k", pa.k, "Target eigenvector index (1-based)");
    phase->add_option("--mode", pa.mode, "all or one");
    phase->add_option("--n", pa.n, "Input copies for the one-site risk");
    phase->add_option("--lambda-steps", pa.lambda_steps, "Grid intervals on lambda in [0,1]");
    phase->add_option("--rate-steps", pa.rate_steps, "Grid points on R in (0, rate-max]");
    phase->add_option("--rate-max", pa.rate_max, "Largest rate");
    phase->add_option("--format", pa.format, "csv or json");

    VerifyArgs va;
    CLI::App *verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("--suite", va.suite, "Suite name or all");
    verify->add_option("--max-n", va.max_n, "Largest n (0 = suite default)");
    verify->add_option("--max-d", va.max_d, "Largest d (0 = suite default)");
    verify->add_option("--cases", va.cases, "Randomized cases (0 = suite default)");
    verify->add_option("--seed", va.seed, "Seed for randomized suites");
    verify->add_option("--workers", va.workers, "Worker threads (0 reads QPA_WORKERS)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*sector) {
            return cmd_sector(sa, out);
        }
        if (*overall) {
            return cmd_overall(oa, out);
        }
        if (*asymptote) {
            return cmd_asymptote(aa, out);
        }
        if (*phase) {
            return cmd_phase_diagram(pa, out, err);
        }
        return cmd_verify(va, out);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace qpa::cli
