// Copyright 2026 The wigvol Authors
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

#include "cli_commands.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wigvol/errors.h"
#include "wigvol/positivity.h"
#include "wigvol/sw_kernel.h"

namespace wigvol::cli {

namespace {

using nlohmann::json;

double parse_number(std::string_view text) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw DomainError("cannot parse number '" + std::string(text) + "'");
    }
    return value;
}

// Flags as typed on the command line, before interpretation.
struct RawFlags {
    std::optional<int> n;
    std::string metric;
    std::string zeta;
    std::vector<double> direction;
    std::string method;
    std::string format;
    std::string out;
    std::string sampler;
    std::optional<double> rel_tol;
    std::optional<double> abs_tol;
    std::optional<int> max_subdivisions;
    std::optional<long> samples;
    std::uint64_t seed = 0;
    std::optional<int> workers;
    std::optional<long> burn_in;
    std::optional<int> thin;
    int points = 200;
    double zeta_tol = 1e-6;
    bool with_mc = false;
};

int default_workers() {
    const char *env = std::getenv(kWorkersEnv);
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    int workers = 0;
    std::string_view text(env);
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), workers);
    if (ec != std::errc() || ptr != text.data() + text.size() || workers < 1) {
        throw DomainError(std::string(kWorkersEnv) + " must be a positive integer");
    }
    return workers;
}

RunConfig interpret(const std::string &command, const RawFlags &raw) {
    RunConfig cfg;
    cfg.command = command;
    int default_n = (command == "average" || command == "minimize") ? 3 : 2;
    cfg.n = raw.n.value_or(default_n);
    if (!raw.metric.empty()) {
        cfg.metric = parse_metric(raw.metric);
    }
    if (!raw.zeta.empty()) {
        cfg.zeta = parse_angle(raw.zeta);
    }
    cfg.direction = raw.direction;
    if (!raw.method.empty()) {
        cfg.eval.method = parse_method(raw.method);
    }
    cfg.eval.quad.rel_tol = raw.rel_tol.value_or(cfg.eval.quad.rel_tol);
    cfg.eval.quad.abs_tol = raw.abs_tol.value_or(cfg.eval.quad.abs_tol);
    cfg.eval.quad.max_subdivisions = raw.max_subdivisions.value_or(cfg.eval.quad.max_subdivisions);
    cfg.eval.mc.samples = raw.samples.value_or(cfg.eval.mc.samples);
    cfg.eval.mc.seed = raw.seed;
    cfg.eval.mc.workers = raw.workers ? *raw.workers : default_workers();
    cfg.eval.mcmc.burn_in = raw.burn_in.value_or(cfg.eval.mcmc.burn_in);
    cfg.eval.mcmc.thin = raw.thin.value_or(cfg.eval.mcmc.thin);
    std::string format = raw.format;
    if (format.empty()) {
        format = (command == "curve" || command == "sample") ? "csv" : "json";
    }
    if (format == "json") {
        cfg.format = OutputFormat::Json;
    } else if (format == "csv") {
        cfg.format = OutputFormat::Csv;
    } else {
        throw DomainError("unknown format '" + format + "' (expected json or csv)");
    }
    cfg.out_path = raw.out;
    cfg.points = raw.points;
    cfg.zeta_tol = raw.zeta_tol;
    if (!raw.sampler.empty()) {
        if (raw.sampler == "ginibre") {
            cfg.sampler = SamplerKind::Ginibre;
        } else if (raw.sampler == "bures") {
            cfg.sampler = SamplerKind::Bures;
        } else if (raw.sampler == "mcmc") {
            cfg.sampler = SamplerKind::Mcmc;
        } else {
            throw DomainError("unknown sampler '" + raw.sampler + "' (expected ginibre, bures or mcmc)");
        }
    }
    cfg.with_mc = raw.with_mc;
    cfg.validate();
    return cfg;
}

ModuliPoint moduli_for(const RunConfig &cfg) {
    if (!cfg.direction.empty()) {
        return ModuliPoint::direction(cfg.direction);
    }
    if (cfg.n == 2) {
        return ModuliPoint::qubit();
    }
    if (cfg.n == 3 && cfg.zeta) {
        return ModuliPoint::qutrit(*cfg.zeta);
    }
    if (cfg.n == 3) {
        throw DomainError("N=3 needs --zeta (e.g. --zeta pi/6)");
    }
    throw DomainError("N >= 4 needs --direction (N comma-separated components, unit norm, zero sum)");
}

json result_to_json(const IndicatorResult &r) {
    json j;
    j["value"] = r.value;
    j["error"] = r.error;
    j["method"] = std::string(method_name(r.method));
    j["metric"] = std::string(metric_name(r.metric));
    j["n"] = r.n;
    if (r.moduli && r.moduli->kind() == ModuliPoint::Kind::Apex) {
        j["zeta"] = r.moduli->zeta();
    } else {
        j["zeta"] = nullptr;
    }
    j["moduli"] = r.moduli ? r.moduli->describe() : std::string("averaged");
    j["samples"] = r.samples;
    j["diagnostics"] = r.diagnostics;
    return j;
}

const char *kResultCsvHeader = "value,error,method,metric,n,zeta";

std::string result_to_csv_row(const IndicatorResult &r) {
    std::string zeta;
    if (r.moduli && r.moduli->kind() == ModuliPoint::Kind::Apex) {
        zeta = format_number(r.moduli->zeta());
    } else if (!r.moduli) {
        zeta = "averaged";
    }
    std::ostringstream row;
    row << format_number(r.value) << ',' << format_number(r.error) << ',' << method_name(r.method) << ','
        << metric_name(r.metric) << ',' << r.n << ',' << zeta;
    return row.str();
}

int cmd_indicator(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    MetricKind metric = cfg.metric.value_or(MetricKind::HS);
    auto result = global_indicator(metric, cfg.n, moduli_for(cfg), cfg.eval);
    for (const auto &note : result.diagnostics) {
        err << "warning: " << note << "\n";
    }
    if (cfg.format == OutputFormat::Json) {
        out << result_to_json(result).dump(2) << "\n";
    } else {
        out << kResultCsvHeader << "\n" << result_to_csv_row(result) << "\n";
    }
    return kExitOk;
}

int cmd_average(const RunConfig &cfg, std::ostream &out) {
    std::vector<MetricKind> metrics;
    if (cfg.metric) {
        metrics.push_back(*cfg.metric);
    } else {
        metrics.assign(kAllMetrics.begin(), kAllMetrics.end());
    }
    std::vector<IndicatorResult> results;
    for (MetricKind m : metrics) {
        results.push_back(average_indicator(m, cfg.n, cfg.eval));
    }
    if (cfg.format == OutputFormat::Json) {
        json j;
        j["n"] = cfg.n;
        j["moduli_measure"] = "uniform dzeta on [0, pi/3]";
        j["results"] = json::array();
        for (const auto &r : results) {
            j["results"].push_back(result_to_json(r));
        }
        out << j.dump(2) << "\n";
    } else {
        out << kResultCsvHeader << "\n";
        for (const auto &r : results) {
            out << result_to_csv_row(r) << "\n";
        }
    }
    return kExitOk;
}

int cmd_minimize(const RunConfig &cfg, std::ostream &out) {
    MetricKind metric = cfg.metric.value_or(MetricKind::HS);
    auto best = minimize_indicator(metric, cfg.n, cfg.eval, cfg.zeta_tol);
    if (cfg.format == OutputFormat::Json) {
        json j;
        j["metric"] = std::string(metric_name(metric));
        j["n"] = cfg.n;
        j["method"] = std::string(method_name(cfg.eval.method));
        j["zeta_star"] = best.zeta;
        j["q_star"] = best.value;
        j["iterations"] = best.iterations;
        out << j.dump(2) << "\n";
    } else {
        out << "metric,n,method,zeta_star,q_star\n"
            << metric_name(metric) << ',' << cfg.n << ',' << method_name(cfg.eval.method) << ','
            << format_number(best.zeta) << ',' << format_number(best.value) << "\n";
    }
    return kExitOk;
}

int cmd_curve(const RunConfig &cfg, std::ostream &out) {
    if (cfg.points < 2) {
        throw DomainError("--points must be at least 2");
    }
    std::vector<std::array<double, 4>> rows;
    for (int i = 0; i < cfg.points; i++) {
        double radius = static_cast<double>(i) / (cfg.points - 1);
        rows.push_back({radius, qubit_positivity_probability(MetricKind::HS, radius),
                        qubit_positivity_probability(MetricKind::Bures, radius),
                        qubit_positivity_probability(MetricKind::BKM, radius)});
    }
    if (cfg.format == OutputFormat::Csv) {
        out << "R,Q_HS,Q_Bures,Q_BKM\n";
        for (const auto &row : rows) {
            out << format_number(row[0]) << ',' << format_number(row[1]) << ',' << format_number(row[2]) << ','
                << format_number(row[3]) << "\n";
        }
    } else {
        json j;
        j["columns"] = {"R", "Q_HS", "Q_Bures", "Q_BKM"};
        j["rows"] = rows;
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_sample(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    MetricKind metric = cfg.metric.value_or(MetricKind::HS);
    SamplerKind sampler = cfg.sampler.value_or(default_sampler(metric));
    std::vector<StateSpectrum> samples;
    switch (sampler) {
        case SamplerKind::Ginibre:
            if (metric != MetricKind::HS) {
                throw DomainError("the ginibre sampler realizes the HS measure only");
            }
            samples = sample_hs_spectrum(cfg.n, cfg.eval.mc);
            break;
        case SamplerKind::Bures:
            if (metric != MetricKind::Bures) {
                throw DomainError("the bures sampler realizes the Bures measure only");
            }
            samples = sample_bures_spectrum(cfg.n, cfg.eval.mc);
            break;
        case SamplerKind::Mcmc: {
            auto run = sample_spectrum_mcmc(metric, cfg.n, cfg.eval.mc, cfg.eval.mcmc);
            for (const auto &note : run.diagnostics) {
                err << "warning: " << note << "\n";
            }
            samples = std::move(run.samples);
            break;
        }
    }
    if (cfg.format == OutputFormat::Csv) {
        for (int i = 0; i < cfg.n; i++) {
            out << (i ? "," : "") << 'r' << (i + 1);
        }
        out << "\n";
        for (const auto &s : samples) {
            for (size_t i = 0; i < s.dim(); i++) {
                out << (i ? "," : "") << format_number(s[i]);
            }
            out << "\n";
        }
    } else {
        json rows = json::array();
        for (const auto &s : samples) {
            rows.push_back(std::vector<double>(s.values().begin(), s.values().end()));
        }
        out << rows.dump() << "\n";
    }
    return kExitOk;
}

struct Check {
    std::string id;
    std::string description;
    double computed;
    double expected;
    double tolerance;
    std::string kind;  // "relative", "absolute" or "sigma"
    double sigma = 0;

    bool pass() const {
        double diff = std::abs(computed - expected);
        if (kind == "relative") {
            return diff <= tolerance * std::abs(expected);
        }
        if (kind == "sigma") {
            return diff <= tolerance * sigma;
        }
        return diff <= tolerance;
    }
};

int cmd_reproduce(const RunConfig &cfg, std::ostream &out) {
    constexpr double s3 = std::numbers::sqrt3;
    std::vector<Check> checks;
    EvalOptions quad;
    quad.quad.rel_tol = 1e-10;
    EvalOptions closed;
    closed.method = EstimateMethod::ClosedForm;
    const auto qubit = ModuliPoint::qubit();

    double hs2 = global_indicator(MetricKind::HS, 2, qubit, quad).value;
    checks.push_back({"qubit-hs", "qubit HS indicator = 1/(3 sqrt3)", hs2, 1 / (3 * s3), 1e-8, "relative"});
    double b2_closed = global_indicator(MetricKind::Bures, 2, qubit, closed).value;
    double b2_quad = global_indicator(MetricKind::Bures, 2, qubit, quad).value;
    checks.push_back({"qubit-bures", "qubit Bures indicator ~ 0.09172 (printed digits)", b2_closed, 0.09172, 5e-6,
                      "absolute"});
    checks.push_back(
        {"qubit-bures-quad", "qubit Bures quadrature vs closed form", b2_quad, b2_closed, 1e-8, "relative"});
    double k2_closed = global_indicator(MetricKind::BKM, 2, qubit, closed).value;
    double k2_quad = global_indicator(MetricKind::BKM, 2, qubit, quad).value;
    checks.push_back(
        {"qubit-bkm", "qubit BKM indicator ~ 0.0495506 (printed digits)", k2_closed, 0.0495506, 5e-8, "absolute"});
    checks.push_back({"qubit-bkm-quad", "qubit BKM quadrature vs closed form", k2_quad, k2_closed, 1e-8, "relative"});

    auto hs_min = minimize_indicator(MetricKind::HS, 3, quad);
    checks.push_back({"qutrit-hs-argmin", "qutrit HS minimum at zeta = pi/6", hs_min.zeta, std::numbers::pi / 6, 1e-4,
                      "absolute"});
    checks.push_back(
        {"qutrit-hs-min", "qutrit HS minimum = 21/31104", hs_min.value, 21.0 / 31104, 1e-6, "relative"});
    checks.push_back(
        {"qutrit-hs-min-printed", "qutrit HS minimum ~ 0.000675", hs_min.value, 0.000675, 5e-7, "absolute"});

    EvalOptions avg;
    avg.quad.rel_tol = 1e-8;
    checks.push_back({"avg-hs", "<Q_HS> = 0.00136368", average_indicator(MetricKind::HS, 3, avg).value, 0.00136368,
                      1e-4, "relative"});
    checks.push_back({"avg-bures", "<Q_B> = 0.00019165", average_indicator(MetricKind::Bures, 3, avg).value,
                      0.00019165, 1e-2, "relative"});
    checks.push_back({"avg-bkm", "<Q_BKM> = 0.00002762", average_indicator(MetricKind::BKM, 3, avg).value,
                      0.00002762, 1e-2, "relative"});

    if (cfg.with_mc) {
        EvalOptions mc;
        mc.method = EstimateMethod::MonteCarlo;
        mc.mc = cfg.eval.mc;
        mc.mcmc = cfg.eval.mcmc;
        EvalOptions mcmc = mc;
        mcmc.method = EstimateMethod::Mcmc;
        auto hs_mc = global_indicator(MetricKind::HS, 2, qubit, mc);
        checks.push_back({"qubit-hs-mc", "qubit HS Ginibre sampler vs 1/(3 sqrt3)", hs_mc.value, 1 / (3 * s3), 3,
                          "sigma", hs_mc.error});
        auto b_mc = global_indicator(MetricKind::Bures, 2, qubit, mc);
        checks.push_back({"qubit-bures-mc", "qubit Bures matrix-model sampler vs closed form", b_mc.value, b2_closed,
                          3, "sigma", b_mc.error});
        auto k_mc = global_indicator(MetricKind::BKM, 2, qubit, mcmc);
        checks.push_back({"qubit-bkm-mcmc", "qubit BKM Metropolis sampler vs closed form", k_mc.value, k2_closed, 3,
                          "sigma", k_mc.error});
        auto q3 = global_indicator(MetricKind::HS, 3, ModuliPoint::qutrit(std::numbers::pi / 6), mcmc);
        checks.push_back({"qutrit-hs-mcmc", "qutrit HS Metropolis sampler at zeta = pi/6", q3.value, 21.0 / 31104, 3,
                          "sigma", q3.error});
    }

    bool all_pass = true;
    json manifest;
    manifest["checks"] = json::array();
    for (const auto &c : checks) {
        bool ok = c.pass();
        all_pass = all_pass && ok;
        json j;
        j["id"] = c.id;
        j["description"] = c.description;
        j["computed"] = c.computed;
        j["expected"] = c.expected;
        j["tolerance"] = c.tolerance;
        j["kind"] = c.kind;
        if (c.kind == "sigma") {
            j["sigma"] = c.sigma;
        }
        j["pass"] = ok;
        manifest["checks"].push_back(j);
    }
    manifest["all_pass"] = all_pass;
    if (cfg.format == OutputFormat::Json) {
        out << manifest.dump(2) << "\n";
    } else {
        out << "id,computed,expected,tolerance,kind,pass\n";
        for (const auto &c : checks) {
            out << c.id << ',' << format_number(c.computed) << ',' << format_number(c.expected) << ','
                << format_number(c.tolerance) << ',' << c.kind << ',' << (c.pass() ? "PASS" : "FAIL") << "\n";
        }
    }
    return all_pass ? kExitOk : kExitNumerical;
}

int dispatch(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    if (cfg.command == "indicator") {
        return cmd_indicator(cfg, out, err);
    }
    if (cfg.command == "average") {
        return cmd_average(cfg, out);
    }
    if (cfg.command == "minimize") {
        return cmd_minimize(cfg, out);
    }
    if (cfg.command == "curve") {
        return cmd_curve(cfg, out);
    }
    if (cfg.command == "sample") {
        return cmd_sample(cfg, out, err);
    }
    if (cfg.command == "reproduce-paper") {
        return cmd_reproduce(cfg, out);
    }
    throw DomainError("unknown command '" + cfg.command + "'");
}

}  // namespace

void RunConfig::validate() const {
    if (n < 2) {
        throw DomainError("--n must be at least 2");
    }
    if (zeta && n != 3) {
        throw DomainError("--zeta applies to N=3 only");
    }
    if (zeta && !direction.empty()) {
        throw DomainError("give either --zeta or --direction, not both");
    }
    if (!direction.empty() && direction.size() != static_cast<size_t>(n)) {
        throw DomainError("--direction needs exactly N components");
    }
    if ((command == "average" || command == "minimize") && n != 3) {
        throw DomainError(command + " is available for N=3 only");
    }
    if (command == "curve" && n != 2) {
        throw DomainError("curve describes qubits; use --n 2");
    }
    eval.quad.validate();
    eval.mc.validate();
    eval.mcmc.validate();
}

double parse_angle(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    if (s.empty()) {
        throw DomainError("empty angle");
    }
    auto pi_pos = s.find("pi");
    if (pi_pos == std::string::npos) {
        return parse_number(s);
    }
    std::string_view numerator(s.data(), pi_pos);
    std::string_view rest(s.data() + pi_pos + 2, s.size() - pi_pos - 2);
    double factor = 1;
    if (!numerator.empty() && numerator.back() == '*') {
        numerator.remove_suffix(1);
        if (numerator.empty()) {
            throw DomainError("cannot parse angle '" + std::string(text) + "'");
        }
    }
    if (numerator == "-") {
        factor = -1;
    } else if (numerator == "+") {
        factor = 1;
    } else if (!numerator.empty()) {
        factor = parse_number(numerator);
    }
    double divisor = 1;
    if (!rest.empty()) {
        if (rest.front() != '/' || rest.size() < 2) {
            throw DomainError("cannot parse angle '" + std::string(text) + "'");
        }
        divisor = parse_number(rest.substr(1));
        if (divisor == 0) {
            throw DomainError("angle divides by zero");
        }
    }
    return factor * std::numbers::pi / divisor;
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Relative volumes of Wigner-positive quantum states under HS, Bures and BKM measures", "wigvol"};
    app.require_subcommand(1);
    RawFlags raw;

    auto add_model = [&](CLI::App *sub) {
        sub->add_option("--n", raw.n, "Hilbert-space dimension N");
        sub->add_option("--metric", raw.metric, "hs, bures or bkm");
    };
    auto add_numerics = [&](CLI::App *sub) {
        sub->add_option("--method", raw.method, "closed, quad, mc or mcmc");
        sub->add_option("--rel-tol", raw.rel_tol, "quadrature relative tolerance");
        sub->add_option("--abs-tol", raw.abs_tol, "quadrature absolute tolerance");
        sub->add_option("--max-subdiv", raw.max_subdivisions, "quadrature subdivision budget");
    };
    auto add_sampling = [&](CLI::App *sub) {
        sub->add_option("--samples", raw.samples, "Monte Carlo sample count");
        sub->add_option("--seed", raw.seed, "master seed");
        sub->add_option("--workers", raw.workers,
                        std::string("worker threads (default $") + kWorkersEnv + " or 1); part of the seed contract");
        sub->add_option("--burn-in", raw.burn_in, "Metropolis burn-in steps");
        sub->add_option("--thin", raw.thin, "Metropolis steps per recorded sample");
    };
    auto add_output = [&](CLI::App *sub) {
        sub->add_option("--format", raw.format, "json or csv");
        sub->add_option("--out", raw.out, "write to this file instead of stdout");
    };

    auto *indicator = app.add_subcommand("indicator", "global indicator Q_N for one Wigner representation");
    add_model(indicator);
    indicator->add_option("--zeta", raw.zeta, "qutrit moduli angle in radians, e.g. pi/6");
    indicator->add_option("--direction", raw.direction, "general-N moduli direction")->delimiter(',');
    add_numerics(indicator);
    add_sampling(indicator);
    add_output(indicator);

    auto *average = app.add_subcommand("average", "moduli-space average of the qutrit indicator");
    add_model(average);
    add_numerics(average);
    add_output(average);

    auto *minimize = app.add_subcommand("minimize", "minimize the qutrit indicator over the moduli angle");
    add_model(minimize);
    add_numerics(minimize);
    minimize->add_option("--zeta-tol", raw.zeta_tol, "bracket width at which the search stops");
    add_output(minimize);

    auto *curve = app.add_subcommand("curve", "qubit positivity probability Q(R) for all three metrics");
    curve->add_option("--points", raw.points, "number of radii in [0, 1]");
    add_output(curve);

    auto *sample = app.add_subcommand("sample", "draw random state spectra");
    add_model(sample);
    sample->add_option("--sampler", raw.sampler, "ginibre, bures or mcmc (default: matrix model if available)");
    add_sampling(sample);
    add_output(sample);

    auto *reproduce = app.add_subcommand("reproduce-paper", "recompute the reference table and report pass/fail");
    reproduce->add_flag("--with-mc", raw.with_mc, "also run the sampling cross-checks");
    add_sampling(reproduce);
    add_output(reproduce);

    try {
        app.parse(argc, const_cast<char **>(argv));
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::string command = app.get_subcommands().front()->get_name();
    RunConfig cfg;
    try {
        cfg = interpret(command, raw);
    } catch (const DomainError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (cfg.out_path.empty()) {
            return dispatch(cfg, out, err);
        }
        std::ofstream file(cfg.out_path);
        if (!file) {
            err << "cannot open '" << cfg.out_path << "' for writing\n";
            return kExitUsage;
        }
        int code = dispatch(cfg, file, err);
        file.close();
        if (!file) {
            err << "failed writing '" << cfg.out_path << "'\n";
            return kExitNumerical;
        }
        return code;
    } catch (const DomainError &e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConvergenceError &e) {
        err << "numerical failure: " << e.what() << "\n"
            << "best estimate " << format_number(e.best_estimate) << ", error estimate "
            << format_number(e.error_estimate) << "\n";
        return kExitNumerical;
    }
}

}  // namespace wigvol::cli
