// Copyright 2026 The weaklab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weaklab/cli/runner.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "weaklab/error.hpp"
#include "weaklab/experiments.hpp"

namespace weaklab::cli {

using nlohmann::json;

bool Outcome::passed() const {
    for (const auto &c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::string format_number(double v) {
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

json cjson(Complex c) { return {{"re", c.real()}, {"im", c.imag()}}; }

// JSON has no NaN; undefined values are emitted as null.
json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

void add_check(Outcome &o, std::string name, double value, double tol) {
    const bool ok = std::isfinite(value) && value <= tol;
    o.checks.push_back({std::move(name), value, tol, ok});
}

std::string cell(double v) { return format_number(v); }
std::string cell(std::size_t v) { return std::to_string(v); }

// --- Per-experiment reports -----------------------------------------------

Outcome pauli_outcome(const RunConfig &cfg) {
    Outcome o;
    Table t{"pauli_sweep",
            {"alpha", "sxsy_re", "sxsy_im", "sz_w", "commutator_im", "target", "residual"},
            {}};
    json rows = json::array();
    for (double alpha : cfg.alpha_sweep) {
        const PauliReport r = pauli_suite(alpha);
        const double residual = std::max(r.max_residual, r.commutator_identity_residual);
        json quantities = json::object();
        for (const auto &q : r.quantities)
            quantities[q.name] = {
                {"value", cjson(q.value)}, {"target", cjson(q.target)}, {"residual", q.residual}};
        rows.push_back({{"alpha", alpha},
                        {"tan_half", r.tan_half},
                        {"quantities", quantities},
                        {"max_residual", r.max_residual},
                        {"commutator_identity_residual", r.commutator_identity_residual}});
        t.rows.push_back({cell(alpha), cell(r.sxsy.real()), cell(r.sxsy.imag()),
                          cell(r.sz_w.real()), cell(r.commutator.imag()), cell(r.tan_half),
                          cell(residual)});
        add_check(o, "pauli_residual[alpha=" + format_number(alpha) + "]", residual,
                  kPauliTolerance);
    }
    o.report = {{"rows", rows}};
    o.tables.push_back(std::move(t));
    return o;
}

json average_json(const CcrAverage &a) {
    return {{"g", a.g},
            {"born_product_over_g2", a.born_product_over_g2},
            {"mid_weighted_product_over_g2", a.mid_weighted_product_over_g2},
            {"target", a.target},
            {"skipped_outcomes", a.skipped}};
}

json stats_json(const EnsembleStats &s) {
    json j = {{"attempted", s.attempted},
              {"accepted", s.accepted},
              {"acceptance_rate", s.acceptance_rate},
              {"weighted", s.weighted},
              {"effective_samples", s.effective_samples},
              {"mean_dx", s.mean_dx},
              {"stderr_dx", s.stderr_dx}};
    if (s.mean_dx_prime) {
        j["mean_dx_prime"] = *s.mean_dx_prime;
        j["stderr_dx_prime"] = *s.stderr_dx_prime;
        j["mean_product"] = *s.mean_product;
        j["stderr_product"] = *s.stderr_product;
    }
    return j;
}

Outcome ccr_outcome(const RunConfig &cfg) {
    const Representation rep = build_representation(cfg);
    const CcrExperimentConfig ec{rep,           build_state(cfg.initial, rep, std::nullopt),
                                 cfg.sigma,     cfg.sigma_prime,
                                 cfg.g,         cfg.n_trials,
                                 cfg.master_seed, cfg.workers,
                                 cfg.halving,   cfg.pointer_grid};
    const CcrReport r = ccr_experiment(ec);
    const AveragedCcr &d = r.decomposition;

    Outcome o;
    json pointer = average_json(r.pointer);
    pointer["relative_error"] = r.pointer_relative_error;
    if (r.pointer_half) {
        pointer["half_g"] = average_json(*r.pointer_half);
        pointer["halving_ratio"] = *r.halving_ratio;
    }
    o.report = {
        {"representation", cfg.representation},
        {"edge_amplitude", r.edge_amplitude},
        {"commutator",
         {{"value", cjson(d.commutator)},
          {"oracle", cjson(r.commutator_oracle)},
          {"target", cjson(r.commutator_target)},
          {"oracle_residual", r.commutator_residual},
          {"residual", r.commutator_ideal_residual}}},
        {"cross_term", {{"lhs", d.lhs}, {"target", d.target}, {"residual", r.cross_term_residual}}},
        {"imx_rep",
         {{"lhs", d.real_p_lhs}, {"target", d.real_p_target}, {"residual", r.imx_rep_residual}}},
        {"pointer", pointer},
    };
    add_check(o, "averaged_commutator_residual", r.commutator_ideal_residual,
              kCommutatorTolerance);
    add_check(o, "cross_term_residual", r.cross_term_residual, kCommutatorTolerance);
    add_check(o, "imx_rep_residual", r.imx_rep_residual, kCommutatorTolerance);
    add_check(o, "pointer_relative_error", r.pointer_relative_error, kPointerAverageTolerance);
    if (r.halving_ratio)
        add_check(o, "pointer_halving_ratio_deviation", std::abs(*r.halving_ratio - 4.0) / 4.0,
                  0.2);
    if (r.monte_carlo) {
        const CcrMonteCarlo &mc = *r.monte_carlo;
        o.report["monte_carlo"] = {{"stats", stats_json(mc.stats)},
                                   {"product_over_g2", mc.product_over_g2},
                                   {"stderr_over_g2", mc.stderr_over_g2},
                                   {"reference", mc.reference},
                                   {"z_score", mc.z_score}};
        add_check(o, "monte_carlo_z_score", std::abs(mc.z_score), kMonteCarloSigmas);
    }

    Table t{"ccr_outcomes",
            {"index", "momentum", "weight", "x_w_re", "x_w_im", "p_w_re", "p_w_im", "cross_term_term",
             "imx_rep_term", "p_mid", "p_post", "dx_d", "dx_d_prime", "predicted_dx",
             "product_over_g2"},
            {}};
    std::vector<const CcrOutcome *> by_index(d.terms.size(), nullptr);
    for (const auto &oc : r.pointer.outcomes)
        by_index[oc.index] = &oc;
    for (std::size_t k = 0; k < d.terms.size(); ++k) {
        const CcrTerm &term = d.terms[k];
        std::vector<std::string> row{cell(k), cell(r.momenta[k]), cell(term.weight)};
        for (const auto &w : {term.x_w, term.p_w}) {
            row.push_back(w ? cell(w->real()) : "");
            row.push_back(w ? cell(w->imag()) : "");
        }
        row.push_back(cell(term.lhs_term));
        row.push_back(cell(term.real_p_term));
        if (const CcrOutcome *oc = by_index[k]) {
            for (double v : {oc->p_mid, oc->p_post, oc->dx_d, oc->dx_d_prime})
                row.push_back(cell(v));
            row.push_back(term.x_w ? cell(oc->predicted_dx) : "");
            row.push_back(cell(oc->product_over_g2));
        } else {
            row.insert(row.end(), 6, "");
        }
        t.rows.push_back(std::move(row));
    }
    o.tables.push_back(std::move(t));
    return o;
}

Outcome riemann_outcome(const RunConfig &cfg) {
    const Representation rep = build_representation(cfg);
    const StateVector i = build_state(cfg.initial, rep, std::nullopt);
    const StateVector f = build_state(cfg.final_state, rep, i);
    const RiemannReport r = riemann_experiment(rep, i, f);

    Outcome o;
    o.report = {
        {"rho_w", cjson(r.rho_w)},
        {"r_w", cjson(r.r_w)},
        {"r_w_direct", cjson(r.r_w_direct)},
        {"correlation_form", r.correlation_form},
        {"form_difference", r.form_difference},
        {"correlation_lhs", r.correlation_lhs},
        {"correlation_identity_residual", r.correlation_identity_residual},
        {"averaged_lhs", r.averaged_lhs},
        {"averaged_target", r.averaged_target},
        {"averaged_residual", r.averaged_residual},
        {"hermiticity_residual", r.hermiticity_residual},
        {"half_line_residual", r.half_line_residual},
        {"half_line_full", r.half_line_full ? json(*r.half_line_full) : json(nullptr)},
        {"r_w_consistency", std::abs(r.r_w - r.r_w_direct)},
        {"reference_zeros", ReferenceZeros::values},
    };
    add_check(o, "hermiticity_residual", r.hermiticity_residual, 1e-12);
    add_check(o, "half_line_residual", r.half_line_residual, 1e-12);
    add_check(o, "correlation_identity_residual",
              r.correlation_identity_residual / std::max(1.0, std::abs(r.correlation_lhs)),
              1e-12);
    add_check(o, "averaged_lhs_residual",
              r.averaged_residual / std::max(1.0, std::abs(r.averaged_target)), 1e-10);
    return o;
}

Outcome chain_outcome(const RunConfig &cfg) {
    const ChainReport r = chain_experiment(cfg.chain_dim, cfg.chain_order, cfg.master_seed);
    Outcome o;
    o.report = {
        {"order", r.order},
        {"dim", r.dim},
        {"value", cjson(r.value)},
        {"oracle", cjson(r.oracle)},
        {"oracle_residual", r.oracle_residual},
        {"two_op_residual", r.two_op_residual},
        {"dual_product_residual", r.symmetry.dual_product},
        {"commutator_symmetry_residual", r.symmetry.commutator},
        {"dual_residual", r.dual_residual ? json(*r.dual_residual) : json(nullptr)},
    };
    if (r.literal)
        o.report["literal_residuals"] = {{"forward", r.literal->forward},
                                         {"dual", r.literal->dual}};
    const double scale = std::max(1.0, std::abs(r.value));
    add_check(o, "oracle_residual", r.oracle_residual, 1e-12);
    add_check(o, "two_op_residual", r.two_op_residual, 1e-12);
    add_check(o, "dual_product_residual", r.symmetry.dual_product, 1e-12);
    add_check(o, "commutator_symmetry_residual", r.symmetry.commutator, 1e-12);
    if (r.dual_residual)
        add_check(o, "dual_chain_residual", *r.dual_residual / scale, 1e-12);
    return o;
}

Outcome montecarlo_outcome(const RunConfig &cfg) {
    MonteCarloConfig mc;
    mc.alpha = cfg.alpha;
    mc.axis = cfg.axis == "x" ? PauliAxis::x : cfg.axis == "y" ? PauliAxis::y : PauliAxis::z;
    mc.sigma = cfg.sigma;
    mc.g = cfg.g;
    mc.pointer_grid = cfg.pointer_grid;
    mc.n_trials = cfg.n_trials;
    mc.seed = cfg.master_seed;
    mc.workers = cfg.workers;
    const MonteCarloReport r = montecarlo_experiment(mc);
    const WeakValueEstimate &e = r.estimate;

    Outcome o;
    o.report = {
        {"weak_value", cjson(r.weak_value)},
        {"exact_pointer", cjson(r.exact_pointer)},
        {"first_order_gap", std::abs(r.exact_pointer - r.weak_value)},
        {"estimate", {{"re", e.re_est}, {"im", e.im_est}}},
        {"stderr", {{"re", e.stderr_re}, {"im", e.stderr_im}}},
        {"z_re", num(r.z_re)},
        {"z_im", num(r.z_im)},
        {"position_run", stats_json(e.position_run)},
        {"momentum_run", stats_json(e.momentum_run)},
    };
    add_check(o, "z_re", std::abs(r.z_re), kMonteCarloSigmas);
    add_check(o, "z_im", std::abs(r.z_im), kMonteCarloSigmas);
    return o;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void write_csv(const std::filesystem::path &path, const Table &t) {
    std::ofstream out(path, std::ios::binary);
    auto line = [&out](const std::vector<std::string> &cells) {
        for (std::size_t k = 0; k < cells.size(); ++k)
            out << (k ? "," : "") << cells[k];
        out << '\n';
    };
    line(t.header);
    for (const auto &r : t.rows)
        line(r);
    if (!out)
        throw std::runtime_error("cannot write " + path.string());
}

} // namespace

Outcome execute(const RunConfig &cfg) {
    switch (cfg.experiment) {
    case Experiment::pauli: return pauli_outcome(cfg);
    case Experiment::ccr: return ccr_outcome(cfg);
    case Experiment::riemann: return riemann_outcome(cfg);
    case Experiment::chain: return chain_outcome(cfg);
    case Experiment::montecarlo: return montecarlo_outcome(cfg);
    }
    raise(ErrorCode::InvalidConfig, "unknown experiment");
}

json run_record(const RunConfig &cfg, const Outcome &outcome, const std::string &timestamp) {
    json checks = json::array();
    for (const auto &c : outcome.checks)
        checks.push_back({{"name", c.name},
                          {"value", num(c.value)},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed}});
    return {{"artifact", {{"name", "weaklab"}, {"version", kArtifactVersion}}},
            {"timestamp", timestamp},
            {"config", to_json(cfg)},
            {"report", outcome.report},
            {"checks", checks},
            {"passed", outcome.passed()}};
}

void write_outputs(const RunConfig &cfg, const Outcome &outcome, const json &record) {
    namespace fs = std::filesystem;
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    if (cfg.write_json) {
        std::ofstream out(dir / "run.json", std::ios::binary);
        out << record.dump(2) << '\n';
        if (!out)
            throw std::runtime_error("cannot write " + (dir / "run.json").string());
    }
    if (cfg.write_csv) {
        for (const auto &t : outcome.tables)
            write_csv(dir / (t.name + ".csv"), t);
        Table summary{"summary", {"check", "value", "tolerance", "passed"}, {}};
        for (const auto &c : outcome.checks)
            summary.rows.push_back({c.name, format_number(c.value), format_number(c.tolerance),
                                    c.passed ? "true" : "false"});
        write_csv(dir / "summary.csv", summary);
    }
}

// --- Command line ---------------------------------------------------------

namespace {

struct Flags {
    std::string config, out, format, rep, alpha_sweep, axis;
    double hbar = 1.0, sigma = 1.0, sigma_prime = 0.01, g = 0.01, alpha = 0.0, length = 0.0;
    std::size_t dim = 0, n_points = 0, trials = 0, workers = 1, order = 0, chain_dim = 0;
    std::uint64_t seed = 0;
    bool no_halving = false;
};

struct Registered {
    CLI::App *app;
    std::map<std::string, CLI::Option *> opts;

    bool given(const std::string &name) const {
        auto it = opts.find(name);
        return it != opts.end() && it->second->count() > 0;
    }
};

Registered register_run(CLI::App &parent, Experiment e, const std::string &help, Flags &f) {
    Registered r{parent.add_subcommand(to_string(e), help), {}};
    CLI::App &s = *r.app;
    r.opts["config"] = s.add_option("--config", f.config, "JSON config file");
    r.opts["out"] = s.add_option("--out", f.out, "output directory");
    r.opts["seed"] = s.add_option("--seed", f.seed, "master seed");
    r.opts["format"] = s.add_option("--format", f.format, "json, csv or both")
                           ->check(CLI::IsMember({"json", "csv", "both"}));
    r.opts["hbar"] = s.add_option("--hbar", f.hbar, "reduced Planck constant");
    r.opts["workers"] = s.add_option("--workers", f.workers, "Monte Carlo worker threads");
    switch (e) {
    case Experiment::pauli:
        r.opts["alpha-sweep"] =
            s.add_option("--alpha-sweep", f.alpha_sweep, "comma-separated angles (radians)");
        break;
    case Experiment::ccr:
    case Experiment::riemann:
        r.opts["rep"] = s.add_option("--rep", f.rep, "fock or grid")
                            ->check(CLI::IsMember({"fock", "grid"}));
        r.opts["dim"] = s.add_option("--dim", f.dim, "Fock levels");
        r.opts["n-points"] = s.add_option("--n-points", f.n_points, "grid points");
        r.opts["length"] = s.add_option("--length", f.length, "grid span");
        if (e == Experiment::ccr) {
            r.opts["sigma"] = s.add_option("--sigma", f.sigma, "first pointer width");
            r.opts["sigma-prime"] =
                s.add_option("--sigma-prime", f.sigma_prime, "second pointer width");
            r.opts["g"] = s.add_option("--g", f.g, "coupling strength");
            r.opts["trials"] = s.add_option("--trials", f.trials, "Monte Carlo trials (0 skips)");
            r.opts["no-halving"] = s.add_flag("--no-halving", f.no_halving, "skip the g/2 run");
        }
        break;
    case Experiment::chain:
        r.opts["dim"] = s.add_option("--dim", f.chain_dim, "Hilbert-space dimension");
        r.opts["order"] = s.add_option("--order", f.order, "number of operators");
        break;
    case Experiment::montecarlo:
        r.opts["alpha"] = s.add_option("--alpha", f.alpha, "spin angle (radians)");
        r.opts["axis"] = s.add_option("--axis", f.axis, "observable x, y or z")
                             ->check(CLI::IsMember({"x", "y", "z"}));
        r.opts["sigma"] = s.add_option("--sigma", f.sigma, "pointer width");
        r.opts["g"] = s.add_option("--g", f.g, "coupling strength");
        r.opts["trials"] = s.add_option("--trials", f.trials, "trials per readout");
        break;
    }
    return r;
}

std::vector<double> parse_sweep(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw ConfigError("flag '--alpha-sweep': empty entry");
        const std::string tok = item.substr(b, e - b + 1);
        double v = 0.0;
        auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (res.ec != std::errc() || res.ptr != tok.data() + tok.size())
            throw ConfigError("flag '--alpha-sweep': '" + tok + "' is not a number");
        out.push_back(v);
    }
    if (out.empty())
        throw ConfigError("flag '--alpha-sweep': no angles given");
    return out;
}

/// Flags are applied on top of the config document, so they win.
json apply_flags(json user, const Registered &r, const Flags &f) {
    auto nested = [&user](const char *parent) -> json & {
        if (!user.contains(parent) || !user[parent].is_object())
            user[parent] = json::object();
        return user[parent];
    };
    if (r.given("out")) user["output_dir"] = f.out;
    if (r.given("seed")) user["master_seed"] = f.seed;
    if (r.given("hbar")) user["hbar"] = f.hbar;
    if (r.given("workers")) user["workers"] = f.workers;
    if (r.given("format"))
        user["output_formats"] = f.format == "both" ? json::array({"json", "csv"})
                                                    : json::array({f.format});
    if (r.given("alpha-sweep")) user["alpha_sweep"] = parse_sweep(f.alpha_sweep);
    if (r.given("rep")) nested("representation")["kind"] = f.rep;
    if (r.given("n-points")) nested("representation")["n_points"] = f.n_points;
    if (r.given("length")) nested("representation")["length"] = f.length;
    if (r.given("sigma")) user["sigma"] = f.sigma;
    if (r.given("sigma-prime")) user["sigma_prime"] = f.sigma_prime;
    if (r.given("g")) user["g"] = f.g;
    if (r.given("trials")) user["n_trials"] = f.trials;
    if (r.given("no-halving")) user["halving"] = false;
    if (r.given("alpha")) user["alpha"] = f.alpha;
    if (r.given("axis")) user["axis"] = f.axis;
    if (r.given("order")) nested("chain")["order"] = f.order;
    if (r.given("dim")) {
        if (r.app->get_name() == "chain")
            nested("chain")["dim"] = f.chain_dim;
        else
            nested("representation")["dim"] = f.dim;
    }
    return user;
}

int run_experiment(Experiment e, const Registered &r, const Flags &f, std::ostream &out,
                   std::ostream &err) {
    RunConfig cfg;
    try {
        json user = r.given("config") ? load_config_file(f.config) : json::object();
        cfg = resolve_config(apply_flags(std::move(user), r, f), e);
    } catch (const ConfigError &ex) {
        err << "config error: " << ex.what() << '\n';
        return kExitConfigError;
    }

    Outcome outcome;
    try {
        outcome = execute(cfg);
    } catch (const Error &ex) {
        err << "numerical error: " << ex.what() << '\n' << "error: " << ex.name() << '\n';
        return kExitNumericalError;
    }

    try {
        write_outputs(cfg, outcome, run_record(cfg, outcome, utc_timestamp()));
    } catch (const std::exception &ex) {
        err << "output error: " << ex.what() << '\n';
        return kExitConfigError;
    }

    for (const auto &c : outcome.checks)
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " = " << format_number(c.value)
            << " (tolerance " << format_number(c.tolerance) << ")\n";
    return outcome.passed() ? kExitPass : kExitToleranceFailure;
}

int run_validate(const std::string &path, std::ostream &out, std::ostream &err) {
    std::vector<Diagnostic> diags;
    try {
        const json user = load_config_file(path);
        auto it = user.find("experiment");
        if (it == user.end() || !it->is_string())
            throw ConfigError("field 'experiment': required by validate");
        const auto e = experiment_from_string(it->get<std::string>());
        if (!e)
            throw ConfigError("field 'experiment': expected one of pauli, ccr, riemann, chain, "
                              "montecarlo");
        diags = physics_diagnostics(resolve_config(user, *e));
    } catch (const ConfigError &ex) {
        out << "InvalidConfig: " << ex.what() << '\n';
        err << "config error: " << ex.what() << '\n';
        return kExitConfigError;
    }
    for (const auto &d : diags)
        out << d.message << '\n';
    return diags.empty() ? kExitPass : kExitConfigError;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"weaklab: pre/mid/post-selected weak measurement laboratory", "weaklab"};
    app.require_subcommand(1);
    Flags flags;
    std::vector<std::pair<Experiment, Registered>> runs;
    runs.emplace_back(Experiment::pauli,
                      register_run(app, Experiment::pauli, "spin-1/2 weak correlations", flags));
    runs.emplace_back(Experiment::ccr,
                      register_run(app, Experiment::ccr, "canonical commutator", flags));
    runs.emplace_back(Experiment::riemann,
                      register_run(app, Experiment::riemann, "Riemann operator", flags));
    runs.emplace_back(Experiment::chain,
                      register_run(app, Experiment::chain, "selection chains", flags));
    runs.emplace_back(Experiment::montecarlo,
                      register_run(app, Experiment::montecarlo, "pointer ensemble", flags));

    std::string validate_path;
    CLI::App *validate = app.add_subcommand("validate", "check a config without running it");
    auto *vpos = validate->add_option("path", validate_path, "config file");
    auto *vflag = validate->add_option("--config", validate_path, "config file");
    vpos->excludes(vflag);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &ex) {
        const int code = app.exit(ex, out, err);
        return code == 0 ? kExitPass : kExitConfigError;
    }

    if (validate->parsed()) {
        if (validate_path.empty()) {
            err << "config error: validate needs a config path\n";
            return kExitConfigError;
        }
        return run_validate(validate_path, out, err);
    }
    for (const auto &[e, reg] : runs)
        if (reg.app->parsed())
            return run_experiment(e, reg, flags, out, err);
    return kExitConfigError;
}

} // namespace weaklab::cli
