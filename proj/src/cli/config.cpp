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

#include "weaklab/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "weaklab/error.hpp"
#include "weaklab/experiments.hpp"
#include "weaklab/pointer.hpp"

namespace weaklab::cli {

using nlohmann::json;

std::string to_string(Experiment e) {
    switch (e) {
    case Experiment::pauli: return "pauli";
    case Experiment::ccr: return "ccr";
    case Experiment::riemann: return "riemann";
    case Experiment::chain: return "chain";
    case Experiment::montecarlo: return "montecarlo";
    }
    return "unknown";
}

std::optional<Experiment> experiment_from_string(const std::string &name) {
    for (Experiment e : {Experiment::pauli, Experiment::ccr, Experiment::riemann,
                         Experiment::chain, Experiment::montecarlo})
        if (to_string(e) == name)
            return e;
    return std::nullopt;
}

// --- Parsing --------------------------------------------------------------

json parse_config_text(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        // nlohmann reports a 1-based byte offset; turn it into line:column.
        std::size_t line = 1, column = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
        for (std::size_t k = 0; k < stop; ++k) {
            if (text[k] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ConfigError("syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(column) + ": " + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("config root must be an object");
    if (doc.contains("config") && doc.contains("report")) {
        if (!doc["config"].is_object())
            throw ConfigError("field 'config': run record config must be an object");
        return doc["config"];
    }
    return doc;
}

json load_config_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

namespace {

[[noreturn]] void field_error(const std::string &field, const std::string &what) {
    throw ConfigError("field '" + field + "': " + what);
}

void reject_unknown(const json &obj, const std::string &prefix,
                    const std::set<std::string> &known) {
    for (const auto &[key, _] : obj.items())
        if (!known.contains(key))
            field_error(prefix + key, "unknown field");
}

const json *find(const json &obj, const std::string &key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

double number(const json &obj, const std::string &key, const std::string &path, double fallback) {
    const json *v = find(obj, key);
    if (!v)
        return fallback;
    if (!v->is_number())
        field_error(path, "expected a number");
    const double d = v->get<double>();
    if (!std::isfinite(d))
        field_error(path, "must be finite");
    return d;
}

std::uint64_t unsigned_integer(const json &obj, const std::string &key, const std::string &path,
                               std::uint64_t fallback) {
    const json *v = find(obj, key);
    if (!v)
        return fallback;
    if (v->is_number_unsigned())
        return v->get<std::uint64_t>();
    if (v->is_number_integer())
        field_error(path, "must be non-negative");
    field_error(path, "expected an integer");
}

bool boolean(const json &obj, const std::string &key, const std::string &path, bool fallback) {
    const json *v = find(obj, key);
    if (!v)
        return fallback;
    if (!v->is_boolean())
        field_error(path, "expected true or false");
    return v->get<bool>();
}

std::string string(const json &obj, const std::string &key, const std::string &path,
                   const std::string &fallback) {
    const json *v = find(obj, key);
    if (!v)
        return fallback;
    if (!v->is_string())
        field_error(path, "expected a string");
    return v->get<std::string>();
}

const json &object(const json &obj, const std::string &key, const std::string &path) {
    static const json empty = json::object();
    const json *v = find(obj, key);
    if (!v || v->is_null())
        return empty;
    if (!v->is_object())
        field_error(path, "expected an object");
    return *v;
}

Complex complex_value(const json &v, const std::string &path) {
    if (v.is_number())
        return {v.get<double>(), 0.0};
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    field_error(path, "expected a number or a [re, im] pair");
}

void positive(double v, const std::string &path) {
    if (!(v > 0.0))
        field_error(path, "must be positive");
}

StateSpec parse_state(const json &obj, const std::string &path, const RunConfig &cfg) {
    reject_unknown(obj, path + ".",
                   {"kind", "alpha", "center", "width", "wavenumber", "level", "amplitudes"});
    StateSpec s;
    s.kind = string(obj, "kind", path + ".kind", s.kind);
    if (const json *a = find(obj, "alpha"))
        s.alpha = complex_value(*a, path + ".alpha");
    s.center = number(obj, "center", path + ".center", s.center);
    s.width = number(obj, "width", path + ".width", s.width);
    s.wavenumber = number(obj, "wavenumber", path + ".wavenumber", s.wavenumber);
    s.level = unsigned_integer(obj, "level", path + ".level", s.level);
    if (const json *a = find(obj, "amplitudes")) {
        if (!a->is_array())
            field_error(path + ".amplitudes", "expected an array");
        for (std::size_t k = 0; k < a->size(); ++k)
            s.amplitudes.push_back(
                complex_value((*a)[k], path + ".amplitudes[" + std::to_string(k) + "]"));
    }

    const bool fock = cfg.representation == "fock";
    const std::size_t dim = fock ? cfg.dim : cfg.n_points;
    if (s.kind == "default") {
    } else if (s.kind == "coherent") {
        if (!fock)
            field_error(path + ".kind", "coherent states need the fock representation");
    } else if (s.kind == "gaussian") {
        if (fock)
            field_error(path + ".kind", "gaussian packets need the grid representation");
        positive(s.width, path + ".width");
    } else if (s.kind == "level") {
        if (s.level >= dim)
            field_error(path + ".level", "must be below the dimension " + std::to_string(dim));
    } else if (s.kind == "amplitudes") {
        if (s.amplitudes.size() != dim)
            field_error(path + ".amplitudes",
                        "needs exactly " + std::to_string(dim) + " entries");
        double norm = 0.0;
        for (Complex c : s.amplitudes)
            norm += std::norm(c);
        if (!(norm > 0.0) || !std::isfinite(norm))
            field_error(path + ".amplitudes", "must not be the zero vector");
    } else {
        field_error(path + ".kind",
                    "expected one of default, coherent, gaussian, level, amplitudes");
    }
    return s;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json state_json(const StateSpec &s) {
    json amps = json::array();
    for (Complex c : s.amplitudes)
        amps.push_back(complex_json(c));
    return {{"kind", s.kind},       {"alpha", complex_json(s.alpha)},
            {"center", s.center},   {"width", s.width},
            {"wavenumber", s.wavenumber}, {"level", s.level},
            {"amplitudes", amps}};
}

std::vector<double> default_sweep() {
    const double pi = std::numbers::pi;
    return {-5 * pi / 6, -pi / 2, -pi / 3, -pi / 6, 0.0, pi / 6, pi / 3, pi / 2, 5 * pi / 6};
}

} // namespace

RunConfig resolve_config(const json &user, Experiment experiment) {
    reject_unknown(user, "",
                   {"experiment", "hbar", "representation", "initial", "final", "sigma",
                    "sigma_prime", "g", "pointer_grid", "halving", "n_trials", "master_seed",
                    "workers", "alpha_sweep", "alpha", "axis", "chain", "output_dir",
                    "output_formats"});
    RunConfig cfg;
    cfg.experiment = experiment;
    if (const json *e = find(user, "experiment")) {
        if (!e->is_string() || !experiment_from_string(e->get<std::string>()))
            field_error("experiment", "expected one of pauli, ccr, riemann, chain, montecarlo");
        if (*experiment_from_string(e->get<std::string>()) != experiment)
            field_error("experiment", "config is for '" + e->get<std::string>() +
                                          "' but the subcommand is '" + to_string(experiment) +
                                          "'");
    }

    cfg.hbar = number(user, "hbar", "hbar", 1.0);
    positive(cfg.hbar, "hbar");

    const json &rep = object(user, "representation", "representation");
    reject_unknown(rep, "representation.",
                   {"kind", "dim", "mass_freq_product", "n_points", "length"});
    cfg.representation = string(rep, "kind", "representation.kind", cfg.representation);
    if (cfg.representation != "fock" && cfg.representation != "grid")
        field_error("representation.kind", "expected fock or grid");
    cfg.dim = unsigned_integer(rep, "dim", "representation.dim", cfg.dim);
    if (cfg.dim < 2)
        field_error("representation.dim", "must be at least 2");
    cfg.mass_freq_product =
        number(rep, "mass_freq_product", "representation.mass_freq_product", 1.0);
    positive(cfg.mass_freq_product, "representation.mass_freq_product");
    cfg.n_points = unsigned_integer(rep, "n_points", "representation.n_points", cfg.n_points);
    if (cfg.n_points < 8)
        field_error("representation.n_points", "must be at least 8");
    cfg.length = number(rep, "length", "representation.length", cfg.length);
    positive(cfg.length, "representation.length");

    cfg.initial = parse_state(object(user, "initial", "initial"), "initial", cfg);
    cfg.final_state = parse_state(object(user, "final", "final"), "final", cfg);

    cfg.sigma = number(user, "sigma", "sigma", 1.0);
    positive(cfg.sigma, "sigma");
    cfg.sigma_prime = number(user, "sigma_prime", "sigma_prime", 0.01);
    positive(cfg.sigma_prime, "sigma_prime");
    cfg.g = number(user, "g", "g", experiment == Experiment::montecarlo ? 0.05 : 0.01);
    positive(cfg.g, "g");

    const GridConfig dflt = default_pointer_grid(cfg.sigma, cfg.hbar);
    const json &pg = object(user, "pointer_grid", "pointer_grid");
    reject_unknown(pg, "pointer_grid.", {"n_points", "length"});
    cfg.pointer_grid.n_points =
        unsigned_integer(pg, "n_points", "pointer_grid.n_points", dflt.n_points);
    if (cfg.pointer_grid.n_points < 8)
        field_error("pointer_grid.n_points", "must be at least 8");
    cfg.pointer_grid.length = number(pg, "length", "pointer_grid.length", dflt.length);
    positive(cfg.pointer_grid.length, "pointer_grid.length");
    cfg.pointer_grid.hbar = cfg.hbar;

    cfg.halving = boolean(user, "halving", "halving", true);
    const std::uint64_t default_trials = experiment == Experiment::ccr          ? 2000000
                                         : experiment == Experiment::montecarlo ? 200000
                                                                                : 0;
    cfg.n_trials = unsigned_integer(user, "n_trials", "n_trials", default_trials);
    if (experiment == Experiment::montecarlo && cfg.n_trials < 2)
        field_error("n_trials", "montecarlo needs at least 2 trials");
    cfg.master_seed = unsigned_integer(user, "master_seed", "master_seed", 0);
    cfg.workers = unsigned_integer(user, "workers", "workers", 1);
    if (cfg.workers < 1)
        field_error("workers", "must be at least 1");

    if (const json *s = find(user, "alpha_sweep")) {
        if (!s->is_array() || s->empty())
            field_error("alpha_sweep", "expected a non-empty array of numbers");
        for (std::size_t k = 0; k < s->size(); ++k) {
            if (!(*s)[k].is_number())
                field_error("alpha_sweep[" + std::to_string(k) + "]", "expected a number");
            cfg.alpha_sweep.push_back((*s)[k].get<double>());
        }
    } else {
        cfg.alpha_sweep = default_sweep();
    }
    cfg.alpha = number(user, "alpha", "alpha", std::numbers::pi / 3);
    cfg.axis = string(user, "axis", "axis", "y");
    if (cfg.axis != "x" && cfg.axis != "y" && cfg.axis != "z")
        field_error("axis", "expected x, y or z");

    const json &chain = object(user, "chain", "chain");
    reject_unknown(chain, "chain.", {"dim", "order"});
    cfg.chain_dim = unsigned_integer(chain, "dim", "chain.dim", cfg.chain_dim);
    if (cfg.chain_dim < 2)
        field_error("chain.dim", "must be at least 2");
    cfg.chain_order = unsigned_integer(chain, "order", "chain.order", cfg.chain_order);
    if (cfg.chain_order < 1)
        field_error("chain.order", "must be at least 1");

    cfg.output_dir = string(user, "output_dir", "output_dir", cfg.output_dir);
    if (cfg.output_dir.empty())
        field_error("output_dir", "must not be empty");
    if (const json *f = find(user, "output_formats")) {
        if (!f->is_array() || f->empty())
            field_error("output_formats", "expected a non-empty array");
        cfg.write_json = cfg.write_csv = false;
        for (const auto &v : *f) {
            const std::string s = v.is_string() ? v.get<std::string>() : "";
            if (s == "json")
                cfg.write_json = true;
            else if (s == "csv")
                cfg.write_csv = true;
            else
                field_error("output_formats", "entries must be \"json\" or \"csv\"");
        }
    }
    return cfg;
}

json to_json(const RunConfig &cfg) {
    json formats = json::array();
    if (cfg.write_json)
        formats.push_back("json");
    if (cfg.write_csv)
        formats.push_back("csv");
    return {
        {"experiment", to_string(cfg.experiment)},
        {"hbar", cfg.hbar},
        {"representation",
         {{"kind", cfg.representation},
          {"dim", cfg.dim},
          {"mass_freq_product", cfg.mass_freq_product},
          {"n_points", cfg.n_points},
          {"length", cfg.length}}},
        {"initial", state_json(cfg.initial)},
        {"final", state_json(cfg.final_state)},
        {"sigma", cfg.sigma},
        {"sigma_prime", cfg.sigma_prime},
        {"g", cfg.g},
        {"pointer_grid",
         {{"n_points", cfg.pointer_grid.n_points}, {"length", cfg.pointer_grid.length}}},
        {"halving", cfg.halving},
        {"n_trials", cfg.n_trials},
        {"master_seed", cfg.master_seed},
        {"workers", cfg.workers},
        {"alpha_sweep", cfg.alpha_sweep},
        {"alpha", cfg.alpha},
        {"axis", cfg.axis},
        {"chain", {{"dim", cfg.chain_dim}, {"order", cfg.chain_order}}},
        {"output_dir", cfg.output_dir},
        {"output_formats", formats},
    };
}

// --- Building objects -----------------------------------------------------

Representation build_representation(const RunConfig &cfg) {
    if (cfg.representation == "fock") {
        FockConfig f{cfg.dim, cfg.hbar, cfg.mass_freq_product};
        validate(f);
        return make_representation(f);
    }
    GridConfig g{cfg.n_points, cfg.length, cfg.hbar};
    validate(g);
    return make_representation(g);
}

StateVector build_state(const StateSpec &spec, const Representation &rep,
                        const std::optional<StateVector> &fallback) {
    if (spec.kind == "default")
        return fallback ? *fallback : default_initial_state(rep);
    if (spec.kind == "coherent")
        return coherent_state(rep.fock, spec.alpha);
    if (spec.kind == "gaussian")
        return gaussian_packet(rep.grid, spec.center, spec.width, spec.wavenumber);
    if (spec.kind == "level")
        return StateVector::basis_element(rep.basis_id(), rep.dim(), spec.level);
    CVector a(static_cast<Eigen::Index>(spec.amplitudes.size()));
    for (std::size_t k = 0; k < spec.amplitudes.size(); ++k)
        a(static_cast<Eigen::Index>(k)) = spec.amplitudes[k];
    return StateVector::normalized(rep.basis_id(), a);
}

std::vector<Diagnostic> physics_diagnostics(const RunConfig &cfg) {
    std::vector<Diagnostic> out;
    auto check = [&out](auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            out.push_back({std::string(e.name()), e.what()});
        }
    };

    std::optional<Representation> rep;
    check([&] { rep.emplace(build_representation(cfg)); });

    std::optional<StateVector> i, f;
    auto states = [&] {
        if (!rep)
            return;
        check([&] { i.emplace(build_state(cfg.initial, *rep, std::nullopt)); });
        if (i)
            check([&] { f.emplace(build_state(cfg.final_state, *rep, i)); });
    };
    auto pointers = [&] {
        check([&] { gaussian_pointer(cfg.pointer_grid, cfg.sigma); });
    };

    switch (cfg.experiment) {
    case Experiment::pauli:
        for (double a : cfg.alpha_sweep)
            check([&] { spin_selections(a); });
        break;
    case Experiment::ccr:
        pointers();
        check([&] {
            gaussian_pointer(default_pointer_grid(cfg.sigma_prime, cfg.hbar), cfg.sigma_prime);
        });
        states();
        if (i && rep && rep->kind == RepresentationKind::fock &&
            truncation_edge_amplitude(*i) >= kFockSafeEdge)
            out.push_back({std::string(to_string(ErrorCode::TruncationUnsafe)),
                           "TruncationUnsafe: pre-selection amplitude on the top Fock levels is " +
                               std::to_string(truncation_edge_amplitude(*i)) +
                               " (limit 1e-10)"});
        break;
    case Experiment::riemann:
        states();
        if (i && f && std::abs(inner(*f, *i)) <= kOrthogonalityThreshold)
            out.push_back({std::string(to_string(ErrorCode::OrthogonalSelection)),
                           "OrthogonalSelection: |<f|i>| = " + std::to_string(std::abs(inner(*f, *i))) +
                               " is at or below 1e-12"});
        break;
    case Experiment::chain:
        break;
    case Experiment::montecarlo:
        pointers();
        check([&] { spin_selections(cfg.alpha); });
        break;
    }
    return out;
}

} // namespace weaklab::cli
