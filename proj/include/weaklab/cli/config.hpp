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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "weaklab/hilbert.hpp"

namespace weaklab::cli {

enum class Experiment { pauli, ccr, riemann, chain, montecarlo };

std::string to_string(Experiment e);
std::optional<Experiment> experiment_from_string(const std::string &name);

/// Malformed or inconsistent configuration. The message names the line and
/// column (syntax errors) or the offending field.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// How a selection state is synthesized in the chosen representation.
///   default     coherent state (Fock) or unit Gaussian (grid); for `final`,
///               a copy of the initial state
///   coherent    Fock only, complex displacement `alpha`
///   gaussian    grid only, `center`, `width`, `wavenumber`
///   level       basis element `level`
///   amplitudes  explicit list, normalized on load
struct StateSpec {
    std::string kind = "default";
    Complex alpha{1.5, 0.5};
    double center = 0.0;
    double width = 1.0;
    double wavenumber = 0.0;
    std::size_t level = 0;
    std::vector<Complex> amplitudes;
};

struct RunConfig {
    Experiment experiment = Experiment::pauli;
    double hbar = 1.0;

    std::string representation = "fock"; ///< fock | grid
    std::size_t dim = 64;                 ///< Fock levels
    double mass_freq_product = 1.0;
    std::size_t n_points = 64;            ///< grid points
    double length = 25.6;                 ///< grid span

    StateSpec initial;
    StateSpec final_state;

    double sigma = 1.0;
    double sigma_prime = 0.01;
    double g = 0.01;
    GridConfig pointer_grid;  ///< resolved; default 1024 points over 40 sigma
    bool halving = true;
    std::size_t n_trials = 0;
    std::uint64_t master_seed = 0;
    std::size_t workers = 1;

    std::vector<double> alpha_sweep;
    double alpha = 0.0;
    std::string axis = "y";
    std::size_t chain_dim = 6;
    std::size_t chain_order = 4;

    std::string output_dir = "weaklab-out";
    bool write_json = true;
    bool write_csv = true;
};

/// Reads a JSON document. A run record (an object holding "config" and
/// "report") yields its embedded config.
nlohmann::json parse_config_text(const std::string &text);
nlohmann::json load_config_file(const std::string &path);

/// Applies defaults for `experiment` to the user-supplied object and checks
/// every field. Unknown keys are errors.
RunConfig resolve_config(const nlohmann::json &user, Experiment experiment);

/// Every field, defaults included.
nlohmann::json to_json(const RunConfig &cfg);

Representation build_representation(const RunConfig &cfg);
StateVector build_state(const StateSpec &spec, const Representation &rep,
                        const std::optional<StateVector> &fallback);

struct Diagnostic {
    std::string name;
    std::string message;
};

/// Physics preconditions (grid resolution, truncation safety, selection
/// orthogonality, angle range) checked without running the experiment.
std::vector<Diagnostic> physics_diagnostics(const RunConfig &cfg);

} // namespace weaklab::cli
