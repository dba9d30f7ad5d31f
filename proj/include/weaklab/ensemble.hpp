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
#include <vector>

#include "weaklab/hilbert.hpp"
#include "weaklab/pointer.hpp"

namespace weaklab {

/// Counter-based random stream for one trial. The draws are a pure function
/// of (master_seed, index), so trials can run in any order on any worker.
class Substream {
  public:
    Substream(std::uint64_t master_seed, std::uint64_t index);

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

  private:
    std::uint64_t state_;
};

Substream substream(std::uint64_t master_seed, std::uint64_t trial_index);

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z);

enum class Readout { position, momentum };

/// One weak coupling with its own fresh pointer, followed by a strong
/// selection. A single outcome is a pass/fail selection (the trial is
/// discarded on failure); several outcomes form a complete projective
/// measurement whose result is recorded.
struct StageSpec {
    CouplingSpec coupling;
    double sigma = 1.0;
    std::optional<GridConfig> grid; ///< default: 1024 points over 40 sigma
    std::vector<StateVector> outcomes;
    Readout readout = Readout::position;
};

struct TrialConfig {
    StateVector pre;
    std::vector<StageSpec> stages; ///< one or two
    double hbar = 1.0;
    std::size_t n_trials = 1;
    std::uint64_t master_seed = 0;
    std::size_t workers = 1;
};

/// Statistics over accepted trials. With a complete-basis stage followed by a
/// pass/fail selection, each accepted trial carries weight 1/P(pass | outcome),
/// so the means estimate the Born average over outcomes. Otherwise all
/// weights are 1 and the standard errors are sample-stddev / sqrt(accepted).
struct EnsembleStats {
    std::uint64_t attempted = 0;
    std::uint64_t accepted = 0;
    double acceptance_rate = 0.0;
    bool weighted = false;
    double effective_samples = 0.0;
    double mean_dx = 0.0;
    double stderr_dx = 0.0;
    std::optional<double> mean_dx_prime;
    std::optional<double> stderr_dx_prime;
    std::optional<double> mean_product;
    std::optional<double> stderr_product;
};

EnsembleStats run_trials(const TrialConfig &cfg);

/// Analytic values of what run_trials estimates, from the same conditional
/// distributions.
struct EnsembleExpectation {
    double acceptance_probability = 0.0;
    double mean_dx = 0.0;
    std::optional<double> mean_dx_prime;
    std::optional<double> mean_product;
};
EnsembleExpectation exact_expectation(const TrialConfig &cfg);

struct WeakValueEstimateConfig {
    StateVector pre;
    StateVector post;
    Operator observable;
    double sigma = 1.0;
    double g = 0.05;
    double hbar = 1.0;
    std::optional<GridConfig> grid;
    std::size_t n_trials = 100000;
    std::uint64_t master_seed = 0;
    std::size_t workers = 1;
};

/// Pointer-shift inversion: Im{O_w} = -hbar * dx / (2 sigma^2 g) from a
/// position-readout ensemble, Re{O_w} = dp / g from a momentum-readout
/// ensemble with an independent seed.
struct WeakValueEstimate {
    double re_est = 0.0;
    double im_est = 0.0;
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    EnsembleStats position_run;
    EnsembleStats momentum_run;
};

WeakValueEstimate estimate_weak_value(const WeakValueEstimateConfig &cfg);

} // namespace weaklab
