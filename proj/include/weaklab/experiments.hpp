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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weaklab/ensemble.hpp"
#include "weaklab/hilbert.hpp"
#include "weaklab/pointer.hpp"
#include "weaklab/weakcorr.hpp"

namespace weaklab {

// --- Spin-1/2 suite -------------------------------------------------------

inline constexpr double kPauliTolerance = 1e-12;
/// |alpha| must stay below pi minus this margin.
inline constexpr double kAlphaMargin = 1e-6;

/// Pre-selection in the xz plane at angle alpha from x, mid-selection +x.
struct SpinSelections {
    double alpha;
    StateVector i;
    StateVector f;
};
SpinSelections spin_selections(double alpha);

struct PauliQuantity {
    std::string name;
    Complex value;
    Complex target;
    double residual;
};

struct PauliReport {
    double alpha = 0.0;
    double tan_half = 0.0;
    Complex sxsy, sysx, sz_w, anticommutator, commutator;
    std::vector<PauliQuantity> quantities; ///< the five values above with targets
    double max_residual = 0.0;
    /// |commutator - 2i * sz_w|
    double commutator_identity_residual = 0.0;

    bool passed(double tol = kPauliTolerance) const {
        return max_residual <= tol && commutator_identity_residual <= tol;
    }
};

PauliReport pauli_suite(double alpha);

/// First three nontrivial zeta zeros (imaginary parts), for display.
struct ReferenceZeros {
    static constexpr std::array<double, 3> values{14.13, 21.02, 25.01};
};

// --- Canonical commutator -------------------------------------------------

inline constexpr double kCommutatorTolerance = 1e-10;
inline constexpr double kFockSafeEdge = 1e-10;
inline constexpr double kPointerAverageTolerance = 0.02;
inline constexpr double kMonteCarloSigmas = 3.0;

/// Default pre-selection: a coherent state on Fock (displacement shrunk until
/// the top two levels are below 1e-12) or a unit-width Gaussian at rest on a
/// grid.
StateVector default_initial_state(const Representation &rep);

/// Exact first-order pointer check for one (i, f) pair: the differences
/// between the exact-unitary shifts and the first-order predictions, divided
/// by g, at g and g/2.
struct ConvergenceReport {
    double g = 0.0;
    double sigma = 0.0;
    Complex x_w;
    CcrProtocolResult at_g;
    CcrProtocolResult at_half_g;
    double dx_error_g = 0.0;      ///< |dx - predicted| / g
    double dx_error_half = 0.0;
    double dx_ratio = 0.0;        ///< dx_error_g / dx_error_half
    double dx_absolute_ratio = 0.0;
    double dp_error_g = 0.0;
    double dp_error_half = 0.0;
    double dp_ratio = 0.0;
    double dp_absolute_ratio = 0.0;
};
ConvergenceReport pointer_convergence(const Representation &rep, const StateVector &i,
                                      const StateVector &f, double sigma, double g);

struct CcrExperimentConfig {
    Representation rep;
    std::optional<StateVector> initial;
    double sigma = 1.0;
    double sigma_prime = 0.01;
    double g = 0.01;
    std::size_t n_trials = 0; ///< 0 skips the Monte Carlo branch
    std::uint64_t seed = 0;
    std::size_t workers = 1;
    bool halving = true;      ///< also run the exact pointer branch at g/2
    std::optional<GridConfig> pointer_grid; ///< first pointer; default 1024 pts over 40 sigma
};

struct CcrMonteCarlo {
    EnsembleStats stats;
    double product_over_g2 = 0.0;
    double stderr_over_g2 = 0.0;
    double reference = 0.0; ///< exact-pointer value of the same estimand
    double z_score = 0.0;
};

struct CcrReport {
    double hbar = 1.0;
    double edge_amplitude = 0.0; ///< top-two-level amplitude (Fock only)
    std::vector<double> momenta;
    /// Truncated-commutator expectation <i|[x,p]|i>, the exact target of the
    /// averaged weak commutator.
    Complex commutator_oracle;
    Complex commutator_target; ///< i hbar
    double commutator_residual = 0.0; ///< vs the oracle
    double commutator_ideal_residual = 0.0; ///< vs i hbar
    AveragedCcr decomposition;
    double cross_term_residual = 0.0;
    double imx_rep_residual = 0.0;
    CcrAverage pointer;
    std::optional<CcrAverage> pointer_half;
    double pointer_relative_error = 0.0; ///< |born - hbar sigma^2| / (hbar sigma^2)
    std::optional<double> halving_ratio;
    std::optional<CcrMonteCarlo> monte_carlo;
};

CcrReport ccr_experiment(const CcrExperimentConfig &cfg);

/// Trial configuration whose weighted product estimates the mid-weighted
/// exact-pointer average.
TrialConfig ccr_trial_config(const CcrExperimentConfig &cfg, const StateVector &i,
                             const MomentumBasis &basis);

// --- Riemann operator -----------------------------------------------------

struct RiemannReport {
    Complex rho_w;        ///< <f|rho|i> / <f|i>
    Complex r_w;          ///< 1/2 + i rho_w
    Complex r_w_direct;   ///< <f|R|i> / <f|i>
    double correlation_form = 0.0;       ///< Re(conj(x_w) p_w) / hbar
    double form_difference = 0.0;        ///< |rho_w - correlation_form|
    double correlation_lhs = 0.0;        ///< Re x_w Re p_w + Im x_w Im p_w
    double correlation_identity_residual = 0.0;
    double averaged_lhs = 0.0;           ///< Born average over the momentum basis
    double averaged_target = 0.0;        ///< hbar <i|rho|i>
    double averaged_residual = 0.0;
    double hermiticity_residual = 0.0;
    double half_line_residual = 0.0;
    std::optional<double> half_line_full; ///< unrestricted, Fock only
};

RiemannReport riemann_experiment(const Representation &rep, const StateVector &i,
                                 const StateVector &f);

// --- Selection chains -----------------------------------------------------

struct ChainReport {
    std::size_t order = 0;
    std::size_t dim = 0;
    Complex value;
    Complex oracle;
    double oracle_residual = 0.0;
    double two_op_residual = 0.0;  ///< chain {B, A} vs weak_correlation
    SymmetryResiduals symmetry{};
    std::optional<double> dual_residual; ///< even orders
    std::optional<LiteralOddOrderResiduals> literal; ///< odd orders
};

/// Random i, f and `order` random Hermitian operators of dimension `dim`.
ChainReport chain_experiment(std::size_t dim, std::size_t order, std::uint64_t seed);

// --- Monte Carlo weak value -----------------------------------------------

struct MonteCarloConfig {
    double alpha = 1.0471975511965976;
    PauliAxis axis = PauliAxis::y;
    double sigma = 1.0;
    double g = 0.05;
    std::optional<GridConfig> pointer_grid;
    std::size_t n_trials = 200000;
    std::uint64_t seed = 0;
    std::size_t workers = 1;
};

struct MonteCarloReport {
    Complex weak_value;      ///< closed form
    Complex exact_pointer;   ///< inversion of the exact conditional means
    WeakValueEstimate estimate;
    double z_re = 0.0;       ///< vs exact_pointer
    double z_im = 0.0;
};

MonteCarloReport montecarlo_experiment(const MonteCarloConfig &cfg);

} // namespace weaklab
