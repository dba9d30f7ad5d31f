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

#include <optional>
#include <span>
#include <vector>

#include "weaklab/hilbert.hpp"

namespace weaklab {

/// Pointer grids default to this many points spanning this many sigmas.
inline constexpr std::size_t kPointerPoints = 1024;
inline constexpr double kPointerSpanSigmas = 40.0;
inline constexpr double kAnnihilationThreshold = 1e-15;

GridConfig default_pointer_grid(double sigma, double hbar = 1.0);

/// Grid wavefunction of a measuring device, normalized so that
/// sum_j |psi_j|^2 = 1.
class PointerState {
  public:
    PointerState(GridConfig grid, CVector wavefunction, double sigma);

    const GridConfig &grid() const noexcept { return grid_; }
    const CVector &wavefunction() const noexcept { return psi_; }
    double sigma() const noexcept { return sigma_; }

  private:
    GridConfig grid_;
    CVector psi_;
    double sigma_;
};

/// Real Gaussian (2 pi sigma^2)^{-1/4} exp(-x^2 / 4 sigma^2) centered at 0.
/// Requires 4*spacing <= sigma <= L/8.
PointerState gaussian_pointer(const GridConfig &grid, double sigma);

/// System (rows) x pointer grid (columns) amplitudes.
class JointState {
  public:
    JointState(std::string system_basis, GridConfig grid, double sigma, CMatrix amplitudes);

    static JointState product(const StateVector &system, const PointerState &pointer);

    const std::string &system_basis() const noexcept { return basis_; }
    std::size_t system_dim() const noexcept {
        return static_cast<std::size_t>(amps_.rows());
    }
    const GridConfig &grid() const noexcept { return grid_; }
    double sigma() const noexcept { return sigma_; }
    const CMatrix &amplitudes() const noexcept { return amps_; }
    double norm() const { return amps_.norm(); }

  private:
    std::string basis_;
    GridConfig grid_;
    double sigma_;
    CMatrix amps_;
};

enum class PointerGenerator { position, momentum };

/// Impulsive coupling exp(-i * sign * g * (observable (x) generator) / hbar).
/// H = -g x (x) x_d has sign -1 with the position generator; H' = g p (x) p_d
/// has sign +1 with the momentum generator.
struct CouplingSpec {
    Operator observable;
    PointerGenerator generator = PointerGenerator::position;
    double strength = 0.0;
    int sign = -1;
};

/// Eigendecomposition of the coupled observable, computed once and reused
/// across many joint states.
class PreparedCoupling {
  public:
    explicit PreparedCoupling(CouplingSpec spec);
    const CouplingSpec &spec() const noexcept { return spec_; }
    const Eigensystem &eigensystem() const noexcept { return eig_; }

  private:
    CouplingSpec spec_;
    Eigensystem eig_;
};

/// Exact unitary action. Raises GridResolutionError when an eigencomponent
/// carrying weight would be translated (or kicked in momentum) past a
/// quarter of the grid.
JointState couple(const JointState &joint, const PreparedCoupling &coupling);
JointState couple(const JointState &joint, const CouplingSpec &spec);

struct Selection {
    CVector conditional; ///< <target|joint>, unnormalized
    double amplitude;    ///< its norm
    double probability;  ///< amplitude^2
    PointerState pointer; ///< renormalized conditional pointer
};

/// Projects the system onto `target`. Raises SelectionAnnihilated when the
/// conditional norm is <= 1e-15.
Selection select(const JointState &joint, const StateVector &target);

double pointer_mean_position(const PointerState &p);
double pointer_mean_momentum(const PointerState &p);

/// Readout distribution as cell probabilities over ascending readout values.
struct ReadoutDistribution {
    std::vector<double> values;
    std::vector<double> probabilities;
    double cell_width = 0.0;
};
ReadoutDistribution position_distribution(const PointerState &p);
ReadoutDistribution momentum_distribution(const PointerState &p);

/// Pointer translated by `shift` via the Fourier domain.
PointerState translated(const PointerState &p, double shift);
/// Pointer multiplied by exp(i * k * x).
PointerState phase_kicked(const PointerState &p, double wavenumber);

double fidelity(const PointerState &a, const PointerState &b);

struct PredictedShifts {
    double dx; ///< -2 sigma^2 Im{x_w} / hbar
    double dp; ///< Re{x_w}
};
PredictedShifts predicted_shifts(Complex x_w, double sigma, double hbar = 1.0);

/// Closed form exp(i x_w x_d / hbar) phi(x_d) of the first-order expansion,
/// renormalized. Pass g * x_w for a coupling of strength g.
PointerState first_order_pointer(const PointerState &initial, Complex scaled_weak_value);

// --- The two-stage pre/mid/post protocol ----------------------------------

struct CcrProtocolConfig {
    double sigma = 1.0;
    double sigma_prime = 1.0;
    double g = 0.01;
    std::optional<GridConfig> pointer_grid;       ///< default: 1024 pts, 40 sigma
    std::optional<GridConfig> pointer_prime_grid; ///< default: 1024 pts, 40 sigma'
};

struct CcrProtocolResult {
    Complex x_w;        ///< <f|x|i>/<f|i>
    Complex p_w_bar;    ///< <i|p|f>/<i|f>
    double dx_d;        ///< position mean of pointer P
    double dp_d;        ///< momentum mean of pointer P
    double dx_d_prime;  ///< position mean of pointer P'
    PredictedShifts predicted; ///< for g * x_w
    double predicted_dx_prime; ///< g * Re{p_w_bar}
    double p_mid;
    double p_post;
};

/// Prepare i (x) phi, couple x (x) x_d, select f, prepare f (x) phi', couple
/// p (x) p'_d, select i. Both couplings are exact unitaries.
CcrProtocolResult run_ccr_protocol(const Representation &rep, const StateVector &i,
                                   const StateVector &f, const CcrProtocolConfig &cfg);

struct CcrOutcome {
    std::size_t index;
    double weight;   ///< |<f|i>|^2
    double p_mid;    ///< exact mid-selection probability
    double p_post;
    double momentum; ///< eigenvalue of p for this outcome
    Complex x_w;
    double dx_d;
    double dx_d_prime;
    double predicted_dx;
    double product_over_g2;
};

struct CcrAverage {
    std::vector<CcrOutcome> outcomes;
    double g = 0.0;
    /// sum_f |<f|i>|^2 dx_d dx'_d / g^2; target hbar sigma^2.
    double born_product_over_g2 = 0.0;
    /// Same sum with the exact mid-selection probabilities as weights.
    double mid_weighted_product_over_g2 = 0.0;
    double target = 0.0;
    std::size_t skipped = 0; ///< outcomes annihilated by the mid-selection
};

/// Runs the exact protocol for every momentum eigenvector f.
CcrAverage average_ccr_protocol(const Representation &rep, const StateVector &i,
                                const MomentumBasis &basis, const CcrProtocolConfig &cfg);

} // namespace weaklab
