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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "weaklab/error.hpp"

namespace weaklab {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kBasisTolerance = 1e-10;
/// Fock amplitudes above this on the top two levels trigger a warning.
inline constexpr double kTruncationWarnLevel = 1e-10;

/// Normalized amplitude vector over a labeled finite basis.
class StateVector {
  public:
    /// Normalizes `amplitudes`; throws InvalidConfig on an empty or zero
    /// vector.
    static StateVector normalized(std::string basis_id, CVector amplitudes);
    static StateVector basis_element(std::string basis_id, std::size_t dim,
                                     std::size_t index);

    const std::string &basis_id() const noexcept { return basis_id_; }
    const CVector &amplitudes() const noexcept { return amplitudes_; }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    Complex operator[](std::size_t k) const {
        return amplitudes_(static_cast<Eigen::Index>(k));
    }

  private:
    StateVector(std::string basis_id, CVector amplitudes)
        : basis_id_(std::move(basis_id)), amplitudes_(std::move(amplitudes)) {}

    std::string basis_id_;
    CVector amplitudes_;
};

/// Dense square operator. `hermitian_hint == true` is verified on
/// construction.
class Operator {
  public:
    Operator(std::string basis_id, CMatrix matrix, std::string units = {},
             std::optional<bool> hermitian_hint = std::nullopt);

    const std::string &basis_id() const noexcept { return basis_id_; }
    const CMatrix &matrix() const noexcept { return matrix_; }
    const std::string &units() const noexcept { return units_; }
    std::optional<bool> hermitian_hint() const noexcept { return hint_; }
    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(matrix_.rows());
    }

    /// max |M - M^dagger|
    double hermiticity_residual() const;
    bool is_hermitian(double tol = kHermitianTolerance) const {
        return hermiticity_residual() <= tol;
    }

    CVector apply(const StateVector &psi) const;
    Operator adjoint() const;

  private:
    std::string basis_id_;
    CMatrix matrix_;
    std::string units_;
    std::optional<bool> hint_;
};

Operator operator*(const Operator &a, const Operator &b);
Operator operator+(const Operator &a, const Operator &b);
Operator operator-(const Operator &a, const Operator &b);
Operator operator*(Complex s, const Operator &a);

Operator identity_operator(const std::string &basis_id, std::size_t dim);
Operator commutator(const Operator &a, const Operator &b);
Operator anticommutator(const Operator &a, const Operator &b);

void require_same_basis(const std::string &a, const std::string &b,
                        const char *context);

struct FockConfig {
    std::size_t dim = 64;
    double hbar = 1.0;
    double mass_freq_product = 1.0;

    std::string basis_id() const;
};

/// Periodic grid spanning [-L/2, L/2).
struct GridConfig {
    std::size_t n_points = 1024;
    double length = 40.0;
    double hbar = 1.0;

    double spacing() const { return length / static_cast<double>(n_points); }
    double coordinate(std::size_t j) const {
        return -0.5 * length + static_cast<double>(j) * spacing();
    }
    /// Angular wavenumber of DFT mode m in FFT ordering; the unpaired
    /// Nyquist mode maps to -pi/dx.
    double wavenumber(std::size_t m) const;
    std::string basis_id() const;
};

void validate(const FockConfig &cfg);
void validate(const GridConfig &cfg);

struct CanonicalPair {
    Operator x;
    Operator p;
};

/// Ladder-operator x and p truncated at level N-1. The commutator is
/// i*hbar*diag(1, ..., 1, 1-N).
CanonicalPair make_fock_ops(const FockConfig &cfg);

/// Diagonal x and the spectral (DFT) momentum -i*hbar*d/dx, as dense
/// Hermitian matrices.
CanonicalPair make_grid_ops(const GridConfig &cfg);

enum class PauliAxis { x, y, z };
inline constexpr const char *kSpinBasis = "spin-1/2";
Operator pauli(PauliAxis axis);

Complex inner(const StateVector &psi, const StateVector &phi);
Complex expectation(const StateVector &psi, const Operator &a);

/// Eigenpairs of a Hermitian operator, ascending eigenvalues.
struct Eigensystem {
    RVector values;
    CMatrix vectors;
};
Eigensystem hermitian_eigensystem(const Operator &h);

/// exp(-i H t / hbar) via Hermitian eigendecomposition.
Operator unitary_of(const Operator &h, double t, double hbar = 1.0);

void require_orthonormal_complete(std::span<const StateVector> basis,
                                  double tol = kBasisTolerance);

/// |<f|psi>|^2 for each f in an orthonormal complete basis.
std::vector<double> born_probabilities(const StateVector &psi,
                                       std::span<const StateVector> basis);

std::vector<StateVector> standard_basis(const std::string &basis_id,
                                        std::size_t dim);
/// Columns of a unitary matrix as states.
std::vector<StateVector> basis_from_columns(const std::string &basis_id,
                                            const CMatrix &columns);

StateVector random_state(std::size_t dim, std::uint64_t seed,
                         const std::string &basis_id = "random");
Operator random_hermitian(std::size_t dim, std::uint64_t seed,
                          const std::string &basis_id = "random");
CMatrix random_unitary(std::size_t dim, std::uint64_t seed);

/// max |amplitude| over the top two levels of a truncated basis.
double truncation_edge_amplitude(const StateVector &psi);

// --- Concrete representations of the canonical pair -----------------------

enum class RepresentationKind { fock, grid };

struct Representation {
    RepresentationKind kind;
    FockConfig fock;
    GridConfig grid;
    CanonicalPair ops;

    double hbar() const {
        return kind == RepresentationKind::fock ? fock.hbar : grid.hbar;
    }
    std::size_t dim() const { return ops.x.dim(); }
    const std::string &basis_id() const { return ops.x.basis_id(); }
};

Representation make_representation(const FockConfig &cfg);
Representation make_representation(const GridConfig &cfg);

/// Eigenvectors of p, ascending eigenvalue. On a grid these are the sampled
/// plane waves, built directly rather than through an eigensolver.
struct MomentumBasis {
    std::vector<StateVector> states;
    std::vector<double> momenta;
};
MomentumBasis momentum_basis(const Representation &rep);

/// Truncated coherent state e^{-|a|^2/2} sum a^n/sqrt(n!) |n>, renormalized.
StateVector coherent_state(const FockConfig &cfg, Complex alpha);
/// exp(-(x-x0)^2/(4 s^2) + i k0 x) sampled on the grid, normalized.
StateVector gaussian_packet(const GridConfig &cfg, double center, double width,
                            double wavenumber);

} // namespace weaklab
