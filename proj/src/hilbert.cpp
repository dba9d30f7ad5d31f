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

#include "weaklab/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace weaklab {

namespace {

constexpr Complex kI{0.0, 1.0};

// exp(i*pi*num/den) with the numerator reduced mod 2*den first, so large
// integer products never feed a large argument to sin/cos.
Complex unit_phase(long long num, long long den) {
    long long r = num % (2 * den);
    if (r < 0)
        r += 2 * den;
    const double angle =
        std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
    return {std::cos(angle), std::sin(angle)};
}

long long signed_mode(std::size_t m, std::size_t n) {
    const auto mm = static_cast<long long>(m);
    const auto nn = static_cast<long long>(n);
    return (2 * mm < nn) ? mm : mm - nn;
}

} // namespace

// --- StateVector ----------------------------------------------------------

StateVector StateVector::normalized(std::string basis_id, CVector amplitudes) {
    if (amplitudes.size() == 0)
        raise(ErrorCode::InvalidConfig, "state vector must have dim >= 1");
    const double norm = amplitudes.norm();
    if (!(norm > 0.0) || !std::isfinite(norm))
        raise(ErrorCode::InvalidConfig, "state vector has zero or non-finite norm");
    amplitudes /= norm;
    return StateVector(std::move(basis_id), std::move(amplitudes));
}

StateVector StateVector::basis_element(std::string basis_id, std::size_t dim,
                                       std::size_t index) {
    if (index >= dim)
        raise(ErrorCode::InvalidConfig, "basis index out of range");
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(basis_id), std::move(v));
}

// --- Operator -------------------------------------------------------------

Operator::Operator(std::string basis_id, CMatrix matrix, std::string units,
                   std::optional<bool> hermitian_hint)
    : basis_id_(std::move(basis_id)), matrix_(std::move(matrix)),
      units_(std::move(units)), hint_(hermitian_hint) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0)
        raise(ErrorCode::InvalidConfig, "operator matrix must be square and non-empty");
    if (hint_.value_or(false) && !is_hermitian())
        raise(ErrorCode::NotHermitian, "operator tagged Hermitian has residual " +
                                           std::to_string(hermiticity_residual()));
}

double Operator::hermiticity_residual() const {
    return (matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff();
}

CVector Operator::apply(const StateVector &psi) const {
    require_same_basis(basis_id_, psi.basis_id(), "Operator::apply");
    return matrix_ * psi.amplitudes();
}

Operator Operator::adjoint() const {
    return Operator(basis_id_, matrix_.adjoint(), units_, hint_);
}

void require_same_basis(const std::string &a, const std::string &b,
                        const char *context) {
    if (a != b)
        raise(ErrorCode::BasisMismatch,
              std::string(context) + ": '" + a + "' vs '" + b + "'");
}

Operator operator*(const Operator &a, const Operator &b) {
    require_same_basis(a.basis_id(), b.basis_id(), "operator product");
    return Operator(a.basis_id(), a.matrix() * b.matrix());
}

Operator operator+(const Operator &a, const Operator &b) {
    require_same_basis(a.basis_id(), b.basis_id(), "operator sum");
    return Operator(a.basis_id(), a.matrix() + b.matrix());
}

Operator operator-(const Operator &a, const Operator &b) {
    require_same_basis(a.basis_id(), b.basis_id(), "operator difference");
    return Operator(a.basis_id(), a.matrix() - b.matrix());
}

Operator operator*(Complex s, const Operator &a) {
    return Operator(a.basis_id(), s * a.matrix(), a.units());
}

Operator identity_operator(const std::string &basis_id, std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return Operator(basis_id, CMatrix::Identity(n, n), {}, true);
}

Operator commutator(const Operator &a, const Operator &b) { return a * b - b * a; }

Operator anticommutator(const Operator &a, const Operator &b) {
    return a * b + b * a;
}

// --- Configs --------------------------------------------------------------

std::string FockConfig::basis_id() const {
    std::ostringstream os;
    os.precision(17);
    os << "fock(dim=" << dim << ",hbar=" << hbar << ",mw=" << mass_freq_product
       << ")";
    return os.str();
}

double GridConfig::wavenumber(std::size_t m) const {
    return 2.0 * std::numbers::pi * static_cast<double>(signed_mode(m, n_points)) /
           length;
}

std::string GridConfig::basis_id() const {
    std::ostringstream os;
    os.precision(17);
    os << "grid(n=" << n_points << ",L=" << length << ",hbar=" << hbar << ")";
    return os.str();
}

void validate(const FockConfig &cfg) {
    if (cfg.dim < 2)
        raise(ErrorCode::InvalidConfig, "Fock truncation dim must be >= 2");
    if (!(cfg.hbar > 0.0) || !(cfg.mass_freq_product > 0.0))
        raise(ErrorCode::InvalidConfig, "hbar and m*omega must be positive");
}

void validate(const GridConfig &cfg) {
    if (cfg.n_points < 8)
        raise(ErrorCode::InvalidConfig, "grid needs at least 8 points");
    if (!(cfg.length > 0.0) || !std::isfinite(cfg.length))
        raise(ErrorCode::InvalidConfig, "grid length must be positive");
    if (!(cfg.hbar > 0.0))
        raise(ErrorCode::InvalidConfig, "hbar must be positive");
}

// --- Canonical pairs ------------------------------------------------------

CanonicalPair make_fock_ops(const FockConfig &cfg) {
    validate(cfg);
    const auto n = static_cast<Eigen::Index>(cfg.dim);
    CMatrix lower = CMatrix::Zero(n, n); // annihilation a
    for (Eigen::Index k = 1; k < n; ++k)
        lower(k - 1, k) = std::sqrt(static_cast<double>(k));
    const CMatrix raise_op = lower.adjoint();

    const double x_scale = std::sqrt(cfg.hbar / (2.0 * cfg.mass_freq_product));
    const double p_scale = std::sqrt(cfg.hbar * cfg.mass_freq_product / 2.0);
    const std::string id = cfg.basis_id();
    return {Operator(id, x_scale * (lower + raise_op), "length", true),
            Operator(id, (kI * p_scale) * (raise_op - lower), "momentum", true)};
}

CanonicalPair make_grid_ops(const GridConfig &cfg) {
    validate(cfg);
    const std::size_t n = cfg.n_points;
    const auto nn = static_cast<long long>(n);
    const auto en = static_cast<Eigen::Index>(n);

    // p is circulant: P(j, l) = c[(j - l) mod n] with
    // c[d] = (hbar/n) sum_m k_m exp(2 pi i m d / n).
    std::vector<Complex> c(n);
    for (std::size_t d = 0; d <= n / 2; ++d) {
        Complex acc = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const long long sm = signed_mode(m, n);
            acc += cfg.wavenumber(m) *
                   unit_phase(2 * sm * static_cast<long long>(d), nn);
        }
        c[d] = acc * (cfg.hbar / static_cast<double>(n));
    }
    c[0] = c[0].real();
    for (std::size_t d = n / 2 + 1; d < n; ++d)
        c[d] = std::conj(c[n - d]);
    if (n % 2 == 0)
        c[n / 2] = c[n / 2].real();

    CMatrix p(en, en);
    CMatrix x = CMatrix::Zero(en, en);
    for (std::size_t j = 0; j < n; ++j) {
        x(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) =
            cfg.coordinate(j);
        for (std::size_t l = 0; l < n; ++l)
            p(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) =
                c[(j + n - l) % n];
    }
    const std::string id = cfg.basis_id();
    return {Operator(id, std::move(x), "length", true),
            Operator(id, std::move(p), "momentum", true)};
}

Operator pauli(PauliAxis axis) {
    CMatrix m(2, 2);
    switch (axis) {
    case PauliAxis::x:
        m << 0.0, 1.0, 1.0, 0.0;
        break;
    case PauliAxis::y:
        m << 0.0, -kI, kI, 0.0;
        break;
    case PauliAxis::z:
        m << 1.0, 0.0, 0.0, -1.0;
        break;
    }
    return Operator(kSpinBasis, std::move(m), "spin", true);
}

// --- Inner products, evolution, Born weights -------------------------------

Complex inner(const StateVector &psi, const StateVector &phi) {
    require_same_basis(psi.basis_id(), phi.basis_id(), "inner");
    return psi.amplitudes().dot(phi.amplitudes()); // conjugate-linear in psi
}

Complex expectation(const StateVector &psi, const Operator &a) {
    return psi.amplitudes().dot(a.apply(psi));
}

Eigensystem hermitian_eigensystem(const Operator &h) {
    if (!h.is_hermitian())
        raise(ErrorCode::NotHermitian,
              "eigendecomposition needs a Hermitian operator (residual " +
                  std::to_string(h.hermiticity_residual()) + ")");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.matrix());
    if (solver.info() != Eigen::Success)
        raise(ErrorCode::InvalidConfig, "Hermitian eigensolver failed");
    return {solver.eigenvalues(), solver.eigenvectors()};
}

Operator unitary_of(const Operator &h, double t, double hbar) {
    const Eigensystem es = hermitian_eigensystem(h);
    CVector phases(es.values.size());
    for (Eigen::Index k = 0; k < es.values.size(); ++k)
        phases(k) = std::exp(-kI * es.values(k) * t / hbar);
    CMatrix u = es.vectors * phases.asDiagonal() * es.vectors.adjoint();
    return Operator(h.basis_id(), std::move(u), "unitary");
}

void require_orthonormal_complete(std::span<const StateVector> basis, double tol) {
    if (basis.empty())
        raise(ErrorCode::IncompleteBasis, "empty basis");
    const std::size_t dim = basis.front().dim();
    if (basis.size() != dim)
        raise(ErrorCode::IncompleteBasis, "basis has " + std::to_string(basis.size()) +
                                              " vectors for dim " + std::to_string(dim));
    const auto n = static_cast<Eigen::Index>(dim);
    CMatrix cols(n, n);
    for (std::size_t k = 0; k < dim; ++k) {
        require_same_basis(basis.front().basis_id(), basis[k].basis_id(), "basis");
        cols.col(static_cast<Eigen::Index>(k)) = basis[k].amplitudes();
    }
    const double err =
        (cols.adjoint() * cols - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
    if (err > tol)
        raise(ErrorCode::IncompleteBasis,
              "basis is not orthonormal (Gram residual " + std::to_string(err) + ")");
}

std::vector<double> born_probabilities(const StateVector &psi,
                                       std::span<const StateVector> basis) {
    require_orthonormal_complete(basis);
    std::vector<double> w;
    w.reserve(basis.size());
    for (const auto &f : basis)
        w.push_back(std::norm(inner(f, psi)));
    return w;
}

std::vector<StateVector> standard_basis(const std::string &basis_id,
                                        std::size_t dim) {
    std::vector<StateVector> out;
    out.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k)
        out.push_back(StateVector::basis_element(basis_id, dim, k));
    return out;
}

std::vector<StateVector> basis_from_columns(const std::string &basis_id,
                                            const CMatrix &columns) {
    std::vector<StateVector> out;
    out.reserve(static_cast<std::size_t>(columns.cols()));
    for (Eigen::Index k = 0; k < columns.cols(); ++k)
        out.push_back(StateVector::normalized(basis_id, columns.col(k)));
    return out;
}

// --- Generators -----------------------------------------------------------

namespace {

CMatrix gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index c = 0; c < m.cols(); ++c)
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            const double re = normal(rng);
            const double im = normal(rng);
            m(r, c) = Complex(re, im);
        }
    return m;
}

} // namespace

StateVector random_state(std::size_t dim, std::uint64_t seed,
                         const std::string &basis_id) {
    if (dim < 1)
        raise(ErrorCode::InvalidConfig, "random_state needs dim >= 1");
    return StateVector::normalized(basis_id, gaussian_matrix(dim, 1, seed).col(0));
}

Operator random_hermitian(std::size_t dim, std::uint64_t seed,
                          const std::string &basis_id) {
    if (dim < 1)
        raise(ErrorCode::InvalidConfig, "random_hermitian needs dim >= 1");
    const CMatrix g = gaussian_matrix(dim, dim, seed);
    CMatrix h = 0.5 * (g + g.adjoint());
    for (Eigen::Index k = 0; k < h.rows(); ++k)
        h(k, k) = h(k, k).real();
    return Operator(basis_id, std::move(h), {}, true);
}

CMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    const CMatrix g = gaussian_matrix(dim, dim, seed);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix column phases so the distribution is Haar.
    for (Eigen::Index k = 0; k < q.cols(); ++k) {
        const double mag = std::abs(r(k, k));
        if (mag > 0.0)
            q.col(k) *= r(k, k) / mag;
    }
    return q;
}

double truncation_edge_amplitude(const StateVector &psi) {
    const auto n = psi.amplitudes().size();
    double edge = std::abs(psi.amplitudes()(n - 1));
    if (n >= 2)
        edge = std::max(edge, std::abs(psi.amplitudes()(n - 2)));
    return edge;
}

// --- Representations ------------------------------------------------------

Representation make_representation(const FockConfig &cfg) {
    return {RepresentationKind::fock, cfg, GridConfig{}, make_fock_ops(cfg)};
}

Representation make_representation(const GridConfig &cfg) {
    return {RepresentationKind::grid, FockConfig{}, cfg, make_grid_ops(cfg)};
}

MomentumBasis momentum_basis(const Representation &rep) {
    MomentumBasis out;
    if (rep.kind == RepresentationKind::fock) {
        const Eigensystem es = hermitian_eigensystem(rep.ops.p);
        out.states = basis_from_columns(rep.basis_id(), es.vectors);
        out.momenta.assign(es.values.data(), es.values.data() + es.values.size());
        return out;
    }
    const GridConfig &g = rep.grid;
    const std::size_t n = g.n_points;
    const auto nn = static_cast<long long>(n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));
    // Ascending momentum: signed modes -floor(n/2) .. ceil(n/2)-1.
    for (long long sm = -(nn / 2); sm < nn - nn / 2; ++sm) {
        CVector v(static_cast<Eigen::Index>(n));
        for (std::size_t j = 0; j < n; ++j) {
            // k x_j = pi * sm * (2j - n) / n
            v(static_cast<Eigen::Index>(j)) =
                amp * unit_phase(sm * (2 * static_cast<long long>(j) - nn), nn);
        }
        out.states.push_back(StateVector::normalized(rep.basis_id(), std::move(v)));
        out.momenta.push_back(g.hbar * 2.0 * std::numbers::pi *
                              static_cast<double>(sm) / g.length);
    }
    return out;
}

StateVector coherent_state(const FockConfig &cfg, Complex alpha) {
    validate(cfg);
    CVector v(static_cast<Eigen::Index>(cfg.dim));
    v(0) = std::exp(-0.5 * std::norm(alpha));
    for (Eigen::Index k = 1; k < v.size(); ++k)
        v(k) = v(k - 1) * alpha / std::sqrt(static_cast<double>(k));
    return StateVector::normalized(cfg.basis_id(), std::move(v));
}

StateVector gaussian_packet(const GridConfig &cfg, double center, double width,
                            double wavenumber) {
    validate(cfg);
    if (!(width > 0.0))
        raise(ErrorCode::InvalidConfig, "packet width must be positive");
    CVector v(static_cast<Eigen::Index>(cfg.n_points));
    for (std::size_t j = 0; j < cfg.n_points; ++j) {
        const double x = cfg.coordinate(j);
        const double u = (x - center) / width;
        v(static_cast<Eigen::Index>(j)) =
            std::exp(-0.25 * u * u) * std::exp(kI * wavenumber * x);
    }
    return StateVector::normalized(cfg.basis_id(), std::move(v));
}

} // namespace weaklab
