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

#include "weaklab/pointer.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

#include "weaklab/weakcorr.hpp"

namespace weaklab {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kComponentWeightFloor = 1e-12;
constexpr double kOutcomeWeightFloor = 1e-16;

using CSeries = std::vector<Complex>;

CSeries to_series(const CVector &v) { return CSeries(v.data(), v.data() + v.size()); }

CVector to_vector(const CSeries &s) {
    CVector v(static_cast<Eigen::Index>(s.size()));
    for (std::size_t k = 0; k < s.size(); ++k)
        v(static_cast<Eigen::Index>(k)) = s[k];
    return v;
}

CSeries forward_dft(const CSeries &in) {
    Eigen::FFT<double> fft;
    CSeries out;
    fft.fwd(out, in);
    return out;
}

CSeries inverse_dft(const CSeries &in) {
    Eigen::FFT<double> fft;
    CSeries out;
    fft.inv(out, in);
    return out;
}

double max_wavenumber(const GridConfig &g) { return std::numbers::pi / g.spacing(); }

} // namespace

GridConfig default_pointer_grid(double sigma, double hbar) {
    return GridConfig{kPointerPoints, kPointerSpanSigmas * sigma, hbar};
}

PointerState::PointerState(GridConfig grid, CVector wavefunction, double sigma)
    : grid_(grid), psi_(std::move(wavefunction)), sigma_(sigma) {
    validate(grid_);
    if (static_cast<std::size_t>(psi_.size()) != grid_.n_points)
        raise(ErrorCode::InvalidConfig, "pointer wavefunction does not match its grid");
    const double n = psi_.norm();
    if (!(n > 0.0))
        raise(ErrorCode::SelectionAnnihilated, "pointer wavefunction has zero norm");
    psi_ /= n;
}

PointerState gaussian_pointer(const GridConfig &grid, double sigma) {
    validate(grid);
    if (!(sigma >= 4.0 * grid.spacing()) || !(sigma <= grid.length / 8.0))
        raise(ErrorCode::GridResolutionError,
              "pointer width " + std::to_string(sigma) + " needs 4*spacing (" +
                  std::to_string(4.0 * grid.spacing()) + ") <= sigma <= L/8 (" +
                  std::to_string(grid.length / 8.0) + ")");
    CVector psi(static_cast<Eigen::Index>(grid.n_points));
    const double norm = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
    for (std::size_t j = 0; j < grid.n_points; ++j) {
        const double x = grid.coordinate(j);
        psi(static_cast<Eigen::Index>(j)) = norm * std::exp(-x * x / (4.0 * sigma * sigma));
    }
    return PointerState(grid, std::move(psi), sigma);
}

// --- Joint states ---------------------------------------------------------

JointState::JointState(std::string system_basis, GridConfig grid, double sigma,
                       CMatrix amplitudes)
    : basis_(std::move(system_basis)), grid_(grid), sigma_(sigma),
      amps_(std::move(amplitudes)) {
    if (static_cast<std::size_t>(amps_.cols()) != grid_.n_points)
        raise(ErrorCode::InvalidConfig, "joint amplitudes do not match the pointer grid");
}

JointState JointState::product(const StateVector &system, const PointerState &pointer) {
    CMatrix amps = system.amplitudes() * pointer.wavefunction().transpose();
    return JointState(system.basis_id(), pointer.grid(), pointer.sigma(), std::move(amps));
}

PreparedCoupling::PreparedCoupling(CouplingSpec spec)
    : spec_(std::move(spec)), eig_(hermitian_eigensystem(spec_.observable)) {
    if (!std::isfinite(spec_.strength))
        raise(ErrorCode::InvalidConfig, "coupling strength must be finite");
    if (spec_.sign != 1 && spec_.sign != -1)
        raise(ErrorCode::InvalidConfig, "coupling sign must be +1 or -1");
}

JointState couple(const JointState &joint, const PreparedCoupling &coupling) {
    const CouplingSpec &spec = coupling.spec();
    require_same_basis(spec.observable.basis_id(), joint.system_basis(), "couple");
    if (spec.strength == 0.0)
        return joint;

    const GridConfig &grid = joint.grid();
    const double hbar = grid.hbar;
    const Eigensystem &es = coupling.eigensystem();
    const double gs = static_cast<double>(spec.sign) * spec.strength;

    CMatrix coeffs = es.vectors.adjoint() * joint.amplitudes();
    const double total = coeffs.squaredNorm();
    for (Eigen::Index m = 0; m < coeffs.rows(); ++m) {
        const double weight = coeffs.row(m).squaredNorm() / total;
        const double lambda = es.values(m);
        if (spec.generator == PointerGenerator::position) {
            // multiplies by exp(-i gs lambda x / hbar): a momentum kick
            const double kick = std::abs(gs * lambda / hbar);
            if (weight > kComponentWeightFloor && kick >= 0.25 * max_wavenumber(grid))
                raise(ErrorCode::GridResolutionError,
                      "momentum kick " + std::to_string(kick) +
                          " exceeds a quarter of the pointer grid bandwidth");
            for (std::size_t k = 0; k < grid.n_points; ++k)
                coeffs(m, static_cast<Eigen::Index>(k)) *=
                    std::exp(-kI * (gs * lambda * grid.coordinate(k) / hbar));
        } else {
            const double shift = gs * lambda;
            if (weight > kComponentWeightFloor && std::abs(shift) >= 0.25 * grid.length)
                raise(ErrorCode::GridResolutionError,
                      "pointer translation " + std::to_string(shift) +
                          " exceeds L/4 = " + std::to_string(0.25 * grid.length));
            CSeries spectrum = forward_dft(to_series(coeffs.row(m).transpose()));
            for (std::size_t k = 0; k < grid.n_points; ++k)
                spectrum[k] *= std::exp(-kI * (grid.wavenumber(k) * shift));
            coeffs.row(m) = to_vector(inverse_dft(spectrum)).transpose();
        }
    }
    return JointState(joint.system_basis(), grid, joint.sigma(), es.vectors * coeffs);
}

JointState couple(const JointState &joint, const CouplingSpec &spec) {
    return couple(joint, PreparedCoupling(spec));
}

Selection select(const JointState &joint, const StateVector &target) {
    require_same_basis(joint.system_basis(), target.basis_id(), "select");
    if (std::abs(target.amplitudes().norm() - 1.0) > kNormTolerance)
        raise(ErrorCode::InvalidConfig, "selection target must be normalized");
    CVector conditional = (target.amplitudes().adjoint() * joint.amplitudes()).transpose();
    const double amplitude = conditional.norm();
    if (!(amplitude > kAnnihilationThreshold))
        raise(ErrorCode::SelectionAnnihilated,
              "selection amplitude " + std::to_string(amplitude) + " <= 1e-15");
    PointerState pointer(joint.grid(), conditional, joint.sigma());
    return {std::move(conditional), amplitude, amplitude * amplitude, std::move(pointer)};
}

// --- Readout --------------------------------------------------------------

ReadoutDistribution position_distribution(const PointerState &p) {
    const GridConfig &g = p.grid();
    ReadoutDistribution d;
    d.cell_width = g.spacing();
    d.values.resize(g.n_points);
    d.probabilities.resize(g.n_points);
    for (std::size_t j = 0; j < g.n_points; ++j) {
        d.values[j] = g.coordinate(j);
        d.probabilities[j] = std::norm(p.wavefunction()(static_cast<Eigen::Index>(j)));
    }
    return d;
}

ReadoutDistribution momentum_distribution(const PointerState &p) {
    const GridConfig &g = p.grid();
    const std::size_t n = g.n_points;
    const CSeries spectrum = forward_dft(to_series(p.wavefunction()));
    ReadoutDistribution d;
    d.cell_width = g.hbar * 2.0 * std::numbers::pi / g.length;
    d.values.reserve(n);
    d.probabilities.reserve(n);
    // ascending signed modes: m = n - n/2, ..., n-1, 0, 1, ..., n - n/2 - 1
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t m = (r + n - n / 2) % n;
        d.values.push_back(g.hbar * g.wavenumber(m));
        d.probabilities.push_back(std::norm(spectrum[m]) / static_cast<double>(n));
    }
    return d;
}

namespace {

double distribution_mean(const ReadoutDistribution &d) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < d.values.size(); ++k) {
        num += d.probabilities[k] * d.values[k];
        den += d.probabilities[k];
    }
    return num / den;
}

} // namespace

double pointer_mean_position(const PointerState &p) {
    return distribution_mean(position_distribution(p));
}

double pointer_mean_momentum(const PointerState &p) {
    return distribution_mean(momentum_distribution(p));
}

PointerState translated(const PointerState &p, double shift) {
    const GridConfig &g = p.grid();
    CSeries spectrum = forward_dft(to_series(p.wavefunction()));
    for (std::size_t k = 0; k < g.n_points; ++k)
        spectrum[k] *= std::exp(-kI * (g.wavenumber(k) * shift));
    return PointerState(g, to_vector(inverse_dft(spectrum)), p.sigma());
}

PointerState phase_kicked(const PointerState &p, double wavenumber) {
    const GridConfig &g = p.grid();
    CVector psi = p.wavefunction();
    for (std::size_t j = 0; j < g.n_points; ++j)
        psi(static_cast<Eigen::Index>(j)) *= std::exp(kI * (wavenumber * g.coordinate(j)));
    return PointerState(g, std::move(psi), p.sigma());
}

double fidelity(const PointerState &a, const PointerState &b) {
    return std::norm(a.wavefunction().dot(b.wavefunction()));
}

PredictedShifts predicted_shifts(Complex x_w, double sigma, double hbar) {
    return {-2.0 * sigma * sigma * x_w.imag() / hbar, x_w.real()};
}

PointerState first_order_pointer(const PointerState &initial, Complex scaled_weak_value) {
    const GridConfig &g = initial.grid();
    CVector psi = initial.wavefunction();
    for (std::size_t j = 0; j < g.n_points; ++j)
        psi(static_cast<Eigen::Index>(j)) *=
            std::exp(kI * scaled_weak_value * g.coordinate(j) / g.hbar);
    return PointerState(g, std::move(psi), initial.sigma());
}

// --- Protocol -------------------------------------------------------------

namespace {

struct ProtocolPointers {
    PointerState first;
    PointerState second;
};

ProtocolPointers make_protocol_pointers(const Representation &rep,
                                        const CcrProtocolConfig &cfg) {
    const double hbar = rep.hbar();
    GridConfig g1 = cfg.pointer_grid.value_or(default_pointer_grid(cfg.sigma, hbar));
    GridConfig g2 =
        cfg.pointer_prime_grid.value_or(default_pointer_grid(cfg.sigma_prime, hbar));
    g1.hbar = hbar;
    g2.hbar = hbar;
    return {gaussian_pointer(g1, cfg.sigma), gaussian_pointer(g2, cfg.sigma_prime)};
}

CouplingSpec position_coupling(const Representation &rep, double g) {
    return {rep.ops.x, PointerGenerator::position, g, -1};
}

CouplingSpec momentum_coupling(const Representation &rep, double g) {
    return {rep.ops.p, PointerGenerator::momentum, g, +1};
}

void guard_predicted_shift(double shift, const GridConfig &grid) {
    if (std::abs(shift) >= 0.25 * grid.length)
        raise(ErrorCode::GridResolutionError,
              "predicted pointer shift " + std::to_string(shift) + " exceeds L/4");
}

} // namespace

CcrProtocolResult run_ccr_protocol(const Representation &rep, const StateVector &i,
                                   const StateVector &f, const CcrProtocolConfig &cfg) {
    const double hbar = rep.hbar();
    const ProtocolPointers ptr = make_protocol_pointers(rep, cfg);

    CcrProtocolResult out{};
    out.x_w = weak_value(i, f, rep.ops.x, Direction::forward).value;
    out.p_w_bar = weak_value(i, f, rep.ops.p, Direction::reverse).value;
    out.predicted = predicted_shifts(cfg.g * out.x_w, cfg.sigma, hbar);
    out.predicted_dx_prime = cfg.g * out.p_w_bar.real();
    guard_predicted_shift(out.predicted.dx, ptr.first.grid());
    guard_predicted_shift(out.predicted_dx_prime, ptr.second.grid());

    const JointState first =
        couple(JointState::product(i, ptr.first), position_coupling(rep, cfg.g));
    const Selection mid = select(first, f);
    out.p_mid = mid.probability;
    out.dx_d = pointer_mean_position(mid.pointer);
    out.dp_d = pointer_mean_momentum(mid.pointer);

    const JointState second =
        couple(JointState::product(f, ptr.second), momentum_coupling(rep, cfg.g));
    const Selection post = select(second, i);
    out.p_post = post.probability;
    out.dx_d_prime = pointer_mean_position(post.pointer);
    return out;
}

CcrAverage average_ccr_protocol(const Representation &rep, const StateVector &i,
                                const MomentumBasis &basis, const CcrProtocolConfig &cfg) {
    require_orthonormal_complete(basis.states);
    const double hbar = rep.hbar();
    const ProtocolPointers ptr = make_protocol_pointers(rep, cfg);
    const JointState first =
        couple(JointState::product(i, ptr.first), position_coupling(rep, cfg.g));
    const PreparedCoupling second_coupling(momentum_coupling(rep, cfg.g));

    CcrAverage out;
    out.g = cfg.g;
    out.target = hbar * cfg.sigma * cfg.sigma;
    const double g2 = cfg.g * cfg.g;
    for (std::size_t k = 0; k < basis.states.size(); ++k) {
        const StateVector &f = basis.states[k];
        const double weight = std::norm(inner(f, i));
        const CVector cond = (f.amplitudes().adjoint() * first.amplitudes()).transpose();
        const double p_mid = cond.squaredNorm();
        if (std::max(weight, p_mid) < kOutcomeWeightFloor || p_mid <= 1e-30) {
            ++out.skipped;
            continue;
        }
        const PointerState mid_pointer(first.grid(), cond, first.sigma());
        const JointState second =
            couple(JointState::product(f, ptr.second), second_coupling);
        const Selection post = select(second, i);

        CcrOutcome o{};
        o.index = k;
        o.weight = weight;
        o.p_mid = p_mid;
        o.p_post = post.probability;
        o.momentum = basis.momenta[k];
        o.dx_d = pointer_mean_position(mid_pointer);
        o.dx_d_prime = pointer_mean_position(post.pointer);
        o.product_over_g2 = o.dx_d * o.dx_d_prime / g2;
        if (std::abs(inner(f, i)) > kOrthogonalityThreshold) {
            o.x_w = weak_value(i, f, rep.ops.x).value;
            o.predicted_dx = predicted_shifts(cfg.g * o.x_w, cfg.sigma, hbar).dx;
        }
        out.born_product_over_g2 += weight * o.product_over_g2;
        out.mid_weighted_product_over_g2 += p_mid * o.product_over_g2;
        out.outcomes.push_back(o);
    }
    return out;
}

} // namespace weaklab
