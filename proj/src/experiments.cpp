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

#include "weaklab/experiments.hpp"

#include <cmath>
#include <numbers>

#include "weaklab/error.hpp"

namespace weaklab {

namespace {

constexpr Complex kI{0.0, 1.0};

PauliQuantity quantity(std::string name, Complex value, Complex target) {
    return {std::move(name), value, target, std::abs(value - target)};
}

} // namespace

SpinSelections spin_selections(double alpha) {
    if (!std::isfinite(alpha) || std::abs(alpha) >= std::numbers::pi - kAlphaMargin)
        raise(ErrorCode::AlphaOutOfRange,
              "alpha = " + std::to_string(alpha) + " must satisfy |alpha| < pi - 1e-6");
    const double c = std::cos(0.5 * alpha);
    const double s = std::sin(0.5 * alpha);
    const double r = std::numbers::sqrt2 / 2.0;
    CVector i(2), f(2);
    i << Complex(r * (c + s)), Complex(r * (c - s));
    f << Complex(r), Complex(r);
    return {alpha, StateVector::normalized(kSpinBasis, i),
            StateVector::normalized(kSpinBasis, f)};
}

PauliReport pauli_suite(double alpha) {
    const SpinSelections sel = spin_selections(alpha);
    const Operator sx = pauli(PauliAxis::x);
    const Operator sy = pauli(PauliAxis::y);
    const Operator sz = pauli(PauliAxis::z);

    PauliReport r;
    r.alpha = alpha;
    r.tan_half = std::tan(0.5 * alpha);
    r.sxsy = weak_correlation(sel.i, sel.f, sx, sy);
    r.sysx = weak_correlation(sel.i, sel.f, sy, sx);
    r.sz_w = weak_value(sel.i, sel.f, sz).value;
    r.anticommutator = weak_anticommutator(sel.i, sel.f, sx, sy);
    r.commutator = weak_commutator(sel.i, sel.f, sx, sy);

    const double t = r.tan_half;
    r.quantities = {
        quantity("sxsy", r.sxsy, kI * t),
        quantity("sysx", r.sysx, -kI * t),
        quantity("sz_w", r.sz_w, Complex(t)),
        quantity("anticommutator", r.anticommutator, Complex(0.0)),
        quantity("commutator", r.commutator, 2.0 * kI * t),
    };
    for (const auto &q : r.quantities)
        r.max_residual = std::max(r.max_residual, q.residual);
    r.commutator_identity_residual = std::abs(r.commutator - 2.0 * kI * r.sz_w);
    return r;
}

// --- Canonical commutator -------------------------------------------------

StateVector default_initial_state(const Representation &rep) {
    if (rep.kind == RepresentationKind::grid)
        return gaussian_packet(rep.grid, 0.0, 1.0, 0.0);
    Complex alpha{1.5, 0.5};
    while (std::abs(alpha) > 1e-3) {
        StateVector s = coherent_state(rep.fock, alpha);
        if (truncation_edge_amplitude(s) < 1e-12)
            return s;
        alpha *= 0.8;
    }
    raise(ErrorCode::TruncationUnsafe,
          "no coherent state fits below the top two levels of a " +
              std::to_string(rep.fock.dim) + "-level Fock space");
}

ConvergenceReport pointer_convergence(const Representation &rep, const StateVector &i,
                                      const StateVector &f, double sigma, double g) {
    ConvergenceReport r;
    r.g = g;
    r.sigma = sigma;
    r.x_w = weak_value(i, f, rep.ops.x).value;
    CcrProtocolConfig cfg;
    cfg.sigma = sigma;
    cfg.sigma_prime = sigma;
    cfg.g = g;
    r.at_g = run_ccr_protocol(rep, i, f, cfg);
    cfg.g = 0.5 * g;
    r.at_half_g = run_ccr_protocol(rep, i, f, cfg);

    const double ex_g = std::abs(r.at_g.dx_d - r.at_g.predicted.dx);
    const double ex_h = std::abs(r.at_half_g.dx_d - r.at_half_g.predicted.dx);
    const double ep_g = std::abs(r.at_g.dp_d - r.at_g.predicted.dp);
    const double ep_h = std::abs(r.at_half_g.dp_d - r.at_half_g.predicted.dp);
    r.dx_error_g = ex_g / g;
    r.dx_error_half = ex_h / (0.5 * g);
    r.dx_ratio = r.dx_error_g / r.dx_error_half;
    r.dx_absolute_ratio = ex_g / ex_h;
    r.dp_error_g = ep_g / g;
    r.dp_error_half = ep_h / (0.5 * g);
    r.dp_ratio = r.dp_error_g / r.dp_error_half;
    r.dp_absolute_ratio = ep_g / ep_h;
    return r;
}

TrialConfig ccr_trial_config(const CcrExperimentConfig &cfg, const StateVector &i,
                             const MomentumBasis &basis) {
    const Representation &rep = cfg.rep;
    StageSpec first{CouplingSpec{rep.ops.x, PointerGenerator::position, cfg.g, -1}, cfg.sigma,
                    cfg.pointer_grid, basis.states, Readout::position};
    StageSpec second{CouplingSpec{rep.ops.p, PointerGenerator::momentum, cfg.g, +1},
                     cfg.sigma_prime, std::nullopt, {i}, Readout::position};
    return TrialConfig{i, {std::move(first), std::move(second)}, rep.hbar(), cfg.n_trials,
                       cfg.seed, cfg.workers};
}

CcrReport ccr_experiment(const CcrExperimentConfig &cfg) {
    const Representation &rep = cfg.rep;
    const StateVector i = cfg.initial.value_or(default_initial_state(rep));
    require_same_basis(i.basis_id(), rep.basis_id(), "ccr pre-selection");
    if (!(cfg.g > 0.0) || !(cfg.sigma > 0.0) || !(cfg.sigma_prime > 0.0))
        raise(ErrorCode::InvalidConfig, "sigma, sigma_prime and g must be positive");

    CcrReport r;
    r.hbar = rep.hbar();
    if (rep.kind == RepresentationKind::fock) {
        r.edge_amplitude = truncation_edge_amplitude(i);
        if (r.edge_amplitude >= kFockSafeEdge)
            raise(ErrorCode::TruncationUnsafe,
                  "pre-selection amplitude on the top Fock levels is " +
                      std::to_string(r.edge_amplitude) + " (limit 1e-10)");
    }

    const MomentumBasis basis = momentum_basis(rep);
    r.momenta = basis.momenta;
    r.commutator_oracle = expectation(i, commutator(rep.ops.x, rep.ops.p));
    r.commutator_target = kI * r.hbar;
    r.decomposition = averaged_ccr_decomposition(i, basis.states, rep.ops.x, rep.ops.p, r.hbar);
    r.commutator_residual = std::abs(r.decomposition.commutator - r.commutator_oracle);
    r.commutator_ideal_residual = std::abs(r.decomposition.commutator - r.commutator_target);
    r.cross_term_residual = std::abs(r.decomposition.lhs - r.decomposition.target);
    r.imx_rep_residual = std::abs(r.decomposition.real_p_lhs - r.decomposition.real_p_target);

    CcrProtocolConfig pc;
    pc.sigma = cfg.sigma;
    pc.sigma_prime = cfg.sigma_prime;
    pc.g = cfg.g;
    pc.pointer_grid = cfg.pointer_grid;
    r.pointer = average_ccr_protocol(rep, i, basis, pc);
    const double target = r.pointer.target;
    r.pointer_relative_error = std::abs(r.pointer.born_product_over_g2 - target) / target;
    if (cfg.halving) {
        pc.g = 0.5 * cfg.g;
        r.pointer_half = average_ccr_protocol(rep, i, basis, pc);
        r.halving_ratio = std::abs(r.pointer.born_product_over_g2 - target) /
                          std::abs(r.pointer_half->born_product_over_g2 - target);
    }

    if (cfg.n_trials > 0) {
        CcrMonteCarlo mc;
        mc.stats = run_trials(ccr_trial_config(cfg, i, basis));
        const double g2 = cfg.g * cfg.g;
        mc.product_over_g2 = *mc.stats.mean_product / g2;
        mc.stderr_over_g2 = *mc.stats.stderr_product / g2;
        mc.reference = r.pointer.mid_weighted_product_over_g2;
        mc.z_score = mc.stderr_over_g2 > 0.0
                         ? (mc.product_over_g2 - mc.reference) / mc.stderr_over_g2
                         : 0.0;
        r.monte_carlo = mc;
    }
    return r;
}

// --- Riemann operator -----------------------------------------------------

RiemannReport riemann_experiment(const Representation &rep, const StateVector &i,
                                 const StateVector &f) {
    const Operator &x = rep.ops.x;
    const Operator &p = rep.ops.p;
    const double hbar = rep.hbar();
    const Operator rho = Complex(0.5 / hbar) * anticommutator(x, p);
    const Operator big_r = Complex(0.0, 1.0 / hbar) * (p * x);

    RiemannReport r;
    r.rho_w = weak_value(i, f, rho).value;
    r.r_w = 0.5 + kI * r.rho_w;
    r.r_w_direct = weak_value(i, f, big_r).value;

    const Complex x_w = weak_value(i, f, x).value;
    const Complex p_w = weak_value(i, f, p).value;
    const Complex x_wbar = weak_value(i, f, x, Direction::reverse).value;
    const Complex p_wbar = weak_value(i, f, p, Direction::reverse).value;
    r.correlation_form = ((x_wbar * p_w + p_wbar * x_w) / (2.0 * hbar)).real();
    r.form_difference = std::abs(r.rho_w - r.correlation_form);
    r.correlation_lhs = x_w.real() * p_w.real() + x_w.imag() * p_w.imag();
    r.correlation_identity_residual =
        std::abs(r.correlation_lhs - (std::conj(x_w) * p_w).real());

    const MomentumBasis basis = momentum_basis(rep);
    r.averaged_lhs = averaged_weak_correlation(i, basis.states, x, p, Combine::product).real();
    r.averaged_target = hbar * expectation(i, rho).real();
    r.averaged_residual = std::abs(r.averaged_lhs - r.averaged_target);
    r.hermiticity_residual = rho.hermiticity_residual();

    const Eigen::Index n = static_cast<Eigen::Index>(rep.dim());
    const CMatrix half = 0.5 * (big_r.matrix() + big_r.matrix().adjoint()) -
                         0.5 * CMatrix::Identity(n, n);
    if (rep.kind == RepresentationKind::fock) {
        r.half_line_residual =
            n > 2 ? half.topLeftCorner(n - 2, n - 2).cwiseAbs().maxCoeff() : 0.0;
        r.half_line_full = half.cwiseAbs().maxCoeff();
    } else {
        r.half_line_residual = std::max((half * i.amplitudes()).norm(),
                                        (half * f.amplitudes()).norm());
    }
    return r;
}

// --- Selection chains -----------------------------------------------------

ChainReport chain_experiment(std::size_t dim, std::size_t order, std::uint64_t seed) {
    if (dim < 2 || order < 1)
        raise(ErrorCode::InvalidConfig, "chain needs dim >= 2 and order >= 1");
    const StateVector i = random_state(dim, seed);
    const StateVector f = random_state(dim, seed + 1);
    std::vector<Operator> ops;
    for (std::size_t k = 0; k < order; ++k)
        ops.push_back(random_hermitian(dim, seed + 2 + k));

    ChainReport r;
    r.order = order;
    r.dim = dim;
    const SelectionProtocol protocol = SelectionProtocol::alternating(i, f, order);
    r.value = chain_weak_correlation(protocol, ops);

    Complex num{1.0}, den{1.0};
    for (std::size_t k = 0; k < order; ++k) {
        const StateVector &prev = protocol.state(k);
        const StateVector &next = protocol.state(k + 1);
        num *= next.amplitudes().dot(ops[k].apply(prev));
        den *= inner(next, prev);
    }
    r.oracle = num / den;
    r.oracle_residual = std::abs(r.value - r.oracle) / std::max(1.0, std::abs(r.oracle));

    if (order >= 2) {
        const std::vector<Operator> pair{ops[1], ops[0]};
        const Complex via_chain =
            chain_weak_correlation(SelectionProtocol::alternating(i, f, 2), pair);
        r.two_op_residual = std::abs(via_chain - weak_correlation(i, f, ops[0], ops[1]));
        r.symmetry = symmetry_residuals(i, f, ops[0], ops[1]);
    }
    if (order % 2 == 0)
        r.dual_residual = high_order_dual_residual(i, f, ops);
    else
        r.literal = literal_odd_order_residuals(i, f, ops);
    return r;
}

// --- Monte Carlo weak value -----------------------------------------------

MonteCarloReport montecarlo_experiment(const MonteCarloConfig &cfg) {
    const SpinSelections sel = spin_selections(cfg.alpha);
    const Operator op = pauli(cfg.axis);
    const double hbar = 1.0;

    MonteCarloReport r;
    r.weak_value = weak_value(sel.i, sel.f, op).value;

    const PointerState pointer = gaussian_pointer(
        cfg.pointer_grid.value_or(default_pointer_grid(cfg.sigma, hbar)), cfg.sigma);
    const JointState joint = couple(JointState::product(sel.i, pointer),
                                    CouplingSpec{op, PointerGenerator::position, cfg.g, -1});
    const Selection post = select(joint, sel.f);
    r.exact_pointer = Complex(pointer_mean_momentum(post.pointer) / cfg.g,
                              -hbar * pointer_mean_position(post.pointer) /
                                  (2.0 * cfg.sigma * cfg.sigma * cfg.g));

    r.estimate = estimate_weak_value(WeakValueEstimateConfig{
        sel.i, sel.f, op, cfg.sigma, cfg.g, hbar, cfg.pointer_grid, cfg.n_trials, cfg.seed,
        cfg.workers});
    const WeakValueEstimate &e = r.estimate;
    r.z_re = e.stderr_re > 0.0 ? (e.re_est - r.exact_pointer.real()) / e.stderr_re : 0.0;
    r.z_im = e.stderr_im > 0.0 ? (e.im_est - r.exact_pointer.imag()) / e.stderr_im : 0.0;
    return r;
}

} // namespace weaklab
