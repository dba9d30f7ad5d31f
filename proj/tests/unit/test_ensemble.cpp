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

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "weaklab/ensemble.hpp"
#include "weaklab/experiments.hpp"

using namespace weaklab;

namespace {

struct SpinCase {
    StateVector pre;
    StateVector post;
    Operator observable;
};

SpinCase spin_case(double alpha, PauliAxis axis) {
    const SpinSelections s = spin_selections(alpha);
    return {s.i, s.f, pauli(axis)};
}

TrialConfig single_stage(const SpinCase &c, double g, Readout readout, std::size_t n,
                         std::uint64_t seed, std::size_t workers = 1) {
    StageSpec stage{CouplingSpec{c.observable, PointerGenerator::position, g, -1}, 1.0,
                    std::nullopt, {c.post}, readout};
    return TrialConfig{c.pre, {stage}, 1.0, n, seed, workers};
}

void check_identical(const EnsembleStats &a, const EnsembleStats &b) {
    CHECK(a.accepted == b.accepted);
    CHECK(a.mean_dx == b.mean_dx);
    CHECK(a.stderr_dx == b.stderr_dx);
    CHECK(a.effective_samples == b.effective_samples);
    CHECK(a.mean_product == b.mean_product);
    CHECK(a.stderr_product == b.stderr_product);
}

} // namespace

TEST_SUITE("ensemble") {

TEST_CASE("SplitMix64 finalizer matches the reference sequence") {
    // First two outputs of SplitMix64 seeded with 0.
    CHECK(mix64(0x9e3779b97f4a7c15ULL) == 0xe220a8397b1dcdafULL);
    CHECK(mix64(2 * 0x9e3779b97f4a7c15ULL) == 0x6e789e6aa1b965f4ULL);
}

TEST_CASE("substreams are keyed by seed and index") {
    Substream a(1, 5), b(1, 5), c(1, 6), d(2, 5);
    const std::uint64_t va = a.next_u64();
    CHECK(va == b.next_u64());
    CHECK(va != c.next_u64());
    CHECK(va != d.next_u64());

    Substream u(42, 0);
    double sum = 0.0, lo = 1.0, hi = 0.0;
    const int n = 200000;
    for (int k = 0; k < n; ++k) {
        const double x = u.uniform();
        sum += x;
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    CHECK(lo >= 0.0);
    CHECK(hi < 1.0);
    CHECK(std::abs(sum / n - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("pass/fail selection matches the exact acceptance and means") {
    const SpinCase c = spin_case(std::numbers::pi / 3, PauliAxis::y);
    const TrialConfig cfg = single_stage(c, 0.1, Readout::position, 100000, 7);
    const EnsembleStats s = run_trials(cfg);
    const EnsembleExpectation e = exact_expectation(cfg);
    CHECK(s.attempted == 100000);
    CHECK_FALSE(s.weighted);
    CHECK(s.effective_samples == doctest::Approx(static_cast<double>(s.accepted)));
    const double p = e.acceptance_probability;
    CHECK(std::abs(s.acceptance_rate - p) < 4.0 * std::sqrt(p * (1 - p) / 100000));
    CHECK(std::abs(s.mean_dx - e.mean_dx) < 4.0 * s.stderr_dx);
    // Unit weights: stderr is close to sigma / sqrt(n) for a unit-width pointer.
    CHECK(s.stderr_dx == doctest::Approx(1.0 / std::sqrt(double(s.accepted))).epsilon(0.05));
    CHECK_FALSE(s.mean_dx_prime.has_value());
}

TEST_CASE("results do not depend on the worker count") {
    const SpinCase c = spin_case(1.0, PauliAxis::y);
    const EnsembleStats one = run_trials(single_stage(c, 0.1, Readout::momentum, 50000, 3, 1));
    const EnsembleStats four = run_trials(single_stage(c, 0.1, Readout::momentum, 50000, 3, 4));
    check_identical(one, four);
    const EnsembleStats other = run_trials(single_stage(c, 0.1, Readout::momentum, 50000, 4, 1));
    CHECK(other.mean_dx != one.mean_dx);
}

TEST_CASE("a selection that can never pass") {
    const StateVector up = StateVector::basis_element(kSpinBasis, 2, 0);
    const StateVector down = StateVector::basis_element(kSpinBasis, 2, 1);
    const SpinCase c{up, down, pauli(PauliAxis::z)};
    CHECK_RAISES(run_trials(single_stage(c, 0.1, Readout::position, 1000, 1)),
                 ErrorCode::NoAcceptedTrials);
}

TEST_CASE("malformed trial configs") {
    const SpinCase c = spin_case(0.5, PauliAxis::z);
    TrialConfig cfg = single_stage(c, 0.1, Readout::position, 0, 1);
    CHECK_RAISES(run_trials(cfg), ErrorCode::InvalidConfig);
    cfg.n_trials = 10;
    cfg.stages.clear();
    CHECK_RAISES(run_trials(cfg), ErrorCode::InvalidConfig);
    TrialConfig incomplete = single_stage(c, 0.1, Readout::position, 10, 1);
    incomplete.stages[0].outcomes = {c.post, c.post};
    CHECK_RAISES(run_trials(incomplete), ErrorCode::IncompleteBasis);
}

TEST_CASE("basis mid-selection with importance weights") {
    const GridConfig gc{16, 12.8, 1.0};
    const Representation rep = make_representation(gc);
    CcrExperimentConfig ec{rep};
    ec.sigma_prime = 0.2;
    ec.g = 0.2;
    ec.n_trials = 400000;
    ec.seed = 11;
    const StateVector i = gaussian_packet(gc, 0.0, 1.0, 0.0);
    const MomentumBasis mb = momentum_basis(rep);
    const TrialConfig cfg = ccr_trial_config(ec, i, mb);
    const EnsembleStats s = run_trials(cfg);
    const EnsembleExpectation e = exact_expectation(cfg);
    CHECK(s.weighted);
    CHECK(s.effective_samples < static_cast<double>(s.accepted));
    REQUIRE(s.mean_product.has_value());
    CHECK(std::abs(*s.mean_product - *e.mean_product) < 4.0 * *s.stderr_product);
    CHECK(std::abs(*s.mean_dx_prime - *e.mean_dx_prime) < 4.0 * *s.stderr_dx_prime);

    // The weighted estimand is the mid-weighted exact-pointer average.
    CcrProtocolConfig pc;
    pc.sigma_prime = ec.sigma_prime;
    pc.g = ec.g;
    const CcrAverage avg = average_ccr_protocol(rep, i, mb, pc);
    CHECK(*e.mean_product / (ec.g * ec.g) ==
          doctest::Approx(avg.mid_weighted_product_over_g2).epsilon(1e-9));
}

TEST_CASE("weak value inversion from pointer ensembles") {
    const SpinCase c = spin_case(std::numbers::pi / 3, PauliAxis::y);
    WeakValueEstimateConfig cfg{c.pre, c.post, c.observable};
    cfg.g = 0.05;
    cfg.n_trials = 200000;
    cfg.master_seed = 5;
    const WeakValueEstimate e = estimate_weak_value(cfg);
    // sigma_y has an imaginary weak value i tan(alpha / 2).
    const double t = std::tan(std::numbers::pi / 6);
    CHECK(std::abs(e.im_est - t) < 4.0 * e.stderr_im + 0.01);
    CHECK(std::abs(e.re_est) < 4.0 * e.stderr_re + 0.01);
    CHECK(e.position_run.accepted > 0);
    CHECK(e.momentum_run.accepted > 0);
    cfg.g = 0.0;
    CHECK_RAISES(estimate_weak_value(cfg), ErrorCode::InvalidConfig);
}

} // TEST_SUITE
