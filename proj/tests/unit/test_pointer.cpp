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
#include "weaklab/pointer.hpp"
#include "weaklab/weakcorr.hpp"

using namespace weaklab;

namespace {

double sum_all(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v)
        s += x;
    return s;
}

// Position variance from the grid samples directly.
double position_variance(const PointerState &p) {
    const GridConfig &g = p.grid();
    double m = 0.0, m2 = 0.0;
    for (std::size_t j = 0; j < g.n_points; ++j) {
        const double w = std::norm(p.wavefunction()(static_cast<Eigen::Index>(j)));
        m += w * g.coordinate(j);
        m2 += w * g.coordinate(j) * g.coordinate(j);
    }
    return m2 - m * m;
}

Operator diagonal(const std::string &basis, std::initializer_list<double> values) {
    CMatrix m = CMatrix::Zero(values.size(), values.size());
    Eigen::Index k = 0;
    for (double v : values) {
        m(k, k) = v;
        ++k;
    }
    return Operator(basis, m, {}, true);
}

} // namespace

TEST_SUITE("pointer") {

TEST_CASE("Gaussian pointer shape") {
    const double sigma = 0.8;
    const GridConfig grid = default_pointer_grid(sigma);
    CHECK(grid.n_points == kPointerPoints);
    CHECK(grid.length == doctest::Approx(kPointerSpanSigmas * sigma));
    const PointerState p = gaussian_pointer(grid, sigma);
    CHECK(p.wavefunction().squaredNorm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(pointer_mean_position(p)) < 1e-12);
    CHECK(std::abs(pointer_mean_momentum(p)) < 1e-12);
    CHECK(position_variance(p) == doctest::Approx(sigma * sigma).epsilon(1e-10));
    // Reference samples: psi(0) is proportional to (2 pi sigma^2)^(-1/4).
    const std::size_t mid = grid.n_points / 2;
    CHECK(grid.coordinate(mid) == doctest::Approx(0.0));
    const double continuum = std::pow(2.0 * std::numbers::pi * sigma * sigma, -0.25);
    CHECK(std::abs(p.wavefunction()(mid)) / std::sqrt(grid.spacing()) ==
          doctest::Approx(continuum).epsilon(1e-10));
}

TEST_CASE("pointer resolution limits") {
    const GridConfig grid{256, 10.0, 1.0}; // spacing 0.039
    CHECK_RAISES(gaussian_pointer(grid, 0.1), ErrorCode::GridResolutionError);
    CHECK_RAISES(gaussian_pointer(grid, 1.5), ErrorCode::GridResolutionError);
    CHECK_NOTHROW(gaussian_pointer(grid, 0.2));
}

TEST_CASE("readout distributions") {
    const PointerState p = phase_kicked(gaussian_pointer(default_pointer_grid(1.0), 1.0), 0.3);
    const ReadoutDistribution x = position_distribution(p);
    const ReadoutDistribution k = momentum_distribution(p);
    CHECK(sum_all(x.probabilities) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(sum_all(k.probabilities) == doctest::Approx(1.0).epsilon(1e-13));
    for (std::size_t j = 1; j < k.values.size(); ++j)
        CHECK(k.values[j] > k.values[j - 1]);
    CHECK(k.cell_width == doctest::Approx(2.0 * std::numbers::pi / p.grid().length));
    CHECK(pointer_mean_momentum(p) == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("translation and kicks") {
    const PointerState p = gaussian_pointer(default_pointer_grid(1.0), 1.0);
    CHECK(pointer_mean_position(translated(p, 0.37)) == doctest::Approx(0.37).epsilon(1e-10));
    CHECK(fidelity(p, translated(p, 0.0)) == doctest::Approx(1.0).epsilon(1e-14));
    // Overlap of two shifted Gaussians: exp(-d^2 / (8 sigma^2)) squared.
    CHECK(fidelity(p, translated(p, 0.5)) ==
          doctest::Approx(std::exp(-0.25 / 4.0)).epsilon(1e-10));
}

TEST_CASE("couplings act on eigencomponents") {
    const Operator obs = diagonal("two", {1.0, -2.0});
    const PointerState ptr = gaussian_pointer(default_pointer_grid(1.0), 1.0);
    const double g = 0.05;
    for (std::size_t level : {0u, 1u}) {
        const double lambda = level == 0 ? 1.0 : -2.0;
        const StateVector s = StateVector::basis_element("two", 2, level);
        const JointState j0 = JointState::product(s, ptr);

        // exp(+i g lambda x_d) kicks the pointer momentum by g lambda.
        const JointState kicked = couple(j0, CouplingSpec{obs, PointerGenerator::position, g, -1});
        CHECK(kicked.norm() == doctest::Approx(1.0).epsilon(1e-13));
        const Selection a = select(kicked, s);
        CHECK(a.probability == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(pointer_mean_momentum(a.pointer) == doctest::Approx(g * lambda).epsilon(1e-9));
        CHECK(std::abs(pointer_mean_position(a.pointer)) < 1e-12);

        // exp(-i g lambda p_d) translates it by g lambda.
        const JointState moved = couple(j0, CouplingSpec{obs, PointerGenerator::momentum, g, +1});
        const Selection b = select(moved, s);
        CHECK(pointer_mean_position(b.pointer) == doctest::Approx(g * lambda).epsilon(1e-9));
    }
}

TEST_CASE("zero coupling leaves the joint state alone") {
    const PointerState ptr = gaussian_pointer(default_pointer_grid(1.0), 1.0);
    const StateVector s = random_state(3, 1, "three");
    const JointState j0 = JointState::product(s, ptr);
    const JointState j1 =
        couple(j0, CouplingSpec{random_hermitian(3, 2, "three"), PointerGenerator::position, 0.0,
                                -1});
    CHECK((j1.amplitudes() - j0.amplitudes()).norm() < 1e-13);
}

TEST_CASE("selection failures and basis checks") {
    const PointerState ptr = gaussian_pointer(default_pointer_grid(1.0), 1.0);
    const StateVector up = StateVector::basis_element("two", 2, 0);
    const StateVector down = StateVector::basis_element("two", 2, 1);
    const JointState j = JointState::product(up, ptr);
    CHECK_RAISES(select(j, down), ErrorCode::SelectionAnnihilated);
    CHECK_RAISES(select(j, StateVector::basis_element("other", 2, 0)), ErrorCode::BasisMismatch);
}

TEST_CASE("oversized couplings are refused") {
    const PointerState ptr = gaussian_pointer(default_pointer_grid(1.0), 1.0);
    const Operator big = diagonal("two", {500.0, -500.0});
    const JointState j = JointState::product(StateVector::basis_element("two", 2, 0), ptr);
    CHECK_RAISES(couple(j, CouplingSpec{big, PointerGenerator::position, 1.0, -1}),
                 ErrorCode::GridResolutionError);
    CHECK_RAISES(couple(j, CouplingSpec{big, PointerGenerator::momentum, 1.0, +1}),
                 ErrorCode::GridResolutionError);
}

TEST_CASE("weak coupling follows the first-order prediction") {
    const FockConfig cfg{40, 1.0, 1.0};
    const Representation rep = make_representation(cfg);
    CVector a = CVector::Zero(40), b = CVector::Zero(40);
    a(0) = 1.0;
    a(1) = Complex(0.5, 0.5);
    a(2) = 0.3;
    b(0) = 1.0;
    b(1) = -0.4;
    b(2) = Complex(0.0, 0.6);
    b(3) = 0.2;
    const StateVector i = StateVector::normalized(rep.basis_id(), a);
    const StateVector f = StateVector::normalized(rep.basis_id(), b);
    const Complex x_w = weak_value(i, f, rep.ops.x).value;

    CcrProtocolConfig pc;
    pc.g = 0.01;
    const CcrProtocolResult r = run_ccr_protocol(rep, i, f, pc);
    CHECK(r.predicted.dx == doctest::Approx(-2.0 * pc.g * x_w.imag()));
    CHECK(r.predicted.dp == doctest::Approx(pc.g * x_w.real()));
    CHECK(std::abs(r.dx_d - r.predicted.dx) < 1e-5);
    CHECK(std::abs(r.dp_d - r.predicted.dp) < 1e-5);
    CHECK(r.p_mid == doctest::Approx(std::norm(inner(f, i))).epsilon(1e-3));

    // The closed-form first-order pointer is close to the exact one.
    const PointerState initial = gaussian_pointer(default_pointer_grid(1.0), 1.0);
    const JointState coupled =
        couple(JointState::product(i, initial),
               CouplingSpec{rep.ops.x, PointerGenerator::position, pc.g, -1});
    const Selection mid = select(coupled, f);
    CHECK(fidelity(mid.pointer, first_order_pointer(initial, pc.g * x_w)) > 1.0 - 1e-7);
}

TEST_CASE("averaged two-stage protocol on a grid") {
    const GridConfig gc{32, 16.0, 1.0};
    const Representation rep = make_representation(gc);
    const StateVector i = gaussian_packet(gc, 0.0, 1.0, 0.0);
    CcrProtocolConfig pc;
    pc.sigma_prime = 0.05;
    pc.g = 0.01;
    const CcrAverage avg = average_ccr_protocol(rep, i, momentum_basis(rep), pc);
    CHECK(avg.target == 1.0);
    CHECK(avg.born_product_over_g2 == doctest::Approx(1.0).epsilon(0.02));
    double mass = 0.0;
    for (const auto &o : avg.outcomes)
        mass += o.p_mid;
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

} // TEST_SUITE
