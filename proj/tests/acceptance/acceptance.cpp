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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit when any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "weaklab/cli/runner.hpp"
#include "weaklab/experiments.hpp"

using namespace weaklab;
namespace fs = std::filesystem;

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

struct Gate {
    int failures = 0;

    void report(int id, bool ok, const std::string &title, const std::string &detail) {
        std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(),
                    detail.c_str());
        std::fflush(stdout);
        if (!ok)
            ++failures;
    }
};

std::string fmt(const char *f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Closed forms of the spin-1/2 suite.
void pauli_closed_forms(Gate &gate) {
    double worst = 0.0;
    for (double alpha : {kPi / 6, kPi / 3, kPi / 2}) {
        const PauliReport r = pauli_suite(alpha);
        const double t = std::tan(alpha / 2);
        for (double v : {std::abs(r.sxsy - kI * t), std::abs(r.sysx + kI * t),
                         std::abs(r.sz_w - t), std::abs(r.anticommutator),
                         std::abs(r.commutator - 2.0 * kI * t)})
            worst = std::max(worst, v);
    }
    gate.report(1, worst <= 1e-12, "Pauli closed forms",
                fmt("max residual %.3e over alpha in {pi/6, pi/3, pi/2} (tol 1e-12)", worst));
}

// 2. Born-weighted completeness of the weak commutator.
void completeness(Gate &gate) {
    std::mt19937_64 rng(20260101);
    double worst = 0.0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t dim = 2 + rng() % 15;
        const std::uint64_t s = rng();
        const StateVector i = random_state(dim, s);
        const auto basis = basis_from_columns("random", random_unitary(dim, s + 1));
        const Operator a = random_hermitian(dim, s + 2), b = random_hermitian(dim, s + 3);
        const Complex lhs = averaged_weak_correlation(i, basis, a, b, Combine::commutator);
        const CMatrix c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
        const Complex rhs = i.amplitudes().dot(c * i.amplitudes());
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    gate.report(2, worst <= 1e-10, "Completeness identity",
                fmt("200 random instances, dim <= 16, max residual %.3e (tol 1e-10)", worst));
}

// 3. Averaged weak commutator on a 64-level truncated Fock space.
void fock_ccr(Gate &gate) {
    const std::size_t n = 64;
    const FockConfig fc{n, 1.0, 1.0};
    const Representation rep = make_representation(fc);
    const auto basis = momentum_basis(rep).states;
    const Operator comm = commutator(rep.ops.x, rep.ops.p);

    std::mt19937_64 rng(31);
    std::normal_distribution<double> normal;
    CVector low = CVector::Zero(n);
    for (Eigen::Index k = 0; k < 32; ++k)
        low(k) = Complex(normal(rng), normal(rng)) * std::exp(-0.1 * k);
    low.normalize();

    const StateVector safe = StateVector::normalized(rep.basis_id(), low);
    const Complex avg =
        averaged_weak_correlation(safe, basis, rep.ops.x, rep.ops.p, Combine::commutator);
    const double safe_residual = std::abs(avg - kI * fc.hbar);

    double edge_residual = 0.0, oracle_residual = 0.0;
    for (double c : {0.05, 0.1, 0.2}) {
        CVector v = low * std::sqrt(1.0 - c * c);
        v(n - 1) = c;
        const StateVector s = StateVector::normalized(rep.basis_id(), v);
        const Complex got =
            averaged_weak_correlation(s, basis, rep.ops.x, rep.ops.p, Combine::commutator);
        const Complex expected = kI * fc.hbar * (1.0 - static_cast<double>(n) * std::norm(s[n - 1]));
        edge_residual = std::max(edge_residual, std::abs(got - expected));
        oracle_residual = std::max(oracle_residual, std::abs(got - expectation(s, comm)));
    }
    const bool ok = safe_residual <= 1e-10 && edge_residual <= 1e-10 && oracle_residual <= 1e-10;
    gate.report(3, ok, "CCR in truncated Fock space",
                fmt("support <= 31: |avg - i| = %.3e; top amplitude c in {0.05,0.1,0.2}: "
                    "|avg - i(1-N|c|^2)| = %.3e, |avg - <[x,p]>| = %.3e (tol 1e-10)",
                    safe_residual, edge_residual, oracle_residual));
}

// 4. First-order pointer shifts converge at second order in g.
void pointer_convergence_gate(Gate &gate) {
    const FockConfig fc{64, 1.0, 1.0};
    const Representation rep = make_representation(fc);
    CVector a = CVector::Zero(64), b = CVector::Zero(64);
    a(0) = 1.0;
    a(1) = Complex(0.5, 0.5);
    a(2) = 0.3;
    b(0) = 1.0;
    b(1) = -0.4;
    b(2) = Complex(0.0, 0.6);
    b(3) = 0.2;
    const StateVector i = StateVector::normalized(rep.basis_id(), a);
    const StateVector f = StateVector::normalized(rep.basis_id(), b);
    const ConvergenceReport r = pointer_convergence(rep, i, f, 1.0, 0.02);
    const bool ok = std::abs(r.dx_ratio - 4.0) <= 0.8 && std::abs(r.dp_ratio - 4.0) <= 0.8;
    gate.report(4, ok, "Pointer first-order convergence",
                fmt("x_w = %.4f%+.4fi; halving g 0.02 -> 0.01 shrinks |dx - pred|/g by %.4f and "
                    "|dp - pred|/g by %.4f (target 4 +- 20%%); raw-difference ratios %.4f, "
                    "%.4f",
                    r.x_w.real(), r.x_w.imag(), r.dx_ratio, r.dp_ratio, r.dx_absolute_ratio,
                    r.dp_absolute_ratio));
}

// 5. Pointer-correlation average at desk scale, exact and sampled.
void pointer_average(Gate &gate) {
    const auto t0 = std::chrono::steady_clock::now();
    const GridConfig gc{64, 25.6, 1.0};
    CcrExperimentConfig cfg{make_representation(gc)};
    cfg.initial = gaussian_packet(gc, 0.0, 1.0, 0.0);
    cfg.sigma = 1.0;
    cfg.sigma_prime = 0.01;
    cfg.g = 0.01;
    cfg.n_trials = 50000000;
    cfg.seed = 2026;
    cfg.halving = false;
    const CcrReport r = ccr_experiment(cfg);
    const CcrMonteCarlo &mc = *r.monte_carlo;
    const double born = r.pointer.born_product_over_g2;
    const double z_born = (mc.product_over_g2 - born) / mc.stderr_over_g2;
    const double elapsed = seconds_since(t0);
    const bool ok = r.pointer_relative_error <= 0.02 && mc.stats.accepted >= 100000 &&
                    std::abs(mc.z_score) <= 3.0 && std::abs(z_born) <= 3.0 && elapsed <= 120.0;
    gate.report(5, ok, "Pointer correlation average",
                fmt("exact Born average %.6f (target 1, rel err %.2e, tol 2e-2); Monte Carlo "
                    "%.4f +- %.4f from %llu accepted, z = %.2f vs the mid-weighted exact "
                    "%.6f, z = %.2f vs Born (tol 3); %.1f s",
                    born, r.pointer_relative_error, mc.product_over_g2, mc.stderr_over_g2,
                    static_cast<unsigned long long>(mc.stats.accepted), mc.z_score,
                    mc.reference, z_born, elapsed));
}

// 6. Dual symmetries and selection-chain reductions.
void chain_symmetries(Gate &gate) {
    std::mt19937_64 rng(606);
    double sym = 0.0, two = 0.0, four = 0.0;
    for (int k = 0; k < 200; ++k) {
        const std::size_t dim = 2 + rng() % 15;
        const std::uint64_t s = rng();
        const StateVector i = random_state(dim, s), f = random_state(dim, s + 1);
        std::vector<Operator> ops;
        for (int j = 0; j < 4; ++j)
            ops.push_back(random_hermitian(dim, s + 2 + j));
        const SymmetryResiduals r = symmetry_residuals(i, f, ops[0], ops[1]);
        sym = std::max({sym, r.dual_product, r.commutator});

        const std::vector<Operator> pair{ops[1], ops[0]};
        two = std::max(two, std::abs(chain_weak_correlation(
                                         SelectionProtocol::alternating(i, f, 2), pair) -
                                     weak_correlation(i, f, ops[0], ops[1])));

        const SelectionProtocol p = SelectionProtocol::alternating(i, f, 4);
        Complex num{1.0}, den{1.0};
        for (std::size_t g = 0; g < 4; ++g) {
            num *= p.state(g + 1).amplitudes().dot(ops[g].matrix() * p.state(g).amplitudes());
            den *= p.state(g + 1).amplitudes().dot(p.state(g).amplitudes());
        }
        const Complex oracle = num / den;
        four = std::max(four, std::abs(chain_weak_correlation(p, ops) - oracle) /
                                  std::max(1.0, std::abs(oracle)));
    }
    const bool ok = sym <= 1e-12 && two <= 1e-12 && four <= 1e-12;
    gate.report(6, ok, "Dual symmetries and chains",
                fmt("200 instances: symmetry %.3e, 2-op reduction %.3e, 4-op vs oracle %.3e "
                    "(relative to max(1, |oracle|)) (tol 1e-12)",
                    sym, two, four));
}

// 7. Riemann operator properties.
void riemann(Gate &gate) {
    const std::size_t n = 64;
    const Representation fock = make_representation(FockConfig{n, 1.0, 1.0});
    const StateVector zero = StateVector::basis_element(fock.basis_id(), n, 0);
    const RiemannReport r = riemann_experiment(fock, zero, zero);

    const GridConfig gc{64, 25.6, 1.0};
    const Representation grid = make_representation(gc);
    const StateVector gi = gaussian_packet(gc, 0.0, 1.0, 0.0);
    const RiemannReport rg = riemann_experiment(grid, gi, gi);

    const double herm = std::max(r.hermiticity_residual, rg.hermiticity_residual);
    const double rho = std::abs(r.rho_w);
    const double rw = std::abs(r.r_w - 0.5);
    const bool ok = herm <= 1e-12 && r.half_line_residual <= 1e-12 && rho <= 1e-12 && rw <= 1e-12;
    gate.report(7, ok, "Riemann operator",
                fmt("hermiticity %.3e (Fock and grid), half-line on levels 0..N-3 %.3e "
                    "(unrestricted %.1f), |rho_w| %.3e, |r_w - 1/2| %.3e (tol 1e-12)",
                    herm, r.half_line_residual, *r.half_line_full, rho, rw));
}

// 8. Reproducibility of ccr and montecarlo runs through the command line.
std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

int invoke(const std::vector<std::string> &args) {
    std::vector<const char *> argv{"weaklab"};
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    return cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

void reproducibility(Gate &gate) {
    const fs::path root = fs::temp_directory_path() / "weaklab-acceptance";
    fs::remove_all(root);
    bool ok = true;
    int compared = 0;
    const std::vector<std::vector<std::string>> runs{
        {"ccr", "--rep", "grid", "--n-points", "32", "--length", "16", "--trials", "300000",
         "--seed", "9"},
        {"ccr", "--rep", "fock", "--dim", "64", "--trials", "300000", "--seed", "7"},
        {"montecarlo", "--trials", "200000", "--seed", "3"},
    };
    for (std::size_t k = 0; k < runs.size(); ++k) {
        std::vector<nlohmann::json> records;
        std::vector<std::string> tables;
        for (const char *workers : {"1", "3", "1"}) {
            const fs::path dir = root / (std::to_string(k) + "-" + std::to_string(records.size()));
            auto args = runs[k];
            args.insert(args.end(), {"--workers", workers, "--out", dir.string()});
            if (invoke(args) > 1)
                ok = false;
            nlohmann::json rec = nlohmann::json::parse(slurp(dir / "run.json"));
            std::string csv;
            for (const auto &entry : fs::directory_iterator(dir))
                if (entry.path().extension() == ".csv")
                    csv += slurp(entry.path());
            records.push_back(rec);
            tables.push_back(csv);
        }
        for (std::size_t j = 1; j < records.size(); ++j) {
            ok = ok && records[j]["report"] == records[0]["report"] &&
                 records[j]["checks"] == records[0]["checks"] && tables[j] == tables[0];
            ++compared;
        }
        // The embedded config reproduces the run.
        const fs::path again = root / (std::to_string(k) + "-replay");
        const fs::path stored = root / (std::to_string(k) + "-0") / "run.json";
        if (invoke({runs[k][0], "--config", stored.string(), "--out", again.string()}) > 1)
            ok = false;
        const nlohmann::json replay = nlohmann::json::parse(slurp(again / "run.json"));
        ok = ok && replay["report"] == records[0]["report"];
        ++compared;
    }
    fs::remove_all(root);
    gate.report(8, ok, "Reproducibility",
                fmt("%d comparisons of run.json reports and CSV bytes across workers {1, 3} "
                    "and config replay: %s",
                    compared, ok ? "bit-identical" : "MISMATCH"));
}

} // namespace

int main() {
    Gate gate;
    pauli_closed_forms(gate);
    completeness(gate);
    fock_ccr(gate);
    pointer_convergence_gate(gate);
    pointer_average(gate);
    chain_symmetries(gate);
    riemann(gate);
    reproducibility(gate);
    std::printf("%s: %d of 8 criteria failed\n", gate.failures ? "FAIL" : "PASS", gate.failures);
    return gate.failures ? 1 : 0;
}
