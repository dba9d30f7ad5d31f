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

#include "weaklab/weakcorr.hpp"

#include <algorithm>
#include <cmath>

namespace weaklab {

namespace {

void require_admissible(Complex overlap, double eps, const char *context) {
    if (!(std::abs(overlap) > eps))
        raise(ErrorCode::OrthogonalSelection,
              std::string(context) + ": |overlap| = " +
                  std::to_string(std::abs(overlap)) + " <= " + std::to_string(eps));
}

Complex combine_pair(Complex ab, Complex ba, Combine how) {
    switch (how) {
    case Combine::commutator:
        return ab - ba;
    case Combine::anticommutator:
        return ab + ba;
    case Combine::product:
        return ab;
    }
    return ab;
}

} // namespace

Complex transition_weak_value(const StateVector &next, const StateVector &prev,
                              const Operator &op, double eps) {
    require_same_basis(next.basis_id(), prev.basis_id(), "weak value");
    const Complex overlap = inner(next, prev);
    require_admissible(overlap, eps, "weak value");
    const Complex numerator = next.amplitudes().dot(op.apply(prev));
    return numerator / overlap;
}

WeakValueResult weak_value(const StateVector &i, const StateVector &f,
                           const Operator &op, Direction direction, double eps) {
    const bool fwd = direction == Direction::forward;
    const StateVector &next = fwd ? f : i;
    const StateVector &prev = fwd ? i : f;
    const Complex v = transition_weak_value(next, prev, op, eps);
    return {v, v.real(), v.imag(), inner(next, prev), direction};
}

Complex weak_correlation(const StateVector &i, const StateVector &f,
                         const Operator &a, const Operator &b, double eps) {
    return transition_weak_value(i, f, a, eps) * transition_weak_value(f, i, b, eps);
}

Complex weak_commutator(const StateVector &i, const StateVector &f,
                        const Operator &a, const Operator &b, double eps) {
    return weak_correlation(i, f, a, b, eps) - weak_correlation(i, f, b, a, eps);
}

Complex weak_anticommutator(const StateVector &i, const StateVector &f,
                            const Operator &a, const Operator &b, double eps) {
    return weak_correlation(i, f, a, b, eps) + weak_correlation(i, f, b, a, eps);
}

namespace {

// Matrix elements against a fixed pre-selection, reused across all f.
struct PreselectionKernel {
    CVector a_i;     // A|i>
    CVector b_i;     // B|i>
    CVector a_dag_i; // A^dagger|i>, so <i|A|f> = conj(<f|A^dagger|i>)
    CVector b_dag_i;

    PreselectionKernel(const StateVector &i, const Operator &a, const Operator &b)
        : a_i(a.apply(i)), b_i(b.apply(i)), a_dag_i(a.matrix().adjoint() * i.amplitudes()),
          b_dag_i(b.matrix().adjoint() * i.amplitudes()) {}
};

} // namespace

Complex averaged_weak_correlation(const StateVector &i,
                                  std::span<const StateVector> basis,
                                  const Operator &a, const Operator &b,
                                  Combine combine, double eps) {
    require_orthonormal_complete(basis);
    require_same_basis(i.basis_id(), basis.front().basis_id(), "averaged weak correlation");
    require_same_basis(a.basis_id(), b.basis_id(), "averaged weak correlation");
    const PreselectionKernel k(i, a, b);

    Complex total = 0.0;
    for (const auto &f : basis) {
        const CVector &fv = f.amplitudes();
        const Complex f_i = fv.dot(i.amplitudes());
        const Complex i_a_f = std::conj(fv.dot(k.a_dag_i));
        const Complex i_b_f = std::conj(fv.dot(k.b_dag_i));
        const Complex f_a_i = fv.dot(k.a_i);
        const Complex f_b_i = fv.dot(k.b_i);
        if (std::abs(f_i) > eps) {
            const double weight = std::norm(f_i);
            const Complex i_f = std::conj(f_i);
            const Complex ab = (i_a_f / i_f) * (f_b_i / f_i);
            const Complex ba = (i_b_f / i_f) * (f_a_i / f_i);
            total += weight * combine_pair(ab, ba, combine);
        } else {
            total += combine_pair(i_a_f * f_b_i, i_b_f * f_a_i, combine);
        }
    }
    return total;
}

CcrDecomposition ccr_decomposition(const StateVector &i, const StateVector &f,
                                   const Operator &x, const Operator &p,
                                   double hbar, double eps) {
    const Complex xw = weak_value(i, f, x, Direction::forward, eps).value;
    const Complex pw = weak_value(i, f, p, Direction::forward, eps).value;
    CcrDecomposition out;
    out.x_w = xw;
    out.p_w = pw;
    out.lhs = xw.real() * pw.imag() - xw.imag() * pw.real();
    out.target = 0.5 * hbar;
    out.p_w_real = std::abs(pw.imag()) <= 1e-9 * std::max(1.0, std::abs(pw));
    out.real_p_lhs = xw.imag() * pw.real();
    out.real_p_target = -0.5 * hbar;
    return out;
}

AveragedCcr averaged_ccr_decomposition(const StateVector &i,
                                       std::span<const StateVector> basis,
                                       const Operator &x, const Operator &p,
                                       double hbar, double eps) {
    require_orthonormal_complete(basis);
    require_same_basis(i.basis_id(), basis.front().basis_id(), "averaged CCR");
    const PreselectionKernel k(i, x, p);

    AveragedCcr out;
    out.target = 0.5 * hbar;
    out.real_p_target = -0.5 * hbar;
    out.terms.reserve(basis.size());
    Complex commutator = 0.0;
    for (const auto &f : basis) {
        const CVector &fv = f.amplitudes();
        const Complex f_i = fv.dot(i.amplitudes());
        const Complex f_x_i = fv.dot(k.a_i);
        const Complex f_p_i = fv.dot(k.b_i);
        CcrTerm t{};
        t.weight = std::norm(f_i);
        if (std::abs(f_i) > eps) {
            const Complex xw = f_x_i / f_i;
            const Complex pw = f_p_i / f_i;
            t.x_w = xw;
            t.p_w = pw;
            t.lhs_term = t.weight * (xw.real() * pw.imag() - xw.imag() * pw.real());
            t.real_p_term = t.weight * xw.imag() * pw.real();
            commutator += t.weight * (std::conj(xw) * pw - std::conj(pw) * xw);
        } else {
            // weight * Im(conj(x_w) p_w) -> Im(<i|x|f><f|p|i>)
            const Complex xp = std::conj(f_x_i) * f_p_i;
            t.lhs_term = xp.imag();
            t.real_p_term = 0.0;
            commutator += xp - std::conj(xp);
        }
        out.lhs += t.lhs_term;
        out.real_p_lhs += t.real_p_term;
        out.terms.push_back(std::move(t));
    }
    out.commutator = commutator;
    return out;
}

SelectionProtocol::SelectionProtocol(std::vector<StateVector> states, double eps)
    : states_(std::move(states)), eps_(eps) {
    if (states_.size() < 2)
        raise(ErrorCode::ArityMismatch, "a protocol needs at least pre- and post-selection");
    for (std::size_t k = 1; k < states_.size(); ++k) {
        require_same_basis(states_[k - 1].basis_id(), states_[k].basis_id(), "protocol");
        require_admissible(inner(states_[k], states_[k - 1]), eps_, "protocol gap");
    }
}

SelectionProtocol SelectionProtocol::alternating(const StateVector &first,
                                                 const StateVector &second,
                                                 std::size_t gaps, double eps) {
    std::vector<StateVector> states;
    states.reserve(gaps + 1);
    for (std::size_t k = 0; k <= gaps; ++k)
        states.push_back(k % 2 == 0 ? first : second);
    return SelectionProtocol(std::move(states), eps);
}

Complex chain_weak_correlation(const SelectionProtocol &protocol,
                               std::span<const Operator> ops) {
    if (ops.size() != protocol.gaps())
        raise(ErrorCode::ArityMismatch,
              std::to_string(ops.size()) + " operators for " +
                  std::to_string(protocol.gaps()) + " selection gaps");
    const std::size_t last = ops.size() - 1;
    Complex acc = transition_weak_value(protocol.state(last + 1), protocol.state(last),
                                        ops[last], protocol.eps());
    for (std::size_t k = last; k-- > 0;)
        acc = acc * transition_weak_value(protocol.state(k + 1), protocol.state(k), ops[k],
                                          protocol.eps());
    return acc;
}

Complex dual_weak_correlation(const StateVector &i, const StateVector &f,
                              std::span<const Operator> ops, double eps) {
    return chain_weak_correlation(SelectionProtocol::alternating(f, i, ops.size(), eps), ops);
}

SymmetryResiduals symmetry_residuals(const StateVector &i, const StateVector &f,
                                     const Operator &a, const Operator &b, double eps) {
    const std::vector<Operator> ab_order{a, b}; // dual: A first, then B -> <BA>_wbar
    const std::vector<Operator> ba_order{b, a}; // dual: -> <AB>_wbar
    const Complex ba_dual = dual_weak_correlation(i, f, ab_order, eps);
    const Complex ab_dual = dual_weak_correlation(i, f, ba_order, eps);
    const Complex ab = weak_correlation(i, f, a, b, eps);
    const Complex comm = weak_commutator(i, f, a, b, eps);
    const Complex comm_dual = ab_dual - ba_dual;
    return {std::abs(ba_dual - ab), std::abs(comm + comm_dual)};
}

double high_order_dual_residual(const StateVector &i, const StateVector &f,
                                std::span<const Operator> ops, double eps) {
    if (ops.empty() || ops.size() % 2 != 0)
        raise(ErrorCode::ArityMismatch, "even-order symmetry needs an even number of operators");
    const Complex forward =
        chain_weak_correlation(SelectionProtocol::alternating(i, f, ops.size(), eps), ops);
    std::vector<Operator> reversed(ops.rbegin(), ops.rend());
    const Complex dual = dual_weak_correlation(i, f, reversed, eps);
    return std::abs(forward - dual);
}

LiteralOddOrderResiduals literal_odd_order_residuals(const StateVector &i,
                                                     const StateVector &f,
                                                     std::span<const Operator> ops,
                                                     double eps) {
    if (ops.size() % 2 != 1)
        raise(ErrorCode::ArityMismatch, "odd-order identities need an odd number of operators");
    const Complex fwd =
        chain_weak_correlation(SelectionProtocol::alternating(i, f, ops.size(), eps), ops);
    const Complex dual = dual_weak_correlation(i, f, ops, eps);
    return {std::abs(fwd - fwd), std::abs(dual - dual)};
}

} // namespace weaklab
