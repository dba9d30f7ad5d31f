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

/// Overlaps at or below this magnitude are treated as orthogonal selections.
inline constexpr double kOrthogonalityThreshold = 1e-12;

enum class Direction {
    forward, ///< <f|O|i> / <f|i>
    reverse, ///< <i|O|f> / <i|f>
};

struct WeakValueResult {
    Complex value;
    double re;
    double im;
    Complex overlap; ///< denominator of the ratio
    Direction direction;
};

/// <next|O|prev> / <next|prev>, the weak value across one selection gap.
Complex transition_weak_value(const StateVector &next, const StateVector &prev,
                              const Operator &op,
                              double eps = kOrthogonalityThreshold);

WeakValueResult weak_value(const StateVector &i, const StateVector &f,
                           const Operator &op, Direction direction = Direction::forward,
                           double eps = kOrthogonalityThreshold);

/// <i|A|f><f|B|i> / (<i|f><f|i>): B is coupled before the mid-selection,
/// A after it.
Complex weak_correlation(const StateVector &i, const StateVector &f,
                         const Operator &a, const Operator &b,
                         double eps = kOrthogonalityThreshold);
Complex weak_commutator(const StateVector &i, const StateVector &f,
                        const Operator &a, const Operator &b,
                        double eps = kOrthogonalityThreshold);
Complex weak_anticommutator(const StateVector &i, const StateVector &f,
                            const Operator &a, const Operator &b,
                            double eps = kOrthogonalityThreshold);

enum class Combine { commutator, anticommutator, product };

/// Born-weighted sum over a complete mid-selection basis,
///   sum_f |<f|i>|^2 <combined>_w^(f).
/// For an outcome with |<f|i>| <= eps the weak correlation diverges but the
/// weighted term has the finite limit <i|A|f><f|B|i>, which is used instead.
Complex averaged_weak_correlation(const StateVector &i,
                                  std::span<const StateVector> basis,
                                  const Operator &a, const Operator &b,
                                  Combine combine,
                                  double eps = kOrthogonalityThreshold);

struct CcrDecomposition {
    Complex x_w;
    Complex p_w;
    /// Re{x_w} Im{p_w} - Im{x_w} Re{p_w}; target hbar/2 only on average.
    double lhs;
    double target;
    bool p_w_real;
    /// Im{x_w} Re{p_w}; target -hbar/2 when p_w is real.
    double real_p_lhs;
    double real_p_target;
};

CcrDecomposition ccr_decomposition(const StateVector &i, const StateVector &f,
                                   const Operator &x, const Operator &p,
                                   double hbar = 1.0,
                                   double eps = kOrthogonalityThreshold);

struct CcrTerm {
    double weight;                ///< |<f|i>|^2
    std::optional<Complex> x_w;   ///< undefined when <f|i> ~ 0
    std::optional<Complex> p_w;
    double lhs_term;              ///< weight * (Re x Im p - Im x Re p)
    double real_p_term;           ///< weight * Im x Re p
};

struct AveragedCcr {
    std::vector<CcrTerm> terms;
    double lhs = 0.0;          ///< target hbar/2
    double real_p_lhs = 0.0;   ///< target -hbar/2 on a momentum eigenbasis
    Complex commutator;        ///< target i*hbar
    double target = 0.0;
    double real_p_target = 0.0;
};

AveragedCcr averaged_ccr_decomposition(const StateVector &i,
                                       std::span<const StateVector> basis,
                                       const Operator &x, const Operator &p,
                                       double hbar = 1.0,
                                       double eps = kOrthogonalityThreshold);

/// Ordered selection states s_0 (pre), s_1, ..., s_K (post). Adjacent
/// overlaps must exceed the orthogonality threshold.
class SelectionProtocol {
  public:
    explicit SelectionProtocol(std::vector<StateVector> states,
                               double eps = kOrthogonalityThreshold);

    /// (i, f, i, f, ...) with `gaps` selection gaps.
    static SelectionProtocol alternating(const StateVector &first,
                                         const StateVector &second,
                                         std::size_t gaps,
                                         double eps = kOrthogonalityThreshold);

    std::size_t gaps() const noexcept { return states_.size() - 1; }
    const StateVector &state(std::size_t k) const { return states_.at(k); }
    const StateVector &pre() const { return states_.front(); }
    const StateVector &post() const { return states_.back(); }
    double eps() const noexcept { return eps_; }

  private:
    std::vector<StateVector> states_;
    double eps_;
};

/// prod_k <s_{k+1}|O_k|s_k> / <s_{k+1}|s_k>. `ops` is in coupling order:
/// ops[0] acts in the first gap. A two-gap (i, f, i) chain with ops {B, A}
/// reproduces weak_correlation(i, f, A, B) bit for bit.
Complex chain_weak_correlation(const SelectionProtocol &protocol,
                               std::span<const Operator> ops);

/// The same chain with i and f interchanged: pre-select f, mid-select i, ...
Complex dual_weak_correlation(const StateVector &i, const StateVector &f,
                              std::span<const Operator> ops,
                              double eps = kOrthogonalityThreshold);

struct SymmetryResiduals {
    double dual_product; ///< |<BA>_wbar - <AB>_w|
    double commutator;   ///< |<[A,B]>_w + <[A,B]>_wbar|
};

SymmetryResiduals symmetry_residuals(const StateVector &i, const StateVector &f,
                                     const Operator &a, const Operator &b,
                                     double eps = kOrthogonalityThreshold);

/// |forward chain(ops) - dual chain(reversed ops)| for an even number of ops.
double high_order_dual_residual(const StateVector &i, const StateVector &f,
                                std::span<const Operator> ops,
                                double eps = kOrthogonalityThreshold);

/// The two odd-order "symmetries" that are printed with identical sides.
/// They are evaluated literally (value minus itself) and are therefore 0.
struct LiteralOddOrderResiduals {
    double forward;
    double dual;
};
LiteralOddOrderResiduals literal_odd_order_residuals(const StateVector &i,
                                                     const StateVector &f,
                                                     std::span<const Operator> ops,
                                                     double eps = kOrthogonalityThreshold);

} // namespace weaklab
