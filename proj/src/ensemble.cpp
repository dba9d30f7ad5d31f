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

#include "weaklab/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace weaklab {

// --- Random streams -------------------------------------------------------

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Substream::Substream(std::uint64_t master_seed, std::uint64_t index)
    : state_(mix64(master_seed + mix64(index + 0x9e3779b97f4a7c15ULL))) {}

std::uint64_t Substream::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
}

double Substream::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Substream substream(std::uint64_t master_seed, std::uint64_t trial_index) {
    return Substream(master_seed, trial_index);
}

namespace {

constexpr std::size_t kChunkTrials = 4096;
constexpr double kReachableFloor = 1e-30;

// Kahan-Babuska-Neumaier running sum.
class CompensatedSum {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    void merge(const CompensatedSum &o) {
        add(o.sum_);
        add(o.comp_);
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct WeightedMoments {
    CompensatedSum wq, w2q, w2q2;

    void add(double w, double q) {
        wq.add(w * q);
        w2q.add(w * w * q);
        w2q2.add(w * w * q * q);
    }
    void merge(const WeightedMoments &o) {
        wq.merge(o.wq);
        w2q.merge(o.w2q);
        w2q2.merge(o.w2q2);
    }
};

struct Accumulator {
    std::uint64_t accepted = 0;
    CompensatedSum w, w2;
    WeightedMoments dx, dx_prime, product;

    void merge(const Accumulator &o) {
        accepted += o.accepted;
        w.merge(o.w);
        w2.merge(o.w2);
        dx.merge(o.dx);
        dx_prime.merge(o.dx_prime);
        product.merge(o.product);
    }
};

struct Estimate {
    double mean;
    double stderr_;
};

Estimate finish(const WeightedMoments &m, const Accumulator &acc) {
    const double sw = acc.w.value();
    const double mean = m.wq.value() / sw;
    const double n = static_cast<double>(acc.accepted);
    if (acc.accepted < 2)
        return {mean, 0.0};
    const double ss = m.w2q2.value() - 2.0 * mean * m.w2q.value() + mean * mean * acc.w2.value();
    return {mean, std::sqrt(std::max(ss, 0.0) * n / (n - 1.0)) / sw};
}

// Piecewise-constant inverse CDF over a readout grid.
struct ReadoutTable {
    std::vector<double> cdf;
    std::vector<double> values;
    double cell = 0.0;
    double mean = 0.0;

    explicit ReadoutTable(const ReadoutDistribution &d) : values(d.values), cell(d.cell_width) {
        cdf.resize(d.probabilities.size());
        double run = 0.0, num = 0.0;
        for (std::size_t k = 0; k < d.probabilities.size(); ++k) {
            run += d.probabilities[k];
            num += d.probabilities[k] * d.values[k];
            cdf[k] = run;
        }
        for (double &c : cdf)
            c /= run;
        mean = num / run;
    }

    double sample(double u) const {
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::size_t j = static_cast<std::size_t>(it - cdf.begin());
        if (j >= cdf.size())
            j = cdf.size() - 1;
        const double lo = j > 0 ? cdf[j - 1] : 0.0;
        const double p = cdf[j] - lo;
        const double t = p > 0.0 ? (u - lo) / p : 0.5;
        return values[j] + (t - 0.5) * cell;
    }
};

struct OutcomeNode {
    double probability = 0.0; ///< pass probability, or outcome probability in a basis
    std::optional<ReadoutTable> readout;
};

struct IncomingNode {
    std::vector<OutcomeNode> outcomes;
    std::vector<double> outcome_cdf; ///< basis stages only
};

struct StageTables {
    bool basis = false;
    std::vector<std::optional<IncomingNode>> incoming;
};

IncomingNode build_node(const StateVector &incoming, const StageSpec &stage,
                        const PreparedCoupling &coupling, const PointerState &pointer) {
    const JointState joint = couple(JointState::product(incoming, pointer), coupling);
    IncomingNode node;
    node.outcomes.reserve(stage.outcomes.size());
    double total = 0.0;
    for (const auto &target : stage.outcomes) {
        require_same_basis(joint.system_basis(), target.basis_id(), "trial selection");
        const CVector cond =
            (target.amplitudes().adjoint() * joint.amplitudes()).transpose();
        OutcomeNode o;
        o.probability = cond.squaredNorm();
        if (o.probability > kReachableFloor) {
            const PointerState conditional(joint.grid(), cond, joint.sigma());
            o.readout.emplace(stage.readout == Readout::position
                                  ? position_distribution(conditional)
                                  : momentum_distribution(conditional));
        } else {
            o.probability = 0.0;
        }
        total += o.probability;
        node.outcomes.push_back(std::move(o));
    }
    if (stage.outcomes.size() > 1) {
        double run = 0.0;
        for (auto &o : node.outcomes) {
            o.probability /= total;
            run += o.probability;
            node.outcome_cdf.push_back(run);
        }
    }
    return node;
}

std::vector<StageTables> build_tables(const TrialConfig &cfg) {
    if (cfg.stages.empty() || cfg.stages.size() > 2)
        raise(ErrorCode::InvalidConfig, "trials support one or two coupling stages");
    if (cfg.n_trials < 1)
        raise(ErrorCode::InvalidConfig, "n_trials must be >= 1");

    std::vector<StageTables> tables(cfg.stages.size());
    std::vector<const StateVector *> incoming{&cfg.pre};
    for (std::size_t s = 0; s < cfg.stages.size(); ++s) {
        const StageSpec &stage = cfg.stages[s];
        if (stage.outcomes.empty())
            raise(ErrorCode::InvalidConfig, "a stage needs at least one selection outcome");
        tables[s].basis = stage.outcomes.size() > 1;
        if (tables[s].basis)
            require_orthonormal_complete(stage.outcomes);

        GridConfig grid = stage.grid.value_or(default_pointer_grid(stage.sigma, cfg.hbar));
        grid.hbar = cfg.hbar;
        const PointerState pointer = gaussian_pointer(grid, stage.sigma);
        const PreparedCoupling coupling(stage.coupling);

        tables[s].incoming.resize(incoming.size());
        for (std::size_t k = 0; k < incoming.size(); ++k)
            if (incoming[k] != nullptr)
                tables[s].incoming[k] = build_node(*incoming[k], stage, coupling, pointer);

        // Next stage starts from each reachable outcome state.
        std::vector<const StateVector *> next(stage.outcomes.size(), nullptr);
        for (std::size_t j = 0; j < stage.outcomes.size(); ++j) {
            bool reachable = false;
            for (const auto &node : tables[s].incoming)
                if (node && node->outcomes[j].probability > 0.0)
                    reachable = true;
            if (reachable)
                next[j] = &stage.outcomes[j];
        }
        incoming = std::move(next);
    }
    return tables;
}

Accumulator run_chunk(const std::vector<StageTables> &tables, const TrialConfig &cfg,
                      std::size_t begin, std::size_t end) {
    Accumulator acc;
    const std::size_t stages = tables.size();
    for (std::size_t t = begin; t < end; ++t) {
        Substream rs(cfg.master_seed, t);
        std::size_t node_index = 0;
        double weight = 1.0;
        bool after_basis = false;
        bool passed = true;
        double readout[2] = {0.0, 0.0};
        for (std::size_t s = 0; s < stages; ++s) {
            const double u_select = rs.uniform();
            const double u_read = rs.uniform();
            const IncomingNode &node = *tables[s].incoming[node_index];
            std::size_t j = 0;
            if (tables[s].basis) {
                auto it = std::upper_bound(node.outcome_cdf.begin(), node.outcome_cdf.end(),
                                           u_select);
                j = std::min(static_cast<std::size_t>(it - node.outcome_cdf.begin()),
                             node.outcomes.size() - 1);
                while (node.outcomes[j].probability == 0.0 && j > 0)
                    --j;
                after_basis = true;
            } else {
                const double p = node.outcomes[0].probability;
                if (!(u_select < p)) {
                    passed = false;
                    break;
                }
                if (after_basis)
                    weight /= p;
            }
            readout[s] = node.outcomes[j].readout->sample(u_read);
            node_index = j;
        }
        if (!passed)
            continue;
        ++acc.accepted;
        acc.w.add(weight);
        acc.w2.add(weight * weight);
        acc.dx.add(weight, readout[0]);
        if (stages == 2) {
            acc.dx_prime.add(weight, readout[1]);
            acc.product.add(weight, readout[0] * readout[1]);
        }
    }
    return acc;
}

} // namespace

EnsembleStats run_trials(const TrialConfig &cfg) {
    const std::vector<StageTables> tables = build_tables(cfg);

    const std::size_t n_chunks = (cfg.n_trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<Accumulator> partial(n_chunks);
    std::atomic<std::size_t> next_chunk{0};
    auto worker = [&] {
        for (std::size_t c = next_chunk++; c < n_chunks; c = next_chunk++) {
            const std::size_t begin = c * kChunkTrials;
            const std::size_t end = std::min(cfg.n_trials, begin + kChunkTrials);
            partial[c] = run_chunk(tables, cfg, begin, end);
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(cfg.workers, 1, n_chunks);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t k = 0; k < workers; ++k)
            pool.emplace_back(worker);
        for (auto &th : pool)
            th.join();
    }

    Accumulator total;
    for (const auto &p : partial)
        total.merge(p);
    if (total.accepted == 0)
        raise(ErrorCode::NoAcceptedTrials,
              "no trial out of " + std::to_string(cfg.n_trials) + " passed every selection");

    EnsembleStats out;
    out.attempted = cfg.n_trials;
    out.accepted = total.accepted;
    out.acceptance_rate =
        static_cast<double>(total.accepted) / static_cast<double>(cfg.n_trials);
    out.weighted = std::any_of(tables.begin(), tables.end(),
                               [](const StageTables &t) { return t.basis; });
    out.effective_samples = total.w.value() * total.w.value() / total.w2.value();
    const Estimate dx = finish(total.dx, total);
    out.mean_dx = dx.mean;
    out.stderr_dx = dx.stderr_;
    if (tables.size() == 2) {
        const Estimate dxp = finish(total.dx_prime, total);
        const Estimate prod = finish(total.product, total);
        out.mean_dx_prime = dxp.mean;
        out.stderr_dx_prime = dxp.stderr_;
        out.mean_product = prod.mean;
        out.stderr_product = prod.stderr_;
    }
    return out;
}

EnsembleExpectation exact_expectation(const TrialConfig &cfg) {
    const std::vector<StageTables> tables = build_tables(cfg);
    double mass = 0.0, weighted = 0.0, q0 = 0.0, q1 = 0.0, q01 = 0.0;

    const IncomingNode &root = *tables[0].incoming[0];
    for (std::size_t j = 0; j < root.outcomes.size(); ++j) {
        const OutcomeNode &o0 = root.outcomes[j];
        if (o0.probability == 0.0)
            continue;
        const double m0 = o0.readout->mean;
        if (tables.size() == 1) {
            mass += o0.probability;
            weighted += o0.probability;
            q0 += o0.probability * m0;
            continue;
        }
        const IncomingNode &next = *tables[1].incoming[j];
        for (const OutcomeNode &o1 : next.outcomes) {
            if (o1.probability == 0.0)
                continue;
            const double path = o0.probability * o1.probability;
            const double w = (tables[0].basis && !tables[1].basis) ? 1.0 / o1.probability : 1.0;
            const double m1 = o1.readout->mean;
            mass += path;
            weighted += path * w;
            q0 += path * w * m0;
            q1 += path * w * m1;
            q01 += path * w * m0 * m1;
        }
    }
    EnsembleExpectation out;
    out.acceptance_probability = mass;
    out.mean_dx = q0 / weighted;
    if (tables.size() == 2) {
        out.mean_dx_prime = q1 / weighted;
        out.mean_product = q01 / weighted;
    }
    return out;
}

WeakValueEstimate estimate_weak_value(const WeakValueEstimateConfig &cfg) {
    if (cfg.g == 0.0)
        raise(ErrorCode::InvalidConfig, "weak value estimation needs g != 0");
    auto make = [&](Readout readout, std::uint64_t seed) {
        StageSpec stage{CouplingSpec{cfg.observable, PointerGenerator::position, cfg.g, -1},
                        cfg.sigma, cfg.grid, {cfg.post}, readout};
        return TrialConfig{cfg.pre, {stage}, cfg.hbar, cfg.n_trials, seed, cfg.workers};
    };
    WeakValueEstimate out;
    out.position_run = run_trials(make(Readout::position, cfg.master_seed));
    out.momentum_run =
        run_trials(make(Readout::momentum, mix64(cfg.master_seed ^ 0x6d6f6d656e74756dULL)));
    const double scale = cfg.hbar / (2.0 * cfg.sigma * cfg.sigma * cfg.g);
    out.im_est = -out.position_run.mean_dx * scale;
    out.stderr_im = out.position_run.stderr_dx * std::abs(scale);
    out.re_est = out.momentum_run.mean_dx / cfg.g;
    out.stderr_re = out.momentum_run.stderr_dx / std::abs(cfg.g);
    return out;
}

} // namespace weaklab
