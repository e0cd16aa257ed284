#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "goodhart/errors.hpp"
#include "goodhart/rng.hpp"

namespace goodhart {

enum class SelectionKind { Maximizer, Quantilizer, Random };

/// How an agent turns scored candidates into a choice. `n` is the
/// candidate-sample count and doubles as the optimization-pressure knob:
/// pressure is applied by sampling n candidates and selecting among them.
struct SelectionOperator {
    SelectionKind kind = SelectionKind::Maximizer;
    int n = 1;      // candidate-sample count, >= 1
    double q = 1.0; // top-quantile fraction in (0, 1], Quantilizer only

    static SelectionOperator maximizer(int n) { return {SelectionKind::Maximizer, n, 1.0}; }
    static SelectionOperator quantilizer(int n, double q) {
        return {SelectionKind::Quantilizer, n, q};
    }
    static SelectionOperator random_choice(int n) { return {SelectionKind::Random, n, 1.0}; }

    void validate() const {
        if (n < 1) throw ConfigError("selection operator: n must be >= 1");
        if (kind == SelectionKind::Quantilizer && !(q > 0.0 && q <= 1.0)) {
            throw ConfigError("selection operator: q must be in (0, 1]");
        }
    }

    /// Retained-set size for a candidate list of this length: ceil(q*len),
    /// never zero.
    std::size_t retained(std::size_t len) const {
        const auto k = static_cast<std::size_t>(std::ceil(q * static_cast<double>(len)));
        return std::clamp<std::size_t>(k, 1, len);
    }
};

/// One sampled candidate. hidden_goal is recorded for analysis only and
/// is never visible to a selecting agent: selection runs on metric
/// scores alone (see select_index).
struct ScoredCandidate {
    std::vector<double> action;
    double metric_score = 0.0;
    double hidden_goal = 0.0;
};

inline std::size_t uniform_pick(RngStream& rng, std::size_t n) {
    return static_cast<std::size_t>(rng.uniform_below(n));
}

/// Selects among metric scores. Maximizer: argmax, ties to the lowest
/// index (consumes no randomness). Quantilizer: sort descending (ties by
/// index) and draw uniformly from the first ceil(q*len). Random: uniform
/// draw over all candidates.
inline std::size_t select_index(std::span<const double> metric_scores,
                                const SelectionOperator& op, RngStream& rng) {
    if (metric_scores.empty()) throw std::invalid_argument("select: empty candidate list");
    op.validate();
    switch (op.kind) {
    case SelectionKind::Maximizer: {
        std::size_t best = 0;
        for (std::size_t i = 1; i < metric_scores.size(); ++i) {
            if (metric_scores[i] > metric_scores[best]) best = i;
        }
        return best;
    }
    case SelectionKind::Quantilizer: {
        std::vector<std::size_t> order(metric_scores.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (metric_scores[a] != metric_scores[b]) return metric_scores[a] > metric_scores[b];
            return a < b;
        });
        const std::size_t keep = op.retained(metric_scores.size());
        return order[uniform_pick(rng, keep)];
    }
    case SelectionKind::Random:
        return uniform_pick(rng, metric_scores.size());
    }
    throw std::logic_error("select: unknown operator kind");
}

inline const ScoredCandidate& select(std::span<const ScoredCandidate> candidates,
                                     const SelectionOperator& op, RngStream& rng) {
    std::vector<double> scores;
    scores.reserve(candidates.size());
    for (const auto& c : candidates) scores.push_back(c.metric_score);
    return candidates[select_index(scores, op, rng)];
}

/// Joint candidate distribution: goal ~ N(goal_mean, goal_sd^2) and
/// metric = goal + N(0, noise_sd^2). noise_sd = 0 gives a perfect proxy.
struct ProxyDistribution {
    double goal_mean = 0.0;
    double goal_sd = 1.0;
    double noise_sd = 0.0;

    void validate() const {
        if (goal_sd < 0.0 || noise_sd < 0.0) {
            throw ConfigError("candidate generator: standard deviations must be >= 0");
        }
        if (!std::isfinite(goal_mean) || !std::isfinite(goal_sd) || !std::isfinite(noise_sd)) {
            throw ConfigError("candidate generator: parameters must be finite");
        }
    }
};

/// Exactly n independent draws; same stream state, same list.
inline std::vector<ScoredCandidate> sample_candidates(const ProxyDistribution& gen, int n,
                                                      RngStream& rng) {
    gen.validate();
    if (n < 1) throw std::invalid_argument("sample_candidates: n must be >= 1");
    std::vector<ScoredCandidate> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        ScoredCandidate c;
        c.hidden_goal = rng.normal(gen.goal_mean, gen.goal_sd);
        c.metric_score = c.hidden_goal + rng.normal(0.0, gen.noise_sd);
        out.push_back(std::move(c));
    }
    return out;
}

} // namespace goodhart
