#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "goodhart/errors.hpp"
#include "goodhart/selection.hpp"
#include "goodhart/scenarios/streams.hpp"
#include "goodhart/trace.hpp"

namespace goodhart {

/// Shared configuration for the collective-threshold scenarios. `offset_a`
/// is the reversal point of the group-overoptimization goal curve and the
/// additive goal offset of the catastrophic-threshold variant.
struct ThresholdConfig {
    int agent_count = 2;
    double offset_a = 1.0;
    double threshold = 10.0; // catastrophic threshold T
    double step_delta = 0.1; // per-agent increment
    int max_steps = 1;
    double alpha_max = 0.0; // per-agent contribution cap (group overoptimization)
    bool literal_reversal = false;

    // When set, each agent picks per step among sampled {increment, hold}
    // candidate actions through this operator instead of incrementing
    // greedily; this is the hook the pressure sweeps and the mitigation
    // comparison drive.
    std::optional<SelectionOperator> policy;

    void validate_common() const {
        if (agent_count < 2) throw ConfigError("threshold scenario: agent_count must be >= 2");
        if (max_steps < 1) throw ConfigError("threshold scenario: max_steps must be >= 1");
        if (!(step_delta > 0.0)) throw ConfigError("threshold scenario: delta must be > 0");
        if (policy) policy->validate();
    }

    void validate_s1a() const {
        validate_common();
        if (!(alpha_max < offset_a)) {
            throw ConfigError("s1a: requires alpha_max < a (no agent can reach the reversal alone)");
        }
        if (!(static_cast<double>(agent_count) * alpha_max > offset_a)) {
            throw ConfigError("s1a: requires agent_count * alpha_max > a (jointly crossing the reversal)");
        }
    }

    void validate_s1b() const { validate_common(); }
};

namespace detail {

// Decide "increment or hold" for one agent: with a policy, draw op.n
// candidate actions uniformly from {increment, hold}, score each by the
// agent's post-action metric, and select; without one, always increment.
inline bool take_increment(const std::optional<SelectionOperator>& policy, double current_metric,
                           double delta, RngStream& agents, RngStream& sel) {
    if (!policy) return true;
    std::vector<double> scores(static_cast<std::size_t>(policy->n));
    std::vector<char> is_increment(scores.size());
    for (std::size_t c = 0; c < scores.size(); ++c) {
        is_increment[c] = agents.uniform_below(2) == 1;
        scores[c] = is_increment[c] ? current_metric + delta : current_metric;
    }
    return is_increment[select_index(scores, *policy, sel)] != 0;
}

} // namespace detail

/// Group overoptimization: every agent raises its contribution because
/// its observed metric M = sum(alpha) keeps rising, but the goal curve
/// reverses at M = a. Continuous reading: G(M) = 2a - M past the
/// reversal; the literal discontinuous reading G(M) = a - M is available
/// behind `literal_reversal`.
inline double s1a_goal_of_metric(const ThresholdConfig& cfg, double metric) {
    if (metric <= cfg.offset_a) return metric;
    return cfg.literal_reversal ? cfg.offset_a - metric : 2.0 * cfg.offset_a - metric;
}

inline RunTrace run_s1a_group_overopt(const ThresholdConfig& cfg, RngStream rng) {
    cfg.validate_s1a();
    RngStream agents = rng.fork(streams::kAgents);
    RngStream sel = rng.fork(streams::kSelection);

    RunTrace trace;
    trace.scenario = "s1a";
    trace.pressure = cfg.policy ? cfg.policy->n : 1;

    std::vector<double> alpha(static_cast<std::size_t>(cfg.agent_count), 0.0);
    double metric = 0.0;
    trace.add_step(0, kSystemAgent, metric, s1a_goal_of_metric(cfg, metric));

    double reversal_step = -1.0;
    for (int step = 1; step <= cfg.max_steps; ++step) {
        for (auto& a : alpha) {
            if (a >= cfg.alpha_max) continue;
            const bool inc = detail::take_increment(cfg.policy, metric, cfg.step_delta, agents, sel);
            if (inc) a = std::min(a + cfg.step_delta, cfg.alpha_max);
        }
        metric = 0.0;
        for (double a : alpha) metric += a;
        const double goal = s1a_goal_of_metric(cfg, metric);
        trace.add_step(step, kSystemAgent, metric, goal);
        if (reversal_step < 0.0 && metric > cfg.offset_a) reversal_step = step;
    }

    trace.summary.push_back({kSystemAgent, metric, s1a_goal_of_metric(cfg, metric)});
    trace.extras["reversal_step"] = reversal_step;
    return trace;
}

/// Catastrophic threshold: per-agent metrics x_i always improve, the
/// goal is a + sum(x) up to T inclusive and a - sum(x) beyond. The
/// boundary sum == T belongs to the benign branch.
inline double s1b_goal_of_total(const ThresholdConfig& cfg, double total) {
    return total <= cfg.threshold ? cfg.offset_a + total : cfg.offset_a - total;
}

inline RunTrace run_s1b_catastrophic_threshold(const ThresholdConfig& cfg, RngStream rng) {
    cfg.validate_s1b();
    RngStream agents = rng.fork(streams::kAgents);
    RngStream sel = rng.fork(streams::kSelection);

    RunTrace trace;
    trace.scenario = "s1b";
    trace.pressure = cfg.policy ? cfg.policy->n : 1;

    std::vector<double> x(static_cast<std::size_t>(cfg.agent_count), 0.0);
    double total = 0.0;
    trace.add_step(0, kSystemAgent, total, s1b_goal_of_total(cfg, total));

    double crossing_step = -1.0;
    for (int step = 1; step <= cfg.max_steps; ++step) {
        for (auto& xi : x) {
            const bool inc = detail::take_increment(cfg.policy, xi, cfg.step_delta, agents, sel);
            if (inc) xi += cfg.step_delta;
        }
        total = 0.0;
        for (double xi : x) total += xi;
        trace.add_step(step, kSystemAgent, total, s1b_goal_of_total(cfg, total));
        if (crossing_step < 0.0 && total > cfg.threshold) crossing_step = step;
    }

    trace.summary.push_back({kSystemAgent, total, s1b_goal_of_total(cfg, total)});
    trace.extras["crossing_step"] = crossing_step;
    return trace;
}

} // namespace goodhart
