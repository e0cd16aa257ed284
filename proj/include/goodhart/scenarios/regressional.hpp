#pragma once

#include "goodhart/errors.hpp"
#include "goodhart/selection.hpp"
#include "goodhart/scenarios/streams.hpp"
#include "goodhart/trace.hpp"

namespace goodhart {

/// Proxy-vs-goal selection under noise: goal ~ N(0,1), metric = goal +
/// N(0, sigma^2). With sigma = 0 the proxy is perfect and selection bias
/// is identically zero.
struct RegressionalConfig {
    double sigma = 1.0;

    void validate() const {
        if (!(sigma >= 0.0)) throw ConfigError("s0: sigma must be >= 0");
    }
};

/// Samples pressure.n candidates, selects by the operator on the metric
/// alone, and records the selected (metric, goal) pair. The recorded
/// bias metric - goal grows with pressure for sigma > 0.
inline RunTrace run_s0_regressional(const RegressionalConfig& cfg,
                                    const SelectionOperator& pressure, RngStream rng) {
    cfg.validate();
    pressure.validate();
    RngStream env = rng.fork(streams::kEnvironment);
    RngStream sel = rng.fork(streams::kSelection);

    const ProxyDistribution gen{0.0, 1.0, cfg.sigma};
    const auto candidates = sample_candidates(gen, pressure.n, env);
    const ScoredCandidate& chosen = select(candidates, pressure, sel);

    RunTrace trace;
    trace.scenario = "s0";
    trace.pressure = pressure.n;
    trace.add_step(0, 0, chosen.metric_score, chosen.hidden_goal);
    trace.summary.push_back({0, chosen.metric_score, chosen.hidden_goal});
    trace.extras["bias"] = chosen.metric_score - chosen.hidden_goal;
    return trace;
}

} // namespace goodhart
