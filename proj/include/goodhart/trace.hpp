#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "goodhart/learners.hpp"

namespace goodhart {

/// Row id for aggregate (whole-system) per-step records in scenarios
/// where the interesting metric is collective.
inline constexpr int kSystemAgent = -1;

struct StepRecord {
    std::int64_t step = 0;
    int agent_id = 0;
    double metric_value = 0.0;
    double goal_value = 0.0;
};

struct AgentSummary {
    int agent_id = 0;
    double terminal_metric = 0.0;
    double terminal_goal = 0.0;
};

/// Time-indexed record of one replicate: per-step metric/goal values,
/// the provenance-tagged event log (where a scenario has one), per-agent
/// terminal values, and scenario-specific summary scalars that flow into
/// the summary JSONL verbatim.
struct RunTrace {
    std::string scenario;
    std::int64_t replicate = 0;
    int pressure = 1;
    std::vector<StepRecord> steps;
    std::vector<EventRecord> events;
    std::vector<AgentSummary> summary;
    std::map<std::string, double> extras;

    void add_step(std::int64_t step, int agent_id, double metric_value, double goal_value) {
        steps.push_back({step, agent_id, metric_value, goal_value});
    }

    const AgentSummary& primary_summary() const {
        if (summary.empty()) throw std::logic_error("trace has no summary");
        return summary.front();
    }

    double terminal_metric() const { return primary_summary().terminal_metric; }
    double terminal_goal() const { return primary_summary().terminal_goal; }

    double extra(const std::string& key) const {
        const auto it = extras.find(key);
        if (it == extras.end()) throw std::out_of_range("trace extra missing: " + key);
        return it->second;
    }

    /// Steps strictly increasing per agent and every value finite.
    void validate() const {
        std::map<int, std::int64_t> last;
        for (const auto& s : steps) {
            const auto it = last.find(s.agent_id);
            if (it != last.end() && s.step <= it->second) {
                throw std::logic_error("trace steps not strictly increasing for agent");
            }
            last[s.agent_id] = s.step;
            if (!std::isfinite(s.metric_value) || !std::isfinite(s.goal_value)) {
                throw std::logic_error("trace contains non-finite value");
            }
        }
        for (const auto& [key, v] : extras) {
            if (!std::isfinite(v)) throw std::logic_error("trace extra non-finite: " + key);
        }
    }
};

} // namespace goodhart
