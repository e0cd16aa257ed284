#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "goodhart/errors.hpp"
#include "goodhart/rng.hpp"
#include "goodhart/stats.hpp"

namespace goodhart {

/// Who put an observation into the stream. Victims never see this field:
/// every learner API below takes payloads, labels, or rewards directly,
/// so provenance exists only for after-the-fact analysis.
enum class Provenance { Honest, Injected, Hidden };

struct EventRecord {
    std::int64_t time = 0;
    std::vector<double> payload;
    std::optional<int> label; // binary when present
    Provenance provenance = Provenance::Honest;
};

/// Per-arm running reward estimates with greedy choice. Requires a
/// warm-up observation on every arm before choose().
class ArmEstimator {
  public:
    explicit ArmEstimator(int arm_count) {
        if (arm_count < 2) throw std::invalid_argument("ArmEstimator: need at least 2 arms");
        arms_.resize(static_cast<std::size_t>(arm_count));
    }

    void update(int arm, double reward) {
        if (arm < 0 || arm >= arm_count()) throw std::invalid_argument("ArmEstimator: arm out of range");
        if (!std::isfinite(reward)) throw std::invalid_argument("ArmEstimator: reward must be finite");
        arms_[static_cast<std::size_t>(arm)].add(reward);
    }

    /// Argmax of estimated means, ties to the lowest index.
    int choose() const {
        int best = -1;
        double best_mean = 0.0;
        for (int a = 0; a < arm_count(); ++a) {
            const auto& st = arms_[static_cast<std::size_t>(a)];
            if (st.count() == 0) throw std::invalid_argument("ArmEstimator: unobserved arm; warm-up incomplete");
            if (best < 0 || st.mean() > best_mean) {
                best = a;
                best_mean = st.mean();
            }
        }
        return best;
    }

    int arm_count() const noexcept { return static_cast<int>(arms_.size()); }
    std::int64_t count(int arm) const { return arms_.at(static_cast<std::size_t>(arm)).count(); }
    double mean_reward(int arm) const { return arms_.at(static_cast<std::size_t>(arm)).mean(); }

  private:
    std::vector<RunningMean> arms_;
};

/// Noiseless bisection estimator for a threshold in [lo, hi]. An honest
/// answer sequence keeps the true threshold inside the interval and
/// halves the width per step; adversarial answers may evict it, which
/// the type deliberately permits.
class ThresholdLearner {
  public:
    ThresholdLearner(double lo, double hi, double resolution = 1e-12)
        : lo_(lo), hi_(hi), resolution_(resolution) {
        if (!(lo <= hi)) throw std::invalid_argument("ThresholdLearner: lo must be <= hi");
        if (resolution < 0.0) throw std::invalid_argument("ThresholdLearner: resolution must be >= 0");
    }

    /// Maximum-uncertainty query: the interval midpoint.
    double query() {
        if (hi_ - lo_ < resolution_) throw std::invalid_argument("ThresholdLearner: degenerate interval");
        ++query_count_;
        return midpoint();
    }

    /// answer == 1 means "the threshold lies below the query".
    void update(double query, int answer) {
        if (query < lo_ || query > hi_) throw std::invalid_argument("ThresholdLearner: query outside interval");
        if (answer != 0 && answer != 1) throw std::invalid_argument("ThresholdLearner: answer must be 0 or 1");
        if (answer == 1) {
            hi_ = query;
        } else {
            lo_ = query;
        }
    }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    double midpoint() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }
    std::int64_t query_count() const noexcept { return query_count_; }

  private:
    double lo_;
    double hi_;
    double resolution_;
    std::int64_t query_count_ = 0;
};

struct TrainSettings {
    double learning_rate = 0.1;
    int epochs = 20;
    std::uint64_t seed = 0;
};

/// Margin-based linear classifier trained with averaged-perceptron
/// passes: zero init, per-epoch Fisher-Yates shuffles drawn from the
/// seed, an error-correcting update on y*(w.x + b) <= 0, and the average
/// of all iterates as the returned weights. Training is a pure function
/// of (points, settings).
class LinearClassifier {
  public:
    static LinearClassifier train(std::span<const EventRecord> points,
                                  const TrainSettings& settings) {
        if (points.empty()) throw std::invalid_argument("train: empty dataset");
        const std::size_t dim = points.front().payload.size();
        bool saw_pos = false, saw_neg = false;
        for (const auto& p : points) {
            if (!p.label.has_value()) throw std::invalid_argument("train: unlabeled point");
            if (p.payload.size() != dim) throw std::invalid_argument("train: inconsistent dimension");
            for (double v : p.payload) {
                if (!std::isfinite(v)) throw std::invalid_argument("train: non-finite payload");
            }
            (*p.label == 1 ? saw_pos : saw_neg) = true;
        }
        if (!saw_pos || !saw_neg) throw std::invalid_argument("train: single-class dataset");
        if (settings.epochs < 1) throw std::invalid_argument("train: epochs must be >= 1");

        std::vector<double> w(dim, 0.0);
        double b = 0.0;
        std::vector<double> w_avg(dim, 0.0);
        double b_avg = 0.0;
        std::int64_t iterates = 0;

        RngStream shuffle_rng(settings.seed, kShuffleStream);
        std::vector<std::size_t> order(points.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (int epoch = 0; epoch < settings.epochs; ++epoch) {
            for (std::size_t i = order.size() - 1; i > 0; --i) {
                const auto j = static_cast<std::size_t>(shuffle_rng.uniform_below(i + 1));
                std::swap(order[i], order[j]);
            }
            for (std::size_t idx : order) {
                const auto& p = points[idx];
                const double y = *p.label == 1 ? 1.0 : -1.0;
                double s = b;
                for (std::size_t d = 0; d < dim; ++d) s += w[d] * p.payload[d];
                if (y * s <= 0.0) {
                    for (std::size_t d = 0; d < dim; ++d) w[d] += settings.learning_rate * y * p.payload[d];
                    b += settings.learning_rate * y;
                }
                for (std::size_t d = 0; d < dim; ++d) w_avg[d] += w[d];
                b_avg += b;
                ++iterates;
            }
        }

        LinearClassifier out;
        out.weights_.assign(w_avg.begin(), w_avg.end());
        for (double& v : out.weights_) v /= static_cast<double>(iterates);
        out.weights_.push_back(b_avg / static_cast<double>(iterates));
        out.training_log_.assign(points.begin(), points.end());
        return out;
    }

    double score(std::span<const double> x) const {
        if (x.size() + 1 != weights_.size()) throw std::invalid_argument("score: dimension mismatch");
        double s = weights_.back();
        for (std::size_t d = 0; d < x.size(); ++d) s += weights_[d] * x[d];
        return s;
    }

    int predict(std::span<const double> x) const { return score(x) > 0.0 ? 1 : 0; }

    /// Euclidean distance of x to the decision boundary.
    double margin_distance(std::span<const double> x) const {
        double norm_sq = 0.0;
        for (std::size_t d = 0; d + 1 < weights_.size(); ++d) norm_sq += weights_[d] * weights_[d];
        const double norm = std::sqrt(norm_sq);
        if (norm == 0.0) return 0.0;
        return std::abs(score(x)) / norm;
    }

    double accuracy(std::span<const EventRecord> points) const {
        if (points.empty()) throw std::invalid_argument("accuracy: empty dataset");
        std::int64_t hits = 0;
        for (const auto& p : points) {
            if (!p.label.has_value()) throw std::invalid_argument("accuracy: unlabeled point");
            hits += predict(p.payload) == *p.label;
        }
        return static_cast<double>(hits) / static_cast<double>(points.size());
    }

    const std::vector<double>& weights() const noexcept { return weights_; } // d feature weights + bias
    const std::vector<EventRecord>& training_log() const noexcept { return training_log_; }

  private:
    static constexpr std::uint64_t kShuffleStream = 0x5348464C; // "SHFL"

    std::vector<double> weights_;
    std::vector<EventRecord> training_log_;
};

/// Axis-aligned action-space box.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    void validate() const {
        if (lo.size() != hi.size() || lo.empty()) throw ConfigError("box: lo/hi size mismatch");
        for (std::size_t d = 0; d < lo.size(); ++d) {
            if (!(lo[d] <= hi[d])) throw ConfigError("box: lo must be <= hi per coordinate");
        }
    }

    bool contains(std::span<const double> x) const {
        for (std::size_t d = 0; d < lo.size(); ++d) {
            if (x[d] < lo[d] || x[d] > hi[d]) return false;
        }
        return true;
    }

    double clamp(std::size_t d, double v) const { return std::clamp(v, lo[d], hi[d]); }
};

using RewardFn = std::function<double(std::span<const double>)>;

/// Local hill climber: proposes a uniform per-coordinate perturbation of
/// half-width step_size, clipped to the box, and moves iff the supplied
/// reward strictly improves. The reward is passed per step so the same
/// policy can be driven by a tampered and an untampered evaluator.
class HillClimbPolicy {
  public:
    HillClimbPolicy(std::vector<double> start, double step_size, Box box)
        : position_(std::move(start)), step_size_(step_size), box_(std::move(box)) {
        box_.validate();
        if (position_.size() != box_.lo.size()) throw ConfigError("hill climb: start/box dimension mismatch");
        if (!(step_size_ > 0.0)) throw ConfigError("hill climb: step_size must be > 0");
        if (!box_.contains(position_)) throw ConfigError("hill climb: start outside box");
    }

    /// Consumes exactly dim() draws regardless of acceptance.
    void step(const RewardFn& reward, RngStream& rng) {
        std::vector<double> proposal(position_.size());
        for (std::size_t d = 0; d < position_.size(); ++d) {
            proposal[d] = box_.clamp(d, position_[d] + rng.uniform(-step_size_, step_size_));
        }
        if (reward(proposal) > reward(position_)) position_ = std::move(proposal);
    }

    const std::vector<double>& position() const noexcept { return position_; }
    double step_size() const noexcept { return step_size_; }
    const Box& box() const noexcept { return box_; }

  private:
    std::vector<double> position_;
    double step_size_;
    Box box_;
};

} // namespace goodhart
