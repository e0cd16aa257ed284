#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "goodhart/rng.hpp"

namespace goodhart {

/// Neumaier-compensated running mean. Meets a 2^-40 relative-error
/// budget against an exact batch mean for at least 1e6 updates of
/// magnitude up to 1e3.
class RunningMean {
  public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        ++count_;
    }

    std::int64_t count() const noexcept { return count_; }
    double sum() const noexcept { return sum_ + comp_; }
    double mean() const noexcept { return count_ == 0 ? 0.0 : sum() / static_cast<double>(count_); }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
    std::int64_t count_ = 0;
};

inline double mean(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean: empty sample");
    RunningMean m;
    for (double x : xs) m.add(x);
    return m.mean();
}

inline double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("sample_variance: need at least 2 values");
    const double m = mean(xs);
    RunningMean sq;
    for (double x : xs) sq.add((x - m) * (x - m));
    return sq.sum() / static_cast<double>(xs.size() - 1);
}

inline double sample_sd(std::span<const double> xs) { return std::sqrt(sample_variance(xs)); }

/// Pearson correlation; throws when either variable is degenerate.
inline double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("pearson: need at least 2 samples");
    const double mx = mean(xs);
    const double my = mean(ys);
    RunningMean sxy, sxx, syy;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double dx = xs[i] - mx;
        const double dy = ys[i] - my;
        sxy.add(dx * dy);
        sxx.add(dx * dx);
        syy.add(dy * dy);
    }
    const double denom = std::sqrt(sxx.sum()) * std::sqrt(syy.sum());
    if (denom == 0.0) throw std::invalid_argument("pearson: degenerate variance");
    return sxy.sum() / denom;
}

inline double normal_cdf(double z) noexcept {
    return 0.5 * std::erfc(-z * std::numbers::sqrt2 / 2.0);
}

inline constexpr double kZ99 = 2.3263478740408408; // one-sided 99% normal quantile

/// One-sided p for H1: E[diff] > 0, large-sample z on paired samples.
inline double p_mean_positive(std::span<const double> diffs) {
    const double m = mean(diffs);
    const double sd = sample_sd(diffs);
    if (sd == 0.0) return m > 0.0 ? 0.0 : 1.0;
    const double z = m / (sd / std::sqrt(static_cast<double>(diffs.size())));
    return 1.0 - normal_cdf(z);
}

/// One-sided p for H1: mean_b > mean_a from two independent summaries.
inline double p_greater(double mean_a, double sd_a, std::size_t n_a,
                        double mean_b, double sd_b, std::size_t n_b) {
    const double se = std::sqrt(sd_a * sd_a / static_cast<double>(n_a) +
                                sd_b * sd_b / static_cast<double>(n_b));
    if (se == 0.0) return mean_b > mean_a ? 0.0 : 1.0;
    return 1.0 - normal_cdf((mean_b - mean_a) / se);
}

/// Linear-interpolation quantile of an ascending-sorted sample.
inline double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) throw std::invalid_argument("quantile_sorted: empty sample");
    q = std::clamp(q, 0.0, 1.0);
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

inline std::size_t uniform_index(RngStream& rng, std::size_t n) {
    return static_cast<std::size_t>(rng.uniform_below(n));
}

struct BootstrapCi {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double v) const noexcept { return lo <= v && v <= hi; }
};

/// Percentile bootstrap CI for the mean. The interval is widened to the
/// point estimate when a resample quantile falls inside it, so that it
/// always contains the point estimate.
inline BootstrapCi bootstrap_ci_mean(std::span<const double> sample, int resamples,
                                     double confidence, RngStream rng) {
    if (sample.empty()) throw std::invalid_argument("bootstrap_ci_mean: empty sample");
    if (resamples < 2) throw std::invalid_argument("bootstrap_ci_mean: need >= 2 resamples");
    std::vector<double> means;
    means.reserve(static_cast<std::size_t>(resamples));
    for (int b = 0; b < resamples; ++b) {
        RunningMean m;
        for (std::size_t i = 0; i < sample.size(); ++i) {
            m.add(sample[uniform_index(rng, sample.size())]);
        }
        means.push_back(m.mean());
    }
    std::sort(means.begin(), means.end());
    const double alpha = (1.0 - confidence) / 2.0;
    const double point = mean(sample);
    BootstrapCi ci{quantile_sorted(means, alpha), quantile_sorted(means, 1.0 - alpha)};
    ci.lo = std::min(ci.lo, point);
    ci.hi = std::max(ci.hi, point);
    return ci;
}

} // namespace goodhart
