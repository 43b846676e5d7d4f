#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace rfml::tgda {

// Per-feature law: a point mass of weight p at s, plus (1 - p) times a
// Gaussian N(loc, scale^2) truncated to (s, inf). With p below the spike
// threshold the feature is treated as a plain Gaussian; p = 1 with scale = 0
// is a pure point mass.
struct FeatureDist {
    double s = 0.0;
    double p = 0.0;
    double loc = 0.0;
    double scale = 1.0;

    // Standardized truncation point (s - loc) / scale.
    double a() const noexcept { return (s - loc) / scale; }
    bool operator==(const FeatureDist&) const = default;
};

// Throws InvalidArgument when p is outside [0, 1], a field is non-finite,
// scale < 0, or scale == 0 with p < 1.
void validate(const FeatureDist& d);

struct FitOptions {
    std::size_t min_samples = 100;
    double spike_rel_tol = 1e-9;      // spike half-width = tol * max(1, |s|)
    double spike_threshold = 0.01;    // minimum mass that counts as a spike
    double degenerate_threshold = 0.995;
    std::size_t max_iterations = 200;
    double tolerance = 1e-8;          // EM stops when |d loc| and |d scale| fall below this
};

struct ScoringOptions {
    double spike_rel_tol = 1e-9;
    double spike_threshold = 0.01;
    double log_floor = -690.77552789821368;  // ln(1e-300)
    bool operator==(const ScoringOptions&) const = default;
};

inline double spike_halfwidth(double s, double rel_tol) noexcept { return rel_tol * std::max(1.0, std::abs(s)); }

struct FitReport {
    FeatureDist dist;
    // Spiked feature whose non-spike samples have zero variance; stored as a point mass.
    bool degenerate_fallback = false;
    std::size_t iterations = 0;
    // Censored log-likelihood after initialization and after each EM step
    // (filled only when requested).
    std::vector<double> log_likelihood_trace;
};

// s = min(samples); p = fraction within the spike half-width of s.
// p >= degenerate_threshold: point mass. p < spike_threshold: Gaussian MLE
// (mean, population std). Otherwise: Gaussian left-censored at s, fit by EM.
FeatureDist fit_feature(std::span<const double> samples, const FitOptions& options = {});
FitReport fit_feature_report(std::span<const double> samples, const FitOptions& options = {},
                             bool record_trace = false);

// Log-likelihood of a Gaussian left-censored at s: `above` holds the values
// strictly above s, `censored` counts those at or below it.
double censored_log_likelihood(std::span<const double> above, std::size_t censored, double s, double loc,
                               double scale);

// Log-density of x under `dist`, clamped below at options.log_floor.
//   p >= threshold, |x - s| <= halfwidth : ln p
//   p >= threshold, x > s + halfwidth    : ln(1 - p) + ln TruncN(x; a, loc, scale)
//   p >= threshold, x < s - halfwidth    : floor
//   p <  threshold                       : ln N(x; loc, scale)
double log_lik_feature(const FeatureDist& dist, double x, const ScoringOptions& options = {});

// ln of the truncated normal density on (s, inf): phi(z) / (scale * (1 - Phi(a))).
double log_trunc_normal_pdf(double x, double s, double loc, double scale) noexcept;

}  // namespace rfml::tgda
