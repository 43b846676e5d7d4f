#pragma once

#include <cmath>
#include <numbers>

namespace rfml::tgda {

inline constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // ln(sqrt(2 pi))

inline double log_norm_pdf(double z) noexcept { return -0.5 * z * z - kLogSqrt2Pi; }

inline double norm_pdf(double z) noexcept { return std::exp(log_norm_pdf(z)); }

// Standard normal CDF.
inline double norm_cdf(double z) noexcept { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

// ln Phi(z), accurate in the far lower tail where Phi underflows.
inline double log_norm_cdf(double z) noexcept
{
    if (z > -30.0) {
        return std::log(norm_cdf(z));
    }
    // Mills-ratio series: Phi(z) ~ phi(z)/|z| * (1 - 1/z^2 + 3/z^4 - 15/z^6)
    const double z2 = z * z;
    const double series = 1.0 - 1.0 / z2 + 3.0 / (z2 * z2) - 15.0 / (z2 * z2 * z2);
    return log_norm_pdf(z) - std::log(-z) + std::log(series);
}

// ln(1 - Phi(z)).
inline double log_norm_sf(double z) noexcept { return log_norm_cdf(-z); }

}  // namespace rfml::tgda
