#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace coauth {

struct FrequencyPoint {
    std::size_t degree = 0;
    std::size_t frequency = 0;
    bool operator==(const FrequencyPoint&) const = default;
};

/// rho(Delta): strictly increasing degrees, no zero frequencies. Degree 0
/// only appears when requested with include_zero.
using FrequencyDistribution = std::vector<FrequencyPoint>;

FrequencyDistribution frequency_distribution(const std::vector<std::size_t>& degrees,
                                             bool include_zero = false);

/// y = c * Delta^phi fitted by OLS on (log10 Delta, log10 y).
struct PowerLawFit {
    double c = 0.0;
    double phi = 0.0;
    double r_squared = 0.0;
    double se_log_c = 0.0;
    double se_phi = 0.0;
    double t_log_c = 0.0;
    double t_phi = 0.0;
    double p_log_c = 0.0;
    double p_phi = 0.0;
    double alpha = 0.01;
    bool log_c_significant = false;
    bool phi_significant = false;
    std::size_t n_points = 0;

    double predict(double degree) const;
};

inline constexpr double kDefaultAlpha = 0.01;
inline constexpr double kLotkaExponent = -2.0;

/// Zero-degree bins are dropped before fitting. Throws DegenerateFit with
/// fewer than 3 usable points or a single distinct degree.
PowerLawFit fit_power_law(const FrequencyDistribution& fd, double alpha = kDefaultAlpha);

/// Same fit on arbitrary positive (degree, value) pairs; nonpositive pairs
/// are skipped.
PowerLawFit fit_power_law(std::span<const double> degrees, std::span<const double> values,
                          double alpha = kDefaultAlpha);

/// |phi - (-2)|
double lotka_comparison(const PowerLawFit& fit);

}  // namespace coauth
