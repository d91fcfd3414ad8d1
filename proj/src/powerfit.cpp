#include "coauth/powerfit.hpp"

#include <cmath>
#include <map>

#include "coauth/error.hpp"
#include "coauth/stats.hpp"

namespace coauth {

FrequencyDistribution frequency_distribution(const std::vector<std::size_t>& degrees, bool include_zero) {
    std::map<std::size_t, std::size_t> hist;
    for (std::size_t d : degrees)
        if (d > 0 || include_zero) ++hist[d];
    FrequencyDistribution out;
    out.reserve(hist.size());
    for (const auto& [deg, freq] : hist) out.push_back({deg, freq});
    return out;
}

double PowerLawFit::predict(double degree) const { return c * std::pow(degree, phi); }

PowerLawFit fit_power_law(const FrequencyDistribution& fd, double alpha) {
    std::vector<double> deg, freq;
    for (const auto& p : fd) {
        deg.push_back(static_cast<double>(p.degree));
        freq.push_back(static_cast<double>(p.frequency));
    }
    return fit_power_law(deg, freq, alpha);
}

PowerLawFit fit_power_law(std::span<const double> degrees, std::span<const double> values, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in (0, 1)");
    if (degrees.size() != values.size()) throw Error("power-law fit: length mismatch");
    std::vector<double> x, y;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (!(degrees[i] > 0.0 && values[i] > 0.0)) continue;
        x.push_back(std::log10(degrees[i]));
        y.push_back(std::log10(values[i]));
    }
    if (x.size() < 3)
        throw DegenerateFit("power-law fit needs at least 3 nonzero degrees, got " + std::to_string(x.size()));

    const stats::LinearFit lf = stats::ols(x, y);
    const double df = static_cast<double>(lf.n - 2);

    const auto t_of = [](double estimate, double se) {
        if (se > 0.0) return estimate / se;
        if (estimate == 0.0) return 0.0;
        return std::copysign(INFINITY, estimate);
    };

    PowerLawFit f;
    f.n_points = lf.n;
    f.alpha = alpha;
    f.phi = lf.slope;
    f.c = std::pow(10.0, lf.intercept);
    f.r_squared = lf.r_squared;
    f.se_phi = lf.se_slope;
    f.se_log_c = lf.se_intercept;
    f.t_phi = t_of(f.phi, f.se_phi);
    f.t_log_c = t_of(lf.intercept, f.se_log_c);
    f.p_phi = stats::student_t_two_tailed(f.t_phi, df);
    f.p_log_c = stats::student_t_two_tailed(f.t_log_c, df);
    f.phi_significant = f.p_phi < alpha;
    f.log_c_significant = f.p_log_c < alpha;
    return f;
}

double lotka_comparison(const PowerLawFit& fit) { return std::fabs(fit.phi - kLotkaExponent); }

}  // namespace coauth
