#pragma once

#include <cstddef>
#include <span>

namespace coauth::stats {

/// Regularized incomplete beta I_x(a, b), continued fraction (modified Lentz),
/// absolute tolerance 1e-10.
double incomplete_beta(double a, double b, double x);

/// P(T <= t) for Student's t with `df` degrees of freedom.
double student_t_cdf(double t, double df);

/// P(|T| >= |t|).
double student_t_two_tailed(double t, double df);

/// Sample Pearson correlation; NaN when either side has zero variance.
double pearson(std::span<const double> x, std::span<const double> y);

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double se_slope = 0.0;
    double se_intercept = 0.0;
    double sse = 0.0;
    double x_mean = 0.0;
    double y_mean = 0.0;
    std::size_t n = 0;
};

/// Ordinary least squares y = intercept + slope * x. x is centered at its
/// mean internally; intercept is reported in the original coordinates.
/// Throws DegenerateFit for n < 3 or constant x.
LinearFit ols(std::span<const double> x, std::span<const double> y);

}  // namespace coauth::stats
