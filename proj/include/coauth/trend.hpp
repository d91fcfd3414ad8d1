#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coauth/corpus.hpp"

namespace coauth {

struct TrendFit {
    double slope = 0.0;  // count per year
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<std::pair<int, double>> extrapolation;
    // Fit centre; predictions are evaluated relative to it.
    double mean_year = 0.0;
    double mean_count = 0.0;

    double predict(int year) const { return mean_count + slope * (year - mean_year); }
};

/// OLS of cumulative count on year, extrapolated `horizon` years past the
/// last observation. Years must be strictly increasing; needs >= 3 points.
TrendFit fit_trend(const std::vector<std::pair<int, double>>& series, std::size_t horizon);

/// Cumulative series over years that have at least one paper.
std::vector<std::pair<int, double>> cumulative_papers_series(const std::vector<YearRow>& rows);
std::vector<std::pair<int, double>> cumulative_authors_series(const std::vector<YearRow>& rows);

}  // namespace coauth
