#include "coauth/trend.hpp"

#include "coauth/error.hpp"
#include "coauth/stats.hpp"

namespace coauth {

TrendFit fit_trend(const std::vector<std::pair<int, double>>& series, std::size_t horizon) {
    if (series.size() < 3)
        throw DegenerateFit("trend needs at least 3 observed years, got " + std::to_string(series.size()));
    std::vector<double> x, y;
    for (std::size_t i = 0; i < series.size(); ++i) {
        if (i > 0 && series[i].first <= series[i - 1].first)
            throw Error("trend years must be strictly increasing");
        x.push_back(series[i].first);
        y.push_back(series[i].second);
    }
    const stats::LinearFit lf = stats::ols(x, y);
    TrendFit t;
    t.slope = lf.slope;
    t.intercept = lf.intercept;
    t.r_squared = lf.r_squared;
    t.mean_year = lf.x_mean;
    t.mean_count = lf.y_mean;
    const int last = series.back().first;
    for (std::size_t h = 1; h <= horizon; ++h) {
        const int year = last + static_cast<int>(h);
        t.extrapolation.emplace_back(year, t.predict(year));
    }
    return t;
}

std::vector<std::pair<int, double>> cumulative_papers_series(const std::vector<YearRow>& rows) {
    std::vector<std::pair<int, double>> out;
    for (const auto& r : rows)
        if (r.papers > 0) out.emplace_back(r.year, static_cast<double>(r.cumulative_papers));
    return out;
}

std::vector<std::pair<int, double>> cumulative_authors_series(const std::vector<YearRow>& rows) {
    std::vector<std::pair<int, double>> out;
    for (const auto& r : rows)
        if (r.papers > 0) out.emplace_back(r.year, static_cast<double>(r.cumulative_authors));
    return out;
}

}  // namespace coauth
