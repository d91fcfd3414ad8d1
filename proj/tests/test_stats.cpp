#include <doctest.h>

#include <boost/math/distributions/students_t.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <limits>
#include <random>

#include "coauth/error.hpp"
#include "coauth/stats.hpp"
#include "oracle.hpp"

using namespace coauth;

TEST_SUITE("stats") {

TEST_CASE("incomplete beta against frozen values") {
    CHECK(stats::incomplete_beta(0.5, 5, 0.2) == doctest::Approx(0.8550723945959195).epsilon(1e-12));
    CHECK(stats::incomplete_beta(2, 3, 0.4) == doctest::Approx(0.5248).epsilon(1e-12));
    CHECK(stats::incomplete_beta(10, 0.5, 0.9) == doctest::Approx(0.15164090963470994).epsilon(1e-12));
    CHECK(stats::incomplete_beta(3, 4, 0.0) == 0.0);
    CHECK(stats::incomplete_beta(3, 4, 1.0) == 1.0);
}

TEST_CASE("student t against frozen values") {
    struct Row { double t, df, cdf, p; };
    const Row rows[] = {
        {2.0, 5, 0.9490302605850709, 0.10193947882985828},
        {-1.5, 3, 0.11529193262241141, 0.23058386524482283},
        {0.3, 1, 0.5927735790777423, 0.8144528418445154},
        {10, 20, 0.9999999984181092, 3.163781758714393e-09},
        {3.5, 100, 0.9996517861413219, 0.0006964277173562679},
        {0, 7, 0.5, 1.0},
    };
    for (const auto& r : rows) {
        CAPTURE(r.t);
        CAPTURE(r.df);
        CHECK(stats::student_t_cdf(r.t, r.df) == doctest::Approx(r.cdf).epsilon(1e-10));
        CHECK(stats::student_t_two_tailed(r.t, r.df) == doctest::Approx(r.p).epsilon(1e-9));
    }
    CHECK(stats::student_t_two_tailed(std::numeric_limits<double>::infinity(), 4) == 0.0);
}

TEST_CASE("incomplete beta and t tails agree with boost over a grid") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> ab(0.2, 60.0), xs(0.0, 1.0), ts(-12.0, 12.0);
    for (int i = 0; i < 2000; ++i) {
        const double a = ab(rng), b = ab(rng), x = xs(rng);
        CHECK(stats::incomplete_beta(a, b, x) == doctest::Approx(boost::math::ibeta(a, b, x)).epsilon(1e-9).scale(1e-12));
    }
    for (int df = 1; df <= 200; df += 3) {
        const boost::math::students_t dist(df);
        for (int i = 0; i < 20; ++i) {
            const double t = ts(rng);
            const double ref = 2 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
            CHECK(stats::student_t_two_tailed(t, df) == doctest::Approx(ref).epsilon(1e-9).scale(1e-14));
        }
    }
}

TEST_CASE("pearson matches the one-pass formula and frozen value") {
    const std::vector<double> p{1, 2, 1, 1}, c{1, 3, 2, 2};
    CHECK(stats::pearson(p, c) == doctest::Approx(0.816496580927726).epsilon(1e-14));
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(0, 20);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<double> x(2 + trial % 40), y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            x[i] = d(rng);
            y[i] = d(rng) + 0.5 * x[i];
        }
        const double ref = oracle::pearson_textbook(x, y);
        if (std::isnan(ref)) continue;
        CHECK(stats::pearson(x, y) == doctest::Approx(ref).epsilon(1e-10));
    }
    const std::vector<double> flat{2, 2, 2};
    CHECK(std::isnan(stats::pearson(flat, std::vector<double>{1, 2, 3})));
}

TEST_CASE("ols on exact and noisy data") {
    const std::vector<double> x{1, 2, 3, 4, 5};
    const std::vector<double> y{3, 5, 7, 9, 11};
    const auto f = stats::ols(x, y);
    CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f.intercept == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f.se_slope == doctest::Approx(0.0).scale(1e-12));

    // hand-checked: x = 1..4, y = 1,3,2,4 gives slope 0.8, intercept 0.5, SSE 1.8
    const auto g = stats::ols(std::vector<double>{1, 2, 3, 4}, std::vector<double>{1, 3, 2, 4});
    CHECK(g.slope == doctest::Approx(0.8));
    CHECK(g.intercept == doctest::Approx(0.5));
    CHECK(g.sse == doctest::Approx(1.8));
    CHECK(g.r_squared == doctest::Approx(0.64));
    CHECK(g.se_slope == doctest::Approx(std::sqrt(0.9 / 5.0)));
    CHECK(g.se_intercept == doctest::Approx(std::sqrt(0.9 * (0.25 + 6.25 / 5.0))));
}

TEST_CASE("ols rejects degenerate input") {
    CHECK_THROWS_AS(stats::ols(std::vector<double>{1, 2}, std::vector<double>{1, 2}), DegenerateFit);
    CHECK_THROWS_AS(stats::ols(std::vector<double>{3, 3, 3}, std::vector<double>{1, 2, 3}), DegenerateFit);
}

}
