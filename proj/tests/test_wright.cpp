#include <catch2/catch_amalgamated.hpp>

#include "qjensen/wright.hpp"
#include "qjensen/contour.hpp"
#include "qjensen/series.hpp"
#include "qjensen/io.hpp"

using namespace qjensen;

TEST_CASE("coloured-partition profiles", "[wright]") {
    auto pr = profile_coloured_partitions(1, 1);
    Real pi2_6 = pi_r() * pi_r() / 6;
    REQUIRE(abs(pr.A - pi2_6) < Real("1e-60"));
    REQUIRE(pr.B == Real(1) / 2);
    REQUIRE(pr.K == 1);
    REQUIRE(abs(pr.alphas[0] - 1 / sqrt(2 * pi_r())) < Real("1e-60"));

    auto pr2 = profile_coloured_partitions(2, 1);
    REQUIRE(abs(pr2.A - 2 * pi2_6) < Real("1e-60"));
    REQUIRE(pr2.B == Real(1));

    // A scales like 1/t
    for (long t : {2L, 3L, 5L}) {
        auto prt = profile_coloured_partitions(3, t);
        REQUIRE(abs(prt.A - profile_coloured_partitions(3, 1).A / t) < Real("1e-60"));
        REQUIRE(prt.K == t);
    }
    // kappa from the minor-arc bound at M = 1
    REQUIRE(abs(pr.kappa - (1 - 1 / sqrt(Real(2)))) < Real("1e-60"));
}

TEST_CASE("shifted-pochhammer profiles", "[wright]") {
    auto pr12 = profile_shifted_pochhammer(1, 2);
    REQUIRE(abs(pr12.B) < Real("1e-60"));
    REQUIRE(abs(pr12.alphas[0] - 1 / sqrt(Real(2))) < Real("1e-60"));
    REQUIRE(abs(pr12.A - pi_r() * pi_r() / 12) < Real("1e-60"));

    // B = a/p - 1/2 and alpha_0 = Gamma(a/p) p^{a/p-1/2} / sqrt(2 pi)
    auto pr23 = profile_shifted_pochhammer(2, 3);
    REQUIRE(abs(pr23.B - Real(1) / 6) < Real("1e-60"));
    REQUIRE(abs(pr23.kappa - (1 - 1 / sqrt(Real(2))) / 3) < Real("1e-60"));

    REQUIRE_THROWS_AS(profile_shifted_pochhammer(0, 3), std::invalid_argument);
    REQUIRE_THROWS_AS(profile_shifted_pochhammer(1, 4), std::invalid_argument);
}

TEST_CASE("profile constants match the generating function near q = 1", "[wright]") {
    // Log F(e^{-z}) - A/z - B log z - log alpha_0 = O(z), pinned at two z
    for (auto [a, p] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {2, 3}, {2, 5}, {1, 7}}) {
        auto pr = profile_shifted_pochhammer(a, p);
        auto spec = ProductSpec::shifted(a, p, 0);
        for (const Real& z : {Real(1) / 500, Real(1) / 1000}) {
            Real lg = evaluate_F(spec, Complex(exp(-z), 0)).real();
            Real resid = lg - (pr.A / z + pr.B * log(z) + log(pr.alphas[0]));
            REQUIRE(abs(resid) < 10 * z);
        }
    }
    for (auto [r, t] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}, {3, 2}}) {
        auto pr = profile_coloured_partitions(r, t);
        auto spec = ProductSpec::coloured(r, t, 0);
        for (const Real& z : {Real(1) / 500, Real(1) / 1000}) {
            Real lg = evaluate_F(spec, Complex(exp(-z), 0)).real();
            Real resid = lg - (pr.A / z + pr.B * log(z) + log(pr.alphas[0]));
            REQUIRE(abs(resid) < 10 * z);
        }
    }
}

TEST_CASE("growth model formulas", "[wright]") {
    auto pr = profile_coloured_partitions(1, 1);
    auto g = growth_model(pr);
    Real expect_delta = sqrt(Real(2)) * pow(pr.A, Real(1) / 4) * pow(Real(100), Real(-3) / 4);
    REQUIRE(abs(g.delta(100) - expect_delta) < Real("1e-60"));
    // A(n) -> 0 and delta(n) -> 0
    REQUIRE(g.shift(1000000) < g.shift(100));
    REQUIRE(g.delta(1000000) < Real("1e-3"));
    // n g_1(n) = (-2B-3)/4
    for (long n : {10L, 100L, 1000L})
        REQUIRE(abs(Real(n) * g.g(1, n) - (-2 * pr.B - 3) / 4) < Real("1e-60"));
    // alternating signs in j
    REQUIRE(g.g(1, 50) * g.g(2, 50) < 0);

    auto gc = growth_model_calibrated(pr);
    REQUIRE(abs(gc.delta(100) - expect_delta / (2 * sqrt(Real(2)))) < Real("1e-60"));
    REQUIRE(gc.shift(100) < g.shift(100));
}

TEST_CASE("main-term estimate against exact partition numbers", "[wright]") {
    auto series = coloured_partition_series(1, 1, 100);
    auto pr = profile_coloured_partitions(1, 1);
    auto est = wright_estimate(pr, 100, 1);
    Real exact = log_coeff(series, 100);
    REQUIRE(abs(est.log_value - exact) < Real("0.005") * exact);
    REQUIRE(est.error_exponent == -(Real(1) + pr.B + 1) / 2);

    // totality at small n: series-mode Bessel keeps the estimate finite
    auto small = wright_estimate(pr, 1, 1);
    REQUIRE(boost::math::isfinite(small.log_value));

    REQUIRE_THROWS_AS(wright_estimate(pr, 0, 1), std::domain_error);
    REQUIRE_THROWS_AS(wright_estimate(pr, 10, 2), std::invalid_argument);
}

TEST_CASE("leading term reproduces the classical partition asymptotic", "[wright]") {
    // e^{pi sqrt(2n/3)} / (4 n sqrt(3)) at n = 10^4, within 1%
    auto pr = profile_coloured_partitions(1, 1);
    long n = 10000;
    Real hr = pi_r() * sqrt(Real(2 * n) / 3) - log(4 * Real(n) * sqrt(Real(3)));
    auto est = wright_estimate(pr, n, 1);
    REQUIRE(abs(exp(est.log_value - hr) - 1) < Real("0.01"));
}

TEST_CASE("profile JSON round-trip", "[wright][io]") {
    auto pr = profile_shifted_pochhammer(2, 5);
    pr.alphas.push_back(-pr.alphas[0] / 24);
    auto j = profile_to_json(pr);
    auto back = profile_from_json(j);
    REQUIRE(abs(back.A - pr.A) < Real("1e-60"));
    REQUIRE(abs(back.B - pr.B) < Real("1e-60"));
    REQUIRE(back.K == pr.K);
    REQUIRE(back.alphas.size() == 2);
    REQUIRE(abs(back.alphas[1] - pr.alphas[1]) < Real("1e-60"));
    REQUIRE(abs(back.kappa - pr.kappa) < Real("1e-60"));

    // plain JSON numbers are accepted too
    nlohmann::json plain = {{"A", 1.5}, {"B", 0}, {"K", 2}, {"alphas", {0.25}}, {"kappa", 0.1}, {"M", 1}};
    auto fromplain = profile_from_json(plain);
    REQUIRE(fromplain.K == 2);
}
