#include <catch2/catch_amalgamated.hpp>

#include "qjensen/hyperbolicity.hpp"
#include "qjensen/specfun.hpp"
#include "qjensen/series.hpp"

#include <random>

using namespace qjensen;

namespace {
RatPoly from_roots(const std::vector<long>& roots) {
    RatPoly p = RatPoly{{Rat(1)}};
    for (long r : roots) p = p * RatPoly{{Rat(-r), Rat(1)}};
    return p;
}
} // namespace

TEST_CASE("power sums by Newton identities", "[hyper]") {
    RatPoly p{{Rat(2), Rat(-3), Rat(1)}}; // roots 1, 2
    auto S = power_sums(p, 3);
    REQUIRE(S[0] == Rat(2));
    REQUIRE(S[1] == Rat(3));
    REQUIRE(S[2] == Rat(5));
    REQUIRE(S[3] == Rat(9));

    // X^d: all roots zero
    for (long d = 1; d <= 5; ++d) {
        std::vector<Rat> c(static_cast<std::size_t>(d) + 1, Rat(0));
        c.back() = 1;
        auto Sx = power_sums(RatPoly{c}, 4);
        REQUIRE(Sx[0] == Rat(d));
        for (int k = 1; k <= 4; ++k) REQUIRE(Sx[static_cast<std::size_t>(k)] == Rat(0));
    }

    RatPoly q{{Rat(1), Rat(4), Rat(3)}}; // roots -1, -1/3
    auto Sq = power_sums(q, 2);
    REQUIRE(Sq[1] == Rat(-4, 3));
    REQUIRE(Sq[2] == Rat(10, 9));

    REQUIRE_THROWS_AS(power_sums(RatPoly{}, 2), std::domain_error);
    REQUIRE_THROWS_AS(power_sums(RatPoly{{Rat(3)}}, 2), std::domain_error);
}

TEST_CASE("power sums agree with explicit roots", "[hyper]") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> roots;
        long deg = 2 + static_cast<long>(rng() % 5);
        for (long i = 0; i < deg; ++i) roots.push_back(static_cast<long>(rng() % 9) - 4);
        auto S = power_sums(from_roots(roots), 2 * deg - 2);
        for (long k = 0; k <= 2 * deg - 2; ++k) {
            Rat direct(0);
            for (long r : roots) direct += pow_int(Rat(r), k);
            REQUIRE(S[static_cast<std::size_t>(k)] == direct);
        }
    }
}

TEST_CASE("hankel minors", "[hyper]") {
    auto rep = hankel_minors(RatPoly{{Rat(2), Rat(-3), Rat(1)}});
    REQUIRE(rep.deltas == std::vector<Rat>{Rat(2), Rat(1)});
    REQUIRE(rep.hyperbolic);
    REQUIRE(rep.delta_signs() == "++");

    auto bad = hankel_minors(RatPoly{{Rat(1), Rat(0), Rat(1)}}); // X^2 + 1
    REQUIRE(bad.deltas[1] == Rat(-4));
    REQUIRE_FALSE(bad.hyperbolic);

    auto dbl = hankel_minors(RatPoly{{Rat(0), Rat(0), Rat(1)}}); // X^2
    REQUIRE(dbl.deltas == std::vector<Rat>{Rat(2), Rat(0)});
    REQUIRE(dbl.hyperbolic);
    REQUIRE(dbl.delta_signs() == "+0");
}

TEST_CASE("sturm certification", "[hyper]") {
    REQUIRE(is_hyperbolic(IntPoly{{Int(1), Int(4), Int(3)}}));
    REQUIRE(is_hyperbolic(IntPoly{{Int(0), Int(-6), Int(0), Int(1)}})); // X^3 - 6X
    REQUIRE_FALSE(is_hyperbolic(IntPoly{{Int(1), Int(1), Int(1)}}));

    auto cert = sturm_is_hyperbolic(IntPoly{{Int(0), Int(-6), Int(0), Int(1)}});
    REQUIRE(cert.squarefree_degree == 3);
    REQUIRE(cert.real_root_count == 3);

    // repeated real roots are hyperbolic
    REQUIRE(is_hyperbolic(RatPoly{{Rat(0), Rat(0), Rat(1)}}));
    REQUIRE(is_hyperbolic(RatPoly{{Rat(1), Rat(2), Rat(1)}})); // (X+1)^2
    REQUIRE_THROWS_AS(sturm_is_hyperbolic(RatPoly{}), std::domain_error);
}

TEST_CASE("scaling invariance", "[hyper]") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rat> c;
        long deg = 1 + static_cast<long>(rng() % 6);
        for (long i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 19) - 9);
        RatPoly p{c};
        if (p.degree() < 1) continue;
        Rat scale(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 5) + 1);
        REQUIRE(is_hyperbolic(p) == is_hyperbolic(scale * p));
        REQUIRE(is_hyperbolic(p) == is_hyperbolic(Rat(-1) * p));
    }
}

TEST_CASE("sturm and hankel criteria agree", "[hyper]") {
    std::mt19937 rng(20240811);
    long checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<Int> c;
        long deg = 1 + static_cast<long>(rng() % 8);
        for (long i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 19) - 9);
        IntPoly p{std::move(c)};
        if (p.degree() < 1) continue;
        if (trial % 3 == 0) p = p * p; // include non-squarefree inputs
        if (trial % 5 == 0) p = p * IntPoly{{Int(-1), Int(1)}};
        REQUIRE(sturm_is_hyperbolic(p).hyperbolic == hankel_minors(p).hyperbolic);
        ++checked;
    }
    REQUIRE(checked > 1500);
}

TEST_CASE("degree-2 hyperbolicity is log-concavity", "[hyper]") {
    auto p = coloured_partition_series(1, 1, 60);
    for (long n = 0; n + 2 <= 60; ++n) {
        bool hyp = sturm_is_hyperbolic(jensen_polynomial(p, 2, n)).hyperbolic;
        bool lc = p.coeffs[static_cast<std::size_t>(n + 1)] * p.coeffs[static_cast<std::size_t>(n + 1)] >=
                  p.coeffs[static_cast<std::size_t>(n)] * p.coeffs[static_cast<std::size_t>(n + 2)];
        REQUIRE(hyp == lc);
    }
}

TEST_CASE("turan scan on partitions, d = 2", "[hyper]") {
    auto p = coloured_partition_series(1, 1, 44);
    auto scan = turan_scan(p, 2, 1, 40);
    std::vector<long> expect;
    for (long n = 2; n <= 24; n += 2) expect.push_back(n); // J^{2,n} fails iff p(n+1)^2 < p(n)p(n+2)
    REQUIRE(scan.failures == expect);
    REQUIRE(scan.last_failure.has_value());
    REQUIRE(*scan.last_failure == 24);
}

TEST_CASE("turan scan d = 1 never fails", "[hyper]") {
    auto s = shifted_pochhammer_series(1, 2, 101);
    auto scan = turan_scan(s, 1, 1, 100);
    REQUIRE(scan.failures.empty());
    REQUIRE_FALSE(scan.last_failure.has_value());
}

TEST_CASE("log-concavity check", "[hyper]") {
    CoeffSeries constant;
    for (int i = 0; i < 10; ++i) constant.coeffs.emplace_back(7);
    REQUIRE(log_concavity_check(constant, 1, 8).empty());

    CoeffSeries geo;
    Int v = 1;
    for (int i = 0; i < 20; ++i) {
        geo.coeffs.push_back(v);
        v *= 2;
    }
    REQUIRE(log_concavity_check(geo, 1, 18).empty());

    auto p = coloured_partition_series(1, 1, 26);
    std::vector<long> expect;
    for (long n = 3; n <= 25; n += 2) expect.push_back(n);
    REQUIRE(log_concavity_check(p, 2, 25) == expect);
}
