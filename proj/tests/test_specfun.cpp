#include <catch2/catch_amalgamated.hpp>

#include "qjensen/specfun.hpp"
#include "qjensen/verify.hpp"

using namespace qjensen;

TEST_CASE("bernoulli numbers and polynomials", "[specfun]") {
    REQUIRE(bernoulli_number(0) == Rat(1));
    REQUIRE(bernoulli_number(1) == Rat(-1, 2));
    REQUIRE(bernoulli_number(12) == Rat(-691, 2730));
    REQUIRE(bernoulli_poly(0, Rat(7)) == Rat(1));
    REQUIRE(bernoulli_poly(1, Rat(1)) == Rat(1, 2));
    REQUIRE(bernoulli_poly(2, Rat(0)) == Rat(1, 6));
    // B_n(x+1) - B_n(x) = n x^{n-1}
    for (long n = 1; n <= 8; ++n) {
        Rat x(3, 7);
        REQUIRE(bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) == Rat(n) * pow_int(x, n - 1));
    }
}

TEST_CASE("hurwitz zeta against slow reference sums", "[specfun]") {
    Real pi2_6 = pi_r() * pi_r() / 6;
    REQUIRE(abs(hurwitz_zeta(Real(2), Real(1)) - pi2_6) < Real("1e-40"));
    REQUIRE(abs(hurwitz_zeta(Real(2), Real(1) / 2) - 3 * pi2_6) < Real("1e-40"));
    // direct series with 10^6 terms plus integral tail bound
    for (auto [s, a] : std::vector<std::pair<Real, Real>>{{Real(2), Real(1) / 3}, {Real(3), Real(2)}}) {
        Real direct = 0;
        const long terms = 1000000;
        for (long n = terms - 1; n >= 0; --n) direct += pow(a + n, -s);
        Real tail_low = pow(a + terms, 1 - s) / (s - 1);
        Real v = hurwitz_zeta(s, a);
        REQUIRE(v > direct);
        REQUIRE(v - direct < 2 * tail_low + Real("1e-30"));
        REQUIRE(abs(v - direct - tail_low) < Real("1e-5"));
    }
    REQUIRE_THROWS_AS(hurwitz_zeta(Real(1), Real(1)), std::domain_error);
    REQUIRE_THROWS_AS(hurwitz_zeta(Real(2), Real(0)), std::domain_error);
}

TEST_CASE("digamma values and recurrence", "[specfun]") {
    REQUIRE(abs(digamma_r(Real(1)) + euler_gamma_r()) < Real("1e-40"));
    REQUIRE(abs(digamma_r(Real(1) / 2) + euler_gamma_r() + 2 * log(Real(2))) < Real("1e-40"));
    for (long k = 1; k <= 6; ++k) {
        Real x = Real(k) / 7;
        REQUIRE(abs(digamma_r(x + 1) - digamma_r(x) - 1 / x) < Real("1e-40"));
    }
    // slow reference: psi(x) = -gamma + sum (1/(k+1) - 1/(k+x))
    Real x = Real(3) / 4, ref = -euler_gamma_r();
    for (long k = 0; k < 1000000; ++k) ref += Real(1) / (k + 1) - 1 / (Real(k) + x);
    REQUIRE(abs(digamma_r(x) - ref) < Real("1e-5"));
    REQUIRE_THROWS_AS(digamma_r(Real(0)), std::domain_error);
}

TEST_CASE("log-gamma", "[specfun]") {
    REQUIRE(abs(lgamma_r(Real(1))) < Real("1e-55"));
    REQUIRE(abs(lgamma_r(Real(5)) - log(Real(24))) < Real("1e-55"));
    REQUIRE(abs(gamma_r(Real(1) / 2) - sqrt(pi_r())) < Real("1e-55"));
    // reflection through rgamma: 1/Gamma(-1/2) = -1/(2 sqrt(pi))
    REQUIRE(abs(rgamma_r(Real(-1) / 2) + 1 / (2 * sqrt(pi_r()))) < Real("1e-55"));
    REQUIRE(rgamma_r(Real(-3)) == 0);
}

TEST_CASE("lerch values", "[specfun]") {
    Real pi2_6 = pi_r() * pi_r() / 6;
    REQUIRE(abs(lerch_phi_unit(1, 1).real() - pi2_6) < Real("1e-40"));
    REQUIRE(abs(lerch_phi_unit(2, 1).real() - pi2_6 / 2) < Real("1e-40"));
    // slow alternating reference for z = -1
    Real ref = 0;
    for (long n = 999999; n >= 0; --n) {
        Real term = Real(1) / ((n + 1) * (n + 1));
        ref += (n % 2 == 0) ? term : -term;
    }
    REQUIRE(abs(lerch_phi_unit(2, 1).real() - ref) < Real("1e-5"));
}

TEST_CASE("laurent coefficients of the major-arc kernel", "[specfun]") {
    auto L = laurent_coeffs(1, 1, 4);
    REQUIRE(L.at(-2) == Rat(1));
    REQUIRE(L.at(-1) == Rat(-1, 2));
    REQUIRE(L.at(0) == Rat(1, 12));
    REQUIRE(L.at(1) == Rat(0));
    REQUIRE(L.at(2) == Rat(-1, 720));
    for (auto [a, p] : std::vector<std::pair<long, long>>{{1, 2}, {2, 3}, {4, 5}}) {
        auto Lp = laurent_coeffs(a, p, 2);
        REQUIRE(Lp.at(-2) == Rat(1, p));
        REQUIRE(Lp.at(-1) == Rat(1, 2) - Rat(a, p));
    }
}

TEST_CASE("i_star closed form equals quadrature", "[specfun]") {
    auto r = i_star(1, 2);
    REQUIRE(abs(r.closed_form + log(Real(2)) / 2) < Real("1e-40"));
    REQUIRE(abs(r.closed_form - r.quadrature) < Real("1e-12"));
    REQUIRE_THROWS_AS(i_star(1, 1), std::domain_error);
    REQUIRE_THROWS_AS(i_star(3, 3), std::domain_error);
}

TEST_CASE("em expansion collapses to the Lerch/digamma form for h != p", "[specfun]") {
    long a = 2, p = 3, h = 1;
    Complex z(Real(1) / 100, Real(1) / 400);
    auto em = em_verify_logG(a, p, h, z);
    Complex li2 = unit_root(h * a, p) * lerch_phi_unit(p, h * a);
    Complex collapsed = li2 / (Complex(Real(p), 0) * z) -
                        Complex(Real(1) / 2 - Real(a) / Real(p), 0) *
                            log(Complex(1) - unit_root(h * a, p));
    REQUIRE(abs(em.expansion - collapsed) < Real("1e-20"));
}

TEST_CASE("em verification basics", "[specfun]") {
    // real z on the h = p branch: both sides real
    auto em = em_verify_logG(1, 2, 2, Complex(Real(1) / 100, 0));
    REQUIRE(abs(em.direct.imag()) < Real("1e-30"));
    REQUIRE(abs(em.expansion.imag()) < Real("1e-30"));
    REQUIRE(em.abs_difference < Real(5) / 100);

    REQUIRE_THROWS_AS(em_verify_logG(1, 2, 2, Complex(Real(-1), 0)), std::domain_error);
    REQUIRE_THROWS_AS(em_verify_logG(1, 2, 2, Complex(Real("1e-9"), 0), 1000), precision_error);
}

TEST_CASE("specfun verification suite passes", "[specfun][suite]") {
    auto checks = verify_specfun();
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.pass);
    }
    REQUIRE(all_pass(checks));
}
