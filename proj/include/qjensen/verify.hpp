#pragma once

#include "qjensen/numeric.hpp"
#include "qjensen/specfun.hpp"
#include "qjensen/series.hpp"
#include "qjensen/wright.hpp"
#include "qjensen/contour.hpp"

#include <string>
#include <vector>
#include <sstream>

namespace qjensen {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

using CheckList = std::vector<CheckResult>;

inline bool all_pass(const CheckList& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace detail {
inline void push(CheckList& out, const std::string& name, bool pass, const Real& measured,
                 const std::string& what = "residual") {
    std::ostringstream os;
    os << what << " = " << measured.str(6, std::ios_base::scientific);
    out.push_back(CheckResult{name, pass, os.str()});
}
} // namespace detail

// identity checks for the special-function layer and the Euler-Maclaurin
// major-arc machinery
inline CheckList verify_specfun() {
    CheckList out;
    const Real pi2_6 = pi_r() * pi_r() / 6;

    {
        Real r = abs(hurwitz_zeta(Real(2), Real(1)) - pi2_6);
        detail::push(out, "hurwitz_zeta(2,1) = pi^2/6", r < Real("1e-25"), r);
    }
    {
        Real r = abs(hurwitz_zeta(Real(2), Real(1) / 2) - 3 * pi2_6);
        detail::push(out, "hurwitz_zeta(2,1/2) = pi^2/2", r < Real("1e-25"), r);
    }
    {
        Real worst = 0;
        for (long k = 1; k <= 8; ++k) {
            Real s = 1 + Real(k) / 2, a = Real(k) / 3 + Real(1) / 7;
            worst = std::max(worst, abs(hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1) - pow(a, -s)));
        }
        detail::push(out, "hurwitz_zeta telescoping", worst < Real("1e-25"), worst);
    }
    {
        Real r = abs(digamma_r(Real(1)) + euler_gamma_r());
        detail::push(out, "digamma(1) = -gamma", r < Real("1e-25"), r);
    }
    {
        Real r = abs(digamma_r(Real(1) / 2) + euler_gamma_r() + 2 * log(Real(2)));
        detail::push(out, "digamma(1/2) = -gamma - 2 log 2", r < Real("1e-25"), r);
    }
    {
        Real worst = 0;
        for (long k = 1; k <= 8; ++k) {
            Real x = Real(k) / 5 + Real(1) / 11;
            worst = std::max(worst, abs(digamma_r(x + 1) - digamma_r(x) - 1 / x));
        }
        detail::push(out, "digamma recurrence", worst < Real("1e-25"), worst);
    }
    {
        bool ok = bernoulli_poly(1, Rat(1)) == Rat(1, 2) && bernoulli_poly(0, Rat(7)) == Rat(1) &&
                  bernoulli_poly(2, Rat(0)) == Rat(1, 6);
        out.push_back(CheckResult{"bernoulli polynomial values", ok, "exact"});
    }
    {
        Real r = abs(lerch_phi_unit(1, 1).real() - pi2_6) + abs(lerch_phi_unit(1, 1).imag());
        detail::push(out, "lerch Phi(1,2,1) = pi^2/6", r < Real("1e-25"), r);
    }
    {
        Real r = abs(lerch_phi_unit(2, 1).real() - pi2_6 / 2) + abs(lerch_phi_unit(2, 1).imag());
        detail::push(out, "lerch Phi(-1,2,1) = pi^2/12", r < Real("1e-25"), r);
    }
    {
        // Re(zeta_p^m Phi(zeta_p^m,2,1)) = pi^2/6 - pi^2 m/p + pi^2 m^2/p^2
        Real worst = 0;
        for (long p : {2, 3, 5, 7})
            for (long m = 1; m < p; ++m) {
                Complex v = unit_root(m, p) * lerch_phi_unit(p, m);
                Real expect = pi2_6 - pi_r() * pi_r() * Real(m) / p +
                              pi_r() * pi_r() * Real(m) * Real(m) / (Real(p) * Real(p));
                worst = std::max(worst, abs(v.real() - expect));
            }
        detail::push(out, "lerch real-part quadratic identity", worst < Real("1e-12"), worst, "max residual");
    }
    {
        // minor-arc dominance: Re(zeta_p^m Phi) < pi^2/6 strictly
        bool ok = true;
        Real margin = 1;
        for (long p : {2, 3, 5, 7})
            for (long m = 1; m < p; ++m) {
                Real re = (unit_root(m, p) * lerch_phi_unit(p, m)).real();
                margin = std::min(margin, pi2_6 - re);
                if (!(re < pi2_6)) ok = false;
            }
        detail::push(out, "lerch real part < pi^2/6", ok, margin, "min margin");
    }
    {
        Real worst = 0;
        for (long p : {3, 5, 7})
            for (long a = 1; a < p; ++a)
                for (long h = 1; h < p; ++h)
                    worst = std::max(worst, abs(digamma_rootofunity_sum(h, a, p) -
                                                digamma_rootofunity_rhs(h, a, p)));
        detail::push(out, "digamma root-of-unity sum = p Log(1-zeta)", worst < Real("1e-12"), worst,
                     "max residual");
    }
    {
        // ha ≡ 0 (mod p): sum equals -p (gamma + log p)
        Real worst = 0;
        for (long p : {3, 5, 7}) {
            Complex v = digamma_rootofunity_sum(p, 1, p);
            worst = std::max(worst, abs(v - Complex(-Real(p) * (euler_gamma_r() + log(Real(p))), 0)));
        }
        detail::push(out, "digamma sum at ha ≡ 0 (mod p)", worst < Real("1e-12"), worst, "max residual");
    }
    {
        Real worst = 0;
        for (long p : {2, 3, 5, 7})
            for (long a = 1; a < p; ++a) {
                auto r = i_star(a, p);
                worst = std::max(worst, abs(r.closed_form - r.quadrature));
            }
        detail::push(out, "i_star closed form vs quadrature", worst < Real("1e-8"), worst, "max |diff|");
    }
    {
        // two-point Richardson fit of d(-2), d(-1) from f itself
        Real worst = 0;
        for (long p : {2, 3, 5, 7})
            for (long a = 1; a < p; ++a) {
                auto f = [&](const Real& x) {
                    return exp(-Real(a) * x) / (x * (1 - exp(-Real(p) * x)));
                };
                Real x = Real("1e-6");
                auto g2 = [&](const Real& u) { return u * u * f(u); };
                Real d2 = 2 * g2(x / 2) - g2(x);
                auto g1 = [&](const Real& u) { return u * (f(u) - Real(1) / (Real(p) * u * u)); };
                Real d1 = 2 * g1(x / 2) - g1(x);
                worst = std::max(worst, abs(d2 - Real(1) / p));
                worst = std::max(worst, abs(d1 - (Real(1) / 2 - Real(a) / p)));
            }
        detail::push(out, "laurent d(-2), d(-1) numeric fit", worst < Real("1e-10"), worst, "max |diff|");
    }
    {
        // difference between the summed double series and the assembled
        // expansion is O(|z|): bounded by 5|z| and halving z halves it
        Real worst_ratio_dev = 0;
        bool bounded = true;
        for (auto [a, p] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {2, 3}, {2, 5}})
            for (long h : {1L, static_cast<long>(p)}) {
                auto e1 = em_verify_logG(a, p, h, Complex(Real("0.01"), 0));
                auto e2 = em_verify_logG(a, p, h, Complex(Real("0.005"), 0));
                if (!(e1.abs_difference < Real("0.05"))) bounded = false;
                Real ratio = e1.abs_difference / e2.abs_difference;
                worst_ratio_dev = std::max(worst_ratio_dev, abs(ratio - 2));
            }
        detail::push(out, "em expansion difference is O(|z|)",
                     bounded && worst_ratio_dev < Real("0.3"), worst_ratio_dev,
                     "max |halving ratio - 2|");
    }
    {
        // major-arc constant: the h = p expansion reads
        //   Log G ~ A/z + I* - (1/2 - a/p) Log(az),
        // so log alpha_0 = I* + (a/p - 1/2) log a; checked with the
        // quadrature evaluation of I*
        Real worst = 0;
        for (auto [a, p] : std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {2, 3}, {2, 5}}) {
            auto pr = profile_shifted_pochhammer(a, p);
            Real assembled = i_star(a, p).quadrature + (Real(a) / p - Real(1) / 2) * log(Real(a));
            worst = std::max(worst, abs(assembled - log(pr.alphas[0])));
        }
        detail::push(out, "em major-arc constant matches profile alpha_0", worst < Real("1e-8"),
                     worst, "max |diff|");
    }
    return out;
}

// single fixed-node trapezoid pass used by the doubling study
inline Real contour_fixed_nodes(const ProductSpec& spec, const Real& lambda, long Kn, long Q) {
    Complex acc(0);
    const Real two_pi = 2 * pi_r();
    for (long j = 0; j < Q; ++j) {
        Real theta = two_pi * Real(j) / Real(Q);
        acc += exp(evaluate_F(spec, exp(Complex(-lambda, theta))) +
                   Complex(Real(Kn) * lambda, -theta * Real(Kn)));
    }
    return acc.real() / Real(Q);
}

// quadrature checks for the Cauchy-integral machinery
inline CheckList verify_contour(const ProductSpec& spec, const WrightProfile& profile, long n_probe) {
    CheckList out;
    const long K = profile.K;
    CoeffSeries exact = expand_product(ProductSpec::parse(spec.canonical(), K * n_probe + K));

    {
        ContourConfig cfg{spec, profile, n_probe, 0};
        auto res = cauchy_coefficient(cfg);
        Real err = abs(res.value - to_real(exact.coeffs[static_cast<std::size_t>(K * n_probe)]));
        detail::push(out, "coefficient recovery at n = " + std::to_string(n_probe),
                     err < Real(1) / 2, err, "|error|");
    }
    {
        ContourConfig cfg{spec, profile, 0, 0};
        auto res = cauchy_coefficient(cfg);
        detail::push(out, "constant term n = 0", res.value == 1, abs(res.value - 1), "|error|");
    }
    {
        ContourConfig cfg{spec, profile, n_probe, 0};
        auto rep = arc_split_report(cfg);
        detail::push(out, "arc additivity", rep.additivity_residual < Real("1e-10"),
                     rep.additivity_residual);
        if (K > 1)
            detail::push(out, "K-fold major-arc symmetry", rep.symmetry_residual < Real("1e-10"),
                         rep.symmetry_residual);
        // exponential suppression of the minor arc as n grows
        long n_small = std::max<long>(n_probe / 4, 2);
        ContourConfig cfg_small{spec, profile, n_small, 0};
        auto rep_small = arc_split_report(cfg_small);
        Complex major_total(0), major_total_small(0);
        for (const auto& m : rep.major) major_total += m;
        for (const auto& m : rep_small.major) major_total_small += m;
        Real ratio_large = abs(rep.minor) / abs(major_total);
        Real ratio_small = abs(rep_small.minor) / abs(major_total_small);
        detail::push(out, "minor/major suppression with n", ratio_large < ratio_small,
                     ratio_large / ratio_small, "ratio(n)/ratio(n/4)");
    }
    {
        // quadrature error shrinks when the node count doubles
        long base = ContourConfig{spec, profile, n_probe, 0}.default_nodes() / 2;
        Real target = to_real(exact.coeffs[static_cast<std::size_t>(K * n_probe)]);
        Real lambda = sqrt(profile.A / (Real(K) * Real(n_probe)));
        Real e1 = abs(contour_fixed_nodes(spec, lambda, K * n_probe, base) - target);
        Real e2 = abs(contour_fixed_nodes(spec, lambda, K * n_probe, 2 * base) - target);
        detail::push(out, "node doubling reduces error", e2 <= e1, e2 / std::max(e1, Real("1e-60")),
                     "err(2Q)/err(Q)");
    }
    {
        // empirical minor-arc bound: Re Log F <= (A - kappa)/lambda + slack
        Real lambda = sqrt(profile.A / (Real(K) * Real(n_probe)));
        Real bound = (profile.A - profile.kappa) / lambda + 1;
        Real worst = -1000;
        const long samples = 512;
        Real half_width = lambda * profile.M;
        for (long i = 0; i < samples; ++i) {
            Real theta = 2 * pi_r() * Real(i) / Real(samples);
            Real pos = theta * Real(K) / (2 * pi_r());
            long h = static_cast<long>(floor(pos + Real(1) / 2).convert_to<double>());
            if (abs(theta - 2 * pi_r() * Real(h) / Real(K)) <= half_width) continue;
            worst = std::max(worst, evaluate_F(spec, exp(Complex(-lambda, theta))).real());
        }
        detail::push(out, "minor-arc growth bound", worst <= bound, bound - worst, "margin");
    }
    return out;
}

} // namespace qjensen
