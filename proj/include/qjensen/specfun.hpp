#pragma once

#include "qjensen/numeric.hpp"
#include "qjensen/polynomial.hpp"

#include <vector>
#include <functional>
#include <stdexcept>
#include <algorithm>

namespace qjensen {

// ---------------------------------------------------------------------------
// Bernoulli numbers and polynomials (exact rationals)
// ---------------------------------------------------------------------------

// B_0, B_1, ... with B_1 = -1/2 (generating function t/(e^t - 1))
inline const std::vector<Rat>& bernoulli_table(std::size_t upto) {
    static std::vector<Rat> table{Rat(1)};
    while (table.size() <= upto) {
        long m = static_cast<long>(table.size());
        // sum_{k=0}^{m} C(m+1,k) B_k = 0 for m >= 1
        Rat s(0);
        for (long k = 0; k < m; ++k) s += Rat(binomial(m + 1, k)) * table[k];
        table.push_back(-s / Rat(m + 1));
    }
    return table;
}

inline Rat bernoulli_number(long n) {
    if (n < 0) throw std::invalid_argument("bernoulli_number: n >= 0 required");
    return bernoulli_table(static_cast<std::size_t>(n))[n];
}

// B_n(x) = sum_k C(n,k) B_k x^{n-k}, exact at rational x
inline Rat bernoulli_poly(long n, const Rat& x) {
    if (n < 0) throw std::invalid_argument("bernoulli_poly: n >= 0 required");
    const auto& B = bernoulli_table(static_cast<std::size_t>(n));
    Rat acc(0);
    for (long k = 0; k <= n; ++k)
        acc = acc * x + Rat(binomial(n, k)) * B[k];
    return acc;
}

inline Real bernoulli_real(long n) { return to_real(bernoulli_number(n)); }

inline Rat pow_int(const Rat& x, long k) {
    Rat r(1), b = x;
    while (k > 0) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// log Gamma / reciprocal Gamma / digamma, real arguments
// ---------------------------------------------------------------------------

namespace detail {
// Stirling tail sum_{j>=1} B_{2j} / (2j(2j-1) y^{2j-1}), y >= 60
inline Real stirling_tail(const Real& y) {
    Real y2 = y * y, ypow = y, s = 0;
    for (long j = 1; j <= 70; ++j) {
        Real term = bernoulli_real(2 * j) / (Real(2 * j) * Real(2 * j - 1) * ypow);
        s += term;
        if (abs(term) < Real("1e-75") * (abs(s) + 1)) break;
        ypow *= y2;
    }
    return s;
}
inline const Real& asymptotic_threshold() {
    static const Real t = 60;
    return t;
}
} // namespace detail

// log Gamma(x), x > 0
inline Real lgamma_r(Real x) {
    if (x <= 0) throw std::domain_error("lgamma_r requires x > 0");
    Real shift = 0;
    while (x < detail::asymptotic_threshold()) {
        shift += log(x);
        x += 1;
    }
    return (x - Real(1) / 2) * log(x) - x + log_2pi_r() / 2 + detail::stirling_tail(x) - shift;
}

inline Real gamma_r(const Real& x) { return exp(lgamma_r(x)); }

// 1/Gamma(x), any real x (entire; vanishes at non-positive integers)
inline Real rgamma_r(const Real& x) {
    if (x > Real(1) / 2) return exp(-lgamma_r(x));
    // reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    Real s = sin(pi_r() * x);
    if (s == 0) return Real(0);
    return exp(lgamma_r(1 - x)) * s / pi_r();
}

// digamma(x), x > 0
inline Real digamma_r(Real x) {
    if (x <= 0) throw std::domain_error("digamma_r requires x > 0");
    Real acc = 0;
    while (x < detail::asymptotic_threshold()) {
        acc -= 1 / x;
        x += 1;
    }
    Real x2 = x * x, xpow = x2, s = log(x) - 1 / (2 * x);
    for (long j = 1; j <= 70; ++j) {
        Real term = bernoulli_real(2 * j) / (Real(2 * j) * xpow);
        s -= term;
        if (abs(term) < Real("1e-75") * (abs(s) + 1)) break;
        xpow *= x2;
    }
    return s + acc;
}

// ---------------------------------------------------------------------------
// Hurwitz zeta, real s > 1, a > 0, Euler-Maclaurin accelerated
// ---------------------------------------------------------------------------

inline Real hurwitz_zeta(const Real& s, const Real& a) {
    if (s <= 1) throw std::domain_error("hurwitz_zeta requires s > 1");
    if (a <= 0) throw std::domain_error("hurwitz_zeta requires a > 0");
    const long M = 60;
    Real sum = 0;
    for (long k = 0; k < M; ++k) sum += pow(a + k, -s);
    Real Ma = a + M;
    sum += pow(Ma, 1 - s) / (s - 1);
    sum += pow(Ma, -s) / 2;
    Real poch = s;            // (s)_{2j-1}, starts at (s)_1
    Real fac = 2;             // (2j)!
    Real mp = pow(Ma, -s - 1);
    Real Ma2 = Ma * Ma;
    for (long j = 1; j <= 70; ++j) {
        Real term = bernoulli_real(2 * j) / fac * poch * mp;
        sum += term;
        if (abs(term) < Real("1e-75") * (abs(sum) + 1)) break;
        poch *= (s + 2 * j - 1) * (s + 2 * j);
        fac *= Real(2 * j + 1) * Real(2 * j + 2);
        mp /= Ma2;
    }
    return sum;
}

// ---------------------------------------------------------------------------
// tanh-sinh (double exponential) quadrature on a finite interval
// ---------------------------------------------------------------------------

inline Real tanh_sinh(const std::function<Real(const Real&)>& f, const Real& a, const Real& b,
                      const Real& tol = Real("1e-30"), int max_level = 12) {
    const Real half = (b - a) / 2, mid = (a + b) / 2;
    const Real piq = pi_r() / 2;
    const Real tmax = 5;
    Real h = 1;
    auto node = [&](const Real& t, Real& x, Real& w) {
        Real sh = sinh(t);
        Real c = cosh(piq * sh);
        x = tanh(piq * sh);
        w = piq * cosh(t) / (c * c);
    };
    Real x, w;
    node(Real(0), x, w);
    Real integral = w * f(mid);
    for (Real t = h; t <= tmax; t += h) {
        node(t, x, w);
        integral += w * (f(mid + half * x) + f(mid - half * x));
    }
    Real prev = integral * h * half;
    for (int level = 1; level <= max_level; ++level) {
        h /= 2;
        Real extra = 0;
        for (Real t = h; t <= tmax; t += 2 * h) {
            node(t, x, w);
            extra += w * (f(mid + half * x) + f(mid - half * x));
        }
        integral += extra;
        Real cur = integral * h * half;
        if (level >= 3 && abs(cur - prev) <= tol * (abs(cur) + 1)) return cur;
        prev = cur;
    }
    return prev;
}

// ---------------------------------------------------------------------------
// Laurent data of f(x) = e^{-ax} / (x (1 - e^{-px})), exact rationals
// ---------------------------------------------------------------------------

// f(x) ~ sum_{n >= -2} d(n) x^n with d(-2) = 1/p, d(-1) = 1/2 - a/p
struct LaurentData {
    long n0 = -2;
    std::vector<Rat> d; // d[n - n0]
    const Rat& at(long n) const { return d.at(static_cast<std::size_t>(n - n0)); }
    long max_n() const { return n0 + static_cast<long>(d.size()) - 1; }
};

inline LaurentData laurent_coeffs(long a, long p, long nmax) {
    if (p < 1 || a < 1) throw std::invalid_argument("laurent_coeffs requires a >= 1, p >= 1");
    long N = nmax + 2;
    // x/(1 - e^{-x}) = sum_k B_k(1) x^k / k!   (B_k(1) = B_k except B_1(1) = +1/2)
    std::vector<Rat> u(static_cast<std::size_t>(N) + 1), c(static_cast<std::size_t>(N) + 1);
    Rat fact(1);
    for (long k = 0; k <= N; ++k) {
        if (k > 0) fact *= k;
        Rat bk1 = (k == 1) ? Rat(1, 2) : bernoulli_number(k);
        u[static_cast<std::size_t>(k)] = bk1 * pow_int(Rat(p), k) / fact;
        c[static_cast<std::size_t>(k)] = pow_int(Rat(-a), k) / fact;
    }
    LaurentData L;
    L.n0 = -2;
    L.d.resize(static_cast<std::size_t>(nmax + 3));
    for (long n = -2; n <= nmax; ++n) {
        long m = n + 2;
        Rat s(0);
        for (long k = 0; k <= m; ++k)
            s += c[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(m - k)];
        L.d[static_cast<std::size_t>(n + 2)] = s / p;
    }
    return L;
}

// ---------------------------------------------------------------------------
// Lerch transcendent at s = 2, z = zeta_p^m, a = 1
// ---------------------------------------------------------------------------

// Phi(z,2,1) = sum_{n>=0} z^n/(n+1)^2. Splitting n+1 into residue classes
// mod p turns the slowly converging series into a finite combination of
// Hurwitz zeta values: (1/p^2) sum_{alpha=1}^p z^{alpha-1} zeta(2, alpha/p).
inline Complex lerch_phi_unit(long p, long m) {
    if (p < 1) throw std::invalid_argument("lerch_phi_unit requires p >= 1");
    Complex s(0);
    Real p2 = Real(p) * Real(p);
    for (long alpha = 1; alpha <= p; ++alpha)
        s += unit_root(m * (alpha - 1), p) * Complex(hurwitz_zeta(Real(2), Real(alpha) / Real(p)) / p2, 0);
    return s;
}

// ---------------------------------------------------------------------------
// sum_{alpha=1}^{p} zeta_p^{h a alpha} psi(alpha/p)
// ---------------------------------------------------------------------------

inline Complex digamma_rootofunity_sum(long h, long a, long p) {
    if (p < 1) throw std::invalid_argument("digamma_rootofunity_sum requires p >= 1");
    Complex s(0);
    for (long alpha = 1; alpha <= p; ++alpha)
        s += unit_root(h * a * alpha, p) * Complex(digamma_r(Real(alpha) / Real(p)), 0);
    return s;
}

// closed form p Log(1 - zeta_p^{ha}); needs ha not divisible by p
inline Complex digamma_rootofunity_rhs(long h, long a, long p) {
    if (((h * a) % p + p) % p == 0)
        throw std::domain_error("digamma_rootofunity_rhs undefined for ha ≡ 0 (mod p)");
    Complex z = Complex(1) - unit_root(h * a, p);
    return Complex(Real(p), 0) * log(z);
}

// ---------------------------------------------------------------------------
// I* — regularized integral of f(u) = e^{-au}/(u(1-e^{-pu}))
// ---------------------------------------------------------------------------

// I* = int_0^inf ( f(u) - u^{-2}/p - (1/2 - a/p) e^{-au}/u ) du
//    = log Gamma(a/p) + (1/2 - a/p) log(a/p) - log(2 pi)/2.
struct IStarResult {
    Real closed_form;
    Real quadrature;
};

inline IStarResult i_star(long a, long p) {
    if (!(a >= 1 && a < p)) throw std::domain_error("i_star requires 1 <= a < p");
    const Real ap = Real(a) / Real(p);
    const Real dm1 = Real(1) / 2 - ap;
    const Real closed = lgamma_r(ap) + dm1 * log(ap) - log_2pi_r() / 2;

    // The integrand cancels catastrophically as u -> 0; on (0, u0) it is
    // integrated from its exact power series,
    //   f - d(-2)/u^2 - d(-1) e^{-au}/u = sum_{n>=0} g_n u^n,
    //   g_n = d(n) + d(-1) (-1)^n a^{n+1} / (n+1)!
    const long nterms = 72;
    const LaurentData L = laurent_coeffs(a, p, nterms);
    const Rat dm1_rat = Rat(1, 2) - Rat(a, p);
    std::vector<Real> g(static_cast<std::size_t>(nterms) + 1);
    Rat fact(1);
    for (long n = 0; n <= nterms; ++n) {
        fact *= (n + 1);
        Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
        g[static_cast<std::size_t>(n)] = to_real(L.at(n) + dm1_rat * sign * pow_int(Rat(a), n + 1) / fact);
    }
    // series radius is 2 pi / p (nearest pole of f); stay well inside
    const Real u0 = std::min(Real(1) / 2, pi_r() / (2 * p));
    Real series_part = 0;
    {
        Real upow = u0;
        for (long n = 0; n <= nterms; ++n) {
            series_part += g[static_cast<std::size_t>(n)] * upow / Real(n + 1);
            upow *= u0;
        }
    }

    auto direct = [&](const Real& u) -> Real {
        Real eau = exp(-Real(a) * u);
        Real epu = exp(-Real(p) * u);
        return eau / (u * (1 - epu)) - 1 / (Real(p) * u * u) - dm1 * eau / u;
    };
    // exponential pieces are below 1e-73 past U; the remaining -1/(p u^2)
    // tail integrates to -1/(p U)
    const Real U = Real(170) / a;
    Real middle = tanh_sinh(direct, u0, Real(4)) + tanh_sinh(direct, Real(4), Real(30)) +
                  tanh_sinh(direct, Real(30), U);
    Real tail = -1 / (Real(p) * U);

    return IStarResult{closed, series_part + middle + tail};
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin verification of Log G_{a,p}(zeta_p^h q), q = e^{-z}
// ---------------------------------------------------------------------------

// direct:    sum_{alpha=1}^p zeta_p^{h a alpha} sum_{l>=0} z f(pz(l + alpha/p))
// expansion: per-alpha Euler-Maclaurin right side through O(1), with w = pz:
//            z [ d(-2) zeta(2,alpha/p) w^{-2} + I*/w - (d(-1)/w)(Log(a w) + psi(alpha/p) + gamma) ]
// The difference is O(|z|).
struct EmVerification {
    Complex direct;
    Complex expansion;
    Real abs_difference;
};

inline EmVerification em_verify_logG(long a, long p, long h, const Complex& z,
                                     long term_budget = 2000000) {
    if (!(a >= 1 && a < p)) throw std::domain_error("em_verify_logG requires 1 <= a < p");
    if (z.real() <= 0) throw std::domain_error("em_verify_logG requires Re(z) > 0");

    const Complex w = Complex(Real(p), 0) * z;

    Complex direct(0);
    for (long alpha = 1; alpha <= p; ++alpha) {
        Complex zf = unit_root(h * a * alpha, p);
        Complex inner(0);
        long l = 0;
        while (true) {
            Complex x = w * Complex(Real(l) + Real(alpha) / Real(p), 0);
            Complex term = z * exp(Complex(-Real(a), 0) * x) /
                           (x * (Complex(1) - exp(Complex(-Real(p), 0) * x)));
            inner += term;
            if (abs(term) < Real("1e-45") * (abs(inner) + 1) && l > 3) break;
            if (++l > term_budget)
                throw precision_error("em_verify_logG: direct sum did not converge within budget");
        }
        direct += zf * inner;
    }

    const Real istar_closed = i_star(a, p).closed_form;
    const Real dm1 = Real(1) / 2 - Real(a) / Real(p);
    const Real gamma = euler_gamma_r();
    Complex expansion(0);
    for (long alpha = 1; alpha <= p; ++alpha) {
        Complex zf = unit_root(h * a * alpha, p);
        Real alpha_p = Real(alpha) / Real(p);
        Complex t = Complex(hurwitz_zeta(Real(2), alpha_p) / Real(p), 0) / (w * w);
        t += Complex(istar_closed, 0) / w;
        t -= (Complex(dm1, 0) / w) * (log(Complex(Real(a), 0) * w) + Complex(digamma_r(alpha_p) + gamma, 0));
        expansion += zf * (z * t);
    }

    return EmVerification{direct, expansion, abs(direct - expansion)};
}

} // namespace qjensen
