#pragma once

#include "qjensen/numeric.hpp"
#include "qjensen/series.hpp"
#include "qjensen/wright.hpp"

#include <vector>
#include <stdexcept>
#include <algorithm>
#include <cmath>

namespace qjensen {

// Log F(q) for |q| < 1, principal branch, via
//   Log F = -sum_m e_m Log(1-q^m) = sum_{k>=1} (1/k) sum_m e_m q^{mk},
// with the inner sum in closed geometric form for the built-in families.
// Terms are accumulated until the dropped tail of Log F is below 1e-20.
namespace detail {
inline Complex cpow_int(Complex base, long e) {
    Complex r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}
} // namespace detail

inline Complex evaluate_F(const ProductSpec& spec, const Complex& q) {
    const Real aq = abs(q);
    if (!(aq < 1)) throw std::domain_error("evaluate_F requires |q| < 1");
    const Real tail_cut = Real("1e-20");

    switch (spec.kind()) {
    case ProductSpec::Kind::custom: {
        Complex acc(0);
        for (const auto& [m, e] : spec.exponent_map()) {
            if (e == 0) continue;
            Complex qm = detail::cpow_int(q, m);
            acc -= Real(e) * log(Complex(1) - qm);
        }
        return acc;
    }
    case ProductSpec::Kind::coloured: {
        // r sum_k q^{tk} / (k (1 - q^{tk}))
        const Complex qt = detail::cpow_int(q, spec.t());
        Complex x = qt, acc(0);
        long k = 1;
        while (true) {
            Complex term = x / ((Complex(1) - x) * Real(k));
            acc += term;
            if (abs(term) < tail_cut) break;
            x *= qt;
            ++k;
            if (k > 40000000) throw precision_error("evaluate_F: factor sum did not converge");
        }
        return Real(spec.r()) * acc;
    }
    case ProductSpec::Kind::shifted: {
        // sum_k q^{ak} / (k (1 - q^{pk}))
        const Complex qa = detail::cpow_int(q, spec.a());
        const Complex qp = detail::cpow_int(q, spec.p());
        Complex xa = qa, xp = qp, acc(0);
        long k = 1;
        while (true) {
            Complex term = xa / ((Complex(1) - xp) * Real(k));
            acc += term;
            if (abs(term) < tail_cut) break;
            xa *= qa;
            xp *= qp;
            ++k;
            if (k > 40000000) throw precision_error("evaluate_F: factor sum did not converge");
        }
        return acc;
    }
    }
    throw std::logic_error("evaluate_F: unknown spec kind");
}

struct ContourConfig {
    ProductSpec spec;
    WrightProfile profile;
    long n = 1;       // target index of C(n) = c(Kn)
    long nodes = 0;   // 0 -> default 8 K n + 512, rounded to a multiple of 2K

    long default_nodes() const {
        long q = 8 * profile.K * n + 512;
        long mult = 2 * profile.K;
        q = ((q + mult - 1) / mult) * mult;
        return std::max<long>(q, 64);
    }
};

struct ContourResult {
    Real value;          // real part of the quadrature
    Real imag_residual;  // |imag| / max(1, |real|)
    long nodes_used;
};

namespace detail {
// trapezoid sum over node indices j ≡ j0 (mod stride) of
// F(e^{-lambda + i theta_j}) e^{Kn lambda} e^{-i Kn theta_j}, theta_j = 2 pi j / Q
inline Complex contour_partial_sum(const ProductSpec& spec, const Real& lambda, long Kn, long Q,
                                   long j0, long stride) {
    const Real two_pi = 2 * pi_r();
    const Real scale = Real(Kn) * lambda;
    Complex acc(0);
    for (long j = j0; j < Q; j += stride) {
        Real theta = two_pi * Real(j) / Real(Q);
        Complex q = exp(Complex(-lambda, theta));
        Complex lf = evaluate_F(spec, q);
        acc += exp(lf + Complex(scale, -theta * Real(Kn)));
    }
    return acc;
}
} // namespace detail

// C(n) by trapezoidal quadrature of (1/2 pi i) \oint F(q) q^{-Kn-1} dq on the
// circle |q| = e^{-lambda}, lambda = sqrt(A/(Kn)). The node count is doubled
// until two successive results agree to 1e-9.
inline ContourResult cauchy_coefficient(const ContourConfig& config) {
    config.profile.validate();
    if (config.n < 0) throw std::domain_error("cauchy_coefficient requires n >= 0");
    const long Kn = config.profile.K * config.n;
    if (Kn == 0) {
        // constant term: F(0) = 1 for every supported product
        return ContourResult{Real(1), Real(0), 1};
    }
    const Real lambda = sqrt(config.profile.A / (Real(config.profile.K) * Real(config.n)));
    long Q = config.nodes > 0 ? std::max<long>(config.nodes, 64) : config.default_nodes();

    Complex total = detail::contour_partial_sum(config.spec, lambda, Kn, Q, 0, 1);
    Real prev_estimate = total.real() / Real(Q);
    const long q_cap = 1L << 24;
    while (true) {
        // refine: old nodes are the even indices of the doubled grid
        Q *= 2;
        total += detail::contour_partial_sum(config.spec, lambda, Kn, Q, 1, 2);
        Real estimate = total.real() / Real(Q);
        if (abs(estimate - prev_estimate) <= Real("1e-9") * std::max(Real(1), abs(estimate))) {
            Real imag_res = abs(total.imag()) / std::max(Real(1), abs(total.real()));
            if (imag_res > Real("1e-8"))
                throw integration_error("cauchy_coefficient: residual imaginary part too large");
            return ContourResult{estimate, imag_res, Q};
        }
        prev_estimate = estimate;
        if (Q > q_cap)
            throw integration_error("cauchy_coefficient: node doubling did not converge");
    }
}

// decomposition of the same quadrature into major arcs (|beta| <= 1 windows
// around the K-th roots of unity in the z = lambda(1 + i beta M)
// parametrization, i.e. angular half-width lambda M) and the minor arc
struct ArcReport {
    std::vector<Complex> major;     // one partial sum per root of unity h = 0..K-1
    Complex minor;
    Complex total;
    Real coefficient;               // total.real()/Q
    Real additivity_residual;       // |major+minor-total| / |total|
    Real symmetry_residual;         // max_h |major_h - major_0| / |major_0|
    long nodes_used;
};

inline ArcReport arc_split_report(const ContourConfig& config) {
    config.profile.validate();
    if (config.n < 1) throw std::domain_error("arc_split_report requires n >= 1");
    const long K = config.profile.K;
    const long Kn = K * config.n;
    const Real lambda = sqrt(config.profile.A / (Real(K) * Real(config.n)));
    const long Q = config.nodes > 0 ? std::max<long>(config.nodes, 64) : config.default_nodes();
    const Real two_pi = 2 * pi_r();
    const Real scale = Real(Kn) * lambda;
    const Real half_width = lambda * config.profile.M; // angular half-width of each major arc

    ArcReport rep;
    rep.major.assign(static_cast<std::size_t>(K), Complex(0));
    rep.minor = Complex(0);
    rep.total = Complex(0);
    rep.nodes_used = Q;

    for (long j = 0; j < Q; ++j) {
        Real theta = two_pi * Real(j) / Real(Q);
        Complex q = exp(Complex(-lambda, theta));
        Complex val = exp(evaluate_F(config.spec, q) + Complex(scale, -theta * Real(Kn)));
        rep.total += val;
        // distance to the nearest K-th root of unity angle 2 pi h / K
        Real pos = theta * Real(K) / two_pi; // in units of arcs
        long h = static_cast<long>(floor(pos + Real(1) / 2).convert_to<double>());
        Real dist = abs(theta - two_pi * Real(h) / Real(K));
        long h_mod = ((h % K) + K) % K;
        if (dist <= half_width)
            rep.major[static_cast<std::size_t>(h_mod)] += val;
        else
            rep.minor += val;
    }

    Complex sum_parts = rep.minor;
    for (const auto& m : rep.major) sum_parts += m;
    rep.coefficient = rep.total.real() / Real(Q);
    rep.additivity_residual = abs(sum_parts - rep.total) / std::max(Real(1), abs(rep.total));
    Real sym = 0;
    const Real base = abs(rep.major[0]);
    for (long h = 1; h < K; ++h)
        sym = std::max(sym, abs(rep.major[static_cast<std::size_t>(h)] - rep.major[0]) /
                                std::max(Real(1), base));
    rep.symmetry_residual = sym;
    return rep;
}

} // namespace qjensen
