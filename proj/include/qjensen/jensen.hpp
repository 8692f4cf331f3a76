#pragma once

#include "qjensen/numeric.hpp"
#include "qjensen/polynomial.hpp"
#include "qjensen/series.hpp"

#include <stdexcept>
#include <vector>

namespace qjensen {

// J^{d,n}(X) = sum_j C(d,j) C(n+j) X^j, exact integer coefficients
inline IntPoly jensen_polynomial(const CoeffSeries& seq, long d, long n) {
    if (d < 1) throw std::invalid_argument("jensen_polynomial requires d >= 1");
    if (n < 0 || n + d > seq.max_index())
        throw std::out_of_range("jensen_polynomial: sequence not defined on [n, n+d]");
    std::vector<Int> c(static_cast<std::size_t>(d) + 1);
    for (long j = 0; j <= d; ++j)
        c[static_cast<std::size_t>(j)] = binomial(d, j) * seq.coeffs[static_cast<std::size_t>(n + j)];
    return IntPoly{std::move(c)};
}

// H_d from the generating function e^{-t^2 + Xt} = sum_d H_d(X) t^d / d!,
// via the recurrence H_0 = 1, H_1 = X, H_{d+1} = X H_d - 2d H_{d-1}.
inline IntPoly hermite_polynomial(long d) {
    if (d < 0) throw std::invalid_argument("hermite_polynomial requires d >= 0");
    IntPoly prev = IntPoly::constant(Int(1));
    if (d == 0) return prev;
    IntPoly cur{{Int(0), Int(1)}};
    const IntPoly x{{Int(0), Int(1)}};
    for (long k = 1; k < d; ++k) {
        IntPoly next = x * cur - Int(2 * k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Normalization data (A(n), delta(n), g_j(n)) attached to a major-arc profile
// with parameters A, B, K.
//
// Two conventions are provided. `as_stated` uses
//     A(n) = sqrt(AK/n) + (2B+3)/(4n),   delta(n) = sqrt(2) (AK)^{1/4} n^{-3/4};
// `calibrated` matches the first- and second-order Taylor coefficients of
// log C(n+k)/C(n) for a sequence with main term n^{-(2B+3)/4} e^{2 sqrt(AKn)}:
//     A(n) = sqrt(AK/n) - (2B+3)/(4n),   delta(n) = (AK)^{1/4} n^{-3/4} / 2.
// Only the calibrated constants make the normalized Jensen polynomials
// converge to H_d itself; the as-stated ones converge to a rescaled limit
// (2 sqrt 2)^{-d} H_d(2 sqrt 2 X).
struct GrowthModel {
    enum class Convention { as_stated, calibrated };
    Real A;
    Real B;
    long K = 1;
    Convention convention = Convention::as_stated;

    Real shift(long n) const {
        Real lead = sqrt(A * K / Real(n));
        Real corr = (2 * B + 3) / (4 * Real(n));
        return convention == Convention::as_stated ? lead + corr : lead - corr;
    }
    Real delta(long n) const {
        Real base = pow(A * K, Real(1) / 4) * pow(Real(n), Real(-3) / 4);
        return convention == Convention::as_stated ? sqrt(Real(2)) * base : base / 2;
    }
    Real g(long j, long n) const {
        if (j < 1) throw std::invalid_argument("g_j defined for j >= 1");
        Real sign = (j % 2 == 1) ? Real(1) : Real(-1);
        return (-2 * B - 3) * sign / (4 * Real(j) * pow(Real(n), Real(j)));
    }
};

// (delta(n)^{-d} / C(n)) J^{d,n}((delta(n) X - 1) / exp(A(n))), with the
// coefficient ratios C(n+j)/C(n) formed from the exact integers before any
// floating rounding.
inline Real normalized_jensen_eval(const CoeffSeries& seq, long d, long n, const Real& X,
                                   const GrowthModel& growth) {
    if (d < 0) throw std::invalid_argument("normalized_jensen_eval requires d >= 0");
    if (n < 0 || n + d > seq.max_index())
        throw std::out_of_range("normalized_jensen_eval: sequence not defined on [n, n+d]");
    if (seq.coeffs[static_cast<std::size_t>(n)] == 0)
        throw std::domain_error("normalized_jensen_eval: C(n) = 0");
    if (d == 0) return Real(1);
    const Real dn = growth.delta(n);
    const Real Y = (dn * X - 1) * exp(-growth.shift(n));
    Real sum = 0, ypow = 1;
    for (long j = 0; j <= d; ++j) {
        Rat ratio(seq.coeffs[static_cast<std::size_t>(n + j)], seq.coeffs[static_cast<std::size_t>(n)]);
        sum += to_real(Rat(binomial(d, j)) * ratio) * ypow;
        ypow *= Y;
    }
    return sum * pow(dn, Real(-d));
}

struct EvalGrid {
    Real lo = -3;
    Real hi = 3;
    long steps = 600; // steps+1 points inclusive
};

// sup over the grid of |normalized Jensen - H_d|
inline Real hermite_distance(const CoeffSeries& seq, long d, long n, const GrowthModel& growth,
                             const EvalGrid& grid = {}) {
    if (grid.steps < 0) throw std::invalid_argument("hermite_distance: empty grid");
    const IntPoly hd = hermite_polynomial(d);
    Real dist = 0;
    for (long i = 0; i <= grid.steps; ++i) {
        Real X = grid.steps == 0 ? grid.lo
                                 : grid.lo + (grid.hi - grid.lo) * Real(i) / Real(grid.steps);
        Real diff = abs(normalized_jensen_eval(seq, d, n, X, growth) - hd.eval(X));
        if (diff > dist) dist = diff;
    }
    return dist;
}

} // namespace qjensen
