#pragma once

#include "qjensen/numeric.hpp"
#include "qjensen/specfun.hpp"

#include <stdexcept>
#include <string>
#include <algorithm>

namespace qjensen {

enum class BesselMode { automatic, series, asymptotic };

// a_k(v) = (1/2 - v)_k (1/2 + v)_k / ((-2)^k k!), standard Pochhammer
// convention (k factors, empty product = 1).
inline Rat bessel_asymp_coeff(const Rat& v, long k) {
    if (k < 0) throw std::invalid_argument("bessel_asymp_coeff: k >= 0 required");
    Rat num(1);
    for (long i = 0; i < k; ++i)
        num *= (Rat(1, 2) - v + i) * (Rat(1, 2) + v + i);
    Rat den = pow_int(Rat(-2), k);
    for (long i = 2; i <= k; ++i) den *= i;
    return num / den;
}

// sign and log of the magnitude; sign = 0 encodes an exact zero
struct SignedLog {
    Real log_abs;
    int sign;
    Real value() const { return sign == 0 ? Real(0) : Real(sign) * exp(log_abs); }
};

namespace detail {

// ascending series I_v(z) = sum_k (z/2)^{v+2k} / (k! Gamma(v+k+1));
// negative integer orders fall out of 1/Gamma vanishing at its poles, and
// negative non-integer orders can make the value negative at small z.
inline SignedLog bessel_series(const Real& v, const Real& z) {
    Real h2 = z * z / 4;
    Real sum = 0, term_scale = 1; // term_scale = (z/2)^{2k} / k!
    long k = 0, consecutive_small = 0;
    while (true) {
        Real rg = rgamma_r(v + Real(k) + 1);
        Real term = term_scale * rg;
        sum += term;
        if (k > 8 && abs(term) < Real("1e-72") * (abs(sum) + Real("1e-72"))) {
            if (++consecutive_small >= 3) break;
        } else {
            consecutive_small = 0;
        }
        term_scale *= h2 / (k + 1);
        ++k;
        if (k > 100000) throw precision_error("bessel_I series did not converge");
    }
    if (sum == 0) return {Real(0), 0};
    int sgn = sum > 0 ? 1 : -1;
    return {v * log(z / 2) + log(abs(sum)), sgn};
}

// e^z/sqrt(2 pi z) * sum_k (-1)^k a_k(v)/z^k, divergent series truncated at
// its smallest term; the first omitted term bounds the relative error.
inline SignedLog bessel_asymptotic(const Real& v, const Real& z, const Real& rel_target) {
    Real sum = 1, term = 1, smallest;
    long k = 0;
    const long kcap = 8 + 4 * static_cast<long>(std::max(1.0, z.convert_to<double>()));
    while (true) {
        // t_{k+1}/t_k = (1/2 - v + k)(1/2 + v + k) / (2 z (k+1))
        Real next = term * ((Real(1) / 2 - v + k) * (Real(1) / 2 + v + k) / (2 * z * (k + 1)));
        if (abs(next) >= abs(term) || k >= kcap) {
            smallest = abs(next);
            break;
        }
        sum += next;
        term = next;
        ++k;
        if (abs(term) < Real("1e-72") * abs(sum)) {
            smallest = abs(term);
            break;
        }
    }
    if (smallest > rel_target * abs(sum))
        throw precision_error("bessel_I asymptotic: z too small for requested accuracy");
    if (sum <= 0) throw precision_error("bessel_I asymptotic produced a non-positive sum");
    return {z - log(2 * pi_r() * z) / 2 + log(sum), 1};
}

} // namespace detail

// Automatic mode switches from the ascending series to the asymptotic
// expansion at z >= max(30, 2 v^2).
inline SignedLog bessel_I_signed_log(const Real& v, const Real& z,
                                     BesselMode mode = BesselMode::automatic) {
    if (z <= 0) throw std::domain_error("bessel_I requires z > 0");
    if (mode == BesselMode::automatic)
        mode = (z >= std::max(Real(30), 2 * v * v)) ? BesselMode::asymptotic : BesselMode::series;
    if (mode == BesselMode::series) return detail::bessel_series(v, z);
    return detail::bessel_asymptotic(v, z, Real("1e-10"));
}

inline Real bessel_I(const Real& v, const Real& z, BesselMode mode = BesselMode::automatic) {
    return bessel_I_signed_log(v, z, mode).value();
}

} // namespace qjensen
