#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/math/constants/constants.hpp>

#include <stdexcept>
#include <string>

namespace qjensen {

namespace bmp = boost::multiprecision;

using Int = bmp::cpp_int;
using Rat = bmp::cpp_rational;

// 64 decimal digits covers every precision requirement in the library:
// the normalized Jensen evaluation needs >= 60, the contour kernel >= 40.
inline constexpr unsigned kDigits = 64;
using Real    = bmp::number<bmp::cpp_bin_float<kDigits>, bmp::et_off>;
using Complex = bmp::cpp_complex<kDigits>;

inline Real pi_r() { return boost::math::constants::pi<Real>(); }
inline Real euler_gamma_r() { return boost::math::constants::euler<Real>(); }
inline Real log_2pi_r() {
    static const Real v = log(2 * boost::math::constants::pi<Real>());
    return v;
}

inline Real to_real(const Int& x) { return Real(x); }
inline Real to_real(const Rat& x) { return Real(x); }

// e^{2*pi*i*num/den}
inline Complex unit_root(long num, long den) {
    Real theta = 2 * pi_r() * Real(num) / Real(den);
    return Complex(cos(theta), sin(theta));
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Value could not be computed to the requested accuracy.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical consistency check inside an integration failed.
struct integration_error : std::runtime_error {
    explicit integration_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace qjensen
