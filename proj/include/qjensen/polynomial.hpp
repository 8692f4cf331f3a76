#pragma once

#include "qjensen/numeric.hpp"

#include <vector>
#include <stdexcept>
#include <string>
#include <sstream>

namespace qjensen {

// Univariate polynomial, coefficients in ascending degree order.
// The zero polynomial is represented by an empty coefficient vector.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(T v) {
        if (v == 0) return Polynomial{};
        return Polynomial{{std::move(v)}};
    }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](std::size_t i) const { return c_[i]; }
    const T& leading() const { return c_.back(); }

    template <class U>
    U eval(const U& x) const {
        U acc{0};
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc = acc * x + U(c_[i]);
        }
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial{};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial{std::move(d)};
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{0});
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Polynomial{std::move(r)};
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<T> r(std::max(a.c_.size(), b.c_.size()), T{0});
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return Polynomial{std::move(r)};
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial{};
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T{0});
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial{std::move(r)};
    }
    friend Polynomial operator*(const T& s, const Polynomial& p) {
        if (s == 0) return Polynomial{};
        std::vector<T> r = p.c_;
        for (auto& v : r) v *= s;
        return Polynomial{std::move(r)};
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    std::string str(const std::string& var = "X") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            if (!first) os << " + ";
            os << c_[i];
            if (i >= 1) os << "*" << var;
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

inline RatPoly to_rational(const IntPoly& p) {
    std::vector<Rat> c(p.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(p.coeffs()[i]);
    return RatPoly{std::move(c)};
}

inline Int binomial(long n, long k) {
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

// quotient/remainder over the rationals; divisor must be nonzero
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    std::vector<Rat> rem(a.coeffs());
    long db = b.degree();
    if (a.degree() < db) return {RatPoly{}, a};
    std::vector<Rat> quo(a.degree() - db + 1, Rat(0));
    for (long i = a.degree(); i >= db; --i) {
        Rat f = rem[i] / b.leading();
        if (f == 0) continue;
        quo[i - db] = f;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
    }
    return {RatPoly{std::move(quo)}, RatPoly{std::move(rem)}};
}

// positive-scalar normalization: divide by |leading|, keeping the sign pattern
inline RatPoly normalize_sign_safe(const RatPoly& p) {
    if (p.is_zero()) return p;
    Rat lead = p.leading();
    if (lead < 0) lead = -lead;
    return Rat(1) / lead * p;
}

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    a = normalize_sign_safe(a);
    b = normalize_sign_safe(b);
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = normalize_sign_safe(r);
    }
    return a;
}

} // namespace qjensen
