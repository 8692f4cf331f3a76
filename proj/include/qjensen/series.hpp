#pragma once

#include "qjensen/numeric.hpp"

#include <map>
#include <vector>
#include <string>
#include <sstream>
#include <fstream>
#include <stdexcept>
#include <optional>

namespace qjensen {

// Describes an infinite product prod_{m>=1} (1-q^m)^{-e_m} together with the
// truncation order N up to which coefficients are requested.
//
// Two built-in exponent patterns cover the families of interest:
//   coloured(r,t):  e_m = r for t | m            (r-coloured partitions, parts divisible by t)
//   shifted(a,p):   e_m = 1 for m ≡ a (mod p)    (partitions into parts ≡ a mod p, p prime)
// plus arbitrary finite exponent maps.
class ProductSpec {
public:
    enum class Kind { custom, coloured, shifted };

    static ProductSpec coloured(long r, long t, long truncation) {
        if (r < 1 || t < 1) throw std::invalid_argument("coloured product needs r >= 1 and t >= 1");
        ProductSpec s;
        s.kind_ = Kind::coloured; s.r_ = r; s.t_ = t; s.trunc_ = check_trunc(truncation);
        return s;
    }

    // p must be prime and 1 <= a < p. a = 0 is rejected: the factor (1-q^0)
    // vanishes and the product is undefined.
    static ProductSpec shifted(long a, long p, long truncation) {
        if (!is_prime(p)) throw std::invalid_argument("shifted product needs p prime");
        if (a < 1 || a >= p) throw std::invalid_argument("shifted product needs 1 <= a < p");
        ProductSpec s;
        s.kind_ = Kind::shifted; s.a_ = a; s.p_ = p; s.trunc_ = check_trunc(truncation);
        return s;
    }

    static ProductSpec custom(std::map<long, long> exponents, long truncation) {
        for (const auto& [m, e] : exponents) {
            (void)e;
            if (m == 0) throw std::invalid_argument("exponent map contains m = 0 (zero factor)");
            if (m < 0) throw std::invalid_argument("exponent map contains m < 0");
        }
        ProductSpec s;
        s.kind_ = Kind::custom; s.map_ = std::move(exponents); s.trunc_ = check_trunc(truncation);
        return s;
    }

    Kind kind() const { return kind_; }
    long truncation() const { return trunc_; }
    long r() const { return r_; }
    long t() const { return t_; }
    long a() const { return a_; }
    long p() const { return p_; }
    const std::map<long, long>& exponent_map() const { return map_; }

    // e_m for arbitrary m >= 1 (not limited by the truncation)
    long exponent(long m) const {
        switch (kind_) {
        case Kind::coloured: return (m % t_ == 0) ? r_ : 0;
        case Kind::shifted:  return (m % p_ == a_ % p_) ? 1 : 0;
        case Kind::custom: {
            auto it = map_.find(m);
            return it == map_.end() ? 0 : it->second;
        }
        }
        return 0;
    }

    bool all_exponents_nonnegative() const {
        if (kind_ != Kind::custom) return true;
        for (const auto& [m, e] : map_) {
            (void)m;
            if (e < 0) return false;
        }
        return true;
    }

    // canonical text form: "H r t" | "G a p" | "P {m:e,...}"
    std::string canonical() const {
        std::ostringstream os;
        switch (kind_) {
        case Kind::coloured: os << "H " << r_ << " " << t_; break;
        case Kind::shifted:  os << "G " << a_ << " " << p_; break;
        case Kind::custom: {
            os << "P {";
            bool first = true;
            for (const auto& [m, e] : map_) {
                if (!first) os << ",";
                os << m << ":" << e;
                first = false;
            }
            os << "}";
            break;
        }
        }
        return os.str();
    }

    static ProductSpec parse(const std::string& canonical_text, long truncation);

private:
    static long check_trunc(long n) {
        if (n < 0) throw std::invalid_argument("truncation must be >= 0");
        return n;
    }
    Kind kind_ = Kind::custom;
    long r_ = 0, t_ = 0, a_ = 0, p_ = 0;
    std::map<long, long> map_;
    long trunc_ = 0;
};

// Exact integer coefficient sequence c(0..N), optionally dilated: after
// dilate_extract with step K the stored values are C(n) = c(Kn).
struct CoeffSeries {
    std::vector<Int> coeffs;
    std::string origin = "external";
    long dilation = 1;

    long max_index() const { return static_cast<long>(coeffs.size()) - 1; }
    const Int& at(long n) const {
        if (n < 0 || n > max_index()) throw std::out_of_range("coefficient index out of range");
        return coeffs[static_cast<std::size_t>(n)];
    }
};

// coefficients of prod (1-q^m)^{-e_m} up to q^N, by iterated exact convolution:
// a factor 1/(1-q^m) is the in-place prefix recurrence c[n] += c[n-m], and a
// factor (1-q^m) is the reverse recurrence c[n] -= c[n-m].
inline CoeffSeries expand_product(const ProductSpec& spec) {
    const long N = spec.truncation();
    CoeffSeries out;
    out.coeffs.assign(static_cast<std::size_t>(N) + 1, Int(0));
    out.coeffs[0] = 1;
    out.origin = spec.canonical();
    for (long m = 1; m <= N; ++m) {
        long e = spec.exponent(m);
        if (e > 0) {
            for (long rep = 0; rep < e; ++rep)
                for (long n = m; n <= N; ++n)
                    out.coeffs[n] += out.coeffs[n - m];
        } else if (e < 0) {
            for (long rep = 0; rep < -e; ++rep)
                for (long n = N; n >= m; --n)
                    out.coeffs[n] -= out.coeffs[n - m];
        }
    }
    return out;
}

inline CoeffSeries coloured_partition_series(long r, long t, long N) {
    return expand_product(ProductSpec::coloured(r, t, N));
}

inline CoeffSeries shifted_pochhammer_series(long a, long p, long N) {
    return expand_product(ProductSpec::shifted(a, p, N));
}

// C(n) = c(K n); the result records the accumulated dilation.
inline CoeffSeries dilate_extract(const CoeffSeries& s, long K) {
    if (K < 1) throw std::invalid_argument("dilation step must be >= 1");
    CoeffSeries out;
    out.origin = s.origin;
    out.dilation = s.dilation * K;
    for (long n = 0; K * n <= s.max_index(); ++n)
        out.coeffs.push_back(s.coeffs[static_cast<std::size_t>(K * n)]);
    return out;
}

// log c(n) from the exact integer; relative error is that of one rounding
// at the working precision.
inline Real log_coeff(const CoeffSeries& s, long n) {
    const Int& c = s.at(n);
    if (c <= 0) throw std::domain_error("log_coeff requires c(n) > 0");
    return log(Real(c));
}

// truncated product of two coefficient series (exact convolution)
inline CoeffSeries series_mul(const CoeffSeries& a, const CoeffSeries& b, long N) {
    CoeffSeries out;
    out.coeffs.assign(static_cast<std::size_t>(N) + 1, Int(0));
    for (long i = 0; i <= std::min(N, a.max_index()); ++i) {
        if (a.coeffs[i] == 0) continue;
        long jmax = std::min(N - i, b.max_index());
        for (long j = 0; j <= jmax; ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

// ---- cache files: one-line header, then newline-delimited decimal integers

inline void write_cache(const CoeffSeries& s, std::ostream& os) {
    os << "#product " << s.origin << " N=" << s.max_index() << " K=" << s.dilation << "\n";
    for (const auto& c : s.coeffs) os << c.str() << "\n";
}

inline CoeffSeries read_cache(std::istream& is) {
    std::string header;
    if (!std::getline(is, header) || header.rfind("#product ", 0) != 0)
        throw std::runtime_error("bad cache file: missing #product header");
    CoeffSeries out;
    auto npos = header.rfind(" N=");
    auto kpos = header.rfind(" K=");
    if (npos == std::string::npos || kpos == std::string::npos || kpos < npos)
        throw std::runtime_error("bad cache file: malformed header");
    out.origin = header.substr(9, npos - 9);
    long n_declared = std::stol(header.substr(npos + 3, kpos - npos - 3));
    out.dilation = std::stol(header.substr(kpos + 3));
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.coeffs.emplace_back(line);
    }
    if (out.max_index() != n_declared)
        throw std::runtime_error("bad cache file: length disagrees with header");
    return out;
}

inline ProductSpec ProductSpec::parse(const std::string& text, long truncation) {
    std::istringstream is(text);
    std::string tag;
    is >> tag;
    if (tag == "H") {
        long r, t;
        if (!(is >> r >> t)) throw std::invalid_argument("expected: H r t");
        return ProductSpec::coloured(r, t, truncation);
    }
    if (tag == "G") {
        long a, p;
        if (!(is >> a >> p)) throw std::invalid_argument("expected: G a p");
        return ProductSpec::shifted(a, p, truncation);
    }
    if (tag == "P") {
        std::string rest;
        std::getline(is, rest);
        auto lb = rest.find('{');
        auto rb = rest.rfind('}');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb)
            throw std::invalid_argument("expected: P {m:e,...}");
        std::map<long, long> m;
        std::string body = rest.substr(lb + 1, rb - lb - 1);
        std::istringstream bs(body);
        std::string item;
        while (std::getline(bs, item, ',')) {
            if (item.empty()) continue;
            auto colon = item.find(':');
            if (colon == std::string::npos) throw std::invalid_argument("bad map entry: " + item);
            m[std::stol(item.substr(0, colon))] = std::stol(item.substr(colon + 1));
        }
        return ProductSpec::custom(std::move(m), truncation);
    }
    throw std::invalid_argument("unknown product family tag: " + tag);
}

} // namespace qjensen
