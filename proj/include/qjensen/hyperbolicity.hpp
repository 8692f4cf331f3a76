#pragma once

#include "qjensen/numeric.hpp"
#include "qjensen/polynomial.hpp"
#include "qjensen/series.hpp"
#include "qjensen/jensen.hpp"

#include <vector>
#include <string>
#include <stdexcept>
#include <optional>

namespace qjensen {

// Power sums S_0..S_{kmax} of the roots, by Newton's identities on the
// coefficients — roots are never computed.
inline std::vector<Rat> power_sums(const RatPoly& poly, long kmax) {
    if (poly.is_zero()) throw std::domain_error("power_sums: zero polynomial");
    const long n = poly.degree();
    if (n < 1) throw std::domain_error("power_sums: constant polynomial");
    const Rat& an = poly.leading();
    std::vector<Rat> S(static_cast<std::size_t>(kmax) + 1);
    S[0] = Rat(n);
    for (long k = 1; k <= kmax; ++k) {
        Rat s(0);
        for (long i = 1; i < k; ++i)
            if (n - i >= 0) s += Rat(poly[static_cast<std::size_t>(n - i)]) * S[static_cast<std::size_t>(k - i)];
        if (k <= n) s += Rat(k) * poly[static_cast<std::size_t>(n - k)];
        S[static_cast<std::size_t>(k)] = -s / an;
    }
    return S;
}

inline std::vector<Rat> power_sums(const IntPoly& poly, long kmax) {
    return power_sums(to_rational(poly), kmax);
}

namespace detail {
// exact determinant of the leading k x k submatrix of [S_{i+j}]
inline Rat hankel_leading_minor(const std::vector<Rat>& S, long k) {
    std::vector<std::vector<Rat>> M(static_cast<std::size_t>(k),
                                    std::vector<Rat>(static_cast<std::size_t>(k)));
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j)
            M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = S[static_cast<std::size_t>(i + j)];
    Rat det(1);
    int sign = 1;
    for (long col = 0; col < k; ++col) {
        long piv = -1;
        for (long r = col; r < k; ++r)
            if (M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) { piv = r; break; }
        if (piv < 0) return Rat(0);
        if (piv != col) {
            std::swap(M[static_cast<std::size_t>(piv)], M[static_cast<std::size_t>(col)]);
            sign = -sign;
        }
        const Rat& pv = M[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        det *= pv;
        for (long r = col + 1; r < k; ++r) {
            Rat f = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / pv;
            if (f == 0) continue;
            for (long c = col; c < k; ++c)
                M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
                    f * M[static_cast<std::size_t>(col)][static_cast<std::size_t>(c)];
        }
    }
    return sign < 0 ? -det : det;
}
} // namespace detail

// Power sums and the leading principal minors Delta_1..Delta_n of the Hankel
// matrix [S_{i+j}]. The hyperbolic flag uses the rank-aware sign pattern:
// Delta_k > 0 up to the last nonzero minor and Delta_k = 0 after it. For a
// hyperbolic polynomial with r distinct roots the pattern is exactly
// (+^r, 0^{n-r}); any complex root breaks it.
struct HankelReport {
    long degree;
    std::vector<Rat> S;      // S_0..S_{2n-2}
    std::vector<Rat> deltas; // Delta_1..Delta_n
    bool hyperbolic;

    std::string delta_signs() const {
        std::string s;
        for (const auto& d : deltas) s += (d > 0 ? '+' : (d < 0 ? '-' : '0'));
        return s;
    }
};

inline HankelReport hankel_minors(const RatPoly& poly) {
    const long n = poly.degree();
    if (n < 1) throw std::domain_error("hankel_minors: nonconstant polynomial required");
    HankelReport rep;
    rep.degree = n;
    rep.S = power_sums(poly, std::max<long>(2 * n - 2, 0));
    rep.deltas.resize(static_cast<std::size_t>(n));
    for (long k = 1; k <= n; ++k)
        rep.deltas[static_cast<std::size_t>(k - 1)] = detail::hankel_leading_minor(rep.S, k);
    long rstar = 0;
    for (long k = n; k >= 1; --k)
        if (rep.deltas[static_cast<std::size_t>(k - 1)] != 0) { rstar = k; break; }
    bool ok = rstar > 0;
    for (long k = 1; k <= rstar; ++k)
        if (!(rep.deltas[static_cast<std::size_t>(k - 1)] > 0)) ok = false;
    rep.hyperbolic = ok;
    return rep;
}

inline HankelReport hankel_minors(const IntPoly& poly) { return hankel_minors(to_rational(poly)); }

// ---------------------------------------------------------------------------
// Sturm-sequence certification
// ---------------------------------------------------------------------------

struct SturmCertificate {
    long squarefree_degree;
    long real_root_count; // distinct real roots of the squarefree part
    bool hyperbolic;
};

namespace detail {
inline int sign_at_plus_inf(const RatPoly& p) { return p.leading() > 0 ? 1 : -1; }
inline int sign_at_minus_inf(const RatPoly& p) {
    int s = sign_at_plus_inf(p);
    return (p.degree() % 2 == 0) ? s : -s;
}
} // namespace detail

// Hyperbolic iff the Sturm real-root count of the squarefree part equals its
// degree, so repeated real roots certify as hyperbolic.
inline SturmCertificate sturm_is_hyperbolic(const RatPoly& poly) {
    if (poly.is_zero()) throw std::domain_error("is_hyperbolic: zero polynomial");
    if (poly.degree() == 0) return SturmCertificate{0, 0, true};
    RatPoly g = poly_gcd(poly, poly.derivative());
    RatPoly sf = divmod(poly, g).first; // squarefree part
    const long deg = sf.degree();
    if (deg == 0) return SturmCertificate{0, 0, true};

    std::vector<RatPoly> chain;
    chain.push_back(sf);
    chain.push_back(sf.derivative());
    while (chain.back().degree() > 0) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        // positive rescaling keeps entries small and signs unchanged
        chain.push_back(normalize_sign_safe(Rat(-1) * r));
    }

    auto variations = [&](auto sign_of) {
        int count = 0, prev = 0;
        for (const auto& p : chain) {
            if (p.is_zero()) continue;
            int s = sign_of(p);
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    long roots = variations(detail::sign_at_minus_inf) - variations(detail::sign_at_plus_inf);
    return SturmCertificate{deg, roots, roots == deg};
}

inline SturmCertificate sturm_is_hyperbolic(const IntPoly& poly) {
    return sturm_is_hyperbolic(to_rational(poly));
}

inline bool is_hyperbolic(const RatPoly& poly) { return sturm_is_hyperbolic(poly).hyperbolic; }
inline bool is_hyperbolic(const IntPoly& poly) { return sturm_is_hyperbolic(poly).hyperbolic; }

// ---------------------------------------------------------------------------
// scans over a coefficient sequence
// ---------------------------------------------------------------------------

struct TuranRow {
    long n;
    bool hyperbolic;         // Sturm verdict (authoritative)
    std::string delta_signs; // Hankel minor signs
};

struct TuranScan {
    std::vector<TuranRow> rows;
    std::vector<long> failures;
    std::optional<long> last_failure;
};

// exact per-n verdicts for J^{d,n} over n in [lo, hi]
inline TuranScan turan_scan(const CoeffSeries& seq, long d, long lo, long hi) {
    if (lo < 0 || hi + d > seq.max_index() || lo > hi)
        throw std::out_of_range("turan_scan: range outside series");
    TuranScan scan;
    scan.rows.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long n = lo; n <= hi; ++n) {
        IntPoly J = jensen_polynomial(seq, d, n);
        bool hyp;
        std::string signs;
        if (J.degree() < 1) {
            hyp = true; // degenerate: at most one coefficient survives
            signs = std::string(static_cast<std::size_t>(d), '0');
        } else {
            hyp = sturm_is_hyperbolic(J).hyperbolic;
            signs = hankel_minors(J).delta_signs();
        }
        scan.rows.push_back(TuranRow{n, hyp, signs});
        if (!hyp) {
            scan.failures.push_back(n);
            scan.last_failure = n;
        }
    }
    return scan;
}

// all n in [lo, hi] violating a_n^2 >= a_{n-1} a_{n+1} (exact comparison)
inline std::vector<long> log_concavity_check(const CoeffSeries& seq, long lo, long hi) {
    if (lo < 1 || hi + 1 > seq.max_index() || lo > hi)
        throw std::out_of_range("log_concavity_check: range outside series");
    std::vector<long> failures;
    for (long n = lo; n <= hi; ++n) {
        const Int& a = seq.coeffs[static_cast<std::size_t>(n)];
        if (a * a < seq.coeffs[static_cast<std::size_t>(n - 1)] * seq.coeffs[static_cast<std::size_t>(n + 1)])
            failures.push_back(n);
    }
    return failures;
}

} // namespace qjensen
