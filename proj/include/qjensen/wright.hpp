#pragma once

#include "qjensen/numeric.hpp"
#include "qjensen/bessel.hpp"
#include "qjensen/specfun.hpp"
#include "qjensen/jensen.hpp"

#include <vector>
#include <stdexcept>

namespace qjensen {

// Major/minor-arc description of a generating function F:
// near each of the K dominant roots of unity,
//   F(e^{-z}) = z^B e^{A/z} (alpha_0 + alpha_1 z + ... + O(z^N)),
// and on the minor arcs |F(e^{-z})| << e^{(A-kappa)/Re z}. M is the aperture
// of the cone separating the two regimes.
struct WrightProfile {
    Real A;
    Real B;
    long K = 1;
    std::vector<Real> alphas;
    Real kappa;
    Real M = 1;

    void validate() const {
        if (!(A > 0)) throw std::invalid_argument("profile requires A > 0");
        if (K < 1) throw std::invalid_argument("profile requires K >= 1");
        if (!(kappa > 0)) throw std::invalid_argument("profile requires kappa > 0");
        if (!(M > 0)) throw std::invalid_argument("profile requires M > 0");
    }
};

// main-term sum for C(n) = c(Kn), in the log domain
struct AsymptoticEstimate {
    Real log_value;
    long term_count;
    Real error_exponent; // the O-term decays like n^{error_exponent} times e^{2 sqrt(AKn)}
};

// 1/(q^t;q^t)_infty^r:  F(e^{-z}) ~ (tz/2pi)^{r/2} e^{pi^2 r/(6tz)}, so
// A = pi^2 r/(6t), B = r/2, K = t, alpha_0 = (t/2pi)^{r/2}. The minor-arc
// bound gives kappa = r (1 - 1/sqrt(M^2+1)) / t.
inline WrightProfile profile_coloured_partitions(long r, long t, const Real& M = 1) {
    if (r < 1 || t < 1) throw std::invalid_argument("profile requires r >= 1, t >= 1");
    WrightProfile pr;
    pr.A = pi_r() * pi_r() * r / (6 * Real(t));
    pr.B = Real(r) / 2;
    pr.K = t;
    pr.alphas = {pow(Real(t) / (2 * pi_r()), Real(r) / 2)};
    pr.M = M;
    pr.kappa = Real(r) * (1 - 1 / sqrt(M * M + 1)) / Real(t);
    pr.validate();
    return pr;
}

// 1/(q^a;q^p)_infty, p prime, 1 <= a < p:
//   G(e^{-z}) ~ (Gamma(a/p)/sqrt(2pi)) (pz)^{a/p - 1/2} e^{pi^2/(6pz)},
// so A = pi^2/(6p), B = a/p - 1/2, K = 1,
// alpha_0 = Gamma(a/p) p^{a/p-1/2} / sqrt(2pi), and the minor-arc bound gives
// kappa = (1 - 1/sqrt(M^2+1)) / p.
inline WrightProfile profile_shifted_pochhammer(long a, long p, const Real& M = 1) {
    if (!is_prime(p)) throw std::invalid_argument("profile requires p prime");
    if (a < 1 || a >= p) throw std::invalid_argument("profile requires 1 <= a < p");
    WrightProfile pr;
    const Real ap = Real(a) / Real(p);
    pr.A = pi_r() * pi_r() / (6 * Real(p));
    pr.B = ap - Real(1) / 2;
    pr.K = 1;
    pr.alphas = {exp(lgamma_r(ap) + (ap - Real(1) / 2) * log(Real(p)) - log_2pi_r() / 2)};
    pr.M = M;
    pr.kappa = (1 - 1 / sqrt(M * M + 1)) / Real(p);
    pr.validate();
    return pr;
}

// C(n) ≈ sum_{j<N} alpha_j (A/(Kn))^{(j+B+1)/2} I_{-(j+B+1)}(2 sqrt(AKn)),
// combined by sign-aware log-sum-exp.
inline AsymptoticEstimate wright_estimate(const WrightProfile& pr, long n, long terms) {
    pr.validate();
    if (n < 1) throw std::domain_error("wright_estimate requires n >= 1");
    if (terms < 1 || terms > static_cast<long>(pr.alphas.size()))
        throw std::invalid_argument("wright_estimate: terms must be in [1, #alphas]");
    const Real z = 2 * sqrt(pr.A * pr.K * Real(n));
    const Real logAKn = log(pr.A) - log(Real(pr.K) * Real(n));

    std::vector<Real> lt;
    std::vector<int> sg;
    for (long j = 0; j < terms; ++j) {
        const Real& aj = pr.alphas[static_cast<std::size_t>(j)];
        if (aj == 0) continue;
        const Real order = -(Real(j) + pr.B + 1);
        SignedLog ib = bessel_I_signed_log(order, z);
        if (ib.sign == 0) continue;
        lt.push_back(log(abs(aj)) + (Real(j) + pr.B + 1) / 2 * logAKn + ib.log_abs);
        sg.push_back((aj > 0 ? 1 : -1) * ib.sign);
    }
    if (lt.empty()) throw std::domain_error("wright_estimate: all terms vanish");
    Real mx = lt[0];
    for (const auto& v : lt) mx = std::max(mx, v);
    Real acc = 0;
    for (std::size_t i = 0; i < lt.size(); ++i) acc += Real(sg[i]) * exp(lt[i] - mx);
    if (acc <= 0) throw std::domain_error("wright_estimate: main-term sum is not positive");
    return AsymptoticEstimate{mx + log(acc), terms, -(Real(terms) + pr.B + 1) / 2};
}

inline GrowthModel growth_model(const WrightProfile& pr) {
    pr.validate();
    return GrowthModel{pr.A, pr.B, pr.K, GrowthModel::Convention::as_stated};
}

inline GrowthModel growth_model_calibrated(const WrightProfile& pr) {
    pr.validate();
    return GrowthModel{pr.A, pr.B, pr.K, GrowthModel::Convention::calibrated};
}

} // namespace qjensen
