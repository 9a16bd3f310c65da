#pragma once

// Foundational special functions and exact combinatorial tables: harmonic
// numbers, generalized binomial coefficients, digamma, the Lerch transcendent
// Phi(t,1,a), polylogarithms, integer zeta values and signed Stirling numbers
// of the first kind.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "hb/series.hpp"

namespace hb {

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double gamma_three_quarters = 1.22541670246517764512909830336289053;

/// H_n = 1 + 1/2 + ... + 1/n, summed smallest-term-first.  H_0 = 0.
inline double harmonic(long n) {
    double s = 0.0;
    for (long k = n; k >= 1; --k) s += 1.0 / static_cast<double>(k);
    return s;
}

/// Generalized binomial coefficient binom(z,n) = z(z-1)...(z-n+1)/n! via the
/// running product prod (z-k)/(k+1).  Entire in z; exactly 1 at n = 0 and
/// exactly 0 for nonnegative integer z < n.
inline cplx binomial_z(cplx z, long n) {
    cplx p{1.0, 0.0};
    for (long k = 0; k < n; ++k)
        p *= (z - static_cast<double>(k)) / static_cast<double>(k + 1);
    return p;
}

/// binom(n+z,n), computed as (-1)^n binom(-z-1,n).
inline cplx binomial_shifted(cplx z, long n) {
    const cplx b = binomial_z(-z - 1.0, n);
    return (n % 2 == 0) ? b : -b;
}

/// Ordinary binomial coefficient C(n,k) as a double (exact for all values
/// representable in 53 bits).
inline double choose(long n, long k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double p = 1.0;
    for (long i = 1; i <= k; ++i)
        p = p * static_cast<double>(n - k + i) / static_cast<double>(i);
    return p;
}

namespace detail {

inline bool near_integer(double x, double eps) { return std::abs(x - std::round(x)) <= eps; }

// z within eps of a nonpositive integer (digamma/Lerch pole lattice).
inline bool near_nonpositive_integer(cplx z, double eps) {
    return std::abs(z.imag()) <= eps && z.real() <= 0.5 && near_integer(z.real(), eps);
}

inline bool near_negative_integer(cplx z, double eps) {
    return std::abs(z.imag()) <= eps && z.real() <= -0.5 && near_integer(z.real(), eps);
}

inline bool near_positive_integer(cplx z, double eps) {
    return std::abs(z.imag()) <= eps && z.real() >= 0.5 && near_integer(z.real(), eps);
}

inline bool is_exact_integer(cplx z) {
    return z.imag() == 0.0 && z.real() == std::round(z.real()) && std::abs(z.real()) < 1e15;
}

} // namespace detail

/// Digamma psi(z) for complex z.  Upward recurrence psi(z) = psi(z+1) - 1/z
/// until Re z >= 12, then the asymptotic expansion with 8 Bernoulli terms.
/// Throws pole_error within 1e-12 of a nonpositive integer.
inline cplx digamma(cplx z) {
    if (detail::near_nonpositive_integer(z, 1e-12))
        throw pole_error("digamma: pole at nonpositive integer");
    cplx acc{0.0, 0.0};
    while (z.real() < 12.0) {
        acc -= 1.0 / z;
        z += 1.0;
    }
    // B_{2k}/(2k) for k = 1..8
    static constexpr double c[8] = {1.0 / 12.0,     -1.0 / 120.0,    1.0 / 252.0,
                                    -1.0 / 240.0,   1.0 / 132.0,     -691.0 / 32760.0,
                                    1.0 / 12.0,     -3617.0 / 8160.0};
    const cplx w = 1.0 / (z * z);
    cplx tail{0.0, 0.0};
    cplx wk = w;
    for (int k = 0; k < 8; ++k) {
        tail += c[k] * wk;
        wk *= w;
    }
    return acc + std::log(z) - 0.5 / z - tail;
}

namespace detail {

inline SeriesResult lerch_direct(double t, cplx a, double tol, long cap) {
    SeriesResult res;
    cplx sum{0.0, 0.0};
    double tn = 1.0;
    const double at = std::abs(t);
    for (long n = 0; n < cap; ++n) {
        sum += tn / (static_cast<double>(n) + a);
        res.terms_used = n + 1;
        const double denom = (1.0 - at) * std::abs(static_cast<double>(n) + 1.0 + a.real());
        tn *= t;
        if (denom > 0.0) {
            const double bound = std::pow(at, static_cast<double>(n) + 1.0) / denom;
            if (bound <= tol * std::max(1.0, std::abs(sum))) {
                res.value = sum;
                res.abs_error_estimate = bound;
                res.converged = true;
                return res;
            }
        }
    }
    res.value = sum;
    res.abs_error_estimate = std::pow(at, static_cast<double>(cap)) / (1.0 - at);
    res.converged = false;
    return res;
}

} // namespace detail

/// Lerch transcendent Phi(t,1,a) = sum_{n>=0} t^n/(n+a) for |t| < 1.
/// Iterated Aitken acceleration kicks in for |t| > 0.75 (the closed forms
/// feed t = 1-x, which approaches 1); falls back to direct summation with a
/// 10^7-term cap when the extrapolation does not settle.
inline SeriesResult lerch_phi1(double t, cplx a, double tol = 1e-13) {
    if (std::abs(t) >= 1.0) throw domain_error("lerch_phi1: requires |t| < 1");
    if (detail::near_nonpositive_integer(a, 1e-12))
        throw pole_error("lerch_phi1: pole at nonpositive integer a");
    if (t == 0.0) {
        SeriesResult res;
        res.value = 1.0 / a;
        res.terms_used = 1;
        res.converged = true;
        return res;
    }
    if (std::abs(t) <= 0.75) return detail::lerch_direct(t, a, tol, default_max_terms());

    std::vector<cplx> sums;
    sums.reserve(512);
    cplx sum{0.0, 0.0};
    double tn = 1.0;
    cplx prev_acc{0.0, 0.0};
    bool have_prev = false;
    int stable = 0;
    for (long n = 0; n < 5000; ++n) {
        sum += tn / (static_cast<double>(n) + a);
        tn *= t;
        sums.push_back(sum);
        if (sums.size() >= 12 && sums.size() % 10 == 0) {
            const std::size_t k = std::min<std::size_t>(sums.size(), 40);
            std::vector<cplx> window(sums.end() - k, sums.end());
            cplx acc;
            try {
                acc = aitken_accelerate(window);
            } catch (const degenerate_difference_error&) {
                break;
            }
            if (have_prev) {
                const double diff = std::abs(acc - prev_acc);
                if (diff <= tol * std::max(1.0, std::abs(acc))) {
                    if (++stable >= 2) {
                        SeriesResult res;
                        res.value = acc;
                        res.abs_error_estimate = std::max(diff, 1e-16 * std::abs(acc));
                        res.terms_used = n + 1;
                        res.converged = true;
                        return res;
                    }
                } else {
                    stable = 0;
                }
            }
            prev_acc = acc;
            have_prev = true;
        }
    }
    return detail::lerch_direct(t, a, tol, 10000000L);
}

/// zeta(k) for integer k >= 2 by direct summation with an Euler-Maclaurin
/// integral tail correction (error well below 1e-13).
inline double zeta_int(int k) {
    if (k < 2) throw domain_error("zeta_int: requires k >= 2");
    constexpr int cutoff = 100;
    double s = 0.0;
    for (int n = cutoff; n >= 1; --n) s += std::pow(static_cast<double>(n), -k);
    const double N = cutoff;
    const double fN = std::pow(N, -k);
    // sum_{n>N} n^-k = N^(1-k)/(k-1) - f(N)/2 - f'(N)/12 + f'''(N)/720 - ...
    s += std::pow(N, 1 - k) / (k - 1) - 0.5 * fN + k * fN / (12.0 * N) -
         k * (k + 1) * (k + 2) * fN / (720.0 * N * N * N);
    return s;
}

/// Polylogarithm Li_k(y) = sum_{n>=1} y^n/n^k for |y| < 1, or y = 1 with
/// k >= 2 (zeta value).
inline SeriesResult polylog(int k, double y, double tol = 1e-14) {
    if (k < 1) throw domain_error("polylog: requires k >= 1");
    if (y == 1.0) {
        if (k < 2) throw domain_error("polylog: Li_1(1) diverges");
        SeriesResult res;
        res.value = zeta_int(k);
        res.abs_error_estimate = 1e-14;
        res.terms_used = 100;
        res.converged = true;
        return res;
    }
    if (std::abs(y) >= 1.0) throw domain_error("polylog: requires |y| < 1");
    SeriesResult res;
    if (y == 0.0) {
        res.converged = true;
        return res;
    }
    double yn = 1.0;
    double sum = 0.0;
    const double ay = std::abs(y);
    for (long n = 1; n <= default_max_terms(); ++n) {
        yn *= y;
        const double term = yn / std::pow(static_cast<double>(n), k);
        sum += term;
        res.terms_used = n;
        const double bound = std::abs(term) * ay / (1.0 - ay);
        if (bound <= tol * std::max(1.0, std::abs(sum)) && n >= 3) {
            res.value = sum;
            res.abs_error_estimate = bound;
            res.converged = true;
            return res;
        }
    }
    res.value = sum;
    res.abs_error_estimate = std::abs(yn) / (1.0 - ay);
    return res;
}

/// Triangular table of signed Stirling numbers of the first kind,
/// s(n,k) = coefficient of z^k in z(z-1)...(z-n+1).  Exact 64-bit integers;
/// max_n capped at 20 (row 20 entries reach 19! and stay in range).
class StirlingTable {
  public:
    explicit StirlingTable(int max_n) : max_n_(max_n) {
        if (max_n < 0 || max_n > 20)
            throw range_error("StirlingTable: max_n must be in [0, 20]");
        rows_.resize(max_n + 1);
        rows_[0] = {1};
        for (int n = 0; n < max_n; ++n) {
            rows_[n + 1].assign(n + 2, 0);
            for (int k = 0; k <= n + 1; ++k) {
                const std::int64_t a = (k >= 1) ? rows_[n][k - 1] : 0;
                const std::int64_t b = (k <= n) ? rows_[n][k] : 0;
                rows_[n + 1][k] = a - static_cast<std::int64_t>(n) * b;
            }
        }
    }

    int max_n() const { return max_n_; }

    std::int64_t operator()(int n, int k) const {
        if (n < 0 || n > max_n_ || k < 0 || k > n)
            throw range_error("StirlingTable: index out of range");
        return rows_[n][k];
    }

  private:
    int max_n_;
    std::vector<std::vector<std::int64_t>> rows_;
};

inline StirlingTable stirling_first(int max_n) { return StirlingTable(max_n); }

/// sum_{n>=1} (-1)^{n-k} s(n,k)/(n! n)  ( = zeta(k+1) analytically).
///
/// The summand equals [n,k]/(n! n) with unsigned Stirling numbers; it is
/// evaluated through the stable ratio recurrence t(n,k) = [n,k]/n! up to
/// big_n terms, then closed with an Euler-Maclaurin tail built from the
/// asymptotic t(n,k) ~ e_{k-1}(1,...,1/(n-1))/n with H_n ~ log n + gamma.
inline double stirling_zeta_series(int k, long big_n = 1000000) {
    if (k < 1 || k > 6) throw range_error("stirling_zeta_series: k must be in [1, 6]");

    std::vector<double> t(k + 1, 0.0);
    t[1] = 1.0; // t(1,1) = [1,1]/1! = 1
    double sum = (k == 1) ? 1.0 : 0.0;
    double comp = 0.0; // Kahan carry
    for (long n = 1; n < big_n; ++n) {
        const double dn = static_cast<double>(n);
        for (int j = k; j >= 1; --j) t[j] = (t[j - 1] + dn * t[j]) / (dn + 1.0);
        const double term = t[k] / (dn + 1.0);
        const double y = term - comp;
        const double s2 = sum + y;
        comp = (s2 - sum) - y;
        sum = s2;
    }

    // e_{k-1} as a polynomial in u = H ~ log x + gamma via Newton's identities
    // with the higher power sums frozen at zeta(i).
    std::vector<std::vector<double>> e(k);
    e[0] = {1.0};
    for (int j = 1; j < k; ++j) {
        std::vector<double> acc(j + 1, 0.0);
        for (int i = 1; i <= j; ++i) {
            const double sign = (i % 2 == 1) ? 1.0 : -1.0;
            if (i == 1) {
                for (std::size_t m = 0; m < e[j - 1].size(); ++m)
                    acc[m + 1] += sign * e[j - 1][m];
            } else {
                const double zi = zeta_int(i);
                for (std::size_t m = 0; m < e[j - i].size(); ++m)
                    acc[m] += sign * zi * e[j - i][m];
            }
        }
        for (double& c : acc) c /= j;
        e[j] = std::move(acc);
    }
    const std::vector<double>& g = e[k - 1];

    const double N = static_cast<double>(big_n);
    const double uN = std::log(N) + euler_gamma;
    // I_m = int_N^inf (log x + gamma)^m / x^2 dx = (1/N) sum_i (m!/i!) uN^i
    double integral = 0.0;
    for (std::size_t m = 0; m < g.size(); ++m) {
        double im = 0.0;
        double fact = 1.0;
        for (std::size_t i = 1; i <= m; ++i) fact *= static_cast<double>(i); // m!
        double upow = 1.0;
        double ifact = 1.0;
        for (std::size_t i = 0; i <= m; ++i) {
            im += fact / ifact * upow;
            upow *= uN;
            ifact *= static_cast<double>(i + 1);
        }
        integral += g[m] * im / N;
    }
    double gN = 0.0, gpN = 0.0, upow = 1.0;
    for (std::size_t m = 0; m < g.size(); ++m) {
        gN += g[m] * upow;
        if (m + 1 < g.size()) gpN += g[m + 1] * static_cast<double>(m + 1) * upow;
        upow *= uN;
    }
    const double tail = integral - gN / (2.0 * N * N) - (gpN - 2.0 * gN) / (12.0 * N * N * N);
    return sum + tail;
}

} // namespace hb
