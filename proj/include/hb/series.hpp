#pragma once

// Generic summation machinery: partial summation with tail estimation,
// Aitken extrapolation, Abel means and adaptive quadrature.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <limits>
#include <vector>

#include "hb/errors.hpp"

namespace hb {

using cplx = std::complex<double>;

struct SeriesResult {
    cplx value{0.0, 0.0};
    double abs_error_estimate = 0.0;
    long terms_used = 0;
    bool converged = false;
};

// Produces term n for n = 1, 2, ...  Must be deterministic and side-effect free.
using TermGenerator = std::function<cplx(long)>;

// Series cap, overridable through HB_MAX_TERMS.
inline long default_max_terms() {
    static const long cap = [] {
        if (const char* s = std::getenv("HB_MAX_TERMS")) {
            const long v = std::atol(s);
            if (v > 0) return v;
        }
        return 1000000L;
    }();
    return cap;
}

/// Sums terms(1) + terms(2) + ... until the stopping rule fires.
///
/// Stopping rule: |term_n| <= tol*max(1,|S_n|) for 3 consecutive n and the
/// geometric tail bound |term_n|*rho/(1-rho) <= tol*max(1,|S_n|), with rho the
/// observed recent term ratio capped at 0.99.  Real series with strictly
/// alternating signs and shrinking magnitudes additionally use the midpoint
/// (S_{n-1}+S_n)/2 with consecutive-midpoint agreement as the error estimate.
inline SeriesResult partial_sum(const TermGenerator& terms, double tol,
                                long max_terms = default_max_terms()) {
    SeriesResult res;
    cplx sum{0.0, 0.0};
    double prev_mag = 0.0;
    double prev_prev_mag = 0.0;
    int small_streak = 0;

    bool alternating = true;
    int shrink_streak = 0;
    double last_sign = 0.0;
    cplx mid{0.0, 0.0};
    cplx prev_mid{0.0, 0.0};
    bool have_mid = false, have_prev_mid = false;

    for (long n = 1; n <= max_terms; ++n) {
        const cplx prev_sum = sum;
        const cplx t = terms(n);
        sum += t;
        res.terms_used = n;
        const double mag = std::abs(t);
        const double scale = std::max(1.0, std::abs(sum));

        if (alternating) {
            if (t.imag() != 0.0 || t.real() == 0.0) {
                alternating = false;
            } else {
                const double sign = t.real() > 0.0 ? 1.0 : -1.0;
                if (n > 1 && sign == last_sign) alternating = false;
                last_sign = sign;
            }
        }
        if (alternating && n >= 2) {
            shrink_streak = (mag <= prev_mag) ? shrink_streak + 1 : 0;
            prev_mid = mid;
            have_prev_mid = have_mid;
            mid = prev_sum + 0.5 * t;
            have_mid = true;
            if (have_prev_mid && shrink_streak >= 3) {
                const double est = std::abs(mid - prev_mid);
                if (est <= tol * scale) {
                    res.value = mid;
                    res.abs_error_estimate = est;
                    res.converged = true;
                    return res;
                }
            }
        }

        small_streak = (mag <= tol * scale) ? small_streak + 1 : 0;
        if (small_streak >= 3 && n >= 2) {
            double rho = prev_mag > 0.0 ? mag / prev_mag : 0.0;
            if (prev_prev_mag > 0.0) rho = std::max(rho, prev_mag / prev_prev_mag);
            rho = std::min(rho, 0.99);
            const double tail = mag * rho / (1.0 - rho);
            if (tail <= tol * scale) {
                res.value = sum;
                res.abs_error_estimate = std::max(tail, mag);
                res.converged = true;
                return res;
            }
        }
        prev_prev_mag = prev_mag;
        prev_mag = mag;
    }

    res.value = sum;
    res.abs_error_estimate = std::max(prev_mag, prev_mag * 0.99 / 0.01);
    res.converged = false;
    return res;
}

/// Iterated Aitken delta-squared extrapolation of a partial-sum sequence.
/// Returns the deepest stable diagonal entry.  Throws
/// degenerate_difference_error if consecutive input sums coincide.
inline cplx aitken_accelerate(const std::vector<cplx>& partial_sums) {
    if (partial_sums.size() < 3)
        throw domain_error("aitken_accelerate: need at least 3 partial sums");
    for (std::size_t i = 0; i + 1 < partial_sums.size(); ++i)
        if (partial_sums[i + 1] == partial_sums[i])
            throw degenerate_difference_error(
                "aitken_accelerate: zero consecutive difference in input");

    std::vector<cplx> cur = partial_sums;
    cplx best = cur.back();
    while (cur.size() >= 3) {
        std::vector<cplx> next;
        next.reserve(cur.size() - 2);
        for (std::size_t i = 0; i + 2 < cur.size(); ++i) {
            const cplx d1 = cur[i + 1] - cur[i];
            const cplx d2 = cur[i + 2] - cur[i + 1];
            const cplx den = d2 - d1;
            const double scale = std::abs(cur[i + 2]) + 1.0;
            if (std::abs(den) <= scale * 1e-300) return best;
            next.push_back(cur[i + 2] - d2 * d2 / den);
        }
        if (next.empty()) break;
        best = next.back();
        cur = std::move(next);
    }
    return best;
}

/// Abel mean of sum a_n: evaluates sum a_n r^n on the fixed schedule
/// r = 0.9, 0.99, 0.999, 0.9999 and Richardson-extrapolates in (1-r).
inline SeriesResult abel_mean(const TermGenerator& terms, double tol) {
    constexpr double radii[4] = {0.9, 0.99, 0.999, 0.9999};
    const double inner_tol = std::max(tol * 1e-2, 1e-13);

    cplx table[4][4];
    SeriesResult res;
    double inner_err = 0.0;
    bool inner_ok = true;
    for (int i = 0; i < 4; ++i) {
        const double r = radii[i];
        const SeriesResult s = partial_sum(
            [&terms, r](long n) { return terms(n) * std::pow(r, static_cast<double>(n)); },
            inner_tol, 10 * default_max_terms());
        table[i][0] = s.value;
        res.terms_used += s.terms_used;
        inner_err += s.abs_error_estimate;
        inner_ok = inner_ok && s.converged;
    }
    // Neville elimination in h = 1-r, step ratio 10, order 3.
    for (int j = 1; j < 4; ++j) {
        const double f = std::pow(10.0, j) - 1.0;
        for (int i = 3; i >= j; --i)
            table[i][j] = table[i][j - 1] + (table[i][j - 1] - table[i - 1][j - 1]) / f;
    }
    res.value = table[3][3];
    const double step_err =
        std::abs(table[3][3] - table[3][2]) + std::abs(table[3][3] - table[2][2]);
    res.abs_error_estimate = step_err + inner_err;
    res.converged =
        inner_ok && step_err <= std::max(tol, 1e-6) * std::max(1.0, std::abs(res.value));
    return res;
}

namespace detail {

inline cplx finite_or_zero(const std::function<cplx(double)>& f, double x) {
    const cplx v = f(x);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return {0.0, 0.0};
    return v;
}

struct QuadWork {
    const std::function<cplx(double)>& f;
    long evals = 0;
    double err_sum = 0.0;
    bool ok = true;
};

inline cplx simpson_step(QuadWork& w, double a, double b, cplx fa, cplx fm, cplx fb,
                         cplx whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const cplx flm = finite_or_zero(w.f, 0.5 * (a + m));
    const cplx frm = finite_or_zero(w.f, 0.5 * (m + b));
    w.evals += 2;
    const cplx left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const cplx right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const cplx delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol) {
        w.err_sum += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    if (depth <= 0) {
        w.ok = false;
        w.err_sum += std::abs(delta);
        return left + right;
    }
    return simpson_step(w, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_step(w, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature of a real-to-complex integrand.
/// Non-finite samples (integrable endpoint singularities) are treated as zero;
/// refinement then resolves the neighbourhood.  Max depth exceeded clears the
/// converged flag.
inline SeriesResult adaptive_quadrature(const std::function<cplx(double)>& f, double a,
                                        double b, double tol) {
    SeriesResult res;
    if (a == b) {
        res.converged = true;
        res.terms_used = 0;
        return res;
    }
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    detail::QuadWork w{f};
    const cplx fa = detail::finite_or_zero(f, a);
    const cplx fb = detail::finite_or_zero(f, b);
    const cplx fm = detail::finite_or_zero(f, 0.5 * (a + b));
    w.evals = 3;
    const cplx whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    res.value = sign * detail::simpson_step(w, a, b, fa, fm, fb, whole, tol, 60);
    res.abs_error_estimate = w.err_sum;
    res.terms_used = w.evals;
    res.converged = w.ok;
    return res;
}

} // namespace hb
