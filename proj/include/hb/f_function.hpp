#pragma once

// The two-variable function F(z,x) = sum binom(z,n)(-1)^{n-1} x^n / n,
// evaluated through four independent strategies (defining series, digamma +
// Lerch closed forms, integral representation, functional equation) plus its
// Taylor expansion in z, behind an auto-dispatching front door.

#include <cmath>
#include <complex>
#include <string>

#include "hb/special.hpp"

namespace hb {

enum class MethodChoice {
    Series,
    ClosedPos,
    ClosedNeg,
    Integral,
    FunctionalEq,
    FiniteInteger,
    AtOne,
    Auto,
};

inline std::string to_string(MethodChoice m) {
    switch (m) {
        case MethodChoice::Series: return "series";
        case MethodChoice::ClosedPos: return "closed_pos";
        case MethodChoice::ClosedNeg: return "closed_neg";
        case MethodChoice::Integral: return "integral";
        case MethodChoice::FunctionalEq: return "functional_eq";
        case MethodChoice::FiniteInteger: return "finite_integer";
        case MethodChoice::AtOne: return "at_one";
        case MethodChoice::Auto: return "auto";
    }
    return "auto";
}

inline MethodChoice method_from_string(const std::string& s) {
    if (s == "series") return MethodChoice::Series;
    if (s == "closed_pos" || s == "closed-pos") return MethodChoice::ClosedPos;
    if (s == "closed_neg" || s == "closed-neg") return MethodChoice::ClosedNeg;
    if (s == "integral") return MethodChoice::Integral;
    if (s == "functional_eq" || s == "functional-eq") return MethodChoice::FunctionalEq;
    if (s == "finite_integer" || s == "finite-integer") return MethodChoice::FiniteInteger;
    if (s == "at_one" || s == "at-one") return MethodChoice::AtOne;
    if (s == "auto") return MethodChoice::Auto;
    throw domain_error("unknown method: " + s);
}

struct FEvalRequest {
    cplx z{0.0, 0.0};
    double x = 0.0;
    MethodChoice method = MethodChoice::Auto;
    double tol = 1e-12;
};

struct FEvalResult {
    SeriesResult result;
    MethodChoice method = MethodChoice::Auto;
};

// Dispatcher-level pole proximity.
inline constexpr double pole_eps = 1e-8;

/// Exact finite form for positive integer z = p:
/// F(p,x) = H_p - sum_{k=1..p} (1-x)^k / k.
inline cplx f_finite_integer(long p, double x) {
    if (p < 1) throw domain_error("f_finite_integer: requires p >= 1");
    double s = 0.0;
    double yk = 1.0;
    const double y = 1.0 - x;
    for (long k = 1; k <= p; ++k) {
        yk *= y;
        s += yk / static_cast<double>(k);
    }
    return cplx{harmonic(p) - s, 0.0};
}

/// Direct summation of the defining series.  Admissible for |x| < 1, or
/// |x| = 1 with Re z > 0; exact positive-integer z at |x| = 1 routes to the
/// finite form.
inline SeriesResult f_series(cplx z, double x, double tol) {
    if (x == 0.0 || z == cplx{0.0, 0.0}) {
        SeriesResult res;
        res.converged = true;
        return res;
    }
    if (std::abs(x) >= 1.0) {
        if (std::abs(x) > 1.0) throw domain_error("f_series: requires |x| <= 1");
        if (detail::is_exact_integer(z) && z.real() >= 1.0) {
            SeriesResult res;
            res.value = f_finite_integer(static_cast<long>(z.real()), x);
            res.terms_used = static_cast<long>(z.real());
            res.converged = true;
            return res;
        }
        if (z.real() <= 0.0) throw domain_error("f_series: |x| = 1 requires Re z > 0");
    }
    // Running binomial product keeps each term O(1).
    return partial_sum(
        [z, x, b = cplx{1.0, 0.0}, xn = 1.0](long n) mutable {
            b *= (z - static_cast<double>(n - 1)) / static_cast<double>(n);
            xn *= x;
            const double sgn = (n % 2 == 1) ? 1.0 : -1.0;
            return b * sgn * xn / static_cast<double>(n);
        },
        tol);
}

/// F(z,1) = psi(z+1) + gamma, by analytic continuation for all z except
/// negative integers.
inline cplx f_at_one(cplx z) {
    if (detail::near_negative_integer(z, pole_eps))
        throw pole_error("f_at_one: pole at negative integer z");
    return digamma(z + 1.0) + euler_gamma;
}

/// Closed form for 0 < x <= 1 (z not a negative integer):
/// psi(z+1) + gamma + log x + (1-x)^{z+1} Phi(1-x, 1, z+1).
inline SeriesResult f_closed_pos(cplx z, double x, double tol) {
    if (x <= 0.0 || x > 1.0) throw domain_error("f_closed_pos: requires 0 < x <= 1");
    if (detail::near_negative_integer(z, pole_eps))
        throw pole_error("f_closed_pos: pole at negative integer z");
    if (z == cplx{0.0, 0.0} && x < 1.0) {
        SeriesResult res;
        res.converged = true;
        return res;
    }
    const cplx head = digamma(z + 1.0) + euler_gamma;
    if (x == 1.0) {
        SeriesResult res;
        res.value = head;
        res.abs_error_estimate = 1e-14 * (1.0 + std::abs(head));
        res.terms_used = 1;
        res.converged = true;
        return res;
    }
    SeriesResult phi = lerch_phi1(1.0 - x, z + 1.0, tol);
    const cplx scale = std::pow(cplx{1.0 - x, 0.0}, z + 1.0);
    phi.value = head + std::log(x) + scale * phi.value;
    phi.abs_error_estimate = phi.abs_error_estimate * std::abs(scale) +
                             1e-15 * (1.0 + std::abs(phi.value));
    return phi;
}

/// Closed form for -1 <= x < 0 (z not a positive integer):
/// psi(1-z) + gamma + log(-x) + (1-(1-x)^z)/z + (1-x)^{z-1} Phi(1/(1-x), 1, 1-z).
inline SeriesResult f_closed_neg(cplx z, double x, double tol) {
    if (x >= 0.0 || x < -1.0) throw domain_error("f_closed_neg: requires -1 <= x < 0");
    if (z == cplx{0.0, 0.0}) {
        SeriesResult res;
        res.converged = true;
        return res;
    }
    if (detail::near_positive_integer(z, pole_eps))
        throw pole_error("f_closed_neg: pole at positive integer z");
    const double y = 1.0 - x; // in (1, 2]
    SeriesResult phi = lerch_phi1(1.0 / y, 1.0 - z, tol);
    const cplx yz = std::pow(cplx{y, 0.0}, z);
    const cplx value = digamma(1.0 - z) + euler_gamma + std::log(-x) + (1.0 - yz) / z +
                       yz / y * phi.value;
    phi.value = value;
    phi.abs_error_estimate = phi.abs_error_estimate * std::abs(yz / y) +
                             1e-15 * (1.0 + std::abs(value));
    return phi;
}

/// Integral representation: adaptive quadrature of
/// int_0^x (1 - (1-t)^z)/t dt, with the removable t = 0 singularity patched
/// to the limit value z.  Admissible for |x| < 1, extended to x = 1 when
/// Re z > -1.
inline SeriesResult f_integral(cplx z, double x, double tol) {
    if (std::abs(x) > 1.0 || x == -1.0 || (x == 1.0 && z.real() <= -1.0))
        throw domain_error("f_integral: x out of range");
    if (x == 0.0 || z == cplx{0.0, 0.0}) {
        SeriesResult res;
        res.converged = true;
        return res;
    }
    auto integrand = [z](double t) -> cplx {
        if (t == 0.0) return z;
        return (1.0 - std::pow(cplx{1.0 - t, 0.0}, z)) / t;
    };
    return adaptive_quadrature(integrand, 0.0, x, tol);
}

inline SeriesResult f_functional_eq(cplx z, double x, double tol);

/// Auto-dispatching evaluator.  Shortcuts z = 0 / x = 0 to an exact zero,
/// routes exact positive-integer z to the finite form, x = 1 to the digamma
/// value, and otherwise prefers the closed forms with series and
/// functional-equation fallbacks.  Throws no_admissible_method_error when
/// every strategy's precondition fails.
inline FEvalResult f_eval(const FEvalRequest& req) {
    const cplx z = req.z;
    const double x = req.x;
    const double tol = req.tol;
    if (std::abs(x) > 1.0) throw domain_error("f_eval: requires -1 <= x <= 1");

    auto wrap = [](SeriesResult r, MethodChoice m) { return FEvalResult{r, m}; };

    if (req.method != MethodChoice::Auto) {
        switch (req.method) {
            case MethodChoice::Series: return wrap(f_series(z, x, tol), MethodChoice::Series);
            case MethodChoice::ClosedPos:
                return wrap(f_closed_pos(z, x, tol), MethodChoice::ClosedPos);
            case MethodChoice::ClosedNeg:
                return wrap(f_closed_neg(z, x, tol), MethodChoice::ClosedNeg);
            case MethodChoice::Integral:
                return wrap(f_integral(z, x, tol), MethodChoice::Integral);
            case MethodChoice::FunctionalEq:
                return wrap(f_functional_eq(z, x, tol), MethodChoice::FunctionalEq);
            case MethodChoice::FiniteInteger: {
                if (!detail::is_exact_integer(z) || z.real() < 1.0)
                    throw domain_error("f_eval: finite_integer requires positive integer z");
                SeriesResult r;
                r.value = f_finite_integer(static_cast<long>(z.real()), x);
                r.converged = true;
                return wrap(r, MethodChoice::FiniteInteger);
            }
            case MethodChoice::AtOne: {
                if (x != 1.0) throw domain_error("f_eval: at_one requires x = 1");
                SeriesResult r;
                r.value = f_at_one(z);
                r.abs_error_estimate = 1e-14 * (1.0 + std::abs(r.value));
                r.converged = true;
                return wrap(r, MethodChoice::AtOne);
            }
            default: break;
        }
    }

    if (z == cplx{0.0, 0.0} || x == 0.0) {
        SeriesResult r;
        r.converged = true;
        return wrap(r, MethodChoice::Series);
    }
    if (detail::is_exact_integer(z) && z.real() >= 1.0) {
        SeriesResult r;
        r.value = f_finite_integer(static_cast<long>(z.real()), x);
        r.converged = true;
        return wrap(r, MethodChoice::FiniteInteger);
    }
    if (x == 1.0) {
        try {
            SeriesResult r;
            r.value = f_at_one(z);
            r.abs_error_estimate = 1e-14 * (1.0 + std::abs(r.value));
            r.converged = true;
            return wrap(r, MethodChoice::AtOne);
        } catch (const pole_error&) {
            if (z.real() > 0.0) return wrap(f_series(z, x, tol), MethodChoice::Series);
            throw no_admissible_method_error("f_eval: no admissible method at x = 1");
        }
    }
    if (x > 0.0) {
        try {
            return wrap(f_closed_pos(z, x, tol), MethodChoice::ClosedPos);
        } catch (const pole_error&) {
            return wrap(f_series(z, x, tol), MethodChoice::Series);
        }
    }
    // -1 <= x < 0
    try {
        return wrap(f_closed_neg(z, x, tol), MethodChoice::ClosedNeg);
    } catch (const pole_error&) {
    }
    try {
        return wrap(f_series(z, x, tol), MethodChoice::Series);
    } catch (const domain_error&) {
    }
    try {
        return wrap(f_functional_eq(z, x, tol), MethodChoice::FunctionalEq);
    } catch (const domain_error&) {
        throw no_admissible_method_error("f_eval: no admissible method");
    }
}

/// Functional equation F(z,x) = log(1-x) + F(-z-1, -x/(1-x)) for
/// -1 <= x < 1/2.  The transplanted point is evaluated by a
/// non-functional-equation method.
inline SeriesResult f_functional_eq(cplx z, double x, double tol) {
    if (x < -1.0 || x >= 0.5) throw domain_error("f_functional_eq: requires -1 <= x < 1/2");
    const cplx zp = -z - 1.0;
    const double xp = -x / (1.0 - x); // lands in (-1, 1/2]

    SeriesResult inner;
    if (xp == 0.0 || zp == cplx{0.0, 0.0}) {
        inner.converged = true;
    } else if (detail::is_exact_integer(zp) && zp.real() >= 1.0) {
        inner.value = f_finite_integer(static_cast<long>(zp.real()), xp);
        inner.converged = true;
    } else if (xp > 0.0) {
        try {
            inner = f_closed_pos(zp, xp, tol);
        } catch (const pole_error&) {
            inner = f_series(zp, xp, tol);
        }
    } else {
        try {
            inner = f_closed_neg(zp, xp, tol);
        } catch (const pole_error&) {
            inner = f_series(zp, xp, tol);
        }
    }
    inner.value += std::log(1.0 - x);
    inner.abs_error_estimate += 1e-15 * (1.0 + std::abs(inner.value));
    return inner;
}

struct TaylorCoeff {
    double stirling_form = 0.0;
    double polylog_form = 0.0;
};

/// k-th Taylor coefficient c_k of F(z,x) in z at z = 0 (so F = sum c_k z^k),
/// computed two independent ways: the signed-Stirling-number series truncated
/// at the exact-table bound, and the polylogarithm/log-power closed form.
/// k is capped at 6; x must lie in [0, 1].
inline TaylorCoeff f_taylor_coeff(int k, double x) {
    if (k < 1) throw domain_error("f_taylor_coeff: requires k >= 1");
    if (k > 6) throw range_error("f_taylor_coeff: k capped at 6");
    if (x < 0.0 || x > 1.0) throw domain_error("f_taylor_coeff: requires 0 <= x <= 1");

    static const StirlingTable table(20);
    const double outer_sign = (k % 2 == 1) ? 1.0 : -1.0;

    TaylorCoeff c;
    if (x == 1.0) {
        c.stirling_form = outer_sign * stirling_zeta_series(k);
    } else {
        double s = 0.0;
        double fact = 1.0; // n!
        double xn = 1.0;
        for (int n = 1; n <= table.max_n(); ++n) {
            fact *= n;
            xn *= x;
            if (n < k) continue;
            const double sgn = ((n - k) % 2 == 0) ? 1.0 : -1.0;
            s += sgn * static_cast<double>(table(n, k)) * xn / (fact * n);
        }
        c.stirling_form = outer_sign * s;
    }

    if (x == 1.0) {
        c.polylog_form = outer_sign * zeta_int(k + 1);
    } else {
        double s = zeta_int(k + 1);
        const double L = std::log1p(-x);
        double lj = 1.0;  // L^j
        double jfact = 1.0;
        for (int j = 0; j <= k; ++j) {
            if (j > 0) {
                lj *= L;
                jfact *= j;
                if (lj == 0.0) break;
            }
            const double jsign = (j % 2 == 0) ? -1.0 : 1.0; // (-1)^{j-1}
            double li;
            const int order = k - j + 1;
            if (order == 1) {
                li = -std::log(x); // Li_1(1-x)
            } else {
                li = polylog(order, 1.0 - x).value.real();
            }
            s += jsign / jfact * li * lj;
        }
        c.polylog_form = outer_sign * s;
    }
    return c;
}

} // namespace hb
