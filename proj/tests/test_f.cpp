#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "hb/f_function.hpp"

using namespace hb;
using std::numbers::ln2;

TEST_CASE("defining series") {
    CHECK(f_series({2.7, 1.1}, 0.0, 1e-12).value == cplx{0.0, 0.0});
    CHECK(std::abs(f_series({-1.0, 0.0}, 0.5, 1e-13).value.real() + ln2) < 1e-12);
    CHECK(f_series({1.0, 0.0}, 0.5, 1e-13).value.real() == Catch::Approx(0.5));
    CHECK_THROWS_AS(f_series({-0.5, 0.0}, 1.0, 1e-12), domain_error);
}

TEST_CASE("finite integer form") {
    CHECK(f_finite_integer(2, 0.5).real() == Catch::Approx(7.0 / 8.0).epsilon(1e-14));
    CHECK(f_finite_integer(1, 1.0).real() == Catch::Approx(1.0));
    CHECK(f_finite_integer(2, -1.0).real() == Catch::Approx(-2.5));
}

TEST_CASE("closed form, positive x") {
    CHECK(f_closed_pos({1.0, 0.0}, 0.5, 1e-12).value.real() ==
          Catch::Approx(0.5).epsilon(1e-10));
    CHECK(std::abs(f_closed_pos({-0.5, 0.0}, 1.0, 1e-12).value.real() + 2 * ln2) < 1e-12);
    CHECK(f_closed_pos({0.0, 0.0}, 0.3, 1e-12).value == cplx{0.0, 0.0});
    CHECK_THROWS_AS(f_closed_pos({-2.0, 0.0}, 0.5, 1e-12), pole_error);
    CHECK_THROWS_AS(f_closed_pos({0.5, 0.0}, -0.1, 1e-12), domain_error);
}

TEST_CASE("closed form, negative x") {
    CHECK(std::abs(f_closed_neg({-1.0, 0.0}, -1.0, 1e-13).value.real() - ln2) < 1e-12);
    const cplx a = f_closed_neg({-0.5, 0.0}, -0.5, 1e-13).value;
    const cplx b = f_series({-0.5, 0.0}, -0.5, 1e-13).value;
    CHECK(std::abs(a - b) < 1e-11);
    CHECK(f_closed_neg({0.0, 0.0}, -0.7, 1e-12).value == cplx{0.0, 0.0});
    CHECK_THROWS_AS(f_closed_neg({2.0, 0.0}, -0.5, 1e-12), pole_error);
    CHECK_THROWS_AS(f_closed_neg({0.5, 0.0}, 0.1, 1e-12), domain_error);
}

TEST_CASE("integral representation") {
    CHECK(std::abs(f_integral({2.0, 0.0}, 0.5, 1e-12).value.real() - 7.0 / 8.0) < 1e-11);
    CHECK(f_integral({1.5, 0.5}, 0.0, 1e-12).value == cplx{0.0, 0.0});
    CHECK(std::abs(f_integral({-1.0, 0.0}, 0.5, 1e-12).value.real() + ln2) < 1e-10);
}

TEST_CASE("value at x = 1") {
    CHECK(f_at_one({3.0, 0.0}).real() == Catch::Approx(harmonic(3)).epsilon(1e-13));
    CHECK(std::abs(f_at_one({-0.5, 0.0}).real() + 2 * ln2) < 1e-13);
    CHECK(std::abs(f_at_one({-1.5, 0.0}).real() - (-2 * ln2 + 2)) < 1e-13);
    CHECK_THROWS_AS(f_at_one({-2.0, 0.0}), pole_error);
}

TEST_CASE("functional equation") {
    CHECK(std::abs(f_functional_eq({0.0, 0.0}, -0.5, 1e-13).value) < 1e-13);
    CHECK(f_functional_eq({1.0, 0.0}, 0.25, 1e-13).value.real() ==
          Catch::Approx(0.25).epsilon(1e-10));
    const cplx via_eq = f_functional_eq({-0.5, 0.0}, -1.0, 1e-13).value;
    const cplx direct = f_closed_neg({-0.5, 0.0}, -1.0, 1e-13).value;
    CHECK(std::abs(via_eq - direct) < 1e-11);
}

TEST_CASE("dispatcher") {
    CHECK_THROWS_AS(f_eval({{-2.0, 0.0}, 1.0, MethodChoice::Auto, 1e-12}),
                    no_admissible_method_error);
    const FEvalResult r = f_eval({{3.0, 0.0}, 0.9, MethodChoice::Auto, 1e-12});
    CHECK(r.method == MethodChoice::FiniteInteger);
    CHECK(r.result.value.real() == Catch::Approx(f_finite_integer(3, 0.9).real()));
    // exact shortcuts are bit-exact
    CHECK(f_eval({{0.0, 0.0}, 0.7, MethodChoice::Auto, 1e-12}).result.value ==
          cplx{0.0, 0.0});
    CHECK(f_eval({{1.3, 0.2}, 0.0, MethodChoice::Auto, 1e-12}).result.value ==
          cplx{0.0, 0.0});
}

TEST_CASE("cross-representation agreement") {
    const std::vector<cplx> zs = {{-0.75, 0.0}, {-0.5, 0.0}, {-0.25, 0.0}, {0.25, 0.0},
                                  {0.5, 0.0},   {1.5, 0.0},  {2.7, 0.0},   {0.5, 0.5},
                                  {1.0, 2.0},   {-0.5, 1.0}};
    const std::vector<double> xs = {-0.45, -0.2, -0.05, 0.05, 0.2, 0.45, 0.7, 0.9};
    long comparisons = 0;
    for (const cplx& z : zs)
        for (double x : xs) {
            std::vector<std::pair<cplx, double>> vals; // value, error estimate
            auto grab = [&](auto fn) {
                try {
                    const SeriesResult r = fn();
                    if (r.converged) vals.push_back({r.value, r.abs_error_estimate});
                } catch (const domain_error&) {
                }
            };
            grab([&] { return f_series(z, x, 1e-12); });
            if (x > 0.0) grab([&] { return f_closed_pos(z, x, 1e-12); });
            if (x < 0.0) grab([&] { return f_closed_neg(z, x, 1e-12); });
            grab([&] { return f_integral(z, x, 1e-11); });
            if (x < 0.5) grab([&] { return f_functional_eq(z, x, 1e-12); });
            REQUIRE(vals.size() >= 2);
            for (size_t i = 0; i < vals.size(); ++i)
                for (size_t j = i + 1; j < vals.size(); ++j) {
                    CHECK(std::abs(vals[i].first - vals[j].first) <=
                          1e-9 + vals[i].second + vals[j].second);
                    ++comparisons;
                }
        }
    CHECK(comparisons >= 200);
}

TEST_CASE("integer consistency") {
    for (long p = 1; p <= 8; ++p)
        for (double x : {-0.9, -0.5, 0.3, 0.9}) {
            const double a = f_finite_integer(p, x).real();
            const double b = f_series({double(p), 0.0}, x, 1e-14).value.real();
            CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
        }
}

TEST_CASE("boundary continuity at x = 1") {
    for (const cplx& z : {cplx{-0.5, 0.0}, cplx{0.25, 0.0}, cplx{1.7, 0.0}}) {
        const cplx limit = f_at_one(z);
        double prev = 1e300;
        for (double eps : {1e-2, 1e-4, 1e-6}) {
            const double d = std::abs(f_closed_pos(z, 1.0 - eps, 1e-13).value - limit);
            CHECK(d < prev);
            prev = d;
        }
    }
}

TEST_CASE("Taylor coefficients") {
    for (double x : {0.25, 0.5})
        for (int k = 1; k <= 6; ++k) {
            const TaylorCoeff c = f_taylor_coeff(k, x);
            CHECK(std::abs(c.stirling_form - c.polylog_form) < 1e-6);
        }
    CHECK(f_taylor_coeff(1, 1.0).stirling_form ==
          Catch::Approx(zeta_int(2)).epsilon(1e-8));
    CHECK(f_taylor_coeff(2, 1.0).stirling_form ==
          Catch::Approx(-zeta_int(3)).epsilon(1e-8));
    CHECK_THROWS_AS(f_taylor_coeff(7, 0.5), range_error);
}

TEST_CASE("Taylor validity") {
    for (double x : {0.25, 0.5}) {
        double ck[7];
        for (int k = 1; k <= 6; ++k) ck[k] = f_taylor_coeff(k, x).stirling_form;
        const double bound = 2.0 * std::abs(ck[6]) * std::pow(0.3, 6.0) / (1.0 - 0.3);
        for (const cplx& dir : {cplx{1, 0}, cplx{-1, 0}, cplx{0, 1}, cplx{0.6, 0.8}}) {
            const cplx z = 0.3 * dir;
            cplx poly{0.0, 0.0}, zp{1.0, 0.0};
            for (int k = 1; k <= 6; ++k) {
                zp *= z;
                poly += ck[k] * zp;
            }
            const cplx f = f_eval({z, x, MethodChoice::Auto, 1e-13}).result.value;
            CHECK(std::abs(f - poly) <= bound + 1e-10);
        }
    }
}

TEST_CASE("Taylor derivative check") {
    // central differences of F in z at 0 against k! c_k
    for (double x : {0.25, 0.5}) {
        const double h = 1e-3;
        auto F = [&](double z) {
            return f_eval({{z, 0.0}, x, MethodChoice::Auto, 1e-13}).result.value.real();
        };
        const double d1 = (F(h) - F(-h)) / (2 * h);
        const double d2 = (F(h) - 2 * F(0.0) + F(-h)) / (h * h);
        CHECK(std::abs(d1 - f_taylor_coeff(1, x).stirling_form) < 1e-5);
        CHECK(std::abs(d2 - 2.0 * f_taylor_coeff(2, x).stirling_form) < 1e-5);
    }
}
