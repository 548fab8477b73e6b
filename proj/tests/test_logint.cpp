#include "doctest.h"
#include "logint.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

using namespace landau;
using boost::math::quadrature::gauss_kronrod;

namespace {
// li(x) = gamma + log log x + int_0^{log x} (e^u - 1)/u du, integrated with Gauss-Kronrod at 160 bits
using F50 = boost::multiprecision::mpfr_float_50;

F50 li_quadrature_50(const F50& x) {
    F50 v = log(x);
    auto f = [](const F50& u) -> F50 {
        if (abs(u) < F50("1e-30")) return F50(1);
        return expm1(u) / u;
    };
    // split so each piece is short relative to the growth of e^u
    F50 acc = 0, a = 0;
    while (a < v) {
        F50 b = a + 2 < v ? F50(a + 2) : v;
        acc += gauss_kronrod<F50, 61>::integrate(f, a, b, 10, F50("1e-35"));
        a = b;
    }
    return boost::math::constants::euler<F50>() + log(v) + acc;
}

mpreal li_quadrature(const mpreal& x) {
    PrecisionScope ps(170);
    F50 q = li_quadrature_50(F50(x.str(60)));
    return mpreal(q.str(55));
}
}  // namespace

TEST_CASE("li at 2 against quadrature") {
    LiValue v = li(2);
    CHECK(double(v.value) == doctest::Approx(1.0451637801).epsilon(1e-10));
    mpreal q = li_quadrature(mpreal(2));
    CHECK(abs(mpreal(v.value) - q) / q < mpreal("1e-18"));
    CHECK(v.error_bound >= 0);
    CHECK(abs(mpreal(v.value) - q) <= mpreal(v.error_bound));
}

TEST_CASE("li minus li(2) is the integral from 2") {
    auto g = [](const F50& t) -> F50 { return 1 / log(t); };
    F50 I = gauss_kronrod<F50, 61>::integrate(g, F50(2), F50(10), 10, F50("1e-35"));
    real d = li(10).value - li(2).value;
    CHECK(abs((F50(d) - I) / I) < F50("1e-15"));
}

TEST_CASE("li agrees with quadrature on [2, 1e12]") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> e(std::log(2.0), std::log(1e12));
    for (int i = 0; i < 60; ++i) {
        real x = std::exp(real(e(rng)));
        LiValue v = li(x);
        mpreal q = li_quadrature(mpreal(x));
        mpreal rel = abs(mpreal(v.value) - q) / abs(q);
        CHECK(rel <= mpreal("1e-18"));
        CHECK(abs(mpreal(v.value) - q) <= mpreal(v.error_bound));
    }
}

TEST_CASE("li against the asymptotic expansion at 1e8") {
    // the truncated expansion undershoots while N < log x, by about the next term
    real x = 1e8L, L = std::log(x);
    std::vector<real> s(7, 0), t(8, 0);
    real f = 1;
    for (int k = 1; k <= 7; ++k) {
        t[k] = f * x / std::pow(L, real(k));
        f *= k;
    }
    for (int N = 1; N <= 6; ++N) s[N] = s[N - 1] + t[N];
    real v = li(x).value;
    for (int N = 3; N <= 6; ++N) {
        CHECK(v > s[N]);
        CHECK(v < s[N] + 2 * t[N + 1]);
    }
}

TEST_CASE("li domain") {
    CHECK_THROWS_AS(li(1), Error);
    CHECK_THROWS_AS(li(0.5L), Error);
}

TEST_CASE("mpfr li agrees with long double li") {
    for (real x : {1.5L, 2.0L, 10.0L, 1e6L, 1e15L, 1e40L}) {
        mpreal err;
        mpreal m = li_mp(mpreal(x), &err);
        CHECK(abs(mpreal(li(x).value) - m) / abs(m) < mpreal("1e-18"));
        CHECK(err < abs(m) * ldexp(mpreal(1), -80));
        LiValue f = li_ld(x);
        CHECK(abs(mpreal(f.value) - m) <= mpreal(f.error_bound));
    }
}

TEST_CASE("li_inv examples") {
    CHECK(double(li_inv(1)) == doctest::Approx(1.969047).epsilon(1e-6));
    for (real y : {-5.0L, 0.0L, 10.0L, 1e6L}) {
        mpreal x = li_inv_mp(mpreal(y));
        mpreal r = abs(li_mp(x) - mpreal(y));
        CHECK(r <= ldexp(mpreal(1), -70) * std::max(mpreal(1), mpreal(abs(mpreal(y)))));
        CHECK(x > 1);
    }
    real y = li(1e6L).value;
    CHECK(double(li_inv(y)) == doctest::Approx(1e6).epsilon(1e-10));
    CHECK(double(li_inv(0)) == doctest::Approx(1.4513692349).epsilon(1e-10));
}

TEST_CASE("li_inv monotone and round trip on a log grid") {
    real prev = 1;
    real worst = 0;
    for (int i = 0; i < 2000; ++i) {
        real y = std::exp(real(-3) + real(i) * real(45) / 2000);
        real x = li_inv(y);
        CHECK(x > prev);
        prev = x;
        real r = std::fabs(li(x).value - y) / std::max(real(1), y);
        worst = std::max(worst, r);
    }
    CHECK(worst <= 1e-18L);
}

TEST_CASE("li_inv of very negative y is not representable in long double") {
    CHECK_THROWS_AS(li_inv(-60), Error);
    mpreal x = li_inv_mp(mpreal(-60));
    CHECK(x > 1);
}

TEST_CASE("li_inv_fast matches li_inv") {
    for (real y : {100.0L, 1e9L, 5e17L}) {
        real a = li_inv(y);
        real b = li_inv_fast(y, a * (1 + 1e-6L));
        CHECK(std::fabs(a - b) / a < 1e-18L);
    }
}

TEST_CASE("phi_u") {
    real ee = std::exp(std::exp(real(1)));
    CHECK(double(phi_u(0, ee)) == doctest::Approx(double(std::exp((std::exp(real(1)) + 1) / 2))).epsilon(1e-15));
    CHECK(phi_u(0.125L, 1e6L) < phi_u(0.125L, 1e6L + 1));
    CHECK_THROWS_AS(phi_u(0.125L, 10), Error);
    CHECK_THROWS_AS(phi_u(3, 100), Error);
    // increasing in t, decreasing in u
    for (int i = 0; i < 200; ++i) {
        real t = ee * std::pow(real(1.1), real(i));
        for (real u : {0.0L, 0.125L, 1.0L, 2.0L}) {
            CHECK(phi_u(u, t) < phi_u(u, t * 1.05L));
            CHECK(phi_u(u + 0.5L, t) <= phi_u(u, t));
        }
    }
    Interval I = phi_u(0.125L, Interval(373623862));
    CHECK(I.lo <= phi_u(0.125L, 373623862.0L));
    CHECK(phi_u(0.125L, 373623862.0L) <= I.hi);
    CHECK(double(phi_u(0.125L, 373623862.0L)) == doctest::Approx(89944.7765891595).epsilon(1e-13));
}

TEST_CASE("concave gap") {
    CHECK(sqrt_liinv_concave_gap(0, 100, 200).margin >= 0);
    CHECK(sqrt_liinv_concave_gap(1, 31, 1000).margin >= 0);
    CHECK(sqrt_liinv_concave_gap(0.5L, 500, 500).margin == 0);
    CHECK_THROWS_AS(sqrt_liinv_concave_gap(0, 10, 20), Error);
    CHECK_THROWS_AS(sqrt_liinv_concave_gap(1.5L, 40, 50), Error);
}

TEST_CASE("second differences of sqrt(li^-1) - a (t log t)^(1/4) are nonpositive") {
    for (real a : {0.0L, 0.5L, 1.0L}) {
        std::vector<real> t, F;
        for (int i = 0; i < 1000; ++i) {
            real x = 31 * std::pow(real(1e9 / 31), real(i) / 999);
            t.push_back(x);
            mpreal li1 = li_inv_mp(mpreal(x));
            F.push_back(to_real(sqrt(li1)) - a * std::pow(x * std::log(x), real(0.25)));
        }
        int bad = 0;
        for (size_t i = 1; i + 1 < t.size(); ++i) {
            real s1 = (F[i] - F[i - 1]) / (t[i] - t[i - 1]);
            real s2 = (F[i + 1] - F[i]) / (t[i + 1] - t[i]);
            // tolerance for the rounding of F at this scale
            real tol = 1e-16L * std::fabs(F[i]) / std::min(t[i] - t[i - 1], t[i + 1] - t[i]);
            if (s2 > s1 + tol) ++bad;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("f_iter_root") {
    real n = 1e6L;
    real R = f_iter_root(n, 1);
    CHECK(std::fabs(std::sqrt(n * (2 * std::log(R) - 1)) - R) <= std::ldexp(R, -60));
    // bisection oracle on t - f(t)
    real lo = std::sqrt(n), hi = n;
    for (int i = 0; i < 200; ++i) {
        real m = (lo + hi) / 2;
        if (m - std::sqrt(n * (2 * std::log(m) - 1)) < 0)
            lo = m;
        else
            hi = m;
    }
    CHECK(std::fabs(R - lo) / R < 1e-17L);
    real n4 = 1e4L;
    auto f = [&](real t) { return std::sqrt(n4 * (2 * std::log(t) - 2)); };
    CHECK(f(std::sqrt(n4)) > std::sqrt(n4));
    CHECK(f(n4) < n4);
    real n5 = 1e5L;
    for (int i = 0; i <= 100; ++i) {
        real t = std::sqrt(n5) + (n5 - std::sqrt(n5)) * i / 100;
        for (real d : {1.0L, 2.0L}) {
            real fp = n5 / (t * std::sqrt(n5 * (2 * std::log(t) - d)));
            CHECK(fp <= 0.5L);
        }
    }
    CHECK_THROWS_AS(f_iter_root(100, 1), Error);
}
