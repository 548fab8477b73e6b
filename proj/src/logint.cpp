#include "logint.hpp"

#include <map>
#include <mutex>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace landau {

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr unsigned kMaxTerms = 1600;
constexpr real kGamma = 0.577215664901532860606512090082402431L;

// a_n = (-1)^{n-1} / (n! 2^{n-1}) * sum_{m <= (n-1)/2} 1/(2m+1), kept exact.
struct ExactCoeffs {
    std::vector<cpp_int> num;  // signed
    std::vector<cpp_int> den;

    ExactCoeffs() {
        num.reserve(kMaxTerms + 1);
        den.reserve(kMaxTerms + 1);
        num.push_back(0);
        den.push_back(1);
        cpp_rational s = 0;
        cpp_int f = 1;  // n! 2^{n-1}
        for (unsigned n = 1; n <= kMaxTerms; ++n) {
            if (n % 2 == 1) s += cpp_rational(1, n);  // adds 1/(2m+1) with 2m+1 = n
            f *= n;
            if (n > 1) f *= 2;
            cpp_int nu = numerator(s);
            if (n % 2 == 0) nu = -nu;
            num.push_back(nu);
            den.push_back(denominator(s) * f);
        }
    }
};

const ExactCoeffs& exact_coeffs() {
    static const ExactCoeffs c;
    return c;
}

// num/den rounded once to nearest at `bits` bits.
mpreal round_ratio(const cpp_int& num, const cpp_int& den, unsigned bits) {
    bool neg = num < 0;
    cpp_int a = neg ? cpp_int(-num) : num;
    long k = long(bits) + 3 + long(msb(den)) - long(msb(a));
    cpp_int q, r;
    if (k >= 0)
        divide_qr(cpp_int(a << k), den, q, r);
    else
        divide_qr(a, cpp_int(den << -k), q, r);
    q = (q << 1) | cpp_int(r != 0 ? 1 : 0);  // sticky bit rules out ties
    unsigned qbits = unsigned(msb(q)) + 1;
    mpreal out;
    {
        PrecisionScope wide(qbits + 8);
        mpreal exact(q);
        mpfr_set_prec(out.backend().data(), bits);
        mpfr_set(out.backend().data(), exact.backend().data(), MPFR_RNDN);
    }
    mpfr_mul_2si(out.backend().data(), out.backend().data(), -(k + 1), MPFR_RNDN);
    if (neg) out = -out;
    return out;
}

const std::vector<real>& ld_coeffs() {
    static const std::vector<real> c = [] {
        const auto& e = exact_coeffs();
        std::vector<real> v(kMaxTerms + 1, 0);
        for (unsigned n = 1; n <= kMaxTerms; ++n) {
            mpreal m = round_ratio(e.num[n], e.den[n], 64);
            v[n] = mpfr_get_ld(m.backend().data(), MPFR_RNDN);
        }
        return v;
    }();
    return c;
}

std::mutex g_mp_mutex;
std::map<unsigned, std::vector<mpreal>> g_mp_coeffs;

const std::vector<mpreal>& mp_coeffs(unsigned bits) {
    std::lock_guard<std::mutex> lock(g_mp_mutex);
    auto it = g_mp_coeffs.find(bits);
    if (it != g_mp_coeffs.end()) return it->second;
    const auto& e = exact_coeffs();
    std::vector<mpreal> v(kMaxTerms + 1);
    for (unsigned n = 1; n <= kMaxTerms; ++n) v[n] = round_ratio(e.num[n], e.den[n], bits);
    return g_mp_coeffs.emplace(bits, std::move(v)).first->second;
}

struct SeriesOut {
    real value, err;
};

// li as a function of L = log x > 0, long double.
SeriesOut li_from_log_ld(real L) {
    if (!(L > 0)) fail(ErrorCode::domain, "li needs x > 1");
    const auto& a = ld_coeffs();
    Neumaier sum;
    real abs_sum = 0;
    real pw = 1;
    int small = 0;
    unsigned n = 1;
    real last = 0;
    for (; n <= kMaxTerms; ++n) {
        pw *= L;
        real t = a[n] * pw;
        sum.add(t);
        abs_sum += std::fabs(t);
        last = t;
        if (std::fabs(t) < std::ldexp(std::fabs(sum.value()), -80))
            ++small;
        else
            small = 0;
        if (small >= 8) break;
    }
    if (n > kMaxTerms) fail(ErrorCode::numerical, "li series did not converge within the coefficient table");
    real eps = std::ldexp(real(1), -63);
    real q = L / real(n + 2);
    real tail = q < 1 ? std::fabs(last) * L / real(n + 1) / (1 - q) : HUGE_VALL;
    real sx = std::exp(L / 2);
    real s = sum.value();
    real value = kGamma + std::log(L) + sx * s;
    real err = sx * (tail + abs_sum * real(n + 4) * eps) + 4 * eps * (std::fabs(sx * s) + std::fabs(std::log(L)) + 1);
    return {value, 2 * err};
}

mpreal li_from_log_mp(const mpreal& L, mpreal* err_out) {
    if (!(L > 0)) fail(ErrorCode::domain, "li needs x > 1");
    unsigned bits = mpfr_get_prec(L.backend().data());
    const auto& a = mp_coeffs(bits);
    mpreal sum = 0, abs_sum = 0, pw = 1, last = 0;
    int small = 0;
    unsigned n = 1;
    for (; n <= kMaxTerms; ++n) {
        pw *= L;
        mpreal t = a[n] * pw;
        sum += t;
        abs_sum += abs(t);
        last = t;
        if (abs(t) < ldexp(abs(sum), -80) && abs(t) < ldexp(abs(sum), -int(bits)))
            ++small;
        else
            small = 0;
        if (small >= 8) break;
    }
    if (n > kMaxTerms) fail(ErrorCode::numerical, "li series did not converge within the coefficient table");
    mpreal sx = exp(L / 2);
    mpreal value = boost::math::constants::euler<mpreal>() + log(L) + sx * sum;
    if (err_out) {
        mpreal eps = ldexp(mpreal(1), 1 - int(bits));
        mpreal q = L / (n + 2);
        mpreal tail = q < 1 ? mpreal(abs(last) * L / (n + 1) / (1 - q)) : mpreal(1e300);
        *err_out = 2 * (sx * (tail + abs_sum * (n + 4) * eps) + 4 * eps * (abs(sx * sum) + abs(log(L)) + 1));
    }
    return value;
}

mpreal log1p_mp(const mpreal& v) {
    mpreal r;
    mpfr_log1p(r.backend().data(), v.backend().data(), MPFR_RNDN);
    return r;
}

}  // namespace

LiValue li(real x) {
    if (!(x > 1)) fail(ErrorCode::domain, "li needs x > 1");
    // long double log x carries up to L 2^-64 absolute error, which alone would cost
    // that much relative accuracy in li; the series runs in MPFR and is rounded once
    PrecisionScope ps(std::max(96u, precision_bits()));
    mpreal err;
    mpreal v = li_from_log_mp(log(mpreal(x)), &err);
    real r = mpfr_get_ld(v.backend().data(), MPFR_RNDN);
    real half_ulp = std::fabs(r) * std::ldexp(real(1), -64);
    return {x, r, to_real(err) + half_ulp};
}

LiValue li_ld(real x) {
    if (!(x > 1)) fail(ErrorCode::domain, "li needs x > 1");
    real L = std::log(x);
    SeriesOut s = li_from_log_ld(L);
    // error of L itself moves li by about x/L times it
    real lerr = L * std::ldexp(real(1), -63) * (x / L);
    return {x, s.value, s.err + lerr};
}

mpreal li_mp(const mpreal& x, mpreal* err) {
    if (!(x > 1)) fail(ErrorCode::domain, "li needs x > 1");
    return li_from_log_mp(log(x), err);
}

mpreal li_inv_mp(const mpreal& y) {
    unsigned bits = std::max(96u, precision_bits());
    PrecisionScope ps(bits);
    mpreal yy = y;
    mpreal tol = ldexp(mpreal(1), -70) * std::max(mpreal(1), mpreal(abs(yy)));

    // s = log(x - 1); li(1 + e^s) is increasing in s
    auto li_s = [&](const mpreal& s) {
        mpreal L = log1p_mp(exp(s));
        return li_from_log_mp(L, nullptr);
    };
    mpreal s0;
    if (yy >= 3) {
        mpreal x0 = yy * log(yy);
        s0 = log(x0 - 1);
    } else {
        s0 = 0;  // x0 = 2
    }
    mpreal lo = s0, hi = s0;
    mpreal step = 1;
    int guard = 0;
    while (li_s(lo) > yy) {
        lo -= step;
        step *= 2;
        if (++guard > 200) fail(ErrorCode::numerical, "li_inv: no lower bracket");
    }
    step = 1;
    guard = 0;
    while (li_s(hi) < yy) {
        hi += step;
        step *= 2;
        if (++guard > 200) fail(ErrorCode::numerical, "li_inv: no upper bracket");
    }
    mpreal s = (s0 >= lo && s0 <= hi) ? s0 : (lo + hi) / 2;
    for (int it = 0; it < 200; ++it) {
        mpreal e = exp(s);
        mpreal L = log1p_mp(e);
        mpreal f = li_from_log_mp(L, nullptr) - yy;
        if (abs(f) <= tol) return 1 + e;
        if (f < 0)
            lo = s;
        else
            hi = s;
        // d li / ds = e^s / log(1 + e^s)
        mpreal next = s - f * L / e;
        if (!(next > lo && next < hi)) next = (lo + hi) / 2;
        if (next == s) break;
        s = next;
    }
    fail(ErrorCode::numerical, "li_inv: Newton did not converge");
}

real li_inv(real y) {
    mpreal x = li_inv_mp(mpreal(y));
    real r = mpfr_get_ld(x.backend().data(), MPFR_RNDN);
    if (!(r > 1)) fail(ErrorCode::numerical, "li_inv: result not representable above 1 in extended precision");
    return r;
}

real li_inv_fast(real y, real seed) {
    real x = seed;
    for (int it = 0; it < 8; ++it) {
        real f = li_ld(x).value - y;
        real nx = x - f * std::log(x);
        if (!(nx > 1)) nx = (x + 1) / 2;
        real d = std::fabs(nx - x);
        x = nx;
        if (d <= std::ldexp(x, -62)) break;
    }
    return x;
}

real phi_u(real u, real t) {
    if (!(u >= 0 && u <= std::exp(real(1)))) fail(ErrorCode::domain, "phi_u needs 0 <= u <= e");
    if (!(t >= std::exp(std::exp(real(1))) * (1 - std::ldexp(real(1), -60))))
        fail(ErrorCode::domain, "phi_u needs t >= e^e");
    real L = std::log(t);
    real lam = std::log(L);
    return std::sqrt(t * L) * (1 + (lam - 1) / (2 * L) - u * lam * lam / (L * L));
}

Interval phi_u(real u, Interval t) {
    if (!(u >= 0 && u <= std::exp(real(1)))) fail(ErrorCode::domain, "phi_u needs 0 <= u <= e");
    if (!(t.lo >= std::exp(std::exp(real(1))) * (1 - std::ldexp(real(1), -60))))
        fail(ErrorCode::domain, "phi_u needs t >= e^e");
    // increasing in t on t >= e^e: evaluate each end with outward rounding
    auto at = [&](real x) {
        Interval X(x);
        Interval L = log(X);
        Interval lam = log(L);
        Interval one(1), two(2), U(u);
        return sqrt(X * L) * (one + (lam - one) / (two * L) - U * lam * lam / (L * L));
    };
    Interval a = at(t.lo), b = at(t.hi);
    return {a.lo, b.hi};
}

ConcaveGap sqrt_liinv_concave_gap(real a, real t1, real t2) {
    if (!(t1 >= 31 && t2 >= t1)) fail(ErrorCode::domain, "concave gap needs 31 <= t1 <= t2");
    if (!(a <= 1)) fail(ErrorCode::domain, "concave gap needs a <= 1");
    auto F = [&](real t) {
        mpreal x = li_inv_mp(mpreal(t));
        return to_real(sqrt(x)) - a * std::pow(t * std::log(t), real(0.25));
    };
    ConcaveGap g;
    if (t1 == t2) {
        g.mid_value = g.chord_value = F(t1);
        g.margin = 0;
        return g;
    }
    g.mid_value = F((t1 + t2) / 2);
    g.chord_value = (F(t1) + F(t2)) / 2;
    g.margin = g.mid_value - g.chord_value;
    return g;
}

real f_iter_root(real n, real delta) {
    if (!(n > std::exp(real(6)))) fail(ErrorCode::domain, "f_iter_root needs n > e^6");
    if (!(delta >= 1 && delta <= 2)) fail(ErrorCode::domain, "f_iter_root needs 1 <= delta <= 2");
    auto f = [&](real t) { return std::sqrt(n * (2 * std::log(t) - delta)); };
    // f maps [sqrt n, n] into itself and is increasing, so iterates from n decrease to the root
    real t = n;
    for (int it = 0; it < 400; ++it) {
        real ft = f(t);
        if (std::fabs(ft - t) <= std::ldexp(t, -60)) return ft;
        t = ft;
    }
    fail(ErrorCode::numerical, "f_iter_root did not settle");
}

}  // namespace landau
