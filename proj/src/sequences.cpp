#include "sequences.hpp"

#include <cmath>

#include "landau.hpp"
#include "logint.hpp"

namespace landau {

real constant_c() { return 0.046117644421509L; }

const char* constant_c_note() {
    return "stored literal; the sum over zeta zeros is computed elsewhere, not by this library";
}

namespace {

Interval L_of(u128 n) { return log_int(n); }

}  // namespace

Interval sqrt_liinv(u128 n) {
    real y = li_inv(real(n));
    Interval Y = widen(Interval(y), y * std::ldexp(real(1), -60));
    return sqrt(Y);
}

Interval sqrt_liinv_seeded(u128 n, real& seed) {
    const real y = real(n);
    real x = li_inv_fast(y, seed > 1 ? seed : li_inv(y));
    LiValue v = li_ld(x);
    // li' = 1/log, so the root sits within (residual) * log x of x
    real r = std::fabs(v.value - y) + v.error_bound + std::ldexp(y, -63);
    real dx = r * std::log(x) * 1.01L + std::ldexp(x, -62);
    if (!(dx < x / 1024)) return sqrt_liinv(n);
    seed = x;
    return sqrt(Interval(x - dx, x + dx));
}

Interval seq_a(u128 n, Interval sqrt_liinv_n, Interval log_g) { return (sqrt_liinv_n - log_g) / quarter_power(n); }

Interval quarter_power(u128 n) {
    Interval N = Interval::exact_int(n);
    return sqrt(sqrt(N * L_of(n)));
}

Interval seq_a(u128 n, Interval log_g) { return (sqrt_liinv(n) - log_g) / quarter_power(n); }

Interval seq_z(u128 n, Interval log_g) {
    Interval L = L_of(n), lam = log(L);
    Interval N = Interval::exact_int(n);
    Interval one(1);
    Interval inner = one + (lam - one) / (Interval(2) * L) - log_g / sqrt(N * L);
    return inner * L * L / (lam * lam);
}

Interval seq_d(u128 n, Interval log_g, Interval log_h) { return (log_g - log_h) / quarter_power(n); }

Interval seq_beta(u128 n, Interval log_g, Interval log_h) {
    Interval L = L_of(n), lam = log(L);
    Interval N = Interval::exact_int(n);
    Interval c = Interval(6) * sqrt(Interval(2));
    return c * pow(L, 0.75L) * (log_g - log_h) / sqrt(sqrt(N)) - Interval(4) * L - lam;
}

real seq_a(u128 n, real log_g) { return seq_a(n, Interval(log_g)).mid(); }
real seq_b(u128 n, real log_h) { return seq_a(n, Interval(log_h)).mid(); }
real seq_z(u128 n, real log_g) { return seq_z(n, Interval(log_g)).mid(); }
real seq_d(u128 n, real log_g, real log_h) { return seq_d(n, Interval(log_g), Interval(log_h)).mid(); }
real seq_beta(u128 n, real log_g, real log_h) { return seq_beta(n, Interval(log_g), Interval(log_h)).mid(); }

SequencePoint point(u128 n, Source g_source, Source h_source, const SequenceSources& src) {
    if (n < 2) fail(ErrorCode::domain, "sequences are defined for n >= 2");
    SequencePoint pt;
    pt.n = n;
    if (g_source == Source::exact) {
        if (!src.g || n > src.g->limit()) fail(ErrorCode::capacity, "exact g unavailable at n = " + to_string(n));
        pt.log_g = src.g->log_interval(u64(n));
        pt.g_exact = true;
    } else {
        if (!src.records) fail(ErrorCode::capacity, "g bounds need the record list");
        size_t i = src.records->prime_index(n);
        const auto& r = src.records->records();
        if (r[i].ell == n) {
            pt.log_g = log_record(r[i]);
            pt.g_exact = true;
        } else {
            pt.log_g = Interval(log_record(r[i]).lo, log_record(r[i + 1]).hi);
        }
    }
    if (h_source == Source::exact) {
        if (!src.h || n > src.h->limit()) fail(ErrorCode::capacity, "exact h unavailable at n = " + to_string(n));
        pt.log_h = src.h->log_interval(u64(n));
        pt.h_exact = true;
    } else {
        if (!src.primes) fail(ErrorCode::capacity, "h bounds need the prime prefix table");
        KAt k = src.primes->at(n);
        // upper side: h(n) < h(sigma_{k+1}) = N_{k+1}; the sharper slice form is kept for slice endpoints
        Interval lo = h_lower_bound(k, n);
        pt.log_h = Interval(lo.lo, std::min(k.theta_k1.hi, pt.log_g.hi));
    }
    pt.a = seq_a(n, pt.log_g);
    pt.b = seq_a(n, pt.log_h);
    pt.z = seq_z(n, pt.log_g);
    // g >= h keeps the difference nonnegative
    Interval diff = pt.log_g - pt.log_h;
    diff.lo = std::max<real>(diff.lo, 0);
    pt.d = diff / quarter_power(n);
    {
        Interval L = log_int(n), lam = log(L);
        Interval N = Interval::exact_int(n);
        pt.beta = Interval(6) * sqrt(Interval(2)) * pow(L, 0.75L) * diff / sqrt(sqrt(N)) - Interval(4) * L - lam;
    }
    return pt;
}

SequencePoint point(u64 n) {
    if (n > kHLimit) fail(ErrorCode::capacity, "point(n) with exact sources needs n <= H_LIMIT");
    LandauTable g(LandauTable::Kind::g, n, false), h(LandauTable::Kind::h, n, false);
    SequenceSources s;
    s.g = &g;
    s.h = &h;
    return point(n, Source::exact, Source::exact, s);
}

real gap_ratio(u64 n, const LandauTable& g, const LandauTable& h) {
    if (n < 2) fail(ErrorCode::domain, "d_n is defined for n >= 2");
    return seq_d(n, g.log(n), h.log(n));
}

real gap_ratio(u64 n) {
    if (n > kHLimit) fail(ErrorCode::capacity, "gap_ratio needs n <= H_LIMIT");
    LandauTable g(LandauTable::Kind::g, n, false), h(LandauTable::Kind::h, n, false);
    return gap_ratio(n, g, h);
}

}  // namespace landau
