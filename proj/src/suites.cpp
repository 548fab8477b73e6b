#include <cmath>

#include "logint.hpp"
#include "sequences.hpp"
#include "verify.hpp"

namespace landau {

namespace {

constexpr u64 kNu4 = 1017810;

Interval L_of(u128 n) { return log_int(n); }

// sqrt(nL) (1 + (lambda - 1)/(2L) - u lambda^2 / L^2), any n >= 2
Interval phi(real u, u128 n) {
    Interval L = L_of(n), lam = log(L), N = Interval::exact_int(n);
    Interval one(1);
    return sqrt(N * L) * (one + (lam - one) / (Interval(2) * L) - Interval(u) * lam * lam / (L * L));
}

// 6 sqrt2 (log nL)^{3/4} diff / nq^{1/4} - 4 log ns - log log ns
Interval beta_form(u128 nL, Interval diff, u128 nq, u128 ns) {
    Interval Ls = L_of(ns);
    return Interval(6) * sqrt(Interval(2)) * pow(L_of(nL), 0.75L) * diff / sqrt(sqrt(Interval::exact_int(nq))) -
           Interval(4) * Ls - log(Ls);
}

Interval nonneg(Interval d) { return Interval(std::max<real>(d.lo, 0), std::max<real>(d.hi, 0)); }

// (2 - sqrt2)/3 + c + 1.02 lambda/L
Interval a_upper_bound(u128 n) {
    Interval L = L_of(n);
    return (Interval(2) - sqrt(Interval(2))) / Interval(3) + Interval(constant_c()) + Interval(1.02L) * log(L) / L;
}

real phi_ld(real u, real t) {
    real L = std::log(t), lam = std::log(L);
    return std::sqrt(t * L) * (1 + (lam - 1) / (2 * L) - u * lam * lam / (L * L));
}

json iv(Interval v) { return {{"lo", double(v.lo)}, {"hi", double(v.hi)}, {"lo_hex", hexfloat(v.lo)}, {"hi_hex", hexfloat(v.hi)}}; }

Verdict decide(bool pass, bool fails) { return pass ? Verdict::pass : fails ? Verdict::fail : Verdict::undecided; }

json bounds_json(const LogBounds& b) {
    return {{"log_g", iv(b.g)}, {"log_h", iv(b.h)}, {"g_mode", b.g_exact ? "exact" : "bounded"},
            {"h_mode", b.h_exact ? "exact" : "bounded"}};
}

u64 prime_bound_for(u128 n) {
    // sigma_k ~ p^2 / (2 log p); generous
    real x = std::sqrt(2 * real(n) * std::log(real(n) + 3)) * 1.3L + 1000;
    return u64(x);
}

}  // namespace

Resources Resources::build(u64 g_limit, u64 h_limit, u128 n_max) {
    Resources r;
    if (g_limit) r.g = std::make_shared<LandauTable>(LandauTable::Kind::g, g_limit, false);
    if (h_limit) r.h = std::make_shared<LandauTable>(LandauTable::Kind::h, h_limit, false);
    r.records = std::make_shared<RecordList>(std::max<u128>(n_max, 7));
    r.primes = std::make_shared<PrimePrefix>(prime_bound_for(n_max));
    if (r.primes->max_n() < n_max) fail(ErrorCode::capacity, "prime table too small");
    return r;
}

LogBounds log_bounds(const Resources& r, u128 n) {
    LogBounds b;
    if (r.g && n <= r.g->limit()) {
        b.g = r.g->log_interval(u64(n));
        b.g_exact = true;
    } else {
        if (!r.records || n < 7 || n > r.records->limit())
            fail(ErrorCode::capacity, "no g source at n = " + to_string(n));
        size_t i = r.records->prime_index(n);
        const auto& rec = r.records->records();
        if (rec[i].ell == n) {
            b.g = log_record(rec[i]);
            b.g_exact = true;
        } else {
            b.g = Interval(g_lower_local(rec[i], rec[i + 1], n).lo, g_upper_chord(rec[i], rec[i + 1], n).hi);
        }
    }
    if (r.h && n <= r.h->limit()) {
        b.h = r.h->log_interval(u64(n));
        b.h_exact = true;
    } else {
        if (!r.primes) fail(ErrorCode::capacity, "no h source at n = " + to_string(n));
        KAt k = r.primes->at(n);
        b.h = Interval(h_lower_bound(k, n).lo, std::min(h_upper_bound(k, n).hi, b.g.hi));
    }
    b.g.lo = std::max(b.g.lo, b.h.lo);
    return b;
}

const std::vector<SuiteInfo>& suite_catalog() {
    static const std::vector<SuiteInfo> cat = {
        {"minhn", "log h(n) >= Phi_{1/8}(n)", 2, 398898277, 373623862, 1000, kHLimit},
        {"maxgn", "log g(n) <= Phi_0(n), i.e. z_n >= 0", 2, kGLimit, 3, kGLimit, 0},
        {"beta_upper", "beta_n <= 2.43", 2, kHLimit, 0, kGLimit, kHLimit},
        {"beta_lower", "beta_n > -11.6", 1487, kNu4, 4229, kGLimit, kHLimit},
        {"d_max", "d_n < 0.62059", 2, 49467083, 2243, kGLimit, kHLimit},
        {"a_upper", "a_n < (2 - sqrt2)/3 + c + 1.02 loglog n / log n", 2, 5432420, 19424, kGLimit, 0},
    };
    return cat;
}

const SuiteInfo& suite_info(const std::string& id) {
    for (const auto& s : suite_catalog())
        if (s.id == id) return s;
    fail(ErrorCode::usage, "unknown suite '" + id + "'");
}

TheoremSuite make_suite(const std::string& id, const Resources& r) {
    const SuiteInfo& info = suite_info(id);
    TheoremSuite s;
    s.id = id;
    s.description = info.description;
    s.domain_lo = info.default_lo;
    auto R = std::make_shared<Resources>(r);

    if (id == "minhn") {
        s.ok = [R](u128 n) {
            LogBounds b = log_bounds(*R, n);
            Interval p = phi(0.125L, n);
            return decide(b.h.lo >= p.hi, b.h.hi < p.lo);
        };
        s.good = [R](u128 n1, u128 n2) { return log_bounds(*R, n1).h.lo >= phi(0.125L, n2).hi; };
        s.witness = [R](u128 n) {
            json j = bounds_json(log_bounds(*R, n));
            j["phi_1/8"] = iv(phi(0.125L, n));
            return j;
        };
    } else if (id == "maxgn") {
        auto z_slice_ok = [R](u128 n) {
            // convexity in the slice of n when n' >= 19
            if (!R->records || n < 19 || n > R->records->limit()) return false;
            size_t i = R->records->prime_index(n);
            const auto& rec = R->records->records();
            if (rec[i].ell < 19) return false;
            try {
                return g_bounds_convex(rec[i], rec[i + 1], ConvexMode::z).bound >= 0;
            } catch (const Error& e) {
                if (e.code == ErrorCode::hypothesis) return false;
                throw;
            }
        };
        s.ok = [R, z_slice_ok](u128 n) {
            LogBounds b = log_bounds(*R, n);
            Interval p = phi(0, n);
            if (b.g.hi <= p.lo || z_slice_ok(n)) return Verdict::pass;
            return decide(false, b.g.lo > p.hi);
        };
        s.good = [R, z_slice_ok](u128 n1, u128 n2) {
            if (log_bounds(*R, n2).g.hi <= phi(0, n1).lo) return true;
            // one slice: z_n >= min over its endpoints
            if (!R->records || n1 < 19 || n2 > R->records->limit()) return false;
            return R->records->prime_index(n1) == R->records->prime_index(n2) && z_slice_ok(n1);
        };
        s.witness = [R](u128 n) {
            json j = bounds_json(log_bounds(*R, n));
            j["phi_0"] = iv(phi(0, n));
            return j;
        };
    } else if (id == "beta_upper" || id == "beta_lower") {
        bool upper = id == "beta_upper";
        auto beta_at = [R](u128 n) {
            LogBounds b = log_bounds(*R, n);
            return beta_form(n, nonneg(b.g - b.h), n, n);
        };
        if (upper) {
            s.ok = [beta_at](u128 n) {
                Interval v = beta_at(n);
                return decide(v.hi <= 2.43L, v.lo > 2.43L);
            };
            s.good = [R](u128 n1, u128 n2) {
                Interval d = nonneg(log_bounds(*R, n2).g - log_bounds(*R, n1).h);
                return beta_form(n2, d, n1, n1).hi <= 2.43L;
            };
        } else {
            s.ok = [beta_at](u128 n) {
                Interval v = beta_at(n);
                return decide(v.lo > -11.6L, v.hi <= -11.6L);
            };
            s.good = [R](u128 n1, u128 n2) {
                Interval g1 = log_bounds(*R, n1).g, h2 = log_bounds(*R, n2).h;
                // needs g(n1) >= h(n2)
                if (g1.lo < h2.hi) return false;
                return beta_form(n1, g1 - h2, n2, n2).lo > -11.6L;
            };
        }
        s.witness = [R, beta_at](u128 n) {
            json j = bounds_json(log_bounds(*R, n));
            j["beta"] = iv(beta_at(n));
            return j;
        };
    } else if (id == "d_max") {
        const real T = 0.62059L;
        s.ok = [R, T](u128 n) {
            LogBounds b = log_bounds(*R, n);
            Interval d = nonneg(b.g - b.h) / quarter_power(n);
            return decide(d.hi < T, d.lo >= T);
        };
        s.good = [R, T](u128 n1, u128 n2) {
            Interval M = nonneg(log_bounds(*R, n2).g - log_bounds(*R, n1).h) / quarter_power(n1);
            return M.hi < T;
        };
        s.witness = [R](u128 n) {
            LogBounds b = log_bounds(*R, n);
            json j = bounds_json(b);
            j["d"] = iv(nonneg(b.g - b.h) / quarter_power(n));
            return j;
        };
    } else if (id == "a_upper") {
        s.ok = [R](u128 n) {
            LogBounds b = log_bounds(*R, n);
            Interval a = seq_a(n, b.g), m = a_upper_bound(n);
            return decide(a.hi < m.lo, a.lo >= m.hi);
        };
        s.good = [R](u128 n1, u128 n2) {
            if (n1 < 16) return false;
            Interval Rv = (sqrt_liinv(n2) - log_bounds(*R, n1).g) / quarter_power(n1);
            return Rv.hi <= a_upper_bound(n2).lo;
        };
        s.witness = [R](u128 n) {
            LogBounds b = log_bounds(*R, n);
            json j = bounds_json(b);
            j["a"] = iv(seq_a(n, b.g));
            j["bound"] = iv(a_upper_bound(n));
            return j;
        };
    }
    return s;
}

json SliceScanReport::to_json() const {
    return {{"suite", suite},
            {"ell_from", to_string(ell_from)},
            {"ell_limit", to_string(ell_limit)},
            {"slices", slices},
            {"failures", failures},
            {"last_fail", {to_string(last_fail_n1), to_string(last_fail_n2)}},
            {"last_fail_value", double(last_fail_value)},
            {"condition_last_fail", to_string(condition_last_fail)}};
}

SliceScanReport slice_scan(const std::string& suite, u128 ell_from, u128 ell_limit,
                           const std::function<void(u64)>& progress) {
    enum { BU, BL, DM, AU } which;
    if (suite == "beta_upper")
        which = BU;
    else if (suite == "beta_lower")
        which = BL;
    else if (suite == "d_max")
        which = DM;
    else if (suite == "a_upper")
        which = AU;
    else
        fail(ErrorCode::usage, "no slice bound for suite '" + suite + "'");
    SliceScanReport rep;
    rep.suite = suite;
    rep.ell_from = ell_from;
    rep.ell_limit = ell_limit;
    EventEnumerator en;
    ChebyshevCursor cur;
    Superchampion N1, N2;
    en.next(N1);
    real seed = 0;
    while (en.next(N2) && N2.ell <= ell_limit) {
        if (N1.ell >= ell_from) {
            ++rep.slices;
            if (progress && rep.slices % 1000000 == 0) progress(rep.slices);
            SliceBounds b = slice_bounds(N1, N2, cur);
            Interval g1 = log_record(N1), g2 = log_record(N2);
            bool pass = true;
            real value = 0;
            switch (which) {
                case BU: {
                    Interval v = beta_form(b.n2, nonneg(g2 - Interval(b.h_low_n1)), b.n1, b.n1);
                    pass = v.hi < 2.43L;
                    value = v.hi;
                    break;
                }
                case BL: {
                    if (!(g1.lo > b.h_high_n2)) {
                        rep.condition_last_fail = b.n1;
                        pass = false;
                        break;
                    }
                    Interval v = beta_form(b.n1, g1 - Interval(b.h_high_n2), b.n2, b.n2);
                    pass = v.lo > -11.6L;
                    value = v.lo;
                    break;
                }
                case DM: {
                    Interval v = nonneg(g2 - Interval(b.h_low_n1)) / quarter_power(b.n1);
                    pass = v.hi < 0.62L;
                    value = v.hi;
                    break;
                }
                case AU: {
                    if (b.n1 < 16) {
                        pass = false;
                        break;
                    }
                    Interval v = (sqrt_liinv_seeded(b.n2, seed) - g1) / quarter_power(b.n1);
                    pass = v.hi <= a_upper_bound(b.n2).lo;
                    value = v.hi;
                    break;
                }
            }
            if (!pass) {
                ++rep.failures;
                rep.last_fail_n1 = b.n1;
                rep.last_fail_n2 = b.n2;
                rep.last_fail_value = value;
            }
        }
        N1 = N2;
    }
    return rep;
}

json KScanReport::to_json() const {
    return {{"pmax", pmax},
            {"last_fail_k", last_fail_k},
            {"sigma_after_fail", to_string(sigma_after_fail)},
            {"k_end", k_end},
            {"p_end", p_end},
            {"undecided", undecided}};
}

KScanReport minhn_kscan(u64 pmax) {
    KScanReport rep;
    rep.pmax = pmax;
    PrimeStream ps(pmax);
    ChebyshevState st;
    u64 p;
    if (!ps.next(p)) fail(ErrorCode::usage, "pmax below 2");
    st.push(p);
    u64 q;
    while (ps.next(q)) {
        // st holds k, theta(p_k); q = p_{k+1}
        u128 s1 = st.sigma + q;
        real th = st.theta_value();
        real ph = phi_ld(0.125L, real(s1));
        real margin = std::ldexp(th, -40);
        bool ok;
        if (th - ph > margin) {
            ok = true;
        } else if (ph - th > margin) {
            ok = false;
        } else {
            Interval T = st.theta_interval(), P = phi(0.125L, s1);
            if (T.lo > P.hi)
                ok = true;
            else {
                ok = false;
                if (T.hi > P.lo) ++rep.undecided;
            }
        }
        if (!ok) {
            rep.last_fail_k = st.k;
            rep.sigma_after_fail = s1;
        }
        st.push(q);
    }
    rep.k_end = st.k;
    rep.p_end = st.p;
    return rep;
}

json ConvexScanReport::to_json() const {
    return {{"mode", mode},           {"limit", to_string(limit)}, {"records", records},
            {"argmin", to_string(argmin)}, {"min", iv(min_value)}};
}

ConvexScanReport convex_scan(ConvexMode mode, u128 limit, const std::function<void(u64)>& progress) {
    ConvexScanReport rep;
    rep.mode = mode == ConvexMode::a ? "a" : "z";
    rep.limit = limit;
    const u128 from = mode == ConvexMode::a ? 43 : 19;
    EventEnumerator en;
    Superchampion s;
    real seed = 0;
    // last a-point evaluated in full: li(x0) = y0 up to x0 * 2^-62
    real x0 = 0, y0 = 0;
    bool have = false;
    while (en.next(s) && s.ell <= limit) {
        if (s.ell < from) continue;
        ++rep.records;
        if (progress && rep.records % 1000000 == 0) progress(rep.records);
        if (mode == ConvexMode::a && have && x0 > 0) {
            // Taylor step for li^-1 from the anchor, with x' = log x, x'' = log x / x and the third
            // derivative below log^2 x / x^2. Points that cannot beat the running minimum are skipped.
            const real y = real(s.ell), d = y - y0, L = std::log(x0);
            const real x = x0 + d * L + d * d * L / (2 * x0);
            const real ex = d * d * d * L * L / (3 * x0 * x0) + std::ldexp(x, -58);
            const real q = quarter_power(s.ell).lo;
            const real ea = ex / (2 * std::sqrt(x)) / q;
            if (ea < 1e-10L && (std::sqrt(x) - s.logN) / q - ea - 1e-12L > rep.min_value.hi) continue;
        }
        Interval v = mode == ConvexMode::a ? seq_a(s.ell, sqrt_liinv_seeded(s.ell, seed), log_record(s))
                                           : seq_z(s.ell, log_record(s));
        if (mode == ConvexMode::a) {
            x0 = seed;
            y0 = real(s.ell);
        }
        if (!have || v.mid() < rep.min_value.mid()) {
            rep.min_value = v;
            rep.argmin = s.ell;
            have = true;
        }
    }
    return rep;
}

}  // namespace landau
