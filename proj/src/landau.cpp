#include "landau.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "sequences.hpp"

namespace landau {

namespace {

using boost::multiprecision::cpp_int;

// largest t with t - rho log t <= c, for c > 0 and t beyond rho
real solve_excess(real rho, real c) {
    real t = std::max(c, rho) + 1;
    for (int i = 0; i < 200; ++i) {
        real nt = c + rho * std::log(t);
        if (std::fabs(nt - t) <= 1e-12L * t) return nt;
        t = nt;
    }
    return t;
}

u128 event_step(const Superchampion& s) {
    if (s.event_j == 1) return s.event_p;
    return ipow128(s.event_p, s.event_j - 1) * (s.event_p - 1);
}

void check_consecutive(const Superchampion& N1, const Superchampion& N2, const char* who) {
    if (N2.ell <= N1.ell || N2.ell - N1.ell != event_step(N2) ||
        std::fabs(N2.logN - N1.logN - std::log(real(N2.event_p))) > 1e-9L * N2.logN)
        fail(ErrorCode::usage, std::string(who) + " needs consecutive records");
}

}  // namespace

// Any prime p outside N' dividing g(n) pays p - rho log p <= n - n' < xi in l(M) - rho log M,
// against the minimum reached by N'. So p stays below the root of t - rho log t = xi.
u64 g_prime_cutoff(u64 limit) {
    if (limit < 7) return std::max<u64>(limit, 2);
    Located L = locate(limit);
    real t = solve_excess(L.rho.value, L.profile.xi);
    return std::min<u64>(limit, u64(t * (1 + 1e-12L)) + 1);
}

// Same argument for squarefree M against N_k with rho = p_{k+1}/log p_{k+1}; the excess is below p_{k+1}.
u64 h_prime_cutoff(u64 limit) {
    auto ps = simple_primes(std::max<u64>(limit, 2) + 1000);
    u128 s = 0;
    size_t k = 0;
    while (k < ps.size() && s + ps[k] <= limit) s += ps[k++];
    if (k + 1 < 3) return std::max<u64>(limit, 2);
    real p1 = real(ps[k]);
    real t = solve_excess(p1 / std::log(p1), p1);
    return std::min<u64>(limit, u64(t * (1 + 1e-12L)) + 1);
}

LandauTable::LandauTable(Kind kind, u64 limit, bool keep_choices) : kind_(kind), limit_(limit), keep_(keep_choices) {
    if (limit > (u64(1) << 32)) fail(ErrorCode::capacity, "table limit too large");
    cutoff_ = kind == Kind::g ? g_prime_cutoff(limit) : h_prime_cutoff(limit);
    primes_ = simple_primes(cutoff_);
    const u64 W = limit + 1;
    f_.assign(W, 0);
    if (keep_) choice_.assign(primes_.size() * W, 0);
    std::vector<u64> pw;
    for (size_t i = 0; i < primes_.size(); ++i) {
        const u64 p = primes_[i];
        const real lp = std::log(real(p));
        pw.clear();
        for (u64 q = p; q <= limit; q *= p) {
            pw.push_back(q);
            if (kind == Kind::h || q > limit / p) break;
        }
        std::uint8_t* ch = keep_ ? &choice_[i * W] : nullptr;
        for (u64 b = limit; b >= p; --b) {
            real best = f_[b];
            unsigned ba = 0;
            for (size_t j = 0; j < pw.size() && pw[j] <= b; ++j) {
                const unsigned a = unsigned(j + 1);
                real cand = f_[b - pw[j]] + real(a) * lp;
                real tol = std::ldexp(std::max<real>(1, best), -50);
                if (cand > best + tol) {
                    best = cand;
                    ba = a;
                } else if (cand > best - tol) {
                    bool take;
                    if (keep_) {
                        // distinct factorizations never tie exactly; settle with integers
                        ++exact_ties_;
                        cpp_int c = backtrack(i, b - pw[j]).value() * cpp_int(pw[j]);
                        cpp_int inc = ba == 0 ? backtrack(i, b).value()
                                              : backtrack(i, b - pw[ba - 1]).value() * cpp_int(pw[ba - 1]);
                        if (c == inc) fail(ErrorCode::integrity, "equal products from different exponent choices");
                        take = c > inc;
                    } else {
                        take = cand > best;
                    }
                    if (take) {
                        best = cand;
                        ba = a;
                    }
                }
            }
            f_[b] = best;
            if (ch) ch[b] = std::uint8_t(ba);
        }
    }
}

real LandauTable::log(u64 n) const {
    if (n > limit_)
        fail(ErrorCode::capacity, "n = " + std::to_string(n) + " beyond the exact table limit " +
                                      std::to_string(limit_) + "; use slice bounds");
    return f_[n];
}

Interval LandauTable::log_interval(u64 n) const {
    real v = log(n);
    return widen(Interval(v), std::fabs(v) * std::ldexp(real(1), -48));
}

FactoredNumber LandauTable::backtrack(size_t nprimes, u64 budget) const {
    const u64 W = limit_ + 1;
    std::vector<std::pair<u64, unsigned>> fs;
    for (size_t i = nprimes; i-- > 0;) {
        unsigned a = choice_[i * W + budget];
        if (a) {
            fs.emplace_back(primes_[i], a);
            budget -= u64(ipow128(primes_[i], a));
        }
    }
    FactoredNumber f;
    for (auto it = fs.rbegin(); it != fs.rend(); ++it) f.push(it->first, it->second);
    return f;
}

FactoredNumber LandauTable::factors(u64 n) const {
    if (!keep_) fail(ErrorCode::precondition, "table built without choices");
    log(n);
    return backtrack(primes_.size(), n);
}

FactoredNumber g_exact(u64 n, u64 limit) {
    if (n > limit) fail(ErrorCode::capacity, "g_exact: n = " + std::to_string(n) + " exceeds G_LIMIT = " +
                                                 std::to_string(limit) + "; use slice bounds");
    return LandauTable(LandauTable::Kind::g, n).factors(n);
}

FactoredNumber h_exact(u64 n, u64 limit) {
    if (n > limit) fail(ErrorCode::capacity, "h_exact: n = " + std::to_string(n) + " exceeds H_LIMIT = " +
                                                 std::to_string(limit));
    return LandauTable(LandauTable::Kind::h, n).factors(n);
}

u64 partition_lcm_oracle(unsigned n) {
    if (n > 45) fail(ErrorCode::capacity, "partition oracle is limited to n <= 45");
    u64 best = 1;
    // parts in nonincreasing order
    std::function<void(unsigned, unsigned, u64)> rec = [&](unsigned left, unsigned maxpart, u64 l) {
        best = std::max(best, l);
        for (unsigned k = std::min(left, maxpart); k >= 2; --k) rec(left - k, k, std::lcm(l, u64(k)));
    };
    rec(n, n, 1);
    return best;
}

std::vector<u64> g_equals_h_scan(u64 limit) {
    if (limit > std::min(kGLimit, kHLimit)) fail(ErrorCode::capacity, "scan limit beyond the exact tables");
    LandauTable g(LandauTable::Kind::g, limit), h(LandauTable::Kind::h, limit);
    std::vector<u64> out;
    for (u64 n = 1; n <= limit; ++n) {
        // a cheap filter first; equality is then decided on the factorizations
        if (std::fabs(g.log(n) - h.log(n)) > 1e-9L) continue;
        if (g.factors(n) == h.factors(n)) out.push_back(n);
    }
    return out;
}

Interval log_sum_enclosure(real v, u64 terms) {
    real a = std::fabs(v);
    return widen(Interval(v), a * std::ldexp(real(1), -61) + real(terms) * a * std::ldexp(real(1), -126));
}

Interval log_record(const Superchampion& s) {
    // terms: at most one per prime below pmax plus the prefix exponents
    return log_sum_enclosure(s.logN, s.pmax + 64);
}

PrimePrefix::PrimePrefix(u64 pmax) {
    primes_ = simple_primes(pmax);
    sigma_.assign(primes_.size() + 1, 0);
    theta_.assign(primes_.size() + 1, 0);
    Neumaier t;
    for (size_t i = 0; i < primes_.size(); ++i) {
        sigma_[i + 1] = sigma_[i] + primes_[i];
        t.add(std::log(real(primes_[i])));
        theta_[i + 1] = t.value();
    }
}

Interval PrimePrefix::theta(size_t k) const { return log_sum_enclosure(theta_[k], k); }

KAt PrimePrefix::at(u128 n) const {
    size_t k = size_t(std::upper_bound(sigma_.begin(), sigma_.end(), n) - sigma_.begin()) - 1;
    if (k + 1 >= sigma_.size())
        fail(ErrorCode::capacity, "n = " + to_string(n) + " needs primes beyond " + std::to_string(pmax()));
    KAt r;
    r.k = k;
    r.sigma = sigma_[k];
    r.pk = k ? primes_[k - 1] : 0;
    r.pk1 = primes_[k];
    r.theta_k = theta(k);
    r.theta_k1 = theta(k + 1);
    return r;
}

u64 PrimePrefix::next_prime_ge(u64 x) const {
    auto it = std::lower_bound(primes_.begin(), primes_.end(), x);
    if (it != primes_.end()) return *it;
    return landau::next_prime_ge(x);
}

ChebyshevCursor::ChebyshevCursor() : stream_(0) { stream_.next(next_); }

KAt ChebyshevCursor::at(u128 n) {
    if (n < last_n_) fail(ErrorCode::usage, "ChebyshevCursor needs nondecreasing n");
    last_n_ = n;
    while (st_.sigma + next_ <= n) {
        st_.push(next_);
        if (!stream_.next(next_)) fail(ErrorCode::capacity, "prime stream exhausted");
    }
    KAt r;
    r.k = st_.k;
    r.sigma = st_.sigma;
    r.pk = st_.p;
    r.pk1 = next_;
    r.theta_k = st_.theta_interval();
    Neumaier t = st_.theta;
    t.add(std::log(real(next_)));
    r.theta_k1 = log_sum_enclosure(t.value(), st_.k + 1);
    return r;
}

Interval h_lower_bound(const KAt& k, u128 n) {
    u128 m = k.m(n);
    u64 target = u64(u128(k.pk1) - m);
    u64 q = landau::next_prime_ge(std::max<u64>(target, 2));
    return k.theta_k1 - log_int(q);
}

Interval h_upper_bound(const KAt& k, u128 n) {
    u128 m = k.m(n);
    return k.theta_k1 - log_int(u128(k.pk1) - m);
}

SliceBounds slice_bounds(const Superchampion& N1, const Superchampion& N2, const KAt& kn1, const KAt& kn2) {
    check_consecutive(N1, N2, "slice_bounds");
    if (!(kn1.sigma <= N1.ell && N1.ell < kn1.sigma + kn1.pk1) || !(kn2.sigma <= N2.ell && N2.ell < kn2.sigma + kn2.pk1))
        fail(ErrorCode::usage, "k(n) data does not match the slice endpoints");
    SliceBounds b;
    b.n1 = N1.ell;
    b.n2 = N2.ell;
    b.k1 = kn1.k;
    b.k2 = kn2.k;
    b.m1 = kn1.m(b.n1);
    b.m2 = kn2.m(b.n2);
    b.q = landau::next_prime_ge(std::max<u64>(u64(u128(kn1.pk1) - b.m1), 2));
    b.h_low_n1 = (kn1.theta_k1 - log_int(b.q)).lo;  // h_lower_bound(kn1, n1) with q reused
    b.h_high_n2 = h_upper_bound(kn2, b.n2).hi;
    b.g_low = N1.logN;
    b.g_high = N2.logN;
    if (b.h_low_n1 > b.h_high_n2) fail(ErrorCode::integrity, "slice bounds out of order at n1 = " + to_string(b.n1));
    return b;
}

SliceBounds slice_bounds(const Superchampion& N1, const Superchampion& N2, ChebyshevCursor& cur) {
    KAt a = cur.at(N1.ell);
    KAt b = cur.at(N2.ell);
    return slice_bounds(N1, N2, a, b);
}

RecordList::RecordList(u128 limit_ell) : limit_(limit_ell) {
    EventEnumerator e;
    Superchampion s;
    while (e.next(s)) {
        recs_.push_back(s);
        if (s.ell > limit_ell) break;
    }
}

size_t RecordList::prime_index(u128 n) const {
    if (n < 7 || n > limit_) fail(ErrorCode::capacity, "n = " + to_string(n) + " outside the record list");
    auto it = std::upper_bound(recs_.begin(), recs_.end(), n, [](u128 v, const Superchampion& s) { return v < s.ell; });
    return size_t(it - recs_.begin()) - 1;
}

ConvexBound g_bounds_convex(const Superchampion& N1, const Superchampion& N2, ConvexMode mode) {
    ConvexBound r;
    r.n1 = N1.ell;
    r.n2 = N2.ell;
    Interval v1, v2;
    if (mode == ConvexMode::a) {
        v1 = seq_a(N1.ell, log_record(N1));
        v2 = seq_a(N2.ell, log_record(N2));
        if (N1.ell < 43 || v1.lo < 0 || v1.hi > 1 || v2.lo < 0 || v2.hi > 1)
            fail(ErrorCode::hypothesis, "a-mode slice at " + to_string(N1.ell) + " outside n' >= 43, a in [0,1]");
    } else {
        v1 = seq_z(N1.ell, log_record(N1));
        v2 = seq_z(N2.ell, log_record(N2));
        const real e = std::exp(1.0L);
        if (N1.ell < 19 || v1.lo < 0 || v1.hi > e || v2.lo < 0 || v2.hi > e)
            fail(ErrorCode::hypothesis, "z-mode slice at " + to_string(N1.ell) + " outside n' >= 19, z in [0,e]");
    }
    r.v1 = v1.mid();
    r.v2 = v2.mid();
    r.bound = std::min(v1.lo, v2.lo);
    return r;
}

ConvexBound g_bounds_convex(u128 n, ConvexMode mode, const Type2Cache* cache) {
    Located L = locate(n, cache);
    ConvexBound r = g_bounds_convex(L.Nprime, L.Nsecond, mode);
    if (n == L.Nprime.ell) {
        Interval v = mode == ConvexMode::a ? seq_a(n, log_record(L.Nprime)) : seq_z(n, log_record(L.Nprime));
        r.bound = v.lo;
    }
    return r;
}

Interval g_upper_chord(const Superchampion& N1, const Superchampion& N2, u128 n) {
    check_consecutive(N1, N2, "g_upper_chord");
    if (n < N1.ell || n > N2.ell) fail(ErrorCode::usage, "n outside the slice");
    // N1 and N2 both maximise log M - ell(M)/rho, so every M lies below the line through them
    Interval slope = log(Interval::exact_int(N2.event_p)) / Interval::exact_int(event_step(N2));
    return log_record(N1) + Interval::exact_int(n - N1.ell) * slope;
}

Interval g_lower_local(const Superchampion& N1, const Superchampion& N2, u128 n) {
    check_consecutive(N1, N2, "g_lower_local");
    if (n < N1.ell || n > N2.ell) fail(ErrorCode::usage, "n outside the slice");
    if (n == N2.ell) return log_record(N2);
    u128 budget = n - N1.ell;
    if (budget == 0) return log_record(N1);
    FactoredNumber f = build_N_rho(N2.event(), false);
    if (f.ell != N1.ell) fail(ErrorCode::integrity, "factorisation of N' does not match its ell");

    struct Move {
        u128 cost;
        u64 p;
    };
    std::vector<Move> ups, downs;  // downs hold the saving
    u128 max_save = 0;
    for (auto [p, a] : f.factors) {
        u128 save = a == 1 ? u128(p) : ipow128(p, a) - ipow128(p, a - 1);
        downs.push_back({save, p});
        max_save = std::max(max_save, save);
    }
    const u128 reach = budget + max_save;
    for (auto [p, a] : f.factors) {
        u128 pa = ipow128(p, a);
        if (pa > reach) continue;
        u128 cost = pa * p - pa;
        if (cost <= reach) ups.push_back({cost, p});
    }
    u64 top = f.largest_prime();
    if (reach < (u128(1) << 40))
        for (u64 q : simple_primes(u64(reach)))
            if (q > top) ups.push_back({q, q});
    if (ups.empty()) return log_record(N1);
    std::sort(ups.begin(), ups.end(), [](const Move& x, const Move& y) { return x.cost < y.cost; });
    // best and second best prime (distinct) among ups[0..i]
    std::vector<std::pair<u64, u64>> best(ups.size());
    u64 b1 = 0, b2 = 0;
    for (size_t i = 0; i < ups.size(); ++i) {
        u64 p = ups[i].p;
        if (p > b1) {
            b2 = b1;
            b1 = p;
        } else if (p > b2 && p != b1) {
            b2 = p;
        }
        best[i] = {b1, b2};
    }
    auto best_up_within = [&](u128 cost, u64 avoid) -> u64 {
        auto it = std::upper_bound(ups.begin(), ups.end(), cost, [](u128 c, const Move& m) { return c < m.cost; });
        if (it == ups.begin()) return 0;
        auto [x, y] = best[size_t(it - ups.begin()) - 1];
        return x != avoid ? x : y;
    };
    // gain log(up / down), compared in long double; the chosen one is re-evaluated with rounding
    u64 up_p = best_up_within(budget, 0), down_p = 0;
    real gain = up_p ? std::log(real(up_p)) : 0;
    for (const Move& d : downs) {
        u64 q = best_up_within(budget + d.cost, d.p);
        if (!q) continue;
        real v = std::log(real(q)) - std::log(real(d.p));
        if (v > gain) {
            gain = v;
            up_p = q;
            down_p = d.p;
        }
    }
    Interval out = log_record(N1);
    if (up_p) out = out + log(Interval::exact_int(up_p));
    if (down_p) out = out - log(Interval::exact_int(down_p));
    return out;
}

}  // namespace landau
