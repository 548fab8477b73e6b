#include "bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "logint.hpp"

namespace landau {

const std::vector<DusartPair>& dusart_pairs() {
    static const std::vector<DusartPair> v = {
        {1.0L, 89967803ULL, "1"},
        {0.5L, 767135587ULL, "0.5"},
        {0.15L, 19035709163ULL, "0.15"},
    };
    return v;
}

DusartPair dusart_by_alpha(real alpha) {
    for (const auto& d : dusart_pairs())
        if (std::fabs(d.alpha - alpha) < 1e-12L) return d;
    fail(ErrorCode::parameter, "unsupported alpha; expected 1, 0.5 or 0.15");
}

DusartPair select_dusart(u64 x, std::optional<real> alpha_override) {
    if (alpha_override) {
        DusartPair d = dusart_by_alpha(*alpha_override);
        if (x < d.x1)
            fail(ErrorCode::precondition, "alpha=" + std::string(d.tag) + " needs x >= " + std::to_string(d.x1));
        return d;
    }
    for (const auto& d : dusart_pairs())
        if (x >= d.x1) return d;  // listed from weakest to strongest
    fail(ErrorCode::precondition, "no theta error pair valid below x1 = 89967803");
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::fail: return "FAIL";
        case Verdict::undecided: return "UNDECIDED";
    }
    return "?";
}

bool BoundReport::all_pass() const {
    return std::all_of(samples.begin(), samples.end(), [](const BoundSample& s) { return s.verdict == Verdict::pass; });
}

namespace {

// decimal literal enclosure
Interval dec(real v) { return {down(v), up(v)}; }

Interval big(const u256& v) {
    real r = v.convert_to<real>();
    if (v < (u256(1) << 64)) return Interval(r);
    return {down(r, 1), up(r, 1)};
}

Interval ipow(Interval x, unsigned e) {
    Interval r(1);
    for (unsigned i = 0; i < e; ++i) r = r * x;
    return r;
}

enum class Rel { lt, le, ge };

struct Def {
    BoundFamily info;
    unsigned rmax;
    bool needs_W;
    std::function<bool(u64)> in_range;
    Rel rel;
    // lhs from prime sums at x
    std::function<Interval(const PrimeSums&)> lhs;
    // rhs as a function of the (real) point
    std::function<Interval(Interval)> rhs;
};

Interval pi_poly(Interval x, unsigned r, Interval c4, bool minus) {
    // x^{r+1}/((r+1)L) + x^{r+1}/((r+1)^2 L^2) + 2x^{r+1}/((r+1)^3 L^3) +- c4 x^{r+1}/L^4
    Interval L = log(x);
    Interval X = ipow(x, r + 1);
    Interval R(r + 1);
    Interval s = X / (R * L) + X / (R * R * L * L) + Interval(2) * X / (R * R * R * L * L * L);
    Interval t = c4 * X / (L * L * L * L);
    return minus ? s - t : s + t;
}

const std::vector<Def>& defs() {
    static const std::vector<Def> d = [] {
        std::vector<Def> v;
        auto theta = [](const PrimeSums& s) { return s.theta_interval(false); };
        v.push_back({{"thx<x", "theta(x) < x", "1 < x <= 1e19"}, 0, false,
                     [](u64 x) { return x >= 2 && x <= 10000000000000000000ULL; }, Rel::lt, theta,
                     [](Interval x) { return x; }});
        v.push_back({{"thx<x1", "theta(x) < (1 + 7.5e-7) x", "x >= 2"}, 0, false, [](u64 x) { return x >= 2; },
                     Rel::lt, theta, [](Interval x) { return (Interval(1) + dec(7.5e-7L)) * x; }});
        for (const auto& dp : dusart_pairs()) {
            real a = dp.alpha;
            u64 x1 = dp.x1;
            v.push_back({{std::string("dusart3_") + dp.tag, "|theta(x) - x| < alpha x / log^3 x",
                          "x >= " + std::to_string(x1)},
                         0, false, [x1](u64 x) { return x >= x1; }, Rel::lt,
                         [](const PrimeSums& s) {
                             Interval d = s.theta_interval(false) - Interval(real(s.x));
                             real m = std::max(std::fabs(d.lo), std::fabs(d.hi));
                             real n = (d.lo <= 0 && d.hi >= 0) ? 0 : std::min(std::fabs(d.lo), std::fabs(d.hi));
                             return Interval(n, m);
                         },
                         [a](Interval x) {
                             Interval L = log(x);
                             return dec(a) * x / (L * L * L);
                         }});
        }
        v.push_back({{"eq7461", "theta^-(x) >= x - 0.0746 x / log x", "x > 48757"}, 0, false,
                     [](u64 x) { return x > 48757; }, Rel::ge,
                     [](const PrimeSums& s) { return s.theta_interval(true); },
                     [](Interval x) { return x - dec(0.0746L) * x / log(x); }});
        v.push_back({{"eq79", "theta(x) <= x (1 + 0.000079 / log x)", "x > 1"}, 0, false,
                     [](u64 x) { return x >= 2; }, Rel::le, theta,
                     [](Interval x) { return x * (Interval(1) + dec(0.000079L) / log(x)); }});
        v.push_back({{"pi126", "pi(x) < 1.26 x / log x", "x > 1"}, 0, false, [](u64 x) { return x >= 2; }, Rel::lt,
                     [](const PrimeSums& s) { return big(s.pi[0]); },
                     [](Interval x) { return dec(1.26L) * x / log(x); }});
        v.push_back({{"Wx7", "W(x)/x <= W(7)/7 (x <= 7.32), 1.000014 (x > 7.32)", "x >= 2"}, 0, true,
                     [](u64 x) { return x >= 2; }, Rel::le,
                     [](const PrimeSums& s) { return s.W_interval() / Interval(real(s.x)); },
                     [](Interval x) {
                         if (x.hi <= 7.32L) {
                             static const Interval w7 = [] {
                                 PrimeSums s = prime_sums(7, 0, true);
                                 return s.W_interval() / Interval(7);
                             }();
                             return w7;
                         }
                         return dec(1.000014L);
                     }});
        v.push_back({{"pi1maj", "pi_1(x) <= x^2/(2L) + x^2/(4L^2) + x^2/(4L^3) + 107x^2/(160L^4)", "x >= 110117910"},
                     1, false, [](u64 x) { return x >= 110117910ULL; }, Rel::le,
                     [](const PrimeSums& s) { return big(s.pi[1]); },
                     [](Interval x) { return pi_poly(x, 1, Interval(107) / Interval(160), false); }});
        v.push_back({{"pi1min", "pi_1(x) >= x^2/(2L) + x^2/(4L^2) + x^2/(4L^3) + 3x^2/(20L^4)", "x >= 905238547"},
                     1, false, [](u64 x) { return x >= 905238547ULL; }, Rel::ge,
                     [](const PrimeSums& s) { return big(s.pi[1]); },
                     [](Interval x) { return pi_poly(x, 1, Interval(3) / Interval(20), false); }});
        v.push_back({{"pi2maj", "pi_2(x) <= x^3/(3L) + x^3/(9L^2) + 2x^3/(27L^3) + 1181x^3/(648L^4)", "x >= 60173"},
                     2, false, [](u64 x) { return x >= 60173; }, Rel::le,
                     [](const PrimeSums& s) { return big(s.pi[2]); },
                     [](Interval x) { return pi_poly(x, 2, Interval(1181) / Interval(648), false); }});
        v.push_back({{"pi2majred", "pi_2(x) <= x^3/(3L) (1 + 0.385/L)", "x >= 60297"}, 2, false,
                     [](u64 x) { return x >= 60297; }, Rel::le, [](const PrimeSums& s) { return big(s.pi[2]); },
                     [](Interval x) {
                         Interval L = log(x);
                         return ipow(x, 3) / (Interval(3) * L) * (Interval(1) + dec(0.385L) / L);
                     }});
        v.push_back({{"pi2min", "pi_2(x) >= x^3/(3L) + x^3/(9L^2) + 2x^3/(27L^3) - 1069x^3/(648L^4)", "x >= 1091239"},
                     2, false, [](u64 x) { return x >= 1091239; }, Rel::ge,
                     [](const PrimeSums& s) { return big(s.pi[2]); },
                     [](Interval x) { return pi_poly(x, 2, Interval(1069) / Interval(648), true); }});
        v.push_back({{"pi2minred", "pi_2^-(x) >= x^3/(3L) (1 + 0.248/L)", "x > 32321"}, 2, false,
                     [](u64 x) { return x > 32321; }, Rel::ge, [](const PrimeSums& s) { return big(s.pi_strict[2]); },
                     [](Interval x) {
                         Interval L = log(x);
                         return ipow(x, 3) / (Interval(3) * L) * (Interval(1) + dec(0.248L) / L);
                     }});
        struct Maj {
            const char* id;
            unsigned r;
            real c;
            u64 from;
        };
        for (Maj m : {Maj{"majpi3", 3, 0.271L, 664}, Maj{"majpi4", 4, 0.237L, 200}, Maj{"majpi5", 5, 0.226L, 44}}) {
            unsigned r = m.r;
            real c = m.c;
            u64 from = m.from;
            v.push_back({{m.id, "pi_" + std::to_string(r) + "(x) <= c x^" + std::to_string(r + 1) + " / log x",
                          "x >= " + std::to_string(from)},
                         r, false, [from](u64 x) { return x >= from; }, Rel::le,
                         [r](const PrimeSums& s) { return big(s.pi[r]); },
                         [r, c](Interval x) { return dec(c) * ipow(x, r + 1) / log(x); }});
        }
        for (unsigned r : {5u, 6u}) {
            v.push_back({{"majpi6_r" + std::to_string(r), "pi_r(x) <= (log 3/3)(1 + (2/3)^r) x^(r+1) / log x",
                          "x > 1, r >= 5"},
                         r, false, [](u64 x) { return x >= 2; }, Rel::le,
                         [r](const PrimeSums& s) { return big(s.pi[r]); },
                         [r](Interval x) {
                             Interval c = log(Interval(3)) / Interval(3) *
                                          (Interval(1) + ipow(Interval(2) / Interval(3), r));
                             return c * ipow(x, r + 1) / log(x);
                         }});
        }
        return v;
    }();
    return d;
}

const Def& find_def(const std::string& id) {
    for (const auto& d : defs())
        if (d.info.id == id) return d;
    fail(ErrorCode::parameter, "unknown bound family: " + id);
}

Verdict judge(Rel rel, Interval l, Interval r) {
    switch (rel) {
        case Rel::lt:
            if (l.hi < r.lo) return Verdict::pass;
            if (l.lo >= r.hi) return Verdict::fail;
            return Verdict::undecided;
        case Rel::le:
            if (l.hi <= r.lo) return Verdict::pass;
            if (l.lo > r.hi) return Verdict::fail;
            return Verdict::undecided;
        case Rel::ge:
            if (l.lo >= r.hi) return Verdict::pass;
            if (l.hi < r.lo) return Verdict::fail;
            return Verdict::undecided;
    }
    return Verdict::undecided;
}

// pi(x (1 + 0.045 / log^2 x)) - pi(x) >= 0.012 sqrt x, counted on (x, y] only
BoundSample pixy_sample(u64 x) {
    Interval X{real(x)};
    Interval L = log(X);
    Interval Y = X * (Interval(1) + dec(0.045L) / (L * L));
    u64 y = u64(std::floor(Y.lo));  // smaller y can only lower the count
    u64 c = 0;
    if (y > x) {
        PrimeStream s(y, x);
        u64 p;
        while (s.next(p)) ++c;
    }
    BoundSample b;
    b.x = x;
    b.lhs = Interval(real(c));
    b.rhs = dec(0.012L) * sqrt(X);
    b.verdict = judge(Rel::ge, b.lhs, b.rhs);
    return b;
}

}  // namespace

const std::vector<BoundFamily>& bound_families() {
    static const std::vector<BoundFamily> v = [] {
        std::vector<BoundFamily> out;
        for (const auto& d : defs()) out.push_back(d.info);
        out.push_back({"pixy", "pi(x(1 + 0.045/log^2 x)) - pi(x) >= 0.012 sqrt x", "x >= 10000000019"});
        return out;
    }();
    return v;
}

BoundReport check_effective_bounds(const std::string& family, std::vector<u64> samples, bool witness) {
    BoundReport rep;
    rep.family = family;
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    if (family == "pixy") {
        rep.statement = bound_families().back().statement;
        rep.range = bound_families().back().range;
        for (u64 x : samples) {
            bool in = x >= 10000000019ULL;
            if (!in && !witness) fail(ErrorCode::precondition, "pixy holds for x >= 10000000019; got " + std::to_string(x));
            BoundSample b = pixy_sample(x);
            b.outside_range = !in;
            rep.samples.push_back(b);
        }
        return rep;
    }
    const Def& d = find_def(family);
    rep.statement = d.info.statement;
    rep.range = d.info.range;
    for (u64 x : samples) {
        if (x < 2) fail(ErrorCode::precondition, family + ": samples must be >= 2");
        if (!d.in_range(x) && !witness)
            fail(ErrorCode::precondition, family + " is stated for " + d.info.range + "; got " + std::to_string(x));
    }
    if (samples.empty()) return rep;
    PrimeSumAccumulator acc(d.rmax, d.needs_W);
    PrimeStream s(samples.back());
    u64 p = 0;
    bool have = s.next(p);
    for (u64 x : samples) {
        while (have && p <= x) {
            acc.push(p);
            have = s.next(p);
        }
        PrimeSums snap = acc.snapshot(x);
        BoundSample b;
        b.x = x;
        b.outside_range = !d.in_range(x);
        b.lhs = d.lhs(snap);
        b.rhs = d.rhs(Interval(real(x)));
        b.verdict = judge(d.rel, b.lhs, b.rhs);
        rep.samples.push_back(b);
    }
    return rep;
}

real crossing_point(const std::string& family, u64 p, real lo, real hi) {
    const Def& d = find_def(family);
    PrimeSums s = prime_sums(p, d.rmax, d.needs_W);
    real target = d.lhs(s).mid();
    auto f = [&](real t) { return d.rhs(Interval(t)).mid() - target; };
    real flo = f(lo), fhi = f(hi);
    if ((flo > 0) == (fhi > 0)) fail(ErrorCode::numerical, "crossing not bracketed");
    for (int i = 0; i < 200 && hi - lo > std::ldexp(std::fabs(hi), -62); ++i) {
        real m = lo + (hi - lo) / 2;
        if ((f(m) > 0) == (flo > 0))
            lo = m;
        else
            hi = m;
    }
    return lo + (hi - lo) / 2;
}

real r0_root(real alpha) {
    if (!(alpha > 0)) fail(ErrorCode::parameter, "alpha must be positive");
    auto f = [&](real r) { return ((3 * r + 8) * r + 6) * r * r - 24 / alpha - 1; };
    real lo = 0, hi = 1;
    while (f(hi) < 0) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        real m = (lo + hi) / 2;
        if (f(m) < 0)
            lo = m;
        else
            hi = m;
    }
    return (lo + hi) / 2;
}

PropositionConstants proposition_constants(unsigned r, real alpha) {
    if (r > 6) fail(ErrorCode::parameter, "r must be <= 6");
    DusartPair dp = dusart_by_alpha(alpha);
    PropositionConstants out;
    out.r = r;
    out.pair = dp;
    out.r0 = r0_root(dp.alpha);
    PrimeSums s = prime_sums(dp.x1, r);
    out.pi_r_x1 = s.pi[r];
    out.theta_x1 = s.theta.value();

    PrecisionScope ps(192);
    mpreal a = dp.tag == std::string("1") ? mpreal(1) : (dp.tag == std::string("0.5") ? mpreal(1) / 2 : mpreal(15) / 100);
    mpreal x1 = mpreal(static_cast<unsigned long long>(dp.x1));
    mpreal R = r;
    mpreal L = log(x1);
    mpreal X = pow(x1, R + 1);
    mpreal pr(out.pi_r_x1.str());
    mpreal th = mpreal(s.theta.sum) + mpreal(s.theta.comp);
    mpreal lix = li_mp(X);
    mpreal head = pr - pow(x1, R) * th / L;
    mpreal p4 = 3 * a * pow(R, 4) + 8 * a * pow(R, 3) + 6 * a * R * R;
    mpreal p3 = 3 * a * pow(R, 3) + 5 * a * R * R + a * R;
    mpreal c2 = a * (3 * R * R + 2 * R - 1) * X / (24 * L * L);
    mpreal c3 = a * (3 * R - 1) * X / (12 * L * L * L);
    mpreal c4 = a * X / (4 * pow(L, 4));
    mpreal C0 = head - (p4 + 24 - a) / 24 * lix + (p3 + 24 - a) * X / (24 * L) + c2 + c3 - c4;
    mpreal C0h = head + (p4 - a - 24) / 24 * lix - (p3 - a - 24) * X / (24 * L) - c2 - c3 + c4;
    out.C0 = to_real(C0);
    out.C0hat = to_real(C0h);
    return out;
}

}  // namespace landau
