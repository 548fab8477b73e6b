#include "superchampion.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace landau {

real rho_min() {
    static const real v = 5.0L / std::log(5.0L);
    return v;
}

namespace {

constexpr real kFastMargin = 0x1p-40L;

// p^{j-1}(p-1), or p when j = 1
u128 event_num(u64 p, unsigned j) { return j == 1 ? u128(p) : ipow128(p, j - 1) * (p - 1); }

// 2/log 2 = (4-2)/log 2 is the only coincidence inside one prime's events
void normalize(u64 p, unsigned& j) {
    if (p == 2 && j == 2) j = 1;
}

u64 prev_prime(u64 n) {
    if (n <= 2) fail(ErrorCode::domain, "no prime below 2");
    u64 q = n - 1;
    while (!is_prime(q)) --q;
    return q;
}

}  // namespace

real event_value(u64 p, unsigned j) {
    if (p < 2 || j == 0) fail(ErrorCode::parameter, "event needs a prime p and j >= 1");
    return real(event_num(p, j)) / std::log(real(p));
}

Rho Rho::event(u64 p, unsigned j) {
    if (!is_prime(p)) fail(ErrorCode::parameter, std::to_string(p) + " is not prime");
    Rho r;
    r.p = p;
    r.j = j;
    r.value = event_value(p, j);
    return r;
}

Rho Rho::of(real value) {
    Rho r;
    r.value = value;
    return r;
}

std::string Rho::to_string() const {
    std::ostringstream os;
    if (!is_event()) {
        os << double(value);
        return os.str();
    }
    if (j == 1)
        os << p << "/log " << p;
    else
        os << "(" << landau::to_string(ipow128(p, j)) << "-" << landau::to_string(ipow128(p, j - 1)) << ")/log " << p;
    return os.str();
}

int compare_events(u64 p, unsigned j, u64 q, unsigned i) {
    normalize(p, j);
    normalize(q, i);
    if (p == q) {
        u128 a = event_num(p, j), b = event_num(q, i);
        return a < b ? -1 : (a > b ? 1 : 0);
    }
    real a = event_value(p, j), b = event_value(q, i);
    real m = std::max(a, b) * kFastMargin;
    if (a < b - m) return -1;
    if (a > b + m) return 1;
    PrecisionScope ps(160);
    mpreal A = to_mp(event_num(p, j)) * log(mpreal(static_cast<unsigned long long>(q)));
    mpreal B = to_mp(event_num(q, i)) * log(mpreal(static_cast<unsigned long long>(p)));
    mpreal d = A - B;
    if (abs(d) <= abs(A) * pow(mpreal(2), -130))
        fail(ErrorCode::integrity, "rho events (" + std::to_string(p) + "," + std::to_string(j) + ") and (" +
                                       std::to_string(q) + "," + std::to_string(i) + ") not separated at 160 bits");
    return d < 0 ? -1 : 1;
}

int compare_event(u64 p, unsigned j, const Rho& rho) {
    if (rho.is_event()) return compare_events(p, j, rho.p, rho.j);
    real a = event_value(p, j);
    real m = std::max(a, rho.value) * kFastMargin;
    if (a < rho.value - m) return -1;
    if (a > rho.value + m) return 1;
    PrecisionScope ps(160);
    mpreal A = to_mp(event_num(p, j)) / log(mpreal(static_cast<unsigned long long>(p)));
    mpreal d = A - to_mp(rho.value);
    return d < 0 ? -1 : (d > 0 ? 1 : 0);
}

real xi_root(unsigned j, real rho) {
    if (j == 0) fail(ErrorCode::parameter, "j must be >= 1");
    if (j == 1 && !(rho > std::exp(1.0L))) fail(ErrorCode::domain, "xi/log xi = rho needs rho > e");
    if (!(rho > 1)) fail(ErrorCode::domain, "rho must exceed 1");
    const real lr = std::log(rho);
    // work in s = log t where h is increasing
    auto h = [&](real s) {
        if (j == 1) return s - std::log(s) - lr;
        return real(j - 1) * s + std::log(std::expm1(s)) - std::log(s) - lr;
    };
    auto dh = [&](real s) {
        if (j == 1) return 1 - 1 / s;
        return real(j - 1) + 1 / (-std::expm1(-s)) - 1 / s;
    };
    real lo = j == 1 ? 1.0L : 0x1p-60L;
    real hi = 2;
    while (h(hi) < 0) hi *= 2;
    real s = (lo + hi) / 2;
    for (int it = 0; it < 400; ++it) {
        real v = h(s);
        if (v == 0) break;
        if (v < 0)
            lo = s;
        else
            hi = s;
        if (std::fabs(v) < 0x1p-63L || hi - lo <= 0x1p-63L * hi) break;
        real d = dh(s);
        real ns = d > 0 ? s - v / d : (lo + hi) / 2;
        if (!(ns > lo && ns < hi)) ns = (lo + hi) / 2;
        s = ns;
    }
    return std::exp(s);
}

XiProfile xi_profile(real rho) {
    if (!(rho >= rho_min())) fail(ErrorCode::domain, "rho must be >= 5/log 5");
    XiProfile pr;
    pr.rho = rho;
    pr.xi = xi_root(1, rho);
    const real l2 = std::log(2.0L);
    pr.J = (std::log(pr.xi) + std::log(2 * l2) - std::log(std::log(pr.xi))) / l2;
    unsigned jmax = unsigned(std::floor(pr.J));
    pr.xi_j.assign(jmax + 1, 0);
    pr.xi_j[1] = pr.xi;
    for (unsigned j = 2; j <= jmax; ++j) pr.xi_j[j] = xi_root(j, rho);
    return pr;
}

const std::vector<u64>& xi_lambda() {
    static const std::vector<u64> v = {0, 0, 80, 586, 6381, 89017, 1499750, 29511244, 663184075};
    return v;
}

const XiProfile& x0_profile() {
    static const XiProfile pr = xi_profile(event_value(kX0, 1));
    return pr;
}

unsigned rho_exponent(u64 p, const Rho& rho, bool closed) {
    unsigned a = 0;
    for (unsigned j = 1; j < 128; ++j) {
        if (j > 1 && ipow128(p, j - 1) > (u128(1) << 100)) break;
        int c = compare_event(p, j, rho);
        if (c < 0 || (closed && c == 0))
            a = j;
        else
            break;
    }
    return a;
}

namespace {

// Calls f(p, a) for the prime powers of N_rho in increasing p; stops after max_p when given.
template <class F>
void walk_N_rho(const Rho& rho, bool closed, u64 max_p, F&& f) {
    XiProfile pr = xi_profile(rho.value);
    const real tol = 1e-12L;
    const real two_hi = pr.at(2) * (1 + tol);
    const real one_lo = pr.xi * (1 - tol);
    u64 limit = u64(std::ceil(pr.xi * (1 + tol))) + 2;
    if (max_p) limit = std::min(limit, max_p);
    PrimeStream s(std::max<u64>(limit, 2));
    u64 p;
    while (s.next(p)) {
        real rp = real(p);
        unsigned a = (rp > two_hi && rp < one_lo) ? 1 : rho_exponent(p, rho, closed);
        if (a == 0) break;  // exponents do not increase with p
        f(p, a);
    }
}

struct PrefixExcess {
    u128 E = 0;
    Neumaier Estar;
    std::vector<std::pair<u64, unsigned>> prefix;
};

// E and E* only involve primes below xi_2
PrefixExcess prefix_excess(const Rho& rho, bool closed) {
    XiProfile pr = xi_profile(rho.value);
    PrefixExcess out;
    u64 lim = u64(std::ceil(pr.at(2) * (1 + 1e-12L))) + 2;
    PrimeStream s(lim);
    u64 p;
    while (s.next(p)) {
        unsigned a = rho_exponent(p, rho, closed);
        if (a < 2) break;
        out.E += ipow128(p, a) - p;
        out.Estar.add(real(a - 1) * std::log(real(p)));
        out.prefix.emplace_back(p, a);
    }
    return out;
}

}  // namespace

FactoredNumber build_N_rho(const Rho& rho, bool closed, u64 max_xi) {
    XiProfile pr = xi_profile(rho.value);
    if (pr.xi > real(max_xi))
        fail(ErrorCode::resource, "N_rho with xi = " + std::to_string(double(pr.xi)) + " exceeds the factor-list cap " +
                                      std::to_string(max_xi) + "; use n_rho_summary");
    FactoredNumber f;
    walk_N_rho(rho, closed, 0, [&](u64 p, unsigned a) { f.push(p, a); });
    return f;
}

NrhoSummary n_rho_summary(const Rho& rho, bool closed) {
    NrhoSummary s;
    walk_N_rho(rho, closed, 0, [&](u64 p, unsigned a) {
        real lp = std::log(real(p));
        s.ell += ipow128(p, a);
        s.logN.add(real(a) * lp);
        s.pmax = p;
        ++s.prime_count;
        s.sum_primes += p;
        s.theta.add(lp);
        if (a >= 2) {
            s.E += ipow128(p, a) - p;
            s.Estar.add(real(a - 1) * lp);
            s.prefix.emplace_back(p, a);
        }
    });
    return s;
}

namespace {

void init_first(Superchampion& c, Neumaier& logN, Neumaier& prefix_log) {
    const real l2 = std::log(2.0L), l3 = std::log(3.0L);
    logN = {};
    logN.add(l2);
    logN.add(l2);
    logN.add(l3);
    prefix_log = {};
    prefix_log.add(l2);
    prefix_log.add(l2);
    c = Superchampion{};
    c.ell = 7;
    c.logN = logN.value();
    c.pmax = 3;
    c.prefix_ell = 4;
    c.prefix_logA = prefix_log.value();
    c.event_p = 2;
    c.event_j = 2;
    // 12 = 2 * 6 squares 2, so it counts as type 2 against its predecessor 6
    c.type2 = true;
    c.type2_q = 2;
}

}  // namespace

Superchampion first_superchampion() {
    Superchampion c;
    Neumaier a, b;
    init_first(c, a, b);
    return c;
}

// ---- event walk ----

namespace {
struct CandAfter {
    template <class C>
    bool operator()(const C& a, const C& b) const {
        if (a.key > b.key * (1 + kFastMargin)) return true;
        if (a.key < b.key * (1 - kFastMargin)) return false;
        return compare_events(a.p, a.j, b.p, b.j) > 0;
    }
};
}  // namespace

EventEnumerator::EventEnumerator() : stream_(3) {
    init_first(cur_, logN_, prefix_log_);
    small_ = simple_primes(1 << 16);
    push_cand(2, 3);
    push_cand(3, 2);
    square_idx_ = 1;  // small_[1] == 3
    stream_.next(fresh_);
}

void EventEnumerator::push_cand(u64 p, unsigned j) {
    heap_.push_back({p, j, event_value(p, j)});
    std::push_heap(heap_.begin(), heap_.end(), CandAfter{});
}

bool EventEnumerator::next(Superchampion& out) {
    if (!started_) {
        started_ = true;
        out = cur_;
        return true;
    }
    const Cand top = heap_.front();
    const real lf = std::log(real(fresh_));
    const real fkey = real(fresh_) / lf;
    int c;
    if (fkey < top.key * (1 - kFastMargin))
        c = -1;
    else if (fkey > top.key * (1 + kFastMargin))
        c = 1;
    else
        c = compare_events(fresh_, 1, top.p, top.j);
    if (c == 0) fail(ErrorCode::integrity, "simultaneous events at prime " + std::to_string(fresh_));
    if (c < 0) {
        cur_.ell += fresh_;
        logN_.add(lf);
        cur_.pmax = fresh_;
        cur_.type2 = false;
        cur_.type2_q = 0;
        cur_.event_p = fresh_;
        cur_.event_j = 1;
        if (!stream_.next(fresh_)) fail(ErrorCode::capacity, "prime stream exhausted at 2^40");
    } else {
        std::pop_heap(heap_.begin(), heap_.end(), CandAfter{});
        heap_.pop_back();
        const u64 q = top.p;
        const unsigned j = top.j;
        const real lq = std::log(real(q));
        cur_.ell += event_num(q, j);
        logN_.add(lq);
        cur_.type2 = true;
        cur_.type2_q = q;
        cur_.event_p = q;
        cur_.event_j = j;
        if (j == 2) {
            cur_.prefix_ell += u128(q) * q;
            prefix_log_.add(lq);
            prefix_log_.add(lq);
            if (++square_idx_ >= small_.size()) small_ = simple_primes(small_.back() * 2);
            push_cand(small_[square_idx_], 2);
        } else {
            cur_.prefix_ell += event_num(q, j);
            prefix_log_.add(lq);
        }
        push_cand(q, j + 1);
    }
    cur_.logN = logN_.value();
    cur_.prefix_logA = prefix_log_.value();
    out = cur_;
    return true;
}

Type2Cache build_type2_cache(u128 limit_ell) {
    Type2Cache c;
    c.limit = limit_ell;
    EventEnumerator e;
    Superchampion s;
    // the cache starts after the first record
    e.next(s);
    while (e.next(s) && s.ell <= limit_ell)
        if (s.type2) c.entries.push_back({s.ell, s.type2_q, s.logN});
    return c;
}

// ---- cache file ----

std::string Type2Cache::encode() const {
    std::ostringstream os;
    os << "landau-type2 v1 limit=" << landau::to_string(limit) << " count=" << entries.size() << "\n";
    for (const auto& e : entries) os << landau::to_string(e.ell) << "," << e.q << "," << hexfloat(e.logN) << "\n";
    return os.str();
}

Type2Cache Type2Cache::decode(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line.rfind("landau-type2 v1 limit=", 0) != 0)
        fail(ErrorCode::integrity, "type-2 cache: bad header");
    Type2Cache c;
    size_t sp = line.find(" count=");
    c.limit = parse_u128(line.substr(22, sp == std::string::npos ? std::string::npos : sp - 22));
    size_t count = sp == std::string::npos ? size_t(-1) : std::stoull(line.substr(sp + 7));
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        size_t a = line.find(','), b = line.find(',', a + 1);
        if (a == std::string::npos || b == std::string::npos) fail(ErrorCode::integrity, "type-2 cache: bad line " + line);
        Type2Entry e;
        e.ell = parse_u128(line.substr(0, a));
        e.q = std::stoull(line.substr(a + 1, b - a - 1));
        e.logN = parse_hexfloat(line.substr(b + 1));
        c.entries.push_back(e);
    }
    if (count != size_t(-1) && count != c.entries.size())
        fail(ErrorCode::integrity, "type-2 cache: header count " + std::to_string(count) + " but " +
                                       std::to_string(c.entries.size()) + " entries");
    c.validate();
    return c;
}

void Type2Cache::validate() const {
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& e = entries[i];
        if (i && entries[i - 1].ell >= e.ell) fail(ErrorCode::integrity, "type-2 cache: ell not increasing at entry " + std::to_string(i));
        if (!is_prime(e.q)) fail(ErrorCode::integrity, "type-2 cache: q = " + std::to_string(e.q) + " is not prime");
        if (e.ell > limit) fail(ErrorCode::integrity, "type-2 cache: entry beyond declared limit");
    }
}

void Type2Cache::save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::io, "cannot write " + path);
    f << encode();
    if (!f) fail(ErrorCode::io, "write failed: " + path);
}

Type2Cache Type2Cache::load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::io, "cannot read " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return decode(os.str());
}

// ---- table-driven successor ----

Enumerator::Enumerator(const Type2Cache& cache, u128 limit_ell) : cache_(cache), limit_(limit_ell), stream_(3) {
    if (cache.limit < limit_ell)
        fail(ErrorCode::integrity, "type-2 cache covers ell <= " + landau::to_string(cache.limit) + "; missing (" +
                                       landau::to_string(cache.limit) + ", " + landau::to_string(limit_ell) + "]");
    init_first(cur_, logN_, prefix_log_);
    prefix_ = {{2, 2}};
    stream_.next(fresh_);
    while (t2_index_ < cache_.entries.size() && cache_.entries[t2_index_].ell <= cur_.ell) ++t2_index_;
}

bool Enumerator::next(Superchampion& out) {
    if (done_) return false;
    if (!started_) {
        started_ = true;
        if (cur_.ell > limit_) return done_ = true, false;
        out = cur_;
        return true;
    }
    const bool have_t2 = t2_index_ < cache_.entries.size();
    const u128 one = cur_.ell + fresh_;
    if (have_t2 && one == cache_.entries[t2_index_].ell)
        fail(ErrorCode::integrity, "next prime and type-2 entry land on the same ell = " + landau::to_string(one));
    if (have_t2 && one > cache_.entries[t2_index_].ell) {
        const Type2Entry& t = cache_.entries[t2_index_];
        if (t.ell > limit_) return done_ = true, false;
        const u64 q = t.q;
        unsigned j = 0;
        auto it = std::find_if(prefix_.begin(), prefix_.end(), [&](auto& e) { return e.first == q; });
        if (it != prefix_.end()) {
            j = ++it->second;
        } else {
            if (q != next_prime_ge(prefix_.back().first + 1))
                fail(ErrorCode::integrity, "type-2 entry at ell " + landau::to_string(t.ell) + " squares " +
                                               std::to_string(q) + " out of order");
            prefix_.emplace_back(q, 2);
            j = 2;
        }
        if (t.ell - cur_.ell != event_num(q, j))
            fail(ErrorCode::integrity, "type-2 entry at ell " + landau::to_string(t.ell) + " does not match q^" +
                                           std::to_string(j) + " step");
        const real lq = std::log(real(q));
        logN_.add(lq);
        if (std::fabs(logN_.value() - t.logN) > 1e-12L * t.logN)
            fail(ErrorCode::integrity, "type-2 entry at ell " + landau::to_string(t.ell) + ": log N mismatch");
        if (j == 2) {
            cur_.prefix_ell += u128(q) * q;
            prefix_log_.add(lq);
            prefix_log_.add(lq);
        } else {
            cur_.prefix_ell += event_num(q, j);
            prefix_log_.add(lq);
        }
        cur_.ell = t.ell;
        cur_.type2 = true;
        cur_.type2_q = q;
        cur_.event_p = q;
        cur_.event_j = j;
        ++t2_index_;
    } else {
        if (one > limit_) return done_ = true, false;
        cur_.ell = one;
        logN_.add(std::log(real(fresh_)));
        cur_.pmax = fresh_;
        cur_.type2 = false;
        cur_.type2_q = 0;
        cur_.event_p = fresh_;
        cur_.event_j = 1;
        if (!stream_.next(fresh_)) fail(ErrorCode::capacity, "prime stream exhausted at 2^40");
    }
    cur_.logN = logN_.value();
    cur_.prefix_logA = prefix_log_.value();
    out = cur_;
    return true;
}

void enumerate(u128 limit_ell, const Type2Cache* cache, const std::function<bool(const Superchampion&)>& f) {
    Superchampion s;
    if (cache) {
        Enumerator e(*cache, limit_ell);
        while (e.next(s))
            if (!f(s)) return;
        return;
    }
    EventEnumerator e;
    while (e.next(s) && s.ell <= limit_ell)
        if (!f(s)) return;
}

std::vector<TableRow> superchampion_table(u128 limit_ell) {
    std::vector<Superchampion> recs;
    EventEnumerator e;
    Superchampion s;
    while (e.next(s)) {
        recs.push_back(s);
        if (s.ell > limit_ell) break;
    }
    std::vector<TableRow> rows;
    for (size_t i = 0; i + 1 < recs.size(); ++i) {
        TableRow r;
        r.ell = recs[i].ell;
        r.rho = recs[i + 1].event();
        r.N = build_N_rho(r.rho, false).to_string();
        r.n_lo = recs[i].ell;
        r.n_hi = recs[i + 1].ell - 1;
        r.xi = xi_root(1, r.rho.value);
        rows.push_back(r);
    }
    return rows;
}

Located locate(u128 n, const Type2Cache* cache) {
    if (n < 7) fail(ErrorCode::domain, "N', N'' are defined for n >= 7");
    Located L;
    bool found = false;
    Superchampion prev;
    auto take = [&](const Superchampion& s) {
        if (s.ell > n) {
            L.Nprime = prev;
            L.Nsecond = s;
            found = true;
            return false;
        }
        prev = s;
        return true;
    };
    if (cache) {
        // the gap ell(N'') - ell(N') is at most xi < 2 sqrt(n log n) + 100
        real nn = real(n);
        u128 lim = n + u128(2 * std::sqrt(nn * std::log(nn)) + 100);
        enumerate(lim, cache, take);
    } else {
        enumerate(~u128(0), nullptr, take);
    }
    if (!found) fail(ErrorCode::capacity, "enumeration ended before n");
    L.rho = L.Nsecond.event();
    L.profile = xi_profile(L.rho.value);
    return L;
}

u64 count_s(u64 p_i0, u128 budget) {
    GrowingPrimeStream s(p_i0, p_i0 + 4096);
    u128 sum = 0;
    u64 cnt = 0, p;
    while (s.next(p)) {
        if (sum + p > budget) break;
        sum += p;
        ++cnt;
    }
    return cnt;
}

ExcessReport excesses_at(const Rho& rho, u128 offset) {
    if (!rho.is_event()) fail(ErrorCode::parameter, "excesses need an event parameter");
    u128 gap = event_num(rho.p, rho.j);
    if (offset >= gap) fail(ErrorCode::precondition, "offset must be below ell(N'') - ell(N')");
    NrhoSummary s = n_rho_summary(rho, false);
    ExcessReport r;
    r.E = s.E;
    r.Estar = s.Estar.value();
    r.i0 = s.prime_count;
    r.p_i0 = s.pmax;
    r.nprime = s.ell;
    r.n = s.ell + offset;
    r.s = count_s(s.pmax, offset + s.E);
    return r;
}

ExcessReport excesses(u128 n, const Type2Cache* cache) {
    Located L = locate(n, cache);
    ExcessReport r = excesses_at(L.rho, n - L.Nprime.ell);
    if (r.nprime != L.Nprime.ell)
        fail(ErrorCode::integrity, "ell(N_rho) = " + to_string(r.nprime) + " disagrees with enumeration " +
                                       to_string(L.Nprime.ell));
    return r;
}

// ---- W_a ----

real W_a(real a, real t) {
    const real l2 = std::log(2.0L);
    return -a + a * a / (4 * t) + 1.5L * l2 + std::log(t) - std::log(2 * t - a) -
           std::exp(-t) * std::sqrt(2.0L) / 2 * (2 * t - a);
}

real W_a_dt(real a, real t) {
    const real r = std::sqrt(2.0L) / 2;
    return -a * a / (4 * t * t) + 1 / t - 2 / (2 * t - a) + std::exp(-t) * r * (2 * t - a) - 2 * r * std::exp(-t);
}

real W_a_root(real a, real lo, real hi) {
    real flo = W_a(a, lo), fhi = W_a(a, hi);
    if ((flo > 0) == (fhi > 0)) fail(ErrorCode::numerical, "W_a root not bracketed");
    for (int i = 0; i < 200 && hi - lo > 0x1p-62L * hi; ++i) {
        real m = (lo + hi) / 2;
        if ((W_a(a, m) > 0) == (flo > 0))
            lo = m;
        else
            hi = m;
    }
    return (lo + hi) / 2;
}

DoubleRoot W_double_root() {
    // t*(a): the local maximum of W_a beyond the first turning point
    auto tmax = [](real a) {
        real lo = 4, hi = 12;
        for (int i = 0; i < 200 && hi - lo > 0x1p-62L * hi; ++i) {
            real m = (lo + hi) / 2;
            if (W_a_dt(a, m) > 0)
                lo = m;
            else
                hi = m;
        }
        return (lo + hi) / 2;
    };
    real lo = 0.366L, hi = 0.4L;
    if (!(W_a(lo, tmax(lo)) > 0 && W_a(hi, tmax(hi)) < 0)) fail(ErrorCode::numerical, "double root not bracketed");
    for (int i = 0; i < 200 && hi - lo > 0x1p-62L; ++i) {
        real m = (lo + hi) / 2;
        if (W_a(m, tmax(m)) > 0)
            lo = m;
        else
            hi = m;
    }
    DoubleRoot d;
    d.a0 = (lo + hi) / 2;
    d.t0 = tmax(d.a0);
    return d;
}

// ---- xi bound checks ----

namespace {

Interval dec(real v) { return {down(v), up(v)}; }
Interval rel(real v, real r) { return {v - std::fabs(v) * r, v + std::fabs(v) * r}; }
// root-finder output enclosure
Interval rootI(real v) { return rel(v, 0x1p-56L); }

struct XiDef {
    BoundFamily info;
    real min_xi;
    bool snap_prime;  // sample is replaced by the smallest prime >= xi
};

const std::vector<XiDef>& xi_defs() {
    static const std::vector<XiDef> v = {
        {{"x2345", "xi_2 < sqrt(xi/2)(1 - log 2/(2 log xi))", "xi >= 31643"}, 31643, false},
        {{"x2366", "xi_2 > sqrt(xi/2)(1 - 0.366/log xi)", "xi >= 4.28e9"}, 4.28e9L, false},
        {{"xi2_371", "xi_2 > sqrt(xi/2)(1 - 0.371/log xi)", "xi >= 5"}, 5, false},
        {{"1slogxi2", "2/log xi (1 + log 2/log xi) <= 1/log xi_2 <= 2/log xi (1 + 0.75/log xi)", "xi >= x0"},
         real(kX0), false},
        {{"thxi2", "sqrt(xi/2)(1 - 0.521/L) <= theta^-(xi_2) <= theta(xi_2) <= sqrt(xi/2)(1 - 0.346/L)", "xi >= x0"},
         real(kX0), false},
        {{"pi2xi2", "c(1 + 0.122/L) <= pi_2^-(xi_2) <= pi_2(xi_2) <= c(1 + 0.458/L), c = xi^1.5/(3 sqrt2 L)",
          "xi >= x0"},
         real(kX0), false},
        {{"EN", "c(1 + 0.12/L) <= E(N') <= c(1 + 0.98/L), c = xi^1.5/(3 sqrt2 L)", "xi >= x0"}, real(kX0), false},
        {{"ENstar", "sqrt(xi/2)(1 - 0.521/L) <= E*(N') <= sqrt(xi/2)(1 + 0.305/L) <= 0.72 sqrt xi", "xi >= x0"},
         real(kX0), false},
        {{"sn", "c(1 + 0.095/L) <= s <= c(1 + 1.01/L), c = sqrt(xi)/(3 sqrt2 L), at n = n' and n'' - 1",
          "xi >= x0 (prime)"},
         real(kX0), true},
        {{"xinm", "sqrt(nL)(1 + (l-1)/(2L) - l^2/(8L^2) + 0.38 l/L^2) <= xi <= x(n)", "n >= nu0 (xi >= x0 prime)"},
         real(kX0), true},
        {{"xinM", "xi <= x(n) <= sqrt(nL)(1 + (l-1)/(2L) - 0.0013 l^2/L^2)", "n >= pi_1(x0) (xi >= x0 prime)"},
         real(kX0), true},
        {{"minxicoro", "sqrt(nL)(1 + (l-1.019)/(2L)) <= xi <= x(n) <= sqrt(nL)(1 + (l-1)/(2L))",
          "n >= nu0 (xi >= x0 prime)"},
         real(kX0), true},
        {{"xk1sk", "xi_j <= xi^(1/j) for 2 <= j <= J", "xi >= 5"}, 5, false},
        {{"xsk1sk", "xi_j <= (xi/j)^(1/j) for 2 <= j <= 8 with xi >= lambda_j", "xi >= 80"}, 80, false},
    };
    return v;
}

Verdict between(Interval v, Interval lo_bound, Interval hi_bound) {
    if (lo_bound.hi <= v.lo && v.hi <= hi_bound.lo) return Verdict::pass;
    if (v.hi < lo_bound.lo || v.lo > hi_bound.hi) return Verdict::fail;
    return Verdict::undecided;
}

Verdict worst(Verdict a, Verdict b) {
    if (a == Verdict::fail || b == Verdict::fail) return Verdict::fail;
    if (a == Verdict::undecided || b == Verdict::undecided) return Verdict::undecided;
    return Verdict::pass;
}

Interval u128I(u128 v) { return Interval::exact_int(v); }

// n-side enclosures
struct NSide {
    Interval L, lam, s;  // log n, log log n, sqrt(n log n)
};
NSide nside(u128 n) {
    NSide r;
    Interval N = u128I(n);
    r.L = log(N);
    r.lam = log(r.L);
    r.s = sqrt(N * r.L);
    return r;
}

}  // namespace

const std::vector<BoundFamily>& xi_bound_families() {
    static const std::vector<BoundFamily> v = [] {
        std::vector<BoundFamily> o;
        for (auto& d : xi_defs()) o.push_back(d.info);
        return o;
    }();
    return v;
}

BoundReport check_xi_bounds(const std::string& family, std::vector<real> xi_samples, bool witness) {
    const XiDef* def = nullptr;
    for (auto& d : xi_defs())
        if (d.info.id == family) def = &d;
    if (!def) fail(ErrorCode::parameter, "unknown xi bound family: " + family);
    BoundReport rep;
    rep.family = family;
    rep.statement = def->info.statement;
    rep.range = def->info.range;
    std::sort(xi_samples.begin(), xi_samples.end());
    for (real xi_in : xi_samples) {
        if (!(xi_in >= 5)) fail(ErrorCode::domain, "xi must be >= 5");
        bool in = xi_in >= def->min_xi;
        if (!in && !witness) fail(ErrorCode::precondition, family + " is stated for " + def->info.range);
        Rho rho;
        real xi = xi_in;
        if (def->snap_prime) {
            u64 p = next_prime_ge(u64(std::ceil(xi_in)));
            rho = Rho::event(p, 1);
            xi = real(p);
        } else {
            rho = Rho::of(xi / std::log(xi));
        }
        XiProfile pr = xi_profile(rho.value);
        Interval X = rootI(pr.xi);
        if (def->snap_prime) X = Interval(xi);
        Interval L = log(X);
        Interval one(1);
        Interval h = sqrt(X / Interval(2));
        Interval c15 = X * sqrt(X) / (Interval(3) * sqrt(Interval(2)) * L);
        Interval x2 = rootI(pr.at(2));
        BoundSample b;
        b.x = u64(std::llround(xi));
        b.outside_range = !in;
        const std::string& f = family;
        if (f == "x2345") {
            b.lhs = x2;
            b.rhs = h * (one - log(Interval(2)) / (Interval(2) * L));
            b.verdict = b.lhs.hi < b.rhs.lo ? Verdict::pass : (b.lhs.lo >= b.rhs.hi ? Verdict::fail : Verdict::undecided);
        } else if (f == "x2366" || f == "xi2_371") {
            b.lhs = x2;
            b.rhs = h * (one - dec(f == "x2366" ? 0.366L : 0.371L) / L);
            b.verdict = b.lhs.lo > b.rhs.hi ? Verdict::pass : (b.lhs.hi <= b.rhs.lo ? Verdict::fail : Verdict::undecided);
        } else if (f == "1slogxi2") {
            b.lhs = one / log(x2);
            Interval lo = Interval(2) / L * (one + log(Interval(2)) / L);
            Interval hi = Interval(2) / L * (one + dec(0.75L) / L);
            b.rhs = Interval(lo.lo, hi.hi);
            b.verdict = between(b.lhs, lo, hi);
        } else if (f == "thxi2" || f == "pi2xi2") {
            u64 fl = u64(std::floor(x2.lo));
            if (u64(std::floor(x2.hi)) != fl) {
                b.verdict = Verdict::undecided;
            } else {
                unsigned r = f == "thxi2" ? 0 : 2;
                PrimeSums ps = prime_sums(fl, r);
                bool integral = real(fl) == pr.at(2);
                Interval incl, strict;
                if (r == 0) {
                    incl = ps.theta_interval(false);
                    strict = ps.theta_interval(integral);
                } else {
                    auto conv = [](const u256& v) {
                        real x = v.convert_to<real>();
                        return Interval(down(x), up(x));
                    };
                    incl = conv(ps.pi[2]);
                    strict = conv(integral ? ps.pi_strict[2] : ps.pi[2]);
                }
                Interval lo = r == 0 ? h * (one - dec(0.521L) / L) : c15 * (one + dec(0.122L) / L);
                Interval hi = r == 0 ? h * (one - dec(0.346L) / L) : c15 * (one + dec(0.458L) / L);
                b.lhs = hull(strict, incl);
                b.rhs = Interval(lo.lo, hi.hi);
                b.verdict = worst(between(strict, lo, Interval(HUGE_VALL)), between(incl, Interval(-HUGE_VALL), hi));
            }
        } else if (f == "EN" || f == "ENstar") {
            PrefixExcess pe = prefix_excess(rho, false);
            if (f == "EN") {
                b.lhs = u128I(pe.E);
                Interval lo = c15 * (one + dec(0.12L) / L), hi = c15 * (one + dec(0.98L) / L);
                b.rhs = Interval(lo.lo, hi.hi);
                b.verdict = between(b.lhs, lo, hi);
            } else {
                real e = pe.Estar.value();
                b.lhs = rel(e, 0x1p-50L);
                Interval lo = h * (one - dec(0.521L) / L);
                Interval hi = h * (one + dec(0.305L) / L);
                Interval hi2 = dec(0.72L) * sqrt(X);
                b.rhs = Interval(lo.lo, std::min(hi.hi, hi2.hi));
                b.verdict = worst(between(b.lhs, lo, hi), hi.hi <= hi2.lo ? Verdict::pass : Verdict::fail);
            }
        } else if (f == "sn") {
            PrefixExcess pe = prefix_excess(rho, false);
            u64 pi0 = prev_prime(rho.p);
            u64 s0 = count_s(pi0, pe.E);
            u64 s1 = count_s(pi0, pe.E + rho.p - 1);
            Interval c = sqrt(X) / (Interval(3) * sqrt(Interval(2)) * L);
            Interval lo = c * (one + dec(0.095L) / L), hi = c * (one + dec(1.01L) / L);
            b.lhs = Interval(real(s0), real(s1));
            b.rhs = Interval(lo.lo, hi.hi);
            b.verdict = worst(between(Interval(real(s0)), lo, hi), between(Interval(real(s1)), lo, hi));
        } else if (f == "xinm" || f == "xinM" || f == "minxicoro") {
            // n' = pi_1^-(p) + E; then x(n) = p_{k+1} by continuing the sigma scan
            u64 p = rho.p;
            PrimeSums ps = prime_sums(p - 1, 1);
            PrefixExcess pe = prefix_excess(rho, false);
            u128 sig = ps.pi[1].convert_to<u128>();
            u128 n1 = sig + pe.E;
            Verdict v = Verdict::pass;
            Interval lhs_hull(HUGE_VALL, -HUGE_VALL), rhs_hull(HUGE_VALL, -HUGE_VALL);
            for (u128 n : {n1, n1 + p - 1}) {
                GrowingPrimeStream st(p - 1, p + 4096);
                u128 s = sig;
                u64 q = 0;
                while (st.next(q) && s + q <= n) s += q;
                NSide ns = nside(n);
                Interval lower, upper;
                Interval Xn = Interval(real(q));
                if (f == "xinm") {
                    lower = ns.s * (one + (ns.lam - one) / (Interval(2) * ns.L) -
                                    ns.lam * ns.lam / (Interval(8) * ns.L * ns.L) + dec(0.38L) * ns.lam / (ns.L * ns.L));
                    v = worst(v, between(X, lower, Xn));
                    lhs_hull = hull(lhs_hull, X);
                    rhs_hull = hull(rhs_hull, lower);
                } else if (f == "xinM") {
                    upper = ns.s * (one + (ns.lam - one) / (Interval(2) * ns.L) -
                                    dec(0.0013L) * ns.lam * ns.lam / (ns.L * ns.L));
                    v = worst(v, between(X, Interval(-HUGE_VALL), Xn));
                    v = worst(v, between(Xn, Interval(-HUGE_VALL), upper));
                    lhs_hull = hull(lhs_hull, Xn);
                    rhs_hull = hull(rhs_hull, upper);
                } else {
                    lower = ns.s * (one + (ns.lam - dec(1.019L)) / (Interval(2) * ns.L));
                    upper = ns.s * (one + (ns.lam - one) / (Interval(2) * ns.L));
                    v = worst(v, between(X, lower, Xn));
                    v = worst(v, between(Xn, Interval(-HUGE_VALL), upper));
                    lhs_hull = hull(lhs_hull, hull(X, Xn));
                    rhs_hull = hull(rhs_hull, hull(lower, upper));
                }
            }
            b.lhs = lhs_hull;
            b.rhs = rhs_hull;
            b.verdict = v;
        } else if (f == "xk1sk" || f == "xsk1sk") {
            Verdict v = Verdict::pass;
            real worst_ratio = 0;
            unsigned jend = f == "xk1sk" ? pr.jmax() : std::min(8u, pr.jmax());
            for (unsigned j = 2; j <= jend; ++j) {
                if (f == "xsk1sk" && pr.xi < real(xi_lambda()[j])) continue;
                Interval xj = rootI(pr.at(j));
                Interval base = f == "xk1sk" ? X : X / Interval(real(j));
                // xi_j^j <= base avoids the inexact exponent 1/j
                Interval xjj = pow(xj, real(j));
                v = worst(v, between(xjj, Interval(-HUGE_VALL), base));
                worst_ratio = std::max(worst_ratio, xjj.hi / base.lo);
            }
            b.lhs = Interval(worst_ratio);
            b.rhs = Interval(1);
            b.verdict = v;
        }
        rep.samples.push_back(b);
    }
    return rep;
}

}  // namespace landau
