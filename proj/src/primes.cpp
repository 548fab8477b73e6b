#include "primes.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

namespace landau {

std::vector<u64> simple_primes(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    std::vector<char> comp(limit + 1, 0);
    for (u64 i = 2; i <= limit; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) comp[j] = 1;
    }
    return out;
}

namespace {
u64 isqrt(u64 n) {
    u64 r = u64(std::sqrt(double(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

constexpr u64 kBlockBits = u64(1) << 18;
}  // namespace

GrowingPrimeStream::GrowingPrimeStream(u64 after, u64 initial_limit)
    : limit_(std::max(initial_limit, after + 64)), last_(after) {
    s_ = std::make_unique<PrimeStream>(std::min(limit_, kMaxSieveLimit), after);
}

bool GrowingPrimeStream::grow(u64& p) {
    while (limit_ < kMaxSieveLimit) {
        u64 prev = limit_;
        limit_ = std::min(kMaxSieveLimit, limit_ * 2);
        s_ = std::make_unique<PrimeStream>(limit_, prev);
        if (s_->next(p)) {
            last_ = p;
            return true;
        }
    }
    return false;
}

PrimeStream::PrimeStream(u64 limit, u64 after, u64 segment_bits, u64 memory_budget)
    : limit_(limit), segment_bits_(segment_bits) {
    if (limit < 2) fail(ErrorCode::domain, "prime limit must be >= 2");
    if (limit > kMaxSieveLimit) fail(ErrorCode::capacity, "prime limit above 2^40");
    if (segment_bits < 64 || segment_bits % 64) fail(ErrorCode::parameter, "segment size must be a positive multiple of 64");
    pending_two_ = after < 2;
    u64 start = after < 3 ? 3 : after + 1;
    if (start % 2 == 0) ++start;
    next_base_ = start;
    u64 odd_count = start > limit ? 0 : (limit - start) / 2 + 1;
    segments_required_ = (odd_count + segment_bits - 1) / segment_bits;

    u64 r = isqrt(limit);
    u64 base_count_est = r < 100 ? 25 : u64(1.26 * double(r) / std::log(double(r))) + 1;
    u64 need = base_count_est * sizeof(Base) + std::min(segment_bits, odd_count + 64) / 8;
    if (need > memory_budget)
        fail(ErrorCode::resource, "sieve needs " + std::to_string(need) + " bytes (" +
                                      std::to_string(segments_required_) + " segments of " +
                                      std::to_string(segment_bits) + " bits); budget " +
                                      std::to_string(memory_budget));

    for (u64 p : simple_primes(r)) {
        if (p == 2) continue;
        u64 m = p * p;
        if (m < start) {
            m = (start + p - 1) / p * p;
            if (m % 2 == 0) m += p;
        }
        sieving_.push_back({p, m});
    }
    bits_.resize(std::min(segment_bits, (odd_count + 63) / 64 * 64) / 64);
}

bool PrimeStream::load_segment() {
    if (done_ || next_base_ > limit_) {
        done_ = true;
        nwords_ = 0;
        return false;
    }
    base_ = next_base_;
    u64 nbits = std::min(segment_bits_, (limit_ - base_) / 2 + 1);
    nwords_ = (nbits + 63) / 64;
    u64* w = bits_.data();
    std::memset(w, 0xff, nwords_ * 8);
    if (nbits % 64) w[nwords_ - 1] = (u64(1) << (nbits % 64)) - 1;

    for (u64 blo = 0; blo < nbits; blo += kBlockBits) {
        u64 bhi = std::min(nbits, blo + kBlockBits);
        u64 vhi = base_ + 2 * (bhi - 1);
        for (Base& b : sieving_) {
            if (b.p * b.p > vhi) break;
            u64 i = (b.next - base_) / 2;
            u64 p = b.p;
            for (; i < bhi; i += p) w[i >> 6] &= ~(u64(1) << (i & 63));
            b.next = base_ + 2 * i;
        }
    }
    next_base_ = base_ + 2 * nbits;
    return true;
}

std::optional<u64> PrimeStream::peek() {
    if (!peeked_) {
        u64 p;
        if (next(p)) peeked_ = p;
    }
    return peeked_;
}

std::vector<u64> PrimeStream::current_primes() const {
    std::vector<u64> out;
    if (peeked_) out.push_back(*peeked_);
    if (pending_two_) out.push_back(2);
    if (wi_ >= nwords_) return out;
    u64 w = word_;
    for (u64 i = wi_; i < nwords_; ++i) {
        if (i != wi_) w = bits_[i];
        while (w) {
            int b = __builtin_ctzll(w);
            w &= w - 1;
            out.push_back(base_ + 2 * (64 * i + u64(b)));
        }
    }
    return out;
}

Interval ChebyshevState::theta_interval() const {
    real t = theta.value();
    // each logl term within 1 ulp (2^-63 relative), plus summation error
    real err = t * std::ldexp(real(1), -61) + real(k) * t * std::ldexp(real(1), -126);
    return widen(Interval(t), err);
}

namespace {
constexpr char kMagic[8] = {'L', 'N', 'D', 'C', 'H', 'K', '0', '1'};
constexpr unsigned kCheckpointVersion = 1;

template <class T>
void put(std::string& s, T v) {
    for (unsigned i = 0; i < sizeof(T); ++i) s.push_back(char((v >> (8 * i)) & 0xff));
}
template <class T>
T get(const std::string& s, size_t& at) {
    if (at + sizeof(T) > s.size()) fail(ErrorCode::io, "truncated checkpoint");
    T v = 0;
    for (unsigned i = 0; i < sizeof(T); ++i) v |= T((unsigned char)s[at + i]) << (8 * i);
    at += sizeof(T);
    return v;
}
}  // namespace

std::string encode_checkpoint(const ChebyshevState& s) {
    std::string out(kMagic, 8);
    put<uint32_t>(out, kCheckpointVersion);
    put<u64>(out, s.p);
    put<u64>(out, s.k);
    put<u64>(out, u64(s.sigma));
    put<u64>(out, u64(s.sigma >> 64));
    std::string th = hexfloat(s.theta.sum) + "|" + hexfloat(s.theta.comp);
    put<uint32_t>(out, uint32_t(th.size()));
    out += th;
    return out;
}

ChebyshevState decode_checkpoint(const std::string& bytes) {
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kMagic, 8) != 0) fail(ErrorCode::io, "not a checkpoint");
    size_t at = 8;
    if (get<uint32_t>(bytes, at) != kCheckpointVersion) fail(ErrorCode::io, "unsupported checkpoint version");
    ChebyshevState s;
    s.p = get<u64>(bytes, at);
    s.k = get<u64>(bytes, at);
    u64 lo = get<u64>(bytes, at);
    u64 hi = get<u64>(bytes, at);
    s.sigma = (u128(hi) << 64) | lo;
    uint32_t n = get<uint32_t>(bytes, at);
    if (at + n > bytes.size()) fail(ErrorCode::io, "truncated checkpoint");
    std::string th = bytes.substr(at, n);
    auto bar = th.find('|');
    if (bar == std::string::npos) fail(ErrorCode::io, "bad theta field");
    s.theta.sum = parse_hexfloat(th.substr(0, bar));
    s.theta.comp = parse_hexfloat(th.substr(bar + 1));
    return s;
}

void save_checkpoint(const std::string& path, const ChebyshevState& s) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) fail(ErrorCode::io, "cannot write " + path);
    std::string b = encode_checkpoint(s);
    f.write(b.data(), std::streamsize(b.size()));
    if (!f) fail(ErrorCode::io, "write failed: " + path);
}

ChebyshevState load_checkpoint(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::io, "cannot read " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return decode_checkpoint(ss.str());
}

PrimeStream resume_stream(const ChebyshevState& s, u64 limit) { return PrimeStream(limit, s.p); }

ChebyshevState chebyshev_scan(PrimeStream& stream, ChebyshevState state,
                              const std::function<bool(const ChebyshevState&, u64)>& stop) {
    for (;;) {
        auto np = stream.peek();
        if (!np) {
            if (stop(state, 0)) return state;
            throw RangeExhausted(state, "scan reached prime limit " + std::to_string(stream.limit()) +
                                            " at k=" + std::to_string(state.k));
        }
        if (stop(state, *np)) return state;
        u64 p = 0;
        stream.next(p);
        state.push(p);
    }
}

KofN k_of_n(u128 n) {
    long double nn = (long double)n;
    long double est = std::sqrt(2 * nn * std::log(2 * nn + 3)) * 1.3L + 100;
    u64 limit = est > (long double)kMaxSieveLimit ? kMaxSieveLimit : u64(est);
    PrimeStream s(limit);
    KofN r;
    r.state = chebyshev_scan(s, ChebyshevState{}, [&](const ChebyshevState& st, u64 np) {
        return np != 0 && st.sigma + np > n;
    });
    r.next_prime = *s.peek();
    return r;
}

void PowerAcc::add(u128 v) {
    u128 t;
    if (__builtin_add_overflow(fast, v, &t)) {
        slow += (u256(u64(fast >> 64)) << 64) + u256(u64(fast));
        fast = v;
    } else {
        fast = t;
    }
}

u256 PowerAcc::total() const { return slow + ((u256(u64(fast >> 64)) << 64) + u256(u64(fast))); }

PrimeSumAccumulator::PrimeSumAccumulator(unsigned rmax, bool track_W) : rmax_(rmax), track_W_(track_W) {
    if (rmax > 6) fail(ErrorCode::parameter, "power sums support r <= 6");
    acc_.resize(rmax + 1);
}

void PrimeSumAccumulator::push(u64 p) {
    ++count_;
    theta_prev_ = theta_;
    real lp = std::log(real(p));
    theta_.add(lp);
    if (track_W_) W_.add(lp * real(p) / real(p - 1));
    u128 pw = 1;
    bool big = false;
    u256 pwb = 1;
    for (unsigned r = 0; r <= rmax_; ++r) {
        if (!big) {
            if (r > 0 && __builtin_mul_overflow(pw, u128(p), &pw)) {
                big = true;
                pwb = 1;
                for (unsigned i = 0; i < r; ++i) pwb *= p;
            }
        } else {
            pwb *= p;
        }
        if (big)
            acc_[r].slow += pwb;
        else
            acc_[r].add(pw);
    }
    last_ = p;
}

PrimeSums PrimeSumAccumulator::snapshot(u64 x) const {
    PrimeSums out;
    out.x = x;
    out.count = count_;
    out.theta = theta_;
    out.theta_strict = last_ == x ? theta_prev_ : theta_;
    out.W = W_;
    for (unsigned r = 0; r <= rmax_; ++r) {
        u256 v = acc_[r].total();
        out.pi.push_back(v);
        u256 xr = 1;
        for (unsigned i = 0; i < r; ++i) xr *= x;
        out.pi_strict.push_back(last_ == x ? u256(v - xr) : v);
    }
    return out;
}

Interval PrimeSums::theta_interval(bool strict) const {
    real t = strict ? theta_strict.value() : theta.value();
    real err = t * std::ldexp(real(1), -61) + real(count) * t * std::ldexp(real(1), -126);
    return widen(Interval(t), err);
}

Interval PrimeSums::W_interval() const {
    real w = W.value();
    return widen(Interval(w), w * std::ldexp(real(1), -59) + real(count) * w * std::ldexp(real(1), -126));
}

PrimeSums prime_sums(u64 x, unsigned rmax, bool with_W) {
    if (x < 2) fail(ErrorCode::domain, "prime sums need x >= 2");
    PrimeSumAccumulator acc(rmax, with_W);
    PrimeStream s(x);
    u64 p;
    while (s.next(p)) acc.push(p);
    return acc.snapshot(x);
}

PowerSum pi_r(unsigned r, u64 x) {
    PrimeSums s = prime_sums(x, r);
    PowerSum out;
    out.r = r;
    out.x = x;
    out.value = s.pi[r];
    out.strict_value = s.pi_strict[r];
    return out;
}

real W(u64 x) {
    if (x < 2) fail(ErrorCode::domain, "W needs x >= 2");
    PrimeStream s(x);
    Neumaier acc;
    u64 p;
    while (s.next(p)) acc.add(std::log(real(p)) * real(p) / real(p - 1));
    return acc.value();
}

namespace {
u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }
u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}
}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    // the first six bases are deterministic below 3474749660383
    static constexpr u64 bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    const int nb = n < 3474749660383ULL ? 6 : 12;
    for (int b = 0; b < nb; ++b) {
        u64 a = bases[b];
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

u64 next_prime_ge(u64 n) {
    if (n <= 2) return 2;
    u64 c = n | 1;
    while (!is_prime(c)) c += 2;
    return c;
}

}  // namespace landau
