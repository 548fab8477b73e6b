#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "numeric.hpp"

namespace landau {

using u256 = boost::multiprecision::checked_uint256_t;

constexpr u64 kMaxSieveLimit = u64(1) << 40;
constexpr u64 kDefaultSegmentBits = u64(1) << 26;

// Plain sieve of Eratosthenes, for base primes and small tables.
std::vector<u64> simple_primes(u64 limit);

// Segmented odd-only bit sieve emitting the primes in (after, limit].
class PrimeStream {
public:
    explicit PrimeStream(u64 limit, u64 after = 0, u64 segment_bits = kDefaultSegmentBits,
                         u64 memory_budget = u64(2) << 30);

    bool next(u64& p) {
        if (peeked_) {
            p = *peeked_;
            peeked_.reset();
            return true;
        }
        if (pending_two_) {
            pending_two_ = false;
            p = 2;
            return true;
        }
        while (word_ == 0) {
            if (++wi_ >= nwords_) {
                if (!load_segment()) return false;
                wi_ = 0;
            }
            word_ = bits_[wi_];
        }
        int b = __builtin_ctzll(word_);
        word_ &= word_ - 1;
        p = base_ + 2 * (64 * wi_ + u64(b));
        return true;
    }

    std::optional<u64> peek();

    u64 limit() const { return limit_; }
    u64 segment_base() const { return base_; }
    u64 segment_size() const { return segment_bits_; }
    u64 segments_required() const { return segments_required_; }
    // Primes of the current segment that have not been emitted yet.
    std::vector<u64> current_primes() const;

private:
    bool load_segment();

    struct Base {
        u64 p;
        u64 next;  // next odd multiple to strike, as a value
    };

    u64 limit_;
    u64 segment_bits_;
    u64 segments_required_ = 0;
    u64 next_base_;  // odd value where the next segment starts
    u64 base_ = 1;
    std::vector<Base> sieving_;
    std::vector<u64> bits_;
    u64 nwords_ = 0;
    u64 wi_ = 0;
    u64 word_ = 0;
    bool pending_two_ = false;
    bool done_ = false;
    std::optional<u64> peeked_;
};

// Unbounded stream of the primes > after; re-sieves with a doubled limit when a window runs out.
class GrowingPrimeStream {
public:
    explicit GrowingPrimeStream(u64 after = 0, u64 initial_limit = u64(1) << 16);
    bool next(u64& p) {
        if (s_->next(p)) {
            last_ = p;
            return true;
        }
        return grow(p);
    }

private:
    bool grow(u64& p);
    std::unique_ptr<PrimeStream> s_;
    u64 limit_;
    u64 last_;
};

// k, p_k, sigma_k = p_1 + ... + p_k, theta(p_k) = log N_k.
struct ChebyshevState {
    u64 k = 0;
    u64 p = 0;
    u128 sigma = 0;
    Neumaier theta;

    void push(u64 q) {
        ++k;
        p = q;
        sigma += q;
        theta.add(std::log(real(q)));
    }
    real theta_value() const { return theta.value(); }
    real logN() const { return theta.value(); }
    // theta(p_k) enclosure: per-term logl error plus summation error
    Interval theta_interval() const;

    bool operator==(const ChebyshevState& o) const {
        return k == o.k && p == o.p && sigma == o.sigma && theta.sum == o.theta.sum &&
               theta.comp == o.theta.comp;
    }
};

struct RangeExhausted : Error {
    ChebyshevState state;
    RangeExhausted(const ChebyshevState& s, const std::string& msg)
        : Error(ErrorCode::range_exhausted, msg), state(s) {}
};

void save_checkpoint(const std::string& path, const ChebyshevState& s);
ChebyshevState load_checkpoint(const std::string& path);
std::string encode_checkpoint(const ChebyshevState& s);
ChebyshevState decode_checkpoint(const std::string& bytes);

// Stream positioned just after the state's last prime.
PrimeStream resume_stream(const ChebyshevState& s, u64 limit);

// Advance until stop(state, next_prime) holds; next_prime is the prime that would be consumed.
ChebyshevState chebyshev_scan(PrimeStream& stream, ChebyshevState state,
                              const std::function<bool(const ChebyshevState&, u64)>& stop);

// k(n): largest k with sigma_k <= n, with the state at k and p_{k+1}.
struct KofN {
    ChebyshevState state;
    u64 next_prime;
};
KofN k_of_n(u128 n);

// Exact power sums.
struct PowerSum {
    unsigned r = 0;
    u64 x = 0;
    u256 value = 0;
    u256 strict_value = 0;
};

PowerSum pi_r(unsigned r, u64 x);

// pi_0..pi_rmax, theta (and optionally W) at x.
struct PrimeSums {
    u64 x = 0;
    std::vector<u256> pi;  // inclusive, pi[0] = pi(x)
    std::vector<u256> pi_strict;
    Neumaier theta;
    Neumaier theta_strict;
    Neumaier W;
    u64 count = 0;
    Interval theta_interval(bool strict = false) const;
    Interval W_interval() const;
};

// Sum with a 128-bit fast path that spills into 256 bits.
struct PowerAcc {
    u128 fast = 0;
    u256 slow = 0;
    void add(u128 v);
    u256 total() const;
};

class PrimeSumAccumulator {
public:
    explicit PrimeSumAccumulator(unsigned rmax, bool track_W = false);
    void push(u64 p);
    // Sums at x, assuming every pushed prime is <= x and the next one is > x.
    PrimeSums snapshot(u64 x) const;
    u64 count() const { return count_; }

private:
    unsigned rmax_;
    bool track_W_;
    std::vector<PowerAcc> acc_;
    Neumaier theta_, theta_prev_, W_;
    u64 count_ = 0;
    u64 last_ = 0;
};

PrimeSums prime_sums(u64 x, unsigned rmax, bool with_W = false);

real W(u64 x);

bool is_prime(u64 n);
// smallest prime >= n
u64 next_prime_ge(u64 n);

}  // namespace landau
