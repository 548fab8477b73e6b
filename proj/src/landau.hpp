#pragma once

#include <cstdint>
#include <vector>

#include "factored.hpp"
#include "primes.hpp"
#include "superchampion.hpp"

namespace landau {

constexpr u64 kGLimit = 500000;
constexpr u64 kHLimit = 100000;

// Knapsack over prime powers on budgets 0..limit. Kind::g allows any exponent, Kind::h only 0/1.
// Entry n holds log of the largest M with l(M) <= n.
class LandauTable {
public:
    enum class Kind { g, h };
    LandauTable(Kind kind, u64 limit, bool keep_choices = true);

    Kind kind() const { return kind_; }
    u64 limit() const { return limit_; }
    u64 prime_cutoff() const { return cutoff_; }
    real log(u64 n) const;
    // enclosure of log(n); entries are sums of a few thousand rounded terms
    Interval log_interval(u64 n) const;
    // needs keep_choices
    FactoredNumber factors(u64 n) const;
    // number of comparisons settled by exact big-integer products
    u64 exact_ties() const { return exact_ties_; }

private:
    FactoredNumber backtrack(size_t nprimes, u64 budget) const;

    Kind kind_;
    u64 limit_;
    u64 cutoff_ = 0;
    bool keep_;
    std::vector<u64> primes_;
    std::vector<real> f_;
    std::vector<std::uint8_t> choice_;  // primes_.size() x (limit_ + 1)
    u64 exact_ties_ = 0;
};

// Primes above the cutoff never divide g(n) (resp. h(n)) for n <= limit.
u64 g_prime_cutoff(u64 limit);
u64 h_prime_cutoff(u64 limit);

FactoredNumber g_exact(u64 n, u64 limit = kGLimit);
FactoredNumber h_exact(u64 n, u64 limit = kHLimit);
// max lcm over the partitions of n, n <= 45
u64 partition_lcm_oracle(unsigned n);
std::vector<u64> g_equals_h_scan(u64 limit);

// k(n) data: sigma_k <= n < sigma_{k+1}
struct KAt {
    u64 k = 0;
    u128 sigma = 0;
    u64 pk = 0;       // 0 when k = 0
    u64 pk1 = 0;      // p_{k+1}
    Interval theta_k;
    Interval theta_k1;
    u128 m(u128 n) const { return n - sigma; }
};

// Random-access prefix sums over the primes up to pmax.
class PrimePrefix {
public:
    explicit PrimePrefix(u64 pmax);
    KAt at(u128 n) const;
    u64 pmax() const { return primes_.empty() ? 0 : primes_.back(); }
    // largest n this table can answer
    u128 max_n() const { return sigma_.back() - 1; }
    const std::vector<u64>& primes() const { return primes_; }
    u64 next_prime_ge(u64 x) const;

private:
    Interval theta(size_t k) const;
    std::vector<u64> primes_;
    std::vector<u128> sigma_;  // sigma_[k] = p_1 + ... + p_k
    std::vector<real> theta_;
};

// Streaming k(n) for nondecreasing n, unbounded.
class ChebyshevCursor {
public:
    ChebyshevCursor();
    KAt at(u128 n);

private:
    ChebyshevState st_;
    GrowingPrimeStream stream_;
    u64 next_ = 0;
    u128 last_n_ = 0;
};

// log h(n) >= theta(p_{k+1}) - log q, q the smallest prime >= p_{k+1} - m
Interval h_lower_bound(const KAt& k, u128 n);
// log h(n) <= theta(p_{k+1}) - log(p_{k+1} - m)
Interval h_upper_bound(const KAt& k, u128 n);

// Enclosure of a compensated sum of `terms` logarithms.
Interval log_sum_enclosure(real v, u64 terms);
// log N of a record as an enclosure
Interval log_record(const Superchampion& s);

struct SliceBounds {
    u128 n1 = 0, n2 = 0;
    u64 k1 = 0, k2 = 0;
    u128 m1 = 0, m2 = 0;
    u64 q = 0;
    real h_low_n1 = 0;
    real h_high_n2 = 0;
    real g_low = 0;   // log N1
    real g_high = 0;  // log N2
};

// N1, N2 consecutive records; kn1/kn2 are k(n1), k(n2).
SliceBounds slice_bounds(const Superchampion& N1, const Superchampion& N2, const KAt& kn1, const KAt& kn2);
SliceBounds slice_bounds(const Superchampion& N1, const Superchampion& N2, ChebyshevCursor& cur);

// Records with ell <= limit, kept for random access.
class RecordList {
public:
    explicit RecordList(u128 limit_ell);
    const std::vector<Superchampion>& records() const { return recs_; }
    // index of N' (largest ell <= n); n must be in [7, limit]
    size_t prime_index(u128 n) const;
    const Superchampion& Nprime(u128 n) const { return recs_[prime_index(n)]; }
    // N'' (the next record), may need one record past the limit
    const Superchampion& Nsecond(u128 n) const { return recs_[prime_index(n) + 1]; }
    u128 limit() const { return limit_; }

private:
    std::vector<Superchampion> recs_;
    u128 limit_;
};

enum class ConvexMode { a, z };
// min of the sequence at the two slice endpoints, a certified lower bound inside the slice
struct ConvexBound {
    u128 n1 = 0, n2 = 0;
    real v1 = 0, v2 = 0;
    real bound = 0;
};
ConvexBound g_bounds_convex(u128 n, ConvexMode mode, const Type2Cache* cache = nullptr);
ConvexBound g_bounds_convex(const Superchampion& N1, const Superchampion& N2, ConvexMode mode);

// For consecutive records N1, N2 and ell(N1) <= n <= ell(N2):
// log g(n) <= log N1 + (n - ell(N1)) / rho, rho the parameter of the slice
Interval g_upper_chord(const Superchampion& N1, const Superchampion& N2, u128 n);
// log of a number with ell <= n obtained from N1 by one exponent change, or a decrease plus an increase
Interval g_lower_local(const Superchampion& N1, const Superchampion& N2, u128 n);

}  // namespace landau
