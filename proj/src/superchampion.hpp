#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "factored.hpp"
#include "primes.hpp"

namespace landau {

// Parameter rho. An event (p, j) is rho = (p^j - p^{j-1}) / log p, with p / log p for j = 1.
struct Rho {
    u64 p = 0;
    unsigned j = 0;
    real value = 0;

    static Rho event(u64 p, unsigned j);
    static Rho of(real value);
    bool is_event() const { return p != 0; }
    std::string to_string() const;
};

real event_value(u64 p, unsigned j);
// Sign of f_j(p) - rho. Ties are only possible between events and are decided exactly.
int compare_event(u64 p, unsigned j, const Rho& rho);
int compare_events(u64 p, unsigned j, u64 q, unsigned i);

// 5 / log 5
real rho_min();

struct XiProfile {
    real rho = 0;
    real xi = 0;                 // xi_1
    std::vector<real> xi_j;      // xi_j[j] for 1 <= j <= floor(J); xi_j[0] unused
    real J = 0;
    unsigned jmax() const { return unsigned(xi_j.size()) - 1; }
    real at(unsigned j) const { return j < xi_j.size() ? xi_j[j] : 0; }
};

XiProfile xi_profile(real rho);
// root t > 1 of (t^j - t^{j-1}) / log t = rho; j = 1 takes the branch t > e
real xi_root(unsigned j, real rho);

// Thresholds on xi past which xi_j <= (xi/j)^{1/j}, j = 2..8.
const std::vector<u64>& xi_lambda();
// rho at x0 = 10^10 + 19
constexpr u64 kX0 = 10000000019ULL;
const XiProfile& x0_profile();

// Exponent of p in N_rho (closed = false) or N_rho^+ (closed = true).
unsigned rho_exponent(u64 p, const Rho& rho, bool closed);

// Exponent vector of N_rho; refuses xi beyond max_xi to keep the vector in memory.
FactoredNumber build_N_rho(const Rho& rho, bool closed, u64 max_xi = 200000000ULL);

// Streaming summary of N_rho without storing the factors.
struct NrhoSummary {
    u128 ell = 0;
    Neumaier logN;
    u64 pmax = 0;
    u64 prime_count = 0;  // omega(N) = index of pmax
    u128 E = 0;           // additive excess
    Neumaier Estar;       // multiplicative excess
    u128 sum_primes = 0;  // sum of the distinct primes
    Neumaier theta;       // sum of log p over distinct primes
    std::vector<std::pair<u64, unsigned>> prefix;  // primes with exponent >= 2
};
NrhoSummary n_rho_summary(const Rho& rho, bool closed);

struct Superchampion {
    u128 ell = 0;
    real logN = 0;
    u64 pmax = 0;
    bool type2 = false;
    u64 type2_q = 0;
    u128 prefix_ell = 0;
    real prefix_logA = 0;
    // event that produced this record; its value is the lower end of the record's rho interval
    u64 event_p = 0;
    unsigned event_j = 0;

    Rho event() const { return Rho::event(event_p, event_j); }
};

// The first record, N = 12 = 2^2 * 3.
Superchampion first_superchampion();

struct Type2Entry {
    u128 ell = 0;
    u64 q = 0;
    real logN = 0;
    bool operator==(const Type2Entry& o) const { return ell == o.ell && q == o.q && logN == o.logN; }
};

struct Type2Cache {
    u128 limit = 0;
    std::vector<Type2Entry> entries;

    void save(const std::string& path) const;
    static Type2Cache load(const std::string& path);
    std::string encode() const;
    static Type2Cache decode(const std::string& text);
    // structural checks: ordering, primality of q
    void validate() const;
};

// Walks the events in increasing rho order, maintaining the prime-power heap directly.
class EventEnumerator {
public:
    EventEnumerator();
    bool next(Superchampion& out);  // never exhausts below 2^40 primes
    const Superchampion& current() const { return cur_; }

private:
    struct Cand {
        u64 p;
        unsigned j;
        real key;
    };
    void push_cand(u64 p, unsigned j);

    Superchampion cur_;
    Neumaier logN_;
    Neumaier prefix_log_;
    std::vector<Cand> heap_;
    std::vector<u64> small_;  // small primes for squaring candidates
    size_t square_idx_ = 0;   // index in small_ of the next prime to be squared
    GrowingPrimeStream stream_;
    u64 fresh_ = 0;           // next fresh prime
    bool started_ = false;
};

Type2Cache build_type2_cache(u128 limit_ell);

// Successor rule driven by the type-2 table.
class Enumerator {
public:
    Enumerator(const Type2Cache& cache, u128 limit_ell);
    // next record with ell <= limit; false when done
    bool next(Superchampion& out);
    u64 type2_seen() const { return t2_index_; }

private:
    const Type2Cache& cache_;
    u128 limit_;
    Superchampion cur_;
    Neumaier logN_;
    Neumaier prefix_log_;
    std::vector<std::pair<u64, unsigned>> prefix_;
    size_t t2_index_ = 0;
    GrowingPrimeStream stream_;
    u64 fresh_ = 0;
    bool started_ = false;
    bool done_ = false;
};

// Calls f on every record with ell <= limit_ell; uses the cache when given, else the event walk.
void enumerate(u128 limit_ell, const Type2Cache* cache, const std::function<bool(const Superchampion&)>& f);

struct TableRow {
    u128 ell = 0;
    std::string N;  // factored
    u128 n_lo = 0, n_hi = 0;  // n range with this N' (n_hi = next ell - 1)
    Rho rho;          // parameter between this record and the next
    real xi = 0;
};
std::vector<TableRow> superchampion_table(u128 limit_ell);

struct Located {
    Superchampion Nprime;
    Superchampion Nsecond;
    Rho rho;
    XiProfile profile;
};
Located locate(u128 n, const Type2Cache* cache = nullptr);

struct ExcessReport {
    u128 E = 0;
    real Estar = 0;
    u64 s = 0;
    u64 i0 = 0;   // index of the largest prime factor of N'
    u64 p_i0 = 0;
    u128 n = 0;
    u128 nprime = 0;
};
ExcessReport excesses(u128 n, const Type2Cache* cache = nullptr);
// Same quantities for the pair attached to an event rho and n = ell(N') + offset (offset < p).
ExcessReport excesses_at(const Rho& rho, u128 offset = 0);
// number of consecutive primes after p_i0 whose sum stays <= budget
u64 count_s(u64 p_i0, u128 budget);

// W_a(t) with xi = e^{2t}; positive iff xi_2 < sqrt(xi/2)(1 - a/log xi)
real W_a(real a, real t);
real W_a_dt(real a, real t);
real W_a_root(real a, real lo, real hi);
struct DoubleRoot {
    real a0 = 0;
    real t0 = 0;
};
DoubleRoot W_double_root();

// Families: x2345, x2366, xi2_a0, 1slogxi2, thxi2, pi2xi2, EN, ENstar, sn, xinm, xinM,
// minxicoro, xk1sk, xsk1sk.
const std::vector<BoundFamily>& xi_bound_families();
BoundReport check_xi_bounds(const std::string& family, std::vector<real> xi_samples, bool witness = false);

}  // namespace landau
