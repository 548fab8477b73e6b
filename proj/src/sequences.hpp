#pragma once

#include <string>

#include "numeric.hpp"

namespace landau {

class LandauTable;
class RecordList;
class PrimePrefix;

// c = sum over zeta zeros of 1/|rho(rho+1)|, stored; its computation is external.
real constant_c();
const char* constant_c_note();

// Sequence values from log g / log h. Interval versions round outward.
real seq_a(u128 n, real log_g);
real seq_b(u128 n, real log_h);
real seq_z(u128 n, real log_g);
real seq_d(u128 n, real log_g, real log_h);
real seq_beta(u128 n, real log_g, real log_h);
Interval seq_a(u128 n, Interval log_g);
Interval seq_z(u128 n, Interval log_g);
Interval seq_d(u128 n, Interval log_g, Interval log_h);
Interval seq_beta(u128 n, Interval log_g, Interval log_h);
// sqrt(li^{-1}(n)) and (n log n)^{1/4} as enclosures
Interval sqrt_liinv(u128 n);
Interval quarter_power(u128 n);
// Same enclosure from a long double Newton started at seed, which is updated; for scans over n.
Interval sqrt_liinv_seeded(u128 n, real& seed);
// a_n with the square root already enclosed
Interval seq_a(u128 n, Interval sqrt_liinv_n, Interval log_g);

enum class Source { exact, bounds };

struct SequencePoint {
    u128 n = 0;
    bool g_exact = false;
    bool h_exact = false;
    Interval log_g, log_h;
    Interval a, b, z, d, beta;
};

// Tables and records supply the sources; any may be null when not requested.
struct SequenceSources {
    const LandauTable* g = nullptr;
    const LandauTable* h = nullptr;
    const RecordList* records = nullptr;
    const PrimePrefix* primes = nullptr;
};

SequencePoint point(u128 n, Source g_source, Source h_source, const SequenceSources& src);
// Convenience: builds its own tables for n within the exact limits.
SequencePoint point(u64 n);

// d_n from exact tables
real gap_ratio(u64 n, const LandauTable& g, const LandauTable& h);
real gap_ratio(u64 n);

}  // namespace landau
