#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "landau.hpp"
#include "numeric.hpp"

namespace landau {

using json = nlohmann::json;

struct Counters {
    u64 ok_calls = 0;
    u64 good_calls = 0;
    u64 sample_calls = 0;  // soundness samples, not part of the recursion
};

struct Certificate {
    std::string theorem_id;
    u128 n1 = 0, n2 = 0;
    bool all_pass = true;
    u128 fail_n = 0;
    // false when the bounds at fail_n could decide neither way: fail_n is then the largest n not certified
    bool fail_exact = true;
    json witness;     // values at fail_n
    Counters counters;
    json bound_trail = json::array();
    double wall_time = 0;

    json to_json() const;
    static Certificate from_json(const json& j);
};

// ok(n) may return undecided when only bounds are available at n; good(n1, n2) true means ok on all of [n1, n2].
struct TheoremSuite {
    std::string id;
    std::string description;
    u128 domain_lo = 2, domain_hi = ~u128(0);
    std::function<Verdict(u128)> ok;
    std::function<bool(u128, u128)> good;
    std::function<json(u128)> witness;  // optional
};

struct OkRecOptions {
    unsigned soundness_samples = 100;
    u64 seed = 1;
    // stop after this many good_interval calls and throw Interrupted with a checkpoint; 0 = no limit
    u64 max_good_calls = 0;
};

struct OkRecCheckpoint {
    std::string theorem_id;
    u128 n1 = 0, n2 = 0;
    std::vector<std::pair<u128, u128>> stack;  // pending intervals, top last
    Counters counters;
    unsigned samples_left = 0;
    json to_json() const;
    static OkRecCheckpoint from_json(const json& j);
};

// Raised when a run stops early (call budget or a predicate error); carries what is needed to continue.
struct Interrupted : Error {
    json checkpoint;
    Interrupted(ErrorCode c, const std::string& msg, json cp) : Error(c, msg), checkpoint(std::move(cp)) {}
};

// Largest n in [n1, n2] with ok(n) false. Intervals split at the midpoint, upper half first.
Certificate ok_rec(const TheoremSuite& suite, u128 n1, u128 n2, const OkRecOptions& opt = {});
Certificate ok_rec_resume(const TheoremSuite& suite, const OkRecCheckpoint& cp, const OkRecOptions& opt = {});

// Shared data for the suites. Tables may be null; bounds are used beyond them.
struct Resources {
    std::shared_ptr<const LandauTable> g, h;
    std::shared_ptr<const RecordList> records;
    std::shared_ptr<const PrimePrefix> primes;

    // tables up to the given limits, records and primes sized for n <= n_max
    static Resources build(u64 g_limit, u64 h_limit, u128 n_max);
};

// Enclosures of log g, log h at n from exact tables where possible, else bounds.
struct LogBounds {
    Interval g, h;
    bool g_exact = false, h_exact = false;
};
LogBounds log_bounds(const Resources& r, u128 n);

struct SuiteInfo {
    std::string id;
    std::string description;
    u128 default_lo = 2, default_hi = 0;
    u128 expected_fail = 0;  // largest failing n over the default range; 0 when none is known
    u64 g_limit = 0, h_limit = 0;
};
const std::vector<SuiteInfo>& suite_catalog();
const SuiteInfo& suite_info(const std::string& id);
TheoremSuite make_suite(const std::string& id, const Resources& r);

// Walks consecutive records N1, N2 and evaluates a per-slice bound.
struct SliceScanReport {
    std::string suite;
    u128 ell_from = 0, ell_limit = 0;
    u64 slices = 0;
    u64 failures = 0;
    u128 last_fail_n1 = 0, last_fail_n2 = 0;  // 0 when every slice passed
    real last_fail_value = 0;
    u128 condition_last_fail = 0;  // beta_lower: last N1 violating log N1 > h bound at n2
    json to_json() const;
};
// suite in {beta_upper, beta_lower, d_max, a_upper}; slices with ell(N1) >= ell_from and ell(N2) <= ell_limit
SliceScanReport slice_scan(const std::string& suite, u128 ell_from, u128 ell_limit,
                           const std::function<void(u64)>& progress = nullptr);

// theta(p_k) > Phi_{1/8}(sigma_{k+1}) for k up to p_{k+1} <= pmax; the largest failing k
struct KScanReport {
    u64 pmax = 0;
    u64 last_fail_k = 0;
    u128 sigma_after_fail = 0;  // sigma_{last_fail_k + 1}
    u64 k_end = 0;
    u64 p_end = 0;
    u64 undecided = 0;
    json to_json() const;
};
KScanReport minhn_kscan(u64 pmax);

// minimum of z_n (n >= 19) or a_n (n >= 43) over the records with ell <= limit
struct ConvexScanReport {
    std::string mode;
    u128 limit = 0;
    u64 records = 0;
    u128 argmin = 0;
    Interval min_value;
    json to_json() const;
};
ConvexScanReport convex_scan(ConvexMode mode, u128 limit, const std::function<void(u64)>& progress = nullptr);

}  // namespace landau
