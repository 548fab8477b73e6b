#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primes.hpp"

namespace landau {

// |theta(x) - x| < alpha x / log^3 x for x >= x1
struct DusartPair {
    real alpha;
    u64 x1;
    const char* tag;  // "1", "0.5", "0.15"
};
const std::vector<DusartPair>& dusart_pairs();
// Weakest pair valid at x (largest alpha), unless alpha_override names another one.
DusartPair select_dusart(u64 x, std::optional<real> alpha_override = {});
DusartPair dusart_by_alpha(real alpha);

enum class Verdict { pass, fail, undecided };
const char* verdict_name(Verdict v);

struct BoundSample {
    u64 x = 0;
    Interval lhs;
    Interval rhs;
    Verdict verdict = Verdict::undecided;
    bool outside_range = false;
};

struct BoundReport {
    std::string family;
    std::string statement;
    std::string range;
    std::vector<BoundSample> samples;
    bool all_pass() const;
};

struct BoundFamily {
    std::string id;
    std::string statement;
    std::string range;
};
const std::vector<BoundFamily>& bound_families();

// Evaluates a family at each sample. Samples outside the stated range raise a
// precondition error unless witness is set, in which case they are evaluated and flagged.
BoundReport check_effective_bounds(const std::string& family, std::vector<u64> samples,
                                   bool witness = false);

// Real t in [lo, hi] where the right side of the family crosses its left side at prime p
// (for the pi_r families: rhs(t) = pi_r(p)).
real crossing_point(const std::string& family, u64 p, real lo, real hi);

struct PropositionConstants {
    unsigned r = 0;
    DusartPair pair{};
    real C0 = 0;
    real C0hat = 0;
    real r0 = 0;
    u256 pi_r_x1 = 0;
    real theta_x1 = 0;
};

// r0(alpha): positive root of 3r^4 + 8r^3 + 6r^2 - 24/alpha - 1.
real r0_root(real alpha);
PropositionConstants proposition_constants(unsigned r, real alpha);

}  // namespace landau
