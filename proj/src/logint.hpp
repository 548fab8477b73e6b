#pragma once

#include "numeric.hpp"

namespace landau {

struct LiValue {
    real x = 0;
    real value = 0;
    real error_bound = 0;
};

// li(x) by Ramanujan's series; x > 1. Summed in MPFR and rounded once.
LiValue li(real x);
// All-long-double evaluation of the same series, for scans.
LiValue li_ld(real x);
// Same series at the current MPFR precision; err receives a bound on the truncation+rounding error.
mpreal li_mp(const mpreal& x, mpreal* err = nullptr);

// li^{-1}(y) with |li(x) - y| <= 2^-70 max(1, |y|), computed at max(96, precision_bits()) bits.
mpreal li_inv_mp(const mpreal& y);
real li_inv(real y);
// Long double Newton from a nearby seed; for scans that resync against li_inv.
real li_inv_fast(real y, real seed);

// Phi_u(t) = sqrt(t L) (1 + (lambda - 1)/(2L) - u lambda^2 / L^2), L = log t, lambda = log L.
real phi_u(real u, real t);
Interval phi_u(real u, Interval t);

struct ConcaveGap {
    real mid_value = 0;
    real chord_value = 0;
    real margin = 0;  // mid_value - chord_value, >= 0 under concavity
};
// Midpoint against chord for t -> sqrt(li^{-1}(t)) - a (t log t)^{1/4}, 31 <= t1 <= t2, a <= 1.
ConcaveGap sqrt_liinv_concave_gap(real a, real t1, real t2);

// Fixed point R in (sqrt n, n) of f(t) = sqrt(n (2 log t - delta)); n > e^6, 1 <= delta <= 2.
real f_iter_root(real n, real delta);

}  // namespace landau
