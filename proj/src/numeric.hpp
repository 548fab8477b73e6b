#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

namespace landau {

// x87 extended: 64-bit mantissa.
using real = long double;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

using mpreal = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                             boost::multiprecision::et_off>;

enum class ErrorCode : int {
    ok = 0,
    domain = 1,
    range_exhausted = 2,
    capacity = 3,
    resource = 4,
    integrity = 5,
    numerical = 6,
    precondition = 7,
    parameter = 8,
    usage = 9,
    hypothesis = 10,
    io = 11,
};

const char* error_name(ErrorCode c);

struct Error : std::runtime_error {
    ErrorCode code;
    Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

std::string to_string(u128 v);
std::string to_string(i128 v);
u128 parse_u128(const std::string& s);

// Hex-float text for bit-exact long double round trips.
std::string hexfloat(real v);
real parse_hexfloat(const std::string& s);

// MPFR working precision in bits (min 64, default 96).
void set_precision_bits(unsigned bits);
unsigned precision_bits();

// Scoped override of the MPFR default precision.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_digits_;
};

mpreal to_mp(real v);
mpreal to_mp(u128 v);
real to_real(const mpreal& v);

// Neumaier summation. Order of additions fixes the result bit for bit.
struct Neumaier {
    real sum = 0;
    real comp = 0;

    void add(real v) {
        real t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    real value() const { return sum + comp; }
};

inline real down(real v, int ulps = 1) {
    for (int i = 0; i < ulps; ++i) v = std::nextafter(v, -HUGE_VALL);
    return v;
}
inline real up(real v, int ulps = 1) {
    for (int i = 0; i < ulps; ++i) v = std::nextafter(v, HUGE_VALL);
    return v;
}

// Closed interval, every operation rounds outward.
struct Interval {
    real lo = 0;
    real hi = 0;

    Interval() = default;
    Interval(real v) : lo(v), hi(v) {}
    Interval(real l, real h) : lo(l), hi(h) {}
    static Interval exact_int(u128 v);

    real mid() const { return lo + (hi - lo) / 2; }
    real width() const { return hi - lo; }
    bool contains(real v) const { return lo <= v && v <= hi; }
};

Interval operator+(Interval a, Interval b);
Interval operator-(Interval a, Interval b);
Interval operator-(Interval a);
Interval operator*(Interval a, Interval b);
Interval operator/(Interval a, Interval b);
Interval sqrt(Interval a);
Interval log(Interval a);
Interval exp(Interval a);
// Positive base only.
Interval pow(Interval a, real e);
Interval hull(Interval a, Interval b);
// Widen by an absolute error.
Interval widen(Interval a, real err);

// log of a 64-bit integer as an enclosure.
Interval log_int(u128 v);

}  // namespace landau
