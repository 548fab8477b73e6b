#include "numeric.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

namespace landau {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ok: return "ok";
        case ErrorCode::domain: return "domain";
        case ErrorCode::range_exhausted: return "range_exhausted";
        case ErrorCode::capacity: return "capacity";
        case ErrorCode::resource: return "resource";
        case ErrorCode::integrity: return "integrity";
        case ErrorCode::numerical: return "numerical";
        case ErrorCode::precondition: return "precondition";
        case ErrorCode::parameter: return "parameter";
        case ErrorCode::usage: return "usage";
        case ErrorCode::hypothesis: return "hypothesis";
        case ErrorCode::io: return "io";
    }
    return "unknown";
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(i128 v) {
    if (v < 0) return "-" + to_string(u128(-v));
    return to_string(u128(v));
}

u128 parse_u128(const std::string& s) {
    if (s.empty()) fail(ErrorCode::usage, "empty integer");
    // accept 1e10 style for convenience
    auto e = s.find_first_of("eE");
    if (e != std::string::npos) {
        u128 m = parse_u128(s.substr(0, e));
        u128 x = parse_u128(s.substr(e + 1));
        for (u128 i = 0; i < x; ++i) {
            if (m > (~u128(0)) / 10) fail(ErrorCode::usage, "integer overflow: " + s);
            m *= 10;
        }
        return m;
    }
    u128 v = 0;
    for (char c : s) {
        if (c == '_' || c == ',') continue;
        if (c < '0' || c > '9') fail(ErrorCode::usage, "not an integer: " + s);
        if (v > ((~u128(0)) - (c - '0')) / 10) fail(ErrorCode::usage, "integer overflow: " + s);
        v = v * 10 + u128(c - '0');
    }
    return v;
}

std::string hexfloat(real v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%La", v);
    return buf;
}

real parse_hexfloat(const std::string& s) {
    char* end = nullptr;
    real v = std::strtold(s.c_str(), &end);
    if (end == s.c_str()) fail(ErrorCode::io, "bad hex float: " + s);
    return v;
}

namespace {
unsigned g_bits = 96;

unsigned digits_for(unsigned bits) { return unsigned(bits * 0.30103) + 2; }
}  // namespace

void set_precision_bits(unsigned bits) {
    if (bits < 64) fail(ErrorCode::parameter, "precision below 64 bits");
    g_bits = bits;
    mpreal::default_precision(digits_for(bits));
}

unsigned precision_bits() { return g_bits; }

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits_(mpreal::default_precision()) {
    mpreal::default_precision(digits_for(bits));
}
PrecisionScope::~PrecisionScope() { mpreal::default_precision(saved_digits_); }

mpreal to_mp(real v) { return mpreal(v); }

mpreal to_mp(u128 v) {
    mpreal hi(static_cast<unsigned long long>(v >> 64));
    mpreal lo(static_cast<unsigned long long>(v));
    return ldexp(hi, 64) + lo;
}

real to_real(const mpreal& v) { return v.convert_to<real>(); }

Interval Interval::exact_int(u128 v) {
    real r = real(v);
    // long double holds 64 bits exactly; above that widen by one ulp
    if (v >> 64) return {down(r), up(r)};
    return {r, r};
}

Interval operator+(Interval a, Interval b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
Interval operator-(Interval a, Interval b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }
Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

Interval operator*(Interval a, Interval b) {
    real c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4))};
}

Interval operator/(Interval a, Interval b) {
    if (b.lo <= 0 && b.hi >= 0) fail(ErrorCode::numerical, "interval division by zero-containing interval");
    real c[4] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
    return {down(*std::min_element(c, c + 4)), up(*std::max_element(c, c + 4))};
}

Interval sqrt(Interval a) {
    if (a.lo < 0) fail(ErrorCode::domain, "sqrt of negative interval");
    real l = std::sqrt(a.lo);
    return {l > 0 ? down(l) : real(0), up(std::sqrt(a.hi))};
}

Interval log(Interval a) {
    if (a.lo <= 0) fail(ErrorCode::domain, "log of non-positive interval");
    return {down(std::log(a.lo), 2), up(std::log(a.hi), 2)};
}

Interval exp(Interval a) {
    real l = std::exp(a.lo);
    return {std::max(real(0), down(l, 2)), up(std::exp(a.hi), 2)};
}

Interval pow(Interval a, real e) {
    if (a.lo <= 0) fail(ErrorCode::domain, "pow of non-positive interval");
    Interval l = log(a) * Interval(e);
    return exp(l);
}

Interval hull(Interval a, Interval b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval widen(Interval a, real err) { return {down(a.lo - err), up(a.hi + err)}; }

Interval log_int(u128 v) { return log(Interval::exact_int(v)); }

}  // namespace landau

namespace landau {
namespace {
// default MPFR precision at load time
struct PrecisionInit {
    PrecisionInit() { set_precision_bits(96); }
} g_precision_init;
}  // namespace
}  // namespace landau
