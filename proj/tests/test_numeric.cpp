#include "doctest.h"
#include "numeric.hpp"

#include <cmath>
#include <random>

using namespace landau;

TEST_CASE("u128 text round trip") {
    u128 v = (u128(1) << 100) + 12345;
    CHECK(parse_u128(to_string(v)) == v);
    CHECK(to_string(u128(0)) == "0");
    CHECK(parse_u128("1e10") == u128(10000000000ULL));
    CHECK(to_string(i128(-42)) == "-42");
    CHECK_THROWS_AS(parse_u128("12x"), Error);
}

TEST_CASE("hexfloat is bit exact") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        real v = std::ldexp(real(rng()) / real(1ULL << 63), int(rng() % 200) - 100);
        CHECK(parse_hexfloat(hexfloat(v)) == v);
    }
}

TEST_CASE("neumaier beats naive summation") {
    Neumaier acc;
    real naive = 0;
    acc.add(1);
    naive += 1;
    for (int i = 0; i < 100000; ++i) {
        acc.add(std::ldexp(real(1), -70));
        naive += std::ldexp(real(1), -70);
    }
    real want = 1 + 100000 * std::ldexp(real(1), -70);
    CHECK(naive == 1);
    CHECK(std::fabs(acc.value() - want) <= std::ldexp(real(1), -63));
}

TEST_CASE("interval operations enclose mpfr results") {
    PrecisionScope ps(200);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> d(0.1, 1000.0);
    for (int i = 0; i < 500; ++i) {
        real a = d(rng), b = d(rng);
        mpreal A(a), B(b);
        Interval ia(a), ib(b);
        auto in = [](Interval I, const mpreal& v) { return mpreal(I.lo) <= v && v <= mpreal(I.hi); };
        CHECK(in(ia + ib, A + B));
        CHECK(in(ia - ib, A - B));
        CHECK(in(ia * ib, A * B));
        CHECK(in(ia / ib, A / B));
        CHECK(in(sqrt(ia), sqrt(A)));
        CHECK(in(log(ia), log(A)));
        real e = a / 100;
        CHECK(in(exp(Interval(e)), exp(mpreal(e))));
    }
}

TEST_CASE("precision setting") {
    CHECK(precision_bits() >= 64);
    CHECK_THROWS_AS(set_precision_bits(32), Error);
}
