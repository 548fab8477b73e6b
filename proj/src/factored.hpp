#pragma once

#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "numeric.hpp"

namespace landau {

// Exponent vector over primes, sorted by prime, exponents >= 1.
struct FactoredNumber {
    std::vector<std::pair<u64, unsigned>> factors;
    u128 ell = 0;
    Neumaier log_value;

    void push(u64 p, unsigned a);  // p must exceed every prime already present
    void recompute();
    real log() const { return log_value.value(); }
    bool squarefree() const;
    unsigned exponent(u64 p) const;
    u64 largest_prime() const { return factors.empty() ? 1 : factors.back().first; }
    boost::multiprecision::cpp_int value() const;
    // "2^2 * 3"; "1" for the empty product
    std::string to_string() const;
    static FactoredNumber parse(const std::string& text);

    bool operator==(const FactoredNumber& o) const { return factors == o.factors; }
    bool operator!=(const FactoredNumber& o) const { return !(*this == o); }
};

u128 ipow128(u64 p, unsigned a);

}  // namespace landau
