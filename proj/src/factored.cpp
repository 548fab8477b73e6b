#include "factored.hpp"

#include <sstream>

namespace landau {

u128 ipow128(u64 p, unsigned a) {
    u128 r = 1;
    for (unsigned i = 0; i < a; ++i) {
        if (r > (~u128(0)) / p) fail(ErrorCode::capacity, "prime power exceeds 128 bits");
        r *= p;
    }
    return r;
}

void FactoredNumber::push(u64 p, unsigned a) {
    if (a == 0) return;
    if (!factors.empty() && factors.back().first >= p) fail(ErrorCode::integrity, "factors must be pushed in increasing order");
    factors.emplace_back(p, a);
    ell += ipow128(p, a);
    log_value.add(real(a) * std::log(real(p)));
}

void FactoredNumber::recompute() {
    auto f = std::move(factors);
    factors.clear();
    ell = 0;
    log_value = {};
    for (auto [p, a] : f) push(p, a);
}

bool FactoredNumber::squarefree() const {
    for (auto& f : factors)
        if (f.second > 1) return false;
    return true;
}

unsigned FactoredNumber::exponent(u64 p) const {
    for (auto& f : factors)
        if (f.first == p) return f.second;
    return 0;
}

boost::multiprecision::cpp_int FactoredNumber::value() const {
    boost::multiprecision::cpp_int v = 1;
    for (auto [p, a] : factors)
        for (unsigned i = 0; i < a; ++i) v *= p;
    return v;
}

std::string FactoredNumber::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " * ";
        os << factors[i].first;
        if (factors[i].second > 1) os << '^' << factors[i].second;
    }
    return os.str();
}

FactoredNumber FactoredNumber::parse(const std::string& text) {
    FactoredNumber f;
    std::string t;
    for (char c : text)
        if (c != ' ') t += c;
    if (t == "1" || t.empty()) return f;
    size_t pos = 0;
    while (pos <= t.size()) {
        size_t star = t.find('*', pos);
        std::string part = t.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        size_t caret = part.find('^');
        try {
            u64 p = std::stoull(part.substr(0, caret));
            unsigned a = caret == std::string::npos ? 1 : unsigned(std::stoul(part.substr(caret + 1)));
            f.push(p, a);
        } catch (const std::logic_error&) {
            fail(ErrorCode::parameter, "bad factored number: " + text);
        }
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return f;
}

}  // namespace landau
