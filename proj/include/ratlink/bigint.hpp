#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace ratlink {

// All counting arithmetic is exact; the closed forms grow like 2^n and the
// Schubert denominators grow exponentially in the crossing number.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(long long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << static_cast<unsigned>(e);
}

// Division that must be exact (the 1/3 factors in the counting formulas).
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("exact_div: " + a.str() + " not divisible by " + b.str());
    return a / b;
}

// Narrowing helper for quantities that must fit in a machine word
// (e.g. twist region sizes when a diagram is materialized).
inline long long to_small(const BigInt& x, const char* what) {
    if (x < std::numeric_limits<long long>::min() || x > std::numeric_limits<long long>::max())
        throw std::overflow_error(std::string(what) + ": value too large: " + x.str());
    return static_cast<long long>(x);
}

} // namespace ratlink
