#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace primpack {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline long long to_int64(const BigInt& v, const char* what = "value") {
    if (v < std::numeric_limits<long long>::min() ||
        v > std::numeric_limits<long long>::max())
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    return static_cast<long long>(v);
}

inline long long floor_rational(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);  // always > 0
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return to_int64(q, "floor of rational");
}

}  // namespace primpack
