#pragma once

#include <stdexcept>
#include <string>

namespace primpack {

// Thrown when a resource cap (candidate or DP state budget) is exceeded.
// Distinct from overflow so callers can map it to its own exit status.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Fixed-width arithmetic that refuses to wrap.  The counting paths stay on
// 64-bit values with 128-bit intermediates; anything that does not fit is an
// error, never a silently truncated number.
inline long long checked_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

inline long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

inline long long checked_pow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

}  // namespace primpack
