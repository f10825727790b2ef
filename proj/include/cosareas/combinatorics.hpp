#pragma once

#include <stdexcept>

#include "cosareas/bigint.hpp"

namespace cosareas {

/// n! for n >= 0.
inline Integer factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial: n must be >= 0");
    Integer result{1};
    for (long long i = 2; i <= n; ++i) result *= i;
    return result;
}

/// n!! = n(n-2)(n-4)...; defined for n >= -1 with 0!! = (-1)!! = 1.
/// Anything below -1 is rejected rather than extended.
inline Integer double_factorial(long long n) {
    if (n < -1) throw std::invalid_argument("double_factorial: n must be >= -1");
    Integer result{1};
    for (long long i = n; i >= 2; i -= 2) result *= i;
    return result;
}

/// C(n, j), evaluated multiplicatively with exact division at every step
/// to keep intermediates near the size of the result. j > n yields 0.
inline Integer binomial(long long n, long long j) {
    if (n < 0 || j < 0) throw std::invalid_argument("binomial: arguments must be >= 0");
    if (j > n) return 0;
    if (j > n - j) j = n - j;
    Integer result{1};
    for (long long i = 1; i <= j; ++i) {
        result *= (n - j + i);
        result /= i;
    }
    return result;
}

}  // namespace cosareas
