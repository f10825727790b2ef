#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cosareas/bigint.hpp"

namespace cosareas {

/// sin(pi * a/b) with the argument reduced in exact integer arithmetic
/// (a mod 2b, then folded into [0, pi/2]) before any float conversion.
/// Naive evaluation of sin(q*l*2*pi/(k-1)) at k ~ 1e5 loses digits in the
/// argument; this path keeps every sum accurate to ~1e-15.
inline double sin_pi_fraction(Integer a, Integer b) {
    if (b <= 0) throw std::domain_error("sin_pi_fraction: denominator must be positive");

    a %= 2 * b;          // sin has period 2*pi
    if (a < 0) a += 2 * b;

    double sign = 1.0;
    if (a >= b) {        // sin(pi + t) = -sin(t)
        sign = -1.0;
        a -= b;
    }
    if (2 * a > b) a = b - a;  // sin(pi - t) = sin(t)
    if (a == 0) return 0.0;

    return sign * std::sin(std::numbers::pi * ratio_as_double(a, b));
}

/// Fast path for arguments known to fit in 64 bits exactly.
inline double sin_pi_fraction(long long a, long long b) {
    if (b <= 0) throw std::domain_error("sin_pi_fraction: denominator must be positive");
    constexpr long long exact_double_limit = 1LL << 53;
    if (b >= exact_double_limit / 2) return sin_pi_fraction(Integer(a), Integer(b));

    a %= 2 * b;
    if (a < 0) a += 2 * b;

    double sign = 1.0;
    if (a >= b) {
        sign = -1.0;
        a -= b;
    }
    if (2 * a > b) a = b - a;
    if (a == 0) return 0.0;

    return sign * std::sin(std::numbers::pi * (static_cast<double>(a) / static_cast<double>(b)));
}

inline double cot(double theta) { return std::cos(theta) / std::sin(theta); }

}  // namespace cosareas
