#pragma once

#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace cosareas {

/// Arbitrary-precision signed integer. All combinatorial quantities
/// (n!, n!!, binomials up to n in the hundreds) are exact in this type.
using Integer = boost::multiprecision::cpp_int;

/// num/den as a double, correct even when num and den individually
/// exceed the double range. The quotient is formed with ~64 significant
/// bits and rescaled, so the result is accurate to a couple of ulps.
inline double ratio_as_double(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("ratio_as_double: zero denominator");
    if (num == 0) return 0.0;

    const bool negative = (num < 0) != (den < 0);
    Integer a = abs(num);
    Integer b = abs(den);

    const long shift = 64 - (static_cast<long>(msb(a)) - static_cast<long>(msb(b)));
    if (shift > 0) {
        a <<= shift;
    } else if (shift < 0) {
        b <<= -shift;
    }

    const Integer q = a / b;
    const double scaled = std::ldexp(q.convert_to<double>(), static_cast<int>(-shift));
    return negative ? -scaled : scaled;
}

}  // namespace cosareas
