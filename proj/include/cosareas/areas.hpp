#pragma once

#include <stdexcept>
#include <vector>

#include "cosareas/combinatorics.hpp"
#include "cosareas/rational.hpp"

namespace cosareas {

/// A_n is the limiting area between cos^n x and cos^n kx over [0, pi]
/// as k grows without bound. Three independent exact formulations are
/// provided; they must agree term for term.
enum class AreaMethod { ClosedForm, Recursion, DoubleFactorial };

struct AreaRow {
    int n;
    PiRational value;
    Integer numerator;  // the integer the paper ties to A296726/A372324
};

struct AreaTable {
    std::vector<AreaRow> rows;  // sorted by n
};

namespace detail {
inline void require_positive_n(int n, const char* where) {
    if (n < 1) throw std::invalid_argument(std::string(where) + ": n must be >= 1");
}
}  // namespace detail

/// Binomial-sum closed forms. The three congruence classes of n carry
/// different index ranges and scalings:
///   n odd:          (8/2^(n-1)) * sum_{j=0}^{(n-1)/2} C(n,j)/(n-2j)^2
///   n == 2 (mod 4): (16/2^n) * sum_{j=0}^{(n-2)/4} C(n,2j)/(n/2-2j)^2
///   n == 0 (mod 4): (16/2^n) * sum_{j=0}^{(n-4)/4} C(n,2j+1)/(n/2-(2j+1))^2
/// The returned PiRational carries the exact coefficient of 1/pi.
inline PiRational area_closed_form(int n) {
    detail::require_positive_n(n, "area_closed_form");

    Rational sum{0};
    if (n % 2 == 1) {
        for (int j = 0; j <= (n - 1) / 2; ++j) {
            const long long d = n - 2 * j;
            sum += Rational(binomial(n, j), Integer(d) * d);
        }
        return PiRational(Rational(Integer(8), Integer(1) << (n - 1)) * sum);
    }
    if (n % 4 == 2) {
        for (int j = 0; j <= (n - 2) / 4; ++j) {
            const long long d = n / 2 - 2 * j;
            sum += Rational(binomial(n, 2 * j), Integer(d) * d);
        }
    } else {
        for (int j = 0; j <= (n - 4) / 4; ++j) {
            const long long d = n / 2 - (2 * j + 1);
            sum += Rational(binomial(n, 2 * j + 1), Integer(d) * d);
        }
    }
    return PiRational(Rational(Integer(16), Integer(1) << n) * sum);
}

/// Two-step recursion A_n = ((n-1)/n) A_{n-2} + 8/(n^2 pi) for odd n,
/// + 16/(n^2 pi) for even n, seeded with A_1 = 8/pi and A_2 = 4/pi.
inline PiRational area_recursion(int n) {
    detail::require_positive_n(n, "area_recursion");

    Rational coeff = (n % 2 == 1) ? Rational(8) : Rational(4);
    const int base = (n % 2 == 1) ? 1 : 2;
    for (int m = base + 2; m <= n; m += 2) {
        const long long bump = (m % 2 == 1) ? 8 : 16;
        coeff = Rational(m - 1, m) * coeff + Rational(bump, Integer(m) * m);
    }
    return PiRational(coeff);
}

/// Double-factorial sums:
///   n odd:  (8/pi)  * n!/(n!!)^2 * sum_{j=0}^{(n-1)/2} ((2j-1)!!/(2j)!!) / (2j+1)
///   n even: (16/pi) * n!/(n!!)^2 * sum_{j=0}^{(n-2)/2} ((2j)!!/(2j+1)!!) / (2j+2)
inline PiRational area_double_factorial(int n) {
    detail::require_positive_n(n, "area_double_factorial");

    Rational sum{0};
    if (n % 2 == 1) {
        for (int j = 0; j <= (n - 1) / 2; ++j) {
            sum += Rational(double_factorial(2 * j - 1),
                            double_factorial(2 * j) * (2 * j + 1));
        }
    } else {
        for (int j = 0; j <= (n - 2) / 2; ++j) {
            sum += Rational(double_factorial(2 * j),
                            double_factorial(2 * j + 1) * (2 * j + 2));
        }
    }
    const Integer dd = double_factorial(n);
    const Rational scale(Integer((n % 2 == 1) ? 8 : 16) * factorial(n), dd * dd);
    return PiRational(scale * sum);
}

/// The integer numerators n! * sum(...) from the double-factorial sums.
/// Odd n lands in A296726, even n in A372324 (every other entry).
/// Integrality is a theorem; a fractional result means the implementation
/// is wrong, so it is checked here rather than assumed.
inline Integer oeis_numerator(int n) {
    detail::require_positive_n(n, "oeis_numerator");

    Rational sum{0};
    if (n % 2 == 1) {
        for (int j = 0; j <= (n - 1) / 2; ++j) {
            sum += Rational(double_factorial(2 * j - 1),
                            double_factorial(2 * j) * (2 * j + 1));
        }
    } else {
        for (int j = 0; j <= (n - 2) / 2; ++j) {
            sum += Rational(double_factorial(2 * j),
                            double_factorial(2 * j + 1) * (2 * j + 2));
        }
    }
    const Rational term = Rational(factorial(n)) * sum;
    if (!term.is_integer()) {
        throw std::logic_error("oeis_numerator: sum is not integral at n=" +
                               std::to_string(n) + " (implementation bug)");
    }
    return term.numerator();
}

inline PiRational area(int n, AreaMethod method) {
    switch (method) {
        case AreaMethod::ClosedForm: return area_closed_form(n);
        case AreaMethod::Recursion: return area_recursion(n);
        case AreaMethod::DoubleFactorial: return area_double_factorial(n);
    }
    throw std::invalid_argument("area: unknown method");
}

inline AreaTable area_table(int max_n, AreaMethod method) {
    detail::require_positive_n(max_n, "area_table");
    AreaTable table;
    table.rows.reserve(static_cast<std::size_t>(max_n));
    for (int n = 1; n <= max_n; ++n) {
        table.rows.push_back({n, area(n, method), oeis_numerator(n)});
    }
    return table;
}

}  // namespace cosareas
