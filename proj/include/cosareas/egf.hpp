#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosareas/combinatorics.hpp"
#include "cosareas/rational.hpp"

namespace cosareas {

/// Exact Taylor coefficients c_0..c_N of a power series, stored as
/// ordinary coefficients. The EGF view n!*c_n is computed on demand;
/// whether those terms are integers is a theorem the caller asserts,
/// not something baked into the representation.
class EgfSeries {
public:
    explicit EgfSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("EgfSeries: empty coefficient list");
    }

    std::size_t degree() const { return coeffs_.size() - 1; }

    const Rational& coeff(std::size_t n) const {
        if (n >= coeffs_.size()) throw std::out_of_range("EgfSeries::coeff: index past degree");
        return coeffs_[n];
    }

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// n! * c_n as an exact rational.
    Rational egf_term(std::size_t n) const {
        return Rational(factorial(static_cast<long long>(n))) * coeff(n);
    }

    /// n! * c_n, required to be an integer.
    Integer egf_term_integer(std::size_t n) const {
        const Rational t = egf_term(n);
        if (!t.is_integer()) {
            throw std::logic_error("EgfSeries: egf term not integral at n=" + std::to_string(n));
        }
        return t.numerator();
    }

private:
    std::vector<Rational> coeffs_;
};

/// arcsin x = sum_j ((2j-1)!!)^2 / (2j+1)! * x^(2j+1), up to degree N.
inline EgfSeries arcsin_series(std::size_t N) {
    std::vector<Rational> c(N + 1, Rational(0));
    for (std::size_t m = 1; m <= N; m += 2) {
        const long long j = static_cast<long long>(m - 1) / 2;
        const Integer odd = double_factorial(2 * j - 1);
        c[m] = Rational(odd * odd, factorial(2 * j + 1));
    }
    return EgfSeries(std::move(c));
}

/// arcsin x / sqrt(1 - x^2) = sum_j ((2j)!!)^2 / (2j+1)! * x^(2j+1).
inline EgfSeries arcsin_over_sqrt_series(std::size_t N) {
    std::vector<Rational> c(N + 1, Rational(0));
    for (std::size_t m = 1; m <= N; m += 2) {
        const long long j = static_cast<long long>(m - 1) / 2;
        const Integer even = double_factorial(2 * j);
        c[m] = Rational(even * even, factorial(2 * j + 1));
    }
    return EgfSeries(std::move(c));
}

/// (1/2) arcsin^2 x = sum_j ((2j)!!)^2 / (2j+2)! * x^(2j+2), the term-by-term
/// integral of arcsin x / sqrt(1 - x^2).
inline EgfSeries arcsin_squared_half_series(std::size_t N) {
    std::vector<Rational> c(N + 1, Rational(0));
    for (std::size_t m = 2; m <= N; m += 2) {
        const long long j = static_cast<long long>(m - 2) / 2;
        const Integer even = double_factorial(2 * j);
        c[m] = Rational(even * even, factorial(2 * j + 2));
    }
    return EgfSeries(std::move(c));
}

/// Multiply by 1/(1-x): coefficient convolution with the all-ones series,
/// i.e. prefix sums. Degree is preserved.
inline EgfSeries divide_by_one_minus_x(const EgfSeries& s) {
    std::vector<Rational> c;
    c.reserve(s.degree() + 1);
    Rational running{0};
    for (std::size_t m = 0; m <= s.degree(); ++m) {
        running += s.coeff(m);
        c.push_back(running);
    }
    return EgfSeries(std::move(c));
}

/// EGF terms of arcsin x/(1-x) for n = 0..N (sequence A296726).
inline std::vector<Integer> a296726_terms(std::size_t N) {
    const EgfSeries s = divide_by_one_minus_x(arcsin_series(N));
    std::vector<Integer> terms;
    terms.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) terms.push_back(s.egf_term_integer(n));
    return terms;
}

/// EGF terms of arcsin^2 x/(2(1-x)) for n = 0..N (sequence A372324).
inline std::vector<Integer> a372324_terms(std::size_t N) {
    const EgfSeries s = divide_by_one_minus_x(arcsin_squared_half_series(N));
    std::vector<Integer> terms;
    terms.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) terms.push_back(s.egf_term_integer(n));
    return terms;
}

}  // namespace cosareas
