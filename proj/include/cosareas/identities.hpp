#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cosareas/breakpoint.hpp"
#include "cosareas/rational.hpp"
#include "cosareas/trig.hpp"

namespace cosareas {

/// The four (k parity, q parity) cases of the C_q integral lemmas.
enum class ParityCase { OddOdd, OddKEvenQ, EvenKOddQ, EvenEven };

/// The three Lagrange-identity sums:
///   FullEvenN:     sum_{l=1}^{N/2}     sin(q*l*2pi/N),  N even
///   HalfOddN:      sum_{l=1}^{(N-1)/2} sin(q*l*2pi/N),  N odd
///   HalfStepEvenN: sum_{l=1}^{N/2}     sin(q*l*pi/N),   N even, q even
enum class LagrangeVariant { FullEvenN, HalfOddN, HalfStepEvenN };

namespace detail {
inline void check_lagrange_args(long long N, long long q, LagrangeVariant variant) {
    if (N < 1 || q < 1) throw std::invalid_argument("lagrange: N and q must be positive");
    switch (variant) {
        case LagrangeVariant::FullEvenN:
            if (N % 2 != 0) throw std::invalid_argument("lagrange FullEvenN: N must be even");
            break;
        case LagrangeVariant::HalfOddN:
            if (N % 2 != 1) throw std::invalid_argument("lagrange HalfOddN: N must be odd");
            break;
        case LagrangeVariant::HalfStepEvenN:
            if (N % 2 != 0) throw std::invalid_argument("lagrange HalfStepEvenN: N must be even");
            if (q % 2 != 0) throw std::invalid_argument("lagrange HalfStepEvenN: q must be even");
            break;
    }
}
}  // namespace detail

/// Literal term-by-term evaluation of the sum, with exact integer
/// argument reduction before each sine.
inline double lagrange_sum_direct(long long N, long long q, LagrangeVariant variant) {
    detail::check_lagrange_args(N, q, variant);
    double sum = 0.0;
    switch (variant) {
        case LagrangeVariant::FullEvenN:
            for (long long l = 1; l <= N / 2; ++l) sum += sin_pi_fraction(2 * q * l, N);
            break;
        case LagrangeVariant::HalfOddN:
            for (long long l = 1; l <= (N - 1) / 2; ++l) sum += sin_pi_fraction(2 * q * l, N);
            break;
        case LagrangeVariant::HalfStepEvenN:
            for (long long l = 1; l <= N / 2; ++l) sum += sin_pi_fraction(q * l, N);
            break;
    }
    return sum;
}

/// Right-hand sides of the three lemmas.
inline double lagrange_closed_form(long long N, long long q, LagrangeVariant variant) {
    detail::check_lagrange_args(N, q, variant);
    const double pi = std::numbers::pi;
    switch (variant) {
        case LagrangeVariant::FullEvenN: {
            if (q % 2 == 0) return 0.0;
            const long long r = q % N;  // cot has period pi
            return cot(pi * static_cast<double>(r) / static_cast<double>(N));
        }
        case LagrangeVariant::HalfOddN: {
            const long long r = q % (2 * N);
            const double theta = pi * static_cast<double>(r) / static_cast<double>(2 * N);
            return (q % 2 == 0) ? -0.5 * std::tan(theta) : 0.5 * cot(theta);
        }
        case LagrangeVariant::HalfStepEvenN: {
            if (q % 4 == 0) return 0.0;
            const long long r = q % (2 * N);
            return cot(pi * static_cast<double>(r) / static_cast<double>(2 * N));
        }
    }
    throw std::invalid_argument("lagrange_closed_form: unknown variant");
}

/// (1/k - 1) cot(x/(k-1)) + (1/k + 1) cot(x/(k+1)); approaches 4/x.
inline double cot_limit_expression(double x, long long k) {
    if (x == 0.0 || !std::isfinite(x)) throw std::invalid_argument("cot_limit_expression: x must be nonzero");
    if (k < 2) throw std::invalid_argument("cot_limit_expression: k must be >= 2");

    const double pi = std::numbers::pi;
    const double args[2] = {x / static_cast<double>(k - 1), x / static_cast<double>(k + 1)};
    for (const double t : args) {
        const double m = std::round(t / pi);
        if (m != 0.0 && std::abs(t - m * pi) <= 1e-12 * std::abs(t))
            throw std::domain_error("cot_limit_expression: cotangent pole");
    }
    const double inv_k = 1.0 / static_cast<double>(k);
    return (inv_k - 1.0) * cot(args[0]) + (inv_k + 1.0) * cot(args[1]);
}

namespace detail {
inline void check_cq_args(long long q, ParityCase parity_case, const long long* k) {
    if (q < 1) throw std::invalid_argument("cq: q must be >= 1");
    const bool q_odd = (q % 2 == 1);
    const bool want_q_odd =
        parity_case == ParityCase::OddOdd || parity_case == ParityCase::EvenKOddQ;
    if (q_odd != want_q_odd) throw std::invalid_argument("cq: q parity does not match case");
    if (k != nullptr) {
        if (*k < 3) throw std::invalid_argument("cq: k must be >= 3");
        const bool k_odd = (*k % 2 == 1);
        const bool want_k_odd =
            parity_case == ParityCase::OddOdd || parity_case == ParityCase::OddKEvenQ;
        if (k_odd != want_k_odd) throw std::invalid_argument("cq: k parity does not match case");
    }
}

/// F_{q,k}(x) = (1/q) sin(qx) - (1/qk) sin(qkx), the antiderivative of
/// cos(qx) - cos(qkx), at an exact abscissa.
inline double antiderivative_fqk(long long q, long long k, const Breakpoint& x) {
    return x.sin_multiple(Integer(q)) / static_cast<double>(q) -
           x.sin_multiple(Integer(q) * k) / static_cast<double>(q * k);
}
}  // namespace detail

/// Finite-k value of the defining sum of integrals of the matching C_q
/// lemma, evaluated exactly through the antiderivative at the lemma's own
/// endpoint list. No numeric quadrature is involved.
inline double cq_partial(long long q, long long k, ParityCase parity_case) {
    detail::check_cq_args(q, parity_case, &k);

    const auto F = [&](Integer num, long long den) {
        return detail::antiderivative_fqk(q, k, Breakpoint(std::move(num), den));
    };

    double sum = 0.0;
    switch (parity_case) {
        case ParityCase::OddOdd:
            // sum of integral of (cos qkx - cos qx) over [l*2pi/(k+1), l*2pi/(k-1)]
            for (long long l = 1; l <= (k - 1) / 2; ++l)
                sum += F(Integer(2 * l), k + 1) - F(Integer(2 * l), k - 1);
            break;
        case ParityCase::OddKEvenQ:
            // endpoints l*pi/(k+1), l*pi/(k-1); f integrated positively on the
            // leading subinterval and negatively on the trailing one
            for (long long l = 1; l <= (k - 1) / 2; ++l) {
                sum += F(Integer(l), k + 1) - F(Integer(l - 1), k - 1);
                sum -= F(Integer(l), k - 1) - F(Integer(l), k + 1);
            }
            break;
        case ParityCase::EvenKOddQ:
            for (long long l = 1; l <= k / 2; ++l) {
                sum += F(Integer(2 * l), k + 1) - F(Integer(2 * (l - 1)), k - 1);
                sum -= F(Integer(2 * l), k - 1) - F(Integer(2 * l), k + 1);
            }
            break;
        case ParityCase::EvenEven:
            for (long long l = 1; l <= k / 2; ++l) {
                sum += F(Integer(l), k + 1) - F(Integer(l - 1), k - 1);
                sum -= F(Integer(l), k - 1) - F(Integer(l), k + 1);
            }
            break;
    }
    return sum;
}

/// The exact k->infinity limits of the four lemmas.
inline PiRational cq_limit(long long q, ParityCase parity_case) {
    detail::check_cq_args(q, parity_case, nullptr);
    const Integer q_sq = Integer(q) * q;
    switch (parity_case) {
        case ParityCase::OddOdd:
            return PiRational(Integer(4), q_sq);
        case ParityCase::EvenKOddQ:
            return PiRational(Integer(8), q_sq);
        case ParityCase::OddKEvenQ:
        case ParityCase::EvenEven:
            return (q % 4 == 0) ? PiRational(Integer(0), Integer(1))
                                : PiRational(Integer(16), q_sq);
    }
    throw std::invalid_argument("cq_limit: unknown case");
}

}  // namespace cosareas
