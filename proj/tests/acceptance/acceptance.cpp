// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cosareas/cosareas.hpp"

namespace {

using namespace cosareas;

constexpr double kPi = std::numbers::pi;

struct CriterionResult {
    bool ok = true;
    std::ostringstream detail;
};

#define EXPECT(cond, msg)                          \
    do {                                           \
        if (!(cond)) {                             \
            result.ok = false;                     \
            result.detail << "  - " << msg << "\n"; \
        }                                          \
    } while (0)

bool run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<void(CriterionResult&)>& body) {
    CriterionResult result;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(result);
    } catch (const std::exception& e) {
        result.ok = false;
        result.detail << "  - exception: " << e.what() << "\n";
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed >= budget_seconds) {
        result.ok = false;
        result.detail << "  - runtime " << elapsed << " s exceeded the " << budget_seconds
                      << " s budget\n";
    }
    std::printf("[%s] criterion %d: %s (%.2f s / %.0f s)\n", result.ok ? "PASS" : "FAIL",
                number, name.c_str(), elapsed, budget_seconds);
    if (!result.ok) std::fputs(result.detail.str().c_str(), stdout);
    return result.ok;
}

PiRational pi_frac(long long num, long long den) {
    return PiRational(Integer(num), Integer(den));
}

void criterion_exact_values(CriterionResult& result) {
    const std::vector<PiRational> expected{
        pi_frac(8, 1),    pi_frac(4, 1),  pi_frac(56, 9),        pi_frac(4, 1),
        pi_frac(1192, 225), pi_frac(34, 9), pi_frac(17228, 3675), pi_frac(32, 9)};
    for (int n = 1; n <= 8; ++n) {
        EXPECT(area_closed_form(n) == expected[n - 1],
               "A_" << n << " = " << area_closed_form(n).str() << ", expected "
                    << expected[n - 1].str());
    }
}

void criterion_cross_method(CriterionResult& result) {
    for (int n = 1; n <= 201; ++n) {
        const PiRational closed = area_closed_form(n);
        const PiRational recursive = area_recursion(n);
        const PiRational double_fact = area_double_factorial(n);
        EXPECT(closed == recursive, "closed form vs recursion differ at n=" << n);
        EXPECT(closed == double_fact, "closed form vs double factorial differ at n=" << n);
    }
}

void criterion_oeis_numerators(CriterionResult& result) {
    const long long odd_expected[] = {1, 7, 149, 6483};
    const long long even_expected[] = {1, 16, 544, 32768};
    for (int i = 0; i < 4; ++i) {
        EXPECT(oeis_numerator(2 * i + 1) == odd_expected[i],
               "odd numerator at n=" << 2 * i + 1);
        EXPECT(oeis_numerator(2 * i + 2) == even_expected[i],
               "even numerator at n=" << 2 * i + 2);
    }
    const auto odd_terms = a296726_terms(61);
    const auto even_terms = a372324_terms(61);
    for (int n = 1; n <= 61; ++n) {
        const Integer& egf_term = (n % 2 == 1) ? odd_terms[n] : even_terms[n];
        EXPECT(oeis_numerator(n) == egf_term, "EGF term mismatch at n=" << n);
    }
}

void criterion_finite_k_benchmark(CriterionResult& result) {
    const double piecewise = finite_area_piecewise(3, 11).area;
    const double oracle = finite_area_oracle(3, 11, 1e-10).area;
    EXPECT(std::abs(piecewise - 1.981887) <= 5e-6,
           "piecewise(3,11) = " << piecewise << " not within 5e-6 of 1.981887");
    EXPECT(std::abs(piecewise - oracle) <= 1e-8,
           "piecewise vs oracle differ by " << std::abs(piecewise - oracle));
}

void criterion_convergence(CriterionResult& result) {
    for (int n = 1; n <= 8; ++n) {
        const auto rows = convergence_study(n, {11, 101, 1001});
        EXPECT(rows[2].error < 1e-2,
               "n=" << n << ": error at k=1001 is " << rows[2].error);
        EXPECT(rows[0].error > rows[1].error && rows[1].error > rows[2].error,
               "n=" << n << ": errors not strictly decreasing along k=11,101,1001");
    }
}

void criterion_lemma_suite(CriterionResult& result) {
    double worst = 0.0;
    const auto sweep = [&](long long N, long long q, LagrangeVariant v) {
        const double closed = lagrange_closed_form(N, q, v);
        if (std::abs(closed) > 1e6) return;  // pole guard
        worst = std::max(worst, std::abs(lagrange_sum_direct(N, q, v) - closed));
    };
    for (long long N = 2; N <= 2000; N += 2)
        for (long long q = 1; q <= 50; ++q) sweep(N, q, LagrangeVariant::FullEvenN);
    for (long long N = 3; N <= 1999; N += 2)
        for (long long q = 1; q <= 50; ++q) sweep(N, q, LagrangeVariant::HalfOddN);
    for (long long N = 2; N <= 2000; N += 2)
        for (long long q = 2; q <= 50; q += 2) sweep(N, q, LagrangeVariant::HalfStepEvenN);
    EXPECT(worst <= 1e-10, "Lagrange sweep max |direct - closed| = " << worst);

    for (const double x : {1.0, kPi / 2, kPi, 5.0}) {
        const double err = std::abs(cot_limit_expression(x, 10000) - 4.0 / x);
        EXPECT(err < 1e-3, "cot limit error " << err << " at x=" << x);
    }

    const auto case_of = [](long long q, bool k_odd) {
        if (k_odd) return (q % 2 == 1) ? ParityCase::OddOdd : ParityCase::OddKEvenQ;
        return (q % 2 == 1) ? ParityCase::EvenKOddQ : ParityCase::EvenEven;
    };
    for (const bool k_odd : {true, false}) {
        for (long long q = 1; q <= 9; ++q) {
            const ParityCase pc = case_of(q, k_odd);
            const double limit = cq_limit(q, pc).to_double();
            const long long k1 = k_odd ? 1001 : 1000;
            const long long k2 = k_odd ? 10001 : 10000;
            const double err1 = std::abs(cq_partial(q, k1, pc) - limit);
            const double err2 = std::abs(cq_partial(q, k2, pc) - limit);
            EXPECT(err1 < 1e-2, "C_q error " << err1 << " at q=" << q << ", k=" << k1);
            EXPECT(err2 < err1, "C_q error not decreasing at q=" << q << " (k " << k1
                                 << " -> " << k2 << ")");
        }
    }
}

void criterion_property_suites(CriterionResult& result) {
    // antiderivative vs central differences
    std::mt19937_64 rng(97531);
    std::uniform_int_distribution<long long> den_dist(500, 1500);
    const long long M = 10000;
    double worst_slope = 0.0;
    for (int n = 1; n <= 8; ++n) {
        for (long long k = 2; k <= 20; ++k) {
            for (int trial = 0; trial < 40; ++trial) {
                const long long b = den_dist(rng);
                std::uniform_int_distribution<long long> num_dist(1, b - 1);
                const long long a = num_dist(rng);
                const double h = kPi / static_cast<double>(b * M);
                const double slope = (antiderivative(n, k, Breakpoint(a * M + 1, b * M)) -
                                      antiderivative(n, k, Breakpoint(a * M - 1, b * M))) /
                                     (2.0 * h);
                worst_slope = std::max(
                    worst_slope,
                    std::abs(slope - f_eval(n, k, Breakpoint(a, b).to_double())));
            }
        }
    }
    EXPECT(worst_slope <= 1e-6, "finite-difference mismatch " << worst_slope);

    // partition validity
    for (int n = 1; n <= 6; ++n) {
        for (long long k = 2; k <= 30; ++k) {
            const auto part =
                breakpoints(n % 2 == 1 ? PowerParity::Odd : PowerParity::Even, k);
            for (std::size_t i = 1; i + 1 < part.size(); ++i) {
                EXPECT(std::abs(f_eval(n, k, part[i].to_double())) <= 1e-10,
                       "f does not vanish at interior breakpoint, n=" << n << " k=" << k);
            }
            for (std::size_t i = 0; i + 1 < part.size(); ++i) {
                const double left = part[i].to_double();
                const double right = part[i + 1].to_double();
                bool pos = false;
                bool neg = false;
                for (int s = 1; s <= 10; ++s) {
                    const double f = f_eval(n, k, left + (right - left) * s / 11.0);
                    pos = pos || f > 1e-12;
                    neg = neg || f < -1e-12;
                }
                EXPECT(!(pos && neg), "sign change inside a panel, n=" << n << " k=" << k);
            }
        }
    }

    // recursion proof identity
    for (int n = 2; n <= 100; ++n) {
        for (int j = 1; j <= n - 1; ++j) {
            EXPECT(binomial(n, j) * (n - j) * j ==
                       binomial(n - 2, j - 1) * Integer(n - 1) * n,
                   "proof identity fails at n=" << n << " j=" << j);
        }
    }

    // double-factorial splitting
    for (long long j = 0; j <= 100; ++j) {
        EXPECT(double_factorial(2 * j) * double_factorial(2 * j - 1) == factorial(2 * j),
               "(2j)!!(2j-1)!! != (2j)! at j=" << j);
        EXPECT(factorial(2 * j + 1) ==
                   double_factorial(2 * j - 1) * double_factorial(2 * j) * (2 * j + 1),
               "(2j+1)! splitting fails at j=" << j);
    }
}

}  // namespace

int main() {
    bool all_ok = true;
    const auto run = [&](int number, const std::string& name, double budget,
                         const std::function<void(CriterionResult&)>& body) {
        all_ok = run_criterion(number, name, budget, body) && all_ok;
    };

    run(1, "exact values A_1..A_8", 1.0, criterion_exact_values);
    run(2, "cross-method equality through n = 201", 10.0, criterion_cross_method);
    run(3, "OEIS numerators and EGF terms", 5.0, criterion_oeis_numerators);
    run(4, "finite-k benchmark (3, 11)", 1.0, criterion_finite_k_benchmark);
    run(5, "convergence toward A_n", 30.0, criterion_convergence);
    run(6, "lemma suite", 60.0, criterion_lemma_suite);
    run(7, "property suites", 30.0, criterion_property_suites);

    if (!all_ok) {
        std::cout << "acceptance: FAILED\n";
        return 1;
    }
    std::cout << "acceptance: all criteria passed\n";
    return 0;
}
