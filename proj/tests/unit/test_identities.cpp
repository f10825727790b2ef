#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "cosareas/identities.hpp"

using cosareas::cot_limit_expression;
using cosareas::cq_limit;
using cosareas::cq_partial;
using cosareas::Integer;
using cosareas::lagrange_closed_form;
using cosareas::lagrange_sum_direct;
using cosareas::LagrangeVariant;
using cosareas::ParityCase;
using cosareas::PiRational;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("Lagrange sums, spot values") {
    CHECK(lagrange_sum_direct(4, 1, LagrangeVariant::FullEvenN) ==
          Catch::Approx(1.0).margin(1e-14));
    CHECK(lagrange_sum_direct(6, 2, LagrangeVariant::FullEvenN) ==
          Catch::Approx(0.0).margin(1e-14));
    CHECK(lagrange_sum_direct(5, 1, LagrangeVariant::HalfOddN) ==
          Catch::Approx(0.5 / std::tan(kPi / 10)).margin(1e-13));
}

TEST_CASE("Lagrange closed forms, spot values") {
    CHECK(lagrange_closed_form(4, 1, LagrangeVariant::FullEvenN) ==
          Catch::Approx(1.0).margin(1e-14));
    CHECK(lagrange_closed_form(8, 2, LagrangeVariant::HalfStepEvenN) ==
          Catch::Approx(1.0 / std::tan(2 * kPi / 16)).margin(1e-13));
    CHECK(lagrange_closed_form(5, 2, LagrangeVariant::HalfOddN) ==
          Catch::Approx(-0.5 * std::tan(kPi / 5)).margin(1e-13));
    CHECK(lagrange_closed_form(12, 8, LagrangeVariant::HalfStepEvenN) == 0.0);
}

TEST_CASE("parity preconditions are enforced") {
    CHECK_THROWS_AS(lagrange_sum_direct(5, 1, LagrangeVariant::FullEvenN),
                    std::invalid_argument);
    CHECK_THROWS_AS(lagrange_sum_direct(4, 1, LagrangeVariant::HalfOddN),
                    std::invalid_argument);
    CHECK_THROWS_AS(lagrange_sum_direct(8, 3, LagrangeVariant::HalfStepEvenN),
                    std::invalid_argument);
    CHECK_THROWS_AS(lagrange_closed_form(7, 2, LagrangeVariant::HalfStepEvenN),
                    std::invalid_argument);
    CHECK_THROWS_AS(lagrange_sum_direct(0, 1, LagrangeVariant::FullEvenN),
                    std::invalid_argument);
}

TEST_CASE("direct sums match closed forms across a sweep") {
    double worst = 0.0;
    for (long long N = 2; N <= 400; N += 2) {
        for (long long q = 1; q <= 50; ++q) {
            const double closed = lagrange_closed_form(N, q, LagrangeVariant::FullEvenN);
            if (std::abs(closed) > 1e6) continue;  // pole guard
            worst = std::max(worst,
                             std::abs(lagrange_sum_direct(N, q, LagrangeVariant::FullEvenN) -
                                      closed));
        }
    }
    for (long long N = 3; N <= 401; N += 2) {
        for (long long q = 1; q <= 50; ++q) {
            const double closed = lagrange_closed_form(N, q, LagrangeVariant::HalfOddN);
            if (std::abs(closed) > 1e6) continue;
            worst = std::max(worst,
                             std::abs(lagrange_sum_direct(N, q, LagrangeVariant::HalfOddN) -
                                      closed));
        }
    }
    for (long long N = 2; N <= 400; N += 2) {
        for (long long q = 2; q <= 50; q += 2) {
            const double closed = lagrange_closed_form(N, q, LagrangeVariant::HalfStepEvenN);
            if (std::abs(closed) > 1e6) continue;
            worst = std::max(
                worst, std::abs(lagrange_sum_direct(N, q, LagrangeVariant::HalfStepEvenN) -
                                closed));
        }
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("cotangent limit expression approaches 4/x") {
    CHECK(cot_limit_expression(kPi, 1000000) == Catch::Approx(4.0 / kPi).margin(1e-5));
    CHECK(cot_limit_expression(2.0, 1000000) == Catch::Approx(2.0).margin(1e-5));

    for (const double x : {1.0, kPi / 2, kPi, 5.0}) {
        double previous = std::numeric_limits<double>::infinity();
        for (const long long k : {100LL, 1000LL, 10000LL}) {
            const double err = std::abs(cot_limit_expression(x, k) - 4.0 / x);
            CHECK(err < previous);
            previous = err;
        }
        CHECK(previous < 1e-3);
    }
}

TEST_CASE("cotangent poles and bad arguments are rejected") {
    CHECK_THROWS_AS(cot_limit_expression(kPi, 2), std::domain_error);  // x/(k-1) = pi
    CHECK_THROWS_AS(cot_limit_expression(0.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(cot_limit_expression(1.0, 1), std::invalid_argument);
}

TEST_CASE("finite C_q sums land near their limits") {
    CHECK(cq_partial(1, 1001, ParityCase::OddOdd) ==
          Catch::Approx(4.0 / kPi).margin(1e-3));
    CHECK(cq_partial(4, 1001, ParityCase::OddKEvenQ) == Catch::Approx(0.0).margin(1e-3));
    CHECK(cq_partial(2, 1000, ParityCase::EvenEven) ==
          Catch::Approx(16.0 / (4.0 * kPi)).margin(1e-3));
    CHECK(cq_partial(1, 1000, ParityCase::EvenKOddQ) ==
          Catch::Approx(8.0 / kPi).margin(1e-2));
}

TEST_CASE("C_q limits per parity case") {
    CHECK(cq_limit(3, ParityCase::OddOdd) == PiRational(Integer(4), Integer(9)));
    CHECK(cq_limit(1, ParityCase::EvenKOddQ) == PiRational(Integer(8), Integer(1)));
    CHECK(cq_limit(8, ParityCase::EvenEven) == PiRational(Integer(0), Integer(1)));
    CHECK(cq_limit(2, ParityCase::OddKEvenQ) == PiRational(Integer(4), Integer(1)));
    CHECK(cq_limit(6, ParityCase::EvenEven) == PiRational(Integer(4), Integer(9)));
}

TEST_CASE("C_q parity mismatches are rejected") {
    CHECK_THROWS_AS(cq_partial(2, 1001, ParityCase::OddOdd), std::invalid_argument);
    CHECK_THROWS_AS(cq_partial(1, 1000, ParityCase::OddOdd), std::invalid_argument);
    CHECK_THROWS_AS(cq_partial(3, 1001, ParityCase::OddKEvenQ), std::invalid_argument);
    CHECK_THROWS_AS(cq_partial(1, 2, ParityCase::EvenKOddQ), std::invalid_argument);
    CHECK_THROWS_AS(cq_limit(0, ParityCase::OddOdd), std::invalid_argument);
    CHECK_THROWS_AS(cq_limit(2, ParityCase::EvenKOddQ), std::invalid_argument);
}

TEST_CASE("C_q error decreases like 1/k") {
    const auto case_of = [](long long q, bool k_odd) {
        const bool q_odd = (q % 2 == 1);
        if (k_odd) return q_odd ? ParityCase::OddOdd : ParityCase::OddKEvenQ;
        return q_odd ? ParityCase::EvenKOddQ : ParityCase::EvenEven;
    };
    for (const bool k_odd : {true, false}) {
        for (long long q = 1; q <= 9; ++q) {
            const ParityCase pc = case_of(q, k_odd);
            const double limit = cq_limit(q, pc).to_double();
            double previous = std::numeric_limits<double>::infinity();
            for (long long k : {1001LL, 10001LL, 100001LL}) {
                if (!k_odd) --k;  // 1000, 10000, 100000
                const double err = std::abs(cq_partial(q, k, pc) - limit);
                REQUIRE(err < previous);
                // C/k with a generous constant
                CHECK(err < 50.0 / static_cast<double>(k));
                previous = err;
            }
        }
    }
}
