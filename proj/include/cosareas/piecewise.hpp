#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cosareas/areas.hpp"
#include "cosareas/breakpoint.hpp"
#include "cosareas/combinatorics.hpp"

namespace cosareas {

enum class FiniteAreaMethod { Piecewise, Oracle };

struct FiniteAreaResult {
    int n;
    long long k;
    double area;
    std::size_t panel_count;
    FiniteAreaMethod method;
};

struct ConvergenceRow {
    long long k;
    double area;      // finite-k area
    double limit;     // float(A_n)
    double error;     // |area - limit|
    double millis;    // wall time of the finite-k computation
};

/// Thrown when the adaptive oracle cannot reach the requested tolerance
/// within its refinement budget; carries the best estimate it had.
class QuadratureBudgetExceeded : public std::runtime_error {
public:
    explicit QuadratureBudgetExceeded(double estimate)
        : std::runtime_error("finite_area_oracle: refinement budget exceeded"),
          best_estimate_(estimate) {}
    double best_estimate() const { return best_estimate_; }

private:
    double best_estimate_;
};

namespace detail {
inline double int_pow(double base, int exponent) {
    double result = 1.0;
    double b = base;
    for (int e = exponent; e > 0; e >>= 1) {
        if (e & 1) result *= b;
        b *= b;
    }
    return result;
}
}  // namespace detail

/// cos^n x - cos^n kx.
inline double f_eval(int n, long long k, double x) {
    if (n < 1) throw std::invalid_argument("f_eval: n must be >= 1");
    return detail::int_pow(std::cos(x), n) -
           detail::int_pow(std::cos(static_cast<double>(k) * x), n);
}

/// Antiderivative of cos^n x - cos^n kx via the power-reduction formula:
///   F(x) = (2/2^n) sum_j C(n,j) [ sin(mx)/m - sin(mkx)/(mk) ],  m = n-2j,
/// with j up to (n-1)/2 for odd n and n/2-1 for even n (the even-power
/// constant terms cancel between the two cosine powers). Sine arguments
/// are reduced exactly mod 2pi from the breakpoint's rational form.
inline double antiderivative(int n, long long k, const Breakpoint& x) {
    if (n < 1) throw std::invalid_argument("antiderivative: n must be >= 1");
    if (k < 2) throw std::invalid_argument("antiderivative: k must be >= 2");

    const int j_max = (n % 2 == 1) ? (n - 1) / 2 : n / 2 - 1;
    const double scale = std::ldexp(1.0, 1 - n);  // 2/2^n
    double sum = 0.0;
    for (int j = 0; j <= j_max; ++j) {
        const long long m = n - 2 * j;
        const double weight = scale * binomial(n, j).convert_to<double>();
        sum += weight * (x.sin_multiple(Integer(m)) / static_cast<double>(m) -
                         x.sin_multiple(Integer(m) * k) / static_cast<double>(m * k));
    }
    return sum;
}

/// Exact-breakpoint area: integral of |cos^n x - cos^n kx| over [0, pi]
/// as a signed sum of antiderivative differences, one sign sample per
/// panel. The sign is taken at the exact rational midpoint; if f happens
/// to vanish there (symmetric panels), the sample moves to the 1/3 point.
inline FiniteAreaResult finite_area_piecewise(int n, long long k) {
    if (n < 1) throw std::invalid_argument("finite_area_piecewise: n must be >= 1");
    if (k < 2) throw std::invalid_argument("finite_area_piecewise: k must be >= 2");

    const Partition part =
        breakpoints(n % 2 == 1 ? PowerParity::Odd : PowerParity::Even, k);

    double area = 0.0;
    for (std::size_t i = 0; i + 1 < part.size(); ++i) {
        const Breakpoint& left = part[i];
        const Breakpoint& right = part[i + 1];

        const Rational lf = left.fraction();
        const Rational rf = right.fraction();
        Rational sample = (lf + rf) * Rational(1, 2);
        double f_mid =
            f_eval(n, k, Breakpoint(sample.numerator(), sample.denominator()).to_double());
        if (f_mid == 0.0) {
            sample = lf + (rf - lf) * Rational(1, 3);
            f_mid =
                f_eval(n, k, Breakpoint(sample.numerator(), sample.denominator()).to_double());
        }
        const double sign = (f_mid < 0.0) ? -1.0 : 1.0;
        area += sign * (antiderivative(n, k, right) - antiderivative(n, k, left));
    }

    if (area < -1e-12)
        throw std::logic_error("finite_area_piecewise: negative area (implementation bug)");
    if (area < 0.0) area = 0.0;
    return {n, k, area, part.panel_count(), FiniteAreaMethod::Piecewise};
}

namespace detail {
struct SimpsonBudget {
    long long evals = 0;
    long long max_evals = 0;
    bool converged = true;
};

template <typename F>
double eval_counted(const F& f, double x, SimpsonBudget& budget) {
    ++budget.evals;
    return f(x);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb,
                        double whole, double tol, int depth, SimpsonBudget& budget) {
    if (budget.evals > budget.max_evals) {
        budget.converged = false;
        return whole;
    }
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval_counted(f, lm, budget);
    const double frm = eval_counted(f, rm, budget);
    const double h = b - a;
    const double left = (h / 12.0) * (fa + 4.0 * flm + fm);
    const double right = (h / 12.0) * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
        if (depth <= 0 && std::abs(delta) > 15.0 * tol) budget.converged = false;
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, budget) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, budget);
}
}  // namespace detail

/// Independent check on the piecewise path: adaptive composite Simpson
/// quadrature of |f| over [0, pi]. Knows nothing about breakpoints; the
/// initial uniform grid is proportional to k so the oscillation of
/// cos^n kx is resolved before adaptivity starts (a coarse start can
/// silently integrate past whole lobes).
inline FiniteAreaResult finite_area_oracle(int n, long long k, double tol,
                                           long long max_evals = 64'000'000) {
    if (n < 1) throw std::invalid_argument("finite_area_oracle: n must be >= 1");
    if (k < 2) throw std::invalid_argument("finite_area_oracle: k must be >= 2");
    if (!(tol > 0.0)) throw std::invalid_argument("finite_area_oracle: tol must be > 0");

    const auto abs_f = [n, k](double x) { return std::abs(f_eval(n, k, x)); };

    const std::size_t panels = static_cast<std::size_t>(16 * k);
    const double width = std::numbers::pi / static_cast<double>(panels);
    const double panel_tol = tol / static_cast<double>(panels);

    detail::SimpsonBudget budget;
    budget.max_evals = max_evals;
    double total = 0.0;
    double fa = detail::eval_counted(abs_f, 0.0, budget);
    for (std::size_t i = 0; i < panels; ++i) {
        const double a = static_cast<double>(i) * width;
        const double b = (i + 1 == panels) ? std::numbers::pi : a + width;
        const double m = 0.5 * (a + b);
        const double fm = detail::eval_counted(abs_f, m, budget);
        const double fb = detail::eval_counted(abs_f, b, budget);
        const double whole = ((b - a) / 6.0) * (fa + 4.0 * fm + fb);
        total += detail::adaptive_simpson(abs_f, a, b, fa, fm, fb, whole, panel_tol, 40, budget);
        fa = fb;
    }
    if (!budget.converged) throw QuadratureBudgetExceeded(total);
    return {n, k, total, panels, FiniteAreaMethod::Oracle};
}

/// Finite-k areas against the exact limit for a list of k values,
/// in the order given.
inline std::vector<ConvergenceRow> convergence_study(int n, const std::vector<long long>& ks) {
    const double limit = area_closed_form(n).to_double();
    std::vector<ConvergenceRow> rows;
    rows.reserve(ks.size());
    for (const long long k : ks) {
        const auto start = std::chrono::steady_clock::now();
        const FiniteAreaResult result = finite_area_piecewise(n, k);
        const auto stop = std::chrono::steady_clock::now();
        const double ms = std::chrono::duration<double, std::milli>(stop - start).count();
        rows.push_back({k, result.area, limit, std::abs(result.area - limit), ms});
    }
    return rows;
}

}  // namespace cosareas
