#pragma once

#include <algorithm>
#include <compare>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosareas/rational.hpp"
#include "cosareas/trig.hpp"

namespace cosareas {

/// An exact abscissa of the form (a/b)*pi with a >= 0, b > 0, gcd(a,b) = 1.
/// Intersection points of cos^n x and cos^n kx all have this shape
/// (l*pi/(k+1) or l*pi/(k-1)), and keeping them exact is what lets the
/// partition stay correctly ordered at large k, where float-computed
/// neighbors can swap.
class Breakpoint {
public:
    Breakpoint(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
        if (b_ <= 0) throw std::invalid_argument("Breakpoint: denominator must be positive");
        if (a_ < 0) throw std::invalid_argument("Breakpoint: abscissa must be >= 0");
        const Integer g = gcd(a_, b_);
        if (g > 1) {
            a_ /= g;
            b_ /= g;
        }
    }

    static Breakpoint zero() { return Breakpoint(0, 1); }
    static Breakpoint pi() { return Breakpoint(1, 1); }

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }

    Rational fraction() const { return Rational(a_, b_); }

    double to_double() const { return ratio_as_double(a_, b_) * std::numbers::pi; }

    /// sin(m * x) with exact mod-2pi reduction of m*a/b.
    double sin_multiple(const Integer& m) const { return sin_pi_fraction(m * a_, b_); }

    friend bool operator==(const Breakpoint& x, const Breakpoint& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const Breakpoint& x, const Breakpoint& y) {
        const Integer lhs = x.a_ * y.b_;
        const Integer rhs = y.a_ * x.b_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    Integer a_;
    Integer b_;
};

/// Strictly increasing breakpoints covering [0, pi]: first is 0, last is pi.
class Partition {
public:
    explicit Partition(std::vector<Breakpoint> points) : points_(std::move(points)) {
        std::sort(points_.begin(), points_.end());
        points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
        if (points_.size() < 2 || !(points_.front() == Breakpoint::zero()) ||
            !(points_.back() == Breakpoint::pi())) {
            throw std::invalid_argument("Partition: must cover [0, pi]");
        }
    }

    std::size_t size() const { return points_.size(); }
    std::size_t panel_count() const { return points_.size() - 1; }
    const Breakpoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<Breakpoint>& points() const { return points_; }

private:
    std::vector<Breakpoint> points_;
};

enum class PowerParity { Odd, Even };

/// All intersection abscissae of cos^n x and cos^n kx in [0, pi], plus the
/// interval endpoints. Odd n: the even multiples l*2pi/(k+1), l*2pi/(k-1).
/// Even n: every multiple l*pi/(k+1), l*pi/(k-1), since cos x = -cos kx
/// contributes the odd-multiple family as well.
inline Partition breakpoints(PowerParity n_parity, long long k) {
    if (k < 2) throw std::invalid_argument("breakpoints: k must be >= 2");

    std::vector<Breakpoint> pts;
    pts.push_back(Breakpoint::zero());
    pts.push_back(Breakpoint::pi());

    const long long step = (n_parity == PowerParity::Odd) ? 2 : 1;
    for (const long long den : {k + 1, k - 1}) {
        for (long long m = step; m <= den; m += step) {
            pts.emplace_back(m, den);  // (m/den)*pi
        }
    }
    return Partition(std::move(pts));
}

}  // namespace cosareas
