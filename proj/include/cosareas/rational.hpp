#pragma once

#include <compare>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "cosareas/bigint.hpp"

namespace cosareas {

/// Exact rational number. Always stored normalized: den > 0 and
/// gcd(|num|, den) = 1, so equality is structural.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}  // NOLINT (implicit by design)
    Rational(Integer n) : num_(std::move(n)), den_(1) {}
    Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    const Integer& numerator() const { return num_; }
    const Integer& denominator() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    double to_double() const { return ratio_as_double(num_, den_); }

    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const Integer lhs = a.num_ * b.den_;
        const Integer rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Integer g = gcd(abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0) den_ = 1;
    }

    Integer num_;
    Integer den_;
};

/// An exact rational coefficient r representing the real value r/pi.
/// Every limiting area A_n and every C_q limit has this form, so
/// comparisons stay exact on the coefficient.
struct PiRational {
    Rational coeff;

    PiRational() = default;
    explicit PiRational(Rational c) : coeff(std::move(c)) {}
    PiRational(Integer num, Integer den) : coeff(std::move(num), std::move(den)) {}

    double to_double() const { return coeff.to_double() / std::numbers::pi; }

    std::string str() const { return coeff.str() + " * 1/pi"; }

    friend bool operator==(const PiRational& a, const PiRational& b) {
        return a.coeff == b.coeff;
    }
    friend std::strong_ordering operator<=>(const PiRational& a, const PiRational& b) {
        return a.coeff <=> b.coeff;
    }
    friend std::ostream& operator<<(std::ostream& os, const PiRational& v) {
        return os << v.str();
    }
};

}  // namespace cosareas
