#pragma once

// Exact scalar arithmetic used by every bound computation: arbitrary-precision
// rationals kept in canonical form, generalized binomials via the falling
// factorial, and closed-form arithmetic range sums. No floating point is used
// anywhere a verdict depends on a comparison.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p4bound {

using Int = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(Int v) : num_(std::move(v)), den_(1) {}
    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_zero() const { return num_ == 0; }

    // Integer part toward -inf / +inf.
    Int floor() const;
    Int ceil() const;

    // "p" when integral, otherwise "p/q".
    std::string str() const;

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
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    // Canonical form makes equality structural.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    void normalize();

    Int num_;
    Int den_;  // > 0, gcd(|num_|, den_) == 1
};

// Falling-factorial binomial x(x-1)...(x-k+1)/k!, defined for every rational x
// and k >= 0. Agrees with the combinatorial binomial on integers x >= k and
// extends it to negative and fractional arguments (binom(-1,3) = -1).
Rational binom_general(const Rational& x, int64_t k);

// Sum of the integers a..b inclusive; 0 when the range is empty (b < a).
Int range_sum(const Int& a, const Int& b);

// (a+b)(b-a+1)/2 evaluated as a polynomial, with no empty-range clamping.
// Used where range endpoints are symbolic rationals.
Rational range_sum_closed(const Rational& a, const Rational& b);

// Coefficients (ascending degree) of the unique polynomial of degree
// pts.size()-1 through the given points. Newton divided differences, exact.
std::vector<Rational> fit_polynomial(const std::vector<std::pair<Rational, Rational>>& pts);

// Checked narrowing; all quantities in this project are small.
int64_t to_int64(const Int& v);
int64_t to_int64_exact(const Rational& v);

}  // namespace p4bound
