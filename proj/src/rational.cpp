#include "p4bound/rational.hpp"

#include <limits>

namespace p4bound {

void Rational::normalize() {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Int Rational::floor() const {
    Int q = num_ / den_;           // truncates toward zero
    if (num_ < 0 && q * den_ != num_) --q;
    return q;
}

Int Rational::ceil() const {
    Int q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) ++q;
    return q;
}

std::string Rational::str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational binom_general(const Rational& x, int64_t k) {
    if (k < 0) throw std::invalid_argument("binom_general: k must be >= 0");
    Rational prod(1);
    for (int64_t i = 0; i < k; ++i) prod *= x - Rational(i);
    Int kfact(1);
    for (int64_t i = 2; i <= k; ++i) kfact *= i;
    return prod / Rational(kfact);
}

Int range_sum(const Int& a, const Int& b) {
    if (b < a) return 0;
    return (a + b) * (b - a + 1) / 2;
}

Rational range_sum_closed(const Rational& a, const Rational& b) {
    return (a + b) * (b - a + Rational(1)) / Rational(2);
}

std::vector<Rational> fit_polynomial(const std::vector<std::pair<Rational, Rational>>& pts) {
    const size_t n = pts.size();
    if (n == 0) return {};
    // Divided differences.
    std::vector<Rational> dd(n);
    for (size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (pts[i].first - pts[i - level].first);
        }
    }
    // Expand the Newton form into monomial coefficients.
    std::vector<Rational> coeffs(n, Rational(0));
    std::vector<Rational> basis;  // product of (x - x_j), ascending coefficients
    basis.push_back(Rational(1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < basis.size(); ++j) coeffs[j] += dd[i] * basis[j];
        if (i + 1 < n) {
            basis.push_back(Rational(0));
            for (size_t j = basis.size() - 1; j > 0; --j) {
                basis[j] = basis[j - 1] - pts[i].first * basis[j];
            }
            basis[0] = -pts[i].first * basis[0];
        }
    }
    return coeffs;
}

int64_t to_int64(const Int& v) {
    if (v > std::numeric_limits<int64_t>::max() || v < std::numeric_limits<int64_t>::min()) {
        throw std::overflow_error("to_int64: value out of range");
    }
    return static_cast<int64_t>(v);
}

int64_t to_int64_exact(const Rational& v) {
    if (!v.is_integer()) throw std::domain_error("to_int64_exact: not an integer: " + v.str());
    return to_int64(v.num());
}

}  // namespace p4bound
