#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "p4bound/rational.hpp"

using namespace p4bound;

namespace {

// Independent binomial oracle: Pascal's triangle.
Int pascal(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::vector<std::vector<Int>> tri(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        tri[static_cast<size_t>(i)].assign(static_cast<size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j) {
            tri[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                tri[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] +
                tri[static_cast<size_t>(i - 1)][static_cast<size_t>(j)];
        }
    }
    return tri[static_cast<size_t>(n)][static_cast<size_t>(k)];
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(Int(2), Int(4)) == Rational(Int(1), Int(2)));
    CHECK(Rational(Int(-2), Int(4)) == Rational(Int(-1), Int(2)));
    CHECK(Rational(Int(3), Int(-6)) == Rational(Int(-1), Int(2)));
    CHECK(Rational(Int(0), Int(-7)).str() == "0");
    CHECK(Rational(Int(7), Int(1)).str() == "7");
    CHECK(Rational(Int(76), Int(5)).str() == "76/5");
    CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational floor and ceil") {
    CHECK(Rational(Int(7), Int(2)).floor() == 3);
    CHECK(Rational(Int(7), Int(2)).ceil() == 4);
    CHECK(Rational(Int(-7), Int(2)).floor() == -4);
    CHECK(Rational(Int(-7), Int(2)).ceil() == -3);
    CHECK(Rational(6).floor() == 6);
    CHECK(Rational(6).ceil() == 6);
}

TEST_CASE("binom_general worked values") {
    CHECK(binom_general(Rational(17), 3) == Rational(680));
    CHECK(binom_general(Rational(-1), 3) == Rational(-1));
    CHECK(binom_general(Rational(Int(76), Int(5)), 3) == Rational(Int(59356), Int(125)));
}

TEST_CASE("binom_general agrees with the combinatorial binomial up to 60") {
    for (int n = 0; n <= 60; ++n) {
        for (int k = 0; k <= n; ++k) {
            CHECK(binom_general(Rational(n), k) == Rational(pascal(n, k)));
        }
    }
}

TEST_CASE("binom_general boundary identities") {
    for (int k = 1; k <= 8; ++k) CHECK(binom_general(Rational(k - 1), k) == Rational(0));
    for (int x : {-9, -1, 0, 3, 41}) CHECK(binom_general(Rational(x), 0) == Rational(1));
    CHECK(binom_general(Rational(Int(1), Int(2)), 0) == Rational(1));
    CHECK_THROWS_AS(binom_general(Rational(3), -1), std::invalid_argument);
}

TEST_CASE("range_sum worked values and identity") {
    CHECK(range_sum(18, 52) == 1225);
    CHECK(range_sum(5, 4) == 0);
    CHECK(range_sum(17, 51) == 1190);
    for (int64_t a = -6; a <= 12; ++a) {
        for (int64_t b = a; b <= a + 15; ++b) {
            const Int expect = Int(b) * (b + 1) / 2 - Int(a) * (a - 1) / 2;
            CHECK(range_sum(a, b) == expect);
        }
    }
}

TEST_CASE("range_sum_closed matches range_sum on integer ranges") {
    for (int64_t a = -3; a <= 10; ++a) {
        for (int64_t b = a; b <= a + 8; ++b) {
            CHECK(range_sum_closed(Rational(a), Rational(b)) == Rational(range_sum(a, b)));
        }
    }
}

TEST_CASE("rational arithmetic is associative and commutative on sampled triples") {
    std::mt19937_64 eng(12345);
    auto sample = [&eng]() {
        const int64_t num = static_cast<int64_t>(eng() % 2001) - 1000;
        const int64_t den = 1 + static_cast<int64_t>(eng() % 40);
        return Rational(Int(num), Int(den));
    };
    for (int i = 0; i < 300; ++i) {
        const Rational a = sample(), b = sample(), c = sample();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        const Rational sum = a + b;
        CHECK(boost::multiprecision::gcd(boost::multiprecision::abs(sum.num()), sum.den()) == 1);
        CHECK(sum.den() > 0);
    }
}

TEST_CASE("fit_polynomial recovers exact coefficients") {
    // p(x) = 2/25 x^3 - 27/5 x^2 - 32 x - 21
    const Rational c3(Int(2), Int(25)), c2(Int(-27), Int(5)), c1(-32), c0(-21);
    std::vector<std::pair<Rational, Rational>> pts;
    for (int64_t x : {1, 4, 9, 16}) {
        const Rational xx(x);
        pts.emplace_back(xx, c3 * xx * xx * xx + c2 * xx * xx + c1 * xx + c0);
    }
    const auto coeffs = fit_polynomial(pts);
    REQUIRE(coeffs.size() == 4);
    CHECK(coeffs[0] == c0);
    CHECK(coeffs[1] == c1);
    CHECK(coeffs[2] == c2);
    CHECK(coeffs[3] == c3);
}
