#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "p4bound/bounds.hpp"
#include "p4bound/rational.hpp"
#include "p4bound/sporadic.hpp"

using namespace p4bound;

TEST_CASE("case_bound_A worked values") {
    auto [tag_i, a_i] = case_bound_A(10, 8, 40, 3);
    CHECK(tag_i == FillMode::case_i);
    CHECK(a_i == 33);  // 10+11+12

    auto [tag_ii, a_ii] = case_bound_A(10, 8, 26, 6);
    CHECK(tag_ii == FillMode::case_ii);
    CHECK(a_ii == 65);  // (10+11+12+13) + (9+10)

    auto [tag_iii, a_iii] = case_bound_A(10, 9, 24, 8);
    CHECK(tag_iii == FillMode::case_iii);
    CHECK(a_iii == 106);  // r = 14: (10+...+14) + (10+...+13)

    CHECK(case_bound_A(10, 8, 40, 0).second == 0);
    CHECK_THROWS_AS(case_bound_A(8, 10, 40, 3), std::invalid_argument);
    CHECK_THROWS_AS(case_bound_A(10, 8, 40, -1), std::invalid_argument);
}

TEST_CASE("extremal_profile worked values") {
    SUBCASE("case (iii) drops the lowest slot") {
        const auto profile = extremal_profile(10, 9, 24, 8, true);
        CHECK(profile.mode == FillMode::case_iii);
        const auto st = profile_stats(profile);
        CHECK(st.a == 96);
        CHECK(st.z == 8);
        const std::map<int64_t, int64_t> expect{{10, 1}, {11, 2}, {12, 2}, {13, 2}, {14, 1}};
        CHECK(profile.counts == expect);
    }
    SUBCASE("case (i) exact fill") {
        const auto profile = extremal_profile(10, 8, 40, 3, true);
        CHECK(profile.mode == FillMode::case_i);
        const std::map<int64_t, int64_t> expect{{10, 1}, {11, 1}, {12, 1}};
        CHECK(profile.counts == expect);
        CHECK(profile_stats(profile).a == 33);
    }
    SUBCASE("zero budget") {
        for (bool constrained : {false, true}) {
            const auto profile = extremal_profile(9, 5, 30, 0, constrained);
            CHECK(profile.counts.empty());
            const auto st = profile_stats(profile);
            CHECK(st.a == 0);
            CHECK(st.z == 0);
            CHECK(st.w == 0);
        }
    }
    SUBCASE("unconstrained single column") {
        const auto profile = extremal_profile(10, 8, 26, 6, false);
        CHECK(profile.mode == FillMode::unconstrained);
        const std::map<int64_t, int64_t> expect{{10, 1}, {11, 1}, {12, 1}, {13, 1}, {14, 1}, {15, 1}};
        CHECK(profile.counts == expect);
    }
}

TEST_CASE("case (ii) fill matches the literal formula when capacity suffices") {
    const auto profile = extremal_profile(10, 8, 26, 6, true);
    CHECK(profile.mode == FillMode::case_ii);
    const auto st = profile_stats(profile);
    CHECK(st.a == case_bound_A(10, 8, 26, 6).second);
    CHECK(st.z == 6);
}

TEST_CASE("infeasible placement: odd-degree case (ii) boundary") {
    // lambda0+lambda1+z-1 = d with odd d: the formula's column-1 run tops out
    // one past floor(d/2), so the capped slot set is one slot short.
    CHECK_THROWS_AS(extremal_profile(10, 9, 27, 9, true), infeasible_placement);
    // The literal case formula still evaluates.
    CHECK(case_bound_A(10, 9, 27, 9).first == FillMode::case_ii);
}

TEST_CASE("profile_stats worked values") {
    SUBCASE("the d=71 extremal profile") {
        SporadicProfile profile;
        profile.mode = FillMode::case_iii;
        for (int64_t t = 18; t <= 52; ++t) profile.counts[t] += 1;
        for (int64_t t = 17; t <= 51; ++t) profile.counts[t] += 1;
        profile.counts[17] -= 1;
        profile.counts.erase(17);
        const auto st = profile_stats(profile);
        CHECK(st.a == 2398);
        CHECK(st.z == 69);
        CHECK(st.w == 27258);
    }
    SUBCASE("empty") {
        const auto st = profile_stats(SporadicProfile{});
        CHECK(st.a == 0);
        CHECK(st.z == 0);
        CHECK(st.w == 0);
    }
    SUBCASE("two zeros in degree 10") {
        SporadicProfile profile;
        profile.counts[10] = 2;
        const auto st = profile_stats(profile);
        CHECK(st.a == 20);
        CHECK(st.z == 2);
        CHECK(st.w == 196);
    }
}

TEST_CASE("W identity and greedy-vs-formula ordering on a sampled grid") {
    std::mt19937_64 eng(424242);
    int checked = 0;
    while (checked < 500) {
        const int64_t l1 = 1 + static_cast<int64_t>(eng() % 20);
        const int64_t l0 = l1 + 1 + static_cast<int64_t>(eng() % 6);
        const int64_t d = l0 + l1 + static_cast<int64_t>(eng() % 60);
        const int64_t z = static_cast<int64_t>(eng() % 80);
        const bool constrained = (eng() % 2) == 0;
        SporadicProfile profile;
        try {
            profile = extremal_profile(l0, l1, d, z, constrained);
        } catch (const infeasible_placement&) {
            continue;  // capped slot set too small for the budget
        }
        const auto st = profile_stats(profile);
        CHECK(st.z == z);
        CHECK(st.w == 12 * st.a - 22 * st.z);
        const Int formula =
            constrained ? case_bound_A(l0, l1, d, z).second : range_sum(l0, l0 + z - 1);
        CHECK(st.a <= formula);
        // Slot degrees stay above lambda1, so every zero weighs positively.
        if (!profile.counts.empty()) {
            CHECK(profile.counts.begin()->first >= l1 + 1);
            CHECK(profile.counts.begin()->first >= 2);
        }
        ++checked;
    }
}

TEST_CASE("greedy equals the case formula exactly when capacity == z") {
    // Case (iii) with lambda0+lambda1+z even: capacity 2r - l0 - l1 == z.
    for (int64_t l1 = 3; l1 <= 15; ++l1) {
        for (int64_t l0 = l1 + 1; l0 <= l1 + 3; ++l0) {
            for (int64_t z = 10; z <= 40; z += 2) {
                if ((l0 + l1 + z) % 2 != 0) continue;
                const int64_t d = l0 + l1 + z - 2;  // force case (iii)
                if (d <= 0) continue;
                const auto [tag, formula] = case_bound_A(l0, l1, d, z);
                if (tag != FillMode::case_iii) continue;
                const auto st = profile_stats(extremal_profile(l0, l1, d, z, true));
                CHECK(st.a == formula);
            }
        }
    }
}

TEST_CASE("first_estimate_A worked values") {
    CHECK(first_estimate_A(64, 4) == Rational(Int(10513), Int(4)));
    CHECK(first_estimate_A(70, 5) == Rational(Int(9801), Int(4)));
    CHECK(first_estimate_A(0, 4) == Rational(Int(1), Int(4)));
    CHECK_THROWS_AS(first_estimate_A(60, 6), std::domain_error);
}

TEST_CASE("first_estimate_A reproduces the printed quadratics coefficient-for-coefficient") {
    // Three values determine a quadratic; fit at 16, 32, 64 and compare.
    for (int64_t s : {4, 5}) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (int64_t d : {16, 32, 64}) pts.emplace_back(Rational(d), first_estimate_A(d, s));
        const auto coeffs = fit_polynomial(pts);
        REQUIRE(coeffs.size() == 3);
        if (s == 4) {
            CHECK(coeffs[2] == Rational(Int(153), Int(256)));
            CHECK(coeffs[1] == Rational(Int(45), Int(16)));
            CHECK(coeffs[0] == Rational(Int(1), Int(4)));
        } else {
            CHECK(coeffs[2] == Rational(Int(9), Int(20)));
            CHECK(coeffs[1] == Rational(Int(7), Int(2)));
            CHECK(coeffs[0] == Rational(Int(1), Int(4)));
        }
        // And the fit really is the function, on a separate node.
        const Rational d_probe(48);
        CHECK(coeffs[2] * d_probe * d_probe + coeffs[1] * d_probe + coeffs[0] ==
              first_estimate_A(48, s));
    }
}

TEST_CASE("case selection uses exact halves") {
    // lambda0 + z - 1 == d/2 exactly: still case (i).
    auto [tag, value] = case_bound_A(10, 9, 30, 6);  // 15 == 15
    CHECK(tag == FillMode::case_i);
    CHECK(value == range_sum(10, 15));
    // One past the half: case (ii).
    CHECK(case_bound_A(10, 9, 30, 7).first == FillMode::case_ii);
}
