#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "p4bound/configs.hpp"

using namespace p4bound;

namespace {

// Independent generator: every strictly decreasing positive sequence of
// length s with lambda_0 <= d summing to d, filtered by validate_config.
void brute_rec(int64_t remaining, int64_t parts_left, int64_t max_part,
               std::vector<int64_t>& acc, std::vector<std::vector<int64_t>>& out) {
    if (parts_left == 0) {
        if (remaining == 0) out.push_back(acc);
        return;
    }
    // Strictly decreasing positive parts: minimal possible tail sum.
    const int64_t min_tail = parts_left * (parts_left + 1) / 2;
    if (remaining < min_tail) return;
    for (int64_t v = std::min(max_part, remaining); v >= parts_left; --v) {
        acc.push_back(v);
        brute_rec(remaining - v, parts_left - 1, v - 1, acc, out);
        acc.pop_back();
    }
}

std::set<std::vector<int64_t>> brute_force_valid(int64_t d, int64_t s) {
    std::vector<std::vector<int64_t>> all;
    std::vector<int64_t> acc;
    brute_rec(d, s, d, acc, all);
    std::set<std::vector<int64_t>> valid;
    for (const auto& seq : all) {
        if (validate_config(seq, d, s).valid) valid.insert(seq);
    }
    return valid;
}

}  // namespace

TEST_CASE("validate_config worked examples") {
    CHECK(validate_config({18, 16, 14, 12, 11}, 71, 5).valid);
    const auto bad = validate_config({18, 15, 14, 12, 11}, 70, 5);
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.violations.size() == 1);
    CHECK(bad.violations[0].find("gap 3") != std::string::npos);
    CHECK(validate_config({5, 4, 3, 2, 1}, 15, 5).valid);
}

TEST_CASE("validate_config reports each violated clause") {
    const auto rep = validate_config({4, 4, 1}, 10, 3);  // not decreasing, gap 3, sum 9
    CHECK_FALSE(rep.valid);
    CHECK(rep.violations.size() == 3);

    CHECK_FALSE(validate_config({3, 2}, 5, 3).valid);   // length mismatch
    CHECK_FALSE(validate_config({2, 1, 0}, 3, 3).valid);  // non-positive part
    CHECK_FALSE(validate_config({}, 0, 0).valid);       // s < 1
}

TEST_CASE("enumerate_configs worked examples") {
    const auto got = enumerate_configs(71, 5);
    REQUIRE(got.size() == 3);
    CHECK(got[0].lambda == std::vector<int64_t>{18, 16, 14, 12, 11});
    CHECK(got[1].lambda == std::vector<int64_t>{17, 16, 14, 13, 11});
    CHECK(got[2].lambda == std::vector<int64_t>{17, 15, 14, 13, 12});

    CHECK(enumerate_configs(14, 5).empty());

    const auto small = enumerate_configs(10, 4);
    REQUIRE(small.size() == 1);
    CHECK(small[0].lambda == std::vector<int64_t>{4, 3, 2, 1});
}

TEST_CASE("enumerate_configs preconditions") {
    CHECK_THROWS_AS(enumerate_configs(0, 4), std::domain_error);
    CHECK_THROWS_AS(enumerate_configs(10, 0), std::domain_error);
    CHECK_THROWS_AS(enumerate_configs(10, 11), std::domain_error);
}

TEST_CASE("enumeration equals brute force for d <= 95, s <= 7") {
    for (int64_t s = 1; s <= 7; ++s) {
        for (int64_t d = 1; d <= 95; ++d) {
            const auto fast = enumerate_configs(d, s);
            std::set<std::vector<int64_t>> fast_set;
            for (const auto& cfg : fast) {
                CHECK(validate_config(cfg.lambda, d, s).valid);
                CHECK(cfg.d == d);
                CHECK(cfg.s == s);
                fast_set.insert(cfg.lambda);
            }
            CHECK(fast_set.size() == fast.size());
            CHECK(fast_set == brute_force_valid(d, s));
        }
    }
}

TEST_CASE("enumeration output is sorted lexicographically descending") {
    for (int64_t s : {4, 5, 6}) {
        for (int64_t d : {40, 63, 71, 88}) {
            const auto configs = enumerate_configs(d, s);
            CHECK(std::is_sorted(configs.begin(), configs.end(),
                                 [](const auto& a, const auto& b) { return a.lambda > b.lambda; }));
        }
    }
}

TEST_CASE("lambda caps hold on every enumerated configuration") {
    for (int64_t s = 2; s <= 7; ++s) {
        for (int64_t d = 1; d <= 95; ++d) {
            const auto [cap0, cap1] = lambda_caps(d, s);
            for (const auto& cfg : enumerate_configs(d, s)) {
                CHECK(Rational(cfg.lambda[0]) <= cap0);
                CHECK(Rational(cfg.lambda[1]) <= cap1);
            }
        }
    }
}

TEST_CASE("lambda_caps worked examples") {
    const auto caps71 = lambda_caps(71, 5);
    CHECK(caps71.first == Rational(Int(91), Int(5)));
    CHECK(caps71.second == Rational(Int(86), Int(5)));

    const auto caps64 = lambda_caps(64, 4);
    CHECK(caps64.first == Rational(19));
    CHECK(caps64.second == Rational(18));

    const auto degenerate = lambda_caps(5, 5);
    CHECK(degenerate.first == Rational(5));
    CHECK(degenerate.second == Rational(4));
}
