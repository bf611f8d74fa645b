#include "p4bound/configs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace p4bound {

ValidityReport validate_config(const std::vector<int64_t>& lambda, int64_t d, int64_t s) {
    ValidityReport rep;
    auto fail = [&rep](std::string msg) {
        rep.valid = false;
        rep.violations.push_back(std::move(msg));
    };

    if (s < 1) fail("s must be >= 1");
    if (static_cast<int64_t>(lambda.size()) != s) {
        fail("sequence has " + std::to_string(lambda.size()) + " parts, expected s = " +
             std::to_string(s));
    }
    if (!lambda.empty() && lambda.back() < 1) fail("smallest part must be >= 1");
    for (size_t i = 0; i + 1 < lambda.size(); ++i) {
        const int64_t gap = lambda[i] - lambda[i + 1];
        if (gap < 1) {
            fail("parts must be strictly decreasing (violated at index " + std::to_string(i) + ")");
        } else if (gap > 2) {
            fail("gap " + std::to_string(gap) + " between parts " + std::to_string(lambda[i]) +
                 " and " + std::to_string(lambda[i + 1]) + " (connectedness requires gaps 1 or 2)");
        }
    }
    const int64_t sum = std::accumulate(lambda.begin(), lambda.end(), int64_t{0});
    if (sum != d) {
        fail("parts sum to " + std::to_string(sum) + ", expected d = " + std::to_string(d));
    }
    return rep;
}

std::vector<ConnectedInvariants> enumerate_configs(int64_t d, int64_t s) {
    if (d < 1) throw std::domain_error("enumerate_configs: d must be >= 1");
    if (s < 1 || s > 10) throw std::domain_error("enumerate_configs: s must be in 1..10");

    // A configuration is determined by its smallest part and the s-1 gap bits.
    std::vector<ConnectedInvariants> out;
    const int64_t masks = int64_t{1} << (s - 1);
    std::vector<int64_t> lam(static_cast<size_t>(s));
    for (int64_t mask = 0; mask < masks; ++mask) {
        lam[static_cast<size_t>(s - 1)] = 1;
        for (int64_t i = s - 2; i >= 0; --i) {
            const int64_t gap = (mask >> (s - 2 - i)) & 1 ? 2 : 1;
            lam[static_cast<size_t>(i)] = lam[static_cast<size_t>(i + 1)] + gap;
        }
        const int64_t base_sum = std::accumulate(lam.begin(), lam.end(), int64_t{0});
        const int64_t rem = d - base_sum;
        if (rem < 0 || rem % s != 0) continue;
        const int64_t shift = rem / s;
        ConnectedInvariants ci;
        ci.s = s;
        ci.d = d;
        ci.lambda = lam;
        for (auto& v : ci.lambda) v += shift;
        out.push_back(std::move(ci));
    }
    std::sort(out.begin(), out.end(), [](const ConnectedInvariants& a, const ConnectedInvariants& b) {
        return a.lambda > b.lambda;
    });
    return out;
}

std::pair<Rational, Rational> lambda_caps(int64_t d, int64_t s) {
    if (s < 1) throw std::domain_error("lambda_caps: s must be >= 1");
    const Rational frac{Int(d), Int(s)};
    return {frac + Rational(s - 1), frac + Rational(s - 2)};
}

}  // namespace p4bound
