#pragma once

// Connected invariants of a generic hyperplane section's point ideal:
// strictly decreasing positive sequences lambda_0 > ... > lambda_{s-1} with
// consecutive gaps in {1,2} and prescribed sum d.

#include <cstdint>
#include <string>
#include <vector>

#include "p4bound/rational.hpp"

namespace p4bound {

struct ConnectedInvariants {
    int64_t s = 0;
    int64_t d = 0;
    std::vector<int64_t> lambda;
};

struct ValidityReport {
    bool valid = true;
    std::vector<std::string> violations;
};

// Checks the three defining clauses (strict decrease to >= 1, gaps in {1,2},
// sum == d) plus basic shape, and reports every violated clause.
ValidityReport validate_config(const std::vector<int64_t>& lambda, int64_t d, int64_t s);

// All valid configurations for (d, s), sorted lexicographically descending.
// Empty when d < s(s+1)/2. Requires d >= 1 and 1 <= s <= 10.
std::vector<ConnectedInvariants> enumerate_configs(int64_t d, int64_t s);

// Caps implied by connectedness: (d/s + s - 1, d/s + s - 2).
std::pair<Rational, Rational> lambda_caps(int64_t d, int64_t s);

}  // namespace p4bound
