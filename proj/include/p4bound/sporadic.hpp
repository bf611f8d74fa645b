#pragma once

// Extremal sporadic-zero profiles.
//
// A profile records how many sporadic zeros sit in each total degree. Zeros
// are modelled on the two highest staircase columns: column 0 has slots in
// degrees lambda_0, lambda_0+1, ... and column 1 in degrees lambda_1+1,
// lambda_1+2, ... Without the secant-line constraints the whole budget goes
// into a single unbounded column-0 run. With them (degree > 50) the slot
// sets are capped and split into three cases by where the budget overflows:
//
//   (i)   lambda_0 + z - 1 <= d/2         one column-0 run
//   (ii)  overflow past d/2, but          column 0 filled to floor(d/2),
//         lambda_0+lambda_1+z-1 <= d      remainder low in column 1
//   (iii) overflow past d                 both columns capped at
//                                         r = ceil((lambda_0+lambda_1+z)/2)
//                                         (column 1 at r-1)
//
// case_bound_A returns the literal case-formula value (the sum over every
// slot in the case's slot set); extremal_profile builds the exact profile by
// filling the z highest-degree slots, which can be one slot fewer in case
// (iii). Both are exposed so verdicts can carry the two numbers side by side.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "p4bound/rational.hpp"

namespace p4bound {

enum class FillMode { unconstrained, case_i, case_ii, case_iii };

std::string to_string(FillMode m);  // "unconstrained", "i", "ii", "iii"

struct SporadicProfile {
    std::map<int64_t, int64_t> counts;  // degree -> multiplicity, absent means zero
    FillMode mode = FillMode::unconstrained;
};

struct ProfileStats {
    Int a;  // sum of alpha_t * t
    Int z;  // sum of alpha_t
    Int w;  // sum of alpha_t * (12t - 22)
};

// Thrown when a constrained slot set cannot hold the requested budget.
struct infeasible_placement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Case selection plus the literal case-formula bound on A. z = 0 yields
// (case i, 0). Requires lambda0 > lambda1 >= 1 and z >= 0.
std::pair<FillMode, Int> case_bound_A(int64_t lambda0, int64_t lambda1, int64_t d, int64_t z);

// Same selection and formulas with exact rational endpoints and no
// floor/ceil/empty-range clamping; this is the symbolic evaluator behind the
// closed-form degree estimates.
std::pair<FillMode, Rational> case_bound_A_rational(const Rational& lambda0,
                                                    const Rational& lambda1, const Rational& d,
                                                    const Rational& z);

// Exact extremal profile: z zeros on the case's slot set, highest degrees
// first. Unconstrained mode is the single uncapped column-0 run.
SporadicProfile extremal_profile(int64_t lambda0, int64_t lambda1, int64_t d, int64_t z,
                                 bool constrained);

// The literal case-(ii) fill with no cap on the column-1 run: column 0 holds
// lambda0..floor(d/2), column 1 the remaining budget from lambda1+1 up. At
// the odd-d boundary lambda0+lambda1+z-1 = d this tops out one past
// floor(d/2), which is where extremal_profile signals infeasible placement;
// verdicts fall back to this fill there.
SporadicProfile case_ii_formula_profile(int64_t lambda0, int64_t lambda1, int64_t d, int64_t z);

ProfileStats profile_stats(const SporadicProfile& profile);

// The quadratic first estimate of A at the connectedness caps
// lambda0 = d/s+s-1, lambda1 = d/s+s-2 with the per-s gamma budget.
// Public contract covers s in {4, 5}.
Rational first_estimate_A(int64_t d, int64_t s);

// Internal form of the estimate for any s in 4..7 (used by the aggregate
// inequality); same construction with gamma_cap_closed_form(d, s) as budget.
Rational estimate_A_rational(int64_t d, int64_t s);

}  // namespace p4bound
