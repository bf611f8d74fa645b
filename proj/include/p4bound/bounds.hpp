#pragma once

// Closed-form bounds: genus and chi sums of a configuration, the
// Gruson-Peskine bound G(d,s), the chi lower bound, genus-defect (gamma)
// caps, sporadic-zero caps, the double point formula, the Ellingsrud-Peskine
// degree thresholds, and the plane-curve degree threshold.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "p4bound/rational.hpp"

namespace p4bound {

// Sum of binom(lambda_i, 2) + (i-1) lambda_i. The sectional genus of a
// configuration with Z sporadic zeros is 1 + genus_sum - Z.
Int genus_sum(const std::vector<int64_t>& lambda);

// Gruson-Peskine bound G(d,s) = d^2/(2s) + (s-4) d/2 + 1.
Rational gp_bound(int64_t d, int64_t s);

// Sum of binom(lambda_t + t - 1, 3) - binom(t - 1, 3); generalized binomials
// throughout, so the t = 0 term contributes binom(lambda_0 - 1, 3) + 1.
Int chi_sum(const std::vector<int64_t>& lambda);

// Closed-form lower bound s binom(d/s + (s-3)/2, 3) + 1 - binom(s-1, 4).
Rational chi_closed_form(int64_t d, int64_t s);

// min(d(s-1)^2/(2s), d^2/(2s) + (s-4) d/2 - (d^2-5d)/10), the two caps on
// the genus defect gamma = G(d,s) - pi.
Rational gamma_cap(int64_t d, int64_t s);

// The per-s simplification of gamma_cap: 9d/8, d, d(90-d)/60, d(70-d)/35 for
// s = 4..7. Equals gamma_cap for s = 5,6,7 (all d) and for s = 4, d >= 25.
Rational gamma_cap_closed_form(int64_t d, int64_t s);

// ceil(max((d^2-5d+10)/10, G(d,s) - gamma_cap(d,s))); the genus is integral,
// so the ceiling is valid and tightens the floor by at most one.
Int pi_floor(int64_t d, int64_t s);

// Sharp form of the same floor. K^2 < 6 chi is strict, and both sides are
// integers, so 6 chi - K^2 >= 1 and the double point formula gives
// pi >= ceil((d^2-5d+12)/10): one above the printed floor exactly when
// 5 | d. The certifier's zero budgets rest on this.
Int pi_floor_strict(int64_t d, int64_t s);

// 1 + genus_sum(lambda) - pi_floor(d, s) with d, s read off the sequence.
// Negative values mark the configuration as impossible.
Int sporadic_cap(const std::vector<int64_t>& lambda);

// K^2 solved out of the double point formula:
// d^2 - 5d - 10(pi-1) + 2(6 chi - K^2) = 0.
Rational double_point_k2(int64_t d, int64_t pi, int64_t chi);

// Residual of the double point formula at (d, pi, chi, k2); zero iff satisfied.
Rational double_point_residual(int64_t d, int64_t pi, int64_t chi, const Rational& k2);

// floor(5 (sigma+1)(sigma-2) / (sigma-4)) for sigma in {5,6,7}: a surface not
// of general type has degree at most this, or lies on a degree-sigma
// hypersurface. Rejects other sigma (sigma = 4 divides by zero).
int64_t ep_degree_threshold(int64_t sigma);

// Largest d with G(d,s) >= (d/2-1)(d/2-2)/2, i.e. the degree below which a
// plane curve of degree > d/2 on the surface is not yet excluded. nullopt
// means the inequality holds for every d (s = 4). Exact descending scan.
std::optional<int64_t> lemma6_max_degree(int64_t s);

// Residual of the aggregate inequality after substituting the closed-form
// genus and chi bounds and a weight estimate 12A - 22z:
//   d^2 - 5d - 10(d^2/(2s) + (s-4)d/2) + 12 s binom(d/s + (s-3)/2, 3)
//   + 12(1 - binom(s-1, 4)) - (12A - 22z) - 18.
// The degree is admissible iff the residual is <= 0.
Rational aggregate_residual(const Rational& d, int64_t s, const Rational& a_est,
                            const Rational& z_est);

// The s = 4 sub-branch: assuming at most 3d/4 sporadic zeros, the quadratic
// cap on A and the cubic it induces in the aggregate inequality.
struct Lemma6S4Branch {
    std::array<Rational, 3> quadratic;          // A cap, coefficients d^2, d, 1
    std::array<Rational, 3> quadratic_derived;  // naive column sum at lambda0 = d/4+3, z = 3d/4
    std::array<Rational, 4> cubic;              // residual cubic, coefficients d^3 .. 1
    int64_t max_degree = 0;                     // largest d with cubic <= 0
};
Lemma6S4Branch lemma6_s4_branch();

}  // namespace p4bound
