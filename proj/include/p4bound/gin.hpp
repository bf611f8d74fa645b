#pragma once

// Executable model of Borel-fixed monomial ideals in x0..x3: sporadic-zero
// extraction, x2-saturation, staircase invariants, Hilbert-function genus,
// and the single-zero lift used to generate randomized genus cross-checks.
//
// Curve mode means every generator is x3-free; such ideals play the role of
// the initial ideal of a space curve, and their x2-saturation is the point
// staircase (x0^s, x0^{s-1} x1^{lambda_{s-1}}, ..., x1^{lambda_0}).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "p4bound/rational.hpp"
#include "p4bound/sporadic.hpp"

namespace p4bound {

struct Monomial {
    int64_t a = 0, b = 0, c = 0, e = 0;  // exponents of x0, x1, x2, x3

    int64_t degree() const { return a + b + c + e; }
    bool divides(const Monomial& m) const {
        return a <= m.a && b <= m.b && c <= m.c && e <= m.e;
    }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::string to_string(const Monomial& m);

class MonomialIdeal {
public:
    MonomialIdeal() = default;
    // Minimalizes and sorts the generator set.
    MonomialIdeal(std::vector<Monomial> gens, int nvars);

    const std::vector<Monomial>& gens() const { return gens_; }
    int nvars() const { return nvars_; }
    bool member(const Monomial& m) const;
    bool curve_mode() const;  // every generator x3-free
    int64_t max_degree() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::vector<Monomial> gens_;  // minimal, canonically sorted
    int nvars_ = 4;
};

// Text format: comma-separated monomials over x0..x3 with optional '*' and
// '^'; whitespace insignificant. Rejects unknown variables and non-positive
// exponents.
MonomialIdeal parse_ideal(const std::string& text);
std::string to_string(const MonomialIdeal& ideal);

// Closure under the moves m -> m * x_i / x_j for i < j, x_j | m.
bool is_borel_fixed(const MonomialIdeal& ideal);

// Degree-indexed counts of monomials x0^a x1^b x2^c outside the ideal whose
// column (a, b) contains a higher x2-power inside it. Requires curve mode and
// Borel-fixedness.
SporadicProfile sporadic_zeros(const MonomialIdeal& ideal);

// Strip x2 from every generator and re-minimalize: the point staircase of the
// generic hyperplane section. Requires curve mode.
MonomialIdeal saturate_restrict(const MonomialIdeal& ideal);

struct StaircaseInvariants {
    int64_t s = 0;
    std::vector<int64_t> lambda;  // strictly decreasing, >= 1
    int64_t d = 0;                // sum of lambda
};

// Reads (s, lambda, d) off a point staircase; connectedness is not required.
// Throws std::invalid_argument when the generators are not of staircase form.
StaircaseInvariants connected_invariants_of(const MonomialIdeal& ideal);

struct not_curve_like : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degree and arithmetic genus from the Hilbert function of the quotient:
// counts monomials outside the ideal per degree up to the cutoff (max
// generator degree + 4) and takes the first difference that holds steady
// through the cutoff, at least three equal consecutive values. (The
// difference is d + alpha_t, so it can plateau inside the sporadic range;
// only the final run counts.) Returns (d, pi) with H(t) = d t + 1 - pi.
// Requires curve mode in the 4-variable ring; throws not_curve_like when the
// differences do not stabilize.
std::pair<int64_t, int64_t> hilbert_genus(const MonomialIdeal& ideal);

// Replaces minimal generator m by m*x2 (plus m*x0, m*x1 when m is x2-free)
// and re-minimalizes: the x2-saturation is preserved and exactly one sporadic
// zero appears, in degree deg(m). Borel-fixedness is preserved unless some
// other generator's Borel move lands exactly on m (a gap-1 staircase
// neighbour); the randomized oracle only lifts targets without that obstruction.
MonomialIdeal lift(const MonomialIdeal& ideal, const Monomial& m);

// Hilbert genus == 1 + genus_sum(staircase invariants) - total sporadic zeros.
bool eq3_crosscheck(const MonomialIdeal& ideal);

// The curve-mode staircase ideal of a strictly decreasing sequence.
MonomialIdeal staircase_ideal(const std::vector<int64_t>& lambda);

// Randomized cross-check: staircase ideals with up to ten single-zero lifts,
// verifying Borel/saturation preservation, the recorded lift degrees against
// the extracted profile, both degree readings, and the genus identity.
struct TrialResult {
    int index = 0;
    int64_t s = 0;
    std::vector<int64_t> lambda;
    std::vector<int64_t> lift_degrees;
    bool borel_ok = true;
    bool saturation_ok = true;
    bool profile_ok = true;
    bool degree_ok = true;
    bool eq3_ok = true;
    bool pass = true;
    std::string final_ideal;
};

struct OracleReport {
    uint64_t seed = 0;
    int trials = 0;
    int passed = 0;
    int failed = 0;
    std::vector<TrialResult> failures;
};

OracleReport run_oracle_trials(int trials, uint64_t seed);

}  // namespace p4bound
