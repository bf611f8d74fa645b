#pragma once

// Per-configuration feasibility against the master inequality, aggregate
// degree pre-bounds and their cubics, descending degree scans, and the
// assembled final bound.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p4bound/configs.hpp"
#include "p4bound/rational.hpp"
#include "p4bound/sporadic.hpp"

namespace p4bound {

// The master inequality constant: 18 = 2 * 9 from K^2 <= 9 for non-general-type
// surfaces of degree > 5.
inline constexpr int64_t kMasterConstant = 18;

// Degrees above this threshold carry the secant-line constraints on zero
// placement: the plane-curve exclusion holds above the per-s threshold of
// lemma6_max_degree (42 for s = 6,7; 50 for s = 5), and for s = 4 above the
// stated blanket 50. Other s fall back to the blanket.
int64_t constrained_above(int64_t s);

struct VariantOutcome {
    Int z;        // zero budget of this variant
    Int a;        // weight-maximizing A
    Int w;        // 12A - 22z
    Int margin;   // base - w - 18
    bool feasible = false;
};

struct ConfigVerdict {
    ConnectedInvariants config;
    bool constrained = false;
    FillMode case_tag = FillMode::unconstrained;
    bool boundary_fallback = false;  // literal case-(ii) fill used (odd-d boundary)

    Int genus_sum_v;      // Sg
    Int chi_sum_v;        // lower-bound chi sum
    Int pi_floor_v;       // printed floor (reported)
    Int pi_floor_strict_v;
    Int base;             // d^2 - 5d - 10 Sg + 12 chi_sum

    Int z_cap;        // zero budget of the verdict: floor(gamma_cap) for s=4,
                      // 1 + Sg - pi_floor_strict otherwise
    Int z_cap_genus;  // 1 + Sg - pi_floor (the printed genus cap, reported)
    bool budget_from_gamma = false;  // s = 4 route

    SporadicProfile profile;      // exact greedy fill at z_cap
    VariantOutcome greedy;        // primary: exact fill
    VariantOutcome case_formula;  // literal case-formula A at the same budget
    VariantOutcome strict;        // greedy fill at the strict genus budget, every s

    Int margin;            // = greedy.margin
    bool feasible = false; // = greedy.feasible, forced false on a negative strict budget
};

// Feasibility of one configuration. Validates the sequence (throws
// std::invalid_argument listing the violations on bad input; requires s >= 2).
ConfigVerdict eq4_check(int64_t d, int64_t s, const std::vector<int64_t>& lambda);

// Aggregate inequality at closed-form estimates. Returns (value, value <= 18).
// Requires s in 4..7 and d > (s-1)^2 + 1.
std::pair<Rational, bool> eq7_check(int64_t d, int64_t s);

// Coefficients (d^3, d^2, d, 1) of eq7_check(d, s) - 18 as a polynomial in d;
// s in {4, 5}.
std::array<Rational, 4> eq7_cubic_coeffs(int64_t s);

// Largest d (descending from 100) whose aggregate value is admissible,
// with the residuals bracketing the sign change.
struct Eq7MaxReport {
    int64_t max_admissible_d = 0;
    Rational residual_at_max;   // <= 0
    Rational residual_at_next;  // > 0
};
Eq7MaxReport eq7_max_admissible(int64_t s);

struct DegreeRow {
    int64_t d = 0;
    bool constrained = false;
    std::vector<ConfigVerdict> verdicts;
    bool any_feasible = false;
    bool any_feasible_case = false;
    bool any_feasible_strict = false;
};

struct ScanReport {
    int64_t s = 0;
    int64_t d_max = 0;
    int64_t d_min = 0;  // published floor of the constrained range (report label)
    std::vector<DegreeRow> rows;  // descending d, down to the last variant hit
    std::optional<int64_t> max_feasible_d;         // primary (greedy fill)
    std::optional<int64_t> max_feasible_d_case;    // case-formula weights
    std::optional<int64_t> max_feasible_d_strict;  // strict genus budget, every s
};

int64_t default_scan_dmax(int64_t s);  // 67, 73, 90, 90 for s = 4..7

// Descending scan: every configuration of every degree is checked; the scan
// stops once each tracked variant has produced a feasible degree. Degrees
// below d_min are swept in unconstrained mode for completeness.
ScanReport scan_degrees(int64_t s, std::optional<int64_t> d_max = std::nullopt,
                        std::optional<int64_t> d_min = std::nullopt);

struct TheoremBranch {
    std::string label;
    int64_t bound = 0;
    std::string source;
};

struct TheoremReport {
    int64_t bound = 0;  // max over branches
    std::vector<TheoremBranch> branches;
    std::vector<ScanReport> scans;  // s = 4..7, in order
};

TheoremReport theorem_bound();

}  // namespace p4bound
