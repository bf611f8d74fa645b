#include "p4bound/sporadic.hpp"

#include <algorithm>
#include <cassert>

#include "p4bound/bounds.hpp"

namespace p4bound {

std::string to_string(FillMode m) {
    switch (m) {
        case FillMode::unconstrained: return "unconstrained";
        case FillMode::case_i: return "i";
        case FillMode::case_ii: return "ii";
        case FillMode::case_iii: return "iii";
    }
    return "?";
}

namespace {

void require_case_args(int64_t lambda0, int64_t lambda1, int64_t z) {
    if (lambda1 >= lambda0) throw std::invalid_argument("case bound: requires lambda0 > lambda1");
    if (lambda1 < 1) throw std::invalid_argument("case bound: requires lambda1 >= 1");
    if (z < 0) throw std::invalid_argument("case bound: requires z >= 0");
}

FillMode select_case(int64_t lambda0, int64_t lambda1, int64_t d, int64_t z) {
    // Exact comparison against d/2: lambda0 + z - 1 <= d/2 <=> 2(lambda0+z-1) <= d.
    if (2 * (lambda0 + z - 1) <= d) return FillMode::case_i;
    if (lambda0 + lambda1 + z - 1 <= d) return FillMode::case_ii;
    return FillMode::case_iii;
}

}  // namespace

std::pair<FillMode, Int> case_bound_A(int64_t lambda0, int64_t lambda1, int64_t d, int64_t z) {
    require_case_args(lambda0, lambda1, z);
    if (z == 0) return {FillMode::case_i, Int(0)};
    const FillMode mode = select_case(lambda0, lambda1, d, z);
    const int64_t fd2 = d >= 0 ? d / 2 : (d - 1) / 2;  // floor(d/2)
    switch (mode) {
        case FillMode::case_i:
            return {mode, range_sum(lambda0, lambda0 + z - 1)};
        case FillMode::case_ii:
            return {mode, range_sum(lambda0, fd2) +
                              range_sum(lambda1 + 1, z - fd2 + lambda0 + lambda1 - 1)};
        case FillMode::case_iii: {
            const int64_t r = (lambda0 + lambda1 + z + 1) / 2;  // ceil
            return {mode, range_sum(lambda0, r) + range_sum(lambda1 + 1, r - 1)};
        }
        default: break;
    }
    throw std::logic_error("case_bound_A: unreachable");
}

std::pair<FillMode, Rational> case_bound_A_rational(const Rational& lambda0,
                                                    const Rational& lambda1, const Rational& d,
                                                    const Rational& z) {
    const Rational one(1);
    FillMode mode;
    if (lambda0 + z - one <= d / Rational(2)) {
        mode = FillMode::case_i;
    } else if (lambda0 + lambda1 + z - one <= d) {
        mode = FillMode::case_ii;
    } else {
        mode = FillMode::case_iii;
    }
    switch (mode) {
        case FillMode::case_i:
            return {mode, range_sum_closed(lambda0, lambda0 + z - one)};
        case FillMode::case_ii: {
            const Rational half = d / Rational(2);
            return {mode, range_sum_closed(lambda0, half) +
                              range_sum_closed(lambda1 + one, z - half + lambda0 + lambda1 - one)};
        }
        case FillMode::case_iii: {
            const Rational r = (lambda0 + lambda1 + z) / Rational(2);
            return {mode, range_sum_closed(lambda0, r) + range_sum_closed(lambda1 + one, r - one)};
        }
        default: break;
    }
    throw std::logic_error("case_bound_A_rational: unreachable");
}

SporadicProfile extremal_profile(int64_t lambda0, int64_t lambda1, int64_t d, int64_t z,
                                 bool constrained) {
    require_case_args(lambda0, lambda1, z);
    SporadicProfile profile;
    if (!constrained) {
        profile.mode = FillMode::unconstrained;
        for (int64_t t = lambda0; t < lambda0 + z; ++t) profile.counts[t] += 1;
        return profile;
    }

    profile.mode = z == 0 ? FillMode::case_i : select_case(lambda0, lambda1, d, z);
    if (z == 0) return profile;

    const int64_t fd2 = d / 2;
    // Column slot intervals [lo, hi]; hi < lo means empty.
    int64_t c0_lo = lambda0, c0_hi = 0, c1_lo = lambda1 + 1, c1_hi = 0;
    switch (profile.mode) {
        case FillMode::case_i:
            c0_hi = lambda0 + z - 1;
            c1_hi = c1_lo - 1;
            assert(c0_hi <= fd2);
            break;
        case FillMode::case_ii: {
            c0_hi = fd2;
            const int64_t used0 = std::max<int64_t>(0, c0_hi - c0_lo + 1);
            c1_hi = std::min(lambda1 + (z - used0), fd2);
            break;
        }
        case FillMode::case_iii: {
            const int64_t r = (lambda0 + lambda1 + z + 1) / 2;
            c0_hi = r;
            c1_hi = r - 1;
            break;
        }
        default: break;
    }

    const int64_t n0 = std::max<int64_t>(0, c0_hi - c0_lo + 1);
    const int64_t n1 = std::max<int64_t>(0, c1_hi - c1_lo + 1);
    const int64_t capacity = n0 + n1;
    if (capacity < z) {
        // Cannot happen in case (iii): its r gives capacity z or z+1.
        assert(profile.mode != FillMode::case_iii);
        throw infeasible_placement("extremal_profile: slot capacity " + std::to_string(capacity) +
                                   " below budget " + std::to_string(z));
    }
    assert(capacity <= z + 1);

    for (int64_t t = c0_lo; t <= c0_hi; ++t) profile.counts[t] += 1;
    for (int64_t t = c1_lo; t <= c1_hi; ++t) profile.counts[t] += 1;
    if (capacity == z + 1) {
        // Drop the lowest slot. Column 1 starts no higher than column 0, so
        // the dropped slot is column 1's base (ties keep column 0).
        const int64_t lowest = profile.counts.begin()->first;
        if (--profile.counts[lowest] == 0) profile.counts.erase(lowest);
    }
    return profile;
}

SporadicProfile case_ii_formula_profile(int64_t lambda0, int64_t lambda1, int64_t d, int64_t z) {
    require_case_args(lambda0, lambda1, z);
    SporadicProfile profile;
    profile.mode = FillMode::case_ii;
    if (z == 0) return profile;
    const int64_t fd2 = d / 2;
    const int64_t c0_hi = std::min(fd2, lambda0 + z - 1);
    int64_t used0 = 0;
    for (int64_t t = lambda0; t <= c0_hi; ++t) {
        profile.counts[t] += 1;
        ++used0;
    }
    for (int64_t t = lambda1 + 1; t <= lambda1 + (z - used0); ++t) profile.counts[t] += 1;
    return profile;
}

ProfileStats profile_stats(const SporadicProfile& profile) {
    ProfileStats st{Int(0), Int(0), Int(0)};
    for (const auto& [t, alpha] : profile.counts) {
        st.a += Int(alpha) * t;
        st.z += alpha;
        st.w += Int(alpha) * (12 * t - 22);
    }
    return st;
}

Rational estimate_A_rational(int64_t d, int64_t s) {
    const Rational dd(d);
    const Rational l0 = dd / Rational(s) + Rational(s - 1);
    const Rational l1 = dd / Rational(s) + Rational(s - 2);
    const Rational z = gamma_cap_closed_form(d, s);
    return case_bound_A_rational(l0, l1, dd, z).second;
}

Rational first_estimate_A(int64_t d, int64_t s) {
    if (s != 4 && s != 5) throw std::domain_error("first_estimate_A: s must be 4 or 5");
    return estimate_A_rational(d, s);
}

}  // namespace p4bound
