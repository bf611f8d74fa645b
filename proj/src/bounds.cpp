#include "p4bound/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace p4bound {

Int genus_sum(const std::vector<int64_t>& lambda) {
    Int total = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
        const Int li(lambda[i]);
        total += li * (li - 1) / 2 + (Int(i) - 1) * li;
    }
    return total;
}

Rational gp_bound(int64_t d, int64_t s) {
    if (s < 1) throw std::domain_error("gp_bound: s must be >= 1");
    const Rational dd(d);
    return dd * dd / Rational(2 * s) + Rational(s - 4) * dd / Rational(2) + Rational(1);
}

Int chi_sum(const std::vector<int64_t>& lambda) {
    Rational total(0);
    for (size_t t = 0; t < lambda.size(); ++t) {
        const Rational arg(lambda[t] + static_cast<int64_t>(t) - 1);
        total += binom_general(arg, 3) - binom_general(Rational(static_cast<int64_t>(t) - 1), 3);
    }
    if (!total.is_integer()) throw std::logic_error("chi_sum: non-integral total");
    return total.num();
}

Rational chi_closed_form(int64_t d, int64_t s) {
    if (s < 2) throw std::domain_error("chi_closed_form: s must be >= 2");
    const Rational arg = Rational(Int(d), Int(s)) + Rational(Int(s - 3), Int(2));
    return Rational(s) * binom_general(arg, 3) + Rational(1) - binom_general(Rational(s - 1), 4);
}

Rational gamma_cap(int64_t d, int64_t s) {
    if (s < 1 || d < 1) throw std::domain_error("gamma_cap: requires s >= 1 and d >= 1");
    const Rational dd(d);
    const Rational ep = dd * Rational((s - 1) * (s - 1)) / Rational(2 * s);
    const Rational derived = dd * dd / Rational(2 * s) + Rational(s - 4) * dd / Rational(2) -
                             (dd * dd - Rational(5) * dd) / Rational(10);
    return ep < derived ? ep : derived;
}

Rational gamma_cap_closed_form(int64_t d, int64_t s) {
    const Rational dd(d);
    switch (s) {
        case 4: return Rational(9) * dd / Rational(8);
        case 5: return dd;
        case 6: return dd * (Rational(90) - dd) / Rational(60);
        case 7: return dd * (Rational(70) - dd) / Rational(35);
        default: throw std::domain_error("gamma_cap_closed_form: s must be in 4..7");
    }
}

namespace {

Int pi_floor_impl(int64_t d, int64_t s, int64_t dp_constant) {
    if (d < 1) throw std::domain_error("pi_floor: d must be >= 1");
    const Rational dd(d);
    const Rational dp = (dd * dd - Rational(5) * dd + Rational(dp_constant)) / Rational(10);
    const Rational from_gamma = gp_bound(d, s) - gamma_cap(d, s);
    const Rational m = dp < from_gamma ? from_gamma : dp;
    return m.ceil();
}

}  // namespace

Int pi_floor(int64_t d, int64_t s) { return pi_floor_impl(d, s, 10); }

Int pi_floor_strict(int64_t d, int64_t s) { return pi_floor_impl(d, s, 12); }

Int sporadic_cap(const std::vector<int64_t>& lambda) {
    const int64_t s = static_cast<int64_t>(lambda.size());
    const int64_t d = std::accumulate(lambda.begin(), lambda.end(), int64_t{0});
    return Int(1) + genus_sum(lambda) - pi_floor(d, s);
}

Rational double_point_k2(int64_t d, int64_t pi, int64_t chi) {
    const Rational dd(d);
    return Rational(6 * chi) + (dd * dd - Rational(5) * dd - Rational(10) * Rational(pi - 1)) / Rational(2);
}

Rational double_point_residual(int64_t d, int64_t pi, int64_t chi, const Rational& k2) {
    const Rational dd(d);
    return dd * dd - Rational(5) * dd - Rational(10) * Rational(pi - 1) +
           Rational(2) * (Rational(6 * chi) - k2);
}

int64_t ep_degree_threshold(int64_t sigma) {
    if (sigma == 4) throw std::domain_error("ep_degree_threshold: sigma = 4 divides by zero");
    if (sigma < 5 || sigma > 7) throw std::domain_error("ep_degree_threshold: sigma must be in {5,6,7}");
    const Rational v = Rational(5 * (sigma + 1) * (sigma - 2)) / Rational(sigma - 4);
    return to_int64(v.floor());
}

namespace {

// G(d,s) >= (d/2-1)(d/2-2)/2, the condition under which a plane curve of
// degree > d/2 is not yet excluded.
bool plane_curve_possible(int64_t d, int64_t s) {
    const Rational half = Rational(Int(d), Int(2));
    const Rational rhs = (half - Rational(1)) * (half - Rational(2)) / Rational(2);
    return gp_bound(d, s) >= rhs;
}

}  // namespace

std::optional<int64_t> lemma6_max_degree(int64_t s) {
    if (s < 4 || s > 7) throw std::domain_error("lemma6_max_degree: s must be in 4..7");
    constexpr int64_t kScanTop = 200;
    if (plane_curve_possible(kScanTop, s)) return std::nullopt;  // holds for all d only when s = 4
    for (int64_t d = kScanTop; d >= 1; --d) {
        if (plane_curve_possible(d, s)) return d;
    }
    return 0;
}

Rational aggregate_residual(const Rational& d, int64_t s, const Rational& a_est,
                            const Rational& z_est) {
    const Rational genus_part = d * d / Rational(2 * s) + Rational(s - 4) * d / Rational(2);
    const Rational chi_part =
        Rational(s) * binom_general(d / Rational(s) + Rational(Int(s - 3), Int(2)), 3);
    return d * d - Rational(5) * d - Rational(10) * genus_part + Rational(12) * chi_part +
           Rational(12) * (Rational(1) - binom_general(Rational(s - 1), 4)) -
           (Rational(12) * a_est - Rational(22) * z_est) - Rational(18);
}

Lemma6S4Branch lemma6_s4_branch() {
    Lemma6S4Branch br;
    br.quadratic = {Rational(Int(5), Int(32)), Rational(Int(13), Int(8)), Rational(-3)};
    br.quadratic_derived = {Rational(Int(15), Int(32)), Rational(Int(15), Int(8)), Rational(0)};

    auto quad_at = [&br](const Rational& d) {
        return br.quadratic[0] * d * d + br.quadratic[1] * d + br.quadratic[2];
    };
    auto residual_at = [&](const Rational& d) {
        return aggregate_residual(d, 4, quad_at(d), Rational(3) * d / Rational(4));
    };

    // The residual is a cubic in d; four nodes pin it exactly.
    std::vector<std::pair<Rational, Rational>> pts;
    for (int64_t d : {40, 52, 64, 76}) pts.emplace_back(Rational(d), residual_at(Rational(d)));
    const auto coeffs = fit_polynomial(pts);  // ascending
    br.cubic = {coeffs[3], coeffs[2], coeffs[1], coeffs[0]};

    for (int64_t d = 200; d >= 1; --d) {
        if (residual_at(Rational(d)) <= Rational(0)) {
            br.max_degree = d;
            break;
        }
    }
    return br;
}

}  // namespace p4bound
