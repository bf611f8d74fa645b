#include "p4bound/gin.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <numeric>
#include <random>

#include "p4bound/bounds.hpp"

namespace p4bound {

namespace {

int64_t exponent(const Monomial& m, int var) {
    switch (var) {
        case 0: return m.a;
        case 1: return m.b;
        case 2: return m.c;
        default: return m.e;
    }
}

void set_exponent(Monomial& m, int var, int64_t v) {
    switch (var) {
        case 0: m.a = v; break;
        case 1: m.b = v; break;
        case 2: m.c = v; break;
        default: m.e = v; break;
    }
}

// Canonical generator order: degree, then x0-heavy first, then low x1 power
// first (so a column's x2-generator precedes the pure power above it).
bool canonical_less(const Monomial& x, const Monomial& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    if (x.a != y.a) return x.a > y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.e < y.e;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const auto& g : gens) {
        bool dominated = false;
        for (const auto& kept : minimal) {
            if (kept.divides(g)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.push_back(g);
    }
    return minimal;
}

void require_curve_mode(const MonomialIdeal& ideal, const char* who) {
    if (!ideal.curve_mode()) {
        throw std::invalid_argument(std::string(who) + ": requires x3-free generators (curve mode)");
    }
}

}  // namespace

std::string to_string(const Monomial& m) {
    static const char* names[4] = {"x0", "x1", "x2", "x3"};
    std::string out;
    for (int v = 0; v < 4; ++v) {
        const int64_t exp = exponent(m, v);
        if (exp == 0) continue;
        if (!out.empty()) out += "*";
        out += names[v];
        if (exp > 1) out += "^" + std::to_string(exp);
    }
    return out.empty() ? "1" : out;
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens, int nvars)
    : gens_(minimalize(std::move(gens))), nvars_(nvars) {
    if (nvars_ != 3 && nvars_ != 4) throw std::invalid_argument("MonomialIdeal: nvars must be 3 or 4");
}

bool MonomialIdeal::member(const Monomial& m) const {
    for (const auto& g : gens_) {
        if (g.divides(m)) return true;
    }
    return false;
}

bool MonomialIdeal::curve_mode() const {
    for (const auto& g : gens_) {
        if (g.e != 0) return false;
    }
    return true;
}

int64_t MonomialIdeal::max_degree() const {
    int64_t md = 0;
    for (const auto& g : gens_) md = std::max(md, g.degree());
    return md;
}

MonomialIdeal parse_ideal(const std::string& text) {
    std::string compact;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    }
    std::vector<Monomial> gens;
    size_t pos = 0;
    while (pos <= compact.size()) {
        size_t comma = compact.find(',', pos);
        if (comma == std::string::npos) comma = compact.size();
        const std::string token = compact.substr(pos, comma - pos);
        if (token.empty()) throw std::invalid_argument("parse_ideal: empty monomial");
        Monomial m;
        size_t i = 0;
        bool expect_factor = true;
        while (i < token.size()) {
            if (token[i] == '*') {
                if (expect_factor) throw std::invalid_argument("parse_ideal: misplaced '*'");
                expect_factor = true;
                ++i;
                continue;
            }
            if (token[i] != 'x' || i + 1 >= token.size() || token[i + 1] < '0' || token[i + 1] > '3') {
                throw std::invalid_argument("parse_ideal: unknown variable in '" + token + "'");
            }
            const int var = token[i + 1] - '0';
            i += 2;
            int64_t exp = 1;
            if (i < token.size() && token[i] == '^') {
                ++i;
                size_t start = i;
                if (i < token.size() && (token[i] == '-' || token[i] == '+')) ++i;
                while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
                if (start == i) throw std::invalid_argument("parse_ideal: missing exponent in '" + token + "'");
                exp = std::stoll(token.substr(start, i - start));
                if (exp <= 0) {
                    throw std::invalid_argument("parse_ideal: exponent must be positive in '" + token + "'");
                }
            }
            set_exponent(m, var, exponent(m, var) + exp);
            expect_factor = false;
        }
        if (expect_factor) throw std::invalid_argument("parse_ideal: dangling '*' in '" + token + "'");
        gens.push_back(m);
        pos = comma + 1;
        if (comma == compact.size()) break;
    }
    return MonomialIdeal(std::move(gens), 4);
}

std::string to_string(const MonomialIdeal& ideal) {
    std::string out;
    for (const auto& g : ideal.gens()) {
        if (!out.empty()) out += ", ";
        out += to_string(g);
    }
    return out;
}

bool is_borel_fixed(const MonomialIdeal& ideal) {
    const int top = ideal.nvars() - 1;
    for (const auto& g : ideal.gens()) {
        for (int j = 1; j <= top; ++j) {
            if (exponent(g, j) == 0) continue;
            for (int i = 0; i < j; ++i) {
                Monomial moved = g;
                set_exponent(moved, j, exponent(g, j) - 1);
                set_exponent(moved, i, exponent(g, i) + 1);
                if (!ideal.member(moved)) return false;
            }
        }
    }
    return true;
}

SporadicProfile sporadic_zeros(const MonomialIdeal& ideal) {
    require_curve_mode(ideal, "sporadic_zeros");
    if (!is_borel_fixed(ideal)) {
        throw std::invalid_argument("sporadic_zeros: ideal is not Borel-fixed");
    }
    // Columns with zeros satisfy a <= max(ga+gc), b <= max(gb+gc): Borel moves
    // x2 -> x0/x1 put an x2-free member above every farther column.
    int64_t max_a = 0, max_b = 0;
    for (const auto& g : ideal.gens()) {
        max_a = std::max(max_a, g.a + g.c);
        max_b = std::max(max_b, g.b + g.c);
    }
    SporadicProfile profile;
    profile.mode = FillMode::unconstrained;
    for (int64_t a = 0; a <= max_a; ++a) {
        for (int64_t b = 0; b <= max_b; ++b) {
            // Least c with x0^a x1^b x2^c inside the ideal.
            bool covered = false;
            int64_t cstar = 0;
            for (const auto& g : ideal.gens()) {
                if (g.a <= a && g.b <= b) {
                    cstar = covered ? std::min(cstar, g.c) : g.c;
                    covered = true;
                }
            }
            if (!covered) continue;
            for (int64_t c = 0; c < cstar; ++c) profile.counts[a + b + c] += 1;
        }
    }
    return profile;
}

MonomialIdeal saturate_restrict(const MonomialIdeal& ideal) {
    require_curve_mode(ideal, "saturate_restrict");
    std::vector<Monomial> stripped;
    stripped.reserve(ideal.gens().size());
    for (const auto& g : ideal.gens()) stripped.push_back({g.a, g.b, 0, 0});
    return MonomialIdeal(std::move(stripped), 3);
}

StaircaseInvariants connected_invariants_of(const MonomialIdeal& ideal) {
    for (const auto& g : ideal.gens()) {
        if (g.c != 0 || g.e != 0) {
            throw std::invalid_argument("connected_invariants_of: not a point staircase (x2/x3 present)");
        }
    }
    int64_t s = -1;
    std::map<int64_t, int64_t> by_x0;  // x0 exponent -> x1 exponent
    for (const auto& g : ideal.gens()) {
        if (g.b == 0) {
            if (s >= 0) throw std::invalid_argument("connected_invariants_of: two pure x0 powers");
            s = g.a;
        } else {
            if (by_x0.count(g.a)) {
                throw std::invalid_argument("connected_invariants_of: duplicate column");
            }
            by_x0[g.a] = g.b;
        }
    }
    if (s < 1) throw std::invalid_argument("connected_invariants_of: missing pure x0 power");
    if (static_cast<int64_t>(by_x0.size()) != s || by_x0.count(0) == 0) {
        throw std::invalid_argument("connected_invariants_of: no pure x1-power staircase of length s");
    }
    StaircaseInvariants inv;
    inv.s = s;
    for (int64_t i = 0; i < s; ++i) {
        auto it = by_x0.find(i);
        if (it == by_x0.end()) {
            throw std::invalid_argument("connected_invariants_of: missing column x0^" + std::to_string(i));
        }
        inv.lambda.push_back(it->second);
    }
    for (int64_t i = 0; i + 1 < s; ++i) {
        if (inv.lambda[i] <= inv.lambda[i + 1]) {
            throw std::invalid_argument("connected_invariants_of: exponents not strictly decreasing");
        }
    }
    if (inv.lambda.back() < 1) throw std::invalid_argument("connected_invariants_of: non-positive exponent");
    inv.d = std::accumulate(inv.lambda.begin(), inv.lambda.end(), int64_t{0});
    return inv;
}

std::pair<int64_t, int64_t> hilbert_genus(const MonomialIdeal& ideal) {
    require_curve_mode(ideal, "hilbert_genus");
    if (ideal.nvars() != 4) throw std::invalid_argument("hilbert_genus: requires the 4-variable ring");
    if (ideal.gens().empty()) throw not_curve_like("hilbert_genus: zero ideal");

    const int64_t cutoff = ideal.max_degree() + 4;
    const size_t n = static_cast<size_t>(cutoff) + 1;

    // Membership of the x3-free prefix (a, b, c); the x3 exponent never
    // affects divisibility since every generator is x3-free.
    std::vector<char> member(n * n * n, 0);
    auto at = [n](size_t a, size_t b, size_t c) { return (a * n + b) * n + c; };
    for (const auto& g : ideal.gens()) {
        if (g.a <= cutoff && g.b <= cutoff && g.c <= cutoff) {
            member[at(static_cast<size_t>(g.a), static_cast<size_t>(g.b),
                      static_cast<size_t>(g.c))] = 1;
        }
    }
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
            for (size_t c = 0; c < n; ++c) {
                if (member[at(a, b, c)]) continue;
                member[at(a, b, c)] = (a > 0 && member[at(a - 1, b, c)]) ||
                                      (b > 0 && member[at(a, b - 1, c)]) ||
                                      (c > 0 && member[at(a, b, c - 1)]);
            }
        }
    }
    // outside[t] = monomials of degree t in x0..x2 outside the ideal; each
    // contributes one quotient monomial per degree >= t via the x3 power.
    std::vector<int64_t> outside(n, 0);
    for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; a + b < n; ++b) {
            for (size_t c = 0; a + b + c < n; ++c) {
                if (!member[at(a, b, c)]) outside[a + b + c] += 1;
            }
        }
    }
    std::vector<int64_t> hilbert(n, 0);
    int64_t acc = 0;
    for (size_t t = 0; t < n; ++t) {
        acc += outside[t];
        hilbert[t] = acc;
    }

    // The first difference is d + alpha_t (curve degree plus the sporadic
    // zeros in degree t), so it can plateau inside the sporadic range before
    // settling at d. Stabilization means: constant from some point through
    // the cutoff, over at least three consecutive values.
    std::vector<int64_t> diff(n, 0);
    for (size_t t = 1; t < n; ++t) diff[t] = hilbert[t] - hilbert[t - 1];
    size_t stable_from = n - 1;
    while (stable_from > 1 && diff[stable_from - 1] == diff[n - 1]) --stable_from;
    if (n - stable_from >= 3) {
        const size_t t = stable_from + 2;  // third of the equal consecutive differences
        const int64_t d = diff[n - 1];
        const int64_t pi = d * static_cast<int64_t>(t) + 1 - hilbert[t];
        return {d, pi};
    }
    throw not_curve_like("hilbert_genus: first differences do not stabilize below the cutoff");
}

MonomialIdeal lift(const MonomialIdeal& ideal, const Monomial& m) {
    require_curve_mode(ideal, "lift");
    const auto& gens = ideal.gens();
    if (std::find(gens.begin(), gens.end(), m) == gens.end()) {
        throw std::invalid_argument("lift: " + to_string(m) + " is not a minimal generator");
    }
    std::vector<Monomial> next;
    next.reserve(gens.size() + 2);
    for (const auto& g : gens) {
        if (!(g == m)) next.push_back(g);
    }
    next.push_back({m.a, m.b, m.c + 1, 0});
    if (m.c == 0) {
        // Keep the Borel moves of m*x2 inside the ideal.
        next.push_back({m.a + 1, m.b, 0, 0});
        next.push_back({m.a, m.b + 1, 0, 0});
    }
    return MonomialIdeal(std::move(next), ideal.nvars());
}

bool eq3_crosscheck(const MonomialIdeal& ideal) {
    const auto [d, pi] = hilbert_genus(ideal);
    (void)d;
    const StaircaseInvariants inv = connected_invariants_of(saturate_restrict(ideal));
    const ProfileStats st = profile_stats(sporadic_zeros(ideal));
    return Int(pi) == Int(1) + genus_sum(inv.lambda) - st.z;
}

MonomialIdeal staircase_ideal(const std::vector<int64_t>& lambda) {
    if (lambda.empty()) throw std::invalid_argument("staircase_ideal: empty sequence");
    for (size_t i = 0; i + 1 < lambda.size(); ++i) {
        if (lambda[i] <= lambda[i + 1]) {
            throw std::invalid_argument("staircase_ideal: sequence must be strictly decreasing");
        }
    }
    if (lambda.back() < 1) throw std::invalid_argument("staircase_ideal: parts must be >= 1");
    const int64_t s = static_cast<int64_t>(lambda.size());
    std::vector<Monomial> gens;
    gens.push_back({s, 0, 0, 0});
    for (int64_t i = 0; i < s; ++i) gens.push_back({i, lambda[static_cast<size_t>(i)], 0, 0});
    return MonomialIdeal(std::move(gens), 4);
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Engine output used directly; std::uniform_int_distribution is not
// reproducible across standard libraries.
int64_t rand_below(std::mt19937_64& eng, int64_t n) { return static_cast<int64_t>(eng() % n); }

}  // namespace

OracleReport run_oracle_trials(int trials, uint64_t seed) {
    OracleReport report;
    report.seed = seed;
    report.trials = trials;
    for (int trial = 0; trial < trials; ++trial) {
        std::mt19937_64 eng(splitmix64(seed) + static_cast<uint64_t>(trial));
        TrialResult res;
        res.index = trial;
        res.s = 1 + rand_below(eng, 4);

        std::vector<int64_t> values;
        while (static_cast<int64_t>(values.size()) < res.s) {
            const int64_t v = 1 + rand_below(eng, 12);
            if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
        }
        std::sort(values.rbegin(), values.rend());
        res.lambda = values;

        MonomialIdeal ideal = staircase_ideal(res.lambda);
        const MonomialIdeal saturation = saturate_restrict(ideal);
        const int lifts = static_cast<int>(rand_below(eng, 11));
        for (int k = 0; k < lifts; ++k) {
            // A lift keeps the ideal Borel-fixed unless another generator's
            // Borel move lands exactly on the lifted one (gap-1 staircase
            // neighbours). Start at a random generator and take the first
            // admissible target.
            const auto gens = ideal.gens();
            const size_t start = static_cast<size_t>(rand_below(eng, static_cast<int64_t>(gens.size())));
            bool lifted = false;
            for (size_t off = 0; off < gens.size() && !lifted; ++off) {
                const Monomial target = gens[(start + off) % gens.size()];
                MonomialIdeal candidate = lift(ideal, target);
                if (!is_borel_fixed(candidate)) continue;
                res.lift_degrees.push_back(target.degree());
                ideal = std::move(candidate);
                lifted = true;
            }
            if (!lifted) break;  // no admissible target left (cannot happen in practice)
            res.borel_ok &= is_borel_fixed(ideal);
            res.saturation_ok &= (saturate_restrict(ideal) == saturation);
        }
        res.final_ideal = to_string(ideal);

        std::map<int64_t, int64_t> expected;
        for (int64_t t : res.lift_degrees) expected[t] += 1;
        res.profile_ok = (sporadic_zeros(ideal).counts == expected);

        try {
            const auto [deg, pi] = hilbert_genus(ideal);
            (void)pi;
            const int64_t lambda_sum = std::accumulate(res.lambda.begin(), res.lambda.end(), int64_t{0});
            res.degree_ok = (deg == lambda_sum);
            res.eq3_ok = eq3_crosscheck(ideal);
        } catch (const std::exception&) {
            res.degree_ok = false;
            res.eq3_ok = false;
        }

        res.pass = res.borel_ok && res.saturation_ok && res.profile_ok && res.degree_ok && res.eq3_ok;
        if (res.pass) {
            ++report.passed;
        } else {
            ++report.failed;
            report.failures.push_back(std::move(res));
        }
    }
    return report;
}

}  // namespace p4bound
