#include "p4bound/cli.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"

#include "p4bound/bounds.hpp"
#include "p4bound/certifier.hpp"
#include "p4bound/configs.hpp"
#include "p4bound/gin.hpp"
#include "p4bound/report.hpp"

namespace p4bound {

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<int64_t> parse_lambda_list(const std::string& text) {
    std::vector<int64_t> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw usage_error("malformed lambda list: empty entry");
        size_t used = 0;
        int64_t v = 0;
        try {
            v = std::stoll(cur, &used);
        } catch (const std::exception&) {
            throw usage_error("malformed lambda list: '" + cur + "'");
        }
        if (used != cur.size()) throw usage_error("malformed lambda list: '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    flush();
    return out;
}

std::string feas_str(bool f) { return f ? "yes" : "no"; }

// --- configs ---------------------------------------------------------------

Report cmd_configs(int64_t d, int64_t s) {
    const auto configs = enumerate_configs(d, s);
    const auto caps = lambda_caps(d, s);

    Report rep;
    rep.json = make_envelope("configs", {{"d", d}, {"s", s}});
    auto& result = rep.json["result"];
    result["count"] = configs.size();
    result["lambda0_cap"] = caps.first.str();
    result["lambda1_cap"] = caps.second.str();
    result["configs"] = ojson::array();
    for (const auto& cfg : configs) result["configs"].push_back(cfg.lambda);
    rep.json["notes"].push_back(
        "connected invariants: strictly decreasing positive parts, consecutive gaps in {1,2}, sum d");
    rep.json["notes"].push_back("connectedness caps: lambda0 <= d/s+s-1, lambda1 <= d/s+s-2");

    rep.human = "configurations for d=" + std::to_string(d) + " s=" + std::to_string(s) + ": " +
                std::to_string(configs.size()) + "\n";
    rep.human += "lambda0 cap " + caps.first.str() + ", lambda1 cap " + caps.second.str() + "\n";
    if (!configs.empty()) {
        std::vector<std::vector<std::string>> tab{{"lambda"}};
        for (const auto& cfg : configs) tab.push_back({lambda_to_string(cfg.lambda)});
        rep.human += format_table(tab);
    }

    rep.csv.push_back({"d", "s", "lambda"});
    for (const auto& cfg : configs) {
        rep.csv.push_back({std::to_string(d), std::to_string(s), lambda_to_string(cfg.lambda)});
    }
    return rep;
}

// --- check -----------------------------------------------------------------

void add_check_notes(ojson& json, const ConfigVerdict& v) {
    json["notes"].push_back("Eq(4): feasible iff base - W <= 18, base = d^2-5d-10*genus_sum+12*chi_sum");
    json["notes"].push_back("Eq(3)/Eq(2): genus_sum and chi_sum are the configuration blocks of Eq(4)");
    if (v.budget_from_gamma) {
        json["notes"].push_back(
            "z cap for s=4: z <= floor(gamma_cap) via gamma = G(d,s)-pi [EP]; Eq(8) genus cap shown as z_cap_genus");
    } else {
        json["notes"].push_back(
            "Eq(8) budget with the strict genus floor: z_cap = 1 + genus_sum - pi_floor_strict (K^2 < 6 chi is strict)");
    }
    if (v.boundary_fallback) {
        json["notes"].push_back(
            "case (ii) capacity boundary (odd d): literal formula fill used, column-1 run ends one past floor(d/2)");
    }
    if (v.case_tag == FillMode::case_iii) {
        json["notes"].push_back(
            "case (iii) slot set includes degree r itself; the literal case bound may overcount one slot");
    }
    if (!v.constrained) {
        json["notes"].push_back(
            "d <= " + std::to_string(constrained_above(v.config.s)) +
            ": secant-line constraints not applied (unconstrained column fill)");
    }
    if (v.config.d < 2 * v.config.s * v.config.s) {
        json["notes"].push_back("[EP] gamma cap applied below d = 2s^2");
    }
}

std::string verdict_human(const ConfigVerdict& v) {
    std::string h = verdict_summary_line(v) + "\n\n";
    h += "  d=" + std::to_string(v.config.d) + " s=" + std::to_string(v.config.s) + " lambda=[" +
         lambda_to_string(v.config.lambda) + "] constrained=" + feas_str(v.constrained) + "\n";
    h += "  genus_sum=" + v.genus_sum_v.str() + " chi_sum=" + v.chi_sum_v.str() + " pi_floor=" +
         v.pi_floor_v.str() + " base=" + v.base.str() + "\n";
    h += "  z_cap=" + v.z_cap.str() + " (rule=" + (v.budget_from_gamma ? "gamma" : "genus-strict") +
         ", printed genus cap " + v.z_cap_genus.str() + ")\n";
    auto line = [](const char* name, const VariantOutcome& o, bool with_z) {
        std::string s = std::string("  ") + name + " A=" + o.a.str();
        if (with_z) s += " Z=" + o.z.str();
        s += " W=" + o.w.str() + " margin=" + o.margin.str() + " -> " +
             (o.feasible ? "FEASIBLE" : "INFEASIBLE") + "\n";
        return s;
    };
    h += line("greedy fill:     ", v.greedy, true);
    h += line("case formula:    ", v.case_formula, false);
    h += line("strict budget:   ", v.strict, true);
    if (!v.profile.counts.empty()) {
        h += "  profile:";
        for (const auto& [t, alpha] : v.profile.counts) {
            h += " " + std::to_string(t) + ":" + std::to_string(alpha);
        }
        h += "\n";
    }
    return h;
}

std::vector<std::string> verdict_csv_row(const ConfigVerdict& v) {
    return {std::to_string(v.config.s),
            std::to_string(v.config.d),
            feas_str(v.constrained),
            lambda_to_string(v.config.lambda),
            v.z_cap.str(),
            v.z_cap_genus.str(),
            to_string(v.case_tag),
            v.base.str(),
            v.greedy.a.str(),
            v.greedy.w.str(),
            v.greedy.margin.str(),
            feas_str(v.feasible),
            v.case_formula.a.str(),
            v.case_formula.w.str(),
            v.case_formula.margin.str(),
            feas_str(v.case_formula.feasible)};
}

const std::vector<std::string> kVerdictCsvHeader = {
    "s",      "d",    "constrained", "lambda",   "z_cap",      "z_cap_genus",
    "case",   "base", "A",           "W",        "margin",     "feasible",
    "A_case", "W_case", "margin_case", "feasible_case"};

Report cmd_check(int64_t d, int64_t s, const std::vector<int64_t>& lambda, int* exit_code) {
    Report rep;
    rep.json = make_envelope("check", {{"d", d}, {"s", s}, {"lambda", lambda}});
    const ValidityReport validity = validate_config(lambda, d, s);
    if (!validity.valid) {
        rep.json["result"]["valid"] = false;
        rep.json["result"]["violations"] = validity.violations;
        rep.human = "INVALID configuration\n";
        for (const auto& v : validity.violations) rep.human += "  - " + v + "\n";
        rep.csv.push_back({"valid", "violations"});
        std::string joined;
        for (const auto& v : validity.violations) {
            if (!joined.empty()) joined += "; ";
            joined += v;
        }
        rep.csv.push_back({"no", joined});
        *exit_code = 3;
        return rep;
    }

    const ConfigVerdict verdict = eq4_check(d, s, lambda);
    rep.json["result"]["valid"] = true;
    rep.json["result"]["verdict"] = verdict_to_json(verdict);
    add_check_notes(rep.json, verdict);
    rep.human = verdict_human(verdict);
    rep.csv.push_back(kVerdictCsvHeader);
    rep.csv.push_back(verdict_csv_row(verdict));
    *exit_code = 0;
    return rep;
}

// --- scan ------------------------------------------------------------------

ojson scan_to_json(const ScanReport& scan) {
    ojson obj;
    obj["s"] = scan.s;
    obj["d_max"] = scan.d_max;
    obj["d_min"] = scan.d_min;
    auto opt = [](const std::optional<int64_t>& v) {
        return v ? ojson(*v) : ojson(nullptr);
    };
    obj["max_feasible_d"] = opt(scan.max_feasible_d);
    obj["max_feasible_d_case_formula"] = opt(scan.max_feasible_d_case);
    obj["max_feasible_d_strict"] = opt(scan.max_feasible_d_strict);
    obj["d_scanned_min"] = scan.rows.empty() ? ojson(nullptr) : ojson(scan.rows.back().d);
    obj["constrained_above"] = constrained_above(scan.s);
    obj["rows"] = ojson::array();
    for (const auto& row : scan.rows) {
        ojson r;
        r["d"] = row.d;
        r["constrained"] = row.constrained;
        r["config_count"] = row.verdicts.size();
        r["any_feasible"] = row.any_feasible;
        r["any_feasible_case"] = row.any_feasible_case;
        r["any_feasible_strict"] = row.any_feasible_strict;
        if (row.verdicts.empty()) {
            r["min_margin"] = nullptr;
        } else {
            Int min_margin = row.verdicts.front().margin;
            for (const auto& v : row.verdicts) min_margin = std::min(min_margin, v.margin);
            r["min_margin"] = to_int64(min_margin);
        }
        r["verdicts"] = ojson::array();
        for (const auto& v : row.verdicts) r["verdicts"].push_back(verdict_to_json(v));
        obj["rows"].push_back(std::move(r));
    }
    return obj;
}

void add_scan_notes(ojson& json, const ScanReport& scan) {
    json["notes"].push_back(
        "descending Eq(4) scan; the bound is the first feasible degree from above, lower degrees are not certified infeasible");
    json["notes"].push_back(
        "secant-line constraints (cases i/ii/iii) active for d > " +
        std::to_string(constrained_above(scan.s)) +
        " (plane-curve threshold for this s); lower degrees use the unconstrained column");
    json["notes"].push_back(
        "variants: greedy fill at the verdict budget (primary), literal case-formula weights, and the strict genus budget for every s");
    if (scan.s == 5) {
        json["notes"].push_back(
            "default d_max 73: published pre-bound is 71, exact cubic admits up to 73 (f(73) < 0 < f(74))");
    }
    if (scan.s == 4) {
        json["notes"].push_back(
            "s=4 budget rule: z <= floor(gamma_cap); the tighter strict genus budget is the strict variant");
    }
}

std::string scan_human(const ScanReport& scan) {
    auto opt_str = [](const std::optional<int64_t>& v) {
        return v ? std::to_string(*v) : std::string("none");
    };
    const std::string scanned_min =
        scan.rows.empty() ? std::to_string(scan.d_max) : std::to_string(scan.rows.back().d);
    std::string h = "scan s=" + std::to_string(scan.s) + ": d from " + std::to_string(scan.d_max) +
                    " down to " + scanned_min + " (stops at first feasible; constraints active for d > " +
                    std::to_string(constrained_above(scan.s)) + ", published floor d_min=" +
                    std::to_string(scan.d_min) + ")\n";
    h += "max feasible d: " + opt_str(scan.max_feasible_d) +
         "  (case-formula variant: " + opt_str(scan.max_feasible_d_case) +
         ", strict variant: " + opt_str(scan.max_feasible_d_strict) + ")\n\n";
    std::vector<std::vector<std::string>> tab{
        {"d", "constrained", "configs", "min_margin", "feasible", "case_var", "strict_var"}};
    for (const auto& row : scan.rows) {
        std::string margin = "-";
        if (!row.verdicts.empty()) {
            Int m = row.verdicts.front().margin;
            for (const auto& v : row.verdicts) m = std::min(m, v.margin);
            margin = m.str();
        }
        tab.push_back({std::to_string(row.d), feas_str(row.constrained),
                       std::to_string(row.verdicts.size()), margin, feas_str(row.any_feasible),
                       feas_str(row.any_feasible_case), feas_str(row.any_feasible_strict)});
    }
    h += format_table(tab);
    return h;
}

Report cmd_scan(int64_t s, std::optional<int64_t> dmax, std::optional<int64_t> dmin) {
    const ScanReport scan = scan_degrees(s, dmax, dmin);
    Report rep;
    ojson params{{"s", s}};
    params["d_max"] = scan.d_max;
    params["d_min"] = scan.d_min;
    rep.json = make_envelope("scan", params);
    rep.json["result"] = scan_to_json(scan);
    add_scan_notes(rep.json, scan);
    rep.human = scan_human(scan);
    rep.csv.push_back(kVerdictCsvHeader);
    for (const auto& row : scan.rows) {
        for (const auto& v : row.verdicts) rep.csv.push_back(verdict_csv_row(v));
    }
    return rep;
}

// --- table -----------------------------------------------------------------

Report cmd_table() {
    const TheoremReport theorem = theorem_bound();
    Report rep;
    rep.json = make_envelope("table", ojson::object());
    auto& result = rep.json["result"];
    result["rows"] = ojson::array();
    for (const auto& br : theorem.branches) {
        result["rows"].push_back({{"branch", br.label}, {"bound", br.bound}, {"source", br.source}});
    }
    result["theorem_bound"] = theorem.bound;
    result["scans"] = ojson::array();
    for (const auto& scan : theorem.scans) {
        ojson summary;
        summary["s"] = scan.s;
        summary["d_max"] = scan.d_max;
        summary["d_min"] = scan.d_min;
        summary["max_feasible_d"] = scan.max_feasible_d ? ojson(*scan.max_feasible_d) : ojson(nullptr);
        summary["max_feasible_d_case_formula"] =
            scan.max_feasible_d_case ? ojson(*scan.max_feasible_d_case) : ojson(nullptr);
        summary["max_feasible_d_strict"] =
            scan.max_feasible_d_strict ? ojson(*scan.max_feasible_d_strict) : ojson(nullptr);
        result["scans"].push_back(std::move(summary));
    }
    rep.json["notes"].push_back("per-s maxima of the Eq(4) scans plus the imported s=3 and s>=8 branches");
    rep.json["notes"].push_back("scan variants (case-formula weights, Eq(8) genus budget) listed under result.scans");

    std::vector<std::vector<std::string>> tab{{"branch", "bound", "source"}};
    for (const auto& br : theorem.branches) {
        tab.push_back({br.label, std::to_string(br.bound), br.source});
    }
    rep.human = format_table(tab);
    rep.human += "\ntheorem bound: " + std::to_string(theorem.bound) + "\n";

    rep.csv.push_back({"branch", "bound", "source"});
    for (const auto& br : theorem.branches) {
        rep.csv.push_back({br.label, std::to_string(br.bound), br.source});
    }
    rep.csv.push_back({"theorem", std::to_string(theorem.bound), "max over branches"});
    return rep;
}

// --- eq7 -------------------------------------------------------------------

Report cmd_eq7(int64_t s, std::optional<int64_t> d) {
    Report rep;
    if (d) {
        const auto [value, feasible] = eq7_check(*d, s);
        const Rational residual = value - Rational(kMasterConstant);
        rep.json = make_envelope("eq7", {{"s", s}, {"d", *d}});
        auto& result = rep.json["result"];
        result["value"] = value.str();
        result["threshold"] = kMasterConstant;
        result["feasible"] = feasible;
        result["residual"] = residual.str();
        rep.json["notes"].push_back("Eq(7): aggregate inequality at the closed-form estimates; feasible iff value <= 18");
        rep.human = "eq7 s=" + std::to_string(s) + " d=" + std::to_string(*d) + ": value=" + value.str() +
                    " threshold=18 residual=" + residual.str() + " -> " +
                    (feasible ? "FEASIBLE" : "INFEASIBLE") + "\n";
        rep.csv.push_back({"s", "d", "value", "threshold", "residual", "feasible"});
        rep.csv.push_back({std::to_string(s), std::to_string(*d), value.str(), "18", residual.str(),
                           feas_str(feasible)});
        return rep;
    }

    if (s != 4 && s != 5) {
        throw usage_error("eq7 without --d reports the cubic; only s=4 and s=5 have one");
    }
    const auto coeffs = eq7_cubic_coeffs(s);
    const Eq7MaxReport max = eq7_max_admissible(s);
    rep.json = make_envelope("eq7", {{"s", s}});
    auto& result = rep.json["result"];
    result["cubic"] = ojson::array();
    for (const auto& c : coeffs) result["cubic"].push_back(c.str());
    result["max_admissible_d"] = max.max_admissible_d;
    result["residual_at_max"] = max.residual_at_max.str();
    result["residual_at_next"] = max.residual_at_next.str();
    rep.json["notes"].push_back("Eq(7) residual as a cubic in d, coefficients d^3..1; admissible iff <= 0");
    if (s == 5) {
        rep.json["notes"].push_back(
            "published admissible bound for s=5 is 71; the exact cubic brackets the root at f(73) < 0 < f(74)");
    }
    rep.human = "eq7 cubic for s=" + std::to_string(s) + ": [" + coeffs[0].str() + ", " +
                coeffs[1].str() + ", " + coeffs[2].str() + ", " + coeffs[3].str() + "]\n";
    rep.human += "largest admissible d: " + std::to_string(max.max_admissible_d) + "  (f(" +
                 std::to_string(max.max_admissible_d) + ")=" + max.residual_at_max.str() + ", f(" +
                 std::to_string(max.max_admissible_d + 1) + ")=" + max.residual_at_next.str() + ")\n";
    if (s == 5) rep.human += "note: published bound 71; computed bracket f(73) < 0 < f(74)\n";
    rep.csv.push_back({"s", "c3", "c2", "c1", "c0", "max_admissible_d"});
    rep.csv.push_back({std::to_string(s), coeffs[0].str(), coeffs[1].str(), coeffs[2].str(),
                       coeffs[3].str(), std::to_string(max.max_admissible_d)});
    return rep;
}

// --- gamma -----------------------------------------------------------------

Report cmd_gamma(int64_t s, int64_t d) {
    const Rational cap = gamma_cap(d, s);
    const Rational dd(d);
    const Rational ep = dd * Rational((s - 1) * (s - 1)) / Rational(2 * s);
    const Rational derived = dd * dd / Rational(2 * s) + Rational(s - 4) * dd / Rational(2) -
                             (dd * dd - Rational(5) * dd) / Rational(10);
    Report rep;
    rep.json = make_envelope("gamma", {{"s", s}, {"d", d}});
    auto& result = rep.json["result"];
    result["gamma_cap"] = cap.str();
    result["ep_cap"] = ep.str();
    result["derived_cap"] = derived.str();
    result["active"] = (ep < derived) ? "ep" : "derived";
    if (s >= 4 && s <= 7) result["closed_form"] = gamma_cap_closed_form(d, s).str();
    rep.json["notes"].push_back("gamma = G(d,s) - pi; caps: [EP] d(s-1)^2/(2s) and Eq(8) d^2/(2s)+(s-4)d/2-(d^2-5d)/10");
    if (d < 2 * s * s) rep.json["notes"].push_back("[EP] gamma cap applied below d = 2s^2");
    rep.human = "gamma cap for s=" + std::to_string(s) + " d=" + std::to_string(d) + ": " + cap.str() +
                "\n  ep cap " + ep.str() + ", derived cap " + derived.str() + " (active: " +
                std::string(ep < derived ? "ep" : "derived") + ")\n";
    if (s >= 4 && s <= 7) {
        rep.human += "  closed form: " + gamma_cap_closed_form(d, s).str() + "\n";
    }
    rep.csv.push_back({"s", "d", "gamma_cap", "ep_cap", "derived_cap", "active"});
    rep.csv.push_back({std::to_string(s), std::to_string(d), cap.str(), ep.str(), derived.str(),
                       (ep < derived) ? "ep" : "derived"});
    return rep;
}

// --- lemma6 ----------------------------------------------------------------

Report cmd_lemma6(int64_t s) {
    const auto max_d = lemma6_max_degree(s);
    Report rep;
    rep.json = make_envelope("lemma6", {{"s", s}});
    auto& result = rep.json["result"];
    result["max_degree"] = max_d ? ojson(*max_d) : ojson("unbounded");
    rep.json["notes"].push_back(
        "largest d with G(d,s) >= (d/2-1)(d/2-2)/2: below it a plane curve of degree > d/2 is not excluded");
    rep.human = "lemma6 plane-curve threshold for s=" + std::to_string(s) + ": " +
                (max_d ? std::to_string(*max_d) : std::string("unbounded")) + "\n";
    std::string sub_max;
    if (s == 4) {
        const Lemma6S4Branch br = lemma6_s4_branch();
        ojson sub;
        sub["quadratic"] = ojson::array();
        for (const auto& c : br.quadratic) sub["quadratic"].push_back(c.str());
        sub["quadratic_derived"] = ojson::array();
        for (const auto& c : br.quadratic_derived) sub["quadratic_derived"].push_back(c.str());
        sub["cubic"] = ojson::array();
        for (const auto& c : br.cubic) sub["cubic"].push_back(c.str());
        sub["max_degree"] = br.max_degree;
        result["s4_subbranch"] = std::move(sub);
        rep.json["notes"].push_back(
            "s=4 sub-branch (at most 3d/4 sporadic zeros): literal quadratic cap on A and its cubic; largest admissible d shown");
        rep.json["notes"].push_back(
            "the naive column sum at lambda0 = d/4+3, z = 3d/4 expands to the quadratic_derived coefficients, not the literal ones; the cubic matches the literal quadratic");
        rep.human += "s=4 sub-branch: quadratic [" + br.quadratic[0].str() + ", " + br.quadratic[1].str() +
                     ", " + br.quadratic[2].str() + "], cubic [" + br.cubic[0].str() + ", " +
                     br.cubic[1].str() + ", " + br.cubic[2].str() + ", " + br.cubic[3].str() +
                     "], max degree " + std::to_string(br.max_degree) + "\n";
        rep.human += "  derived column-sum quadratic: [" + br.quadratic_derived[0].str() + ", " +
                     br.quadratic_derived[1].str() + ", " + br.quadratic_derived[2].str() + "]\n";
        sub_max = std::to_string(br.max_degree);
    }
    rep.csv.push_back({"s", "max_degree", "s4_subbranch_max_d"});
    rep.csv.push_back({std::to_string(s), max_d ? std::to_string(*max_d) : std::string("unbounded"),
                       sub_max});
    return rep;
}

// --- ep --------------------------------------------------------------------

Report cmd_ep(int64_t sigma) {
    const int64_t threshold = ep_degree_threshold(sigma);
    Report rep;
    rep.json = make_envelope("ep", {{"sigma", sigma}});
    rep.json["result"]["threshold"] = threshold;
    rep.json["notes"].push_back(
        "Prop(2): degree <= floor(5(sigma+1)(sigma-2)/(sigma-4)) or the surface lies on a degree-sigma hypersurface");
    rep.human = "ep threshold for sigma=" + std::to_string(sigma) + ": " + std::to_string(threshold) + "\n";
    rep.csv.push_back({"sigma", "threshold"});
    rep.csv.push_back({std::to_string(sigma), std::to_string(threshold)});
    return rep;
}

// --- gin -------------------------------------------------------------------

Report cmd_gin_sporadic(const std::string& text) {
    MonomialIdeal ideal;
    try {
        ideal = parse_ideal(text);
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    const SporadicProfile profile = sporadic_zeros(ideal);
    const ProfileStats st = profile_stats(profile);

    Report rep;
    rep.json = make_envelope("gin-sporadic", {{"ideal", text}});
    auto& result = rep.json["result"];
    result["ideal"] = to_string(ideal);
    result["borel"] = true;
    result["profile"] = profile_to_json(profile);
    result["total"] = to_int64(st.z);
    rep.json["notes"].push_back(
        "sporadic zeros: monomials x0^a x1^b x2^c outside the ideal with a higher x2-power in the same column");
    rep.human = "ideal: " + to_string(ideal) + "\n";
    rep.human += "sporadic zeros by degree:";
    if (profile.counts.empty()) {
        rep.human += " none (saturated)";
    } else {
        for (const auto& [t, alpha] : profile.counts) {
            rep.human += " " + std::to_string(t) + ":" + std::to_string(alpha);
        }
    }
    rep.human += "\ntotal: " + st.z.str() + "\n";
    rep.csv.push_back({"degree", "count"});
    for (const auto& [t, alpha] : profile.counts) {
        rep.csv.push_back({std::to_string(t), std::to_string(alpha)});
    }
    return rep;
}

Report cmd_gin_oracle(int trials, uint64_t seed) {
    const OracleReport oracle = run_oracle_trials(trials, seed);
    Report rep;
    rep.json = make_envelope("gin-oracle", {{"trials", trials}, {"seed", seed}});
    auto& result = rep.json["result"];
    result["trials"] = oracle.trials;
    result["passed"] = oracle.passed;
    result["failed"] = oracle.failed;
    result["failures"] = ojson::array();
    for (const auto& f : oracle.failures) {
        result["failures"].push_back({{"index", f.index},
                                      {"s", f.s},
                                      {"lambda", f.lambda},
                                      {"lift_degrees", f.lift_degrees},
                                      {"borel_ok", f.borel_ok},
                                      {"saturation_ok", f.saturation_ok},
                                      {"profile_ok", f.profile_ok},
                                      {"degree_ok", f.degree_ok},
                                      {"eq3_ok", f.eq3_ok},
                                      {"final_ideal", f.final_ideal}});
    }
    rep.json["notes"].push_back(
        "randomized staircase-plus-lifts cross-check of Eq(3): genus identity, lift-degree profile, Borel and saturation preservation, degree read two ways");
    rep.human = "gin oracle: trials=" + std::to_string(oracle.trials) + " seed=" + std::to_string(seed) +
                " passed=" + std::to_string(oracle.passed) + " failed=" + std::to_string(oracle.failed) +
                "\n";
    for (const auto& f : oracle.failures) {
        rep.human += "  FAIL trial " + std::to_string(f.index) + ": " + f.final_ideal + "\n";
    }
    rep.csv.push_back({"trials", "seed", "passed", "failed"});
    rep.csv.push_back({std::to_string(oracle.trials), std::to_string(seed),
                       std::to_string(oracle.passed), std::to_string(oracle.failed)});
    return rep;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic degree-bound certifier for smooth non-general-type surfaces in P^4"};
    app.name("p4bound");
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"human", "json", "csv"}));

    int64_t d = 0, s = 0, sigma = 0;
    int64_t dmax_val = 0, dmin_val = 0;
    std::string lambda_text, ideal_text;
    int trials = 200;
    uint64_t seed = 1;

    auto* table_cmd = app.add_subcommand("table", "final per-s bounds and the overall theorem bound");

    auto* scan_cmd = app.add_subcommand("scan", "descending Eq(4) feasibility scan for one s");
    scan_cmd->add_option("--s", s, "minimal hypersurface degree (4..7)")->required();
    auto* dmax_opt = scan_cmd->add_option("--dmax", dmax_val, "scan start (default per s)");
    auto* dmin_opt = scan_cmd->add_option("--dmin", dmin_val, "constrained-range floor (default 51)");

    auto* configs_cmd = app.add_subcommand("configs", "enumerate connected invariants for (d, s)");
    configs_cmd->add_option("--d", d, "degree")->required();
    configs_cmd->add_option("--s", s, "number of parts")->required();

    auto* check_cmd = app.add_subcommand("check", "Eq(4) verdict for one configuration");
    check_cmd->add_option("--d", d, "degree")->required();
    check_cmd->add_option("--s", s, "number of parts")->required();
    check_cmd->add_option("--lambda", lambda_text, "comma-separated parts")->required();

    auto* eq7_cmd = app.add_subcommand("eq7", "aggregate inequality: cubic (s=4,5) or value at --d");
    eq7_cmd->add_option("--s", s, "minimal hypersurface degree (4..7)")->required();
    auto* eq7_d_opt = eq7_cmd->add_option("--d", d, "evaluate at this degree");

    auto* gamma_cmd = app.add_subcommand("gamma", "genus-defect cap");
    gamma_cmd->add_option("--s", s, "minimal hypersurface degree")->required();
    gamma_cmd->add_option("--d", d, "degree")->required();

    auto* lemma6_cmd = app.add_subcommand("lemma6", "plane-curve degree threshold");
    lemma6_cmd->add_option("--s", s, "minimal hypersurface degree (4..7)")->required();

    auto* ep_cmd = app.add_subcommand("ep", "degree threshold or hypersurface membership");
    ep_cmd->add_option("--sigma", sigma, "hypersurface degree (5..7)")->required();

    auto* gin_cmd = app.add_subcommand("gin", "Borel-fixed monomial ideal oracle");
    gin_cmd->require_subcommand(1);
    auto* gin_sporadic_cmd = gin_cmd->add_subcommand("sporadic", "sporadic zeros of an ideal");
    gin_sporadic_cmd->add_option("--ideal", ideal_text, "comma-separated monomials in x0..x3")->required();
    auto* gin_oracle_cmd = gin_cmd->add_subcommand("oracle", "randomized Eq(3) cross-check");
    gin_oracle_cmd->add_option("--trials", trials, "number of trials");
    gin_oracle_cmd->add_option("--seed", seed, "64-bit seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        Report rep;
        int exit_code = 0;
        if (table_cmd->parsed()) {
            rep = cmd_table();
        } else if (scan_cmd->parsed()) {
            std::optional<int64_t> dmax, dmin;
            if (dmax_opt->count()) dmax = dmax_val;
            if (dmin_opt->count()) dmin = dmin_val;
            rep = cmd_scan(s, dmax, dmin);
        } else if (configs_cmd->parsed()) {
            rep = cmd_configs(d, s);
        } else if (check_cmd->parsed()) {
            rep = cmd_check(d, s, parse_lambda_list(lambda_text), &exit_code);
        } else if (eq7_cmd->parsed()) {
            std::optional<int64_t> dval;
            if (eq7_d_opt->count()) dval = d;
            rep = cmd_eq7(s, dval);
        } else if (gamma_cmd->parsed()) {
            rep = cmd_gamma(s, d);
        } else if (lemma6_cmd->parsed()) {
            rep = cmd_lemma6(s);
        } else if (ep_cmd->parsed()) {
            rep = cmd_ep(sigma);
        } else if (gin_cmd->parsed()) {
            if (gin_sporadic_cmd->parsed()) {
                rep = cmd_gin_sporadic(ideal_text);
            } else {
                rep = cmd_gin_oracle(trials, seed);
            }
        } else {
            err << "usage error: no command\n";
            return 2;
        }
        emit(rep, format, out);
        if (exit_code == 3) err << "rejected: invalid configuration (see report violations)\n";
        return exit_code;
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "rejected: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace p4bound
