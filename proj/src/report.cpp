#include "p4bound/report.hpp"

#include <algorithm>

namespace p4bound {

ojson make_envelope(const std::string& command, ojson parameters) {
    ojson env;
    env["schema_version"] = kSchemaVersion;
    env["command"] = command;
    env["parameters"] = std::move(parameters);
    env["result"] = ojson::object();
    env["notes"] = ojson::array();
    return env;
}

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return "";
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    auto emit_row = [&](const std::vector<std::string>& row) {
        std::string line;
        for (size_t i = 0; i < row.size(); ++i) {
            line += row[i];
            if (i + 1 < row.size()) line += std::string(widths[i] - row[i].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    };
    emit_row(rows[0]);
    std::vector<std::string> dashes;
    for (size_t i = 0; i < rows[0].size(); ++i) dashes.push_back(std::string(widths[i], '-'));
    emit_row(dashes);
    for (size_t r = 1; r < rows.size(); ++r) emit_row(rows[r]);
    return out;
}

namespace {

std::string csv_cell(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char ch : value) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string csv_render(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            out += csv_cell(row[i]);
            if (i + 1 < row.size()) out += ",";
        }
        out += "\n";
    }
    return out;
}

ojson profile_to_json(const SporadicProfile& profile) {
    ojson obj = ojson::object();
    for (const auto& [t, alpha] : profile.counts) obj[std::to_string(t)] = alpha;
    return obj;
}

namespace {

ojson outcome_to_json(const VariantOutcome& o, bool with_z) {
    ojson obj;
    if (with_z) obj["z"] = to_int64(o.z);
    obj["A"] = to_int64(o.a);
    obj["W"] = to_int64(o.w);
    obj["margin"] = to_int64(o.margin);
    obj["feasible"] = o.feasible;
    return obj;
}

}  // namespace

ojson verdict_to_json(const ConfigVerdict& v) {
    ojson obj;
    obj["d"] = v.config.d;
    obj["s"] = v.config.s;
    obj["lambda"] = v.config.lambda;
    obj["constrained"] = v.constrained;
    obj["case"] = to_string(v.case_tag);
    obj["z_cap"] = to_int64(v.z_cap);
    obj["z_cap_rule"] = v.budget_from_gamma ? "gamma" : "genus-strict";
    obj["z_cap_genus"] = to_int64(v.z_cap_genus);
    obj["genus_sum"] = to_int64(v.genus_sum_v);
    obj["chi_sum"] = to_int64(v.chi_sum_v);
    obj["pi_floor"] = to_int64(v.pi_floor_v);
    obj["pi_floor_strict"] = to_int64(v.pi_floor_strict_v);
    obj["boundary_fallback"] = v.boundary_fallback;
    obj["base"] = to_int64(v.base);
    obj["margin"] = to_int64(v.margin);
    obj["feasible"] = v.feasible;
    obj["greedy"] = outcome_to_json(v.greedy, true);
    obj["greedy"]["Z"] = to_int64(v.greedy.z);
    obj["case_formula"] = outcome_to_json(v.case_formula, false);
    obj["strict_variant"] = outcome_to_json(v.strict, true);
    obj["profile"] = profile_to_json(v.profile);
    return obj;
}

std::string verdict_summary_line(const ConfigVerdict& v) {
    return std::string(v.feasible ? "FEASIBLE" : "INFEASIBLE") +
           " margin=" + v.margin.str() + " z=" + v.z_cap.str() + " case=" + to_string(v.case_tag);
}

std::string lambda_to_string(const std::vector<int64_t>& lambda) {
    std::string out;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(lambda[i]);
    }
    return out;
}

void emit(const Report& report, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << report.json.dump(2) << "\n";
    } else if (format == "csv") {
        out << csv_render(report.csv);
    } else {
        out << report.human;
    }
}

}  // namespace p4bound
