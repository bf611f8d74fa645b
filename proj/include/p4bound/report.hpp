#pragma once

// Report plumbing shared by the CLI commands: a machine payload (ordered
// JSON, rationals as exact "p/q" strings), an aligned human rendering, and a
// flat CSV view. Identical inputs produce byte-identical output in every
// format; nothing is shown in one format that is missing from the JSON.

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "p4bound/certifier.hpp"
#include "p4bound/rational.hpp"
#include "p4bound/sporadic.hpp"

namespace p4bound {

using ojson = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

struct Report {
    ojson json;
    std::string human;
    std::vector<std::vector<std::string>> csv;  // header row + data rows
};

ojson make_envelope(const std::string& command, ojson parameters);

// Aligned two-space-separated columns, header underlined with dashes.
std::string format_table(const std::vector<std::vector<std::string>>& rows);

std::string csv_render(const std::vector<std::vector<std::string>>& rows);

ojson profile_to_json(const SporadicProfile& profile);
ojson verdict_to_json(const ConfigVerdict& v);

// "FEASIBLE margin=-3138 z=20 case=unconstrained" etc.
std::string verdict_summary_line(const ConfigVerdict& v);

std::string lambda_to_string(const std::vector<int64_t>& lambda);  // "18 16 14 12 11"

void emit(const Report& report, const std::string& format, std::ostream& out);

}  // namespace p4bound
