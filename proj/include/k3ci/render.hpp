#ifndef K3CI_RENDER_HPP
#define K3CI_RENDER_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "k3ci/k3_families.hpp"

namespace k3ci {

enum class OutputFormat { Text, Json, Tex };

OutputFormat parse_format(const std::string& s);

// Structured form of a class: list of {exps, numerator, denominator},
// lexicographic term order.
nlohmann::json chow_class_to_json(const ChowClass& x);

nlohmann::json family_to_json(const FamilySpec& family);
nlohmann::json report_to_json(const VerificationReport& report);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);

std::string report_to_text(const VerificationReport& report);
std::string reports_to_text(const std::vector<VerificationReport>& reports);
std::string reports_to_tex(const std::vector<VerificationReport>& reports);

std::string family_to_text(const FamilySpec& family);

// Canonical byte rendering used everywhere JSON is printed; output is
// deterministic and re-parses to the same bytes.
std::string dump_json(const nlohmann::json& j);

} // namespace k3ci

#endif
