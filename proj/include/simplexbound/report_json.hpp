#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "simplexbound/bounds.hpp"
#include "simplexbound/exact_arith.hpp"

namespace simplexbound {

inline constexpr const char* kSchemaVersion = "1";

/// {"num": "<decimal>", "den": "<decimal>"}; never a floating-point value.
nlohmann::json rational_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json face_json(const FaceDescriptor& face);
nlohmann::json bound_report_json(const BoundReport& report);

nlohmann::json output_record(const std::string& command, nlohmann::json inputs,
                             nlohmann::json results, const std::vector<std::string>& diagnostics);

}  // namespace simplexbound
