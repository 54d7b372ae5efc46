#include "simplexbound/report_json.hpp"

#include "simplexbound/errors.hpp"

namespace simplexbound {

using nlohmann::json;

json rational_json(const Rational& q) {
  return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
  try {
    return make_rational(Integer(j.at("num").get<std::string>(), 10),
                         Integer(j.at("den").get<std::string>(), 10));
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed rational: ") + e.what());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed rational: ") + e.what());
  }
}

json face_json(const FaceDescriptor& face) {
  return json{{"zeroed", face.zeroed},
              {"hyperplane_applied", face.hyperplane_applied},
              {"dimension", face.dimension}};
}

json bound_report_json(const BoundReport& report) {
  json contributions = json::array();
  for (const auto& c : report.contributions) {
    json item{{"face", face_json(c.face)},
              {"kind", c.kind == ContributionKind::Interior ? "interior" : "vertex-constant"},
              {"value", c.value ? rational_json(*c.value) : json(nullptr)}};
    if (c.params) {
      item["face_params"] = json{{"k", c.params->k}, {"d", c.params->d}, {"tau", c.params->tau}};
    }
    if (c.closed_form_interior) item["closed_form_interior"] = rational_json(*c.closed_form_interior);
    contributions.push_back(std::move(item));
  }
  return json{{"global_bound", rational_json(report.global_bound)},
              {"instance",
               {{"k", report.instance.k}, {"d", report.instance.d}, {"tau", report.instance.tau}}},
              {"closed_form_full", rational_json(report.closed_form_full)},
              {"closed_form_simplified", rational_json(report.closed_form_simplified)},
              {"contributions", std::move(contributions)}};
}

json output_record(const std::string& command, json inputs, json results,
                   const std::vector<std::string>& diagnostics) {
  return json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"diagnostics", diagnostics}};
}

}  // namespace simplexbound
