#include "hypercl/report.hpp"

#include <sstream>

namespace hypercl {

Json to_json(const Rat& x) {
  if (x.get_den() == 1 && x.get_num().fits_slong_p()) return x.get_num().get_si();
  return x.get_str();
}

Json to_json(const InvariantReport& r, bool with_basis) {
  Json j;
  j["space"] = r.space_label;
  j["dimension"] = r.dimension;
  if (with_basis) {
    Json basis = Json::array();
    for (const auto& v : r.basis) {
      Json row = Json::array();
      for (const auto& x : v) row.push_back(to_json(x));
      basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
  }
  return j;
}

Json to_json(const RankReport& r) {
  Json j;
  j["rank_cl"] = r.rank_cl;
  j["rank_pic_interior"] = r.rank_pic_interior;
  j["num_psi"] = r.num_psi;
  j["num_boundary"] = r.num_boundary;
  j["symmetric_dedup"] = r.symmetric_dedup;
  Json labels = Json::array();
  for (const auto& l : psi_labels(r.n)) labels.push_back(serialize(l));
  for (const auto& l : r.labels) labels.push_back(serialize(l));
  j["generators"] = std::move(labels);
  if (r.invariant_dimension) j["invariant_dimension"] = *r.invariant_dimension;
  if (r.interior_matches_invariants) j["interior_matches_invariants"] = *r.interior_matches_invariants;
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["verdict"] = v.certified ? "CERTIFIED" : "FAILED";
  if (v.failed_step) j["failed_step"] = *v.failed_step + 1;
  if (v.reason) j["reason"] = to_string(*v.reason);
  if (!v.detail.empty()) j["detail"] = v.detail;
  j["eliminated"] = v.eliminated_by.size();
  j["log"] = v.log;
  return j;
}

Json to_json(const CriterionResult& r) {
  Json j;
  j["id"] = r.id;
  j["name"] = r.name;
  j["passed"] = r.passed;
  j["detail"] = r.detail;
  j["budget_seconds"] = r.budget_seconds;
  return j;
}

Json envelope(const std::string& command, Json g, Json n, Json result, std::vector<std::string> anchors) {
  Json j;
  j["command"] = command;
  j["g"] = std::move(g);
  j["n"] = std::move(n);
  j["result"] = std::move(result);
  j["anchors"] = std::move(anchors);
  return j;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else if (j.is_array()) {
    os << path << "\n";
    for (const auto& v : j) os << "    " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  } else {
    os << path << "  " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_table(const Json& report) {
  std::ostringstream os;
  flatten(report, "", os);
  return os.str();
}

}  // namespace hypercl
