#pragma once

// JSON and table rendering of computation results for the command line.

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "hypercl/acceptance.hpp"
#include "hypercl/boundary.hpp"
#include "hypercl/certificate.hpp"
#include "hypercl/hyperelliptic.hpp"

namespace hypercl {

using Json = nlohmann::ordered_json;

Json to_json(const Rat& x);
Json to_json(const InvariantReport& r, bool with_basis = true);
Json to_json(const RankReport& r);
Json to_json(const Verdict& v);
Json to_json(const CriterionResult& r);

/// {command, g, n, result, anchors}; n may be null.
Json envelope(const std::string& command, Json g, Json n, Json result, std::vector<std::string> anchors);

/// Flattened "path  value" lines, one per scalar leaf.
std::string render_table(const Json& report);

}  // namespace hypercl
