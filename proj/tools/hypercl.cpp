// hypercl: command-line front end.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hypercl/acceptance.hpp"
#include "hypercl/boundary.hpp"
#include "hypercl/certificate.hpp"
#include "hypercl/hyperelliptic.hpp"
#include "hypercl/report.hpp"
#include "hypercl/totaro.hpp"

namespace {

using namespace hypercl;

constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  bool no_dedup = false;
  bool force = false;
  int g = 0;
  int n = -1;
  std::string emit_path;
  std::string check_path;
};

void require_range(const Options& o, int gmax, int nmax, const char* what) {
  if (o.g < 2) throw UsageError("genus must be at least 2");
  if (o.force) return;
  if (o.g > gmax || o.n > nmax)
    throw UsageError(std::string(what) + " range is g <= " + std::to_string(gmax) + ", n <= " +
                     std::to_string(nmax) + " (use --force to override)");
}

Json n_field(const Options& o) { return o.n < 0 ? Json(nullptr) : Json(o.n); }

int emit(const Options& o, const Json& report, int status) {
  if (o.format == "table")
    std::cout << render_table(report);
  else
    std::cout << report.dump(2) << "\n";
  return status;
}

int cmd_rank(const Options& o) {
  require_range(o, 6, 6, "enumeration");
  if (o.n < 1) throw UsageError("rank needs n >= 1");
  const bool check = o.g <= 4 && o.n <= 4;
  const RankReport r = rank_report({o.g, o.n, !o.no_dedup}, check);
  Json result = to_json(r);
  result["rank_cl_by_convention"] = {
      {"symmetric_dedup", o.n + enumerate_boundary({o.g, o.n, true}).size()},
      {"no_symmetric_dedup", o.n + enumerate_boundary({o.g, o.n, false}).size()}};
  const bool ok = !r.interior_matches_invariants || *r.interior_matches_invariants;
  return emit(o, envelope("rank", o.g, n_field(o), result,
                          {"interior-picard-psi-basis", "closure-class-group-basis", "boundary-components"}),
              ok ? 0 : kExitMath);
}

int cmd_boundary(const Options& o) {
  require_range(o, 6, 6, "enumeration");
  if (o.n < 0) throw UsageError("boundary needs n >= 0");
  const BoundaryContext ctx{o.g, o.n, !o.no_dedup};
  const auto labels = enumerate_boundary(ctx);
  Json result;
  result["symmetric_dedup"] = ctx.symmetric_dedup;
  result["count"] = labels.size();
  result["closed_form_count"] = boundary_count_formula(ctx);
  result["count_other_convention"] = enumerate_boundary({o.g, o.n, !ctx.symmetric_dedup}).size();
  Json list = Json::array();
  for (const auto& l : labels) list.push_back(serialize(l));
  result["labels"] = std::move(list);
  const bool ok = labels.size() == boundary_count_formula(ctx);
  return emit(o, envelope("boundary", o.g, n_field(o), result, {"boundary-components"}), ok ? 0 : kExitMath);
}

int cmd_invariants(const Options& o) {
  if (o.n < 0)
    require_range(o, 10, 0, "symplectic");
  else
    require_range(o, 4, 4, "invariant");
  if (o.n == 0) throw UsageError("invariants needs n >= 1 when n is given");
  const auto gens = generators(o.g);
  Json result;
  const auto h1 = fixed_vectors(gens);
  const auto bil = fixed_bilinear(gens);
  result["h1"] = to_json(h1);
  result["h1_tensor_h1"] = to_json(bil);
  bool ok = h1.dimension == 0 && bil.dimension == 1;
  std::vector<std::string> anchors{"h1-no-invariants", "bilinear-invariants"};
  if (o.n >= 1) {
    const auto cn = invariants_h2_cn(o.g, o.n);
    Json j = to_json(cn.report);
    j["spans_points_and_diagonals"] = cn.spans_expected;
    result["h2_power"] = std::move(j);
    const auto cf = invariants_h2_config(o.g, o.n);
    Json k = to_json(cf.report, false);
    k["w_invariants"] = cf.w_invariants;
    k["v_invariants"] = cf.v_invariants;
    k["kernel_d02"] = cf.kernel_d02;
    k["point_classes_form_basis"] = cf.points_form_basis;
    result["h2_config"] = std::move(k);
    ok = ok && cn.spans_expected && cf.report.dimension == static_cast<std::size_t>(o.n) && cf.points_form_basis;
    anchors.push_back("h2-power-invariants");
    anchors.push_back("h2-config-invariants");
  }
  return emit(o, envelope("invariants", o.g, n_field(o), result, anchors), ok ? 0 : kExitMath);
}

int cmd_totaro(const Options& o) {
  require_range(o, 4, 4, "spectral");
  if (o.n < 1) throw UsageError("totaro needs n >= 1");
  Json result;
  Json pages = Json::array(), ranks = Json::array();
  for (int total = 0; total <= 3; ++total)
    for (int q = 0; q <= std::min(total, o.n - 1); ++q) {
      const int p = total - q;
      pages.push_back({{"p", p}, {"q", q}, {"dim_E2", e_dimension(o.g, o.n, p, q)},
                       {"dim_E3", total <= 2 ? Json(e3_dimension(o.g, o.n, p, q)) : Json(nullptr)}});
      if (q >= 1 && total <= 2) ranks.push_back({{"p", p}, {"q", q}, {"rank", rank(d2_matrix(o.g, o.n, p, q))}});
    }
  result["pages"] = std::move(pages);
  result["d2_ranks"] = std::move(ranks);
  result["cohomology_dims"] = config_cohomology_dims(o.g, o.n, 2);
  const auto pieces = degree_two_pieces(o.g, o.n);
  result["degree_two"] = {{"h2_power", pieces.h2_power}, {"image_d01", pieces.image_d01}, {"W", pieces.w},
                          {"V", pieces.v}, {"kernel_d02", pieces.kernel_d02}};
  return emit(o, envelope("totaro", o.g, n_field(o), result, {"totaro-model", "differential-injective"}), 0);
}

int cmd_certify(const Options& o) {
  require_range(o, 6, 6, "enumeration");
  if (o.n < 1) throw UsageError("certify needs n >= 1");
  const auto builtin = builtin_certificate(o.g, o.n);
  if (!o.emit_path.empty()) {
    std::ofstream out(o.emit_path);
    if (!out) throw UsageError("cannot write " + o.emit_path);
    out << serialize_certificate(builtin);
  }
  std::vector<EliminationStep> steps = builtin;
  if (!o.check_path.empty()) {
    std::ifstream in(o.check_path);
    if (!in) throw UsageError("cannot read " + o.check_path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      steps = parse_certificate(buf.str());
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const BoundaryContext ctx{o.g, o.n, true};
  const Verdict v = check_certificate(steps, class_group_generators(ctx));
  Json result = to_json(v);
  result["source"] = o.check_path.empty() ? "builtin" : o.check_path;
  result["steps"] = steps.size();
  result["numeric_rank"] = numeric_rank_sanity(steps);
  return emit(o, envelope("certify", o.g, n_field(o), result, {"test-curve-elimination", "pullback-identities"}),
              v.certified ? 0 : kExitMath);
}

int cmd_selftest(const Options& o) {
  const auto results = run_acceptance(worker_count_from_env());
  Json list = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    list.push_back(to_json(r));
    ok = ok && r.passed;
  }
  Json result{{"passed", ok}, {"criteria", std::move(list)}};
  return emit(o, envelope("selftest", nullptr, nullptr, result, {"acceptance-suite"}), ok ? 0 : kExitMath);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for divisor classes of pointed hyperelliptic moduli"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--no-symmetric-dedup", o.no_dedup, "Keep both labels at symmetric genus splits");
  app.add_flag("--force", o.force, "Allow inputs beyond the default computable ranges");

  auto positional = [&](CLI::App* sub, bool n_required) {
    sub->add_option("g", o.g, "genus")->required();
    auto* n = sub->add_option("n", o.n, "number of markings");
    if (n_required) n->required();
  };
  auto* rank_cmd = app.add_subcommand("rank", "Class group and interior Picard ranks");
  positional(rank_cmd, true);
  auto* boundary_cmd = app.add_subcommand("boundary", "List boundary divisor labels");
  positional(boundary_cmd, true);
  auto* inv_cmd = app.add_subcommand("invariants", "Invariant subspaces under the hyperelliptic generators");
  positional(inv_cmd, false);
  auto* totaro_cmd = app.add_subcommand("totaro", "Configuration space model: pages, ranks, Betti numbers");
  positional(totaro_cmd, true);
  auto* certify_cmd = app.add_subcommand("certify", "Check the linear independence certificate");
  positional(certify_cmd, true);
  certify_cmd->add_option("--emit-certificate", o.emit_path, "Write the builtin certificate to PATH");
  certify_cmd->add_option("--check-certificate", o.check_path, "Check the certificate in PATH instead");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*rank_cmd) return cmd_rank(o);
    if (*boundary_cmd) return cmd_boundary(o);
    if (*inv_cmd) return cmd_invariants(o);
    if (*totaro_cmd) return cmd_totaro(o);
    if (*certify_cmd) return cmd_certify(o);
    if (*selftest_cmd) return cmd_selftest(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitUsage;
}
