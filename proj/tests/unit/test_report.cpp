#include <doctest.h>

#include "hypercl/report.hpp"

using namespace hypercl;

TEST_CASE("rational values") {
  CHECK(to_json(Rat(3)) == Json(3));
  CHECK(to_json(make_rat(-1, 2)) == Json("-1/2"));
}

TEST_CASE("envelope layout") {
  const Json e = envelope("rank", 2, nullptr, Json::object({{"x", 1}}), {"a", "b"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : e.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"command", "g", "n", "result", "anchors"});
  CHECK(e["n"].is_null());
  CHECK(e["anchors"].size() == 2);
}

TEST_CASE("rank report fields") {
  const Json j = to_json(rank_report({2, 1, true}));
  CHECK(j["rank_cl"] == 3);
  CHECK(j["rank_pic_interior"] == 1);
  CHECK(j["num_psi"] == 1);
  CHECK(j["num_boundary"] == 2);
  CHECK(j["generators"] == Json::array({"psi_1", "eta_irr", "delta_1_empty"}));
}

TEST_CASE("invariant report fields") {
  InvariantReport r{"H^1(C)", 1, {{Rat(1), make_rat(1, 3)}}};
  const Json with = to_json(r);
  CHECK(with["dimension"] == 1);
  CHECK(with["basis"][0][1] == "1/3");
  CHECK_FALSE(to_json(r, false).contains("basis"));
}

TEST_CASE("verdict fields") {
  const Verdict v = check_certificate(builtin_certificate(2, 1), class_group_generators({2, 1, true}));
  const Json j = to_json(v);
  CHECK(j["verdict"] == "CERTIFIED");
}

TEST_CASE("table rendering") {
  const Json e = envelope("rank", 2, 1, Json::object({{"rank_cl", 3}, {"labels", Json::array({"psi_1"})}}), {"x"});
  const std::string t = render_table(e);
  CHECK(t.find("result.rank_cl") != std::string::npos);
  CHECK(t.find("3") != std::string::npos);
  CHECK(t.find("psi_1") != std::string::npos);
}
