#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "hypercl/boundary.hpp"
#include "hypercl/oracles.hpp"

using namespace hypercl;

namespace {

using L = DivisorLabel;

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("enumeration examples") {
  const auto b21 = enumerate_boundary({2, 1, true});
  CHECK(b21 == std::vector<L>{L::eta_irr(), L::delta(1, {})});
  const auto b31 = enumerate_boundary({3, 1, true});
  CHECK(b31 == std::vector<L>{L::eta_irr(), L::delta(1, {}), L::delta(1, {1}), L::eta(1, {})});
  for (int g = 2; g <= 8; ++g) CHECK(enumerate_boundary({g, 0, true}).size() == static_cast<std::size_t>(g));
  const auto b32 = enumerate_boundary({3, 2, true});
  CHECK(b32.size() == 8);
  CHECK(std::count_if(b32.begin(), b32.end(), [](const L& l) { return l.kind == L::Kind::Delta && l.index == 0; }) == 1);
}

TEST_CASE("rank reports") {
  CHECK(rank_report({2, 1, true}).rank_cl == 3);
  CHECK(rank_report({3, 2, true}).rank_cl == 10);
  CHECK(rank_report({3, 1, true}).rank_cl == 5);
  for (int g = 2; g <= 6; ++g)
    for (int n = 1; n <= 6; ++n) {
      const auto r = rank_report({g, n, true});
      CHECK(r.rank_pic_interior == static_cast<std::size_t>(n));
      CHECK(r.rank_cl == r.num_psi + r.num_boundary);
      CHECK(r.labels.size() == r.num_boundary);
      CHECK_FALSE(r.invariant_dimension.has_value());
    }
  const auto checked = rank_report({2, 2, true}, true);
  REQUIRE(checked.invariant_dimension.has_value());
  CHECK(*checked.invariant_dimension == 2);
  CHECK(checked.interior_matches_invariants.value());
}

TEST_CASE("enumeration agrees with the formula and the hand count") {
  for (bool dedup : {true, false})
    for (int g = 2; g <= 6; ++g)
      for (int n = 0; n <= 6; ++n) {
        const BoundaryContext ctx{g, n, dedup};
        const auto labels = enumerate_boundary(ctx);
        CHECK(labels.size() == boundary_count_formula(ctx));
        CHECK(labels.size() == oracle::boundary_count_by_hand(g, n, dedup));
        CHECK(std::is_sorted(labels.begin(), labels.end()));
        CHECK(std::adjacent_find(labels.begin(), labels.end()) == labels.end());
        for (const auto& l : labels) CHECK(canonicalize(l, ctx) == l);
      }
  CHECK(enumerate_boundary({2, 1, false}).size() == 3);
}

TEST_CASE("canonical representatives and validation") {
  const BoundaryContext even{4, 3, true};
  CHECK(canonicalize(L::delta(2, {1, 2}), even) == L::delta(2, {3}));
  CHECK(canonicalize(L::delta(2, {3}), even) == L::delta(2, {3}));
  CHECK(canonicalize(L::delta(1, {1, 2}), even) == L::delta(1, {1, 2}));
  const BoundaryContext odd{5, 2, true};
  CHECK(canonicalize(L::eta(2, {1, 2}), odd) == L::eta(2, {}));
  CHECK(canonicalize(L::eta(1, {1, 2}), odd) == L::eta(1, {1, 2}));
  CHECK(canonicalize(L::delta(2, {1, 2}), {4, 3, false}) == L::delta(2, {1, 2}));
  CHECK_THROWS_AS(canonicalize(L::delta(0, {1}), even), InvalidLabel);
  CHECK_THROWS_AS(canonicalize(L::delta(3, {}), even), InvalidLabel);
  CHECK_THROWS_AS(canonicalize(L::eta(2, {}), even), InvalidLabel);
  CHECK_THROWS_AS(canonicalize(L::delta(1, {4}), even), InvalidLabel);
  CHECK_THROWS_AS(canonicalize(L::psi(0), even), InvalidLabel);
  CHECK_THROWS_AS(canonicalize(L::psi(4), even), InvalidLabel);
  CHECK(subset_less({3}, {1, 2}));
  CHECK(subset_less({1, 2}, {1, 3}));
  CHECK(complement({2}, 3) == MarkSet{1, 3});
}

TEST_CASE("serialization") {
  CHECK(serialize(L::psi(2)) == "psi_2");
  CHECK(serialize(L::eta_irr()) == "eta_irr");
  CHECK(serialize(L::delta(1, {})) == "delta_1_empty");
  CHECK(serialize(L::delta(0, {1, 3})) == "delta_0_1,3");
  CHECK(serialize(L::eta(1, {2})) == "eta_1_2");
  for (int g = 2; g <= 5; ++g)
    for (const auto& l : class_group_generators({g, 3, true})) CHECK(parse_label(serialize(l)) == l);
  for (const char* bad : {"", "psi", "psi_x", "delta_1", "delta_1_3,1", "delta_1_1,1", "eta_irr_1", "zeta_1_2",
                          "delta_-1_empty", "psi_1_2"})
    CHECK_THROWS_AS(parse_label(bad), InvalidLabel);
}

TEST_CASE("pullback identities") {
  const BoundaryContext c31{3, 1, true};
  FormalSum expected{{L::delta(1, {1}), 1}};
  CHECK(pullback_from_ambient(parse_ambient("D_1_1"), c31) == expected);
  CHECK(pullback_from_ambient(parse_ambient("D_irr"), {2, 1, true}) == FormalSum{{L::eta_irr(), 1}});
  CHECK(pullback_from_ambient(parse_ambient("D_irr"), c31) ==
        FormalSum{{L::eta_irr(), 1}, {L::eta(1, {}), 2}});
  // the upper half of the ambient range folds onto complements
  CHECK(pullback_from_ambient(parse_ambient("D_2_empty"), c31) == FormalSum{{L::delta(1, {1}), 1}});
  for (const char* bad : {"D_1", "X_irr", "D_4_empty", "D_0_1", "D_1_2"})
    CHECK_THROWS(pullback_from_ambient(parse_ambient(bad), c31));

  for (int g = 2; g <= 5; ++g)
    for (int n = 1; n <= 3; ++n) {
      const BoundaryContext ctx{g, n, true};
      const auto labels = enumerate_boundary(ctx);
      const std::set<L> known(labels.begin(), labels.end());
      const auto irr = pullback_from_ambient(parse_ambient("D_irr"), ctx);
      std::size_t etas = 0;
      for (const auto& l : labels) etas += l.kind == L::Kind::Eta;
      CHECK(irr.size() == etas + 1);
      for (const auto& [l, c] : irr) {
        CHECK(known.count(l) == 1);
        CHECK(c == (l.kind == L::Kind::EtaIrr ? 1 : 2));
      }
      for (const auto& l : labels) {
        if (l.kind != L::Kind::Delta) continue;
        std::string text = "D_" + std::to_string(l.index) + "_";
        if (l.marks.empty()) text += "empty";
        for (std::size_t k = 0; k < l.marks.size(); ++k) text += (k ? "," : "") + std::to_string(l.marks[k]);
        CHECK(pullback_from_ambient(parse_ambient(text), ctx) == FormalSum{{l, 1}});
      }
    }
}

TEST_CASE("marking permutations") {
  const BoundaryContext ctx{3, 3, true};
  CHECK(permute_markings(L::delta(0, {1, 3}), {2, 1, 3}, ctx) == L::delta(0, {2, 3}));
  CHECK(permute_markings(L::psi(1), {3, 1, 2}, ctx) == L::psi(3));
  CHECK(permute_markings(L::eta_irr(), {3, 1, 2}, ctx) == L::eta_irr());
  std::set<L> orbit;
  for (const auto& p : all_permutations(3)) orbit.insert(permute_markings(L::delta(0, {1, 2}), p, ctx));
  CHECK(orbit.size() == 3);
  CHECK_THROWS(permute_markings(L::psi(1), {1, 1, 2}, ctx));

  for (int g = 2; g <= 5; ++g)
    for (int n = 1; n <= 4; ++n) {
      const BoundaryContext c{g, n, true};
      const auto labels = class_group_generators(c);
      const std::set<L> known(labels.begin(), labels.end());
      for (const auto& p : all_permutations(n)) {
        std::set<L> image;
        for (const auto& l : labels) {
          const L moved = permute_markings(l, p, c);
          CHECK(known.count(moved) == 1);
          image.insert(moved);
        }
        CHECK(image.size() == labels.size());
      }
      std::vector<int> id(static_cast<std::size_t>(n));
      std::iota(id.begin(), id.end(), 1);
      for (const auto& l : labels) CHECK(permute_markings(l, id, c) == l);
    }
}
