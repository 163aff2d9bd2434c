#include <doctest.h>

#include "hypercl/hyperelliptic.hpp"
#include "hypercl/surface_ring.hpp"
#include "hypercl/totaro.hpp"

using namespace hypercl;

namespace {

bool fixes(const RatMatrix& m, const RatVector& v) { return m.apply(v) == v; }

RatMatrix row_space(const std::vector<RatVector>& rows, std::size_t cols) {
  return RatMatrix::from_rows(cols, rows);
}

}  // namespace

TEST_CASE("generator matrices") {
  CHECK_THROWS(generators(1));
  const auto z = generators(2);
  REQUIRE(z.size() == 5);
  CHECK(z[1] == SpMatrix(2, {1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
  CHECK(z[4] == SpMatrix(2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, -1, 1}));
  CHECK(z[0] == SpMatrix(2, {1, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
  CHECK(z[2] == SpMatrix(2, {1, 0, 0, 0, -1, 1, 1, 0, 0, 0, 1, 0, 1, 0, -1, 1}));
  for (int g = 2; g <= 10; ++g) {
    const auto gens = generators(g);
    CHECK(gens.size() == static_cast<std::size_t>(2 * g + 1));
    for (const auto& m : gens) {
      CHECK(m.preserves_symplectic_form());
      const RatMatrix r = m.to_rat();
      CHECK(r * symplectic_form(g) * r.transpose() == symplectic_form(g));
      CHECK(h1_cohomology_action(m) * r.transpose() == RatMatrix::identity(m.size()));
    }
  }
  CHECK_FALSE(SpMatrix(2, {2, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}).preserves_symplectic_form());
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), DimensionError);
  CHECK(inverse(RatMatrix{{2, 1}, {1, 1}}) == RatMatrix{{1, -1}, {-1, 2}});
}

TEST_CASE("no invariant vectors in H^1") {
  for (int g = 2; g <= 10; ++g) {
    const auto gens = generators(g);
    CHECK(fixed_vectors(gens).dimension == 0);
  }
  const std::vector<SpMatrix> id{SpMatrix::identity(3)};
  const auto r = fixed_vectors(id);
  CHECK(r.dimension == 6);
  CHECK(r.basis.size() == 6);
  CHECK(r.space_label == "H^1(C)");
}

TEST_CASE("bilinear invariants are spanned by the symplectic form") {
  for (int g = 2; g <= 10; ++g) {
    const auto gens = generators(g);
    const auto r = fixed_bilinear(gens);
    REQUIRE(r.dimension == 1);
    REQUIRE(r.basis.size() == 1);
    const RatVector& p = r.basis[0];
    const RatMatrix j = symplectic_form(g);
    // proportional to J: rank of {p, vec J} is one
    const RatMatrix pair = RatMatrix::from_rows(j.entries().size(), std::vector<RatVector>{p, j.entries()});
    CHECK(rank(pair) == 1);
    // same answer for the cohomological action
    std::vector<SpMatrix> dual;
    for (const auto& z : gens) {
      const RatMatrix h = h1_cohomology_action(z);
      std::vector<long> e;
      for (const auto& x : h.entries()) e.push_back(x.get_num().get_si());
      dual.emplace_back(g, e);
    }
    CHECK(fixed_bilinear(dual).dimension == 1);
  }
  const std::vector<SpMatrix> id{SpMatrix::identity(2)};
  CHECK(fixed_bilinear(id).dimension == 16);
}

TEST_CASE("action on powers") {
  for (const auto& z : generators(2)) {
    CHECK(action_on_power(z, 2, 0) == RatMatrix::identity(1));
    const RatMatrix a2 = action_on_power(z, 2, 2);
    CHECK(a2.rows() == betti_power(2, 2, 2));
    const RatMatrix a4 = action_on_power(z, 2, 4);
    CHECK(a4 == RatMatrix::identity(1));
  }
  CHECK(action_on_power(SpMatrix::identity(3), 3, 2) == RatMatrix::identity(betti_power(3, 3, 2)));
}

TEST_CASE("invariants of H^2(C^n)") {
  CHECK(invariants_h2_cn(2, 1).report.dimension == 1);
  CHECK(invariants_h2_cn(2, 2).report.dimension == 3);
  CHECK(invariants_h2_cn(3, 3).report.dimension == 6);
  for (int g = 2; g <= 4; ++g)
    for (int n = 1; n <= 4; ++n) {
      if (g == 4 && n == 4) continue;
      const auto res = invariants_h2_cn(g, n);
      CHECK(res.report.dimension == static_cast<std::size_t>(n + n * (n - 1) / 2));
      CHECK(res.spans_expected);
      for (const auto& z : generators(g)) {
        const RatMatrix act = action_on_power(z, n, 2);
        for (const auto& v : res.report.basis) CHECK(fixes(act, v));
      }
    }
}

TEST_CASE("expected invariant classes are fixed and independent") {
  const int g = 3, n = 3;
  const auto basis = kunneth_basis(g, n, 2);
  std::vector<RatVector> expected;
  for (int i = 1; i <= n; ++i)
    expected.push_back(coordinates(pr_pullback(i, CohClass::word({SurfaceBasisVector::top()}), n), basis));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      expected.push_back(coordinates(pr_pair_pullback(i, j, diagonal_class(g), n).homogeneous_part(2), basis));
  CHECK(rank(row_space(expected, basis.size())) == 6);
  const auto res = invariants_h2_cn(g, n);
  auto both = expected;
  both.insert(both.end(), res.report.basis.begin(), res.report.basis.end());
  CHECK(rank(row_space(both, basis.size())) == 6);
}

TEST_CASE("invariants of H^2(F(C, n))") {
  CHECK(invariants_h2_config(2, 1).report.dimension == 1);
  CHECK(invariants_h2_config(2, 3).report.dimension == 3);
  for (int g = 2; g <= 4; ++g)
    for (int n = 1; n <= 4; ++n) {
      if (g == 4 && n == 4) continue;
      const auto res = invariants_h2_config(g, n);
      CHECK(res.report.dimension == static_cast<std::size_t>(n));
      CHECK(res.w_invariants == static_cast<std::size_t>(n));
      CHECK(res.v_invariants == 0);
      CHECK(res.kernel_d02 == 0);
      CHECK(res.points_form_basis);
      CHECK(res.report.space_label == "H^2(F(C,n))");
    }
}
