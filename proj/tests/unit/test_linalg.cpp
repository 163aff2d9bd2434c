#include <doctest.h>

#include <algorithm>
#include <random>

#include "hypercl/linalg.hpp"

using namespace hypercl;

namespace {

RatMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng) * (d(rng) > 0);  // roughly half zeros
  return m;
}

}  // namespace

TEST_CASE("rref on small matrices") {
  auto id = rref(RatMatrix::identity(2));
  CHECK(id.rank == 2);
  CHECK(id.pivot_columns == std::vector<std::size_t>{0, 1});

  auto zero = rref(RatMatrix(3, 4));
  CHECK(zero.rank == 0);
  CHECK(zero.pivot_columns.empty());

  auto dep = rref(RatMatrix{{1, 2}, {2, 4}});
  CHECK(dep.rank == 1);
  CHECK(dep.pivot_columns == std::vector<std::size_t>{0});
  CHECK(dep.reduced == RatMatrix{{1, 2}, {0, 0}});
}

TEST_CASE("rref scales pivots and clears above") {
  auto r = rref(RatMatrix{{0, 2, 4}, {3, 0, 3}});
  CHECK(r.reduced == RatMatrix{{1, 0, 1}, {0, 1, 2}});
  CHECK(rref(RatMatrix{{2, 1}}).reduced(0, 1) == make_rat(1, 2));
}

TEST_CASE("kernel basis parametrization") {
  CHECK(kernel_basis(RatMatrix::identity(3)).empty());
  auto k = kernel_basis(RatMatrix(2, 3));
  REQUIRE(k.size() == 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(k[i][j] == (i == j ? 1 : 0));
  auto line = kernel_basis(RatMatrix{{1, 1}});
  REQUIRE(line.size() == 1);
  CHECK(line[0] == RatVector{-1, 1});
}

TEST_CASE("stack_rows") {
  const RatMatrix a{{1, 0}}, b{{0, 1}};
  const RatMatrix two[] = {a, b};
  CHECK(stack_rows(two) == RatMatrix::identity(2));
  const RatMatrix one[] = {a};
  CHECK(stack_rows(one) == a);
  const RatMatrix bad[] = {a, RatMatrix(1, 3)};
  CHECK_THROWS_AS(stack_rows(bad), DimensionError);

  const RatMatrix m{{1, 2, 3}, {2, 4, 6}};
  const RatMatrix copies[] = {m, m, m};
  CHECK(kernel_basis(stack_rows(copies)) == kernel_basis(m));
}

TEST_CASE("kronecker") {
  CHECK(kronecker(RatMatrix::identity(2), RatMatrix::identity(2)) == RatMatrix::identity(4));
  CHECK(kronecker(RatMatrix{{1, 2}, {3, 4}}, RatMatrix(2, 3)).is_zero());
  const RatMatrix swap{{0, 1}, {1, 0}};
  const RatVector e0{1, 0, 0, 0};
  CHECK(kronecker(swap, swap).apply(e0) == RatVector{0, 0, 0, 1});
  const RatMatrix a{{1, 2}, {0, 1}}, b{{3, 0, 1}}, c{{1, 0}, {1, 1}}, d{{1}, {2}, {0}};
  CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
}

TEST_CASE("rank-nullity, idempotence and row-order independence on random matrices") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    const RatMatrix m = random_matrix(rng, r, c);
    const auto red = rref(m);
    CHECK(red.rank == rank(m));
    CHECK(rank(m) + kernel_basis(m).size() == c);
    CHECK(rref(red.reduced).reduced == red.reduced);
    for (const auto& v : kernel_basis(m)) {
      const auto mv = m.apply(v);
      CHECK(std::all_of(mv.begin(), mv.end(), [](const Rat& x) { return sgn(x) == 0; }));
    }
    std::vector<std::size_t> order(r);
    for (std::size_t i = 0; i < r; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    RatMatrix p(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) p(i, j) = m(order[i], j);
    CHECK(rank(p) == rank(m));
    CHECK(rank(m.transpose()) == rank(m));
  }
}

TEST_CASE("column span containment and common fixed subspace") {
  const RatMatrix span{{1, 0}, {0, 1}, {1, 1}};
  CHECK(column_span_contains(span, RatMatrix{{2}, {3}, {5}}));
  CHECK_FALSE(column_span_contains(span, RatMatrix{{1}, {0}, {0}}));

  const RatMatrix swap{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const RatMatrix cyc{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const RatMatrix acts[] = {swap, cyc};
  auto fixed = common_fixed_subspace(acts, 3);
  REQUIRE(fixed.size() == 1);
  CHECK(fixed[0][0] == fixed[0][1]);
  CHECK(fixed[0][1] == fixed[0][2]);
  std::vector<RatMatrix> shifted{swap - RatMatrix::identity(3), cyc - RatMatrix::identity(3)};
  CHECK(kernel_basis(stack_rows(shifted)).size() == 1);
}

TEST_CASE("exact arithmetic stays reduced") {
  Rat x = make_rat(6, 4);
  CHECK(x.get_num() == 3);
  CHECK(x.get_den() == 2);
  CHECK(to_string(make_rat(-2, 6)) == "-1/3");
  CHECK_THROWS(RatMatrix(2, 2, std::vector<Rat>(3)));
}
