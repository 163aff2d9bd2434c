#include <doctest.h>

#include "hypercl/surface_ring.hpp"

using namespace hypercl;

namespace {

using V = SurfaceBasisVector;

CohClass word(std::initializer_list<V> w, Rat c = 1) { return CohClass::word(TensorWord(w), c); }

// Pairing oracle: integrate((x (x) y) . D) == integrate_C(x . y) for all basis pairs.
bool satisfies_pairing(const CohClass& d, int g) {
  for (auto x : surface_basis(g))
    for (auto y : surface_basis(g)) {
      const Rat lhs = integrate(cup(word({x, y}), d));
      Rat rhs = 0;
      if (auto p = multiply_basis(x, y); p && p->second == V::top()) rhs = p->first;
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("surface basis and degrees") {
  CHECK(surface_basis(3).size() == 8);
  CHECK(V::unit().degree() == 0);
  CHECK(V::a(2).degree() == 1);
  CHECK(V::b(1).degree() == 1);
  CHECK(V::top().degree() == 2);
  CHECK(V::unit() < V::a(1));
  CHECK(V::a(2) < V::b(1));
  CHECK(V::b(2) < V::top());
}

TEST_CASE("cup products and signs") {
  CHECK(cup(word({V::a(1), V::unit()}), word({V::b(1), V::unit()})) == word({V::top(), V::unit()}));
  CHECK(cup(word({V::b(1)}), word({V::a(1)})) == word({V::top()}, -1));
  CHECK(cup(word({V::a(1), V::unit()}), word({V::a(1), V::unit()})).is_zero());
  CHECK(cup(word({V::a(1)}), word({V::b(2)})).is_zero());
  CHECK(cup(word({V::top()}), word({V::a(1)})).is_zero());
  const CohClass x = word({V::a(1), V::b(2)}) + word({V::top(), V::unit()}, 3);
  CHECK(cup(CohClass::unit(2), x) == x);
  CHECK_THROWS_AS(cup(word({V::a(1)}), word({V::a(1), V::unit()})), DimensionError);
  // a1 (x) 1 times 1 (x) a1 needs no sign; the reverse order picks one up
  CHECK(cup(word({V::a(1), V::unit()}), word({V::unit(), V::a(1)})) == word({V::a(1), V::a(1)}));
  CHECK(cup(word({V::unit(), V::a(1)}), word({V::a(1), V::unit()})) == word({V::a(1), V::a(1)}, -1));
}

TEST_CASE("graded commutativity on H^*(C^2)") {
  const int g = 2;
  for (int k1 = 0; k1 <= 4; ++k1)
    for (int k2 = 0; k2 <= 4 - k1; ++k2)
      for (const auto& w1 : kunneth_basis(g, 2, k1))
        for (const auto& w2 : kunneth_basis(g, 2, k2)) {
          const CohClass x = CohClass::word(w1), y = CohClass::word(w2);
          const Rat s = (k1 * k2) % 2 ? -1 : 1;
          CHECK(cup(x, y) == s * cup(y, x));
        }
}

TEST_CASE("integration") {
  CHECK(integrate(word({V::top(), V::top()})) == 1);
  CHECK(integrate(word({V::top(), V::a(1)})) == 0);
  CHECK(integrate(cup(word({V::a(1), V::unit()}), word({V::b(1), V::top()}))) == 1);
}

TEST_CASE("diagonal class") {
  for (int g = 2; g <= 4; ++g) {
    const CohClass d = diagonal_class(g);
    CHECK(satisfies_pairing(d, g));
    CHECK(d.coefficient({V::unit(), V::top()}) == 1);
    CHECK(d.coefficient({V::top(), V::unit()}) == 1);
    const CohClass dp = delta_prime(g);
    CHECK(dp.terms().size() == static_cast<std::size_t>(2 * g));
    CHECK(dp.kunneth_component({0, 2}).is_zero());
    CHECK(dp.kunneth_component({2, 0}).is_zero());
    CHECK((d - dp).kunneth_component({1, 1}).is_zero());
    // sign fixed by the pairing with a_i b_i = w
    for (int i = 1; i <= g; ++i) {
      CHECK(dp.coefficient({V::a(i), V::b(i)}) == -1);
      CHECK(dp.coefficient({V::b(i), V::a(i)}) == 1);
    }
  }
  // Frozen from the pairing solve at g = 2.
  CHECK(to_string(diagonal_class(2)) == "1(x)w - a1(x)b1 - a2(x)b2 + b1(x)a1 + b2(x)a2 + w(x)1");
}

TEST_CASE("projection pullbacks") {
  const CohClass point = word({V::top()});
  CHECK(pr_pullback(1, point, 3) == word({V::top(), V::unit(), V::unit()}));
  CHECK(pr_pullback(2, CohClass::unit(1), 4) == CohClass::unit(4));
  CHECK(pr_pullback(2, word({V::a(1)}), 2) == word({V::unit(), V::a(1)}));
  CHECK_THROWS_AS(pr_pullback(4, point, 3), IndexError);
  CHECK(pr_pair_pullback(1, 2, diagonal_class(2), 2) == diagonal_class(2));
  CHECK(pr_pair_pullback(1, 3, word({V::unit(), V::top()}), 3) == word({V::unit(), V::unit(), V::top()}));
  CHECK_THROWS_AS(pr_pair_pullback(2, 1, diagonal_class(2), 3), IndexError);

  // pullback is a ring map
  const CohClass x = word({V::a(1), V::unit()}), y = word({V::b(1), V::b(2)});
  CHECK(pr_pair_pullback(1, 3, cup(x, y), 3) == cup(pr_pair_pullback(1, 3, x, 3), pr_pair_pullback(1, 3, y, 3)));

  // point classes and pulled-back diagonals are independent in H^2(C^n)
  for (int n = 1; n <= 4; ++n) {
    const auto basis = kunneth_basis(2, n, 2);
    std::vector<RatVector> cols;
    for (int i = 1; i <= n; ++i) cols.push_back(coordinates(pr_pullback(i, point, n), basis));
    for (int j = 2; j <= n; ++j)
      for (int i = 1; i < j; ++i) cols.push_back(coordinates(pr_pair_pullback(i, j, diagonal_class(2), n), basis));
    CHECK(rank(RatMatrix::from_columns(basis.size(), cols)) == cols.size());
  }
}

TEST_CASE("Kunneth bases") {
  CHECK(kunneth_basis(2, 1, 1).size() == 4);
  CHECK(kunneth_basis(2, 2, 2).size() == 18);
  CHECK(kunneth_basis(3, 4, 0).size() == 1);
  CHECK(kunneth_basis(2, 2, 5).empty());
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 4; ++n)
      for (int k = 0; k <= 2 * n; ++k) {
        const auto b = kunneth_basis(g, n, k);
        CHECK(b.size() == betti_power(g, n, k));
        CHECK(std::is_sorted(b.begin(), b.end()));
        for (const auto& w : b) CHECK(degree(w) == k);
      }
  CHECK(betti_power(2, 3, 2) == 3 + 3 * 16);
}

TEST_CASE("Poincare pairing is nondegenerate") {
  for (int g = 1; g <= 3; ++g)
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= 2 * n; ++k) {
        const auto left = kunneth_basis(g, n, k), right = kunneth_basis(g, n, 2 * n - k);
        RatMatrix m(left.size(), right.size());
        for (std::size_t a = 0; a < left.size(); ++a)
          for (std::size_t b = 0; b < right.size(); ++b)
            m(a, b) = integrate(cup(CohClass::word(left[a]), CohClass::word(right[b])));
        CHECK(rank(m) == left.size());
      }
}

TEST_CASE("coordinates round trip") {
  const auto basis = kunneth_basis(2, 2, 2);
  const CohClass d = diagonal_class(2);
  const RatVector v = coordinates(d, basis);
  CHECK(from_coordinates(2, basis, v) == d);
  CHECK_THROWS_AS(coordinates(word({V::a(1), V::unit()}), basis), DimensionError);
}
