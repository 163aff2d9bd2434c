#include "hypercl/oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hypercl/linalg.hpp"
#include "hypercl/totaro.hpp"

namespace hypercl::oracle {

namespace {

using Mono = std::vector<int>;  // strictly increasing generator indices

void all_monos(int count, int k, int start, Mono& cur, std::vector<Mono>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int x = start; x < count; ++x) {
    cur.push_back(x);
    all_monos(count, k, x + 1, cur, out);
    cur.pop_back();
  }
}

// Product of two sorted monomials in the exterior algebra: sign and result, or 0.
int wedge(const Mono& a, const Mono& b, Mono& out) {
  out = a;
  int sign = 1;
  for (int x : b) {
    if (std::find(out.begin(), out.end(), x) != out.end()) return 0;
    // x moves left past every element of `out` larger than it
    const auto larger = std::count_if(out.begin(), out.end(), [x](int y) { return y > x; });
    if (larger % 2) sign = -sign;
    out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  }
  return sign;
}

}  // namespace

ArnoldQuotient arnold_quotient(int n, int q) {
  std::map<std::pair<int, int>, int> gen;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gen.emplace(std::pair{i, j}, static_cast<int>(gen.size()));
  const int count = static_cast<int>(gen.size());
  auto e = [&](int i, int j) { return gen.at(i < j ? std::pair{i, j} : std::pair{j, i}); };

  std::vector<Mono> degree_q, degree_rest;
  Mono cur;
  all_monos(count, q, 0, cur, degree_q);
  if (q >= 2) all_monos(count, q - 2, 0, cur, degree_rest);
  std::map<Mono, std::size_t> column;
  for (const auto& m : degree_q) column.emplace(m, column.size());

  // G_ij G_ik + G_jk G_ji + G_ki G_kj with G symmetric in its indices.
  std::vector<RatVector> rows;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        const std::vector<std::pair<int, int>> rel{{e(i, j), e(i, k)}, {e(j, k), e(j, i)}, {e(k, i), e(k, j)}};
        for (const auto& rest : degree_rest) {
          RatVector row(column.size());
          bool any = false;
          for (auto [x, y] : rel) {
            Mono two, prod;
            const int s1 = wedge({x}, {y}, two);
            if (!s1) continue;
            const int s2 = wedge(two, rest, prod);
            if (!s2) continue;
            row[column.at(prod)] += s1 * s2;
            any = true;
          }
          if (any) rows.push_back(std::move(row));
        }
      }

  ArnoldQuotient out;
  const RatMatrix ideal = RatMatrix::from_rows(column.size(), rows);
  const std::size_t ideal_rank = rank(ideal);
  out.dimension = column.size() - ideal_rank;

  const auto normal = g_basis(n, q);
  out.normal_monomial_count = normal.size();
  std::vector<RatVector> all = rows;
  for (const auto& m : normal) {
    Mono acc;
    int sign = 1;
    for (const auto& p : m.pairs()) {
      Mono next;
      const int s = wedge(acc, {e(p.i, p.j)}, next);
      sign *= s;
      acc = next;
    }
    RatVector row(column.size());
    if (sign) row[column.at(acc)] = sign;
    all.push_back(std::move(row));
  }
  out.normal_monomials_independent =
      rank(RatMatrix::from_rows(column.size(), all)) == ideal_rank + normal.size();
  return out;
}

std::size_t boundary_count_by_hand(int g, int n, bool symmetric_dedup) {
  const unsigned full = (1u << n) - 1;
  auto as_list = [n](unsigned m) {
    std::vector<int> v;
    for (int b = 0; b < n; ++b)
      if (m & (1u << b)) v.push_back(b + 1);
    return v;
  };
  // Representative of {s, complement of s}: smaller size first, then lexicographic.
  auto merged = [&](unsigned s) {
    const auto ls = as_list(s), lc = as_list(full & ~s);
    return lc.size() < ls.size() || (lc.size() == ls.size() && lc < ls) ? full & ~s : s;
  };

  // (kind, i, marking mask): kind 0 irreducible node, 1 separating node, 2 conjugate node pair
  std::set<std::tuple<int, int, unsigned>> seen{{0, 0, 0u}};
  for (unsigned s = 0; s <= full; ++s) {
    if (__builtin_popcount(s) >= 2) seen.insert({1, 0, s});
    for (int i = 1; 2 * i <= g; ++i)
      seen.insert({1, i, symmetric_dedup && 2 * i == g ? merged(s) : s});
    for (int i = 1; 2 * i + 1 <= g; ++i)
      seen.insert({2, i, symmetric_dedup && 2 * i + 1 == g ? merged(s) : s});
  }
  return seen.size();
}

}  // namespace hypercl::oracle
