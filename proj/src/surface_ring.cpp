#include "hypercl/surface_ring.hpp"

#include <sstream>

namespace hypercl {

std::string to_string(const SurfaceBasisVector& v) {
  using K = SurfaceBasisVector::Kind;
  switch (v.kind) {
    case K::Unit: return "1";
    case K::A: return "a" + std::to_string(v.index);
    case K::B: return "b" + std::to_string(v.index);
    case K::Top: return "w";
  }
  return "?";
}

std::vector<SurfaceBasisVector> surface_basis(int g) {
  std::vector<SurfaceBasisVector> out;
  out.reserve(2 * g + 2);
  out.push_back(SurfaceBasisVector::unit());
  for (int i = 1; i <= g; ++i) out.push_back(SurfaceBasisVector::a(i));
  for (int i = 1; i <= g; ++i) out.push_back(SurfaceBasisVector::b(i));
  out.push_back(SurfaceBasisVector::top());
  return out;
}

std::optional<std::pair<int, SurfaceBasisVector>> multiply_basis(SurfaceBasisVector x,
                                                                 SurfaceBasisVector y) {
  using K = SurfaceBasisVector::Kind;
  if (x.kind == K::Unit) return std::pair{1, y};
  if (y.kind == K::Unit) return std::pair{1, x};
  if (x.index != y.index || x.kind == K::Top || y.kind == K::Top) return std::nullopt;
  if (x.kind == K::A && y.kind == K::B) return std::pair{1, SurfaceBasisVector::top()};
  if (x.kind == K::B && y.kind == K::A) return std::pair{-1, SurfaceBasisVector::top()};
  return std::nullopt;
}

int degree(const TensorWord& w) {
  int d = 0;
  for (const auto& f : w) d += f.degree();
  return d;
}

std::string to_string(const TensorWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += "(x)";
    s += to_string(w[i]);
  }
  return s;
}

std::optional<std::pair<int, TensorWord>> cup_words(const TensorWord& x, const TensorWord& y) {
  if (x.size() != y.size()) throw DimensionError("cup: tensor lengths differ");
  TensorWord out(x.size());
  int sign = 1;
  int y_prefix = 0;  // total degree of y_1..y_{i-1}
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i].degree() * y_prefix) % 2) sign = -sign;
    auto p = multiply_basis(x[i], y[i]);
    if (!p) return std::nullopt;
    sign *= p->first;
    out[i] = p->second;
    y_prefix += y[i].degree();
  }
  return std::pair{sign, std::move(out)};
}

CohClass::CohClass(int n, std::map<TensorWord, Rat> terms) : n_(n) {
  for (auto& [w, c] : terms) add_term(w, c);
}

CohClass CohClass::unit(int n) {
  return word(TensorWord(n, SurfaceBasisVector::unit()));
}

CohClass CohClass::word(TensorWord w, const Rat& coeff) {
  CohClass c(static_cast<int>(w.size()));
  c.add_term(w, coeff);
  return c;
}

Rat CohClass::coefficient(const TensorWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rat(0) : it->second;
}

void CohClass::add_term(const TensorWord& w, const Rat& coeff) {
  if (static_cast<int>(w.size()) != n_) throw DimensionError("CohClass: word length differs from n");
  if (sgn(coeff) == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, coeff);
  if (!inserted) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

CohClass CohClass::homogeneous_part(int k) const {
  CohClass out(n_);
  for (const auto& [w, c] : terms_)
    if (degree(w) == k) out.terms_.emplace(w, c);
  return out;
}

CohClass CohClass::kunneth_component(const std::vector<int>& pattern) const {
  if (static_cast<int>(pattern.size()) != n_) throw DimensionError("kunneth_component: bad pattern");
  CohClass out(n_);
  for (const auto& [w, c] : terms_) {
    bool match = true;
    for (int i = 0; i < n_ && match; ++i) match = w[i].degree() == pattern[i];
    if (match) out.terms_.emplace(w, c);
  }
  return out;
}

CohClass& CohClass::operator+=(const CohClass& other) {
  if (other.n_ != n_) throw DimensionError("CohClass sum: n differs");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
  if (other.n_ != n_) throw DimensionError("CohClass difference: n differs");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

CohClass operator*(const Rat& s, const CohClass& x) {
  CohClass out(x.n_);
  if (sgn(s) == 0) return out;
  for (const auto& [w, c] : x.terms_) out.terms_.emplace(w, s * c);
  return out;
}

std::string to_string(const CohClass& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    Rat a = abs(c);
    if (a != 1) os << a << "*";
    os << to_string(w);
  }
  return os.str();
}

CohClass cup(const CohClass& x, const CohClass& y) {
  if (x.n() != y.n()) throw DimensionError("cup: classes live on different powers");
  CohClass out(x.n());
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      auto p = cup_words(wx, wy);
      if (p) out.add_term(p->second, p->first * cx * cy);
    }
  return out;
}

Rat integrate(const CohClass& x) {
  return x.coefficient(TensorWord(x.n(), SurfaceBasisVector::top()));
}

CohClass diagonal_class(int g) {
  if (g < 1) throw std::invalid_argument("diagonal_class: genus must be positive");
  const auto unknowns = kunneth_basis(g, 2, 2);
  const auto basis = surface_basis(g);
  const std::size_t m = unknowns.size();

  std::vector<RatVector> equations;
  for (auto x : basis)
    for (auto y : basis) {
      RatVector row(m + 1);
      const TensorWord cross{x, y};
      for (std::size_t k = 0; k < m; ++k) {
        auto p = cup_words(cross, unknowns[k]);
        if (p && p->second == TensorWord{SurfaceBasisVector::top(), SurfaceBasisVector::top()})
          row[k] = p->first;
      }
      auto xy = multiply_basis(x, y);
      if (xy && xy->second == SurfaceBasisVector::top()) row[m] = xy->first;
      equations.push_back(std::move(row));
    }

  RrefResult red = rref(RatMatrix::from_rows(m + 1, equations));
  if (red.rank != m || (!red.pivot_columns.empty() && red.pivot_columns.back() == m))
    throw std::logic_error("diagonal_class: pairing system is singular or inconsistent");

  CohClass delta(2);
  for (std::size_t i = 0; i < red.rank; ++i)
    delta.add_term(unknowns[red.pivot_columns[i]], red.reduced(i, m));
  return delta;
}

CohClass delta_prime(int g) { return diagonal_class(g).kunneth_component({1, 1}); }

CohClass pr_pullback(int i, const CohClass& x, int n) {
  if (x.n() != 1) throw DimensionError("pr_pullback: expects a class on C");
  if (i < 1 || i > n) throw IndexError("pr_pullback: slot out of range");
  CohClass out(n);
  for (const auto& [w, c] : x.terms()) {
    TensorWord big(n, SurfaceBasisVector::unit());
    big[i - 1] = w[0];
    out.add_term(big, c);
  }
  return out;
}

CohClass pr_pair_pullback(int i, int j, const CohClass& x, int n) {
  if (x.n() != 2) throw DimensionError("pr_pair_pullback: expects a class on C^2");
  if (i < 1 || j > n || i >= j) throw IndexError("pr_pair_pullback: need 1 <= i < j <= n");
  CohClass out(n);
  for (const auto& [w, c] : x.terms()) {
    TensorWord big(n, SurfaceBasisVector::unit());
    big[i - 1] = w[0];
    big[j - 1] = w[1];
    out.add_term(big, c);
  }
  return out;
}

namespace {

void extend_words(const std::vector<SurfaceBasisVector>& basis, int n, int k, TensorWord& prefix,
                  int used, std::vector<TensorWord>& out) {
  const int slot = static_cast<int>(prefix.size());
  if (slot == n) {
    if (used == k) out.push_back(prefix);
    return;
  }
  const int remaining_slots = n - slot - 1;
  for (const auto& v : basis) {
    const int d = used + v.degree();
    if (d > k || d + 2 * remaining_slots < k) continue;
    prefix.push_back(v);
    extend_words(basis, n, k, prefix, d, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<TensorWord> kunneth_basis(int g, int n, int k) {
  std::vector<TensorWord> out;
  if (k < 0 || k > 2 * n) return out;
  const auto basis = surface_basis(g);
  TensorWord prefix;
  prefix.reserve(n);
  extend_words(basis, n, k, prefix, 0, out);
  return out;
}

std::size_t betti_power(int g, int n, int k) {
  std::vector<std::size_t> poly{1};
  for (int step = 0; step < n; ++step) {
    std::vector<std::size_t> next(poly.size() + 2, 0);
    for (std::size_t d = 0; d < poly.size(); ++d) {
      next[d] += poly[d];
      next[d + 1] += poly[d] * static_cast<std::size_t>(2 * g);
      next[d + 2] += poly[d];
    }
    poly = std::move(next);
  }
  return k >= 0 && static_cast<std::size_t>(k) < poly.size() ? poly[k] : 0;
}

WordIndex index_words(const std::vector<TensorWord>& basis) {
  WordIndex idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

RatVector coordinates(const CohClass& x, const WordIndex& index) {
  RatVector v(index.size());
  for (const auto& [w, c] : x.terms()) {
    auto it = index.find(w);
    if (it == index.end()) throw DimensionError("coordinates: word " + to_string(w) + " not in basis");
    v[it->second] = c;
  }
  return v;
}

RatVector coordinates(const CohClass& x, const std::vector<TensorWord>& basis) {
  return coordinates(x, index_words(basis));
}

CohClass from_coordinates(int n, const std::vector<TensorWord>& basis, std::span<const Rat> v) {
  if (v.size() != basis.size()) throw DimensionError("from_coordinates: length mismatch");
  CohClass out(n);
  for (std::size_t i = 0; i < v.size(); ++i) out.add_term(basis[i], v[i]);
  return out;
}

}  // namespace hypercl
