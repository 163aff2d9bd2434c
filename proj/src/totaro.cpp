#include "hypercl/totaro.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypercl {

GMonomial::GMonomial(std::vector<GPair> pairs) : pairs_(std::move(pairs)) {
  for (std::size_t t = 0; t < pairs_.size(); ++t) {
    if (pairs_[t].i < 1 || pairs_[t].i >= pairs_[t].j)
      throw std::invalid_argument("GMonomial: each pair needs 1 <= i < j");
    if (t > 0 && pairs_[t - 1].j >= pairs_[t].j)
      throw std::invalid_argument("GMonomial: second indices must increase strictly");
  }
}

bool GMonomial::contains(GPair p) const {
  return std::find(pairs_.begin(), pairs_.end(), p) != pairs_.end();
}

GMonomial GMonomial::without(std::size_t position) const {
  GMonomial out;
  out.pairs_.reserve(pairs_.size() - 1);
  for (std::size_t t = 0; t < pairs_.size(); ++t)
    if (t != position) out.pairs_.push_back(pairs_[t]);
  return out;
}

std::vector<int> GMonomial::roots(int n) const {
  std::vector<int> parent(n + 1, 0);
  for (const auto& p : pairs_) {
    if (p.j > n) throw IndexError("GMonomial::roots: index exceeds n");
    parent[p.j] = p.i;
  }
  std::vector<int> root(n);
  for (int k = 1; k <= n; ++k) {
    int r = k;
    while (parent[r] != 0) r = parent[r];
    root[k - 1] = r;
  }
  return root;
}

std::string to_string(const GMonomial& m) {
  if (m.pairs().empty()) return "1";
  std::string s;
  for (const auto& p : m.pairs()) s += "G" + std::to_string(p.i) + "," + std::to_string(p.j);
  return s;
}

namespace {

bool max_first_less(const GPair& x, const GPair& y) {
  return x.j != y.j ? x.j < y.j : x.i < y.i;
}

}  // namespace

GExpansion reduce_product(int n, std::span<const std::pair<int, int>> raw) {
  std::vector<GPair> start;
  start.reserve(raw.size());
  for (auto [i, j] : raw) {
    if (i < 1 || j < 1 || i > n || j > n) throw IndexError("reduce_product: index out of range");
    if (i == j) return {};
    start.push_back(i < j ? GPair{i, j} : GPair{j, i});
  }

  struct Item {
    std::vector<GPair> pairs;
    Rat coeff;
  };
  GExpansion out;
  std::vector<Item> work;
  work.push_back({std::move(start), Rat(1)});
  while (!work.empty()) {
    Item item = std::move(work.back());
    work.pop_back();
    auto& ps = item.pairs;

    // Insertion sort by (j, i); each transposition of odd generators flips the sign.
    bool vanishes = false;
    for (std::size_t a = 1; a < ps.size(); ++a)
      for (std::size_t b = a; b > 0 && max_first_less(ps[b], ps[b - 1]); --b) {
        std::swap(ps[b], ps[b - 1]);
        item.coeff = -item.coeff;
      }
    for (std::size_t a = 1; a < ps.size() && !vanishes; ++a) vanishes = ps[a] == ps[a - 1];
    if (vanishes) continue;

    std::size_t clash = ps.size();
    for (std::size_t a = 1; a < ps.size(); ++a)
      if (ps[a].j == ps[a - 1].j) {
        clash = a - 1;
        break;
      }
    if (clash == ps.size()) {
      auto [it, inserted] = out.try_emplace(GMonomial(ps), item.coeff);
      if (!inserted) {
        it->second += item.coeff;
        if (sgn(it->second) == 0) out.erase(it);
      }
      continue;
    }

    // Arnold relation: G_ac G_bc = G_ab G_bc - G_ab G_ac for a < b < c.
    const int a = ps[clash].i, b = ps[clash + 1].i, c = ps[clash].j;
    Item plus{ps, item.coeff};
    plus.pairs[clash] = {a, b};
    plus.pairs[clash + 1] = {b, c};
    Item minus{ps, -item.coeff};
    minus.pairs[clash] = {a, b};
    minus.pairs[clash + 1] = {a, c};
    work.push_back(std::move(plus));
    work.push_back(std::move(minus));
  }
  return out;
}

namespace {

void extend_monomials(int n, int q, int next_j, std::vector<GPair>& prefix,
                      std::vector<GMonomial>& out) {
  if (static_cast<int>(prefix.size()) == q) {
    out.emplace_back(prefix);
    return;
  }
  for (int j = next_j; j <= n; ++j)
    for (int i = 1; i < j; ++i) {
      prefix.push_back({i, j});
      extend_monomials(n, q, j + 1, prefix, out);
      prefix.pop_back();
    }
}

}  // namespace

std::vector<GMonomial> g_basis(int n, int q) {
  std::vector<GMonomial> out;
  if (q < 0 || q > std::max(n - 1, 0)) return out;
  std::vector<GPair> prefix;
  extend_monomials(n, q, 2, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t os_dimension(int n, int q) {
  if (q < 0) return 0;
  std::vector<std::size_t> e(q + 1, 0);
  e[0] = 1;
  for (int x = 1; x <= n - 1; ++x)
    for (int k = q; k >= 1; --k) e[k] += e[k - 1] * static_cast<std::size_t>(x);
  return e[q];
}

std::optional<std::pair<int, TensorWord>> normalize_word(const GMonomial& mono,
                                                         const TensorWord& word) {
  const int n = static_cast<int>(word.size());
  if (mono.pairs().empty()) return std::pair{1, word};
  const auto root = mono.roots(n);
  TensorWord acc(n, SurfaceBasisVector::unit());
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    if (word[k].kind == SurfaceBasisVector::Kind::Unit) continue;
    TensorWord factor(n, SurfaceBasisVector::unit());
    factor[root[k] - 1] = word[k];
    auto p = cup_words(acc, factor);
    if (!p) return std::nullopt;
    sign *= p->first;
    acc = std::move(p->second);
  }
  return std::pair{sign, std::move(acc)};
}

EModelElement EModelElement::from_class(const CohClass& x) {
  EModelElement e(x.n());
  for (const auto& [w, c] : x.terms()) e.add_term(GMonomial{}, w, c);
  return e;
}

EModelElement EModelElement::from_monomial(int n, const GMonomial& m, const Rat& coeff) {
  EModelElement e(n);
  e.add_term(m, TensorWord(n, SurfaceBasisVector::unit()), coeff);
  return e;
}

EModelElement EModelElement::generator(int n, int i, int j) {
  const std::pair<int, int> raw[] = {{i, j}};
  EModelElement e(n);
  for (const auto& [m, c] : reduce_product(n, raw))
    e.add_term(m, TensorWord(n, SurfaceBasisVector::unit()), c);
  return e;
}

void EModelElement::add_term(const GMonomial& mono, const TensorWord& word, const Rat& coeff) {
  if (static_cast<int>(word.size()) != n_) throw DimensionError("EModelElement: word length differs from n");
  if (!mono.pairs().empty() && mono.pairs().back().j > n_)
    throw IndexError("EModelElement: G index exceeds n");
  if (sgn(coeff) == 0) return;
  auto nw = normalize_word(mono, word);
  if (!nw) return;
  Key key{mono, std::move(nw->second)};
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff * nw->first);
  if (!inserted) {
    it->second += coeff * nw->first;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

EModelElement& EModelElement::operator+=(const EModelElement& other) {
  if (other.n_ != n_) throw DimensionError("EModelElement sum: n differs");
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, c);
  return *this;
}

EModelElement& EModelElement::operator-=(const EModelElement& other) {
  if (other.n_ != n_) throw DimensionError("EModelElement difference: n differs");
  for (const auto& [k, c] : other.terms_) add_term(k.first, k.second, -c);
  return *this;
}

std::string to_string(const EModelElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*[" << to_string(k.second) << "]" << to_string(k.first);
  }
  return os.str();
}

EModelElement multiply(const EModelElement& x, const EModelElement& y) {
  if (x.n() != y.n()) throw DimensionError("multiply: elements live on different n");
  EModelElement out(x.n());
  std::vector<std::pair<int, int>> raw;
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      auto w = cup_words(kx.second, ky.second);
      if (!w) continue;
      // Moving the word of y past the G-part of x.
      int sign = w->first;
      if ((kx.first.length() * degree(ky.second)) % 2) sign = -sign;
      raw.clear();
      for (const auto& p : kx.first.pairs()) raw.emplace_back(p.i, p.j);
      for (const auto& p : ky.first.pairs()) raw.emplace_back(p.i, p.j);
      for (const auto& [m, c] : reduce_product(x.n(), raw))
        out.add_term(m, w->second, sign * c * cx * cy);
    }
  return out;
}

namespace {

// pr_ij^*(delta) for every pair, indexed by (i, j).
std::map<GPair, CohClass> pulled_back_diagonals(const CohClass& delta, int n) {
  std::map<GPair, CohClass> out;
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) out.emplace(GPair{i, j}, pr_pair_pullback(i, j, delta, n));
  return out;
}

// d2(word * G_S) = (-1)^{deg word} sum_t (-1)^t (word . Delta_{e_t}) G_{S - e_t}
template <typename Sink>
void differentiate_term(const GMonomial& mono, const TensorWord& word, const Rat& coeff,
                        const std::map<GPair, CohClass>& deltas, Sink&& sink) {
  const int base = degree(word) % 2 ? -1 : 1;
  for (std::size_t t = 0; t < mono.pairs().size(); ++t) {
    const int sign = (t % 2 ? -1 : 1) * base;
    const GMonomial rest = mono.without(t);
    for (const auto& [v, c] : deltas.at(mono.pairs()[t]).terms()) {
      auto prod = cup_words(word, v);
      if (!prod) continue;
      sink(rest, prod->second, coeff * c * (sign * prod->first));
    }
  }
}

}  // namespace

EModelElement d2(const EModelElement& x, const CohClass& delta) {
  EModelElement out(x.n());
  if (x.n() < 2) return out;
  const auto deltas = pulled_back_diagonals(delta, x.n());
  for (const auto& [k, c] : x.terms())
    differentiate_term(k.first, k.second, c, deltas,
                       [&](const GMonomial& m, const TensorWord& w, const Rat& v) {
                         out.add_term(m, w, v);
                       });
  return out;
}

EModelElement d2(const EModelElement& x, int g) { return d2(x, diagonal_class(g)); }

EBasis::EBasis(int g, int n, int p, int q) : g_(g), n_(n), p_(p), q_(q) {
  for (const auto& mono : g_basis(n, q)) {
    const auto root = mono.roots(n);
    std::vector<int> root_slots;
    for (int k = 1; k <= n; ++k)
      if (root[k - 1] == k) root_slots.push_back(k);
    for (const auto& small : kunneth_basis(g, static_cast<int>(root_slots.size()), p)) {
      TensorWord w(n, SurfaceBasisVector::unit());
      for (std::size_t s = 0; s < root_slots.size(); ++s) w[root_slots[s] - 1] = small[s];
      index_.emplace(EModelElement::Key{mono, w}, keys_.size());
      keys_.emplace_back(mono, std::move(w));
    }
  }
}

std::size_t EBasis::index_of(const EModelElement::Key& k) const {
  auto it = index_.find(k);
  if (it == index_.end())
    throw DimensionError("EBasis: term " + to_string(k.second) + to_string(k.first) +
                         " is not a basis element of this bidegree");
  return it->second;
}

EModelElement EBasis::element(std::size_t idx) const {
  EModelElement e(n_);
  e.add_term(keys_[idx].first, keys_[idx].second, 1);
  return e;
}

RatVector EBasis::coordinates(const EModelElement& x) const {
  RatVector v(size());
  for (const auto& [k, c] : x.terms()) v[index_of(k)] = c;
  return v;
}

std::size_t e_dimension(int g, int n, int p, int q) {
  if (q < 0 || p < 0) return 0;
  return os_dimension(n, q) * betti_power(g, n - q, p);
}

RatMatrix d2_matrix(int g, int n, int p, int q) {
  const EBasis source(g, n, p, q);
  if (q <= 0) return RatMatrix(0, source.size());
  const EBasis target(g, n, p + 2, q - 1);
  RatMatrix m(target.size(), source.size());
  const auto deltas = pulled_back_diagonals(diagonal_class(g), n);
  for (std::size_t col = 0; col < source.size(); ++col) {
    const auto& [mono, word] = source.key(col);
    differentiate_term(mono, word, Rat(1), deltas,
                       [&](const GMonomial& rest, const TensorWord& w, const Rat& v) {
                         auto nw = normalize_word(rest, w);
                         if (!nw) return;
                         m(target.index_of({rest, nw->second}), col) += v * nw->first;
                       });
  }
  return m;
}

std::size_t e3_dimension(int g, int n, int p, int q) {
  if (p < 0 || q < 0 || q > std::max(n - 1, 0) || p > 2 * (n - q)) return 0;
  std::size_t dim = e_dimension(g, n, p, q);
  const std::size_t out_rank = q > 0 ? rank(d2_matrix(g, n, p, q)) : 0;
  const std::size_t in_rank = p >= 2 && q + 1 <= n - 1 ? rank(d2_matrix(g, n, p - 2, q + 1)) : 0;
  return dim - out_rank - in_rank;
}

std::vector<std::size_t> config_cohomology_dims(int g, int n, int kmax) {
  if (g < 0 || n < 1) throw std::invalid_argument("config_cohomology_dims: need n >= 1");
  std::vector<std::size_t> out;
  for (int k = 0; k <= kmax; ++k) {
    std::size_t total = 0;
    for (int q = 0; q <= k; ++q) total += e3_dimension(g, n, k - q, q);
    out.push_back(total);
  }
  return out;
}

namespace {

SurfaceBasisVector interleaved_basis(std::size_t l) {
  const int handle = static_cast<int>(l / 2) + 1;
  return l % 2 == 0 ? SurfaceBasisVector::a(handle) : SurfaceBasisVector::b(handle);
}

std::size_t interleaved_index(SurfaceBasisVector v) {
  return 2 * (v.index - 1) + (v.kind == SurfaceBasisVector::Kind::B ? 1 : 0);
}

}  // namespace

CohClass act_on_class(const RatMatrix& h1_action, const CohClass& x) {
  const std::size_t dim = h1_action.rows();
  CohClass out(x.n());
  for (const auto& [w, c] : x.terms()) {
    std::vector<std::pair<TensorWord, Rat>> partial{{TensorWord{}, c}};
    for (const auto& f : w) {
      std::vector<std::pair<TensorWord, Rat>> next;
      if (f.degree() != 1) {
        for (auto& [pw, pc] : partial) {
          pw.push_back(f);
          next.emplace_back(std::move(pw), std::move(pc));
        }
      } else {
        const std::size_t col = interleaved_index(f);
        if (col >= dim) throw DimensionError("act_on_class: genus of action is too small");
        for (const auto& [pw, pc] : partial)
          for (std::size_t l = 0; l < dim; ++l) {
            const Rat& m = h1_action(l, col);
            if (sgn(m) == 0) continue;
            TensorWord nw = pw;
            nw.push_back(interleaved_basis(l));
            next.emplace_back(std::move(nw), pc * m);
          }
      }
      partial = std::move(next);
    }
    for (const auto& [pw, pc] : partial) out.add_term(pw, pc);
  }
  return out;
}

EModelElement act_on_element(const RatMatrix& h1_action, const EModelElement& x) {
  EModelElement out(x.n());
  for (const auto& [k, c] : x.terms()) {
    const CohClass image = act_on_class(h1_action, CohClass::word(k.second, c));
    for (const auto& [w, a] : image.terms()) out.add_term(k.first, w, a);
  }
  return out;
}

RatMatrix group_action_on_E(const SpMatrix& z, int p, int q, int g, int n) {
  if (z.genus() != g) throw DimensionError("group_action_on_E: matrix size does not match genus");
  const RatMatrix h1 = h1_cohomology_action(z);
  const EBasis basis(g, n, p, q);
  RatMatrix m(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const auto& [mono, word] = basis.key(col);
    const CohClass image = act_on_class(h1, CohClass::word(word));
    for (const auto& [w, c] : image.terms()) m(basis.index_of({mono, w}), col) = c;
  }
  return m;
}

DegreeTwoPieces degree_two_pieces(int g, int n) {
  DegreeTwoPieces out;
  out.h2_power = betti_power(g, n, 2);
  if (n >= 2) {
    out.image_d01 = rank(d2_matrix(g, n, 0, 1));
    out.v = e_dimension(g, n, 1, 1) - rank(d2_matrix(g, n, 1, 1));
  }
  if (n >= 3) out.kernel_d02 = e_dimension(g, n, 0, 2) - rank(d2_matrix(g, n, 0, 2));
  out.w = out.h2_power - out.image_d01;
  return out;
}

}  // namespace hypercl
