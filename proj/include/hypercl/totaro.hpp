#pragma once

// The bigraded model E_C(n) for the ordered configuration space F(C, n) of
// a genus-g curve:
//
//   E = H^*(C^n)[G_ij] / (G_ii, G_ij^2, G_ij - G_ji, Arnold, G_ij (pr_i^* a - pr_j^* a))
//
// with H^p(C^n) in bidegree (p, 0), G_ij in bidegree (0, 1) and
// d(G_ij) = pr_ij^*(Delta). The G-part is kept in "distinct-maxima" normal
// form (second indices strictly increasing). A term is stored as word * G_S,
// the word reduced modulo the relation ideal of S: every tensor factor is
// pushed to the smallest slot of its component in the forest S.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypercl/linalg.hpp"
#include "hypercl/sp_matrix.hpp"
#include "hypercl/surface_ring.hpp"

namespace hypercl {

struct GPair {
  int i = 0;
  int j = 0;
  friend constexpr auto operator<=>(const GPair&, const GPair&) = default;
};

/// Product of G-variables in normal form: each pair has i < j and the j's are
/// strictly increasing along the sequence.
class GMonomial {
 public:
  GMonomial() = default;
  /// Throws std::invalid_argument when `pairs` is not in normal form.
  explicit GMonomial(std::vector<GPair> pairs);

  const std::vector<GPair>& pairs() const { return pairs_; }
  int length() const { return static_cast<int>(pairs_.size()); }
  bool contains(GPair p) const;
  GMonomial without(std::size_t position) const;

  /// Smallest slot of the component of each slot 1..n in the forest whose
  /// edges are the pairs (result is 1-based, indexed by slot - 1).
  std::vector<int> roots(int n) const;

  friend auto operator<=>(const GMonomial&, const GMonomial&) = default;

 private:
  std::vector<GPair> pairs_;
};

std::string to_string(const GMonomial& m);

using GExpansion = std::map<GMonomial, Rat>;

/// Rewrites the product G_{p_1} G_{p_2} ... of raw index pairs (either order,
/// 1-based) into normal form.
GExpansion reduce_product(int n, std::span<const std::pair<int, int>> raw);

/// Normal-form monomials of length q in lexicographic order; there are
/// e_q(1, 2, ..., n - 1) of them.
std::vector<GMonomial> g_basis(int n, int q);

/// Elementary symmetric polynomial e_q(1, ..., n - 1).
std::size_t os_dimension(int n, int q);

/// Reduces `word` modulo the relations attached to `mono`. Returns the sign
/// and representative, or nullopt when the product vanishes.
std::optional<std::pair<int, TensorWord>> normalize_word(const GMonomial& mono,
                                                         const TensorWord& word);

class EModelElement {
 public:
  using Key = std::pair<GMonomial, TensorWord>;

  EModelElement() = default;
  explicit EModelElement(int n) : n_(n) {}

  static EModelElement from_class(const CohClass& x);
  static EModelElement from_monomial(int n, const GMonomial& m, const Rat& coeff = 1);
  static EModelElement generator(int n, int i, int j);

  int n() const { return n_; }
  const std::map<Key, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Adds coeff * word * G_mono, normalizing the word.
  void add_term(const GMonomial& mono, const TensorWord& word, const Rat& coeff);

  EModelElement& operator+=(const EModelElement& other);
  EModelElement& operator-=(const EModelElement& other);
  friend EModelElement operator+(EModelElement a, const EModelElement& b) { return a += b; }
  friend EModelElement operator-(EModelElement a, const EModelElement& b) { return a -= b; }
  friend bool operator==(const EModelElement&, const EModelElement&) = default;

 private:
  int n_ = 0;
  std::map<Key, Rat> terms_;
};

std::string to_string(const EModelElement& x);

EModelElement multiply(const EModelElement& x, const EModelElement& y);

/// The differential of bidegree (2, -1). `delta` is diagonal_class(g).
EModelElement d2(const EModelElement& x, const CohClass& delta);
EModelElement d2(const EModelElement& x, int g);

/// Canonical ordered basis of E^{p,q}: monomials in g_basis order, and for
/// each monomial the normalized degree-p words in lexicographic order.
class EBasis {
 public:
  EBasis(int g, int n, int p, int q);

  int g() const { return g_; }
  int n() const { return n_; }
  int p() const { return p_; }
  int q() const { return q_; }
  std::size_t size() const { return keys_.size(); }
  const EModelElement::Key& key(std::size_t idx) const { return keys_[idx]; }
  const std::vector<EModelElement::Key>& keys() const { return keys_; }
  std::size_t index_of(const EModelElement::Key& k) const;

  EModelElement element(std::size_t idx) const;
  /// Coordinates of a homogeneous element of this bidegree.
  RatVector coordinates(const EModelElement& x) const;

 private:
  int g_, n_, p_, q_;
  std::vector<EModelElement::Key> keys_;
  std::map<EModelElement::Key, std::size_t> index_;
};

/// dim E^{p,q} = sum over normal monomials of length q of dim H^p(C^{n-q}).
std::size_t e_dimension(int g, int n, int p, int q);

/// Matrix of d2 : E^{p,q} -> E^{p+2,q-1} in the EBasis coordinates.
RatMatrix d2_matrix(int g, int n, int p, int q);

/// E_3^{p,q} = ker d2^{p,q} / im d2^{p-2,q+1}.
std::size_t e3_dimension(int g, int n, int p, int q);

/// dim H^k(F(C, n); Q) for k = 0..kmax, read off the E_3 page.
std::vector<std::size_t> config_cohomology_dims(int g, int n, int kmax = 2);

/// Matrix on E^{p,q} of the action induced by a mapping class with
/// symplectic matrix z: on each H^1 tensor factor via the inverse transpose,
/// trivially on units, points and every G_ij.
RatMatrix group_action_on_E(const SpMatrix& z, int p, int q, int g, int n);

/// Action on an arbitrary class of H^*(C^n).
CohClass act_on_class(const RatMatrix& h1_action, const CohClass& x);
EModelElement act_on_element(const RatMatrix& h1_action, const EModelElement& x);

/// The pieces of the E_3 page feeding H^2(F(C, n)).
struct DegreeTwoPieces {
  std::size_t h2_power = 0;      // dim H^2(C^n)
  std::size_t image_d01 = 0;     // rank d2^{0,1}
  std::size_t w = 0;             // dim H^2(C^n) / im d2^{0,1}
  std::size_t v = 0;             // dim ker d2^{1,1}
  std::size_t kernel_d02 = 0;    // dim ker d2^{0,2}
};
DegreeTwoPieces degree_two_pieces(int g, int n);

}  // namespace hypercl
