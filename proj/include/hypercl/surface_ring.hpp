#pragma once

// Rational cohomology of a closed genus-g surface C and of its powers C^n.
//
// H^*(C) has basis 1, a_1..a_g, b_1..b_g, w (w = class of a point) with
// a_i b_i = w = -b_i a_i and all other products of positive-degree classes
// zero. H^*(C^n) is the graded tensor power; products carry Koszul signs.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypercl/linalg.hpp"

namespace hypercl {

struct SurfaceBasisVector {
  // Declaration order is the basis order: UNIT < A(1..g) < B(1..g) < TOP.
  enum class Kind : std::uint8_t { Unit, A, B, Top };

  Kind kind = Kind::Unit;
  std::uint8_t index = 0;  // 1..g for A and B, 0 otherwise

  static constexpr SurfaceBasisVector unit() { return {Kind::Unit, 0}; }
  static constexpr SurfaceBasisVector a(int i) { return {Kind::A, static_cast<std::uint8_t>(i)}; }
  static constexpr SurfaceBasisVector b(int i) { return {Kind::B, static_cast<std::uint8_t>(i)}; }
  static constexpr SurfaceBasisVector top() { return {Kind::Top, 0}; }

  int degree() const {
    switch (kind) {
      case Kind::Unit: return 0;
      case Kind::Top: return 2;
      default: return 1;
    }
  }

  friend constexpr auto operator<=>(const SurfaceBasisVector&, const SurfaceBasisVector&) = default;
};

std::string to_string(const SurfaceBasisVector& v);

/// The 2g + 2 basis classes of H^*(C), in basis order.
std::vector<SurfaceBasisVector> surface_basis(int g);

/// Product of two basis classes of H^*(C): nullopt when zero, otherwise the
/// sign and the resulting basis class.
std::optional<std::pair<int, SurfaceBasisVector>> multiply_basis(SurfaceBasisVector x,
                                                                 SurfaceBasisVector y);

using TensorWord = std::vector<SurfaceBasisVector>;

int degree(const TensorWord& w);
std::string to_string(const TensorWord& w);

/// Cup product of two tensor words of equal length with the Koszul sign
/// (-1)^{sum_{j<i} deg y_j deg x_i}. nullopt when the product vanishes.
std::optional<std::pair<int, TensorWord>> cup_words(const TensorWord& x, const TensorWord& y);

/// Finitely supported rational combination of length-n tensor words.
class CohClass {
 public:
  CohClass() = default;
  explicit CohClass(int n) : n_(n) {}
  CohClass(int n, std::map<TensorWord, Rat> terms);

  static CohClass unit(int n);
  static CohClass word(TensorWord w, const Rat& coeff = 1);

  int n() const { return n_; }
  const std::map<TensorWord, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rat coefficient(const TensorWord& w) const;
  void add_term(const TensorWord& w, const Rat& coeff);

  /// Part of the class living in total degree k.
  CohClass homogeneous_part(int k) const;
  /// Part whose per-slot degrees equal `pattern`.
  CohClass kunneth_component(const std::vector<int>& pattern) const;

  CohClass& operator+=(const CohClass& other);
  CohClass& operator-=(const CohClass& other);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(const Rat& s, const CohClass& x);
  friend bool operator==(const CohClass&, const CohClass&) = default;

 private:
  int n_ = 0;
  std::map<TensorWord, Rat> terms_;
};

std::string to_string(const CohClass& x);

CohClass cup(const CohClass& x, const CohClass& y);

/// Coefficient of w (x) ... (x) w, the top class of C^n.
Rat integrate(const CohClass& x);

/// Poincare dual of the diagonal in C x C, obtained by solving
/// integrate((x * y) . D) = integrate_C(x . y) over all basis pairs.
CohClass diagonal_class(int g);

/// H^1 (x) H^1 component of the diagonal class.
CohClass delta_prime(int g);

/// pr_i^* : H^*(C) -> H^*(C^n), slots are 1-based.
CohClass pr_pullback(int i, const CohClass& x, int n);
/// pr_ij^* : H^*(C^2) -> H^*(C^n) for 1 <= i < j <= n.
CohClass pr_pair_pullback(int i, int j, const CohClass& x, int n);

/// All degree-k words of length n in lexicographic basis order.
std::vector<TensorWord> kunneth_basis(int g, int n, int k);

/// dim H^k(C^n): coefficient of t^k in (1 + 2g t + t^2)^n.
std::size_t betti_power(int g, int n, int k);

using WordIndex = std::map<TensorWord, std::size_t>;
WordIndex index_words(const std::vector<TensorWord>& basis);

/// Coordinates of x in the given ordered word basis. Throws if x has a word
/// outside the basis.
RatVector coordinates(const CohClass& x, const std::vector<TensorWord>& basis);
RatVector coordinates(const CohClass& x, const WordIndex& index);
CohClass from_coordinates(int n, const std::vector<TensorWord>& basis, std::span<const Rat> v);

}  // namespace hypercl
