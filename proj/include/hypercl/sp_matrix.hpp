#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypercl/linalg.hpp"

namespace hypercl {

/// Integer 2g x 2g matrix acting on H_1(C; Z) in the interleaved basis
/// (a_1, b_1, a_2, b_2, ..., a_g, b_g).
class SpMatrix {
 public:
  SpMatrix() = default;
  SpMatrix(int g, std::vector<long> entries);

  static SpMatrix identity(int g);

  int genus() const { return g_; }
  std::size_t size() const { return static_cast<std::size_t>(2 * g_); }
  long operator()(std::size_t r, std::size_t c) const { return entries_[r * size() + c]; }

  RatMatrix to_rat() const;

  /// Z J Z^t == J for J = diag(J2, ..., J2), J2 = [[0, -1], [1, 0]].
  bool preserves_symplectic_form() const;

  friend bool operator==(const SpMatrix&, const SpMatrix&) = default;

 private:
  int g_ = 0;
  std::vector<long> entries_;
};

/// Block-diagonal symplectic form diag(J2, ..., J2).
RatMatrix symplectic_form(int g);

/// Matrix of the induced action on H^1(C; Q) = Hom(H_1, Q): the inverse
/// transpose of Z, still in interleaved coordinates.
RatMatrix h1_cohomology_action(const SpMatrix& z);

/// Exact inverse; throws DimensionError for singular or non-square input.
RatMatrix inverse(const RatMatrix& m);

}  // namespace hypercl
