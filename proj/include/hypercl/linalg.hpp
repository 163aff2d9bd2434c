#pragma once

// Dense exact linear algebra over Q.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hypercl {

/// Arbitrary-precision rational. gmpxx keeps every value canonical
/// (positive denominator, reduced) after each arithmetic operation.
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

/// Builds num/den in lowest terms; den must be nonzero.
Rat make_rat(long num, long den = 1);
std::string to_string(const Rat& x);

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Row-major dense matrix of rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);
  RatMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RatMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static RatMatrix from_columns(std::size_t rows, std::span<const RatVector> columns);
  static RatMatrix from_rows(std::size_t cols, std::span<const RatVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Rat& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  RatVector column(std::size_t c) const;
  const std::vector<Rat>& entries() const { return entries_; }

  RatMatrix transpose() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  RatVector apply(std::span<const Rat> v) const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> entries_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

struct RrefResult {
  RatMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row-echelon form. Pivot rule: columns are scanned left to right
/// and the first row at or below the current position with a nonzero entry
/// is taken as pivot row.
RrefResult rref(const RatMatrix& m);

/// Rank by forward elimination only (no back substitution).
std::size_t rank(const RatMatrix& m);

/// Basis of {v : m v = 0}. One vector per free column f, carrying 1 at f
/// and zero at every other free column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Vertical concatenation; all inputs must share a column count.
RatMatrix stack_rows(std::span<const RatMatrix> ms);

/// Kronecker product with row index a_row * b.rows() + b_row.
RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b);

/// True when every column of `sub` lies in the column span of `span`.
bool column_span_contains(const RatMatrix& span, const RatMatrix& sub);

/// Basis of {x in Q^dim : A x = x for every A in actions}. Works by successive
/// restriction, so each step only solves inside the current fixed subspace.
/// The result spans the same space as kernel_basis(stack of (A - I)).
std::vector<RatVector> common_fixed_subspace(std::span<const RatMatrix> actions,
                                             std::size_t dim);

}  // namespace hypercl
