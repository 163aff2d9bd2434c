#include "hypercl/linalg.hpp"

#include <algorithm>
#include <ostream>
#include <utility>

namespace hypercl {

Rat make_rat(long num, long den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw DimensionError("RatMatrix: entry count does not match shape");
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("RatMatrix: ragged initializer");
    for (long v : r) entries_.emplace_back(v);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(std::size_t rows, std::span<const RatVector> columns) {
  RatMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("from_columns: length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(std::size_t cols, std::span<const RatVector> rows) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_rows: length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.entries_.begin() + r * cols);
  }
  return m;
}

RatVector RatMatrix::column(std::size_t c) const {
  RatVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0) t(c, r) = (*this)(r, c);
  return t;
}

bool RatMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

std::size_t RatMatrix::nonzeros() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const Rat& x) { return sgn(x) != 0; }));
}

RatVector RatMatrix::apply(std::span<const Rat> v) const {
  if (v.size() != cols_) throw DimensionError("apply: vector length mismatch");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rat acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rat& a = (*this)(r, c);
      if (sgn(a) != 0 && sgn(v[c]) != 0) acc += a * v[c];
    }
    out[r] = acc;
  }
  return out;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  RatMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rat& bkj = b(k, j);
        if (sgn(bkj) != 0) out(i, j) += aik * bkj;
      }
    }
  return out;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shapes differ");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionError("matrix difference: shapes differ");
  RatMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

namespace {

// Shared elimination kernel. With `full` set, clears above the pivot too and
// scales pivots to one (RREF); otherwise stops at row-echelon form.
std::size_t eliminate(std::vector<Rat>& a, std::size_t rows, std::size_t cols, bool full,
                      std::vector<std::size_t>* pivots) {
  std::size_t prow = 0;
  std::vector<std::size_t> support;
  Rat factor, tmp;
  for (std::size_t c = 0; c < cols && prow < rows; ++c) {
    std::size_t found = rows;
    for (std::size_t r = prow; r < rows; ++r)
      if (sgn(a[r * cols + c]) != 0) {
        found = r;
        break;
      }
    if (found == rows) continue;
    if (found != prow)
      std::swap_ranges(a.begin() + found * cols, a.begin() + (found + 1) * cols,
                       a.begin() + prow * cols);
    Rat* p = a.data() + prow * cols;
    if (full && p[c] != 1) {
      Rat inv = 1 / p[c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(p[j]) != 0) p[j] *= inv;
    }
    support.clear();
    for (std::size_t j = c + 1; j < cols; ++j)
      if (sgn(p[j]) != 0) support.push_back(j);
    const std::size_t begin = full ? 0 : prow + 1;
    for (std::size_t r = begin; r < rows; ++r) {
      if (r == prow) continue;
      Rat* q = a.data() + r * cols;
      if (sgn(q[c]) == 0) continue;
      factor = full ? q[c] : q[c] / p[c];
      for (std::size_t j : support) {
        tmp = factor * p[j];
        q[j] -= tmp;
      }
      q[c] = 0;
    }
    if (pivots) pivots->push_back(c);
    ++prow;
  }
  return prow;
}

}  // namespace

RrefResult rref(const RatMatrix& m) {
  std::vector<Rat> a = m.entries();
  RrefResult out;
  out.rank = eliminate(a, m.rows(), m.cols(), true, &out.pivot_columns);
  out.reduced = RatMatrix(m.rows(), m.cols(), std::move(a));
  return out;
}

std::size_t rank(const RatMatrix& m) {
  // Eliminating along the shorter dimension keeps the work proportional to
  // min(rows, cols)^2 * max(rows, cols).
  if (m.rows() > m.cols()) {
    RatMatrix t = m.transpose();
    std::vector<Rat> a = t.entries();
    return eliminate(a, t.rows(), t.cols(), false, nullptr);
  }
  std::vector<Rat> a = m.entries();
  return eliminate(a, m.rows(), m.cols(), false, nullptr);
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : red.pivot_columns) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RatVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < red.rank; ++i) {
      const Rat& e = red.reduced(i, f);
      if (sgn(e) != 0) v[red.pivot_columns[i]] = -e;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix stack_rows(std::span<const RatMatrix> ms) {
  if (ms.empty()) return {};
  const std::size_t cols = ms.front().cols();
  std::size_t rows = 0;
  for (const auto& m : ms) {
    if (m.cols() != cols) throw DimensionError("stack_rows: column counts differ");
    rows += m.rows();
  }
  std::vector<Rat> entries;
  entries.reserve(rows * cols);
  for (const auto& m : ms) entries.insert(entries.end(), m.entries().begin(), m.entries().end());
  return RatMatrix(rows, cols, std::move(entries));
}

RatMatrix kronecker(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Rat& x = a(ia, ja);
      if (sgn(x) == 0) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          const Rat& y = b(ib, jb);
          if (sgn(y) != 0) out(ia * b.rows() + ib, ja * b.cols() + jb) = x * y;
        }
    }
  return out;
}

bool column_span_contains(const RatMatrix& span, const RatMatrix& sub) {
  if (span.rows() != sub.rows()) throw DimensionError("column_span_contains: row counts differ");
  RatMatrix joined(span.rows(), span.cols() + sub.cols());
  for (std::size_t r = 0; r < span.rows(); ++r) {
    for (std::size_t c = 0; c < span.cols(); ++c) joined(r, c) = span(r, c);
    for (std::size_t c = 0; c < sub.cols(); ++c) joined(r, span.cols() + c) = sub(r, c);
  }
  return rank(joined) == rank(span);
}

std::vector<RatVector> common_fixed_subspace(std::span<const RatMatrix> actions,
                                             std::size_t dim) {
  // Columns of `current` span the fixed space found so far.
  RatMatrix current = RatMatrix::identity(dim);
  for (const auto& act : actions) {
    if (act.rows() != dim || act.cols() != dim)
      throw DimensionError("common_fixed_subspace: action has wrong shape");
    if (current.cols() == 0) break;
    RatMatrix moved = act * current - current;
    std::vector<RatVector> coeffs = kernel_basis(moved);
    RatMatrix c = RatMatrix::from_columns(current.cols(), coeffs);
    current = current * c;
  }
  std::vector<RatVector> out;
  out.reserve(current.cols());
  for (std::size_t c = 0; c < current.cols(); ++c) out.push_back(current.column(c));
  return out;
}

}  // namespace hypercl
