#include "hypercl/hyperelliptic.hpp"

#include <stdexcept>

#include "hypercl/surface_ring.hpp"
#include "hypercl/totaro.hpp"

namespace hypercl {

SpMatrix::SpMatrix(int g, std::vector<long> entries) : g_(g), entries_(std::move(entries)) {
  if (g < 1) throw std::invalid_argument("SpMatrix: genus must be positive");
  if (entries_.size() != size() * size()) throw DimensionError("SpMatrix: expected 2g x 2g entries");
}

SpMatrix SpMatrix::identity(int g) {
  std::vector<long> e(4 * g * g, 0);
  for (int i = 0; i < 2 * g; ++i) e[i * 2 * g + i] = 1;
  return SpMatrix(g, std::move(e));
}

RatMatrix SpMatrix::to_rat() const {
  std::vector<Rat> e(entries_.begin(), entries_.end());
  return RatMatrix(size(), size(), std::move(e));
}

bool SpMatrix::preserves_symplectic_form() const {
  const RatMatrix z = to_rat();
  const RatMatrix j = symplectic_form(g_);
  return z * j * z.transpose() == j;
}

RatMatrix symplectic_form(int g) {
  RatMatrix j(2 * g, 2 * g);
  for (int h = 0; h < g; ++h) {
    j(2 * h, 2 * h + 1) = -1;
    j(2 * h + 1, 2 * h) = 1;
  }
  return j;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult red = rref(aug);
  if (red.rank < n || (n > 0 && red.pivot_columns[n - 1] != n - 1))
    throw DimensionError("inverse: matrix is singular");
  RatMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = red.reduced(r, n + c);
  return out;
}

RatMatrix h1_cohomology_action(const SpMatrix& z) { return inverse(z.to_rat().transpose()); }

namespace {

// Places `block` (k x k, row-major) at offset `at` inside the 2g identity.
SpMatrix embed_block(int g, int at, int k, const std::vector<long>& block) {
  std::vector<long> e(4 * g * g, 0);
  const int dim = 2 * g;
  for (int i = 0; i < dim; ++i) e[i * dim + i] = 1;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) e[(at + r) * dim + at + c] = block[r * k + c];
  return SpMatrix(g, std::move(e));
}

const std::vector<long> kTwistA{1, 1, 0, 1};
const std::vector<long> kTwistB{1, 0, -1, 1};
const std::vector<long> kTwistC{1, 0, 0, 0, -1, 1, 1, 0, 0, 0, 1, 0, 1, 0, -1, 1};

void require_same_size(std::span<const SpMatrix> mats) {
  if (mats.empty()) throw std::invalid_argument("invariants: empty generator list");
  for (const auto& z : mats)
    if (z.genus() != mats.front().genus()) throw DimensionError("invariants: generator sizes differ");
}

RatMatrix columns_of(std::size_t rows, const std::vector<RatVector>& cols) {
  return RatMatrix::from_columns(rows, cols);
}

void verify_fixed(const std::vector<RatMatrix>& actions, const std::vector<RatVector>& basis,
                  const char* where) {
  for (const auto& a : actions)
    for (const auto& v : basis)
      if (a.apply(v) != v) throw std::logic_error(std::string(where) + ": basis vector is not fixed");
}

}  // namespace

std::vector<SpMatrix> generators(int g) {
  if (g < 2) throw std::invalid_argument("generators: genus must be at least 2");
  std::vector<SpMatrix> out(2 * g + 1);
  out[0] = embed_block(g, 0, 2, kTwistB);
  out[2 * g] = embed_block(g, 2 * g - 2, 2, kTwistB);
  for (int l = 1; l <= g; ++l) out[2 * l - 1] = embed_block(g, 2 * l - 2, 2, kTwistA);
  for (int l = 1; l <= g - 1; ++l) out[2 * l] = embed_block(g, 2 * l - 2, 4, kTwistC);
  return out;
}

InvariantReport fixed_vectors(std::span<const SpMatrix> mats) {
  require_same_size(mats);
  std::vector<RatMatrix> actions;
  for (const auto& z : mats) actions.push_back(z.to_rat());
  InvariantReport r;
  r.space_label = "H^1(C)";
  r.basis = common_fixed_subspace(actions, mats.front().size());
  r.dimension = r.basis.size();
  verify_fixed(actions, r.basis, "fixed_vectors");
  return r;
}

InvariantReport fixed_bilinear(std::span<const SpMatrix> mats) {
  require_same_size(mats);
  std::vector<RatMatrix> actions;
  for (const auto& z : mats) {
    const RatMatrix q = z.to_rat();
    actions.push_back(kronecker(q, q));
  }
  const std::size_t d = mats.front().size();
  InvariantReport r;
  r.space_label = "H^1(C)(x)H^1(C)";
  r.basis = common_fixed_subspace(actions, d * d);
  r.dimension = r.basis.size();
  verify_fixed(actions, r.basis, "fixed_bilinear");
  return r;
}

RatMatrix action_on_power(const SpMatrix& z, int n, int k) {
  const auto basis = kunneth_basis(z.genus(), n, k);
  const auto index = index_words(basis);
  const RatMatrix h1 = h1_cohomology_action(z);
  RatMatrix m(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const CohClass image = act_on_class(h1, CohClass::word(basis[col]));
    for (const auto& [w, c] : image.terms()) m(index.at(w), col) = c;
  }
  return m;
}

namespace {

std::vector<RatMatrix> power_actions(int g, int n, int k) {
  std::vector<RatMatrix> out;
  for (const auto& z : generators(g)) out.push_back(action_on_power(z, n, k));
  return out;
}

std::vector<RatVector> point_classes(int g, int n, const WordIndex& index) {
  std::vector<RatVector> out;
  const CohClass point = CohClass::word({SurfaceBasisVector::top()});
  (void)g;
  for (int i = 1; i <= n; ++i) out.push_back(coordinates(pr_pullback(i, point, n), index));
  return out;
}

}  // namespace

PowerInvariants invariants_h2_cn(int g, int n) {
  if (g < 2 || n < 1) throw std::invalid_argument("invariants_h2_cn: need g >= 2, n >= 1");
  const auto basis = kunneth_basis(g, n, 2);
  const auto index = index_words(basis);
  const auto actions = power_actions(g, n, 2);

  PowerInvariants out;
  out.report.space_label = "H^2(C^n)";
  out.report.basis = common_fixed_subspace(actions, basis.size());
  out.report.dimension = out.report.basis.size();
  verify_fixed(actions, out.report.basis, "invariants_h2_cn");

  auto expected = point_classes(g, n, index);
  const CohClass delta = diagonal_class(g);
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) expected.push_back(coordinates(pr_pair_pullback(i, j, delta, n), index));

  const RatMatrix found = columns_of(basis.size(), out.report.basis);
  const RatMatrix want = columns_of(basis.size(), expected);
  out.spans_expected = rank(want) == expected.size() && rank(found) == out.report.dimension &&
                       column_span_contains(found, want) && column_span_contains(want, found);
  return out;
}

ConfigInvariants invariants_h2_config(int g, int n) {
  if (g < 2 || n < 1) throw std::invalid_argument("invariants_h2_config: need g >= 2, n >= 1");
  const auto basis = kunneth_basis(g, n, 2);
  const auto index = index_words(basis);
  const std::size_t dim = basis.size();
  const auto gens = generators(g);
  const auto actions = power_actions(g, n, 2);

  // W = H^2(C^n) / U with U = im d2^{0,1}, coordinatized by the non-pivot
  // columns of the reduced generators of U.
  RrefResult u;
  if (n >= 2) u = rref(d2_matrix(g, n, 0, 1).transpose());
  std::vector<bool> is_pivot(dim, false);
  for (auto c : u.pivot_columns) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < dim; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  auto reduce = [&](RatVector x) {
    for (std::size_t r = 0; r < u.rank; ++r) {
      const Rat f = x[u.pivot_columns[r]];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < dim; ++c)
        if (sgn(u.reduced(r, c)) != 0) x[c] -= f * u.reduced(r, c);
    }
    return x;
  };
  auto to_w = [&](const RatVector& x) {
    RatVector red = reduce(x), out(free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) out[k] = red[free_cols[k]];
    return out;
  };

  std::vector<RatMatrix> w_actions;
  for (const auto& a : actions) {
    std::vector<RatVector> cols;
    for (auto j : free_cols) cols.push_back(to_w(a.column(j)));
    w_actions.push_back(RatMatrix::from_columns(free_cols.size(), cols));
  }
  const auto w_fixed = common_fixed_subspace(w_actions, free_cols.size());

  ConfigInvariants out;
  out.report.space_label = "H^2(F(C,n))";
  out.w_invariants = w_fixed.size();
  for (const auto& v : w_fixed) {
    RatVector lift(dim);
    for (std::size_t k = 0; k < free_cols.size(); ++k) lift[free_cols[k]] = v[k];
    for (const auto& a : actions) {
      RatVector moved = a.apply(lift);
      for (std::size_t c = 0; c < dim; ++c) moved[c] -= lift[c];
      for (const auto& x : reduce(std::move(moved)))
        if (sgn(x) != 0) throw std::logic_error("invariants_h2_config: W representative is not fixed");
    }
    out.report.basis.push_back(std::move(lift));
  }

  std::vector<RatVector> points;
  for (const auto& p : point_classes(g, n, index)) points.push_back(to_w(p));
  const RatMatrix point_mat = columns_of(free_cols.size(), points);
  out.points_form_basis =
      out.w_invariants == static_cast<std::size_t>(n) && rank(point_mat) == static_cast<std::size_t>(n) &&
      column_span_contains(columns_of(free_cols.size(), w_fixed), point_mat);

  if (n >= 2) {
    std::vector<RatMatrix> e_actions;
    for (const auto& z : gens) e_actions.push_back(group_action_on_E(z, 1, 1, g, n));
    const std::size_t e_dim = e_dimension(g, n, 1, 1);
    const auto fixed = common_fixed_subspace(e_actions, e_dim);
    const RatMatrix f = columns_of(e_dim, fixed);
    const RatMatrix image = d2_matrix(g, n, 1, 1) * f;
    for (const auto& k : kernel_basis(image)) {
      RatVector v = f.apply(k);
      out.report.basis.push_back(std::move(v));
      ++out.v_invariants;
    }
    verify_fixed(e_actions, {out.report.basis.end() - out.v_invariants, out.report.basis.end()},
                 "invariants_h2_config");
  }
  if (n >= 3) out.kernel_d02 = e_dimension(g, n, 0, 2) - rank(d2_matrix(g, n, 0, 2));

  out.report.dimension = out.w_invariants + out.v_invariants;
  return out;
}

}  // namespace hypercl
