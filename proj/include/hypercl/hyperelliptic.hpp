#pragma once

// Birman-Hilden generators of the hyperelliptic mapping class group on
// H_1(C; Z), and the invariant subspaces they cut out in H^1(C),
// H^1(C)^{(x)2}, H^2(C^n) and H^2(F(C, n)).

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hypercl/linalg.hpp"
#include "hypercl/sp_matrix.hpp"

namespace hypercl {

/// The 2g + 1 generator matrices Z_1, ..., Z_{2g+1}. Throws for g < 2.
std::vector<SpMatrix> generators(int g);

struct InvariantReport {
  std::string space_label;
  std::size_t dimension = 0;
  std::vector<RatVector> basis;
};

/// Common fixed vectors of the matrices acting on Q^{2g}.
InvariantReport fixed_vectors(std::span<const SpMatrix> mats);

/// Matrices P (flattened row-major) with Z P Z^t = P for every Z.
InvariantReport fixed_bilinear(std::span<const SpMatrix> mats);

/// Matrix of the action of z on H^k(C^n) in the kunneth_basis(g, n, k) order.
RatMatrix action_on_power(const SpMatrix& z, int n, int k);

struct PowerInvariants {
  InvariantReport report;     // coordinates in kunneth_basis(g, n, 2)
  bool spans_expected = false;  // same span as the point classes and pulled-back diagonals
};

/// Generator invariants in H^2(C^n).
PowerInvariants invariants_h2_cn(int g, int n);

struct ConfigInvariants {
  InvariantReport report;     // W-part representatives in H^2(C^n) coordinates, then V-part in E^{1,1}
  std::size_t w_invariants = 0;
  std::size_t v_invariants = 0;
  std::size_t kernel_d02 = 0;
  bool points_form_basis = false;  // images of the point classes form a basis of W^inv
};

/// Generator invariants in H^2(F(C, n)) read off the graded pieces
/// W = H^2(C^n) / im d2^{0,1} and V = ker d2^{1,1}.
ConfigInvariants invariants_h2_config(int g, int n);

}  // namespace hypercl
