#pragma once

// Reference computations that avoid the production code paths they check.

#include <cstddef>

namespace hypercl::oracle {

struct ArnoldQuotient {
  std::size_t dimension = 0;              // dim of degree-q part of exterior algebra / Arnold ideal
  bool normal_monomials_independent = false;
  std::size_t normal_monomial_count = 0;
};

/// Works inside the full exterior algebra on the C(n,2) generators: row
/// reduces the degree-q part of the ideal generated by the three-term
/// relations, then checks the normal-form monomials against the quotient.
ArnoldQuotient arnold_quotient(int n, int q);

/// Boundary divisor count by listing all (kind, genus split, marking set)
/// triples and merging the symmetric pairs explicitly.
std::size_t boundary_count_by_hand(int g, int n, bool symmetric_dedup);

}  // namespace hypercl::oracle
