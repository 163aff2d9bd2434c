#pragma once

// Generators of the rational class group of the compactified pointed
// hyperelliptic moduli space: psi classes and boundary divisors.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercl/linalg.hpp"

namespace hypercl {

class InvalidLabel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Sorted subset of the markings {1..n}.
using MarkSet = std::vector<int>;

/// Subset order used for canonical representatives: by size, then lexicographic.
bool subset_less(const MarkSet& a, const MarkSet& b);
MarkSet complement(const MarkSet& s, int n);

struct DivisorLabel {
  // Declaration order is the listing order.
  enum class Kind { Psi, EtaIrr, Delta, Eta };

  Kind kind = Kind::EtaIrr;
  int index = 0;  // marking for Psi, genus split otherwise
  MarkSet marks;

  static DivisorLabel psi(int i) { return {Kind::Psi, i, {}}; }
  static DivisorLabel eta_irr() { return {Kind::EtaIrr, 0, {}}; }
  static DivisorLabel delta(int i, MarkSet s) { return {Kind::Delta, i, std::move(s)}; }
  static DivisorLabel eta(int i, MarkSet s) { return {Kind::Eta, i, std::move(s)}; }

  friend bool operator==(const DivisorLabel&, const DivisorLabel&) = default;
  friend std::strong_ordering operator<=>(const DivisorLabel& a, const DivisorLabel& b);
};

using FormalSum = std::map<DivisorLabel, Rat>;

struct BoundaryContext {
  int g = 2;
  int n = 0;
  bool symmetric_dedup = true;
};

/// Stable text form: psi_2, eta_irr, delta_1_empty, delta_0_1,3, eta_1_2.
std::string serialize(const DivisorLabel& l);
/// Inverse of serialize; throws InvalidLabel.
DivisorLabel parse_label(const std::string& text);

/// Checks index ranges against the context and picks the symmetric-level
/// representative. Throws InvalidLabel.
DivisorLabel canonicalize(const DivisorLabel& l, const BoundaryContext& ctx);

/// One canonical label per boundary divisor, sorted.
std::vector<DivisorLabel> enumerate_boundary(const BoundaryContext& ctx);

/// Closed-form count of enumerate_boundary(ctx).
std::size_t boundary_count_formula(const BoundaryContext& ctx);

/// PSI(1), ..., PSI(n).
std::vector<DivisorLabel> psi_labels(int n);
/// psi labels then boundary labels.
std::vector<DivisorLabel> class_group_generators(const BoundaryContext& ctx);

struct RankReport {
  int g = 0;
  int n = 0;
  bool symmetric_dedup = true;
  std::size_t num_psi = 0;
  std::size_t num_boundary = 0;
  std::size_t rank_cl = 0;
  std::size_t rank_pic_interior = 0;
  std::vector<DivisorLabel> labels;
  /// Set when the H^2(F(C, n)) invariant dimension was computed.
  std::optional<std::size_t> invariant_dimension;
  std::optional<bool> interior_matches_invariants;
};

RankReport rank_report(const BoundaryContext& ctx, bool check_invariants = false);

/// Boundary divisor of the ambient pointed moduli space of genus g curves.
struct AmbientLabel {
  bool irreducible = false;
  int index = 0;
  MarkSet marks;
};

/// Parses "D_irr" or "D_{i}_{I}" with I a comma list or "empty".
AmbientLabel parse_ambient(const std::string& text);

/// Restriction of an ambient boundary divisor to the hyperelliptic locus.
FormalSum pullback_from_ambient(const AmbientLabel& label, const BoundaryContext& ctx);

/// perm[k - 1] is the image of marking k.
DivisorLabel permute_markings(const DivisorLabel& l, const std::vector<int>& perm,
                              const BoundaryContext& ctx);

}  // namespace hypercl
