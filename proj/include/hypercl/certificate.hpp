#pragma once

// Linear independence of psi classes and boundary divisors, certified by
// ordered elimination over test-family degree rows.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypercl/boundary.hpp"
#include "hypercl/linalg.hpp"

namespace hypercl {

/// Degree of a divisor on a test family. Formal values are known only up to
/// sign and are never compared by magnitude.
struct DegreeValue {
  enum class Kind { Exact, FormalPositive, FormalNonneg };

  Kind kind = Kind::Exact;
  Rat value;           // exact value, or positive multiplier of the symbol
  std::string symbol;  // empty for Exact

  static DegreeValue exact(Rat v) { return {Kind::Exact, std::move(v), {}}; }
  static DegreeValue positive(std::string sym, Rat mult = 1) {
    return {Kind::FormalPositive, std::move(mult), std::move(sym)};
  }
  static DegreeValue nonneg(std::string sym) { return {Kind::FormalNonneg, Rat(1), std::move(sym)}; }

  bool nonvanishing() const;
  bool is_zero() const { return kind == Kind::Exact && sgn(value) == 0; }
  /// Value with every formal symbol replaced by 1.
  Rat numeric() const;

  friend bool operator==(const DegreeValue&, const DegreeValue&) = default;
};

std::string to_string(const DegreeValue& v);
DegreeValue parse_degree(const std::string& text);

struct DegreeRow {
  std::string family_id;
  std::map<DivisorLabel, DegreeValue> support;
  std::string anchor;
};

enum class Justification { DegreeRow, BaseCurveClass, InteriorRestriction };
std::string to_string(Justification j);

struct EliminationStep {
  DegreeRow row;
  DivisorLabel isolates;
  /// Set for an equality assertion isolates == equated_with.
  std::optional<DivisorLabel> equated_with;
  Justification justification = Justification::DegreeRow;
};

std::vector<EliminationStep> builtin_certificate(int g, int n);

/// Relabels every label of every step, canonicalizing in `ctx`.
std::vector<EliminationStep> permute_certificate(const std::vector<EliminationStep>& steps,
                                                 const std::vector<int>& perm,
                                                 const BoundaryContext& ctx);

enum class FailureReason {
  ResidualTooLarge,
  ZeroDegree,
  Uncovered,
  CyclicEquality,
  DuplicateElimination,
  UnknownLabel,
};
std::string to_string(FailureReason r);

struct Verdict {
  bool certified = false;
  std::optional<std::size_t> failed_step;  // 0-based
  std::optional<FailureReason> reason;
  std::string detail;
  std::vector<std::string> log;
  /// Generators eliminated, keyed by the step that eliminated them.
  std::map<DivisorLabel, std::size_t> eliminated_by;
};

Verdict check_certificate(const std::vector<EliminationStep>& steps,
                          const std::vector<DivisorLabel>& generators);

/// Rank of the DEGREE_ROW supports with formal symbols set to 1.
std::size_t numeric_rank_sanity(const std::vector<EliminationStep>& steps);

/// One step per line: family | isolates | support(label=value,...) | justification | anchor.
std::string serialize_certificate(const std::vector<EliminationStep>& steps);
/// Blank lines and lines starting with '#' are skipped. Throws std::invalid_argument.
std::vector<EliminationStep> parse_certificate(const std::string& text);

}  // namespace hypercl
