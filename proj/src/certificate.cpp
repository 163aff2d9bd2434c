#include "hypercl/certificate.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hypercl {

bool DegreeValue::nonvanishing() const {
  switch (kind) {
    case Kind::Exact: return sgn(value) != 0;
    case Kind::FormalPositive: return sgn(value) > 0;
    case Kind::FormalNonneg: return false;
  }
  return false;
}

Rat DegreeValue::numeric() const { return kind == Kind::FormalNonneg ? Rat(1) : value; }

std::string to_string(const DegreeValue& v) {
  switch (v.kind) {
    case DegreeValue::Kind::Exact: return v.value.get_str();
    case DegreeValue::Kind::FormalPositive:
      return (v.value == 1 ? std::string() : v.value.get_str() + "*") + "pos(" + v.symbol + ")";
    case DegreeValue::Kind::FormalNonneg: return "nonneg(" + v.symbol + ")";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
}

std::string inside(const std::string& text, const std::string& head) {
  if (text.size() < head.size() + 2 || text.rfind(head + "(", 0) != 0 || text.back() != ')')
    throw std::invalid_argument("malformed degree: " + text);
  return text.substr(head.size() + 1, text.size() - head.size() - 2);
}

Rat parse_rat(const std::string& text) {
  Rat r;
  if (text.empty() || r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  r.canonicalize();
  return r;
}

}  // namespace

DegreeValue parse_degree(const std::string& raw) {
  const std::string text = trim(raw);
  if (text.rfind("nonneg(", 0) == 0) return DegreeValue::nonneg(inside(text, "nonneg"));
  const auto pos = text.find("pos(");
  if (pos == std::string::npos) return DegreeValue::exact(parse_rat(text));
  Rat mult = 1;
  if (pos > 0) {
    if (text[pos - 1] != '*') throw std::invalid_argument("malformed degree: " + text);
    mult = parse_rat(text.substr(0, pos - 1));
  }
  if (sgn(mult) <= 0) throw std::invalid_argument("formal positive degree needs a positive multiplier");
  return DegreeValue::positive(inside(text.substr(pos), "pos"), mult);
}

std::string to_string(Justification j) {
  switch (j) {
    case Justification::DegreeRow: return "DEGREE_ROW";
    case Justification::BaseCurveClass: return "BASE_CURVE_CLASS";
    case Justification::InteriorRestriction: return "INTERIOR_RESTRICTION";
  }
  return "?";
}

std::string to_string(FailureReason r) {
  switch (r) {
    case FailureReason::ResidualTooLarge: return "RESIDUAL_TOO_LARGE";
    case FailureReason::ZeroDegree: return "ZERO_DEGREE";
    case FailureReason::Uncovered: return "UNCOVERED";
    case FailureReason::CyclicEquality: return "CYCLIC_EQUALITY";
    case FailureReason::DuplicateElimination: return "DUPLICATE_ELIMINATION";
    case FailureReason::UnknownLabel: return "UNKNOWN_LABEL";
  }
  return "?";
}

namespace {

std::vector<MarkSet> subsets_of_size(int n, std::size_t k) {
  std::vector<MarkSet> out;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    if (static_cast<std::size_t>(__builtin_popcount(bits)) != k) continue;
    MarkSet s;
    for (int m = 0; m < n; ++m)
      if (bits & (1u << m)) s.push_back(m + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string symbol_for(const DivisorLabel& l) { return "deg_" + serialize(l); }

}  // namespace

std::vector<EliminationStep> builtin_certificate(int g, int n) {
  if (g < 2 || n < 1) throw std::invalid_argument("builtin_certificate: need g >= 2, n >= 1");
  const BoundaryContext ctx{g, n, true};
  const auto boundary = enumerate_boundary(ctx);
  std::vector<EliminationStep> steps;

  for (int i = 1; i <= n; ++i) {
    const auto l = DivisorLabel::psi(i);
    steps.push_back({{"interior", {{l, DegreeValue::exact(1)}}, "interior-psi-basis"},
                     l, std::nullopt, Justification::InteriorRestriction});
  }

  const auto pairs = subsets_of_size(n, 2);
  for (const auto& p : pairs) {
    const auto l = DivisorLabel::delta(0, p);
    steps.push_back({{"rho1", {{l, DegreeValue::exact(1)}}, "rational-tail-pairs"},
                     l, std::nullopt, Justification::BaseCurveClass});
  }

  // Chain rows: the tail marked by J = I + {m}, m = max J, against the tail
  // marked by I, with the two-point tails {j, m}, j outside J.
  for (std::size_t size = 3; size <= static_cast<std::size_t>(n); ++size)
    for (const auto& big : subsets_of_size(n, size)) {
      const int m = big.back();
      const MarkSet small(big.begin(), big.end() - 1);
      DegreeRow row{"rho2", {}, "rational-tail-chain"};
      row.support[DivisorLabel::delta(0, small)] = DegreeValue::exact(-1);
      row.support[DivisorLabel::delta(0, big)] = DegreeValue::exact(1);
      for (int j = 1; j <= n; ++j)
        if (!std::binary_search(big.begin(), big.end(), j))
          row.support[DivisorLabel::delta(0, j < m ? MarkSet{j, m} : MarkSet{m, j})] = DegreeValue::exact(1);
      steps.push_back({std::move(row), DivisorLabel::delta(0, big), DivisorLabel::delta(0, small),
                       Justification::DegreeRow});
    }

  steps.push_back({{"F1", {{DivisorLabel::eta_irr(), DegreeValue::positive("deg_D_irr")}}, "irr-family"},
                   DivisorLabel::eta_irr(), std::nullopt, Justification::DegreeRow});

  auto side_terms = [&](DegreeRow& row) {
    row.support[DivisorLabel::eta_irr()] = DegreeValue::nonneg("side_eta_irr");
    for (const auto& p : pairs) {
      const auto l = DivisorLabel::delta(0, p);
      row.support[l] = DegreeValue::nonneg("side_" + serialize(l));
    }
  };
  for (const auto& l : boundary)
    if (l.kind == DivisorLabel::Kind::Eta) {
      DegreeRow row{"F" + std::to_string(2 * l.index + 1), {}, "eta-families"};
      side_terms(row);
      row.support[l] = DegreeValue::positive(symbol_for(l), 2);
      steps.push_back({std::move(row), l, std::nullopt, Justification::DegreeRow});
    }
  for (const auto& l : boundary)
    if (l.kind == DivisorLabel::Kind::Delta && l.index >= 1) {
      DegreeRow row{"F" + std::to_string(2 * l.index), {}, "delta-families"};
      side_terms(row);
      row.support[l] = DegreeValue::positive(symbol_for(l));
      steps.push_back({std::move(row), l, std::nullopt, Justification::DegreeRow});
    }
  return steps;
}

std::vector<EliminationStep> permute_certificate(const std::vector<EliminationStep>& steps,
                                                 const std::vector<int>& perm,
                                                 const BoundaryContext& ctx) {
  std::vector<EliminationStep> out;
  for (const auto& s : steps) {
    EliminationStep t = s;
    t.row.support.clear();
    for (const auto& [l, v] : s.row.support) t.row.support[permute_markings(l, perm, ctx)] = v;
    t.isolates = permute_markings(s.isolates, perm, ctx);
    if (s.equated_with) t.equated_with = permute_markings(*s.equated_with, perm, ctx);
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

class LabelUnion {
 public:
  DivisorLabel find(const DivisorLabel& l) {
    auto it = parent_.find(l);
    if (it == parent_.end() || it->second == l) return l;
    DivisorLabel root = find(it->second);
    parent_[l] = root;
    return root;
  }
  void join(const DivisorLabel& a, const DivisorLabel& b) {
    parent_.try_emplace(a, a);
    parent_.try_emplace(b, b);
    parent_[find(a)] = find(b);
  }
  std::vector<DivisorLabel> members(const DivisorLabel& l) {
    std::vector<DivisorLabel> out{l};
    const DivisorLabel root = find(l);
    std::vector<DivisorLabel> keys;
    for (const auto& [k, _] : parent_) keys.push_back(k);
    for (const auto& k : keys)
      if (!(k == l) && find(k) == root) out.push_back(k);
    return out;
  }

 private:
  std::map<DivisorLabel, DivisorLabel> parent_;
};

}  // namespace

Verdict check_certificate(const std::vector<EliminationStep>& steps,
                          const std::vector<DivisorLabel>& generators) {
  Verdict v;
  const std::set<DivisorLabel> gens(generators.begin(), generators.end());
  std::set<DivisorLabel> targeted;
  for (const auto& s : steps) {
    targeted.insert(s.isolates);
    if (s.equated_with) targeted.insert(*s.equated_with);
  }
  LabelUnion chains;

  auto fail = [&](std::size_t k, FailureReason r, std::string detail) {
    v.certified = false;
    v.failed_step = k;
    v.reason = r;
    v.detail = std::move(detail);
    v.log.push_back("FAILED at step " + std::to_string(k + 1) + ": " + to_string(r) + " (" + v.detail + ")");
    return v;
  };
  auto eliminate_chain = [&](const DivisorLabel& l, std::size_t k) {
    std::string names;
    for (const auto& m : chains.members(l))
      if (!v.eliminated_by.count(m)) {
        v.eliminated_by[m] = k;
        names += (names.empty() ? "" : ", ") + serialize(m);
      }
    return names;
  };

  bool noted_chain = false;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& s = steps[k];
    for (const auto& [l, d] : s.row.support) {
      if (!gens.count(l)) return fail(k, FailureReason::UnknownLabel, serialize(l));
      if (d.is_zero()) return fail(k, FailureReason::ZeroDegree, "zero entry stored for " + serialize(l));
    }
    if (!gens.count(s.isolates)) return fail(k, FailureReason::UnknownLabel, serialize(s.isolates));
    if (s.equated_with && !gens.count(*s.equated_with))
      return fail(k, FailureReason::UnknownLabel, serialize(*s.equated_with));

    std::set<DivisorLabel> residual;
    for (const auto& [l, d] : s.row.support)
      if (!v.eliminated_by.count(l)) residual.insert(l);

    std::set<DivisorLabel> allowed{s.isolates};
    if (s.equated_with) allowed.insert(*s.equated_with);
    for (const auto& l : residual)
      if (!allowed.count(l))
        return fail(k, targeted.count(l) ? FailureReason::ResidualTooLarge : FailureReason::Uncovered,
                    serialize(l));

    const std::string tag = s.row.family_id + ": ";
    if (!s.equated_with) {
      if (v.eliminated_by.count(s.isolates))
        return fail(k, FailureReason::DuplicateElimination, serialize(s.isolates));
      auto it = s.row.support.find(s.isolates);
      if (it == s.row.support.end() || !it->second.nonvanishing())
        return fail(k, FailureReason::ZeroDegree, serialize(s.isolates));
      v.log.push_back("step " + std::to_string(k + 1) + " " + tag + "eliminated " +
                      eliminate_chain(s.isolates, k) + " [" + to_string(s.justification) + "]");
      continue;
    }

    if (!noted_chain) {
      v.log.push_back("note: chain rows assume the -1 entry belongs to the tail marked by the smaller set");
      noted_chain = true;
    }
    const DivisorLabel& a = s.isolates;
    const DivisorLabel& b = *s.equated_with;
    if (residual.empty())
      return fail(k, FailureReason::DuplicateElimination, serialize(a) + " and " + serialize(b));
    for (const auto& l : residual)
      if (!s.row.support.at(l).nonvanishing()) return fail(k, FailureReason::ZeroDegree, serialize(l));
    if (residual.size() == 2) {
      if (chains.find(a) == chains.find(b))
        return fail(k, FailureReason::CyclicEquality, serialize(a) + " == " + serialize(b));
      chains.join(a, b);
      v.log.push_back("step " + std::to_string(k + 1) + " " + tag + "linked " + serialize(a) + " == " +
                      serialize(b));
    } else {
      const DivisorLabel& last = *residual.begin();
      v.log.push_back("step " + std::to_string(k + 1) + " " + tag + "eliminated " + eliminate_chain(last, k) +
                      " via " + serialize(a) + " == " + serialize(b));
    }
  }

  for (const auto& l : generators)
    if (!v.eliminated_by.count(l)) {
      const std::size_t last = steps.empty() ? 0 : steps.size() - 1;
      return fail(last, FailureReason::Uncovered, serialize(l));
    }
  v.certified = true;
  v.log.push_back("CERTIFIED: " + std::to_string(generators.size()) + " generators eliminated");
  return v;
}

std::size_t numeric_rank_sanity(const std::vector<EliminationStep>& steps) {
  std::map<DivisorLabel, std::size_t> column;
  std::vector<const EliminationStep*> rows;
  for (const auto& s : steps)
    if (s.justification == Justification::DegreeRow) {
      rows.push_back(&s);
      for (const auto& [l, d] : s.row.support) column.try_emplace(l, 0);
    }
  std::size_t c = 0;
  for (auto& [l, idx] : column) idx = c++;
  RatMatrix m(rows.size(), column.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [l, d] : rows[r]->row.support) m(r, column[l]) = d.numeric();
  return rank(m);
}

std::string serialize_certificate(const std::vector<EliminationStep>& steps) {
  std::ostringstream os;
  os << "# family | isolates | support | justification | anchor\n";
  for (const auto& s : steps) {
    os << s.row.family_id << " | " << serialize(s.isolates);
    if (s.equated_with) os << "==" << serialize(*s.equated_with);
    os << " | support(";
    bool first = true;
    for (const auto& [l, d] : s.row.support) {
      os << (first ? "" : ",") << serialize(l) << "=" << to_string(d);
      first = false;
    }
    os << ") | " << to_string(s.justification) << " | " << s.row.anchor << "\n";
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Justification parse_justification(const std::string& t) {
  if (t == "DEGREE_ROW") return Justification::DegreeRow;
  if (t == "BASE_CURVE_CLASS") return Justification::BaseCurveClass;
  if (t == "INTERIOR_RESTRICTION") return Justification::InteriorRestriction;
  throw std::invalid_argument("unknown justification: " + t);
}

}  // namespace

std::vector<EliminationStep> parse_certificate(const std::string& text) {
  std::vector<EliminationStep> out;
  std::size_t line_no = 0;
  for (const auto& raw : split(text, '\n')) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    try {
      const auto fields = split(line, '|');
      if (fields.size() != 5) throw std::invalid_argument("expected 5 fields");
      EliminationStep s;
      s.row.family_id = trim(fields[0]);
      const std::string iso = trim(fields[1]);
      if (const auto eq = iso.find("=="); eq != std::string::npos) {
        s.isolates = parse_label(iso.substr(0, eq));
        s.equated_with = parse_label(iso.substr(eq + 2));
      } else {
        s.isolates = parse_label(iso);
      }
      const std::string body = inside(trim(fields[2]), "support");
      // Marking sets contain commas, so a piece without '=' or with an open
      // parenthesis continues the previous entry.
      std::string pending;
      for (const auto& piece : split(body, ',')) {
        pending += pending.empty() ? piece : "," + piece;
        const auto eq = pending.find('=');
        if (eq == std::string::npos) continue;
        if (std::count(pending.begin(), pending.end(), '(') != std::count(pending.begin(), pending.end(), ')'))
          continue;
        const DivisorLabel l = parse_label(trim(pending.substr(0, eq)));
        if (!s.row.support.emplace(l, parse_degree(pending.substr(eq + 1))).second)
          throw std::invalid_argument("repeated label " + serialize(l));
        pending.clear();
      }
      if (!trim(pending).empty()) throw std::invalid_argument("dangling support entry");
      s.justification = parse_justification(trim(fields[3]));
      s.row.anchor = trim(fields[4]);
      out.push_back(std::move(s));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("certificate line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace hypercl
