#include "hypercl/boundary.hpp"

#include <algorithm>
#include <sstream>

#include "hypercl/hyperelliptic.hpp"

namespace hypercl {

bool subset_less(const MarkSet& a, const MarkSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

MarkSet complement(const MarkSet& s, int n) {
  MarkSet out;
  for (int k = 1; k <= n; ++k)
    if (!std::binary_search(s.begin(), s.end(), k)) out.push_back(k);
  return out;
}

std::strong_ordering operator<=>(const DivisorLabel& a, const DivisorLabel& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.index <=> b.index; c != 0) return c;
  if (subset_less(a.marks, b.marks)) return std::strong_ordering::less;
  if (subset_less(b.marks, a.marks)) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

namespace {

std::string marks_text(const MarkSet& s) {
  if (s.empty()) return "empty";
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s[k]);
  }
  return out;
}

int parse_int(const std::string& s, const std::string& whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      s.size() > 6)
    throw InvalidLabel("malformed label: " + whole);
  return std::stoi(s);
}

MarkSet parse_marks(const std::string& s, const std::string& whole) {
  MarkSet out;
  if (s == "empty") return out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_int(item, whole));
  if (out.empty() || !std::is_sorted(out.begin(), out.end()) ||
      std::adjacent_find(out.begin(), out.end()) != out.end())
    throw InvalidLabel("marking set must be strictly increasing: " + whole);
  return out;
}

void check_marks(const MarkSet& s, int n, const std::string& what) {
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1 || s[k] > n) throw InvalidLabel(what + ": marking out of range");
    if (k && s[k] <= s[k - 1]) throw InvalidLabel(what + ": marking set not strictly increasing");
  }
}

std::vector<MarkSet> all_subsets(int n) {
  std::vector<MarkSet> out;
  for (unsigned bits = 0; bits < (1u << n); ++bits) {
    MarkSet s;
    for (int k = 0; k < n; ++k)
      if (bits & (1u << k)) s.push_back(k + 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), subset_less);
  return out;
}

bool symmetric_level(const DivisorLabel& l, int g) {
  return (l.kind == DivisorLabel::Kind::Delta && l.index >= 1 && 2 * l.index == g) ||
         (l.kind == DivisorLabel::Kind::Eta && 2 * l.index + 1 == g);
}

}  // namespace

std::string serialize(const DivisorLabel& l) {
  switch (l.kind) {
    case DivisorLabel::Kind::Psi: return "psi_" + std::to_string(l.index);
    case DivisorLabel::Kind::EtaIrr: return "eta_irr";
    case DivisorLabel::Kind::Delta: return "delta_" + std::to_string(l.index) + "_" + marks_text(l.marks);
    case DivisorLabel::Kind::Eta: return "eta_" + std::to_string(l.index) + "_" + marks_text(l.marks);
  }
  return "?";
}

DivisorLabel parse_label(const std::string& text) {
  if (text == "eta_irr") return DivisorLabel::eta_irr();
  if (text.rfind("psi_", 0) == 0) return DivisorLabel::psi(parse_int(text.substr(4), text));
  const bool is_delta = text.rfind("delta_", 0) == 0;
  const bool is_eta = text.rfind("eta_", 0) == 0;
  if (!is_delta && !is_eta) throw InvalidLabel("unknown label: " + text);
  const std::string rest = text.substr(is_delta ? 6 : 4);
  const auto sep = rest.find('_');
  if (sep == std::string::npos) throw InvalidLabel("malformed label: " + text);
  const int i = parse_int(rest.substr(0, sep), text);
  MarkSet marks = parse_marks(rest.substr(sep + 1), text);
  return is_delta ? DivisorLabel::delta(i, std::move(marks)) : DivisorLabel::eta(i, std::move(marks));
}

DivisorLabel canonicalize(const DivisorLabel& l, const BoundaryContext& ctx) {
  const int g = ctx.g, n = ctx.n;
  DivisorLabel out = l;
  switch (l.kind) {
    case DivisorLabel::Kind::Psi:
      if (l.index < 1 || l.index > n || !l.marks.empty()) throw InvalidLabel("psi index out of range");
      return out;
    case DivisorLabel::Kind::EtaIrr:
      if (l.index != 0 || !l.marks.empty()) throw InvalidLabel("eta_irr carries no data");
      return out;
    case DivisorLabel::Kind::Delta:
      check_marks(l.marks, n, "delta");
      if (l.index < 0 || l.index > g / 2) throw InvalidLabel("delta genus index out of range");
      if (l.index == 0 && l.marks.size() < 2) throw InvalidLabel("delta_0 needs at least two markings");
      break;
    case DivisorLabel::Kind::Eta:
      check_marks(l.marks, n, "eta");
      if (l.index < 1 || l.index > (g - 1) / 2) throw InvalidLabel("eta genus index out of range");
      break;
  }
  if (ctx.symmetric_dedup && symmetric_level(l, g)) {
    MarkSet other = complement(l.marks, n);
    if (subset_less(other, out.marks)) out.marks = std::move(other);
  }
  return out;
}

std::vector<DivisorLabel> enumerate_boundary(const BoundaryContext& ctx) {
  if (ctx.g < 2 || ctx.n < 0) throw std::invalid_argument("enumerate_boundary: need g >= 2, n >= 0");
  std::vector<DivisorLabel> out{DivisorLabel::eta_irr()};
  const auto subsets = all_subsets(ctx.n);
  auto add_level = [&](DivisorLabel::Kind kind, int i) {
    for (const auto& s : subsets) {
      DivisorLabel l{kind, i, s};
      if (kind == DivisorLabel::Kind::Delta && i == 0 && s.size() < 2) continue;
      if (canonicalize(l, ctx) == l) out.push_back(std::move(l));
    }
  };
  for (int i = 0; i <= ctx.g / 2; ++i) add_level(DivisorLabel::Kind::Delta, i);
  for (int i = 1; i <= (ctx.g - 1) / 2; ++i) add_level(DivisorLabel::Kind::Eta, i);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t boundary_count_formula(const BoundaryContext& ctx) {
  const std::size_t g = ctx.g, n = ctx.n, full = std::size_t{1} << n;
  const std::size_t delta_levels = g / 2, eta_levels = (g - 1) / 2;
  const std::size_t tails = full - n - 1;
  if (!ctx.symmetric_dedup) return 1 + (delta_levels + eta_levels) * full + tails;
  if (n == 0) return g;
  const bool sym_delta = g % 2 == 0;
  const bool sym_eta = g % 2 == 1 && eta_levels >= 1;
  return 1 + (delta_levels - sym_delta) * full + (sym_delta ? full / 2 : 0) +
         (eta_levels - sym_eta) * full + (sym_eta ? full / 2 : 0) + tails;
}

std::vector<DivisorLabel> psi_labels(int n) {
  std::vector<DivisorLabel> out;
  for (int i = 1; i <= n; ++i) out.push_back(DivisorLabel::psi(i));
  return out;
}

std::vector<DivisorLabel> class_group_generators(const BoundaryContext& ctx) {
  auto out = psi_labels(ctx.n);
  for (auto& l : enumerate_boundary(ctx)) out.push_back(std::move(l));
  return out;
}

RankReport rank_report(const BoundaryContext& ctx, bool check_invariants) {
  if (ctx.g < 2 || ctx.n < 1) throw std::invalid_argument("rank_report: need g >= 2, n >= 1");
  RankReport r;
  r.g = ctx.g;
  r.n = ctx.n;
  r.symmetric_dedup = ctx.symmetric_dedup;
  r.labels = enumerate_boundary(ctx);
  r.num_psi = ctx.n;
  r.num_boundary = r.labels.size();
  r.rank_cl = r.num_psi + r.num_boundary;
  r.rank_pic_interior = ctx.n;
  if (check_invariants) {
    r.invariant_dimension = invariants_h2_config(ctx.g, ctx.n).report.dimension;
    r.interior_matches_invariants = *r.invariant_dimension == r.rank_pic_interior;
  }
  return r;
}

AmbientLabel parse_ambient(const std::string& text) {
  if (text == "D_irr") return {true, 0, {}};
  if (text.rfind("D_", 0) != 0) throw InvalidLabel("unknown ambient label: " + text);
  const std::string rest = text.substr(2);
  const auto sep = rest.find('_');
  if (sep == std::string::npos) throw InvalidLabel("malformed ambient label: " + text);
  return {false, parse_int(rest.substr(0, sep), text), parse_marks(rest.substr(sep + 1), text)};
}

FormalSum pullback_from_ambient(const AmbientLabel& label, const BoundaryContext& ctx) {
  FormalSum out;
  if (label.irreducible) {
    out[DivisorLabel::eta_irr()] = 1;
    for (const auto& l : enumerate_boundary(ctx))
      if (l.kind == DivisorLabel::Kind::Eta) out[l] = 2;
    return out;
  }
  check_marks(label.marks, ctx.n, "ambient");
  int i = label.index;
  MarkSet marks = label.marks;
  if (i < 0 || i > ctx.g) throw InvalidLabel("ambient genus index out of range");
  if (2 * i > ctx.g) {
    i = ctx.g - i;
    marks = complement(marks, ctx.n);
  }
  out[canonicalize(DivisorLabel::delta(i, std::move(marks)), ctx)] = 1;
  return out;
}

DivisorLabel permute_markings(const DivisorLabel& l, const std::vector<int>& perm,
                              const BoundaryContext& ctx) {
  if (static_cast<int>(perm.size()) != ctx.n) throw std::invalid_argument("permutation has wrong length");
  std::vector<int> seen(perm.begin(), perm.end());
  std::sort(seen.begin(), seen.end());
  for (int k = 0; k < ctx.n; ++k)
    if (seen[k] != k + 1) throw std::invalid_argument("not a permutation of 1..n");
  DivisorLabel out = l;
  if (l.kind == DivisorLabel::Kind::Psi) {
    if (l.index < 1 || l.index > ctx.n) throw InvalidLabel("psi index out of range");
    out.index = perm[l.index - 1];
    return out;
  }
  check_marks(l.marks, ctx.n, "permute_markings");
  for (auto& m : out.marks) m = perm[m - 1];
  std::sort(out.marks.begin(), out.marks.end());
  return canonicalize(out, ctx);
}

}  // namespace hypercl
