#include "hypercl/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "hypercl/boundary.hpp"
#include "hypercl/certificate.hpp"
#include "hypercl/hyperelliptic.hpp"
#include "hypercl/oracles.hpp"
#include "hypercl/surface_ring.hpp"
#include "hypercl/totaro.hpp"

namespace hypercl {

namespace {

// Collects the first failure; later checks still run so timing stays honest.
struct Tally {
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first_failure.empty()) first_failure = what;
  }
  bool ok() const { return first_failure.empty(); }
};

std::string at(int g, int n) { return "(g=" + std::to_string(g) + ",n=" + std::to_string(n) + ")"; }

std::size_t choose2(int n) { return static_cast<std::size_t>(n * (n - 1) / 2); }

void picard_rank_interior(Tally& t) {
  for (int g = 2; g <= 4; ++g)
    for (int n = 1; n <= 4; ++n) {
      const auto r = invariants_h2_config(g, n);
      t.expect(r.report.dimension == static_cast<std::size_t>(n), "invariant dimension " + at(g, n));
      t.expect(r.v_invariants == 0, "V-part invariants nonzero " + at(g, n));
      t.expect(r.points_form_basis, "point classes not a basis of W-invariants " + at(g, n));
    }
}

void bilinear_invariants(Tally& t) {
  for (int g = 2; g <= 10; ++g) {
    const auto gens = generators(g);
    const auto r = fixed_bilinear(gens);
    t.expect(r.dimension == 1, "bilinear invariant dimension at g=" + std::to_string(g));
    if (r.dimension != 1) continue;
    const RatMatrix j = symplectic_form(g);
    const std::size_t d = 2 * g;
    const Rat scale = r.basis[0][1];  // entry (0, 1)
    bool proportional = sgn(scale) != 0;
    for (std::size_t a = 0; a < d && proportional; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (r.basis[0][a * d + b] != scale * -j(a, b)) proportional = false;
    t.expect(proportional, "bilinear invariant not block-J at g=" + std::to_string(g));
  }
}

void differential_injective(Tally& t) {
  for (int g = 2; g <= 3; ++g) {
    const CohClass delta = diagonal_class(g);
    for (int n = 2; n <= 5; ++n) {
      const RatMatrix d01 = d2_matrix(g, n, 0, 1);
      t.expect(rank(d01) == choose2(n) && d01.cols() == choose2(n), "d2^{0,1} not injective " + at(g, n));
      if (n >= 3) {
        const RatMatrix d02 = d2_matrix(g, n, 0, 2);
        t.expect(rank(d02) == d02.cols(), "d2^{0,2} not injective " + at(g, n));
      }
      const auto words = kunneth_basis(g, n, 2);
      const auto index = index_words(words);
      std::vector<RatVector> pulled;
      for (int j = 2; j <= n; ++j)
        for (int i = 1; i < j; ++i) pulled.push_back(coordinates(pr_pair_pullback(i, j, delta, n), index));
      const RatMatrix expected = RatMatrix::from_columns(words.size(), pulled);
      t.expect(rank(expected) == choose2(n) && column_span_contains(d01, expected) &&
                   column_span_contains(expected, d01),
               "image of d2^{0,1} differs from span of pulled-back diagonals " + at(g, n));
    }
  }
}

void power_invariants(Tally& t) {
  for (int g = 2; g <= 4; ++g)
    for (int n = 1; n <= 4; ++n) {
      const auto r = invariants_h2_cn(g, n);
      t.expect(r.report.dimension == static_cast<std::size_t>(n) + choose2(n), "H^2(C^n) invariants " + at(g, n));
      t.expect(r.spans_expected, "H^2(C^n) invariant span mismatch " + at(g, n));
    }
}

void totaro_dimension_oracle(Tally& t) {
  for (int n = 1; n <= 6; ++n)
    for (int q = 0; q <= 3; ++q) {
      const auto o = oracle::arnold_quotient(n, q);
      const std::string where = "(n=" + std::to_string(n) + ",q=" + std::to_string(q) + ")";
      t.expect(o.dimension == os_dimension(n, q), "oracle dimension differs from e_q " + where);
      t.expect(o.normal_monomial_count == os_dimension(n, q), "normal monomial count " + where);
      t.expect(o.normal_monomials_independent, "normal monomials dependent in quotient " + where);
      t.expect(e_dimension(2, n, 0, q) == o.dimension && EBasis(2, n, 0, q).size() == o.dimension,
               "E^{0,q} basis size " + where);
    }
}

void boundary_enumeration(Tally& t) {
  for (int g = 2; g <= 8; ++g)
    t.expect(enumerate_boundary({g, 0, true}).size() == static_cast<std::size_t>(g),
             "unpointed boundary count at g=" + std::to_string(g));
  for (int g = 2; g <= 6; ++g)
    for (int n = 0; n <= 6; ++n)
      for (bool dedup : {true, false}) {
        const BoundaryContext ctx{g, n, dedup};
        const auto labels = enumerate_boundary(ctx);
        const std::string where = at(g, n) + (dedup ? "" : " without dedup");
        t.expect(labels.size() == boundary_count_formula(ctx), "closed form vs enumeration " + where);
        t.expect(labels.size() == oracle::boundary_count_by_hand(g, n, dedup), "hand count " + where);
        t.expect(std::adjacent_find(labels.begin(), labels.end()) == labels.end(), "duplicate labels " + where);
      }
  // Frozen from tests/oracles/boundary_count_oracle.py.
  const struct { int g, n; std::size_t rank_cl; } spots[] = {{2, 1, 3}, {3, 1, 5}, {3, 2, 10}};
  for (const auto& s : spots)
    t.expect(rank_report({s.g, s.n, true}).rank_cl == s.rank_cl, "rank_cl spot value " + at(s.g, s.n));
}

void pullback_identities(Tally& t) {
  for (int g = 2; g <= 5; ++g)
    for (int n = 0; n <= 4; ++n) {
      const BoundaryContext ctx{g, n, true};
      const auto labels = enumerate_boundary(ctx);
      const FormalSum irr = pullback_from_ambient({true, 0, {}}, ctx);
      std::size_t etas = 0;
      for (const auto& l : labels)
        if (l.kind == DivisorLabel::Kind::Eta) {
          ++etas;
          t.expect(irr.count(l) && irr.at(l) == 2, "eta coefficient " + serialize(l) + " " + at(g, n));
        }
      t.expect(irr.count(DivisorLabel::eta_irr()) && irr.at(DivisorLabel::eta_irr()) == 1,
               "eta_irr coefficient " + at(g, n));
      t.expect(irr.size() == etas + 1, "extra terms in irreducible pullback " + at(g, n));
      for (int i = 0; i <= g; ++i)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          MarkSet s;
          for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) s.push_back(b + 1);
          const int tail = i == 0 ? static_cast<int>(s.size()) : i == g ? n - static_cast<int>(s.size()) : 2;
          if (tail < 2) continue;  // unstable ambient type
          const FormalSum img = pullback_from_ambient({false, i, s}, ctx);
          const DivisorLabel expect = 2 * i <= g ? canonicalize(DivisorLabel::delta(i, s), ctx)
                                                 : canonicalize(DivisorLabel::delta(g - i, complement(s, n)), ctx);
          t.expect(img.size() == 1 && img.begin()->first == expect && img.begin()->second == 1,
                   "pullback of D_" + std::to_string(i) + " " + at(g, n));
          t.expect(std::binary_search(labels.begin(), labels.end(), expect), "pullback lands outside boundary");
        }
    }
}

void certificate_end_to_end(Tally& t) {
  for (int g = 2; g <= 4; ++g)
    for (int n = 1; n <= 3; ++n) {
      const BoundaryContext ctx{g, n, true};
      const auto gens = class_group_generators(ctx);
      const auto steps = builtin_certificate(g, n);
      const Verdict v = check_certificate(steps, gens);
      t.expect(v.certified, "certificate " + at(g, n) + ": " + v.detail);
      t.expect(v.eliminated_by.size() == gens.size(), "elimination is not a bijection " + at(g, n));
      std::size_t by_rows = 0;
      for (const auto& [l, k] : v.eliminated_by)
        if (steps[k].justification == Justification::DegreeRow) ++by_rows;
      t.expect(numeric_rank_sanity(steps) == by_rows, "numeric rank sanity " + at(g, n));
      const auto reparsed = parse_certificate(serialize_certificate(steps));
      t.expect(check_certificate(reparsed, gens).certified, "text round trip " + at(g, n));
    }
}

void structural_properties(Tally& t) {
  for (int g = 2; g <= 10; ++g)
    for (const auto& z : generators(g))
      t.expect(z.preserves_symplectic_form(), "generator not symplectic at g=" + std::to_string(g));

  for (int g = 2; g <= 4; ++g) {
    const CohClass delta = diagonal_class(g);
    const auto gens = generators(g);
    std::vector<RatMatrix> h1;
    for (const auto& z : gens) h1.push_back(h1_cohomology_action(z));
    for (int n = 1; n <= 4; ++n)
      for (int total = 1; total <= 3; ++total)
        for (int q = 1; q <= std::min(total, n - 1); ++q) {
          const int p = total - q;
          const EBasis basis(g, n, p, q);
          for (std::size_t k = 0; k < basis.size(); ++k) {
            const EModelElement x = basis.element(k);
            const EModelElement dx = d2(x, delta);
            if (q >= 2) t.expect(d2(dx, delta).is_zero(), "d2 d2 != 0 on E^{" + std::to_string(p) + "," +
                                                              std::to_string(q) + "} " + at(g, n));
            if (total > 2) continue;
            for (const auto& m : h1)
              t.expect(act_on_element(m, dx) == d2(act_on_element(m, x), delta),
                       "action does not commute with d2 " + at(g, n));
          }
        }
  }

  for (int g = 2; g <= 4; ++g)
    for (int n = 1; n <= 3; ++n)
      for (int k = 0; k <= 2 * n; ++k) {
        const auto left = kunneth_basis(g, n, k);
        const auto right = kunneth_basis(g, n, 2 * n - k);
        const auto index = index_words(right);
        RatMatrix pairing(left.size(), right.size());
        const TensorWord top(n, SurfaceBasisVector::top());
        for (std::size_t a = 0; a < left.size(); ++a)
          for (const auto& w : right) {
            auto prod = cup_words(left[a], w);
            if (prod && prod->second == top) pairing(a, index.at(w)) = prod->first;
          }
        t.expect(left.size() == right.size() && rank(pairing) == left.size(),
                 "degenerate pairing in degree " + std::to_string(k) + " " + at(g, n));
      }
}

struct Criterion {
  const char* name;
  double budget;
  void (*run)(Tally&);
};

const Criterion kCriteria[kCriterionCount] = {
    {"interior Picard rank equals n", 60, picard_rank_interior},
    {"bilinear invariants are one-dimensional and block-J", 10, bilinear_invariants},
    {"d2^{0,1}, d2^{0,2} injective with pulled-back diagonal image", 120, differential_injective},
    {"H^2(C^n) invariants spanned by points and diagonals", 30, power_invariants},
    {"E^{0,q} dimension matches exterior-algebra oracle", 30, totaro_dimension_oracle},
    {"boundary enumeration counts", 5, boundary_enumeration},
    {"ambient pullback identities", 5, pullback_identities},
    {"independence certificate end to end", 10, certificate_end_to_end},
    {"structural properties", 60, structural_properties},
};

}  // namespace

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("run_criterion: no such criterion");
  const Criterion& c = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.name = c.name;
  r.budget_seconds = c.budget;
  Tally t;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.run(t);
  } catch (const std::exception& e) {
    t.expect(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.passed = t.ok() && r.seconds <= r.budget_seconds;
  std::ostringstream os;
  if (!t.ok())
    os << t.first_failure;
  else if (r.seconds > r.budget_seconds)
    os << "over time budget";
  else
    os << t.checks << " checks";
  r.detail = os.str();
  return r;
}

std::vector<CriterionResult> run_acceptance(unsigned threads) {
  std::vector<CriterionResult> out(kCriterionCount);
  threads = std::clamp(threads, 1u, static_cast<unsigned>(kCriterionCount));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int k; (k = next++) < kCriterionCount;) out[k] = run_criterion(k + 1);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  return out;
}

unsigned worker_count_from_env() {
  if (const char* env = std::getenv("HYPERCL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace hypercl
