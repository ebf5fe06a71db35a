// Acceptance run: one PASS/FAIL line per criterion, with timing and the
// details of anything that did not hold. Exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "random_poly.hpp"
#include "slc/commutant.hpp"
#include "slc/poly_algebra.hpp"
#include "slc/realization.hpp"
#include "slc/sl_model.hpp"

using namespace slc;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      details.push_back(what);
    }
  }
  void note(const std::string& what) { details.push_back(what); }
};

void failed_checks(Outcome& out, const Report& rep, const std::string& where) {
  for (const auto& c : rep.checks)
    if (!c.passed())
      out.require(false, where + ": " + c.name + " [" + c.relation + "] residual_terms=" +
                             std::to_string(c.residual_terms));
}

std::size_t count_kind(const Report& rep, const std::string& kind) {
  return std::count_if(rep.diagnostics.begin(), rep.diagnostics.end(),
                       [&](const Diagnostic& d) { return d.kind == kind; });
}

// n = 3 and n = 4 realization reports are shared by criteria 8, 9 and 11.
struct RealizationRuns {
  Report hom3, col3, rac3, col4, rac4;
  double seconds3 = 0, seconds4 = 0;
};
RealizationRuns runs;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome dimension_formula() {
  Outcome out;
  const std::int64_t expected[] = {2, 7, 23, 88, 414, 2371};
  for (int n = 2; n <= 7; ++n)
    out.require(linear_dimension(n) == expected[n - 2],
                "linear_dimension(" + std::to_string(n) + ") = " + std::to_string(linear_dimension(n)));
  for (int n = 2; n <= 6; ++n) {
    auto b = enumerate_basis(n, false);
    out.require(static_cast<std::int64_t>(b.size()) == linear_dimension(n),
                "enumerated " + std::to_string(b.size()) + " generators for n = " + std::to_string(n));
  }
  return out;
}

Outcome cartan_commutation() {
  Outcome out;
  for (int n = 2; n <= 5; ++n) {
    const auto& ctx = sl_context(n);
    auto basis = enumerate_basis(n, false);
    std::vector<Polynomial> elems;
    for (int l : basis.cartan) elems.push_back(ctx.h(l));
    for (const auto& c : basis.cycles) elems.push_back(cycle_poly(n, c));
    std::size_t bad = 0;
    for (const auto& p : elems)
      for (int l = 1; l < n; ++l)
        if (!ctx.bracket(ctx.h(l), p).is_zero()) ++bad;
    out.require(bad == 0, std::to_string(bad) + " nonzero brackets with the Cartan subalgebra at n = " +
                              std::to_string(n));
  }
  return out;
}

Outcome golden_table_n3() {
  Outcome out;
  auto rep = printed_table_n3();
  failed_checks(out, rep, "n=3 table");
  out.require(rep.checks.size() == 22, "expected 22 compared lines, got " + std::to_string(rep.checks.size()));
  out.require(count_kind(rep, "mismatch") == 2, "expected the two duplicated lines to be reported");
  for (const auto& d : rep.diagnostics)
    if (d.kind == "mismatch") out.note("reported: " + d.name + ": " + d.text);
  return out;
}

Outcome cubic_algebra_n4() {
  Outcome out;
  auto table = structure_table(4, BasisKind::Cfg);
  out.require(algebra_order(table) == 3, "algebra order " + std::to_string(algebra_order(table)));
  auto listing = printed_listing_n4();
  failed_checks(out, listing, "n=4 listing");
  out.require(listing.diagnostics.size() == 41,
              "compared " + std::to_string(listing.diagnostics.size()) + " distinct listing rows");
  for (const auto& d : listing.diagnostics) {
    if (d.kind != "mismatch") continue;
    bool amended = d.text.find("holds for 24/24") != std::string::npos;
    out.require(amended, "mismatch without a verified amendment: " + d.name);
    out.note("typographical, reported with both sides: " + d.name);
  }
  auto addrels = verify_identities(4, "addrels");
  failed_checks(out, addrels, "addrels");
  out.require(!addrels.checks.empty(), "no addrels identities checked");
  return out;
}

Outcome dependence_relations() {
  Outcome out;
  for (int n : {3, 4})
    for (const char* fam : {"alde1", "rela1"}) {
      auto rep = verify_identities(n, fam);
      out.require(!rep.checks.empty(), std::string(fam) + " produced no checks");
      failed_checks(out, rep, std::string(fam) + " n=" + std::to_string(n));
    }
  return out;
}

Outcome casimirs() {
  Outcome out;
  const auto& c2ctx = sl_context(2);
  auto quarter = Scalar::fraction(1, 4);
  out.require(trace_casimir(2, 2) == c2ctx.h(1) * c2ctx.h(1) * quarter + c2ctx.e(1, 2) * c2ctx.e(2, 1),
              "c^[2] for n = 2");

  const auto& ctx = sl_context(3);
  auto h1 = ctx.h(1), h2 = ctx.h(2);
  auto p12 = ctx.e(1, 2) * ctx.e(2, 1);
  auto p13 = ctx.e(1, 3) * ctx.e(3, 1);
  auto p23 = ctx.e(2, 3) * ctx.e(3, 2);
  auto p123 = ctx.e(1, 2) * ctx.e(2, 3) * ctx.e(3, 1);
  auto p132 = ctx.e(1, 3) * ctx.e(3, 2) * ctx.e(2, 1);
  auto third = Scalar::fraction(1, 3);
  auto c2 = (h1 * h1 + h1 * h2 + h2 * h2) * third + p12 + p13 + p23;
  auto c3 = p123 + p132 + ((h1 + Scalar(2) * h2) * p12 + (h1 - h2) * p13 - (Scalar(2) * h1 + h2) * p23) * third +
            h1 * h2 * (h1 - h2) * Scalar::fraction(1, 9) + (h1.pow(3) - h2.pow(3)) * Scalar::fraction(2, 27);
  out.require(trace_casimir(3, 2) == c2, "c^[2] for n = 3");
  out.require(trace_casimir(3, 3) == c3, "c^[3] for n = 3");

  for (int n = 2; n <= 5; ++n) {
    const auto& cx = sl_context(n);
    for (int k = 2; k <= n; ++k) {
      auto c = trace_casimir(n, k);
      for (std::size_t v = 0; v < cx.registry()->size(); ++v)
        if (!cx.bracket(c, Polynomial::variable(cx.registry(), v)).is_zero())
          out.require(false, "c^[" + std::to_string(k) + "] not central at n = " + std::to_string(n));
    }
  }
  return out;
}

Outcome quadratic_casimir() {
  Outcome out;
  auto k = casimir_K(3, {1, 2, 3});
  failed_checks(out, k.report, "K");
  out.require(k.report.checks.size() == 11, "expected 11 checks on K");
  return out;
}

void report_mismatches(Outcome& out, const Report& rep) {
  for (const auto& d : rep.diagnostics)
    if (d.kind == "mismatch") out.note(d.name + ": " + d.text);
}

Outcome realization_n3() {
  Outcome out;
  auto t = Clock::now();
  runs.hom3 = homomorphism_check(3);
  runs.col3 = collapse_report(3);
  runs.rac3 = racah_check(3);
  runs.seconds3 = since(t);
  std::size_t pairs = std::count_if(runs.hom3.checks.begin(), runs.hom3.checks.end(),
                                    [](const CheckRecord& c) { return c.relation == "realized-bracket"; });
  out.require(pairs == 36, "checked " + std::to_string(pairs) + " generator pairs");
  for (const auto* rep : {&runs.hom3, &runs.col3, &runs.rac3}) failed_checks(out, *rep, "n=3");
  report_mismatches(out, runs.col3);
  report_mismatches(out, runs.rac3);
  return out;
}

Outcome realization_n4() {
  Outcome out;
  auto t = Clock::now();
  runs.col4 = collapse_report(4);
  runs.rac4 = racah_check(4);
  runs.seconds4 = since(t);
  for (const auto* rep : {&runs.col4, &runs.rac4}) failed_checks(out, *rep, "n=4");
  for (const char* tag : {"racah-r4-commuting", "racah-r4-adjacent", "racah-r4-crossing", "racah-r4-triple"}) {
    bool seen = std::any_of(runs.rac4.checks.begin(), runs.rac4.checks.end(),
                            [&](const CheckRecord& c) { return c.relation == tag; });
    out.require(seen, std::string("no checks for ") + tag);
  }
  report_mismatches(out, runs.col4);
  return out;
}

// For each monomial of e-variables of degree d, calls visit.
void for_each_e_monomial(int n, int d, const std::function<void(const Monomial&)>& visit) {
  const auto& ctx = sl_context(n);
  std::vector<std::size_t> evars;
  for (std::size_t v = 0; v < ctx.registry()->size(); ++v)
    if (ctx.e_pair(v).first != 0) evars.push_back(v);
  Monomial m(ctx.registry()->size());
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int left) {
    if (left == 0) {
      visit(m);
      return;
    }
    for (std::size_t i = from; i < evars.size(); ++i) {
      m.add_exponent(evars[i], 1);
      rec(i, left - 1);
      m.add_exponent(evars[i], -1);
    }
  };
  rec(0, d);
}

template <class Bracket>
std::size_t axiom_violations(const RegistryPtr& reg, Bracket br, std::uint64_t seed, int triples) {
  auto vars = slc::testing::all_vars(reg);
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (int t = 0; t < triples; ++t) {
    auto p = slc::testing::random_poly(reg, rng, 3, 3, vars);
    auto q = slc::testing::random_poly(reg, rng, 3, 3, vars);
    auto r = slc::testing::random_poly(reg, rng, 3, 3, vars, true);
    auto pq = br(p, q);
    if (!(pq + br(q, p)).is_zero()) ++bad;
    if (!(br(p, br(q, r)) + br(q, br(r, p)) + br(r, pq)).is_zero()) ++bad;
    if (!(br(p, q * r) == pq * r + q * br(p, r))) ++bad;
  }
  return bad;
}

Outcome property_suites() {
  Outcome out;
  for (int n : {3, 4}) {
    const auto& ctx = sl_context(n);
    auto bad = axiom_violations(ctx.registry(), [&](const Polynomial& a, const Polynomial& b) { return ctx.bracket(a, b); },
                                1000 + n, 200);
    out.require(bad == 0, std::to_string(bad) + " axiom violations in the sl(" + std::to_string(n) + ") ring");
  }
  const auto& ring = canonical_ring(3);
  auto bad = axiom_violations(ring.registry(), [&](const Polynomial& a, const Polynomial& b) { return ring.bracket(a, b); },
                              2000, 200);
  out.require(bad == 0, std::to_string(bad) + " axiom violations in the canonical ring");

  const int n = 3;
  const auto& ctx = sl_context(n);
  std::size_t monomials = 0, high_indecomposable = 0, lemma_violations = 0, product_errors = 0;
  for (int d = 1; d <= 4; ++d)
    for_each_e_monomial(n, d, [&](const Monomial& m) {
      std::vector<int> balance(n + 1, 0);
      int ascending = 0, descending = 0;
      for (auto [v, e] : m.support()) {
        auto [j, k] = ctx.e_pair(v);
        balance[j] += e;
        balance[k] -= e;
        (j < k ? ascending : descending) += e;
      }
      if (!std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; })) return;
      ++monomials;
      auto parts = factor_cycles(m, n);
      Polynomial prod = Polynomial::constant(ctx.registry(), Scalar(1));
      for (const auto& c : parts) prod *= cycle_poly(n, c);
      if (!(prod == Polynomial::monomial(ctx.registry(), m, Scalar(1)))) ++product_errors;
      if (parts.size() == 1) {
        if (d > 3) ++high_indecomposable;
        if (std::min(ascending, descending) != 1) ++lemma_violations;
      }
    });
  out.require(product_errors == 0, std::to_string(product_errors) + " factorizations do not multiply back");
  out.require(high_indecomposable == 0, std::to_string(high_indecomposable) + " indecomposable monomials of degree > 3");
  out.require(lemma_violations == 0, std::to_string(lemma_violations) + " counterexamples to the one-ascending-or-one-descending lemma");
  out.note(std::to_string(monomials) + " weight-zero monomials of degree <= 4 factored");
  return out;
}

Outcome float_cross_check() {
  Outcome out;
  std::size_t sampled = 0;
  for (const auto* rep : {&runs.hom3, &runs.col3, &runs.rac3, &runs.col4, &runs.rac4}) {
    for (const auto& c : rep->checks)
      if (c.relation == "float-sampling") {
        ++sampled;
        out.require(c.passed(), "n=" + std::to_string(rep->n) + ": " + c.name);
      }
    for (const auto& d : rep->diagnostics)
      if (d.name == "float cross-check") out.note("n=" + std::to_string(rep->n) + ": " + d.text);
  }
  out.require(sampled == 5, "expected five float cross-checks, found " + std::to_string(sampled));
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "dimension formula and enumeration counts", 1, dimension_formula},
      {2, "commutant membership for n <= 5", 30, cartan_commutation},
      {3, "n=3 golden bracket table", 5, golden_table_n3},
      {4, "n=4 cubic algebra and printed listing", 180, cubic_algebra_n4},
      {5, "dependence relations for n = 3, 4", 60, dependence_relations},
      {6, "trace Casimirs", 120, casimirs},
      {7, "quadratic-algebra Casimir K", 10, quadratic_casimir},
      {8, "realization n=3", 60, realization_n3},
      {9, "realization n=4", 600, realization_n4},
      {10, "bracket property suites and cycle lemmas", 120, property_suites},
      {11, "float cross-check at 20 constraint-surface points", 0, float_cross_check},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto t = Clock::now();
    Outcome out = c.run();
    double secs = since(t);
    if (c.id == 11) secs = runs.seconds3 + runs.seconds4;  // samples are drawn inside criteria 8 and 9
    bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    if (!in_time) out.require(false, "runtime limit exceeded");
    bool pass = out.pass;
    all = all && pass;
    char line[160];
    std::snprintf(line, sizeof line, "%-4s %2d  %-52s %8.2f s", pass ? "PASS" : "FAIL", c.id, c.title, secs);
    std::cout << line << "\n";
    for (const auto& d : out.details) std::cout << "        " << d << "\n";
  }
  std::cout << (all ? "all criteria pass" : "some criteria fail") << "\n";
  return all ? 0 : 1;
}
