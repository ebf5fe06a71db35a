#include "slc/poly_algebra.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "index_assign.hpp"
#include "relation_listing.hpp"
#include "slc/expr_template.hpp"
#include "slc/sl_model.hpp"

namespace slc {

namespace {

void check_indices(int n, const std::vector<int>& idx, std::size_t min_len, const char* what) {
  if (idx.size() < min_len) throw std::invalid_argument(std::string(what) + ": too few indices");
  std::set<int> seen;
  for (int i : idx) {
    if (i < 1 || i > n) throw std::invalid_argument(std::string(what) + ": index out of range");
    if (!seen.insert(i).second) throw std::invalid_argument(std::string(what) + ": repeated index");
  }
}

std::vector<int> rotated(std::vector<int> idx) {
  std::rotate(idx.begin(), std::min_element(idx.begin(), idx.end()), idx.end());
  return idx;
}

// (i1, id, ..., i2)
std::vector<int> opposite(const std::vector<int>& idx) {
  std::vector<int> out{idx.front()};
  for (std::size_t k = idx.size() - 1; k >= 1; --k) out.push_back(idx[k]);
  return out;
}

void validate(int n, const GeneratorId& g) {
  using K = GeneratorId::Kind;
  switch (g.kind) {
    case K::Cartan:
      if (g.indices.size() != 1 || g.indices[0] < 1 || g.indices[0] >= n)
        throw std::invalid_argument("Cartan index out of range");
      break;
    case K::DerivedC:
      check_indices(n, g.indices, 1, "c_i");
      if (g.indices.size() != 1) throw std::invalid_argument("c_i takes one index");
      break;
    case K::Cycle:
      check_indices(n, g.indices, 2, "cycle");
      break;
    case K::DerivedCij:
      check_indices(n, g.indices, 2, "c_ij");
      if (g.indices.size() != 2) throw std::invalid_argument("c_ij takes two indices");
      break;
    case K::DerivedF:
    case K::DerivedG:
      check_indices(n, g.indices, 3, "f/g");
      break;
  }
}

NormalFormExpr cfg_c(int i, int n) {
  if (i < n) return NormalFormExpr::generator(GeneratorId::c(i));
  std::vector<NormalFormExpr::TermT> terms;
  for (int k = 1; k < n; ++k) terms.push_back({Scalar(-1), Word{{GeneratorId::c(k), 1}}});
  return NormalFormExpr::from_terms(std::move(terms));
}

NormalFormExpr express(const GeneratorId& g, int n, BasisKind kind) {
  using K = GeneratorId::Kind;
  validate(n, g);
  const auto& idx = g.indices;
  const Scalar half = Scalar::fraction(1, 2);
  if (kind == BasisKind::P) {
    switch (g.kind) {
      case K::Cartan:
        return NormalFormExpr::generator(g);
      case K::DerivedC: {
        std::vector<NormalFormExpr::TermT> terms;
        for (int j = 1; j < n; ++j) {
          Scalar c = Scalar::fraction(n - j, n);
          if (j < idx[0]) c -= Scalar(1);
          terms.push_back({c, Word{{GeneratorId::cartan(j), 1}}});
        }
        return NormalFormExpr::from_terms(std::move(terms));
      }
      case K::Cycle:
      case K::DerivedCij:
        return NormalFormExpr::generator(GeneratorId::cycle(idx));
      case K::DerivedF:
      case K::DerivedG: {
        Scalar sign = g.kind == K::DerivedF ? Scalar(-1) : Scalar(1);
        return NormalFormExpr::generator(GeneratorId::cycle(opposite(idx)), half) +
               NormalFormExpr::generator(GeneratorId::cycle(idx), sign * half);
      }
    }
  }
  switch (g.kind) {
    case K::Cartan:
      return cfg_c(idx[0], n) - cfg_c(idx[0] + 1, n);
    case K::DerivedC:
      return cfg_c(idx[0], n);
    case K::Cycle:
    case K::DerivedCij:
      if (idx.size() == 2) return NormalFormExpr::generator(GeneratorId::cij(std::min(idx[0], idx[1]), std::max(idx[0], idx[1])));
      [[fallthrough]];
    case K::DerivedF:
    case K::DerivedG: {
      auto label = fg_label(idx);
      bool forward = rotated(idx) == label;
      auto f = NormalFormExpr::generator(GeneratorId::f(label));
      auto gg = NormalFormExpr::generator(GeneratorId::g(label));
      if (g.kind == K::DerivedF) return forward ? f : -f;
      if (g.kind == K::DerivedG) return gg;
      return forward ? gg - f : gg + f;  // p_fwd = g - f, p_rev = g + f
    }
  }
  throw std::logic_error("unreachable generator kind");
}

GeneratorId symbol_generator(const std::string& base, const std::vector<int>& idx) {
  if (base == "h" && idx.size() == 1) return GeneratorId::cartan(idx[0]);
  if (base == "c" && idx.size() == 1) return GeneratorId::c(idx[0]);
  if (base == "c" && idx.size() == 2) return GeneratorId::cij(idx[0], idx[1]);
  if (base == "p") return GeneratorId::cycle(idx);
  if (base == "f") return GeneratorId::f(idx);
  if (base == "g") return GeneratorId::g(idx);
  throw std::invalid_argument("unknown generator symbol '" + base + "'");
}

// Raw sl(n) polynomials; also knows the trace Casimirs and the rescaled
// elements cb_i = c_i/2, cb_ij = c_ij + (c_i - c_j)^2/4.
struct PolyResolver {
  int n;
  std::map<int, Polynomial> cas;

  const SlContext& ctx() const { return sl_context(n); }
  Polynomial constant(const Scalar& c) const { return Polynomial::constant(ctx().registry(), c); }
  Polynomial bracket(const Polynomial& a, const Polynomial& b) const { return ctx().bracket(a, b); }
  Polynomial symbol(const std::string& base, const std::vector<int>& idx) {
    if (base == "cas" && idx.size() == 1) {
      auto it = cas.find(idx[0]);
      if (it == cas.end()) it = cas.emplace(idx[0], trace_casimir(n, idx[0])).first;
      return it->second;
    }
    if (base == "cb" && idx.size() == 1) return generator_poly(n, GeneratorId::c(idx[0])) * Scalar::fraction(1, 2);
    if (base == "cb" && idx.size() == 2) {
      auto d = generator_poly(n, GeneratorId::c(idx[0])) - generator_poly(n, GeneratorId::c(idx[1]));
      return generator_poly(n, GeneratorId::cij(idx[0], idx[1])) + d * d * Scalar::fraction(1, 4);
    }
    return generator_poly(n, symbol_generator(base, idx));
  }
};

// Generator expressions, kept in the canonical form of `kind`.
struct ExprResolver {
  int n;
  BasisKind kind;

  NormalFormExpr constant(const Scalar& c) const { return NormalFormExpr::constant(c); }
  NormalFormExpr symbol(const std::string& base, const std::vector<int>& idx) const {
    return rewrite(NormalFormExpr::generator(symbol_generator(base, idx)), n, kind);
  }
  NormalFormExpr bracket(const NormalFormExpr& a, const NormalFormExpr& b) const {
    auto raw = sl_context(n).bracket(expand(a, n), expand(b, n));
    return rewrite(normal_form(raw, n), n, kind);
  }
};

Polynomial eval(const std::string& text, const std::map<char, int>& assign, PolyResolver& r) {
  return parse_template<Polynomial>(text, assign, r);
}

NormalFormExpr eval_expr(const std::string& text, const std::map<char, int>& assign, ExprResolver& r) {
  return parse_template<NormalFormExpr>(text, assign, r);
}

using detail::assignment_str;
using detail::assignments;

CheckRecord zero_check(std::string name, std::string tag, const Polynomial& residual) {
  return {std::move(name), std::move(tag), residual.is_zero() ? "pass" : "FAIL", residual.size()};
}

std::string join_indices(const std::vector<int>& idx) {
  std::string out;
  for (int i : idx) {
    if (!out.empty()) out += ",";
    out += std::to_string(i);
  }
  return out;
}

// Describes how a printed side relates to the recomputed one when they differ.
std::string scale_relation(const Polynomial& printed, const Polynomial& computed) {
  if (computed.is_zero()) return printed.is_zero() ? "" : "recomputed side is zero";
  for (auto k : {Scalar(-1), Scalar(2), Scalar::fraction(1, 2), Scalar(-2), Scalar::fraction(-1, 2)})
    if ((printed - computed * k).is_zero()) return "printed side equals " + k.str() + " times the recomputed side";
  return "no simple rescaling relates the two sides";
}

}  // namespace

std::string basis_name(BasisKind k) { return k == BasisKind::P ? "p" : "cfg"; }

std::vector<int> fg_label(std::vector<int> cycle) {
  auto fwd = rotated(cycle);
  auto rev = rotated(opposite(fwd));
  return std::min(fwd, rev);
}

Polynomial generator_poly(int n, const GeneratorId& g) {
  using K = GeneratorId::Kind;
  validate(n, g);
  const auto& ctx = sl_context(n);
  const auto& idx = g.indices;
  switch (g.kind) {
    case K::Cartan:
      return ctx.h(idx[0]);
    case K::DerivedC: {
      Polynomial out(ctx.registry());
      for (int j = 1; j < n; ++j) {
        Scalar c = Scalar::fraction(n - j, n);
        if (j < idx[0]) c -= Scalar(1);
        out.add_scaled(ctx.h(j), c);
      }
      return out;
    }
    case K::Cycle:
    case K::DerivedCij:
      return cycle_poly(n, canonical_cycle(idx));
    case K::DerivedF:
    case K::DerivedG: {
      auto rev = cycle_poly(n, canonical_cycle(opposite(idx)));
      auto fwd = cycle_poly(n, canonical_cycle(idx));
      auto sum = g.kind == K::DerivedF ? rev - fwd : rev + fwd;
      return sum * Scalar::fraction(1, 2);
    }
  }
  throw std::logic_error("unreachable generator kind");
}

NormalFormExpr rewrite(const NormalFormExpr& e, int n, BasisKind kind) {
  std::map<GeneratorId, NormalFormExpr> cache;
  std::vector<NormalFormExpr::TermT> out;
  for (const auto& [c, w] : e.terms()) {
    auto prod = NormalFormExpr::constant(c);
    for (const auto& [g, p] : w) {
      auto it = cache.find(g);
      if (it == cache.end()) it = cache.emplace(g, express(g, n, kind)).first;
      for (int k = 0; k < p; ++k) prod = prod * it->second;
    }
    out.insert(out.end(), prod.terms().begin(), prod.terms().end());
  }
  return NormalFormExpr::from_terms(std::move(out));
}

Polynomial expand(const NormalFormExpr& e, int n) {
  const auto& ctx = sl_context(n);
  std::map<GeneratorId, Polynomial> cache;
  PolyAccumulator acc(ctx.registry());
  for (const auto& [c, w] : e.terms()) {
    auto prod = Polynomial::constant(ctx.registry(), Scalar(1));
    for (const auto& [g, p] : w) {
      auto it = cache.find(g);
      if (it == cache.end()) it = cache.emplace(g, generator_poly(n, g)).first;
      prod = prod * it->second.pow(p);
    }
    acc.add(prod, c);
  }
  return std::move(acc).finish();
}

std::vector<GeneratorId> table_generators(int n, BasisKind kind) {
  auto basis = enumerate_basis(n, false);
  std::vector<GeneratorId> out;
  if (kind == BasisKind::P) {
    for (int l : basis.cartan) out.push_back(GeneratorId::cartan(l));
    for (const auto& c : basis.cycles) out.push_back(GeneratorId::cycle(c.indices));
    return out;
  }
  for (int i = 1; i <= n; ++i) out.push_back(GeneratorId::c(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(GeneratorId::cij(i, j));
  for (const auto& c : basis.cycles) {
    if (c.length() < 3 || fg_label(c.indices) != c.indices) continue;
    out.push_back(GeneratorId::f(c.indices));
    out.push_back(GeneratorId::g(c.indices));
  }
  std::sort(out.begin(), out.end());
  return out;
}

NormalFormExpr bracket(int n, const GeneratorId& a, const GeneratorId& b, BasisKind kind) {
  const auto& ctx = sl_context(n);
  auto raw = ctx.bracket(generator_poly(n, a), generator_poly(n, b));
  auto nf = normal_form(raw, n);
  return kind == BasisKind::P ? nf : rewrite(nf, n, kind);
}

std::size_t BracketTable::nontrivial() const {
  return std::count_if(entries.begin(), entries.end(), [](const BracketEntry& e) { return !e.value.is_zero(); });
}

NormalFormExpr BracketTable::at(const GeneratorId& a, const GeneratorId& b) const {
  for (const auto& e : entries) {
    if (e.a == a && e.b == b) return e.value;
    if (e.a == b && e.b == a) return -e.value;
  }
  if (a == b) return {};
  throw std::out_of_range("pair not in table: " + a.name() + ", " + b.name());
}

std::string BracketTable::to_json() const {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    if (e.value.is_zero()) continue;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [c, w] : e.value.terms()) {
      nlohmann::ordered_json word = nlohmann::ordered_json::array();
      for (const auto& [g, p] : w) word.push_back({g.name(), p});
      terms.push_back({{"coeff", c.str()}, {"word", word}});
    }
    list.push_back({{"lhs", {e.a.name(), e.b.name()}}, {"rhs", e.value.str()}, {"terms", terms}});
  }
  nlohmann::ordered_json doc;
  doc["n"] = n;
  doc["basis"] = basis_name(basis);
  doc["entries"] = list;
  return doc.dump(2);
}

std::string BracketTable::to_text() const {
  std::string out;
  for (const auto& e : entries)
    if (!e.value.is_zero()) out += "{" + e.a.name() + ", " + e.b.name() + "} = " + e.value.str() + "\n";
  out += std::to_string(nontrivial()) + " nontrivial brackets among " + std::to_string(generators.size()) +
         " generators (n=" + std::to_string(n) + ", basis " + basis_name(basis) + ")\n";
  return out;
}

BracketTable structure_table(int n, BasisKind kind, unsigned threads, const ProgressFn& progress) {
  if (n < 2) throw std::invalid_argument("structure_table needs n >= 2");
  sl_context(n);  // build shared data before fanning out
  BracketTable table;
  table.n = n;
  table.basis = kind;
  table.generators = table_generators(n, kind);
  const auto& gens = table.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) table.entries.push_back({gens[i], gens[j], {}});

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t k = next++; k < table.entries.size(); k = next++) {
        auto& e = table.entries[k];
        e.value = bracket(n, e.a, e.b, kind);
        std::size_t d = ++done;
        if (progress) {
          std::lock_guard lock(progress_mutex);
          progress(d, table.entries.size());
        }
      }
    } catch (...) {
      std::lock_guard lock(progress_mutex);
      if (!failure) failure = std::current_exception();
      next = table.entries.size();
    }
  };
  unsigned count = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return table;
}

int algebra_order(const BracketTable& table) {
  int order = 0;
  for (const auto& e : table.entries) order = std::max(order, e.value.degree());
  return order;
}

std::vector<std::string> identity_families() {
  return {"alde1", "rela1", "funrel", "addrel", "addrels", "c2c3", "eq1equ1"};
}

Report verify_identities(int n, const std::string& family) {
  auto fams = identity_families();
  if (std::find(fams.begin(), fams.end(), family) == fams.end())
    throw std::invalid_argument("unknown identity family '" + family + "'");
  auto need = [&](bool ok, const char* range) {
    if (!ok) throw std::invalid_argument("family " + family + " needs " + range);
  };
  Report rep;
  rep.n = n;
  PolyResolver r{n, {}};
  const std::map<char, int> none;

  if (family == "alde1") {
    need(n >= 3, "n >= 3");
    for (const auto& a : assignments("ijk", n)) {
      if (!(a.at('i') < a.at('j') && a.at('j') < a.at('k'))) continue;
      auto res = eval("p_ij p_jk p_ik - p_ijk p_ikj", a, r);
      rep.checks.push_back(zero_check("cubic cycle dependence " + assignment_str(a), family, res));
    }
  } else if (family == "rela1") {
    need(n >= 3, "n >= 3");
    const auto& ctx = sl_context(n);
    auto one = Polynomial::constant(ctx.registry(), Scalar(1));
    auto basis = enumerate_basis(n, false);
    auto p = [&](std::vector<int> idx) { return cycle_poly(n, canonical_cycle(std::move(idx))); };
    // each cycle times its opposite is the product of its edges
    for (const auto& c : basis.cycles) {
      if (c.length() < 3 || fg_label(c.indices) != c.indices) continue;
      auto edges = one;
      for (int u = 0; u < c.length(); ++u) edges = edges * p({c.indices[u], c.indices[(u + 1) % c.length()]});
      auto res = edges - p(c.indices) * p(opposite(c.indices));
      rep.checks.push_back(zero_check("cycle times opposite p" + join_indices(c.indices), family, res));
    }
    // product of all quadratic monomials through the two Hamiltonian cycles
    auto all_pairs = one;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) all_pairs = all_pairs * p({i, j});
    std::vector<int> up(n), printed_down{1};
    std::iota(up.begin(), up.end(), 1);
    for (int s = n - 1; s >= 2; --s) printed_down.push_back(s);
    auto chords = one, chords_with_closing = one;
    for (int m = 1; m <= n - 2; ++m)
      for (int s = m + 2; s <= n; ++s) {
        chords_with_closing = chords_with_closing * p({m, s});
        if (!(m == 1 && s == n)) chords = chords * p({m, s});
      }
    auto res = all_pairs - p(up) * p(opposite(up)) * chords;
    rep.checks.push_back(zero_check("pair product through the full cycle and its opposite", family, res));
    auto printed = all_pairs - p(up) * p(printed_down) * chords_with_closing;
    rep.diagnostics.push_back(
        {"pair product, printed form", printed.is_zero() ? "match" : "mismatch",
         printed.is_zero() ? "holds as printed"
                           : "as printed (second cycle p_{1,n-1,...,2}, chord product including p_{1,n}) the "
                             "residual has " +
                                 std::to_string(printed.size()) +
                                 " terms; the identity holds with p_{1,n,...,2} and the chord p_{1,n} omitted"});
    // product of all k-cycles is a power of the pair product
    for (int k = 3; k <= n; ++k) {
      int phi = 1;
      for (int s = 2; s <= k - 1; ++s) phi *= n - s;
      auto prod = one;
      for (const auto& c : basis.cycles)
        if (c.length() == k) prod = prod * p(c.indices);
      res = prod - all_pairs.pow(phi);
      rep.checks.push_back(zero_check("product of all " + std::to_string(k) + "-cycles", family, res));
    }
  } else if (family == "funrel") {
    need(n >= 3, "n >= 3");
    for (const auto& a : assignments("ijk", n)) {
      if (!(a.at('i') < a.at('j') && a.at('j') < a.at('k'))) continue;
      auto res = eval("g_ijk^2 - f_ijk^2 - c_ij c_jk c_ik", a, r);
      rep.checks.push_back(zero_check("g^2 - f^2 " + assignment_str(a), family, res));
    }
  } else if (family == "addrel") {
    need(n >= 3, "n >= 3");
    for (const auto& a : assignments("ijk", n)) {
      auto res = eval("f_ijk f_kji + g_ijk g_kji - c_ij c_jk c_ki", a, r);
      rep.checks.push_back(zero_check("three-index product " + assignment_str(a), family, res));
    }
  } else if (family == "addrels") {
    need(n >= 4, "n >= 4");
    for (const auto& a : assignments("ijk", n)) {
      auto res = eval("f_ijk f_kji + g_ijk g_kji - c_ij c_jk c_ki", a, r);
      rep.checks.push_back(zero_check("three-index product " + assignment_str(a), family, res));
    }
    for (const auto& a : assignments("ijkl", n)) {
      auto res = eval("f_ijkl f_lkji + g_ijkl g_lkji - c_ij c_jk c_kl c_li", a, r);
      rep.checks.push_back(zero_check("four-index product " + assignment_str(a), family, res));
    }
  } else if (family == "c2c3") {
    need(n == 3, "n = 3");
    rep.checks.push_back(zero_check(
        "quadratic Casimir", family, eval("c_12 + c_13 + c_23 - (cas_2 - 1/2 (c_1^2 + c_2^2 + c_3^2))", none, r)));
    rep.checks.push_back(zero_check(
        "cubic Casimir", family,
        eval("2 g_123 - c_3 c_12 - c_2 c_13 - c_1 c_23 - (cas_3 - 1/3 (c_1^3 + c_2^3 + c_3^3))", none, r)));
  } else if (family == "eq1equ1") {
    need(n == 3, "n = 3");
    for (const auto& row : detail::rescaled_identities_n3()) {
      auto res = eval(row.lhs, none, r) - eval(row.rhs, none, r);
      rep.checks.push_back(zero_check("rescaled " + row.label, family, res));
    }
    for (const auto& row : detail::rescaled_brackets_n3()) {
      auto lhs = eval(row.lhs, none, r);
      auto rhs = eval(row.rhs, none, r);
      auto res = lhs - rhs;
      std::string text = res.is_zero() ? "holds" : "residual " + std::to_string(res.size()) + " terms; " +
                                                        scale_relation(rhs, lhs);
      if (!row.note.empty()) text += " (" + row.note + ")";
      rep.diagnostics.push_back({"rescaled " + row.label, res.is_zero() ? "match" : "mismatch", text});
    }
  }
  return rep;
}

CasimirK casimir_K(int n, std::array<int, 3> indices) {
  if (n != 3) throw std::invalid_argument("casimir_K is defined for n = 3");
  check_indices(3, {indices[0], indices[1], indices[2]}, 3, "casimir_K");
  static const std::string k_template =
      "f_ijk f_jki + c_ij c_jk c_ki - (c_i c_jk + c_j c_ik + c_k c_ij) (g_ijk - 1/4 (c_i c_jk + c_j c_ik + c_k c_ij))";
  PolyResolver r{n, {}};
  auto at = [&](int i, int j, int k) { return std::map<char, int>{{'i', i}, {'j', j}, {'k', k}}; };
  auto [i, j, k] = indices;
  CasimirK out{eval(k_template, at(i, j, k), r), {}};
  auto& rep = out.report;
  rep.n = n;
  const std::string tag = "quadratic-algebra-casimir";
  const std::string label = "K" + std::to_string(i) + std::to_string(j) + std::to_string(k);
  for (const auto& g : table_generators(n, BasisKind::P))
    rep.checks.push_back(
        zero_check("{" + label + ", " + g.name() + "}", tag, sl_context(n).bracket(out.K, generator_poly(n, g))));
  rep.checks.push_back(
      zero_check(label + " = (c^[3] - c_i c_j c_k)^2 / 4", tag, out.K - eval("1/4 (cas_3 - c_i c_j c_k)^2", at(i, j, k), r)));
  rep.checks.push_back(zero_check(label + " swap of first pair", tag, out.K - eval(k_template, at(j, i, k), r)));
  rep.checks.push_back(zero_check(label + " cyclic shift", tag, out.K - eval(k_template, at(j, k, i), r)));
  rep.checks.push_back(zero_check(
      label + " against f123^2 form", tag,
      out.K - eval("f_123^2 + c_12 c_23 c_13 - (c_1 c_23 + c_2 c_13 + c_3 c_12) (g_123 - 1/4 (c_1 c_23 + c_2 c_13 + "
                   "c_3 c_12))",
                   {}, r)));
  return out;
}

Report printed_table_n3() {
  const int n = 3;
  Report rep;
  rep.n = n;
  const std::map<char, int> none;
  ExprResolver pres{n, BasisKind::P};
  auto basis = table_generators(n, BasisKind::P);

  for (const auto& row : detail::p_table_n3()) {
    auto computed = eval_expr(row.lhs, none, pres);
    auto printed = eval_expr(row.rhs, none, pres);
    auto diff = computed - printed;
    if (row.note.empty()) {
      rep.checks.push_back({"p-basis " + row.label, "p-basis-table", diff.is_zero() ? "pass" : "FAIL", diff.terms().size()});
      continue;
    }
    std::string owners;
    for (std::size_t a = 0; a < basis.size(); ++a)
      for (std::size_t b = 0; b < basis.size(); ++b)
        if (a != b && bracket(n, basis[a], basis[b]) == printed && !printed.is_zero())
          owners += (owners.empty() ? "" : ", ") + std::string("{") + basis[a].name() + ", " + basis[b].name() + "}";
    std::string text = "printed as " + row.lhs + " = " + printed.str() + "; recomputed " + row.lhs + " = " +
                       computed.str() + "; the printed right side is the bracket " +
                       (owners.empty() ? std::string("of no basis pair") : owners);
    rep.diagnostics.push_back({"p-basis " + row.label, diff.is_zero() ? "match" : "mismatch", text});
  }

  ExprResolver cres{n, BasisKind::Cfg};
  for (const auto& row : detail::cfg_relations_n3()) {
    auto diff = eval_expr(row.lhs, none, cres) - eval_expr(row.rhs, none, cres);
    rep.checks.push_back({"cfg " + row.label, "cfg-quadratic-relations", diff.is_zero() ? "pass" : "FAIL",
                          diff.terms().size()});
  }

  PolyResolver r{n, {}};
  for (const auto& row : detail::cfg_general_n3()) {
    std::size_t failing = 0;
    for (const auto& a : assignments("ijk", n))
      if (!(eval(row.lhs, a, r) - eval(row.rhs, a, r)).is_zero()) ++failing;
    rep.checks.push_back({"general " + row.label + " (6 assignments)", "cfg-general-form", failing ? "FAIL" : "pass", failing});
  }
  return rep;
}

Report printed_listing_n4() {
  const int n = 4;
  Report rep;
  rep.n = n;
  PolyResolver r{n, {}};
  ExprResolver cres{n, BasisKind::Cfg};
  auto all = assignments("ijkl", n);
  for (const auto& row : detail::cubic_listing_n4()) {
    std::size_t holds = 0;
    std::string example;
    for (const auto& a : all) {
      auto lhs = eval(row.lhs, a, r);
      auto rhs = eval(row.rhs, a, r);
      if ((lhs - rhs).is_zero()) {
        ++holds;
      } else if (example.empty()) {
        example = "; at " + assignment_str(a) + " printed: " + eval_expr(row.rhs, a, cres).str() +
                  " | recomputed: " + eval_expr(row.lhs, a, cres).str() + " | " + scale_relation(rhs, lhs);
      }
    }
    std::string text = std::to_string(holds) + "/" + std::to_string(all.size()) + " index assignments hold" + example;
    if (!row.note.empty()) text += " (" + row.note + ")";
    if (holds != all.size() && !row.corrected.empty()) {
      std::size_t fixed = 0;
      for (const auto& a : all)
        if ((eval(row.lhs, a, r) - eval(row.corrected, a, r)).is_zero()) ++fixed;
      text += "; amended right side " + row.corrected + " holds for " + std::to_string(fixed) + "/" +
              std::to_string(all.size());
    }
    rep.diagnostics.push_back({"listing " + row.label, holds == all.size() ? "match" : "mismatch", text});
  }
  return rep;
}

Report filtration_check(int n) {
  if (n < 3) throw std::invalid_argument("filtration_check needs n >= 3");
  Report rep;
  rep.n = n;
  auto small = structure_table(n - 1, BasisKind::P);
  std::size_t bad = 0;
  for (const auto& e : small.entries) {
    if (e.value == bracket(n, e.a, e.b, BasisKind::P)) continue;
    ++bad;
    rep.diagnostics.push_back({"filtration {" + e.a.name() + ", " + e.b.name() + "}", "mismatch",
                               "A" + std::to_string(n - 1) + ": " + e.value.str() + " | A" + std::to_string(n) +
                                   ": " + bracket(n, e.a, e.b, BasisKind::P).str()});
  }
  rep.checks.push_back({"A" + std::to_string(n - 1) + " table inside A" + std::to_string(n) + " (" +
                            std::to_string(small.entries.size()) + " pairs)",
                        "filtration", bad ? "FAIL" : "pass", bad});
  return rep;
}

}  // namespace slc
