#include "slc/commutant.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "slc/linalg.hpp"

namespace slc {

bool operator<(const CycleMonomial& a, const CycleMonomial& b) {
  if (a.indices.size() != b.indices.size()) return a.indices.size() < b.indices.size();
  return a.indices < b.indices;
}

CycleMonomial canonical_cycle(std::vector<int> indices) {
  if (indices.size() < 2) throw std::invalid_argument("a cycle needs at least two indices");
  auto sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("repeated index in cycle");
  if (sorted.front() < 1) throw std::invalid_argument("cycle indices start at 1");
  std::rotate(indices.begin(), std::min_element(indices.begin(), indices.end()), indices.end());
  return {std::move(indices)};
}

std::int64_t nu(int n, int d) {
  if (d < 2 || d > n) throw std::invalid_argument("nu(n, d) needs 2 <= d <= n");
  // n!/(n-d)! / d
  std::int64_t falling = 1;
  for (int k = n - d + 1; k <= n; ++k) falling *= k;
  return falling / d;
}

std::int64_t linear_dimension(int n) {
  if (n < 2) throw std::invalid_argument("linear_dimension needs n >= 2");
  std::int64_t total = n - 1;
  for (int d = 2; d <= n; ++d) total += nu(n, d);
  return total;
}

Polynomial cycle_poly(int n, const CycleMonomial& c) {
  const auto& ctx = sl_context(n);
  Monomial m(ctx.registry()->size());
  const auto& idx = c.indices;
  for (std::size_t k = 0; k < idx.size(); ++k)
    m.add_exponent(ctx.e_index(idx[k], idx[(k + 1) % idx.size()]), 1);
  return Polynomial::monomial(ctx.registry(), std::move(m), Scalar(1));
}

std::string CommutantBasis::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (int l : cartan) gens.push_back({{"kind", "h"}, {"index", l}});
  for (const auto& c : cycles) gens.push_back({{"kind", "cycle"}, {"indices", c.indices}});
  return nlohmann::json{{"n", n}, {"generators", gens}}.dump();
}

CommutantBasis enumerate_basis(int n, bool verify) {
  if (n < 2) throw std::invalid_argument("enumerate_basis needs n >= 2");
  CommutantBasis basis;
  basis.n = n;
  for (int l = 1; l < n; ++l) basis.cartan.push_back(l);
  for (int d = 2; d <= n; ++d) {
    // subsets of size d via bitmask, then all orders of the non-minimal part
    std::vector<CycleMonomial> level;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (__builtin_popcount(mask) != d) continue;
      std::vector<int> members;
      for (int k = 0; k < n; ++k)
        if (mask & (1u << k)) members.push_back(k + 1);
      std::vector<int> rest(members.begin() + 1, members.end());
      do {
        std::vector<int> c{members.front()};
        c.insert(c.end(), rest.begin(), rest.end());
        level.push_back({std::move(c)});
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::sort(level.begin(), level.end());
    basis.cycles.insert(basis.cycles.end(), level.begin(), level.end());
  }
  if (verify) {
    const auto& ctx = sl_context(n);
    for (const auto& c : basis.cycles) {
      auto p = cycle_poly(n, c);
      for (int l = 1; l < n; ++l)
        if (!ctx.bracket(ctx.h(l), p).is_zero())
          throw std::logic_error("cycle monomial does not commute with the Cartan subalgebra");
    }
  }
  return basis;
}

std::vector<CycleMonomial> factor_cycles(const Monomial& m, int n) {
  const auto& ctx = sl_context(n);
  std::vector<std::vector<int>> edges(n + 1, std::vector<int>(n + 1, 0));
  std::vector<int> balance(n + 1, 0);
  int total = 0;
  for (auto [v, e] : m.support()) {
    auto [j, k] = ctx.e_pair(v);
    if (j == 0) throw std::invalid_argument("factor_cycles expects e-variables only");
    if (e < 0) throw std::invalid_argument("factor_cycles expects nonnegative exponents");
    edges[j][k] += e;
    balance[j] += e;
    balance[k] -= e;
    total += e;
  }
  for (int v = 1; v <= n; ++v)
    if (balance[v] != 0) throw std::invalid_argument("not in commutant");

  std::vector<CycleMonomial> out;
  auto next_target = [&](int from) {
    for (int t = 1; t <= n; ++t)
      if (edges[from][t] > 0) return t;
    return 0;
  };
  while (total > 0) {
    int start = 1;
    while (next_target(start) == 0) ++start;
    std::vector<int> path{start};
    int cur = start;
    while (!path.empty()) {
      int t = next_target(cur);
      --edges[cur][t];
      --total;
      auto pos = std::find(path.begin(), path.end(), t);
      if (pos == path.end()) {
        path.push_back(t);
        cur = t;
        continue;
      }
      out.push_back(canonical_cycle(std::vector<int>(pos, path.end())));
      path.erase(pos + 1, path.end());
      cur = t;
      // a closed walk back at the start ends this pass
      if (path.size() == 1 && next_target(cur) == 0) path.clear();
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NormalFormExpr normal_form(const Polynomial& p, int n) {
  const auto& ctx = sl_context(n);
  std::vector<NormalFormExpr::TermT> terms;
  for (const auto& [m, c] : p.terms()) {
    Word w;
    Monomial e_part(m.nvars());
    for (auto [v, e] : m.support()) {
      if (e < 0) throw std::invalid_argument("normal_form expects a polynomial");
      if (ctx.e_pair(v).first == 0)
        w.emplace_back(GeneratorId::cartan(static_cast<int>(v) + 1), e);
      else
        e_part.set_exponent(v, e);
    }
    for (const auto& cyc : factor_cycles(e_part, n)) w.emplace_back(GeneratorId::cycle(cyc.indices), 1);
    terms.emplace_back(c, std::move(w));
  }
  return NormalFormExpr::from_terms(std::move(terms));
}

bool independence_check(int n, std::uint64_t seed) {
  const auto& ctx = sl_context(n);
  std::vector<Polynomial> elements;
  for (int l = 1; l < n; ++l) elements.push_back(ctx.h(l));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) elements.push_back(cycle_poly(n, {{i, j}}));
  for (int j = 2; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) elements.push_back(cycle_poly(n, {{1, j, k}}));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 13);
  std::vector<Scalar> point(ctx.registry()->size());
  for (auto& x : point) x = Scalar(Rational(num(rng), den(rng)));

  Matrix jac;
  for (const auto& el : elements) {
    std::vector<Scalar> row;
    for (std::size_t v = 0; v < point.size(); ++v) row.push_back(el.derivative(v).evaluate_exact(point));
    jac.push_back(std::move(row));
  }
  return rank(std::move(jac)) == static_cast<std::size_t>(n * n - n);
}

}  // namespace slc
