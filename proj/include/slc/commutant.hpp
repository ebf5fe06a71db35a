#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slc/generators.hpp"
#include "slc/sl_model.hpp"

namespace slc {

/// Cycle label (i1,...,id) with distinct indices, rotated so i1 is minimal.
struct CycleMonomial {
  std::vector<int> indices;

  int length() const { return static_cast<int>(indices.size()); }
  friend bool operator==(const CycleMonomial&, const CycleMonomial&) = default;
  /// Order by length, then lexicographically.
  friend bool operator<(const CycleMonomial& a, const CycleMonomial& b);
};

/// Rotates to the minimal index; rejects repeats and lengths below 2.
CycleMonomial canonical_cycle(std::vector<int> indices);

/// Number of d-cycles in S_n: n! / (d (n-d)!).
std::int64_t nu(int n, int d);

/// (n-1) + sum_{d=2}^{n} nu(n, d).
std::int64_t linear_dimension(int n);

/// p_{i1..id} = e_{i1,i2} e_{i2,i3} ... e_{id,i1} over the sl(n) registry.
Polynomial cycle_poly(int n, const CycleMonomial& c);

struct CommutantBasis {
  int n = 0;
  std::vector<int> cartan;            // 1..n-1
  std::vector<CycleMonomial> cycles;  // by (length, lex)

  std::size_t size() const { return cartan.size() + cycles.size(); }
  /// {"n":..,"generators":[{"kind":"h","index":1},{"kind":"cycle","indices":[1,2]},...]}
  std::string to_json() const;
};

/// All Cartan generators and d-cycles, 2 <= d <= n. With `verify` set each
/// cycle polynomial is checked to Poisson-commute with the Cartan subalgebra.
CommutantBasis enumerate_basis(int n, bool verify = true);

/// Splits a weight-zero monomial in e-variables into directed cycles.
/// Greedy walk: start at the smallest vertex with an unused out-edge and
/// always take the smallest available target; a cycle is emitted whenever
/// the walk returns to a vertex already on the current path.
/// Throws std::invalid_argument("not in commutant") for nonzero weight.
std::vector<CycleMonomial> factor_cycles(const Monomial& m, int n);

/// Rewrites a Cartan-commuting polynomial as h-powers times cycle powers.
NormalFormExpr normal_form(const Polynomial& p, int n);

/// Jacobian rank test for h_l, all p_{i,j} and all p_{1,j,k} (1<j<k) at a
/// fixed-seed rational point; true iff the rank equals n^2 - n.
bool independence_check(int n, std::uint64_t seed = 20240917);

}  // namespace slc
