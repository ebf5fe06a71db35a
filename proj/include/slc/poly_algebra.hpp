#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "slc/commutant.hpp"
#include "slc/generators.hpp"
#include "slc/report.hpp"

namespace slc {

enum class BasisKind { P, Cfg };

std::string basis_name(BasisKind k);  // "p" or "cfg"

/// Expanded polynomial of a generator over the sl(n) registry.
///   Cartan(l)       h_l
///   DerivedC(i)     (1/n) sum_j (n-j) h_j - sum_{j<i} h_j
///   Cycle(idx)      e_{i1,i2} ... e_{id,i1}
///   DerivedCij(i,j) p_{i,j}
///   DerivedF(idx)   (p_rev - p_fwd)/2, DerivedG(idx) (p_rev + p_fwd)/2
/// where p_fwd is the cycle through idx in order and p_rev the opposite
/// orientation (i1, id, ..., i2). Any order of idx is accepted.
/// Throws std::invalid_argument for out-of-range or repeated indices.
Polynomial generator_poly(int n, const GeneratorId& g);

/// Preferred label for the f/g pair on a cycle of length >= 3: the
/// orientation whose rotated index list is lexicographically smaller.
std::vector<int> fg_label(std::vector<int> cycle);

/// Rewrites every generator of `e` into the canonical generators of `kind`:
///   P:   h_l and rotated cycles; c_i, c_ij, f, g are expanded.
///   Cfg: c_1..c_{n-1} (c_n = -sum of the others), c_ij with i<j, and
///        f/g on their preferred label; h_l and cycles are converted.
NormalFormExpr rewrite(const NormalFormExpr& e, int n, BasisKind kind);

/// Raw sl(n) polynomial of a generator expression.
Polynomial expand(const NormalFormExpr& e, int n);

/// Generators listed in a structure table. P: the commutant basis.
/// Cfg: c_1..c_n, c_ij (i<j), then f and g on every preferred label of
/// length 3..n.
std::vector<GeneratorId> table_generators(int n, BasisKind kind);

/// Berezin bracket of the two generators, in the canonical form of `kind`.
NormalFormExpr bracket(int n, const GeneratorId& a, const GeneratorId& b, BasisKind kind = BasisKind::P);

struct BracketEntry {
  GeneratorId a, b;
  NormalFormExpr value;
};

struct BracketTable {
  int n = 0;
  BasisKind basis = BasisKind::P;
  std::vector<GeneratorId> generators;
  std::vector<BracketEntry> entries;  // every unordered pair, table order

  std::size_t nontrivial() const;
  NormalFormExpr at(const GeneratorId& a, const GeneratorId& b) const;
  /// {n, basis, entries:[{lhs:[a,b], rhs, terms:[{coeff, word:[[gen,power]]}]}]}
  /// over the nonzero entries.
  std::string to_json() const;
  std::string to_text() const;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

/// All unordered pairs, computed on `threads` workers. Deterministic.
BracketTable structure_table(int n, BasisKind kind, unsigned threads = 1, const ProgressFn& progress = {});

/// Maximum generator degree over the table's right-hand sides.
int algebra_order(const BracketTable& table);

/// Families: alde1, rela1, funrel, addrel, addrels, c2c3, eq1equ1.
/// Throws std::invalid_argument for an unknown family or unsupported n.
Report verify_identities(int n, const std::string& family);
std::vector<std::string> identity_families();

struct CasimirK {
  Polynomial K;
  Report report;
};

/// K_{ijk} of the n = 3 quadratic algebra with its checks: centrality
/// against the seven basis generators, K = (c^[3] - c_i c_j c_k)^2 / 4 and
/// the index symmetries.
CasimirK casimir_K(int n, std::array<int, 3> indices);

/// Compares the recomputed n = 3 brackets with the printed p-basis table
/// and the printed c/f/g relations, term by term.
Report printed_table_n3();

/// Compares the printed n = 4 c/f/g relation listing with recomputed
/// brackets for all 24 index assignments.
Report printed_listing_n4();

/// Every A_{n-1} p-basis entry equals the A_n entry of the same labels.
Report filtration_check(int n);

}  // namespace slc
