#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "slc/poly.hpp"

namespace slc {

struct StructureEntry {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  Scalar c;
};

/// Structure constants C_ij^k of a Lie algebra in a named basis.
///
/// Entries may be supplied for one or both orderings of (i,j); the missing
/// ordering is filled by antisymmetry. Construction rejects nonzero C_ii^k,
/// inconsistent antisymmetric pairs, and Jacobi violations (checked on all
/// triples up to dimension 36, on a fixed-seed sample above).
class StructureConstants {
public:
  using Row = std::vector<std::pair<std::size_t, Scalar>>;

  StructureConstants(std::vector<std::string> names, const std::vector<StructureEntry>& entries);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  /// Sparse expansion of [x_i, x_j] as (k, C_ij^k) pairs sorted by k.
  const Row& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  /// Jacobi identity on every triple; used by construction for small dim.
  bool jacobi_exhaustive() const;
  bool jacobi_sampled(std::size_t samples, std::uint64_t seed) const;

  /// {"dim":n,"names":[...],"entries":[[i,j,k,"num/den"],...]} with i<j.
  static StructureConstants from_json(const std::string& text);
  std::string to_json() const;

private:
  bool jacobi_triple(std::size_t a, std::size_t b, std::size_t c) const;

  std::vector<std::string> names_;
  std::vector<Row> table_;
};

/// A Poisson bracket on a polynomial ring fixed by the brackets of its
/// variables. Variables with no listed bracket are central (parameters).
class PoissonBracket {
public:
  /// Lie-Poisson (Berezin) bracket; every basis name must be in `reg`.
  static PoissonBracket lie_poisson(const StructureConstants& sc, RegistryPtr reg);
  /// Canonical bracket with {q_k, p_k} = 1 for each (q_k, p_k) pair.
  static PoissonBracket canonical(RegistryPtr reg,
                                  const std::vector<std::pair<std::string, std::string>>& pairs);

  const RegistryPtr& registry() const { return reg_; }

  Polynomial operator()(const Polynomial& p, const Polynomial& q) const;
  /// Bracket of two registry variables.
  const Polynomial* variable_bracket(std::size_t a, std::size_t b) const;

private:
  explicit PoissonBracket(RegistryPtr reg);
  void set(std::size_t a, std::size_t b, Polynomial value);

  RegistryPtr reg_;
  // for each variable a: (b, {x_a, x_b}) with nonzero value, sorted by b
  std::vector<std::vector<std::pair<std::size_t, Polynomial>>> rows_;
};

/// Berezin bracket {P,Q} = C_ij^k x_k ∂_i P ∂_j Q.
Polynomial berezin_bracket(const Polynomial& p, const Polynomial& q, const StructureConstants& sc);

/// X_i(P) = {x_i, P}.
Polynomial adjoint_apply(std::size_t i, const Polynomial& p, const StructureConstants& sc);

/// True iff {x_i, P} = 0 for every listed basis index.
bool commutes_with(const Polynomial& p, std::span<const std::size_t> subalgebra,
                   const StructureConstants& sc);

/// dim minus the rank of the matrix (C_ij^k x_k) at `point`, rows i from
/// `subalgebra`, columns over the whole basis.
std::size_t independence_count(const StructureConstants& sc, std::span<const std::size_t> subalgebra,
                               const std::map<std::string, Scalar>& point);

}  // namespace slc
