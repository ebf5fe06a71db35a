#pragma once

#include <map>
#include <utility>
#include <vector>

#include "slc/lie_poisson.hpp"
#include "slc/poly.hpp"

namespace slc {

/// Generator names of sl(n) in basis order: h1..h{n-1}, then e{i}_{i+s}
/// by (i, s), then e{i+s}_{i} by (i, s).
std::vector<std::string> sl_basis_names(int n);

std::string h_name(int i);
std::string e_name(int i, int j);

/// Structure constants of sl(n) with h_i = E_ii - E_{i+1,i+1} and the
/// diagonal E_ii rewritten as Delta_i.
StructureConstants build_sl(int n);

/// Shared immutable sl(n) data: registry over the basis names, structure
/// constants and the Lie-Poisson bracket. Built once per n.
class SlContext {
public:
  explicit SlContext(int n);

  int n() const { return n_; }
  const RegistryPtr& registry() const { return reg_; }
  const StructureConstants& constants() const { return sc_; }
  const PoissonBracket& bracket() const { return pb_; }
  Polynomial bracket(const Polynomial& a, const Polynomial& b) const { return pb_(a, b); }

  std::size_t h_index(int i) const;
  std::size_t e_index(int i, int j) const;
  Polynomial h(int i) const { return Polynomial::variable(reg_, h_index(i)); }
  Polynomial e(int i, int j) const { return Polynomial::variable(reg_, e_index(i, j)); }
  /// Diagonal entry E_kk expressed through the h_s.
  Polynomial delta(int k) const;
  /// Registry indices of h_1..h_{n-1}.
  const std::vector<std::size_t>& cartan() const { return cartan_; }
  /// (j, k) for the variable e_{j,k}; (0, 0) for Cartan variables.
  std::pair<int, int> e_pair(std::size_t var) const { return pairs_.at(var); }

private:
  int n_;
  RegistryPtr reg_;
  StructureConstants sc_;
  PoissonBracket pb_;
  std::vector<std::size_t> cartan_;
  std::vector<std::pair<int, int>> pairs_;
};

const SlContext& sl_context(int n);

/// (mu^1_{j,k}, ..., mu^{n-1}_{j,k}): weights of e_{j,k} under h_1..h_{n-1}.
std::vector<int> weight_of(int n, int j, int k);

/// c^[k] = (1/k) Tr(M^k), M with diagonal Delta_i and off-diagonal e_ij.
Polynomial trace_casimir(int n, int k);

struct HamiltonianSpec {
  std::map<std::pair<int, int>, Scalar> alpha;  // h_i h_j coefficients
  std::map<int, Scalar> beta;                   // h_k coefficients
  std::map<int, Scalar> gamma;                  // c^[l] coefficients, 2 <= l <= n
};

Polynomial algebraic_hamiltonian(int n, const HamiltonianSpec& spec);

}  // namespace slc
