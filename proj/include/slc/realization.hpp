#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slc/lie_poisson.hpp"
#include "slc/poly.hpp"
#include "slc/report.hpp"

namespace slc {

/// Phase space of the sphere model: coordinates s1..sn, momenta p1..pn and
/// parameters a1..an (the alpha_k). Every s_k is Laurent because the
/// realization divides by each of them. The bracket is {s_i, p_j} = delta_ij.
class CanonicalRing {
public:
  explicit CanonicalRing(int n);

  int n() const { return n_; }
  const RegistryPtr& registry() const { return reg_; }
  const PoissonBracket& bracket() const { return pb_; }
  Polynomial bracket(const Polynomial& a, const Polynomial& b) const { return pb_(a, b); }

  std::size_t s_index(int k) const { return static_cast<std::size_t>(k - 1); }
  std::size_t p_index(int k) const { return static_cast<std::size_t>(n_ + k - 1); }
  std::size_t alpha_index(int k) const { return static_cast<std::size_t>(2 * n_ + k - 1); }
  Polynomial s(int k) const { return Polynomial::variable(reg_, s_index(k)); }
  Polynomial p(int k) const { return Polynomial::variable(reg_, p_index(k)); }
  Polynomial alpha(int k) const { return Polynomial::variable(reg_, alpha_index(k)); }
  Polynomial constant(const Scalar& c) const { return Polynomial::constant(reg_, c); }

  /// s_i p_j - s_j p_i.
  Polynomial angular(int i, int j) const;
  /// 1/2 sum_{i<j} (s_i p_j - s_j p_i)^2 + 1/2 sum_k alpha_k^2 / s_k^2.
  Polynomial hamiltonian() const;
  /// 1/2 sum_k p_k^2 + 1/2 sum_k alpha_k^2 / s_k^2; equals hamiltonian() on shell.
  Polynomial cartesian_hamiltonian() const;
  /// -1/4 ((s_i p_j - s_j p_i)^2 + (s_i^2 + s_j^2)(alpha_i^2/s_i^2 + alpha_j^2/s_j^2)).
  Polynomial rescaled_constant(int i, int j) const;

private:
  int n_;
  RegistryPtr reg_;
  PoissonBracket pb_;
};

const CanonicalRing& canonical_ring(int n);

/// Images of the sl(n) generators in the canonical ring:
///   h_k  -> I (a_k - a_{k+1})
///   e_ij -> -1/2 ((s_i p_j - s_j p_i) - I (a_i s_j/s_i + a_j s_i/s_j))
/// for both orientations of i != j.
class RealizationMap {
public:
  explicit RealizationMap(int n);

  int n() const { return n_; }
  /// Image of an sl(n) registry variable.
  const Polynomial& image(std::size_t sl_var) const { return images_.at(sl_var); }
  const Polynomial& image(const std::string& name) const;
  /// Image of an sl(n) polynomial under the algebra homomorphism.
  Polynomial apply(const Polynomial& p) const;

private:
  int n_;
  std::vector<Polynomial> images_;
};

/// Throws std::invalid_argument for n < 3.
RealizationMap build_realization(int n);
/// Cached realization shared across calls.
const RealizationMap& realization(int n);

/// On-shell representative modulo s.s = 1 and s.p = 0, away from s_n = 0:
/// p_n is eliminated through s_n p_n = -sum_{k<n} s_k p_k, then even powers
/// of s_n are replaced by powers of 1 - sum_{k<n} s_k^2 after clearing
/// negative powers of s_n. The result has no p_n, and is zero exactly when
/// the input vanishes on the constraint surface.
Polynomial reduce_on_shell(const Polynomial& p, int n);

/// "identical" when lhs - rhs is already zero, "on_shell" when only its
/// reduction vanishes, "FAIL" otherwise (residual_terms counts the reduced
/// residual).
CheckRecord shell_check(std::string name, std::string relation, const Polynomial& lhs, const Polynomial& rhs);

/// Largest |lhs - rhs| over `points` random constraint-surface points;
/// alpha and the phase-space point are drawn from `seed`.
double float_residual(const Polynomial& lhs, const Polynomial& rhs, int points, std::uint64_t seed);

inline constexpr std::uint64_t kDefaultSeed = 20240917;

/// Brackets of the realized commutant generators (c_i, c_ij, f, g for every
/// index set) against the realized sl(n) brackets. For n <= 4 every
/// unordered pair is checked; for n = 5 only pairs with a c_i or c_ij
/// unless `all_pairs` is set (4005 pairs, tens of minutes).
/// sl(n) generator pairs are measured and reported as diagnostics.
Report homomorphism_check(int n, std::uint64_t seed = kDefaultSeed, bool all_pairs = false);

/// Casimir identifications, collapse identities of g and four-index
/// elements, and the realized c_ij. n in {3, 4, 5}.
Report collapse_report(int n, std::uint64_t seed = kDefaultSeed);

/// Racah algebra relations in the realization: R(3) for n = 3, R(4) for
/// n = 4, the linear dependence and Hamiltonian identity for n = 5.
Report racah_check(int n, std::uint64_t seed = kDefaultSeed);

/// All three reports for one n.
Report realization_report(int n, std::uint64_t seed = kDefaultSeed, bool all_pairs = false);

}  // namespace slc
