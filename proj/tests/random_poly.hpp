#pragma once

#include <random>
#include <vector>

#include "slc/poly.hpp"

namespace slc::testing {

// Random polynomial with small integer coefficients; `vars` restricts which
// registry variables appear, and Laurent variables may get exponent -1.
inline Polynomial random_poly(const RegistryPtr& reg, std::mt19937_64& rng, int max_terms,
                              int max_deg, const std::vector<std::size_t>& vars,
                              bool complex_coeffs = false) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Term> terms;
  int count = nterms(rng);
  for (int t = 0; t < count; ++t) {
    Monomial m(reg->size());
    int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      std::size_t v = vars[pick(rng)];
      int step = reg->laurent_allowed(v) && (rng() % 3 == 0) ? -1 : 1;
      m.add_exponent(v, step);
    }
    Scalar c = complex_coeffs ? Scalar(Rational(coeff(rng)), Rational(coeff(rng)))
                              : Scalar(static_cast<long>(coeff(rng)));
    terms.emplace_back(std::move(m), c);
  }
  return Polynomial::from_terms(reg, std::move(terms));
}

inline std::vector<std::size_t> all_vars(const RegistryPtr& reg) {
  std::vector<std::size_t> v(reg->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace slc::testing
