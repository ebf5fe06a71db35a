#pragma once

#include <boost/container/small_vector.hpp>

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "slc/scalar.hpp"

namespace slc {

/// Raised when an operation mixes incompatible registries, unknown variables,
/// or violates the Laurent rules.
class PolyError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered set of variable names. The order fixes the monomial order.
/// Negative exponents are permitted only on variables flagged as Laurent.
class VariableRegistry {
public:
  explicit VariableRegistry(std::vector<std::string> names,
                            const std::vector<std::string>& laurent = {});

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(const std::string& name) const;
  /// Index of `name`; throws PolyError when absent.
  std::size_t index(const std::string& name) const;
  bool laurent_allowed(std::size_t i) const { return laurent_.at(i); }

  bool same_as(const VariableRegistry& other) const;

private:
  std::vector<std::string> names_;
  std::vector<bool> laurent_;
  std::map<std::string, std::size_t> lookup_;
};

using RegistryPtr = std::shared_ptr<const VariableRegistry>;

RegistryPtr make_registry(std::vector<std::string> names,
                          const std::vector<std::string>& laurent = {});

/// Dense exponent vector sized to its registry. Entries are signed; zero
/// entries carry no information, so the monomial is logically sparse.
class Monomial {
public:
  using Storage = boost::container::small_vector<std::int16_t, 24>;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}

  std::size_t nvars() const { return exps_.size(); }
  int exponent(std::size_t var) const { return exps_[var]; }
  void set_exponent(std::size_t var, int e);
  void add_exponent(std::size_t var, int e) { set_exponent(var, exps_[var] + e); }

  bool is_one() const;
  int total_degree() const;
  bool has_negative() const;

  /// Nonzero (variable, exponent) pairs in registry order.
  std::vector<std::pair<std::size_t, int>> support() const;

  Monomial& operator*=(const Monomial& o);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
  /// Canonical order: first differing variable (registry order) decides,
  /// larger exponent first.
  friend bool operator<(const Monomial& a, const Monomial& b);

  std::size_t hash() const;
  const Storage& raw() const { return exps_; }

private:
  Storage exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

using Term = std::pair<Monomial, Scalar>;

/// Sparse exact Laurent polynomial over the Gaussian rationals.
/// Terms are sorted by the canonical monomial order with no zero
/// coefficients, so structural equality is mathematical equality.
class Polynomial {
public:
  explicit Polynomial(RegistryPtr reg) : reg_(std::move(reg)) {}

  static Polynomial constant(RegistryPtr reg, const Scalar& c);
  static Polynomial variable(RegistryPtr reg, std::size_t var);
  static Polynomial variable(RegistryPtr reg, const std::string& name);
  static Polynomial monomial(RegistryPtr reg, Monomial m, const Scalar& c);
  /// Sums duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(RegistryPtr reg, std::vector<Term> terms);
  /// Inverse of str(). Accepts "0", "c", "c * x^2 y", "(1+2i) * x + -1 * y".
  static Polynomial parse(RegistryPtr reg, const std::string& text);

  const RegistryPtr& registry() const { return reg_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (zero when absent).
  Scalar constant_term() const;
  int total_degree() const;
  /// Largest |exponent| sum over the listed variables across all terms.
  int degree_in(std::span<const std::size_t> vars) const;
  int min_exponent(std::size_t var) const;
  int max_exponent(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& c);
  void add_scaled(const Polynomial& o, const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial operator+(const Scalar& c) const { return *this + constant(reg_, c); }
  Polynomial operator-(const Scalar& c) const { return *this - constant(reg_, c); }

  /// Non-negative powers for any polynomial; negative powers only for a
  /// single term whose variables are all Laurent-allowed.
  Polynomial pow(int e) const;

  Polynomial derivative(std::size_t var) const;
  Polynomial derivative(const std::string& name) const { return derivative(reg_->index(name)); }

  /// Simultaneous substitution. A variable occurring with a negative
  /// exponent may only receive a single-term image.
  Polynomial substitute(const std::map<std::size_t, Polynomial>& assignment) const;
  Polynomial substitute(const std::map<std::string, Polynomial>& assignment) const;

  /// Re-expresses the polynomial over another registry containing all of
  /// its variables that actually occur.
  Polynomial rebase(RegistryPtr target) const;

  std::complex<double> evaluate(std::span<const std::complex<double>> values) const;
  Scalar evaluate_exact(std::span<const Scalar> values) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical text "coeff * v1^e1 v2^e2 + ..." in monomial order.
  std::string str() const;
  std::string monomial_str(const Monomial& m) const;

  void check_compatible(const Polynomial& o) const;

private:
  void check_laurent(const Monomial& m) const;

  RegistryPtr reg_;
  std::vector<Term> terms_;
};

/// Hash-map accumulator for building large polynomials term by term.
class PolyAccumulator {
public:
  explicit PolyAccumulator(RegistryPtr reg) : reg_(std::move(reg)) {}
  void add(const Monomial& m, const Scalar& c);
  void add(Monomial&& m, Scalar&& c);
  void add(const Polynomial& p, const Scalar& c = Scalar(1));
  Polynomial finish() &&;

private:
  RegistryPtr reg_;
  std::unordered_map<Monomial, Scalar, MonomialHash> acc_;
};

}  // namespace slc
