#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "slc/poly.hpp"

namespace slc {

/// Label of a commutant generator. Declaration order of Kind is the
/// primary sort key; ties break on index count, then lexicographically.
struct GeneratorId {
  enum class Kind { Cartan, DerivedC, Cycle, DerivedCij, DerivedF, DerivedG };

  Kind kind;
  std::vector<int> indices;

  static GeneratorId cartan(int l) { return {Kind::Cartan, {l}}; }
  static GeneratorId c(int i) { return {Kind::DerivedC, {i}}; }
  static GeneratorId cycle(std::vector<int> idx);
  static GeneratorId cij(int i, int j) { return {Kind::DerivedCij, {i, j}}; }
  static GeneratorId f(std::vector<int> idx) { return {Kind::DerivedF, std::move(idx)}; }
  static GeneratorId g(std::vector<int> idx) { return {Kind::DerivedG, std::move(idx)}; }

  /// Cartan elements h_l and the c_i are central in the commutant.
  bool is_central() const { return kind == Kind::Cartan || kind == Kind::DerivedC; }

  /// "h1", "c2", "p123", "c12", "f1234"; multi-index labels are joined
  /// with commas once an index exceeds 9.
  std::string name() const;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend std::strong_ordering operator<=>(const GeneratorId& a, const GeneratorId& b);
};

/// Product of generator powers, sorted by generator, powers positive.
using Word = std::vector<std::pair<GeneratorId, int>>;

/// Term order on words: first differing generator decides, the larger
/// power (or presence) first, as in the monomial order.
bool word_before(const Word& a, const Word& b);

std::string word_str(const Word& w);
/// Total power of the non-central generators.
int word_degree(const Word& w);
Word word_mul(const Word& a, const Word& b);

/// Polynomial in commutant generators: sum of coefficient times word.
/// Terms are kept merged, sorted by word and free of zero coefficients.
class NormalFormExpr {
public:
  using TermT = std::pair<Scalar, Word>;

  NormalFormExpr() = default;
  static NormalFormExpr from_terms(std::vector<TermT> terms);
  static NormalFormExpr generator(const GeneratorId& g, const Scalar& c = Scalar(1));
  static NormalFormExpr constant(const Scalar& c);

  const std::vector<TermT>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Maximum word_degree over the terms (0 for the zero expression).
  int degree() const;

  NormalFormExpr& operator+=(const NormalFormExpr& o);
  NormalFormExpr& operator-=(const NormalFormExpr& o);
  NormalFormExpr& operator*=(const Scalar& c);
  friend NormalFormExpr operator+(NormalFormExpr a, const NormalFormExpr& b) { return a += b; }
  friend NormalFormExpr operator-(NormalFormExpr a, const NormalFormExpr& b) { return a -= b; }
  friend NormalFormExpr operator*(NormalFormExpr a, const Scalar& c) { return a *= c; }
  friend NormalFormExpr operator*(const Scalar& c, NormalFormExpr a) { return a *= c; }
  friend NormalFormExpr operator*(const NormalFormExpr& a, const NormalFormExpr& b);
  NormalFormExpr operator-() const { return *this * Scalar(-1); }

  friend bool operator==(const NormalFormExpr&, const NormalFormExpr&) = default;

  /// "0" or terms joined by " + ", e.g. "2 * f123 + -1 * c1 g123".
  std::string str() const;

private:
  std::vector<TermT> terms_;
};

}  // namespace slc
