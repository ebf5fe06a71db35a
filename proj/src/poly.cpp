#include "slc/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace slc {

// ---------------------------------------------------------------------------
// VariableRegistry

VariableRegistry::VariableRegistry(std::vector<std::string> names,
                                   const std::vector<std::string>& laurent)
    : names_(std::move(names)), laurent_(names_.size(), false) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw PolyError("empty variable name");
    if (!lookup_.emplace(names_[i], i).second)
      throw PolyError("duplicate variable name: " + names_[i]);
  }
  for (const auto& l : laurent) laurent_[index(l)] = true;
}

std::optional<std::size_t> VariableRegistry::find(const std::string& name) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableRegistry::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw PolyError("unknown variable: " + name);
  return *i;
}

bool VariableRegistry::same_as(const VariableRegistry& other) const {
  return this == &other || (names_ == other.names_ && laurent_ == other.laurent_);
}

RegistryPtr make_registry(std::vector<std::string> names, const std::vector<std::string>& laurent) {
  return std::make_shared<const VariableRegistry>(std::move(names), laurent);
}

// ---------------------------------------------------------------------------
// Monomial

void Monomial::set_exponent(std::size_t var, int e) {
  if (e > std::numeric_limits<std::int16_t>::max() || e < std::numeric_limits<std::int16_t>::min())
    throw PolyError("exponent overflow");
  exps_[var] = static_cast<std::int16_t>(e);
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::has_negative() const {
  return std::any_of(exps_.begin(), exps_.end(), [](auto e) { return e < 0; });
}

std::vector<std::pair<std::size_t, int>> Monomial::support() const {
  std::vector<std::pair<std::size_t, int>> out;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) out.emplace_back(i, exps_[i]);
  return out;
}

Monomial& Monomial::operator*=(const Monomial& o) {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (o.exps_[i] != 0) set_exponent(i, exps_[i] + o.exps_[i]);
  }
  return *this;
}

bool operator<(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i];
  }
  return false;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= static_cast<std::uint16_t>(e);
    h *= 1099511628211ull;
  }
  return h;
}

// ---------------------------------------------------------------------------
// PolyAccumulator

void PolyAccumulator::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = acc_.try_emplace(m, c);
  if (!inserted) it->second += c;
}

void PolyAccumulator::add(Monomial&& m, Scalar&& c) {
  if (c.is_zero()) return;
  auto it = acc_.find(m);
  if (it == acc_.end())
    acc_.emplace(std::move(m), std::move(c));
  else
    it->second += c;
}

void PolyAccumulator::add(const Polynomial& p, const Scalar& c) {
  if (c.is_zero()) return;
  for (const auto& [m, k] : p.terms()) add(m, c.is_one() ? k : k * c);
}

Polynomial PolyAccumulator::finish() && {
  std::vector<Term> terms;
  terms.reserve(acc_.size());
  for (auto& [m, c] : acc_) {
    if (!c.is_zero()) terms.emplace_back(m, std::move(c));
  }
  acc_.clear();
  return Polynomial::from_terms(reg_, std::move(terms));
}

// ---------------------------------------------------------------------------
// Polynomial

void Polynomial::check_compatible(const Polynomial& o) const {
  if (reg_ != o.reg_ && !reg_->same_as(*o.reg_))
    throw PolyError("registry mismatch between polynomial operands");
}

void Polynomial::check_laurent(const Monomial& m) const {
  if (m.nvars() != reg_->size()) throw PolyError("monomial size does not match registry");
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m.exponent(i) < 0 && !reg_->laurent_allowed(i))
      throw PolyError("negative exponent on non-Laurent variable " + reg_->name(i));
  }
}

Polynomial Polynomial::constant(RegistryPtr reg, const Scalar& c) {
  Polynomial p(reg);
  if (!c.is_zero()) p.terms_.emplace_back(Monomial(reg->size()), c);
  return p;
}

Polynomial Polynomial::variable(RegistryPtr reg, std::size_t var) {
  if (var >= reg->size()) throw PolyError("variable index out of range");
  Monomial m(reg->size());
  m.set_exponent(var, 1);
  Polynomial p(reg);
  p.terms_.emplace_back(std::move(m), Scalar(1));
  return p;
}

Polynomial Polynomial::variable(RegistryPtr reg, const std::string& name) {
  auto i = reg->index(name);
  return variable(std::move(reg), i);
}

Polynomial Polynomial::monomial(RegistryPtr reg, Monomial m, const Scalar& c) {
  Polynomial p(reg);
  p.check_laurent(m);
  if (!c.is_zero()) p.terms_.emplace_back(std::move(m), c);
  return p;
}

Polynomial Polynomial::from_terms(RegistryPtr reg, std::vector<Term> terms) {
  Polynomial p(std::move(reg));
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    p.check_laurent(t.first);
    if (!p.terms_.empty() && p.terms_.back().first == t.first) {
      p.terms_.back().second += t.second;
      if (p.terms_.back().second.is_zero()) p.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Scalar Polynomial::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (m.is_one()) return c;
  return Scalar(0);
}

int Polynomial::total_degree() const {
  int d = std::numeric_limits<int>::min();
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return terms_.empty() ? 0 : d;
}

int Polynomial::degree_in(std::span<const std::size_t> vars) const {
  int best = 0;
  for (const auto& t : terms_) {
    int d = 0;
    for (auto v : vars) d += std::abs(t.first.exponent(v));
    best = std::max(best, d);
  }
  return best;
}

int Polynomial::min_exponent(std::size_t var) const {
  int e = 0;
  for (const auto& t : terms_) e = std::min(e, t.first.exponent(var));
  return e;
}

int Polynomial::max_exponent(std::size_t var) const {
  int e = 0;
  for (const auto& t : terms_) e = std::max(e, t.first.exponent(var));
  return e;
}

void Polynomial::add_scaled(const Polynomial& o, const Scalar& c) {
  check_compatible(o);
  if (c.is_zero() || o.is_zero()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, c.is_one() ? b->second : b->second * c);
      ++b;
    } else {
      Scalar s = a->second + (c.is_one() ? b->second : b->second * c);
      if (!s.is_zero()) out.emplace_back(std::move(a->first), std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  add_scaled(o, Scalar(1));
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  add_scaled(o, Scalar(-1));
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else if (!c.is_one()) {
    for (auto& t : terms_) t.second *= c;
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.reg_);
  if (b.terms_.size() == 1 && b.terms_.front().first.is_one()) return a * b.terms_.front().second;
  if (a.terms_.size() == 1 && a.terms_.front().first.is_one()) return b * a.terms_.front().second;
  PolyAccumulator acc(a.reg_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) acc.add(ma * mb, ca * cb);
  }
  return std::move(acc).finish();
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) {
    if (terms_.size() != 1)
      throw PolyError("negative power of a polynomial that is not a single term");
    Monomial m(reg_->size());
    for (std::size_t i = 0; i < m.nvars(); ++i)
      m.set_exponent(i, terms_.front().first.exponent(i) * e);
    Scalar c(1);
    Scalar inv = terms_.front().second.inverse();
    for (int k = 0; k < -e; ++k) c *= inv;
    return monomial(reg_, std::move(m), c);
  }
  Polynomial result = constant(reg_, Scalar(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= reg_->size()) throw PolyError("derivative with respect to unknown variable");
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(var);
    if (e == 0) continue;
    Monomial dm = m;
    dm.set_exponent(var, e - 1);
    out.emplace_back(std::move(dm), c * Scalar(static_cast<long>(e)));
  }
  // differentiation preserves relative order only up to ties, so re-sort
  return from_terms(reg_, std::move(out));
}

Polynomial Polynomial::substitute(const std::map<std::size_t, Polynomial>& assignment) const {
  for (const auto& [v, img] : assignment) {
    if (v >= reg_->size()) throw PolyError("substitution for unknown variable");
    check_compatible(img);
  }
  // cache powers of each image
  std::map<std::pair<std::size_t, int>, Polynomial> powers;
  auto power_of = [&](std::size_t v, int e) -> const Polynomial& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const Polynomial& img = assignment.at(v);
    if (e < 0 && img.size() != 1)
      throw PolyError("negative exponent of " + reg_->name(v) +
                      " cannot take a multi-term image; clear denominators first");
    return powers.emplace(key, img.pow(e)).first->second;
  };
  PolyAccumulator acc(reg_);
  for (const auto& [m, c] : terms_) {
    Monomial rest = m;
    Polynomial factor = constant(reg_, c);
    for (const auto& [v, img] : assignment) {
      int e = m.exponent(v);
      if (e == 0) continue;
      rest.set_exponent(v, 0);
      factor = factor * power_of(v, e);
    }
    for (const auto& [fm, fc] : factor.terms_) acc.add(fm * rest, fc);
  }
  return std::move(acc).finish();
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& assignment) const {
  std::map<std::size_t, Polynomial> by_index;
  for (const auto& [name, img] : assignment) by_index.emplace(reg_->index(name), img);
  return substitute(by_index);
}

Polynomial Polynomial::rebase(RegistryPtr target) const {
  std::vector<std::size_t> map(reg_->size());
  for (std::size_t i = 0; i < reg_->size(); ++i) {
    auto j = target->find(reg_->name(i));
    map[i] = j ? *j : std::numeric_limits<std::size_t>::max();
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial tm(target->size());
    for (auto [v, e] : m.support()) {
      if (map[v] == std::numeric_limits<std::size_t>::max())
        throw PolyError("variable " + reg_->name(v) + " missing from target registry");
      tm.set_exponent(map[v], e);
    }
    out.emplace_back(std::move(tm), c);
  }
  return from_terms(std::move(target), std::move(out));
}

std::complex<double> Polynomial::evaluate(std::span<const std::complex<double>> values) const {
  if (values.size() != reg_->size()) throw PolyError("evaluation point has wrong dimension");
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.to_complex();
    for (auto [v, e] : m.support()) t *= std::pow(values[v], e);
    sum += t;
  }
  return sum;
}

Scalar Polynomial::evaluate_exact(std::span<const Scalar> values) const {
  if (values.size() != reg_->size()) throw PolyError("evaluation point has wrong dimension");
  Scalar sum(0);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (auto [v, e] : m.support()) {
      Scalar base = e < 0 ? values[v].inverse() : values[v];
      for (int k = 0; k < std::abs(e); ++k) t *= base;
    }
    sum += t;
  }
  return sum;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  return a.terms_ == b.terms_;
}

std::string Polynomial::monomial_str(const Monomial& m) const {
  std::string out;
  for (auto [v, e] : m.support()) {
    if (!out.empty()) out += ' ';
    out += reg_->name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string coeff = c.is_real() ? c.str() : "(" + c.str() + ")";
    if (m.is_one())
      out += coeff;
    else
      out += coeff + " * " + monomial_str(m);
  }
  return out;
}

namespace {

std::vector<std::string> split_top_level(const std::string& text, const std::string& sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth == 0 && text.compare(i, sep.size(), sep) == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + sep.size();
      i += sep.size() - 1;
    }
  }
  parts.push_back(text.substr(start));
  return parts;
}

}  // namespace

Polynomial Polynomial::parse(RegistryPtr reg, const std::string& text) {
  if (text == "0") return Polynomial(reg);
  std::vector<Term> terms;
  for (auto part : split_top_level(text, " + ")) {
    auto pieces = split_top_level(part, " * ");
    if (pieces.empty() || pieces.size() > 2) throw PolyError("malformed term: " + part);
    std::string coeff = pieces[0];
    if (!coeff.empty() && coeff.front() == '(') coeff = coeff.substr(1, coeff.size() - 2);
    Monomial m(reg->size());
    if (pieces.size() == 2) {
      std::istringstream vars(pieces[1]);
      std::string factor;
      while (vars >> factor) {
        auto caret = factor.find('^');
        std::string name = factor.substr(0, caret);
        int e = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
        m.add_exponent(reg->index(name), e);
      }
    }
    terms.emplace_back(std::move(m), Scalar::parse(coeff));
  }
  return from_terms(std::move(reg), std::move(terms));
}

}  // namespace slc
