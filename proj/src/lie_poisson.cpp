#include "slc/lie_poisson.hpp"

#include <algorithm>
#include <random>

#include "json.hpp"
#include "slc/linalg.hpp"

namespace slc {

namespace {

void add_to_row(StructureConstants::Row& row, std::size_t k, const Scalar& c) {
  auto it = std::lower_bound(row.begin(), row.end(), k,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  if (it != row.end() && it->first == k) {
    it->second += c;
    if (it->second.is_zero()) row.erase(it);
  } else if (!c.is_zero()) {
    row.insert(it, {k, c});
  }
}

}  // namespace

StructureConstants::StructureConstants(std::vector<std::string> names,
                                       const std::vector<StructureEntry>& entries)
    : names_(std::move(names)), table_(names_.size() * names_.size()) {
  const std::size_t n = names_.size();
  if (n == 0) throw std::invalid_argument("structure constants need a nonempty basis");
  std::vector<Row> given(n * n);
  std::vector<bool> seen(n * n, false);
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n || e.k >= n) throw std::invalid_argument("structure constant index out of range");
    if (e.i == e.j && !e.c.is_zero()) throw std::invalid_argument("nonzero C_ii^k");
    add_to_row(given[e.i * n + e.j], e.k, e.c);
    seen[e.i * n + e.j] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t ij = i * n + j;
      const std::size_t ji = j * n + i;
      if (seen[ij]) {
        table_[ij] = given[ij];
        if (seen[ji]) {
          Row neg = given[ji];
          for (auto& [k, c] : neg) c = -c;
          if (neg != given[ij]) throw std::invalid_argument("structure constants are not antisymmetric");
        }
      } else if (seen[ji]) {
        table_[ij] = given[ji];
        for (auto& [k, c] : table_[ij]) c = -c;
      }
    }
  }
  bool ok = n <= 36 ? jacobi_exhaustive() : jacobi_sampled(20000, 0x5eed);
  if (!ok) throw std::invalid_argument("structure constants violate the Jacobi identity");
}

bool StructureConstants::jacobi_triple(std::size_t a, std::size_t b, std::size_t c) const {
  // [[a,b],c] + [[b,c],a] + [[c,a],b]
  Row sum;
  auto accumulate = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (const auto& [m, cm] : bracket(x, y))
      for (const auto& [l, cl] : bracket(m, z)) add_to_row(sum, l, cm * cl);
  };
  accumulate(a, b, c);
  accumulate(b, c, a);
  accumulate(c, a, b);
  return sum.empty();
}

bool StructureConstants::jacobi_exhaustive() const {
  const std::size_t n = dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (!jacobi_triple(a, b, c)) return false;
  return true;
}

bool StructureConstants::jacobi_sampled(std::size_t samples, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, dim() - 1);
  for (std::size_t s = 0; s < samples; ++s)
    if (!jacobi_triple(pick(rng), pick(rng), pick(rng))) return false;
  return true;
}

StructureConstants StructureConstants::from_json(const std::string& text) {
  auto doc = nlohmann::json::parse(text);
  auto names = doc.at("names").get<std::vector<std::string>>();
  if (doc.contains("dim") && doc.at("dim").get<std::size_t>() != names.size())
    throw std::invalid_argument("dim does not match the number of names");
  std::vector<StructureEntry> entries;
  for (const auto& e : doc.at("entries")) {
    entries.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<std::size_t>(),
                       Scalar::parse(e.at(3).get<std::string>())});
  }
  return StructureConstants(std::move(names), entries);
}

std::string StructureConstants::to_json() const {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      for (const auto& [k, c] : bracket(i, j)) entries.push_back({i, j, k, c.str()});
  nlohmann::json doc{{"dim", dim()}, {"names", names_}, {"entries", entries}};
  return doc.dump();
}

// ---------------------------------------------------------------------------

PoissonBracket::PoissonBracket(RegistryPtr reg) : reg_(std::move(reg)), rows_(reg_->size()) {}

void PoissonBracket::set(std::size_t a, std::size_t b, Polynomial value) {
  if (value.is_zero()) return;
  auto& row = rows_[a];
  auto it = std::lower_bound(row.begin(), row.end(), b,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  row.insert(it, {b, std::move(value)});
}

PoissonBracket PoissonBracket::lie_poisson(const StructureConstants& sc, RegistryPtr reg) {
  PoissonBracket pb(reg);
  std::vector<std::size_t> idx(sc.dim());
  for (std::size_t i = 0; i < sc.dim(); ++i) idx[i] = reg->index(sc.names()[i]);
  for (std::size_t i = 0; i < sc.dim(); ++i) {
    for (std::size_t j = 0; j < sc.dim(); ++j) {
      std::vector<Term> terms;
      for (const auto& [k, c] : sc.bracket(i, j)) {
        Monomial m(reg->size());
        m.set_exponent(idx[k], 1);
        terms.emplace_back(std::move(m), c);
      }
      pb.set(idx[i], idx[j], Polynomial::from_terms(reg, std::move(terms)));
    }
  }
  return pb;
}

PoissonBracket PoissonBracket::canonical(RegistryPtr reg,
                                         const std::vector<std::pair<std::string, std::string>>& pairs) {
  PoissonBracket pb(reg);
  for (const auto& [q, p] : pairs) {
    auto qi = reg->index(q);
    auto pi = reg->index(p);
    pb.set(qi, pi, Polynomial::constant(reg, Scalar(1)));
    pb.set(pi, qi, Polynomial::constant(reg, Scalar(-1)));
  }
  return pb;
}

const Polynomial* PoissonBracket::variable_bracket(std::size_t a, std::size_t b) const {
  const auto& row = rows_.at(a);
  auto it = std::lower_bound(row.begin(), row.end(), b,
                             [](const auto& e, std::size_t key) { return e.first < key; });
  return it != row.end() && it->first == b ? &it->second : nullptr;
}

Polynomial PoissonBracket::operator()(const Polynomial& p, const Polynomial& q) const {
  if (p.registry() != reg_ && !p.registry()->same_as(*reg_))
    throw PolyError("bracket operand lives in a different registry");
  p.check_compatible(q);
  PolyAccumulator acc(reg_);
  std::vector<std::pair<std::size_t, int>> active;
  for (const auto& [mp, cp] : p.terms()) {
    active.clear();
    for (auto [a, ea] : mp.support())
      if (!rows_[a].empty()) active.emplace_back(a, ea);
    if (active.empty()) continue;
    for (const auto& [mq, cq] : q.terms()) {
      Monomial product = mp * mq;
      Scalar cpq = cp * cq;
      for (auto [a, ea] : active) {
        for (const auto& [b, value] : rows_[a]) {
          int eb = mq.exponent(b);
          if (eb == 0) continue;
          Monomial base = product;
          base.add_exponent(a, -1);
          base.add_exponent(b, -1);
          Scalar coeff = cpq * Scalar(static_cast<long>(ea) * eb);
          for (const auto& [mv, cv] : value.terms()) acc.add(base * mv, coeff * cv);
        }
      }
    }
  }
  return std::move(acc).finish();
}

// ---------------------------------------------------------------------------

Polynomial berezin_bracket(const Polynomial& p, const Polynomial& q, const StructureConstants& sc) {
  return PoissonBracket::lie_poisson(sc, p.registry())(p, q);
}

Polynomial adjoint_apply(std::size_t i, const Polynomial& p, const StructureConstants& sc) {
  if (i >= sc.dim()) throw std::out_of_range("basis index out of range");
  auto xi = Polynomial::variable(p.registry(), sc.names()[i]);
  return berezin_bracket(xi, p, sc);
}

bool commutes_with(const Polynomial& p, std::span<const std::size_t> subalgebra,
                   const StructureConstants& sc) {
  auto pb = PoissonBracket::lie_poisson(sc, p.registry());
  for (auto i : subalgebra) {
    if (i >= sc.dim()) throw std::out_of_range("basis index out of range");
    if (!pb(Polynomial::variable(p.registry(), sc.names()[i]), p).is_zero()) return false;
  }
  return true;
}

std::size_t independence_count(const StructureConstants& sc, std::span<const std::size_t> subalgebra,
                               const std::map<std::string, Scalar>& point) {
  std::vector<Scalar> x(sc.dim());
  for (std::size_t k = 0; k < sc.dim(); ++k) x[k] = point.at(sc.names()[k]);
  Matrix a;
  for (auto i : subalgebra) {
    if (i >= sc.dim()) throw std::out_of_range("basis index out of range");
    std::vector<Scalar> row(sc.dim(), Scalar(0));
    for (std::size_t j = 0; j < sc.dim(); ++j)
      for (const auto& [k, c] : sc.bracket(i, j)) row[j] += c * x[k];
    a.push_back(std::move(row));
  }
  return sc.dim() - rank(std::move(a));
}

}  // namespace slc
