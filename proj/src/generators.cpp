#include "slc/generators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace slc {

GeneratorId GeneratorId::cycle(std::vector<int> idx) {
  if (idx.size() < 2) throw std::invalid_argument("a cycle needs at least two indices");
  std::rotate(idx.begin(), std::min_element(idx.begin(), idx.end()), idx.end());
  return {Kind::Cycle, std::move(idx)};
}

std::string GeneratorId::name() const {
  static const char* prefix[] = {"h", "c", "p", "c", "f", "g"};
  std::string out = prefix[static_cast<int>(kind)];
  bool commas = indices.size() > 1 && std::any_of(indices.begin(), indices.end(), [](int i) { return i > 9; });
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (commas && k > 0) out += ',';
    out += std::to_string(indices[k]);
  }
  return out;
}

std::strong_ordering operator<=>(const GeneratorId& a, const GeneratorId& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.indices.size() <=> b.indices.size(); c != 0) return c;
  return a.indices <=> b.indices;
}

bool word_before(const Word& a, const Word& b) {
  std::size_t i = 0;
  for (; i < a.size() && i < b.size(); ++i) {
    if (a[i].first != b[i].first) return a[i].first < b[i].first;
    if (a[i].second != b[i].second) return a[i].second > b[i].second;
  }
  return i < a.size() && i == b.size();
}

namespace {

struct WordBefore {
  bool operator()(const Word& a, const Word& b) const { return word_before(a, b); }
};

}  // namespace

std::string word_str(const Word& w) {
  std::string out;
  for (const auto& [g, e] : w) {
    if (!out.empty()) out += ' ';
    out += g.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

int word_degree(const Word& w) {
  int d = 0;
  for (const auto& [g, e] : w)
    if (!g.is_central()) d += e;
  return d;
}

Word word_mul(const Word& a, const Word& b) {
  Word out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

NormalFormExpr NormalFormExpr::from_terms(std::vector<TermT> terms) {
  std::map<Word, Scalar, WordBefore> merged;
  for (auto& [c, w] : terms) {
    std::sort(w.begin(), w.end());
    // merge repeated generators inside a word
    Word canon;
    for (auto& [g, e] : w) {
      if (e <= 0) throw std::invalid_argument("generator powers must be positive");
      if (!canon.empty() && canon.back().first == g)
        canon.back().second += e;
      else
        canon.emplace_back(std::move(g), e);
    }
    merged[canon] += c;
  }
  NormalFormExpr out;
  for (auto& [w, c] : merged)
    if (!c.is_zero()) out.terms_.emplace_back(std::move(c), w);
  return out;
}

NormalFormExpr NormalFormExpr::generator(const GeneratorId& g, const Scalar& c) {
  return from_terms({{c, Word{{g, 1}}}});
}

NormalFormExpr NormalFormExpr::constant(const Scalar& c) { return from_terms({{c, Word{}}}); }

int NormalFormExpr::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, word_degree(t.second));
  return d;
}

NormalFormExpr& NormalFormExpr::operator+=(const NormalFormExpr& o) {
  std::vector<TermT> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return *this = from_terms(std::move(all));
}

NormalFormExpr& NormalFormExpr::operator-=(const NormalFormExpr& o) { return *this += -o; }

NormalFormExpr& NormalFormExpr::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.first *= c;
  }
  return *this;
}

NormalFormExpr operator*(const NormalFormExpr& a, const NormalFormExpr& b) {
  std::vector<NormalFormExpr::TermT> out;
  for (const auto& [ca, wa] : a.terms_)
    for (const auto& [cb, wb] : b.terms_) out.emplace_back(ca * cb, word_mul(wa, wb));
  return NormalFormExpr::from_terms(std::move(out));
}

std::string NormalFormExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [c, w] : terms_) {
    if (!out.empty()) out += " + ";
    std::string coeff = c.is_real() ? c.str() : "(" + c.str() + ")";
    out += w.empty() ? coeff : coeff + " * " + word_str(w);
  }
  return out;
}

}  // namespace slc
