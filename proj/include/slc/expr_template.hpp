#pragma once

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slc/scalar.hpp"

namespace slc {

/// Small parser for transcribed formulas with symbolic indices, e.g.
///   "(c_ik - c_ij) c_jk + (c_j - c_k) g_ijk"
///   "I/2 (a_l f_ijk + a_k f_ijl)"
///   "1/2 [cb_12, cb_23]"
/// Grammar: sums of products, juxtaposition multiplies, `^n` powers,
/// `/n` divides by an integer, `[A, B]` is a Poisson bracket, `I` is the
/// imaginary unit. A symbol is a letter run optionally followed by `_` and
/// a subscript; subscript letters are looked up in the index assignment,
/// digits are literal. `{10,11}` gives multi-digit subscripts.
///
/// The resolver supplies the ring:
///   T constant(const Scalar&);
///   T symbol(const std::string& base, const std::vector<int>& indices);
///   T bracket(const T&, const T&);
/// T needs +, -, binary * and * by Scalar.
template <class T, class Resolver>
class TemplateParser {
public:
  TemplateParser(std::string_view text, const std::map<char, int>& assign, Resolver& r)
      : s_(text), assign_(assign), r_(r) {}

  T parse() {
    T v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

private:
  std::string_view s_;
  std::size_t pos_ = 0;
  const std::map<char, int>& assign_;
  Resolver& r_;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("formula parse error at " + std::to_string(pos_) + ": " + what + " in '" +
                                std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_atom() {
    char c = peek();
    return c == '(' || c == '[' || std::isalnum(static_cast<unsigned char>(c));
  }

  T expr() {
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = s_[pos_++] == '-';
    T v = term();
    if (negate) v = v * Scalar(-1);
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') return v;
      ++pos_;
      T t = term();
      v = c == '+' ? v + t : v - t;
    }
  }

  T term() {
    T v = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * factor();
      } else if (c == '/') {
        ++pos_;
        skip();
        long d = integer();
        if (d == 0) fail("division by zero");
        v = v * Scalar::fraction(1, d);
      } else if (starts_atom()) {
        v = v * factor();
      } else {
        return v;
      }
    }
  }

  T factor() {
    T v = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      long e = integer();
      if (e < 1) fail("powers must be positive");
      T base = v;
      for (long k = 1; k < e; ++k) v = v * base;
    }
    return v;
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("integer expected");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  T atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (peek() != ')') fail("')' expected");
      ++pos_;
      return v;
    }
    if (c == '[') {
      ++pos_;
      T a = expr();
      if (peek() != ',') fail("',' expected in bracket");
      ++pos_;
      T b = expr();
      if (peek() != ']') fail("']' expected");
      ++pos_;
      return r_.bracket(a, b);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return r_.constant(Scalar(integer()));
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("atom expected");
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string base(s_.substr(start, pos_ - start));
    std::vector<int> idx;
    if (pos_ < s_.size() && s_[pos_] == '_') {
      ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '{') {
        ++pos_;
        for (;;) {
          skip();
          idx.push_back(index_token());
          skip();
          if (pos_ < s_.size() && s_[pos_] == ',') {
            ++pos_;
            continue;
          }
          if (pos_ < s_.size() && s_[pos_] == '}') {
            ++pos_;
            break;
          }
          fail("'}' expected");
        }
      } else {
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
          char ch = s_[pos_++];
          idx.push_back(std::isdigit(static_cast<unsigned char>(ch)) ? ch - '0' : lookup(ch));
        }
        if (idx.empty()) fail("empty subscript");
      }
    }
    if (base == "I" && idx.empty()) return r_.constant(Scalar::imag_unit());
    return r_.symbol(base, idx);
  }

  int index_token() {
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) return lookup(s_[pos_++]);
    return static_cast<int>(integer());
  }

  int lookup(char ch) {
    auto it = assign_.find(ch);
    if (it == assign_.end()) fail(std::string("unassigned index letter '") + ch + "'");
    return it->second;
  }
};

template <class T, class Resolver>
T parse_template(std::string_view text, const std::map<char, int>& assign, Resolver& r) {
  return TemplateParser<T, Resolver>(text, assign, r).parse();
}

}  // namespace slc
