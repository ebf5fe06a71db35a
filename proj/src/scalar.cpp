#include "slc/scalar.hpp"

#include <functional>
#include <stdexcept>

namespace slc {

namespace {

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(std::string(text), 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

// Imaginary coefficient: "i", "+i", "-i", "3/4i".
Rational parse_imag(std::string_view text) {
  text.remove_suffix(1);
  if (text.empty() || text == "+") return Rational(1);
  if (text == "-") return Rational(-1);
  if (text.front() == '+') text.remove_prefix(1);
  return parse_rational(text);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty scalar literal");
  if (text.back() != 'i') {
    if (text.front() == '+') text.remove_prefix(1);
    return Scalar(parse_rational(text));
  }
  // split at the last sign that is not the leading one
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size() - 1; k > 0; --k) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(Rational(0), parse_imag(text));
  auto real_part = text.substr(0, split);
  if (real_part.front() == '+') real_part.remove_prefix(1);
  return Scalar(parse_rational(real_part), parse_imag(text.substr(split)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero scalar");
  if (is_real()) return Scalar(Rational(1) / re_);
  Rational norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  const bool a_real = sgn(im_) == 0;
  const bool b_real = sgn(o.im_) == 0;
  if (a_real && b_real) {
    re_ *= o.re_;
  } else if (b_real) {
    re_ *= o.re_;
    im_ *= o.re_;
  } else if (a_real) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
  } else {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
  }
  return *this;
}

std::string Scalar::str() const {
  if (is_real()) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "i";
  if (sgn(re_) == 0) return imag;
  if (imag.front() == '-') return re_.get_str() + imag;
  return re_.get_str() + "+" + imag;
}

std::size_t Scalar::hash() const {
  std::hash<std::string> h;
  return h(str());
}

}  // namespace slc
