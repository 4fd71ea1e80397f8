#include "markovl2/alpha_function.hpp"

#include <stdexcept>

namespace markovl2 {

AlphaFunction::AlphaFunction(AlphaPoly num) : num_(std::move(num)), den_(AlphaPoly::one()) {
  if (num_.basis() != Basis::alpha && !num_.is_zero())
    throw std::invalid_argument("AlphaFunction expects alpha-basis polynomials");
}

AlphaFunction::AlphaFunction(AlphaPoly num, AlphaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if ((num_.basis() != Basis::alpha && !num_.is_zero()) ||
      (den_.basis() != Basis::alpha && den_.degree() > 0))
    throw std::invalid_argument("AlphaFunction expects alpha-basis polynomials");
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

void AlphaFunction::normalize() {
  if (num_.is_zero()) {
    den_ = AlphaPoly::one();
    return;
  }
  AlphaPoly g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  auto [content, prim] = den_.content_primitive();
  if (prim.leading() < 0) {
    prim = -prim;
    content = -content;
  }
  den_ = std::move(prim);
  num_ /= content;
}

Rational AlphaFunction::constant_value() const {
  if (!is_constant()) throw std::invalid_argument("not a constant");
  return num_.coeff(0) / den_.coeff(0);
}

Rational AlphaFunction::eval(const Rational& alpha) const {
  Rational d = den_.eval(alpha);
  if (d == 0) throw std::domain_error("rational function pole at alpha = " + markovl2::to_string(alpha));
  return num_.eval(alpha) / d;
}

AlphaFunction& AlphaFunction::operator+=(const AlphaFunction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

AlphaFunction& AlphaFunction::operator-=(const AlphaFunction& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

AlphaFunction& AlphaFunction::operator*=(const AlphaFunction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

AlphaFunction& AlphaFunction::operator/=(const AlphaFunction& o) {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

AlphaFunction AlphaFunction::operator-() const {
  AlphaFunction out = *this;
  out.num_ = -out.num_;
  return out;
}

std::string AlphaFunction::to_string() const {
  if (den_.degree() == 0 && den_.coeff(0) == 1) return markovl2::to_string(num_);
  return "(" + markovl2::to_string(num_) + ") / (" + markovl2::to_string(den_) + ")";
}

AlphaFunction af_pow(const AlphaFunction& base, unsigned e) {
  AlphaFunction out{Rational(1)};
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace markovl2
