#pragma once

#include <string>

#include "markovl2/alpha_poly.hpp"

namespace markovl2 {

// Rational function of alpha, kept reduced: gcd(num, den) = 1 and den is a
// primitive integer polynomial with positive leading coefficient. With that
// normalization structural equality is value equality.
class AlphaFunction {
 public:
  AlphaFunction() : num_(Rational(0)), den_(AlphaPoly::one()) {}
  AlphaFunction(const Rational& value) : num_(value), den_(AlphaPoly::one()) {}
  explicit AlphaFunction(AlphaPoly num);
  AlphaFunction(AlphaPoly num, AlphaPoly den);

  static AlphaFunction alpha() { return AlphaFunction(AlphaPoly::variable()); }

  const AlphaPoly& num() const { return num_; }
  const AlphaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  Rational constant_value() const;

  Rational eval(const Rational& alpha) const;  // throws std::domain_error on a pole

  AlphaFunction& operator+=(const AlphaFunction& o);
  AlphaFunction& operator-=(const AlphaFunction& o);
  AlphaFunction& operator*=(const AlphaFunction& o);
  AlphaFunction& operator/=(const AlphaFunction& o);
  AlphaFunction operator-() const;

  friend AlphaFunction operator+(AlphaFunction a, const AlphaFunction& b) { return a += b; }
  friend AlphaFunction operator-(AlphaFunction a, const AlphaFunction& b) { return a -= b; }
  friend AlphaFunction operator*(AlphaFunction a, const AlphaFunction& b) { return a *= b; }
  friend AlphaFunction operator/(AlphaFunction a, const AlphaFunction& b) { return a /= b; }

  bool operator==(const AlphaFunction& o) const = default;

  std::string to_string() const;

 private:
  void normalize();

  AlphaPoly num_, den_;
};

AlphaFunction af_pow(const AlphaFunction& base, unsigned e);

}  // namespace markovl2
