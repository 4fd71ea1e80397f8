#pragma once

#include <utility>
#include <vector>

#include "markovl2/alpha_function.hpp"

namespace markovl2 {

// Polynomial in n whose coefficients are rational functions of alpha.
class NPoly {
 public:
  NPoly() = default;  // zero
  explicit NPoly(const Rational& constant);
  explicit NPoly(AlphaFunction constant);
  explicit NPoly(std::vector<AlphaFunction> coeffs);  // ascending powers of n

  static NPoly variable();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<AlphaFunction>& coeffs() const { return c_; }
  const AlphaFunction& coeff(int i) const;
  const AlphaFunction& leading() const;

  AlphaFunction eval_n(const Rational& n) const;                  // collapse n, alpha symbolic
  Rational eval(const Rational& n, const Rational& alpha) const;  // throws on a pole

  NPoly& operator+=(const NPoly& o);
  NPoly& operator-=(const NPoly& o);
  NPoly& operator*=(const NPoly& o);
  NPoly& operator*=(const AlphaFunction& s);
  NPoly operator-() const;

  friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
  friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
  friend NPoly operator*(NPoly a, const NPoly& b) { return a *= b; }
  friend NPoly operator*(NPoly a, const AlphaFunction& s) { return a *= s; }
  friend NPoly operator*(const AlphaFunction& s, NPoly a) { return a *= s; }

  bool operator==(const NPoly& o) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<AlphaFunction> c_;
};

// Exact interpolation through (n_value, value) samples. Uses the first
// degree_bound+1 samples to build the polynomial and requires every sample
// (including extras) to be reproduced exactly; throws std::invalid_argument
// otherwise or when fewer than degree_bound+1 distinct points are given.
NPoly interpolate_in_n(const std::vector<std::pair<Rational, AlphaFunction>>& samples,
                       int degree_bound);

}  // namespace markovl2
