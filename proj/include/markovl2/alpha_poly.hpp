#pragma once

#include <utility>
#include <vector>

#include "markovl2/rational.hpp"

namespace markovl2 {

// Which variable a polynomial is written in: alpha itself, or t = alpha + 1.
enum class Basis { alpha, alpha_plus_one };

// Dense univariate polynomial over Q. Coefficients ascending by power.
class AlphaPoly {
 public:
  AlphaPoly() = default;  // zero polynomial
  explicit AlphaPoly(const Rational& constant, Basis basis = Basis::alpha);
  AlphaPoly(std::vector<Rational> coeffs, Basis basis = Basis::alpha);

  static AlphaPoly variable(Basis basis = Basis::alpha);
  static AlphaPoly one(Basis basis = Basis::alpha) { return AlphaPoly(Rational(1), basis); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  Basis basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const;  // requires nonzero
  Rational eval(const Rational& x) const;

  AlphaPoly derivative() const;
  // Rewrite in the other variable (alpha = t - 1 resp. t = alpha + 1); value-preserving.
  AlphaPoly shifted_to(Basis target) const;

  // Positive content c and p/c with integer coefficients of gcd 1 (signs kept).
  // Zero polynomial yields {0, 0}.
  std::pair<Rational, AlphaPoly> content_primitive() const;

  AlphaPoly& operator+=(const AlphaPoly& o);
  AlphaPoly& operator-=(const AlphaPoly& o);
  AlphaPoly& operator*=(const AlphaPoly& o);
  AlphaPoly& operator*=(const Rational& s);
  AlphaPoly& operator/=(const Rational& s);
  AlphaPoly operator-() const;

  friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
  friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
  friend AlphaPoly operator*(AlphaPoly a, const AlphaPoly& b) { return a *= b; }
  friend AlphaPoly operator*(AlphaPoly a, const Rational& s) { return a *= s; }
  friend AlphaPoly operator*(const Rational& s, AlphaPoly a) { return a *= s; }

  bool operator==(const AlphaPoly& o) const = default;

 private:
  void trim();
  void check_same_basis(const AlphaPoly& o) const;

  std::vector<Rational> c_;
  Basis basis_ = Basis::alpha;
};

// Quotient and remainder of a by b over Q (b nonzero, same basis).
std::pair<AlphaPoly, AlphaPoly> div_mod(const AlphaPoly& a, const AlphaPoly& b);
// Exact quotient; throws std::invalid_argument when b does not divide a.
AlphaPoly div_exact(const AlphaPoly& a, const AlphaPoly& b);
// Primitive integer gcd with positive leading coefficient; gcd(0,0) = 0.
AlphaPoly gcd(const AlphaPoly& a, const AlphaPoly& b);
// Primitive integer lcm with positive leading coefficient.
AlphaPoly lcm(const AlphaPoly& a, const AlphaPoly& b);

std::string to_string(const AlphaPoly& p);  // debugging aid

}  // namespace markovl2
