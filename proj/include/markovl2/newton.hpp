#pragma once

#include <map>
#include <vector>

#include "markovl2/npolynomial.hpp"

namespace markovl2 {

// Formal integer-coefficient polynomial in the signed coefficients b_1..b_r
// expressing the power sum p_r of the roots. Monomials are exponent vectors.
class PowerSumFormula {
 public:
  using Monomial = std::vector<unsigned>;  // exps[i] = exponent of b_{i+1}

  // Expansion of the r x r determinant with first column (b_1, 2 b_2, ..., r b_r),
  // ones on the superdiagonal and the b-band below it.
  static PowerSumFormula from_determinant(int r);
  // Newton recursion p_r = sum_{i<r} (-1)^{i+1} b_i p_{r-i} + (-1)^{r+1} r b_r.
  static PowerSumFormula from_recursion(int r);

  int r() const { return r_; }
  const std::map<Monomial, Int>& terms() const { return terms_; }

  // Every monomial must have weighted degree r (weight of b_i is i).
  bool is_weight_homogeneous() const;

  bool operator==(const PowerSumFormula& o) const = default;

  template <class T>
  T substitute(const std::vector<T>& b) const {  // b[i] = value of b_{i+1}
    T acc{};
    for (const auto& [mono, coef] : terms_) {
      T term{Rational(coef)};
      for (size_t i = 0; i < mono.size(); ++i)
        for (unsigned e = 0; e < mono[i]; ++e) term = term * b.at(i);
      acc = acc + term;
    }
    return acc;
  }

 private:
  explicit PowerSumFormula(int r) : r_(r) {}
  int r_ = 0;
  std::map<Monomial, Int> terms_;
};

// p_1..p_k as polynomials in n given symbolic b_i(n, alpha); deg p_r = 2r.
std::vector<NPoly> power_sums_symbolic(int k, const std::vector<NPoly>& b);

// Exact power sums p_1..p_k of the degree-n reversed polynomial at rational alpha.
std::vector<Rational> power_sums_numeric(int k, int n, const Rational& alpha);

// Newton quotient and root bounds at fixed (k, n, alpha):
//   ell = p_k / p_{k-1} (exact; p_0 = n), and a certified decimal enclosure
//   [u_lo, u_hi] of p_k^{1/k} with width 10^-digits.
struct NewtonBounds {
  int k = 0, n = 0;
  Rational alpha;
  std::vector<Rational> p;  // p_1..p_k
  Rational ell;
  Rational u_lo, u_hi;
};
NewtonBounds bounds_numeric(int k, int n, const Rational& alpha, int digits = 30);

}  // namespace markovl2
