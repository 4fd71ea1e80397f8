#include "markovl2/newton.hpp"

#include <stdexcept>

#include "markovl2/recurrence.hpp"

namespace markovl2 {

namespace {

using Mono = PowerSumFormula::Monomial;
using Terms = std::map<Mono, Int>;

void add_term(Terms& t, const Mono& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = t.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) t.erase(it);
  }
}

Terms mul(const Terms& a, const Terms& b, int r) {
  Terms out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Mono m(static_cast<size_t>(r), 0);
      for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
      for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
      add_term(out, m, ca * cb);
    }
  return out;
}

Terms single(int r, int var, const Int& coef) {  // coef * b_var, var = 0 means constant
  Terms t;
  Mono m(static_cast<size_t>(r), 0);
  if (var > 0) m[static_cast<size_t>(var - 1)] = 1;
  add_term(t, m, coef);
  return t;
}

// Entry (i, j) of the r x r matrix, 1-based: first column i*b_i, ones on the
// superdiagonal, the band b_{i-j+1} below it, zeros above.
Terms matrix_entry(int r, int i, int j) {
  if (j == 1) return single(r, i, i);
  if (i == j - 1) return single(r, 0, 1);
  if (i >= j) return single(r, i - j + 1, 1);
  return {};
}

Terms determinant(int r, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() == 1) return matrix_entry(r, rows[0], cols[0]);
  Terms det;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < cols.size(); ++c) {
    Terms entry = matrix_entry(r, rows[0], cols[c]);
    if (entry.empty()) continue;
    std::vector<int> sub_cols;
    for (size_t c2 = 0; c2 < cols.size(); ++c2)
      if (c2 != c) sub_cols.push_back(cols[c2]);
    Terms minor = determinant(r, sub_rows, sub_cols);
    Terms prod = mul(entry, minor, r);
    int sign = (c % 2 == 0) ? 1 : -1;
    for (const auto& [m, coef] : prod) add_term(det, m, sign * coef);
  }
  return det;
}

}  // namespace

PowerSumFormula PowerSumFormula::from_determinant(int r) {
  if (r < 1) throw std::invalid_argument("power sum order must be >= 1");
  PowerSumFormula f(r);
  std::vector<int> idx(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<size_t>(i)] = i + 1;
  f.terms_ = determinant(r, idx, idx);
  return f;
}

PowerSumFormula PowerSumFormula::from_recursion(int r) {
  if (r < 1) throw std::invalid_argument("power sum order must be >= 1");
  std::vector<PowerSumFormula> p;
  for (int m = 1; m <= r; ++m) {
    PowerSumFormula f(m);
    Terms acc = single(r, m, (m % 2 == 1) ? m : -m);  // (-1)^{m+1} m b_m
    for (int i = 1; i < m; ++i) {
      Terms prev;  // p_{m-i}, monomials widened to length r
      for (const auto& [mono, coef] : p[static_cast<size_t>(m - i - 1)].terms_) {
        Mono wide(static_cast<size_t>(r), 0);
        for (size_t v = 0; v < mono.size(); ++v) wide[v] = mono[v];
        prev.emplace(wide, coef);
      }
      Terms prod = mul(single(r, i, 1), prev, r);
      int sign = (i % 2 == 1) ? 1 : -1;
      for (const auto& [mono, coef] : prod) add_term(acc, mono, sign * coef);
    }
    f.terms_ = std::move(acc);
    p.push_back(std::move(f));
  }
  // Monomials were built at width r throughout, but formulas for m < r carry
  // r in their keys only; shrink nothing, just return the last one.
  return p.back();
}

bool PowerSumFormula::is_weight_homogeneous() const {
  for (const auto& [mono, coef] : terms_) {
    unsigned long w = 0;
    for (size_t i = 0; i < mono.size(); ++i) w += (i + 1) * mono[i];
    if (w != static_cast<unsigned long>(r_)) return false;
  }
  return true;
}

std::vector<NPoly> power_sums_symbolic(int k, const std::vector<NPoly>& b) {
  if (static_cast<int>(b.size()) < k) throw std::invalid_argument("need b_1..b_k");
  std::vector<NPoly> p;
  for (int r = 1; r <= k; ++r) {
    NPoly pr = PowerSumFormula::from_determinant(r).substitute<NPoly>(b);
    if (pr.degree() != 2 * r)
      throw std::logic_error("power sum p_" + std::to_string(r) + " does not have degree 2r in n");
    p.push_back(std::move(pr));
  }
  return p;
}

std::vector<Rational> power_sums_numeric(int k, int n, const Rational& alpha) {
  const std::vector<Rational> b = coeffs_numeric(k, n, alpha).b;
  std::vector<Rational> p;
  for (int r = 1; r <= k; ++r) p.push_back(PowerSumFormula::from_determinant(r).substitute<Rational>(b));
  return p;
}

NewtonBounds bounds_numeric(int k, int n, const Rational& alpha, int digits) {
  if (digits < 1) throw std::invalid_argument("need at least one digit");
  NewtonBounds out;
  out.k = k;
  out.n = n;
  out.alpha = alpha;
  out.p = power_sums_numeric(k, n, alpha);
  const Rational pk = out.p.back();
  const Rational pk1 = k >= 2 ? out.p[static_cast<size_t>(k) - 2] : Rational(n);  // p_0 = n
  if (pk <= 0 || pk1 <= 0) throw std::logic_error("power sums of a positive-root polynomial must be positive");
  out.ell = pk / pk1;

  // Certified decimal enclosure of pk^{1/k}: with N = floor(pk * 10^(k*digits))
  // and m = floor(N^(1/k)), m <= pk^(1/k) * 10^digits < m + 1.
  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Int scale;
  mpz_pow_ui(scale.get_mpz_t(), pow10.get_mpz_t(), static_cast<unsigned long>(k));
  Int N;
  mpz_fdiv_q(N.get_mpz_t(), Int(pk.get_num() * scale).get_mpz_t(), pk.get_den().get_mpz_t());
  Int m;
  mpz_root(m.get_mpz_t(), N.get_mpz_t(), static_cast<unsigned long>(k));
  out.u_lo = Rational(m, pow10);
  out.u_lo.canonicalize();
  out.u_hi = Rational(m + 1, pow10);
  out.u_hi.canonicalize();
  return out;
}

}  // namespace markovl2
