#include "markovl2/markov.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "markovl2/alpha_poly.hpp"
#include "markovl2/recurrence.hpp"
#include "markovl2/reference_tables.hpp"

namespace markovl2 {

namespace {

int clamp_digits(long v) {
  if (v < 10) return 10;
  if (v > 10000) return 10000;
  return static_cast<int>(v);
}

struct PrecisionGuard {
  unsigned saved;
  explicit PrecisionGuard(unsigned digits10) : saved(Real::default_precision()) {
    Real::default_precision(digits10);
  }
  ~PrecisionGuard() { Real::default_precision(saved); }
};

// ~decimal digits of 1/q for 0 < q < 1
int tolerance_digits(const Rational& q) {
  long den = static_cast<long>(mpz_sizeinbase(q.get_den().get_mpz_t(), 10));
  long num = static_cast<long>(mpz_sizeinbase(q.get_num().get_mpz_t(), 10));
  long d = den - num + 1;
  return d < 1 ? 1 : static_cast<int>(d);
}

}  // namespace

int default_digits() {
  static const int cached = [] {
    const char* env = std::getenv("MARKOV_PRECISION_DIGITS");
    if (env == nullptr || *env == '\0') return 40;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env) return 40;
    return clamp_digits(v);
  }();
  return cached;
}

void set_working_digits(int digits10) {
  Real::default_precision(static_cast<unsigned>(clamp_digits(digits10)));
}

Real to_real(const Rational& q) {
  Real r(0);
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real real_pi() {
  Real r(0);
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

Real nth_root(const Real& x, unsigned k) {
  if (k == 0) throw std::domain_error("nth_root: k must be positive");
  Real r(0);
  mpfr_rootn_ui(r.backend().data(), x.backend().data(), k, MPFR_RNDN);
  return r;
}

Rational dyadic_from_real(const Real& x) {
  if (x == 0) return Rational(0);
  if (mpfr_number_p(x.backend().data()) == 0)
    throw std::domain_error("dyadic_from_real: non-finite value");
  Int z;
  mpfr_exp_t e = mpfr_get_z_2exp(z.get_mpz_t(), x.backend().data());
  Rational r(z);
  Rational two(2);
  if (e >= 0) {
    for (mpfr_exp_t i = 0; i < e; ++i) r *= two;
  } else {
    for (mpfr_exp_t i = 0; i < -e; ++i) r /= two;
  }
  return r;
}

Real eval_real(const AlphaPoly& p, const Real& x) {
  // raw Horner in the stored basis variable, mirroring AlphaPoly::eval
  if (p.is_zero()) return Real(0);
  Real acc(0);
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + to_real(p.coeff(i));
  return acc;
}

Real eval_real(const AlphaFunction& f, const Real& alpha) {
  Real den = eval_real(f.den(), alpha);
  if (den == 0) throw std::domain_error("eval_real: denominator vanishes");
  return eval_real(f.num(), alpha) / den;
}

namespace {

// Eigenvalues of the n x n Jacobi matrix strictly below x, via the sign
// sequence of Q_0..Q_n: each sign agreement between consecutive entries is one
// such eigenvalue; an exact zero counts as the opposite of its predecessor.
int count_below_exact(int n, const Rational& alpha, const Rational& x) {
  std::vector<Rational> seq = eval_Q_sequence(n, alpha, x);
  int s_prev = 1, agree = 0;
  for (int i = 1; i <= n; ++i) {
    int sg = sgn(seq[static_cast<size_t>(i)]);
    int s = sg == 0 ? -s_prev : sg;
    if (s == s_prev) ++agree;
    s_prev = s;
  }
  return agree;
}

int count_below_float(const std::vector<Real>& d, const std::vector<Real>& l2, const Real& x) {
  int n = static_cast<int>(d.size());
  Real qm1(1);
  Real q = x - d[0];
  int s_prev = 1, agree = 0;
  for (int i = 1; i <= n; ++i) {
    int s = q > 0 ? 1 : (q < 0 ? -1 : -s_prev);
    if (s == s_prev) ++agree;
    s_prev = s;
    if (i < n) {
      Real qn = (x - d[static_cast<size_t>(i)]) * q - l2[static_cast<size_t>(i - 1)] * qm1;
      qm1 = q;
      q = qn;
    }
  }
  return agree;
}

bool bracket_tight(const Rational& lo, const Rational& hi, const Rational& rel_tol) {
  return sgn(lo) > 0 && hi - lo <= lo * rel_tol / 4;
}

// Smallest Jacobi eigenvalue in (lo, hi], exact-count bisection.
void bisect_exact(int n, const Rational& alpha, Rational& lo, Rational& hi,
                  const Rational& rel_tol) {
  for (int iter = 0; iter < 100000 && !bracket_tight(lo, hi, rel_tol); ++iter) {
    Rational mid = (lo + hi) / 2;
    if (count_below_exact(n, alpha, mid) == 0)
      lo = mid;
    else
      hi = mid;
  }
  if (!bracket_tight(lo, hi, rel_tol))
    throw std::runtime_error("cn2_enclosure: bisection failed to converge");
}

Enclosure smallest_eigenvalue_sturm(int n, const Rational& alpha, const Rational& rel_tol) {
  JacobiMatrix J = jacobi_matrix(n, alpha);
  Rational hi0 = J.diag[0];
  for (const Rational& d : J.diag)
    if (d < hi0) hi0 = d;
  hi0 += 1;  // min diagonal bounds the smallest eigenvalue from above

  std::vector<Real> df, l2f;
  df.reserve(J.diag.size());
  l2f.reserve(J.offdiag_sq.size());
  for (const Rational& v : J.diag) df.push_back(to_real(v));
  for (const Rational& v : J.offdiag_sq) l2f.push_back(to_real(v));

  Rational lo(0), hi = hi0;
  for (int iter = 0; iter < 100000 && !bracket_tight(lo, hi, rel_tol); ++iter) {
    Rational mid = (lo + hi) / 2;
    if (count_below_float(df, l2f, to_real(mid)) == 0)
      lo = mid;
    else
      hi = mid;
  }

  // The float phase only proposed the bracket; certify it exactly.
  bool lo_ok = sgn(lo) == 0 || count_below_exact(n, alpha, lo) == 0;
  bool hi_ok = false;
  if (lo_ok) {
    if (count_below_exact(n, alpha, hi) >= 1) {
      hi_ok = true;
    } else {
      hi_ok = eval_Q(n, alpha, hi) == 0;  // eigenvalue sits exactly at hi
    }
  }
  if (!lo_ok || !hi_ok || !bracket_tight(lo, hi, rel_tol)) {
    lo = 0;
    hi = hi0;
    bisect_exact(n, alpha, lo, hi, rel_tol);
  }
  return Enclosure{lo, hi};
}

// Ascending coefficients of the monic reversed polynomial whose largest root
// is the squared constant: coefficient of x^{n-i} is (-1)^i b_i.
std::vector<Rational> reversed_coefficients(int n, const Rational& alpha) {
  RnCoefficients rc = coeffs_numeric(n, n, alpha);
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  c[static_cast<size_t>(n)] = 1;
  for (int i = 1; i <= n; ++i) {
    Rational v = rc.b[static_cast<size_t>(i - 1)];
    c[static_cast<size_t>(n - i)] = (i % 2 == 1) ? Rational(-v) : v;
  }
  return c;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// True iff every coefficient of c shifted to base point s is nonnegative;
// with a monic polynomial that certifies the absence of roots beyond s.
bool taylor_nonnegative_at(const std::vector<Rational>& c, const Rational& s) {
  std::vector<Rational> t = c;
  size_t n = t.size() - 1;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = n - 1; j + 1 > i; --j) t[j] += s * t[j + 1];
  for (const Rational& v : t)
    if (sgn(v) < 0) return false;
  return true;
}

std::optional<Enclosure> largest_root_via_newton(int n, const Rational& alpha,
                                                 const Rational& rel_tol) {
  std::vector<Rational> c = reversed_coefficients(n, alpha);
  std::vector<Real> cf;
  cf.reserve(c.size());
  for (const Rational& v : c) cf.push_back(to_real(v));

  // b_1 is the root sum, so it dominates the largest root; start above it.
  Real x = to_real(c.size() >= 2 ? -c[c.size() - 2] : Rational(0)) + 1;
  Real step_tol = to_real(rel_tol) / 16;
  for (int iter = 0; iter < 400; ++iter) {
    Real fx(0), fpx(0);
    for (size_t i = cf.size(); i-- > 0;) {
      fpx = fpx * x + fx;
      fx = fx * x + cf[i];
    }
    if (fpx == 0) break;
    Real dx = fx / fpx;
    x -= dx;
    if (boost::multiprecision::abs(dx) <= boost::multiprecision::abs(x) * step_tol) break;
  }

  Real eps = to_real(rel_tol) / 8;
  Rational lo = dyadic_from_real(x * (1 - eps));
  Rational hi = dyadic_from_real(x * (1 + eps));
  if (!(sgn(lo) > 0) || !(lo < hi)) return std::nullopt;
  // Largest root in (lo, hi]: strictly one sign change past lo, none past hi.
  if (!(sgn(eval_poly(c, lo)) < 0)) return std::nullopt;
  if (!taylor_nonnegative_at(c, hi)) return std::nullopt;
  return Enclosure{lo, hi};
}

}  // namespace

Enclosure cn2_enclosure(int n, const Rational& alpha, const Rational& rel_tol, CnMethod method) {
  if (n < 1) throw std::domain_error("cn2_enclosure: n must be >= 1");
  require_alpha_above_minus_one(alpha);
  if (alpha <= Rational(-1) + Rational(1, 100000000))
    throw std::domain_error("cn2_enclosure: alpha too close to -1");
  if (sgn(rel_tol) <= 0) throw std::domain_error("cn2_enclosure: rel_tol must be positive");
  {
    Int floor_den;
    mpz_ui_pow_ui(floor_den.get_mpz_t(), 10, 30);
    if (rel_tol < Rational(1, floor_den))
      throw std::domain_error("cn2_enclosure: rel_tol below the 1e-30 precision budget");
  }
  // working precision: twice the requested digits plus guard digits
  PrecisionGuard guard(static_cast<unsigned>(
      std::max(default_digits(), 2 * tolerance_digits(rel_tol) + 20)));

  if (method == CnMethod::coefficient_rootfind) {
    if (auto enc = largest_root_via_newton(n, alpha, rel_tol)) return *enc;
    // fall through: the float phase failed to certify, the count method always succeeds
  }
  Enclosure lam = smallest_eigenvalue_sturm(n, alpha, rel_tol);
  Rational lo = 1 / lam.hi;
  Rational hi = 1 / lam.lo;
  return Enclosure{lo, hi};
}

Real cn2_alpha0_closed(int n) {
  if (n < 1) throw std::domain_error("cn2_alpha0_closed: n must be >= 1");
  Real theta = real_pi() / (4 * n + 2);
  Real v = 1 / (2 * boost::multiprecision::sin(theta));
  return v * v;
}

std::optional<Rational> closed_lower(int k, int n, const Rational& alpha) {
  require_alpha_above_minus_one(alpha);
  const tables::ClosedForm& cf = tables::lower_constant(k);
  if (n < k) return std::nullopt;
  Rational shift = n + cf.sigma * (alpha + 1);
  return cf.c.eval(alpha) * n * shift;
}

std::optional<Real> closed_upper(int k, int n, const Rational& alpha) {
  require_alpha_above_minus_one(alpha);
  const tables::ClosedForm& cf = tables::upper_constant(k);
  if (n < k) return std::nullopt;
  Real root = nth_root(to_real(cf.c.eval(alpha)), static_cast<unsigned>(k));
  Rational factor = (n + 1) * (n + cf.sigma * (alpha + 1));
  Real res = root * to_real(factor);
  // nudge upward past the accumulated rounding of the root and products
  long prec = mpfr_get_prec(res.backend().data());
  res *= 1 + boost::multiprecision::ldexp(Real(1), static_cast<int>(-prec + 8));
  return res;
}

Rational classical_lower(int n, const Rational& alpha) {
  if (n < 1) throw std::domain_error("classical_lower: n must be >= 1");
  require_alpha_above_minus_one(alpha);
  Rational a = alpha;
  Rational term1 = Rational(n) * n / ((a + 1) * (a + 3));
  Rational term2 = (2 * a * a + 5 * a + 6) * n / (3 * (a + 1) * (a + 2) * (a + 3));
  Rational term3 = (a + 6) / (3 * (a + 2) * (a + 3));
  return term1 + term2 + term3;
}

Rational classical_upper(int n, const Rational& alpha) {
  if (n < 1) throw std::domain_error("classical_upper: n must be >= 1");
  require_alpha_above_minus_one(alpha);
  return Rational(n) * (n + 1) / (2 * (alpha + 1));
}

std::optional<Rational> shifted_quadratic_lower(int n, const Rational& alpha) {
  if (n < 1) throw std::domain_error("shifted_quadratic_lower: n must be >= 1");
  require_alpha_above_minus_one(alpha);
  Rational a = alpha;
  Rational second = n - (a + 1) / 6;
  if (sgn(second) <= 0) return std::nullopt;
  return 2 * (n + 2 * a / 3) * second / ((a + 1) * (a + 5));
}

std::optional<Rational> large_alpha_upper(int n, const Rational& alpha) {
  require_alpha_above_minus_one(alpha);
  if (alpha < 2 || n < 3) return std::nullopt;
  Rational a = alpha;
  return 4 * n * (n + 2 + 3 * (a + 1) / 4) / (a * a + 10 * a + 8);
}

std::optional<Rational> linear_factor_lower(int n, const Rational& alpha) {
  require_alpha_above_minus_one(alpha);
  if (alpha < 2 || n < 3) return std::nullopt;
  Rational a = alpha;
  return 2 * n * (n + a + 3) / (3 * (a + 1) * (a + 8));
}

std::optional<Rational> linear_factor_upper(int n, const Rational& alpha) {
  require_alpha_above_minus_one(alpha);
  if (alpha < 2 || n < 3) return std::nullopt;
  Rational a = alpha;
  return 4 * n * (n + a + 3) / ((a + 1) * (a + 8));
}

Real ell_limit(int k, const Real& alpha) {
  const tables::ClosedForm& cf = tables::lower_constant(k);
  return boost::multiprecision::sqrt(eval_real(cf.c, alpha));
}

Real u_limit(int k, const Real& alpha) {
  const tables::ClosedForm& cf = tables::upper_constant(k);
  return nth_root(eval_real(cf.c, alpha), 2 * static_cast<unsigned>(k));
}

AsymptoticBounds asymptotic_bounds(const Rational& alpha) {
  require_alpha_above_minus_one(alpha);
  AsymptoticBounds out;
  out.lower_sq = tables::lower_constant(6).c.eval(alpha);
  Real a = to_real(alpha);
  out.upper_sq = nth_root(to_real(tables::upper_constant(6).c.eval(alpha)), 6);
  if (alpha >= 2) {
    Rational branch = 4 / (alpha * alpha + 10 * alpha + 8);
    Real b = to_real(branch);
    if (b < out.upper_sq) out.upper_sq = b;
  }
  for (int k = 3; k <= 6; ++k) out.rho[k - 3] = u_limit(k, a) / ell_limit(k, a);
  return out;
}

namespace {

Real crossover_gap(CrossoverKind kind, const Real& a) {
  switch (kind) {
    case CrossoverKind::upper_branch_switch:
      return 4 * (a + 1) * nth_root((a + 3) * (a + 5), 3) - (a * a + 10 * a + 8);
    case CrossoverKind::asymptotic_branch_switch: {
      Real u6 = u_limit(6, a);
      return u6 * u6 - 4 / (a * a + 10 * a + 8);
    }
    case CrossoverKind::rho6_equals_2:
      return u_limit(6, a) / ell_limit(6, a) - 2;
  }
  throw std::logic_error("crossover_gap: unknown kind");
}

}  // namespace

CrossoverResult find_crossover(CrossoverKind kind) {
  Real lo, hi;
  switch (kind) {
    case CrossoverKind::upper_branch_switch:
      lo = 2;
      hi = 1000;
      break;
    case CrossoverKind::asymptotic_branch_switch:
      lo = 2;
      hi = 10000;
      break;
    case CrossoverKind::rho6_equals_2:
      lo = 1000;
      hi = 10000000;
      break;
  }
  Real glo = crossover_gap(kind, lo);
  Real ghi = crossover_gap(kind, hi);
  if (glo == 0) return CrossoverResult{kind, lo, lo, lo};
  if (ghi == 0) return CrossoverResult{kind, hi, hi, hi};
  if ((glo > 0) == (ghi > 0))
    throw std::runtime_error("find_crossover: bracket does not straddle a sign change");
  bool lo_positive = glo > 0;
  for (int iter = 0; iter < 160; ++iter) {
    Real mid = (lo + hi) / 2;
    Real g = crossover_gap(kind, mid);
    if (g == 0) {
      lo = mid;
      hi = mid;
      break;
    }
    if ((g > 0) == lo_positive)
      lo = mid;
    else
      hi = mid;
  }
  return CrossoverResult{kind, lo, hi, (lo + hi) / 2};
}

std::vector<EvidenceRow> scaled_limit_evidence(int n, const std::vector<Rational>& alphas,
                                               const Rational& rel_tol) {
  std::vector<EvidenceRow> rows;
  rows.reserve(alphas.size());
  for (const Rational& a : alphas) {
    Enclosure enc = cn2_enclosure(n, a, rel_tol);
    Rational x = a * enc.lo, y = a * enc.hi;
    if (x > y) std::swap(x, y);
    rows.push_back(EvidenceRow{a, Enclosure{x, y}});
  }
  return rows;
}

bool leading_coefficient_identity(int k_max) {
  if (k_max < 1) throw std::domain_error("leading_coefficient_identity: k_max must be >= 1");
  std::vector<NPoly> b = coeffs_symbolic(k_max);
  AlphaPoly den = AlphaPoly::one(Basis::alpha);
  Rational fact(1);
  Rational two_pow(1);
  for (int k = 1; k <= k_max; ++k) {
    den = den * AlphaPoly({Rational(2 * k - 1), Rational(1)}, Basis::alpha);
    fact *= k;
    two_pow *= 2;
    const NPoly& bk = b[static_cast<size_t>(k - 1)];
    if (bk.degree() != 2 * k) return false;
    AlphaFunction expect(AlphaPoly::one(Basis::alpha), den * AlphaPoly(two_pow * fact, Basis::alpha));
    if (!(bk.leading() == expect)) return false;
  }
  return true;
}

}  // namespace markovl2
