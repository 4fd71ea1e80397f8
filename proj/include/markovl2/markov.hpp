#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <vector>

#include "markovl2/alpha_function.hpp"
#include "markovl2/rational.hpp"

namespace markovl2 {

using Real = boost::multiprecision::mpfr_float;

// MARKOV_PRECISION_DIGITS (clamped to [10, 10000]), default 40.
int default_digits();
// Sets the ambient working precision; call once at startup or around blocks
// that need more.
void set_working_digits(int digits10);

Real to_real(const Rational& q);
Real real_pi();
Real nth_root(const Real& x, unsigned k);
Rational dyadic_from_real(const Real& x);  // exact value of the float

Real eval_real(const AlphaPoly& p, const Real& x);
Real eval_real(const AlphaFunction& f, const Real& alpha);

// Exact two-sided enclosure lo <= value <= hi.
struct Enclosure {
  Rational lo, hi;
  Rational width() const { return hi - lo; }
  Rational mid() const { return (hi + lo) / 2; }
};

enum class CnMethod {
  sturm_bisection,      // eigenvalue count of the Jacobi matrix by exact sign changes
  coefficient_rootfind  // largest root of the reversed coefficient polynomial
};

// Enclosure of the squared best constant c_n^2(alpha), certified by exact
// arithmetic at the final bracket regardless of the float phase inbetween.
// Relative width <= rel_tol. alpha within 1e-8 of -1 is refused.
Enclosure cn2_enclosure(int n, const Rational& alpha, const Rational& rel_tol,
                        CnMethod method = CnMethod::sturm_bisection);

// Closed form at alpha = 0: c_n(0) = (2 sin(pi/(4n+2)))^{-1}; returns its square.
Real cn2_alpha0_closed(int n);

// ---- closed-form bound families (k = 3..6), valid for n >= k, alpha > -1 ----
// lower: c(alpha) n (n + sigma (alpha+1))            -- exact rational
// upper: c(alpha)^{1/k} (n+1)(n + sigma (alpha+1))   -- rounded slightly upward
std::optional<Rational> closed_lower(int k, int n, const Rational& alpha);
std::optional<Real> closed_upper(int k, int n, const Rational& alpha);

// ---- other published two-sided estimates ----
// three-term lower / quadratic upper, all n >= 1, alpha > -1
Rational classical_lower(int n, const Rational& alpha);
Rational classical_upper(int n, const Rational& alpha);
// 2 (n + 2 alpha/3)(n - (alpha+1)/6) / ((alpha+1)(alpha+5)); n >= 3 and n > (alpha+1)/6
std::optional<Rational> shifted_quadratic_lower(int n, const Rational& alpha);
// 4 n (n + 2 + 3(alpha+1)/4) / (alpha^2 + 10 alpha + 8); alpha >= 2, n >= 3
std::optional<Rational> large_alpha_upper(int n, const Rational& alpha);
// 2 n (n + alpha + 3) / (3 (alpha+1)(alpha+8))  resp. 4 n (...) / ((alpha+1)(alpha+8));
// alpha >= 2, n >= 3
std::optional<Rational> linear_factor_lower(int n, const Rational& alpha);
std::optional<Rational> linear_factor_upper(int n, const Rational& alpha);

// ---- n -> infinity limits of the k-indexed bounds ----
Real ell_limit(int k, const Real& alpha);  // sqrt(c_lower(alpha))
Real u_limit(int k, const Real& alpha);    // c_upper(alpha)^{1/(2k)}

struct AsymptoticBounds {
  Rational lower_sq;        // best lower bound for c(alpha)^2 (k = 6 family)
  Real upper_sq;            // best upper bound; two-branch for alpha >= 2
  Real rho[4];              // u_k/ell_k for k = 3, 4, 5, 6
};
AsymptoticBounds asymptotic_bounds(const Rational& alpha);

// Sign changes of the differences between upper-bound branches.
enum class CrossoverKind {
  upper_branch_switch,       // 4(a+1)((a+3)(a+5))^{1/3} = a^2 + 10a + 8   (~43.4)
  asymptotic_branch_switch,  // u_6(a)^2 = 4/(a^2 + 10a + 8)               (~172)
  rho6_equals_2,             // u_6/ell_6 = 2                              (~1.4e5)
};
struct CrossoverResult {
  CrossoverKind kind;
  Real lo, hi, root;  // bisection bracket and its midpoint
};
CrossoverResult find_crossover(CrossoverKind kind);

// alpha * c_n^2(alpha) along an alpha sweep (evidence for the alpha -> infinity
// limit n); exact enclosures scaled by alpha.
struct EvidenceRow {
  Rational alpha;
  Enclosure scaled;  // alpha * c_n^2(alpha)
};
std::vector<EvidenceRow> scaled_limit_evidence(int n, const std::vector<Rational>& alphas,
                                               const Rational& rel_tol);

// Exact check that lead(b_k) = 1 / (2^k k! (alpha+1)(alpha+3)...(alpha+2k-1))
// for k = 1..k_max.
bool leading_coefficient_identity(int k_max);

}  // namespace markovl2
