#include <doctest.h>

#include "markovl2/markov.hpp"
#include "markovl2/reference_tables.hpp"

using namespace markovl2;

namespace {

Rational Q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

bool contains(const Enclosure& e, const Rational& v) { return e.lo <= v && v <= e.hi; }

bool overlap(const Enclosure& a, const Enclosure& b) { return a.lo <= b.hi && b.lo <= a.hi; }

double rel_err(const Real& a, const Real& b) {
  return static_cast<double>(boost::multiprecision::abs(a - b) / b);
}

}  // namespace

TEST_CASE("dyadic_from_real is the exact float value") {
  CHECK(dyadic_from_real(to_real(Q(5, 8))) == Q(5, 8));
  CHECK(dyadic_from_real(Real(0)) == 0);
  CHECK(dyadic_from_real(Real("-3.25")) == Q(-13, 4));
}

TEST_CASE("cn2 enclosure: 1x1 case is exact and tight") {
  for (Rational a : {Q(0), Q(3, 2), Q(-1, 2)}) {
    Enclosure e = cn2_enclosure(1, a, Q(1, 1000000000000L));
    Rational exact = 1 / (a + 1);
    CHECK(contains(e, exact));
    CHECK(e.width() <= exact * Q(1, 1000000000000L));
  }
}

TEST_CASE("cn2 enclosure: n=2 alpha=0 hits (3+sqrt 5)/2") {
  Enclosure e = cn2_enclosure(2, Q(0), Q(1, 10000000000L));
  Real expect = (3 + boost::multiprecision::sqrt(Real(5))) / 2;
  CHECK(rel_err(to_real(e.mid()), expect) < 1e-9);
}

TEST_CASE("cn2 enclosure domain gates") {
  CHECK_THROWS_AS(cn2_enclosure(0, Q(0), Q(1, 100)), std::domain_error);
  CHECK_THROWS_AS(cn2_enclosure(3, Q(-1), Q(1, 100)), std::domain_error);
  CHECK_THROWS_AS(cn2_enclosure(3, Q(-2), Q(1, 100)), std::domain_error);
  // refused this close to the wall
  CHECK_THROWS_AS(cn2_enclosure(3, Q(-1) + Q(1, 1000000000L), Q(1, 100)), std::domain_error);
  CHECK_THROWS_AS(cn2_enclosure(3, Q(0), Q(0)), std::domain_error);
  Int huge;
  mpz_ui_pow_ui(huge.get_mpz_t(), 10, 31);
  CHECK_THROWS_AS(cn2_enclosure(3, Q(0), Rational(1, huge)), std::domain_error);
}

TEST_CASE("both root-finding methods agree on overlapping intervals") {
  Rational tol = Q(1, 1000000000000L);
  for (int n : {1, 2, 3, 5, 9, 17, 33}) {
    for (Rational a : {Q(-9, 10), Q(0), Q(1), Q(10)}) {
      Enclosure s = cn2_enclosure(n, a, tol, CnMethod::sturm_bisection);
      Enclosure c = cn2_enclosure(n, a, tol, CnMethod::coefficient_rootfind);
      CAPTURE(n);
      CHECK(overlap(s, c));
      CHECK(s.width() <= s.lo * tol);
      CHECK(c.width() <= c.lo * tol);
    }
  }
}

TEST_CASE("closed form at alpha=0 matches the enclosure") {
  for (int n : {1, 2, 10, 37}) {
    Enclosure e = cn2_enclosure(n, Q(0), Q(1, 1000000000000L));
    CHECK(rel_err(to_real(e.mid()), cn2_alpha0_closed(n)) < 1e-10);
  }
  CHECK(rel_err(cn2_alpha0_closed(1), Real(1)) < 1e-30);
  Real golden = (1 + boost::multiprecision::sqrt(Real(5))) / 2;  // 1/(2 sin(pi/10))
  CHECK(rel_err(cn2_alpha0_closed(2), golden * golden) < 1e-30);
}

TEST_CASE("limit toward alpha = -1: (alpha+1) c_n^2 -> n(n+1)/2") {
  Rational a = Q(-1) + Q(1, 1000000);
  for (int n : {1, 2, 5, 11, 20}) {
    Enclosure e = cn2_enclosure(n, a, Q(1, 100000000));
    Rational scaled = (a + 1) * e.mid();
    Rational target = Q(static_cast<long>(n) * (n + 1), 2);
    CHECK(abs(scaled - target) <= target * Q(1, 10000));
  }
}

TEST_CASE("closed two-sided formulas: domain gates and spot values") {
  CHECK_FALSE(closed_lower(3, 2, Q(0)).has_value());
  CHECK_FALSE(closed_upper(6, 5, Q(0)).has_value());
  CHECK_THROWS_AS(closed_lower(2, 10, Q(0)), std::domain_error);   // no k=2 family
  CHECK_THROWS_AS(closed_lower(3, 10, Q(-2)), std::domain_error);  // alpha domain

  // k=3 lower at n=10, alpha=0: 2 n (n + 3/8) / 5
  CHECK(closed_lower(3, 10, Q(0)).value() == Q(83, 2));

  // quadratic upper at n=1 collapses to the exact c_1^2
  CHECK(classical_upper(1, Q(7, 2)) == 1 / (Q(7, 2) + 1));

  CHECK_FALSE(large_alpha_upper(5, Q(1)).has_value());
  CHECK_FALSE(large_alpha_upper(2, Q(3)).has_value());
  CHECK(large_alpha_upper(5, Q(3)).has_value());
  CHECK_FALSE(linear_factor_lower(5, Q(199, 100)).has_value());
  CHECK(linear_factor_upper(3, Q(2)).value() == 4 * 3 * Q(3 + 2 + 3) / ((Q(2) + 1) * (Q(2) + 8)));

  // second factor must stay positive
  CHECK_FALSE(shifted_quadratic_lower(2, Q(11)).has_value());  // n = (alpha+1)/6 exactly
  CHECK(shifted_quadratic_lower(3, Q(11)).has_value());
}

TEST_CASE("bound ordering on a small grid") {
  Rational tol = Q(1, 1000000000000L);
  for (int n : {5, 12}) {
    for (Rational a : {Q(0), Q(5, 2)}) {
      Enclosure e = cn2_enclosure(n, a, tol);
      CHECK(classical_lower(n, a) <= e.hi);
      CHECK(e.lo <= classical_upper(n, a));
      if (auto lo = closed_lower(6, n, a)) CHECK(*lo <= e.hi);
      if (auto lo = shifted_quadratic_lower(n, a)) CHECK(*lo <= e.hi);
      if (auto up = large_alpha_upper(n, a)) CHECK(e.lo <= *up);
      if (auto lo = linear_factor_lower(n, a)) CHECK(*lo <= e.hi);
      if (auto up = linear_factor_upper(n, a)) CHECK(e.lo <= *up);
      if (auto up = closed_upper(6, n, a)) CHECK(to_real(e.lo) <= *up);
    }
  }
}

TEST_CASE("asymptotic limits bracket the Bessel-zero constant") {
  // alpha = 0: c(0) = 2/pi
  Real c0 = 2 / real_pi();
  CHECK(ell_limit(6, Real(0)) <= c0);
  CHECK(c0 <= u_limit(6, Real(0)));

  // alpha = 1: c(1) = 1/j_{0,1}
  Real c1 = 1 / to_real(parse_rational("2.404825557695773"));
  CHECK(ell_limit(6, Real(1)) <= c1);
  CHECK(c1 <= u_limit(6, Real(1)));

  AsymptoticBounds ab = asymptotic_bounds(Q(0));
  CHECK(ab.lower_sq == Q(2073, 5115));
  CHECK(to_real(ab.lower_sq) <= c0 * c0);
  CHECK(c0 * c0 <= ab.upper_sq);
  for (int i = 0; i + 1 < 4; ++i) CHECK(ab.rho[i] >= ab.rho[i + 1]);
  CHECK(ab.rho[3] >= 1);
}

TEST_CASE("limit bounds tighten monotonically in k") {
  for (Real a : {Real(0), Real(3.5), Real(100)}) {
    for (int k = 3; k < 6; ++k) {
      CHECK(ell_limit(k, a) <= ell_limit(k + 1, a));
      CHECK(u_limit(k + 1, a) <= u_limit(k, a));
    }
    CHECK(ell_limit(6, a) <= u_limit(6, a));
  }
}

TEST_CASE("crossover roots land in the published windows") {
  CrossoverResult c1 = find_crossover(CrossoverKind::upper_branch_switch);
  CHECK(static_cast<double>(c1.root) > 42.9);
  CHECK(static_cast<double>(c1.root) < 43.9);

  CrossoverResult c2 = find_crossover(CrossoverKind::asymptotic_branch_switch);
  CHECK(static_cast<double>(c2.root) > 170.0);
  CHECK(static_cast<double>(c2.root) < 174.0);

  CrossoverResult c3 = find_crossover(CrossoverKind::rho6_equals_2);
  CHECK(static_cast<double>(c3.root) > 120000.0);
  CHECK(static_cast<double>(c3.root) < 160000.0);
}

TEST_CASE("scaled evidence rows stay within the k=6 asymptotic bracket") {
  // alpha c_n^2 lies in [6n/7, 3n] for these alphas (and tends to n)
  int n = 5;
  std::vector<Rational> alphas = {Q(100), Q(10000), Q(100000)};
  auto rows = scaled_limit_evidence(n, alphas, Q(1, 1000000000));
  REQUIRE(rows.size() == alphas.size());
  Rational lo_bracket = Q(6 * n, 7), hi_bracket = Q(3 * n);
  for (const auto& r : rows) {
    CHECK(r.scaled.lo >= lo_bracket);
    CHECK(r.scaled.hi <= hi_bracket);
  }
  // monotone approach toward n from whichever side: later alphas closer
  Rational dist_first = abs(rows.front().scaled.mid() - n);
  Rational dist_last = abs(rows.back().scaled.mid() - n);
  CHECK(dist_last <= dist_first);
}

TEST_CASE("leading coefficient identity for b_k holds through k=6") {
  CHECK(leading_coefficient_identity(6));
}

TEST_CASE("eval_real matches exact evaluation") {
  AlphaPoly p({Q(360), Q(225), Q(-4), Q(4)}, Basis::alpha_plus_one);
  Rational x = Q(7, 3);
  CHECK(rel_err(eval_real(p, to_real(x)), to_real(p.eval(x))) < 1e-35);
  AlphaFunction f = tables::lower_constant(4).c;
  CHECK(rel_err(eval_real(f, to_real(Q(1, 2))), to_real(f.eval(Q(1, 2)))) < 1e-35);
}
