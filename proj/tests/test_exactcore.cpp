#include <doctest.h>

#include <stdexcept>

#include "markovl2/alpha_function.hpp"
#include "markovl2/alpha_poly.hpp"
#include "markovl2/npolynomial.hpp"
#include "markovl2/positivity.hpp"
#include "markovl2/rational.hpp"

using namespace markovl2;

namespace {
Rational Q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/8") == Q(3, 8));
  CHECK(parse_rational("-7") == Q(-7));
  CHECK(parse_rational("0.25") == Q(1, 4));
  CHECK(parse_rational("-1.5e2") == Q(-150));
  CHECK(parse_rational("2e-3") == Q(2, 1000));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("rational helpers") {
  CHECK(rational_pow(Q(-2, 3), 3) == Q(-8, 27));
  CHECK(rational_pow(Q(5), 0) == Q(1));
  CHECK(floor_rational(Q(7, 2)) == 3);
  CHECK(floor_rational(Q(-7, 2)) == -4);
  CHECK(floor_rational(Q(-4)) == -4);
  CHECK(binom_shifted(Q(0), 4) == Q(1));       // C(4,4)
  CHECK(binom_shifted(Q(3), 2) == Q(10));      // C(5,2)
  CHECK(binom_shifted(Q(1, 2), 2) == Q(15, 8));
}

TEST_CASE("alpha polynomial arithmetic") {
  const AlphaPoly a = AlphaPoly::variable();  // alpha
  const AlphaPoly p = a * a - AlphaPoly(Q(1));
  CHECK(p.degree() == 2);
  CHECK(p.eval(Q(3)) == Q(8));
  CHECK((p + AlphaPoly(Q(1))).eval(Q(3)) == Q(9));

  const AlphaPoly q = a + AlphaPoly(Q(1));
  auto [quot, rem] = div_mod(p, q);
  CHECK(rem.is_zero());
  CHECK(quot == a - AlphaPoly(Q(1)));
  CHECK(div_exact(p, q) == quot);
  CHECK_THROWS_AS(div_exact(p + AlphaPoly(Q(1)), q), std::invalid_argument);
}

TEST_CASE("alpha polynomial gcd, lcm, content") {
  const AlphaPoly a = AlphaPoly::variable();
  const AlphaPoly f = (a + AlphaPoly(Q(1))) * (a + AlphaPoly(Q(3)));
  const AlphaPoly g = (a + AlphaPoly(Q(1))) * (a + AlphaPoly(Q(5)));
  CHECK(gcd(f, g) == a + AlphaPoly(Q(1)));
  CHECK(lcm(f, g) == (a + AlphaPoly(Q(1))) * (a + AlphaPoly(Q(3))) * (a + AlphaPoly(Q(5))));

  const AlphaPoly h = AlphaPoly({Q(1, 2), Q(3, 4)});
  auto [content, prim] = h.content_primitive();
  CHECK(content == Q(1, 4));
  CHECK(prim == AlphaPoly({Q(2), Q(3)}));

  // gcd is scale-insensitive and has positive leading coefficient
  CHECK(gcd(f * Q(-7, 3), g * Q(2, 5)) == a + AlphaPoly(Q(1)));
}

TEST_CASE("basis shift is value preserving and invertible") {
  const AlphaPoly p({Q(3), Q(-2), Q(5)});  // 5 a^2 - 2 a + 3
  const AlphaPoly pt = p.shifted_to(Basis::alpha_plus_one);
  CHECK(pt.basis() == Basis::alpha_plus_one);
  for (long v = -3; v <= 3; ++v) CHECK(pt.eval(Q(v + 1)) == p.eval(Q(v)));
  CHECK(pt.shifted_to(Basis::alpha) == p);
}

TEST_CASE("mixed-basis arithmetic is rejected") {
  const AlphaPoly a = AlphaPoly::variable(Basis::alpha);
  const AlphaPoly t = AlphaPoly::variable(Basis::alpha_plus_one);
  CHECK_THROWS_AS(a + t, std::invalid_argument);
}

TEST_CASE("rational function normalization") {
  const AlphaPoly a = AlphaPoly::variable();
  // (a^2 - 1) / (a + 1) reduces to a - 1
  AlphaFunction f(a * a - AlphaPoly(Q(1)), a + AlphaPoly(Q(1)));
  CHECK(f == AlphaFunction(a - AlphaPoly(Q(1))));
  CHECK(f.eval(Q(4)) == Q(3));

  // denominator sign and content are normalized away
  AlphaFunction g(AlphaPoly(Q(1)), (a + AlphaPoly(Q(1))) * Q(-2, 3));
  CHECK(g.den() == (a + AlphaPoly(Q(1))));
  CHECK(g.num() == AlphaPoly(Q(-3, 2)));

  AlphaFunction h = AlphaFunction(Q(1)) / (AlphaFunction::alpha() + AlphaFunction(Q(1)));
  CHECK_THROWS_AS(h.eval(Q(-1)), std::domain_error);
  CHECK(af_pow(h, 2).den().degree() == 2);
}

TEST_CASE("rational function field ops") {
  const AlphaFunction x = AlphaFunction::alpha();
  const AlphaFunction one(Q(1));
  AlphaFunction r = (x + one) / (x - one) + (x - one) / (x + one);
  // (x+1)^2 + (x-1)^2 = 2x^2 + 2 over x^2 - 1
  CHECK(r.eval(Q(2)) == Q(10, 3));
  CHECK(r * (x * x - one) == Rational(2) * x * x + Rational(2) * one);
}

TEST_CASE("n-polynomial evaluation and interpolation") {
  const NPoly n = NPoly::variable();
  const AlphaFunction t = AlphaFunction::alpha() + AlphaFunction(Q(1));
  NPoly p = n * n + NPoly(t) * n;  // n^2 + (alpha+1) n
  CHECK(p.degree() == 2);
  CHECK(p.eval(Q(3), Q(2)) == Q(18));
  CHECK(p.eval_n(Q(3)) == AlphaFunction(Q(9)) + Rational(3) * t);

  std::vector<std::pair<Rational, AlphaFunction>> samples;
  for (int v = 1; v <= 5; ++v) samples.emplace_back(Q(v), p.eval_n(Q(v)));
  CHECK(interpolate_in_n(samples, 2) == p);
  CHECK_THROWS_AS(interpolate_in_n(samples, 1), std::invalid_argument);  // degree bound too small
  CHECK_THROWS_AS(interpolate_in_n({samples[0], samples[1]}, 2), std::invalid_argument);
}

TEST_CASE("positive axis sign decisions") {
  const AlphaPoly t = AlphaPoly::variable(Basis::alpha_plus_one);
  const AlphaPoly one = AlphaPoly::one(Basis::alpha_plus_one);

  CHECK(positive_axis_sign(AlphaPoly{}) == Positivity::zero_polynomial);
  CHECK(positive_axis_sign(one) == Positivity::proven_nonnegative);
  CHECK(positive_axis_sign(-one) == Positivity::negative_somewhere);
  CHECK(positive_axis_sign(t * t - Rational(2) * t + one) == Positivity::proven_nonnegative);  // (t-1)^2
  CHECK(positive_axis_sign(t - one) == Positivity::negative_somewhere);
  CHECK(positive_axis_sign((t - one) * (t - one) * t) == Positivity::proven_nonnegative);
  // negative only left of the positive axis
  CHECK(positive_axis_sign(t + one) == Positivity::proven_nonnegative);

  // 4t^2 - 4t + 225 has no real roots; the cubic it came from stays positive
  const AlphaPoly c({Q(360), Q(225), Q(-4), Q(4)}, Basis::alpha_plus_one);
  CHECK(positive_axis_sign(c) == Positivity::proven_nonnegative);

  CHECK(count_positive_roots((t - one) * (t - Rational(2) * one) * (t + one)) == 2);
  CHECK(count_positive_roots((t - one) * (t - one)) == 1);  // distinct roots
}

TEST_CASE("odd multiplicity part strips even factors") {
  const AlphaPoly t = AlphaPoly::variable(Basis::alpha_plus_one);
  const AlphaPoly one = AlphaPoly::one(Basis::alpha_plus_one);
  const AlphaPoly f1 = t - one;
  const AlphaPoly f2 = t - Rational(2) * one;
  const AlphaPoly f3 = t - Rational(3) * one;
  AlphaPoly p = f1 * f2 * f2 * f3 * f3 * f3;
  CHECK(odd_multiplicity_part(p) == f1 * f3);
  CHECK(squarefree_part(p) == f1 * f2 * f3);
}
