#include "markovl2/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace markovl2 {

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Rational parse_decimal(std::string_view s) {
  // [sign] digits [. digits] [e|E [sign] digits]
  std::string mantissa;
  long exp10 = 0;
  size_t epos = s.find_first_of("eE");
  if (epos != std::string_view::npos) {
    std::string etok(s.substr(epos + 1));
    if (!valid_integer_token(etok)) throw std::invalid_argument("bad exponent in rational literal");
    exp10 = std::stol(etok);
    s = s.substr(0, epos);
  }
  size_t dot = s.find('.');
  if (dot != std::string_view::npos) {
    mantissa = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    exp10 -= static_cast<long>(s.size() - dot - 1);
  } else {
    mantissa = std::string(s);
  }
  if (!valid_integer_token(mantissa)) throw std::invalid_argument("bad rational literal");
  Rational r{Int(mantissa, 10)};
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 < 0)
    r /= Rational(scale);
  else
    r *= Rational(scale);
  r.canonicalize();
  return r;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  size_t slash = s.find('/');
  if (slash != std::string_view::npos) {
    std::string num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (!valid_integer_token(num) || !valid_integer_token(den))
      throw std::invalid_argument("bad p/q literal: " + std::string(s));
    Rational r{Int(num, 10), Int(den, 10)};
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(s));
    r.canonicalize();
    return r;
  }
  if (valid_integer_token(s)) return Rational(Int(std::string(s), 10));
  return parse_decimal(s);
}

Rational rational_pow(const Rational& base, unsigned e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;  // base canonical => base^e canonical
}

Int floor_rational(const Rational& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Rational binom_shifted(const Rational& a, unsigned n) {
  Rational out(1);
  for (unsigned j = 1; j <= n; ++j) out *= (a + Rational(j)) / Rational(j);
  return out;
}

}  // namespace markovl2
