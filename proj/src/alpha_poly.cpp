#include "markovl2/alpha_poly.hpp"

#include <stdexcept>

namespace markovl2 {

AlphaPoly::AlphaPoly(const Rational& constant, Basis basis) : basis_(basis) {
  if (constant != 0) c_.push_back(constant);
}

AlphaPoly::AlphaPoly(std::vector<Rational> coeffs, Basis basis)
    : c_(std::move(coeffs)), basis_(basis) {
  trim();
}

AlphaPoly AlphaPoly::variable(Basis basis) { return AlphaPoly({Rational(0), Rational(1)}, basis); }

void AlphaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void AlphaPoly::check_same_basis(const AlphaPoly& o) const {
  if (basis_ != o.basis_ && !is_zero() && !o.is_zero())
    throw std::invalid_argument("polynomial basis mismatch");
}

Rational AlphaPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<size_t>(i)];
}

const Rational& AlphaPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

Rational AlphaPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

AlphaPoly AlphaPoly::derivative() const {
  if (degree() <= 0) return AlphaPoly(Rational(0), basis_);
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return AlphaPoly(std::move(d), basis_);
}

AlphaPoly AlphaPoly::shifted_to(Basis target) const {
  if (target == basis_ || is_zero()) {
    AlphaPoly out = *this;
    out.basis_ = target;
    return out;
  }
  // alpha -> t: substitute alpha = t - 1;  t -> alpha: substitute t = alpha + 1.
  const Rational s = (basis_ == Basis::alpha) ? Rational(-1) : Rational(1);
  std::vector<Rational> c = c_;
  const int n = static_cast<int>(c.size());
  for (int i = 0; i + 1 < n; ++i)
    for (int j = n - 2; j >= i; --j) c[static_cast<size_t>(j)] += s * c[static_cast<size_t>(j) + 1];
  return AlphaPoly(std::move(c), target);
}

std::pair<Rational, AlphaPoly> AlphaPoly::content_primitive() const {
  if (is_zero()) return {Rational(0), AlphaPoly(Rational(0), basis_)};
  Int den_lcm(1), num_gcd(0);
  for (const Rational& q : c_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  for (const Rational& q : c_) {
    Int scaled = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  AlphaPoly prim = *this;
  prim /= content;
  return {content, prim};
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
  check_same_basis(o);
  if (is_zero()) basis_ = o.basis_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
  check_same_basis(o);
  if (is_zero()) basis_ = o.basis_;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator*=(const AlphaPoly& o) {
  check_same_basis(o);
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

AlphaPoly& AlphaPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (Rational& q : c_) q *= s;
  return *this;
}

AlphaPoly& AlphaPoly::operator/=(const Rational& s) {
  if (s == 0) throw std::invalid_argument("division of polynomial by zero");
  for (Rational& q : c_) q /= s;
  return *this;
}

AlphaPoly AlphaPoly::operator-() const {
  AlphaPoly out = *this;
  for (Rational& q : out.c_) q = -q;
  return out;
}

std::pair<AlphaPoly, AlphaPoly> div_mod(const AlphaPoly& a, const AlphaPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (!a.is_zero() && a.basis() != b.basis())
    throw std::invalid_argument("polynomial basis mismatch");
  if (a.degree() < b.degree()) return {AlphaPoly(Rational(0), b.basis()), a};
  std::vector<Rational> rem(a.coeffs());
  std::vector<Rational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Rational(0));
  const Rational& lb = b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational q = rem[static_cast<size_t>(i)] / lb;
    if (q == 0) continue;
    quot[static_cast<size_t>(i - b.degree())] = q;
    for (int j = 0; j <= b.degree(); ++j)
      rem[static_cast<size_t>(i - b.degree() + j)] -= q * b.coeff(j);
  }
  return {AlphaPoly(std::move(quot), b.basis()), AlphaPoly(std::move(rem), b.basis())};
}

AlphaPoly div_exact(const AlphaPoly& a, const AlphaPoly& b) {
  auto [q, r] = div_mod(a, b);
  if (!r.is_zero()) throw std::invalid_argument("inexact polynomial division");
  return q;
}

AlphaPoly gcd(const AlphaPoly& a_in, const AlphaPoly& b_in) {
  if (a_in.is_zero() && b_in.is_zero()) return a_in;
  auto normalize = [](const AlphaPoly& p) {
    AlphaPoly prim = p.content_primitive().second;
    if (!prim.is_zero() && prim.leading() < 0) prim = -prim;
    return prim;
  };
  if (a_in.is_zero()) return normalize(b_in);
  if (b_in.is_zero()) return normalize(a_in);
  AlphaPoly a = normalize(a_in), b = normalize(b_in);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    AlphaPoly r = div_mod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? r : normalize(r);  // content stripping keeps coefficients small
  }
  return a;
}

AlphaPoly lcm(const AlphaPoly& a, const AlphaPoly& b) {
  if (a.is_zero() || b.is_zero()) return AlphaPoly(Rational(0), a.basis());
  AlphaPoly g = gcd(a, b);
  AlphaPoly m = div_exact(a, g) * b;
  AlphaPoly prim = m.content_primitive().second;
  if (prim.leading() < 0) prim = -prim;
  return prim;
}

std::string to_string(const AlphaPoly& p) {
  if (p.is_zero()) return "0";
  const char* var = (p.basis() == Basis::alpha) ? "a" : "t";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += (c > 0) ? " + " : " - ";
    else if (c < 0) out += "-";
    Rational ab = abs(c);
    if (ab != 1 || i == 0) out += to_string(ab);
    if (i > 0) {
      if (ab != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace markovl2
