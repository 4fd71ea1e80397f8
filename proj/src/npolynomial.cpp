#include "markovl2/npolynomial.hpp"

#include <stdexcept>

namespace markovl2 {

namespace {
const AlphaFunction kZero{};
}

NPoly::NPoly(const Rational& constant) : NPoly(AlphaFunction(constant)) {}

NPoly::NPoly(AlphaFunction constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

NPoly::NPoly(std::vector<AlphaFunction> coeffs) : c_(std::move(coeffs)) { trim(); }

NPoly NPoly::variable() { return NPoly({AlphaFunction(Rational(0)), AlphaFunction(Rational(1))}); }

void NPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const AlphaFunction& NPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const AlphaFunction& NPoly::leading() const {
  if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
  return c_.back();
}

AlphaFunction NPoly::eval_n(const Rational& n) const {
  AlphaFunction acc;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * AlphaFunction(n) + c_[i];
  return acc;
}

Rational NPoly::eval(const Rational& n, const Rational& alpha) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * n + c_[i].eval(alpha);
  return acc;
}

NPoly& NPoly::operator+=(const NPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

NPoly& NPoly::operator*=(const NPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<AlphaFunction> out(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  c_ = std::move(out);
  trim();
  return *this;
}

NPoly& NPoly::operator*=(const AlphaFunction& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (AlphaFunction& q : c_) q *= s;
  return *this;
}

NPoly NPoly::operator-() const {
  NPoly out = *this;
  for (AlphaFunction& q : out.c_) q = -q;
  return out;
}

std::string NPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    if (coeff(i).is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + coeff(i).to_string() + "]";
    if (i > 0) out += "*n" + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return out;
}

NPoly interpolate_in_n(const std::vector<std::pair<Rational, AlphaFunction>>& samples,
                       int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  const size_t m = static_cast<size_t>(degree_bound) + 1;
  if (samples.size() < m) throw std::invalid_argument("not enough interpolation samples");
  for (size_t i = 0; i < samples.size(); ++i)
    for (size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw std::invalid_argument("repeated interpolation point");

  // Newton divided differences over the first m samples.
  std::vector<AlphaFunction> dd(m);
  for (size_t i = 0; i < m; ++i) dd[i] = samples[i].second;
  for (size_t level = 1; level < m; ++level)
    for (size_t j = m - 1; j >= level; --j) {
      Rational dx = samples[j].first - samples[j - level].first;
      dd[j] = (dd[j] - dd[j - 1]) * AlphaFunction(Rational(1) / dx);
      if (j == level) break;
    }

  NPoly p(dd[m - 1]);
  for (size_t j = m - 1; j-- > 0;) {
    NPoly shift({AlphaFunction(-samples[j].first), AlphaFunction(Rational(1))});
    p = p * shift + NPoly(dd[j]);
  }

  for (const auto& [x, v] : samples)
    if (!(p.eval_n(x) == v))
      throw std::invalid_argument("interpolation samples exceed the degree bound");
  return p;
}

}  // namespace markovl2
