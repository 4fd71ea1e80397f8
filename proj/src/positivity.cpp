#include "markovl2/positivity.hpp"

#include <stdexcept>

namespace markovl2 {

const char* to_string(Positivity v) {
  switch (v) {
    case Positivity::proven_nonnegative: return "proven_nonnegative";
    case Positivity::negative_somewhere: return "negative_somewhere";
    case Positivity::zero_polynomial: return "zero_polynomial";
  }
  return "?";
}

namespace {

AlphaPoly primitive_positive(const AlphaPoly& p) {
  AlphaPoly prim = p.content_primitive().second;
  if (!prim.is_zero() && prim.leading() < 0) prim = -prim;
  return prim;
}

// Sign variations across a sequence of signs, zeros skipped.
int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int sturm_count_positive(const std::vector<AlphaPoly>& chain) {
  std::vector<int> at0, atinf;
  at0.reserve(chain.size());
  atinf.reserve(chain.size());
  for (const AlphaPoly& s : chain) {
    at0.push_back(sgn(s.coeff(0)));
    atinf.push_back(s.is_zero() ? 0 : sgn(s.leading()));
  }
  return variations(at0) - variations(atinf);
}

}  // namespace

AlphaPoly squarefree_part(const AlphaPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
  if (p.degree() == 0) return AlphaPoly::one(p.basis());
  AlphaPoly g = gcd(p, p.derivative());
  if (g.degree() == 0) return primitive_positive(p);
  return primitive_positive(div_exact(primitive_positive(p), g));
}

AlphaPoly odd_multiplicity_part(const AlphaPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("odd-multiplicity part of zero polynomial");
  AlphaPoly prim = primitive_positive(p);
  if (prim.degree() == 0) return AlphaPoly::one(p.basis());
  AlphaPoly u = gcd(prim, prim.derivative());
  if (u.degree() == 0) return prim;  // squarefree: every multiplicity is 1
  AlphaPoly v = div_exact(prim, u);  // all distinct roots, once each
  // A root has odd multiplicity in p iff it has even multiplicity in u
  // (including absence), so drop from v whatever is odd in u.
  AlphaPoly wu = odd_multiplicity_part(u);
  AlphaPoly g = gcd(v, wu);
  if (g.degree() == 0) return v;
  return primitive_positive(div_exact(v, g));
}

std::vector<AlphaPoly> sturm_chain(const AlphaPoly& squarefree) {
  std::vector<AlphaPoly> chain;
  chain.push_back(squarefree);
  if (squarefree.degree() <= 0) return chain;
  chain.push_back(squarefree.derivative());
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    AlphaPoly r = div_mod(chain[chain.size() - 2], chain.back()).second;
    r = -r;
    if (!r.is_zero()) {
      // Divide by positive content only: Sturm needs the sign kept.
      Rational c = r.content_primitive().first;  // positive by construction
      r /= c;
    }
    chain.push_back(std::move(r));
    if (chain.back().is_zero()) {
      chain.pop_back();
      break;
    }
  }
  return chain;
}

int count_positive_roots(const AlphaPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("root count of zero polynomial");
  AlphaPoly g = squarefree_part(p);
  // Remove the root at 0 so the chain endpoints are clean.
  while (g.coeff(0) == 0 && g.degree() > 0)
    g = div_exact(g, AlphaPoly::variable(g.basis()));
  if (g.degree() == 0) return 0;
  return sturm_count_positive(sturm_chain(g));
}

Positivity positive_axis_sign(const AlphaPoly& p_in) {
  if (p_in.is_zero()) return Positivity::zero_polynomial;
  // Powers of the variable do not affect the sign for x > 0.
  AlphaPoly p = p_in;
  while (p.coeff(0) == 0 && p.degree() > 0) p = div_exact(p, AlphaPoly::variable(p.basis()));
  if (p.degree() == 0)
    return p.coeff(0) > 0 ? Positivity::proven_nonnegative : Positivity::negative_somewhere;

  if (count_positive_roots(p) == 0) {
    // Constant sign on (0, inf); sample at x = 1 (cannot be a root here).
    return p.eval(Rational(1)) > 0 ? Positivity::proven_nonnegative
                                   : Positivity::negative_somewhere;
  }

  // Roots exist; the sign can still be constant if all of them have even
  // multiplicity. A simple root of the odd part is a strict sign change.
  AlphaPoly w = odd_multiplicity_part(p);
  if (w.degree() > 0 && sturm_count_positive(sturm_chain(w)) > 0)
    return Positivity::negative_somewhere;

  // No sign change on (0, inf): sample at a non-root to fix the sign.
  for (long tau = 1;; ++tau) {
    Rational v = p.eval(Rational(tau));
    if (v != 0) return v > 0 ? Positivity::proven_nonnegative : Positivity::negative_somewhere;
  }
}

}  // namespace markovl2
