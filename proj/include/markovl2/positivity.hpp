#pragma once

#include <vector>

#include "markovl2/alpha_poly.hpp"

namespace markovl2 {

enum class Positivity {
  proven_nonnegative,  // p(x) >= 0 for every x > 0
  negative_somewhere,  // p takes a negative value at some x > 0
  zero_polynomial,
};

const char* to_string(Positivity v);

// Exact decision of the sign behaviour of p on the open positive axis of its
// own variable (basis is irrelevant to the decision). Sturm-based; no floats.
Positivity positive_axis_sign(const AlphaPoly& p);

// Number of distinct roots of p in (0, +inf); p must be nonzero.
int count_positive_roots(const AlphaPoly& p);

// p / gcd(p, p'): the same roots, all simple. Primitive, positive leading coeff.
AlphaPoly squarefree_part(const AlphaPoly& p);

// Product of the factors of odd multiplicity (carries the sign of p off its roots,
// up to a positive constant). Primitive, positive leading coefficient.
AlphaPoly odd_multiplicity_part(const AlphaPoly& p);

// Sturm chain of a squarefree polynomial (integer primitive, signs preserved).
std::vector<AlphaPoly> sturm_chain(const AlphaPoly& squarefree);

}  // namespace markovl2
