#pragma once

#include "keypoly/polynomial.hpp"

namespace keypoly {

/// Largest degree accepted by is_irreducible_q.
inline constexpr int kMaxIrreducibilityDegree = 8;

/// Exact irreducibility over Q. Squarefree test, factorisation modulo a prime
/// larger than twice a Mignotte-style bound on factor coefficients, then
/// recombination of modular factors with exact trial division.
///
/// Throws ValidationError for constant f or degree above
/// kMaxIrreducibilityDegree.
bool is_irreducible_q(const RatPoly& f);

}  // namespace keypoly
