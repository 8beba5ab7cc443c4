#pragma once

#include <utility>
#include <vector>

#include "keypoly/chain.hpp"

namespace keypoly {

enum class ValuationClass { ResidueTranscendental, ValueTranscendental };

const char* to_string(ValuationClass c);

/// The monomial valuation v_{c,delta}: sum b_i (x-c)^i -> min(v_p(b_i) + i*delta),
/// built as a chain from the Gauss valuation through one degree-1 step.
MacLaneChain monomial_chain(Prime p, const Rational& center, const LambdaValue& delta);

/// max over 1 <= s <= deg f of (mu(f) - mu(d_s f)) / s, where d_s is the
/// s-th Hasse-Schmidt derivative. Throws ValidationError for constant f.
LambdaValue epsilon(const MacLaneChain& mu, const RatPoly& f);

/// epsilon of the chain's last key polynomial: the radius of its ball.
LambdaValue delta(const MacLaneChain& mu);

ValuationClass classify(const MacLaneChain& mu);

/// in_mu f is a unit in the graded algebra, i.e. epsilon(f) < delta(mu).
/// Nonzero constants are units.
bool is_unit_initial(const MacLaneChain& mu, const RatPoly& f);

/// in_mu phi divides in_mu f, decided by comparing mu(f) with the formula
/// augmentation [mu; phi, mu(phi) + 1]. Throws ValidationError unless phi is
/// an accepted key polynomial for mu.
bool divides_initial(const MacLaneChain& mu, const RatPoly& phi, const RatPoly& f);

/// Effective test: deg Q = 1, or epsilon(Q) exceeds the epsilon of every chain
/// key polynomial (x included) of smaller degree.
bool is_abstract_key(const MacLaneChain& mu, const RatPoly& Q);

/// is_abstract_key with the epsilon values of the chain key polynomials
/// computed once, for testing many Q against one chain.
class AbstractKeyTest {
public:
    explicit AbstractKeyTest(const MacLaneChain& mu);
    bool operator()(const RatPoly& Q) const;

private:
    const MacLaneChain* mu_;
    std::vector<std::pair<int, LambdaValue>> key_eps_;  // (degree, epsilon)
};

/// mu_Q(f) = min over the Q-expansion of mu(f_i) + i*mu(Q). Throws
/// ValidationError when Q is not an abstract key polynomial.
LambdaValue truncate_value(const MacLaneChain& mu, const RatPoly& Q, const RatPoly& f);

/// Q is a key polynomial of minimal degree: Q is an abstract key polynomial,
/// deg Q = deg(mu) and mu_Q = mu, the latter checked on the last key
/// polynomial via min(mu(Q), mu(phi_last - Q)) = gamma_last.
bool is_key_min_degree(const MacLaneChain& mu, const RatPoly& Q);

enum class KeyVerdict { Yes, No, UnknownAtBound };

const char* to_string(KeyVerdict v);

/// Search bounds for is_key: candidate key polynomials of intermediate degree
/// are the caller's known keys plus all monic polynomials of that degree
/// with coefficients of the given height.
struct KeyBounds {
    int height = 2;
    std::vector<RatPoly> known_keys;
};

/// Semi-decision for key polynomials of any degree.
///
/// No: f reducible, in_mu f a unit, deg f < deg(mu), deg f = deg(mu) without
/// passing is_key_min_degree, or in_mu f divisible by the initial form of a
/// key polynomial of smaller degree (phi_last first, then candidates).
/// Yes: deg f = deg(mu) and is_key_min_degree, or no candidate key divides.
/// UnknownAtBound: a candidate divides but is not itself known to be a key.
KeyVerdict is_key(const MacLaneChain& mu, const RatPoly& f, const KeyBounds& bounds = {});

/// Validating augmentation [mu; phi, gamma]. Throws ValidationError when
/// gamma <= mu(phi) ("not an augmentation") or, unless `trusted`, when phi
/// is not accepted as a key polynomial.
MacLaneChain augment(const MacLaneChain& mu, const RatPoly& phi, const LambdaValue& gamma, bool trusted = false,
                     const KeyBounds& bounds = {});

/// f ~_mu g for accepted key polynomials: same degree and mu(f - g) > mu(f).
bool same_direction(const MacLaneChain& mu, const RatPoly& f, const RatPoly& g);

/// mu <= eta: delta(mu) <= delta(eta) and epsilon_mu(phi) = delta(mu) for the
/// last key polynomial phi of eta. Throws ValidationError for different primes.
bool compare(const MacLaneChain& mu, const MacLaneChain& eta);

bool equivalent(const MacLaneChain& mu, const MacLaneChain& eta);

}  // namespace keypoly
