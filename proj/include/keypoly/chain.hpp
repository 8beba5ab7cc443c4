#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "keypoly/polynomial.hpp"
#include "keypoly/value_group.hpp"

namespace keypoly {

struct ChainStep {
    RatPoly phi;        // monic key polynomial
    LambdaValue gamma;  // value assigned to phi
    bool trusted = false;  // accepted without a complete key test
};

/// A valuation on Q[x] given as a MacLane chain: the monomial valuation
/// sum a_i x^i -> min(v_p(a_i) + i*gamma0) followed by augmentations
/// [mu; phi, gamma], each evaluated on phi-expansions.
///
/// MacLaneChain itself only stores steps; `augment` (valuations.hpp) is the
/// validating constructor. `with_step` extends by the augmentation formula
/// without any key test.
class MacLaneChain {
public:
    MacLaneChain(Prime p, LambdaValue gamma0);

    Prime prime() const { return p_; }
    const LambdaValue& gamma0() const { return gamma0_; }
    std::span<const ChainStep> steps() const { return steps_; }
    std::size_t depth() const { return steps_.size(); }

    /// Degree of the last key polynomial; 1 for a bare monomial chain.
    int degree() const { return last_key().degree(); }
    /// phi_last, or x for a bare monomial chain.
    const RatPoly& last_key() const;
    const LambdaValue& last_gamma() const;

    /// x followed by every step polynomial, in chain order.
    std::vector<RatPoly> key_polynomials() const;

    /// The chain truncated to its first `n_steps` augmentations.
    MacLaneChain prefix(std::size_t n_steps) const;
    MacLaneChain with_step(ChainStep step) const;

    /// mu(f); infinity for f = 0.
    LambdaValue evaluate(const RatPoly& f) const;
    /// Value of f under the chain truncated to its first `level` steps.
    LambdaValue evaluate_at_level(const RatPoly& f, std::size_t level) const;

private:
    Prime p_;
    LambdaValue gamma0_;
    std::vector<ChainStep> steps_;
    RatPoly x_ = RatPoly::x();
};

/// The monomial (Gauss) valuation centred at 0 with x -> gamma0.
MacLaneChain gauss(Prime p, LambdaValue gamma0);

}  // namespace keypoly
