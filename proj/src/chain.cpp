#include "keypoly/chain.hpp"

#include "keypoly/errors.hpp"

namespace keypoly {

MacLaneChain::MacLaneChain(Prime p, LambdaValue gamma0) : p_(p), gamma0_(std::move(gamma0)) {
    if (gamma0_.is_infinite()) throw ValidationError("gamma0 must be finite");
}

MacLaneChain gauss(Prime p, LambdaValue gamma0) { return MacLaneChain(p, std::move(gamma0)); }

const RatPoly& MacLaneChain::last_key() const { return steps_.empty() ? x_ : steps_.back().phi; }

const LambdaValue& MacLaneChain::last_gamma() const { return steps_.empty() ? gamma0_ : steps_.back().gamma; }

std::vector<RatPoly> MacLaneChain::key_polynomials() const {
    std::vector<RatPoly> out{x_};
    for (const auto& s : steps_) out.push_back(s.phi);
    return out;
}

MacLaneChain MacLaneChain::prefix(std::size_t n_steps) const {
    if (n_steps > steps_.size()) throw ValidationError("prefix longer than the chain");
    MacLaneChain out(p_, gamma0_);
    out.steps_.assign(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(n_steps));
    return out;
}

MacLaneChain MacLaneChain::with_step(ChainStep step) const {
    if (!step.phi.is_monic() || step.phi.degree() < 1) throw ValidationError("key polynomial must be monic and nonconstant");
    if (step.gamma.is_infinite()) throw ValidationError("augmentation value must be finite");
    MacLaneChain out = *this;
    out.steps_.push_back(std::move(step));
    return out;
}

LambdaValue MacLaneChain::evaluate(const RatPoly& f) const { return evaluate_at_level(f, steps_.size()); }

LambdaValue MacLaneChain::evaluate_at_level(const RatPoly& f, std::size_t level) const {
    if (f.is_zero()) return LambdaValue::infinity();
    // Polynomials of degree below phi_level see only the prefix.
    while (level > 0 && f.degree() < steps_[level - 1].phi.degree()) --level;

    if (level == 0) {
        const auto& a = f.coeffs();
        LambdaValue best = LambdaValue::infinity();
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (sgn(a[i]) == 0) continue;
            LambdaValue term = LambdaValue(valuation_of_nonzero(p_, a[i])) + static_cast<std::int64_t>(i) * gamma0_;
            if (term < best) best = std::move(term);
        }
        return best;
    }

    const ChainStep& step = steps_[level - 1];
    const std::vector<RatPoly> expansion = phi_expansion(f, step.phi);
    LambdaValue best = LambdaValue::infinity();
    for (std::size_t i = 0; i < expansion.size(); ++i) {
        if (expansion[i].is_zero()) continue;
        LambdaValue term = evaluate_at_level(expansion[i], level - 1) + static_cast<std::int64_t>(i) * step.gamma;
        if (term < best) best = std::move(term);
    }
    return best;
}

}  // namespace keypoly
