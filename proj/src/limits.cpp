#include "keypoly/limits.hpp"

#include "keypoly/enumerate.hpp"
#include "keypoly/errors.hpp"
#include "keypoly/irreducible.hpp"
#include "keypoly/valuations.hpp"

namespace keypoly {

StableResult stable_eval(const IncreasingFamily& family, const RatPoly& f) {
    return stable_eval(family, f, family.scan_cap());
}

StableResult stable_eval(const IncreasingFamily& family, const RatPoly& f, std::size_t scan) {
    if (f.is_zero()) throw ValidationError("stable value of the zero polynomial");
    if (scan > family.scan_cap()) throw ValidationError("scan bound exceeds the family's scan cap");
    if (f.is_constant()) {
        return {LambdaValue(base_val(family.prime(), f.coeff(0))), 0, true};
    }
    StableResult out;
    for (std::size_t i = 0; i <= scan; ++i) {
        const MacLaneChain mu = family.member(i);
        out.value = mu.evaluate(f);
        out.witness_index = i;
        if (epsilon(mu, f) < delta(mu)) {
            out.certified = true;
            return out;
        }
    }
    return out;
}

bool is_unstable_up_to(const IncreasingFamily& family, const RatPoly& f, std::size_t n) {
    if (n > family.scan_cap()) throw ValidationError("scan bound exceeds the family's scan cap");
    if (f.is_constant()) return false;
    for (std::size_t i = 0; i <= n; ++i) {
        const MacLaneChain mu = family.member(i);
        if (epsilon(mu, f) < delta(mu)) return false;
    }
    return true;
}

std::vector<RatPoly> find_limit_kp(const IncreasingFamily& family, int max_degree, int height, std::size_t n) {
    if (max_degree < 1 || height < 1) throw ValidationError("bounds must be positive");
    // Members are reused across candidates.
    std::vector<MacLaneChain> members;
    std::vector<LambdaValue> radii;
    for (std::size_t i = 0; i <= n; ++i) {
        members.push_back(family.member(i));
        radii.push_back(delta(members.back()));
    }
    for (int d = 1; d <= max_degree; ++d) {
        std::vector<RatPoly> found;
        for_each_poly(EnumSpec{d, height, true, d}, [&](const RatPoly& f) {
            for (std::size_t i = 0; i <= n; ++i) {
                if (epsilon(members[i], f) < radii[i]) return true;
            }
            if (is_irreducible_q(f)) found.push_back(f);
            return true;
        });
        if (!found.empty()) return found;
    }
    return {};
}

LambdaValue LimitAugmentation::evaluate(const RatPoly& f) const {
    if (f.is_zero()) return LambdaValue::infinity();
    const auto expansion = phi_expansion(f, phi_);
    LambdaValue best = LambdaValue::infinity();
    for (std::size_t i = 0; i < expansion.size(); ++i) {
        if (expansion[i].is_zero()) continue;
        const StableResult r = stable_eval(*family_, expansion[i]);
        if (!r.certified) {
            throw ComputationError("no certified stable value for '" + to_string(expansion[i]) + "' within scan cap " +
                                   std::to_string(family_->scan_cap()));
        }
        LambdaValue term = r.value + static_cast<std::int64_t>(i) * gamma_;
        if (term < best) best = std::move(term);
    }
    return best;
}

LimitAugmentation limit_augment(const IncreasingFamily& family, const RatPoly& phi, const LambdaValue& gamma,
                                std::size_t anchor) {
    if (phi.degree() < 1 || !phi.is_monic()) throw ValidationError("limit key polynomial must be monic and nonconstant");
    if (gamma.is_infinite()) throw ValidationError("augmentation value must be finite");
    if (anchor > family.scan_cap()) throw ValidationError("anchor exceeds the family's scan cap");
    for (std::size_t i = 0; i <= anchor; ++i) {
        if (!(gamma > family.member(i).evaluate(phi))) {
            throw ValidationError("not an augmentation: gamma does not exceed mu_" + std::to_string(i) + "(phi)");
        }
    }
    return LimitAugmentation(std::make_shared<const IncreasingFamily>(family), phi, gamma, anchor);
}

}  // namespace keypoly
