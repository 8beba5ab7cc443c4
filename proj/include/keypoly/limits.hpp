#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "keypoly/family.hpp"

namespace keypoly {

struct StableResult {
    LambdaValue value;
    std::size_t witness_index = 0;
    /// The initial form of f is a unit at witness_index, so the value no
    /// longer changes along the family.
    bool certified = false;
};

/// Scans mu_0, ..., mu_N (N = scan_cap by default) for the first index at
/// which epsilon(mu_i, f) < delta(mu_i). Without such an index the result is
/// the value at mu_N, uncertified. Nonzero constants certify at index 0.
StableResult stable_eval(const IncreasingFamily& family, const RatPoly& f);
StableResult stable_eval(const IncreasingFamily& family, const RatPoly& f, std::size_t scan);

/// epsilon(mu_i, f) = delta(mu_i) for every i <= N. False for constants.
bool is_unstable_up_to(const IncreasingFamily& family, const RatPoly& f, std::size_t n);

/// Monic irreducible polynomials of the smallest degree (at most max_degree)
/// with coefficients of the given height that are unstable up to N. Empty
/// when every enumerated polynomial certifies stable.
std::vector<RatPoly> find_limit_kp(const IncreasingFamily& family, int max_degree, int height, std::size_t n);

/// The limit augmentation [family; phi, gamma]:
/// f -> min_i stable_value(f_i) + i*gamma over the phi-expansion of f.
class LimitAugmentation {
public:
    const IncreasingFamily& family() const { return *family_; }
    const RatPoly& phi() const { return phi_; }
    const LambdaValue& gamma() const { return gamma_; }
    std::size_t anchor() const { return anchor_; }

    /// Throws ComputationError when an expansion coefficient has no
    /// certified stable value within the family's scan cap.
    LambdaValue evaluate(const RatPoly& f) const;

    friend LimitAugmentation limit_augment(const IncreasingFamily&, const RatPoly&, const LambdaValue&, std::size_t);

private:
    LimitAugmentation(std::shared_ptr<const IncreasingFamily> family, RatPoly phi, LambdaValue gamma,
                      std::size_t anchor)
        : family_(std::move(family)), phi_(std::move(phi)), gamma_(std::move(gamma)), anchor_(anchor) {}

    std::shared_ptr<const IncreasingFamily> family_;
    RatPoly phi_;
    LambdaValue gamma_;
    std::size_t anchor_;
};

/// Throws ValidationError unless phi is monic and nonconstant, anchor does
/// not exceed the scan cap and gamma > mu_i(phi) for every i <= anchor.
LimitAugmentation limit_augment(const IncreasingFamily& family, const RatPoly& phi, const LambdaValue& gamma,
                                std::size_t anchor);

}  // namespace keypoly
