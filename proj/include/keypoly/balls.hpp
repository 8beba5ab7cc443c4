#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "keypoly/chain.hpp"
#include "keypoly/family.hpp"

namespace keypoly {

/// The closed ball B(a, delta(mu)) of a chain valuation, up to conjugation,
/// represented by the chain itself. center_poly is the last key polynomial;
/// one of its roots is a centre of the ball.
struct BallAvatar {
    MacLaneChain chain;
    LambdaValue radius;
    RatPoly center_poly;
};

BallAvatar ball_of(const MacLaneChain& mu);

/// B contains B2, i.e. compare(B.chain, B2.chain).
bool contains(const BallAvatar& b, const BallAvatar& b2);

struct OptimalEntry {
    int degree;
    RatPoly q;
    LambdaValue eps;
};

/// For each degree along the chain, the deepest key polynomial of that
/// degree (x included) with its epsilon value.
std::vector<OptimalEntry> optimal_sequence(const MacLaneChain& mu);

/// Every f in the corpus has an entry with degree <= deg f whose truncation
/// reproduces mu(f). Throws ValidationError for a constant corpus entry.
bool complete_set_check(const MacLaneChain& mu, const std::vector<OptimalEntry>& seq,
                        const std::vector<RatPoly>& corpus);

// Mac Lane-Vaquie chains.

enum class StepKind { Ordinary, Limit };

const char* to_string(StepKind k);

struct MLVStep {
    StepKind kind = StepKind::Ordinary;
    RatPoly phi;
    LambdaValue gamma;
    bool trusted = false;
    /// The family whose limit is augmented, for Limit steps.
    std::shared_ptr<const IncreasingFamily> family;
};

enum class Terminal { AtLastStep, StableLimit };

/// mu_0 = v_{c, gamma_0} for phi_0 = x - c and mu_n = [mu_{n-1}; phi_n, gamma_n].
struct MLVChain {
    Prime p;
    std::vector<MLVStep> steps;
    Terminal terminal = Terminal::AtLastStep;
    std::shared_ptr<const IncreasingFamily> terminal_family;
};

/// Keeps the deepest step of each run of equal-degree key polynomials and
/// sets every gamma_n to raw(phi_n). Never produces limit steps.
MLVChain mlv_normalize(const MacLaneChain& raw);

/// The valuation mu_n of an all-ordinary MLV chain as a MacLane chain.
/// Throws ValidationError on limit steps or when a step is not an
/// augmentation.
MacLaneChain to_chain(const MLVChain& chain, std::size_t n);
MacLaneChain to_chain(const MLVChain& chain);

struct MLVReport {
    bool mlv1 = false;  // degrees strictly increase
    bool mlv2 = false;  // every step is an augmentation of the previous valuation
    bool mlv3 = false;  // mu_n(phi_n) = gamma_n = mu(phi_n)
    /// The chain reaches mu: to_chain(chain) is equivalent to mu. Not
    /// applicable (nullopt) for a stable-limit terminal.
    std::optional<bool> mlv4;
    std::vector<int> degrees;
    std::vector<std::string> kinds;
};

/// Checks the chain conditions against mu. Limit steps are checked for
/// gamma above every scanned member value of their family.
MLVReport verify_mlv(const MLVChain& chain, const MacLaneChain& mu);

}  // namespace keypoly
