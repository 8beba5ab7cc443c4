#pragma once

#include <nlohmann/json.hpp>

#include "keypoly/balls.hpp"
#include "keypoly/chain.hpp"
#include "keypoly/family.hpp"
#include "keypoly/limits.hpp"

namespace keypoly {

using Json = nlohmann::json;

// Rationals are always strings so that no precision is lost. A LambdaValue
// is "a/b" when its eps part is zero, {"std": "a/b", "eps": "c/d"} otherwise,
// and "inf" for infinity. Readers throw ValidationError on malformed input.

Json to_json(const LambdaValue& v);
LambdaValue lambda_from_json(const Json& j);

/// {"p": 2, "gamma0": ..., "steps": [{"phi": "x^2 + 2", "gamma": ..., "trusted": false}]}
Json to_json(const MacLaneChain& mu);
/// Rebuilds the chain through augment, so untrusted steps are key-checked.
MacLaneChain chain_from_json(const Json& j);

/// {"kind": "monomial_centers", "p": 2, "centers": "sum_2^k", "deltas": "k_plus_1", "cap": 64}
/// or {"kind": "explicit", "chains": [...]}.
Json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const Json& j);

Json to_json(const StableResult& r);
Json to_json(const BallAvatar& b);
Json to_json(const std::vector<OptimalEntry>& seq);

/// {"p": 2, "steps": [{"kind": "ordinary", "phi": ..., "gamma": ..., "trusted": false,
///  "family": {...}}], "terminal": "at_last_step" | {"stable_limit": family}}
Json to_json(const MLVChain& chain);
MLVChain mlv_from_json(const Json& j);

/// {"mlv1": true, "mlv2": true, "mlv3": true, "mlv4": true | "not_applicable",
///  "degrees": [1, 2], "kinds": ["ordinary", "ordinary"]}
Json to_json(const MLVReport& r);

}  // namespace keypoly
