#pragma once

#include <string>
#include <vector>

#include "keypoly/chain.hpp"

namespace keypoly::fixtures {

struct NamedChain {
    std::string name;
    MacLaneChain chain;
};

/// mu'' = [gauss(2, 1/2); x^2 + 2, 3/2].
MacLaneChain mu2();

/// Twenty chains of depth at most 3 over p = 2, 3, 5, built through the
/// validating augment. Two of them are value-transcendental.
std::vector<NamedChain> fixture_chains();

/// Ten of the fixture chains, used for the abstract key comparison.
std::vector<NamedChain> akp_chains();

}  // namespace keypoly::fixtures
