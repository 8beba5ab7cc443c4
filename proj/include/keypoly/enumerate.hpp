#pragma once

#include <functional>
#include <vector>

#include "keypoly/polynomial.hpp"

namespace keypoly {

/// Bounds for exhaustive polynomial enumeration. Coefficients are the
/// rationals a/b with |a| <= height and 1 <= b <= height.
struct EnumSpec {
    int max_degree = 1;
    int height = 1;
    bool monic_only = true;
    int min_degree = 0;  // monic enumeration never yields constants
};

/// Nonzero rationals of the given height, ascending.
std::vector<Rational> height_rationals(int height);

/// Visits every polynomial within the bounds exactly once, by increasing
/// degree. Stops early when `visit` returns false.
void for_each_poly(const EnumSpec& spec, const std::function<bool(const RatPoly&)>& visit);

std::vector<RatPoly> enumerate_polys(const EnumSpec& spec);

}  // namespace keypoly
