#pragma once

#include <cstddef>
#include <vector>

#include "keypoly/polynomial.hpp"

namespace keypoly {

struct NewtonVertex {
    std::size_t abscissa;
    RationalValue ordinate;
};

/// One edge of the lower hull, reported by the root valuation it encodes
/// (the negated hull slope) and its horizontal length.
struct NewtonSegment {
    Rational root_valuation;
    std::size_t multiplicity;
};

struct NewtonPolygon {
    std::vector<NewtonVertex> vertices;
    /// Left to right along the hull, so root valuations are non-increasing.
    std::vector<NewtonSegment> segments;
    /// Number of roots equal to zero (the x-adic valuation of f).
    std::size_t zero_roots = 0;

    /// Multiset of v-values of all roots in an algebraic closure, ascending;
    /// zero roots contribute infinity.
    std::vector<RationalValue> root_valuations() const;
    /// Largest root valuation (infinity when 0 is a root).
    RationalValue max_root_valuation() const;
};

/// Lower convex hull of {(i, v_p(a_i)) : a_i != 0}. Throws ValidationError for
/// constant f.
NewtonPolygon newton_polygon(Prime p, const RatPoly& f);

}  // namespace keypoly
