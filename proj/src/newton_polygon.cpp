#include "keypoly/newton_polygon.hpp"

#include <algorithm>

#include "keypoly/errors.hpp"

namespace keypoly {

NewtonPolygon newton_polygon(Prime p, const RatPoly& f) {
    if (f.degree() < 1) throw ValidationError("Newton polygon needs a nonconstant polynomial");
    const auto& a = f.coeffs();

    NewtonPolygon np;
    std::vector<std::pair<std::size_t, Rational>> points;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        points.emplace_back(i, Rational(valuation_of_nonzero(p, a[i])));
    }
    np.zero_roots = points.front().first;

    // Monotone chain, lower hull; points are already sorted by abscissa.
    std::vector<std::pair<std::size_t, Rational>> hull;
    auto cross_ok = [](const auto& o, const auto& u, const auto& w) {
        // Keep u only if it lies strictly below segment o-w.
        Rational lhs = (u.second - o.second) * Rational(static_cast<long>(w.first - o.first));
        Rational rhs = (w.second - o.second) * Rational(static_cast<long>(u.first - o.first));
        return lhs < rhs;
    };
    for (const auto& pt : points) {
        while (hull.size() >= 2 && !cross_ok(hull[hull.size() - 2], hull.back(), pt)) hull.pop_back();
        hull.push_back(pt);
    }

    for (const auto& [x, y] : hull) np.vertices.push_back({x, RationalValue(y)});
    for (std::size_t k = 1; k < hull.size(); ++k) {
        const auto& [x0, y0] = hull[k - 1];
        const auto& [x1, y1] = hull[k];
        Rational slope = (y1 - y0) / Rational(static_cast<long>(x1 - x0));
        np.segments.push_back({Rational(-slope), x1 - x0});
    }
    return np;
}

std::vector<RationalValue> NewtonPolygon::root_valuations() const {
    std::vector<RationalValue> out;
    for (const auto& s : segments) {
        for (std::size_t k = 0; k < s.multiplicity; ++k) out.emplace_back(s.root_valuation);
    }
    for (std::size_t k = 0; k < zero_roots; ++k) out.push_back(RationalValue::infinity());
    std::sort(out.begin(), out.end());
    return out;
}

RationalValue NewtonPolygon::max_root_valuation() const {
    if (zero_roots > 0) return RationalValue::infinity();
    // Slopes increase left to right, so the first segment carries the largest
    // root valuation.
    return RationalValue(segments.front().root_valuation);
}

}  // namespace keypoly
