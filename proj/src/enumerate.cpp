#include "keypoly/enumerate.hpp"

#include <algorithm>

#include "keypoly/errors.hpp"

namespace keypoly {

std::vector<Rational> height_rationals(int height) {
    if (height < 1) throw ValidationError("height must be positive");
    std::vector<Rational> out;
    for (long b = 1; b <= height; ++b) {
        for (long a = 1; a <= height; ++a) {
            Integer g;
            mpz_gcd_ui(g.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(b));
            if (g != 1) continue;
            out.emplace_back(a, b);
            out.emplace_back(-a, b);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

void for_each_poly(const EnumSpec& spec, const std::function<bool(const RatPoly&)>& visit) {
    if (spec.max_degree < 0) return;
    const std::vector<Rational> nonzero = height_rationals(spec.height);
    std::vector<Rational> with_zero{Rational(0)};
    with_zero.insert(with_zero.end(), nonzero.begin(), nonzero.end());
    std::sort(with_zero.begin(), with_zero.end());

    const int start = std::max(spec.min_degree, spec.monic_only ? 1 : 0);
    for (int d = start; d <= spec.max_degree; ++d) {
        const std::size_t lower = static_cast<std::size_t>(d);
        const std::vector<Rational>& leads = spec.monic_only ? std::vector<Rational>{Rational(1)} : nonzero;
        std::vector<std::size_t> idx(lower, 0);
        std::vector<Rational> coeffs(lower + 1);
        for (const auto& lead : leads) {
            std::fill(idx.begin(), idx.end(), 0);
            for (;;) {
                for (std::size_t i = 0; i < lower; ++i) coeffs[i] = with_zero[idx[i]];
                coeffs[lower] = lead;
                if (!visit(RatPoly(coeffs))) return;
                std::size_t k = 0;
                while (k < lower && ++idx[k] == with_zero.size()) idx[k++] = 0;
                if (k == lower) break;
            }
        }
    }
}

std::vector<RatPoly> enumerate_polys(const EnumSpec& spec) {
    std::vector<RatPoly> out;
    for_each_poly(spec, [&](const RatPoly& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

}  // namespace keypoly
