#include "fixtures.hpp"

#include "keypoly/valuations.hpp"

namespace keypoly::fixtures {

namespace {

LambdaValue q(long n, long d = 1) { return LambdaValue(Rational(n, d)); }

MacLaneChain aug(const MacLaneChain& mu, const char* phi, const LambdaValue& gamma) {
    return augment(mu, parse_poly(phi), gamma);
}

}  // namespace

MacLaneChain mu2() { return aug(gauss(Prime(2), q(1, 2)), "x^2 + 2", q(3, 2)); }

std::vector<NamedChain> fixture_chains() {
    const Prime p2(2), p3(3), p5(5);
    const MacLaneChain g2_0 = gauss(p2, 0);
    const MacLaneChain g3_half = gauss(p3, q(1, 2));
    const MacLaneChain raw = aug(aug(g2_0, "x", q(1, 2)), "x^2 + 2", q(3, 2));
    // (x^2+2)^2 + 2x(x^2+2) + 8: all three terms have value 3 and the
    // residual polynomial y^2 + y + 1 is irreducible over F_2.
    const char* quartic = "x^4 + 2*x^3 + 4*x^2 + 4*x + 12";
    return {
        {"gauss(2,0)", g2_0},
        {"gauss(2,1/2)", gauss(p2, q(1, 2))},
        {"gauss(2,1)", gauss(p2, 1)},
        {"gauss(3,1/3)", gauss(p3, q(1, 3))},
        {"gauss(5,-1)", gauss(p5, -1)},
        {"v(2;1,3)", monomial_chain(p2, 1, 3)},
        {"v(3;1,1)+(x-4,3)", aug(monomial_chain(p3, 1, 1), "x - 4", 3)},
        {"v(5;7,5/2)", monomial_chain(p5, 7, q(5, 2))},
        {"mu2", mu2()},
        {"mu2+quartic", aug(mu2(), quartic, 4)},
        {"mu2+(x^2+4x+2,2)", aug(mu2(), "x^2 + 4*x + 2", 2)},
        {"gauss(3,1/2)+(x^2+3,3/2)", aug(g3_half, "x^2 + 3", q(3, 2))},
        {"gauss(2,0)+(x^2+x+1,1)", aug(g2_0, "x^2 + x + 1", 1)},
        {"gauss(3,0)+(x^2+1,2)", aug(gauss(p3, 0), "x^2 + 1", 2)},
        {"gauss(5,0)+(x^2+2,1)", aug(gauss(p5, 0), "x^2 + 2", 1)},
        {"gauss(5,1/3)+(x^3+5,3/2)", aug(gauss(p5, q(1, 3)), "x^3 + 5", q(3, 2))},
        {"gauss(2,eps)", gauss(p2, LambdaValue(0, 1))},
        {"gauss(3,1/2)+(x^2+3,1+eps)", aug(g3_half, "x^2 + 3", LambdaValue(1, 1))},
        {"gauss(2,0)+(x,1/2)+(x^2+2,3/2)", raw},
        {"gauss(2,0)+(x,1/2)+(x^2+2,3/2)+quartic", aug(raw, quartic, 4)},
    };
}

std::vector<NamedChain> akp_chains() {
    const auto all = fixture_chains();
    std::vector<NamedChain> out;
    for (std::size_t i : {0, 1, 3, 5, 6, 8, 10, 11, 13, 16}) out.push_back(all[i]);
    return out;
}

}  // namespace keypoly::fixtures
