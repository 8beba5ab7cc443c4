#include "selftest.hpp"

#include <sstream>

#include "fixtures.hpp"
#include "keypoly/balls.hpp"
#include "keypoly/valuations.hpp"
#include "oracle.hpp"

namespace keypoly::cli {

Json run_selftest(std::uint64_t seed) {
    std::size_t cases = 0;
    Json failures = Json::array();
    auto check = [&](bool ok, const std::string& what) {
        ++cases;
        if (!ok) failures.push_back(what);
    };

    for (const auto& c : oracle::eps_np_cases(100, seed)) {
        const auto r = oracle::eps_np_crosscheck(c.p, c.c, c.delta, c.f);
        std::ostringstream what;
        what << "eps/newton p=" << c.p.value() << " c=" << c.c << " delta=" << c.delta << " f=" << c.f << ": "
             << r.epsilon << " vs " << r.newton;
        check(r.agree, what.str());
    }

    const auto chains = fixtures::fixture_chains();
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const auto r = oracle::brute_valuation_axioms(chains[i].chain, 100, seed + i);
        check(r.passed, "valuation axioms on " + chains[i].name + ": " + r.counterexample);
    }

    for (const auto& c : fixtures::akp_chains()) {
        const AbstractKeyTest effective(c.chain);
        const oracle::BruteAkp brute(c.chain, EnumSpec{1, 4, true, 1});
        for (const auto& q : oracle::enumerate_polys(EnumSpec{2, 4, true, 1})) {
            check(effective(q) == brute(q), "abstract key disagreement on " + c.name + " for " + to_string(q));
        }
    }

    const MacLaneChain mu = fixtures::mu2();
    const Prime p2(2);
    check(to_json(mu.evaluate(parse_poly("x^3"))) == "3/2", "mu''(x^3) = 3/2");
    check(to_json(delta(mu)) == "3/4", "delta(mu'') = 3/4");
    check(classify(mu) == ValuationClass::ResidueTranscendental, "mu'' is residue-transcendental");
    check(to_json(optimal_sequence(mu)).dump() ==
              R"([{"degree":1,"eps":"1/2","q":"x"},{"degree":2,"eps":"3/4","q":"x^2 + 2"}])",
          "optimal sequence of mu''");
    check(is_key(gauss(p2, LambdaValue(Rational(1, 2))), parse_poly("x^2 + 2")) == KeyVerdict::Yes,
          "x^2 + 2 is key for gauss(2, 1/2)");
    check(is_key(gauss(p2, 0), parse_poly("x^2 + 2")) == KeyVerdict::No, "x^2 + 2 is not key for gauss(2, 0)");
    check(is_key(gauss(p2, 1), parse_poly("x^2 + 2")) == KeyVerdict::No, "x^2 + 2 is not key for gauss(2, 1)");

    return Json{{"suite", "selftest"}, {"cases", cases}, {"failures", failures}};
}

}  // namespace keypoly::cli
