#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "keypoly/errors.hpp"
#include "keypoly/valuations.hpp"
#include "oracle.hpp"

using namespace keypoly;

namespace {

RatPoly P(const char* s) { return parse_poly(s); }
LambdaValue L(const char* s) { return parse_lambda(s); }
MacLaneChain G(unsigned long p, const char* g) { return gauss(Prime(p), L(g)); }

}  // namespace

TEST_SUITE("valuations") {
    TEST_CASE("gauss examples") {
        CHECK(G(2, "0").evaluate(P("x^2+2")) == L("0"));
        CHECK(G(2, "1").evaluate(P("x^2+2")) == L("1"));
        CHECK(G(2, "eps").evaluate(P("x^2+2")) == L("2*eps"));
        CHECK(G(3, "1/3").evaluate(P("9*x - 1/3")) == L("-1"));
        CHECK(G(2, "0").evaluate(RatPoly()).is_infinite());
    }

    TEST_CASE("evaluate examples") {
        const MacLaneChain mu = fixtures::mu2();
        CHECK(mu.evaluate(P("x^3")) == L("3/2"));
        CHECK(mu.evaluate(pow(P("x^2+2"), 2)) == L("3"));
        CHECK(G(2, "1/2").evaluate(P("x+2")) == L("1/2"));
        CHECK(mu.evaluate_at_level(P("x^2+2"), 0) == L("1"));
        CHECK(mu.evaluate_at_level(P("x^2+2"), 1) == L("3/2"));
    }

    TEST_CASE("augment examples") {
        const MacLaneChain mu = augment(G(2, "1/2"), P("x^2+2"), L("3/2"));
        CHECK(mu.evaluate(P("x^2+2")) == L("3/2"));
        CHECK(mu.depth() == 1);

        const MacLaneChain v01 = augment(G(2, "0"), P("x"), L("1"));
        const MacLaneChain g1 = G(2, "1");
        for (const auto& f : oracle::random_polys(Prime(2), 5, 100, 1)) CHECK(v01.evaluate(f) == g1.evaluate(f));

        CHECK_THROWS_WITH_AS(augment(G(2, "1/2"), P("x^2+2"), L("1/2")), doctest::Contains("not an augmentation"),
                             ValidationError);
        CHECK_THROWS_AS(augment(G(2, "1/2"), P("x^2+2"), L("1")), ValidationError);
        // x^2 - 1 is reducible, so it is rejected unless trusted.
        CHECK_THROWS_AS(augment(G(2, "0"), P("x^2-1"), L("1")), ValidationError);
        CHECK_NOTHROW(augment(G(2, "0"), P("x^2-1"), L("1"), true));
        CHECK_THROWS_AS(augment(G(2, "0"), P("2*x"), L("1")), ValidationError);
    }

    TEST_CASE("augmentation monotonicity") {
        for (const auto& [name, chain] : fixtures::fixture_chains()) {
            if (chain.depth() == 0) continue;
            const MacLaneChain prev = chain.prefix(chain.depth() - 1);
            const int d = chain.last_key().degree();
            for (const auto& f : oracle::random_polys(chain.prime(), 2 * d + 1, 150, 3)) {
                CHECK(chain.evaluate(f) >= prev.evaluate(f));
                if (f.degree() < d) CHECK(chain.evaluate(f) == prev.evaluate(f));
            }
        }
    }

    TEST_CASE("epsilon examples") {
        CHECK(epsilon(G(2, "1"), P("x^2+2")) == L("1/2"));
        CHECK(epsilon(G(2, "0"), P("x^2+2")) == L("0"));
        CHECK(epsilon(fixtures::mu2(), P("x^2+2")) == L("3/4"));
        CHECK_THROWS_AS(epsilon(G(2, "0"), P("5")), ValidationError);
    }

    TEST_CASE("delta examples") {
        CHECK(delta(G(2, "1/2")) == L("1/2"));
        CHECK(delta(fixtures::mu2()) == L("3/4"));
        CHECK(delta(G(2, "eps")) == L("eps"));
    }

    TEST_CASE("delta strictly increases along prefixes and epsilon is capped by delta") {
        for (const auto& [name, chain] : fixtures::fixture_chains()) {
            CAPTURE(name);
            for (std::size_t k = 1; k <= chain.depth(); ++k) {
                CHECK(delta(chain.prefix(k - 1)) < delta(chain.prefix(k)));
            }
            const LambdaValue d = delta(chain);
            for (const auto& f : oracle::random_polys(chain.prime(), 6, 100, 4)) {
                if (f.is_constant()) continue;
                CHECK(epsilon(chain, f) <= d);
            }
        }
    }

    TEST_CASE("classify examples") {
        CHECK(classify(fixtures::mu2()) == ValuationClass::ResidueTranscendental);
        CHECK(classify(G(2, "eps")) == ValuationClass::ValueTranscendental);
        CHECK(classify(G(2, "0")) == ValuationClass::ResidueTranscendental);
        CHECK(std::string(to_string(ValuationClass::ValueTranscendental)) == "value-transcendental");
    }

    TEST_CASE("is_unit_initial examples") {
        CHECK(is_unit_initial(G(2, "1"), P("x^2+2")));
        CHECK_FALSE(is_unit_initial(G(2, "1/2"), P("x^2+2")));
        CHECK_FALSE(is_unit_initial(fixtures::mu2(), P("x^2+2")));
        CHECK(is_unit_initial(fixtures::mu2(), P("7")));
    }

    TEST_CASE("divides_initial examples") {
        CHECK(divides_initial(G(2, "0"), P("x"), P("x^2+2")));
        CHECK_FALSE(divides_initial(G(2, "0"), P("x"), P("x^2+x+1")));
        CHECK(divides_initial(fixtures::mu2(), P("x^2+2"), P("x^2+2") * P("x")));
        CHECK_THROWS_AS(divides_initial(G(2, "0"), P("x^2+x"), P("x^2")), ValidationError);
    }

    TEST_CASE("is_abstract_key examples") {
        const MacLaneChain mu = fixtures::mu2();
        CHECK(is_abstract_key(mu, P("x^2+2")));
        CHECK_FALSE(is_abstract_key(mu, P("x^2")));
        CHECK(is_abstract_key(mu, P("x+7/3")));
        CHECK(is_abstract_key(G(5, "2"), P("x-1")));
        CHECK_THROWS_AS(is_abstract_key(mu, P("2*x^2+4")), ValidationError);
        const AbstractKeyTest test(mu);
        for (const auto& Q : enumerate_polys(EnumSpec{3, 2, true})) CHECK(test(Q) == is_abstract_key(mu, Q));
    }

    TEST_CASE("truncate_value examples and bound") {
        const MacLaneChain mu = fixtures::mu2();
        CHECK(truncate_value(mu, P("x^2+2"), P("x^3")) == L("3/2"));
        CHECK(truncate_value(mu, P("x^2+2"), pow(P("x^2+2"), 2)) == L("3"));
        CHECK(truncate_value(G(2, "1/2"), P("x"), P("x+2")) == L("1/2"));
        CHECK(truncate_value(mu, P("x"), P("x^2+2")) == L("1"));
        CHECK_THROWS_AS(truncate_value(mu, P("x^2"), P("x^3")), ValidationError);
        for (const auto& f : oracle::random_polys(Prime(2), 6, 200, 5)) {
            CHECK(truncate_value(mu, P("x"), f) <= mu.evaluate(f));
            CHECK(truncate_value(mu, P("x^2+2"), f) == mu.evaluate(f));
        }
    }

    TEST_CASE("is_key_min_degree examples") {
        CHECK(is_key_min_degree(G(2, "1/2"), P("x+2")));
        CHECK_FALSE(is_key_min_degree(G(2, "1/2"), P("x^2+2")));
        CHECK(is_key_min_degree(fixtures::mu2(), P("x^2+2")));
        CHECK(is_key_min_degree(fixtures::mu2(), P("x^2+6")));
        CHECK(is_key_min_degree(fixtures::mu2(), P("x^2+4*x+2")));
        CHECK_FALSE(is_key_min_degree(fixtures::mu2(), P("x^2+1")));
        CHECK_FALSE(is_key_min_degree(G(2, "1/2"), P("x+1")));
    }

    TEST_CASE("mu_Q = mu for minimal-degree keys on sampled polynomials") {
        for (const auto& [name, chain] : fixtures::fixture_chains()) {
            CAPTURE(name);
            const RatPoly& phi = chain.last_key();
            const long p = static_cast<long>(chain.prime().value());
            const RatPoly Q = phi + RatPoly::constant(Rational(p * p * p * p * p));
            if (!is_key_min_degree(chain, Q)) continue;
            for (const auto& f : oracle::random_polys(chain.prime(), 2 * phi.degree(), 100, 6)) {
                CHECK(truncate_value(chain, Q, f) == chain.evaluate(f));
            }
        }
    }

    TEST_CASE("is_key examples") {
        CHECK(is_key(G(2, "1/2"), P("x^2+2")) == KeyVerdict::Yes);
        CHECK(is_key(G(2, "0"), P("x^2+2")) == KeyVerdict::No);
        CHECK(is_key(G(2, "1"), P("x^2+2")) == KeyVerdict::No);
        CHECK(is_key(fixtures::mu2(), P("x^2+2")) == KeyVerdict::Yes);
        CHECK(is_key(G(2, "0"), P("x^2-1")) == KeyVerdict::No);
        CHECK(is_key(G(2, "0"), P("x+1")) == KeyVerdict::Yes);
        CHECK_THROWS_AS(is_key(G(2, "0"), P("2*x+1")), ValidationError);
        CHECK(std::string(to_string(KeyVerdict::UnknownAtBound)) == "unknown");
    }

    TEST_CASE("is_key Yes at minimal degree yields a valuation") {
        std::size_t yes = 0;
        for (const auto& [name, chain] : fixtures::fixture_chains()) {
            std::size_t here = 0;
            for (const auto& f : enumerate_polys(EnumSpec{chain.degree(), 2, true, chain.degree()})) {
                if (here == 4) break;
                if (is_key(chain, f) != KeyVerdict::Yes) continue;
                ++yes;
                ++here;
                const LambdaValue g = chain.evaluate(f) + L("1");
                const auto report = oracle::brute_valuation_axioms(augment(chain, f, g), 60, 11);
                CHECK_MESSAGE(report.passed, name, ": ", report.counterexample);
            }
        }
        CHECK(yes > 0);
    }

    TEST_CASE("is_key No via divides_initial has a value jump witness") {
        const MacLaneChain mu = G(2, "0");
        CHECK(is_key(mu, P("x^2+2")) == KeyVerdict::No);
        MacLaneChain eta = mu.with_step({P("x"), mu.evaluate(P("x")) + L("1")});
        CHECK(eta.evaluate(P("x^2+2")) > mu.evaluate(P("x^2+2")));
    }

    TEST_CASE("same_direction examples") {
        CHECK(same_direction(G(2, "eps"), P("x"), P("x+2")));
        CHECK_FALSE(same_direction(G(2, "0"), P("x"), P("x+1")));
        CHECK(same_direction(G(2, "1/2"), P("x"), P("x+2")));
        CHECK_FALSE(same_direction(G(2, "1/2"), P("x"), P("x^2+2")));
        CHECK_THROWS_AS(same_direction(G(2, "1"), P("x"), P("x^2+2")), ValidationError);
    }

    TEST_CASE("same_direction is an equivalence on degree-one keys") {
        const MacLaneChain mu = G(3, "1");
        std::vector<RatPoly> keys;
        for (const auto& f : enumerate_polys(EnumSpec{1, 9, true})) {
            if (is_key_min_degree(mu, f)) keys.push_back(f);
        }
        REQUIRE(keys.size() > 10);
        for (const auto& a : keys) {
            CHECK(same_direction(mu, a, a));
            for (const auto& b : keys) {
                CHECK(same_direction(mu, a, b) == same_direction(mu, b, a));
                if (!same_direction(mu, a, b)) continue;
                for (const auto& c : keys) {
                    if (same_direction(mu, b, c)) CHECK(same_direction(mu, a, c));
                }
            }
        }
    }

    TEST_CASE("value-transcendental keys share one direction") {
        const MacLaneChain mu = G(2, "eps");
        std::vector<RatPoly> keys;
        for (const auto& f : enumerate_polys(EnumSpec{1, 6, true})) {
            if (is_key_min_degree(mu, f)) keys.push_back(f);
        }
        REQUIRE(keys.size() > 1);
        for (const auto& a : keys) {
            for (const auto& b : keys) CHECK(same_direction(mu, a, b));
        }
    }

    TEST_CASE("compare examples") {
        const MacLaneChain mu = fixtures::mu2();
        CHECK(compare(G(2, "0"), mu));
        CHECK_FALSE(compare(G(2, "1"), mu));
        const MacLaneChain b = augment(G(2, "0"), P("x+1"), L("2"));
        CHECK_FALSE(compare(G(2, "1"), b));
        CHECK_THROWS_AS(compare(G(2, "0"), G(3, "0")), ValidationError);
    }

    TEST_CASE("equivalent examples") {
        CHECK(equivalent(augment(G(2, "0"), P("x"), L("1")), G(2, "1")));
        CHECK_FALSE(equivalent(G(2, "0"), fixtures::mu2()));
        CHECK(equivalent(fixtures::mu2(), fixtures::mu2()));
    }

    TEST_CASE("compare is a partial order on the fixtures and their prefixes") {
        std::vector<MacLaneChain> all;
        for (const auto& [name, chain] : fixtures::fixture_chains()) {
            if (chain.prime().value() != 2) continue;
            for (std::size_t k = 0; k <= chain.depth(); ++k) all.push_back(chain.prefix(k));
        }
        for (const auto& a : all) {
            CHECK(compare(a, a));
            for (const auto& b : all) {
                const bool ab = compare(a, b);
                const bool ba = compare(b, a);
                if (ab && ba) {
                    CHECK(equivalent(a, b));
                    CHECK(delta(a) == delta(b));
                }
                if (ab && !ba) CHECK(delta(a) < delta(b));
                if (!ab) continue;
                for (const auto& c : all) {
                    if (compare(b, c)) CHECK(compare(a, c));
                }
            }
        }
    }
}
