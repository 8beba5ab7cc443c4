#include "doctest.h"
#include "keypoly/enumerate.hpp"
#include "keypoly/errors.hpp"
#include "keypoly/irreducible.hpp"
#include "keypoly/limits.hpp"
#include "keypoly/valuations.hpp"

using namespace keypoly;

namespace {

RatPoly P(const char* s) { return parse_poly(s); }
LambdaValue L(const char* s) { return parse_lambda(s); }

IncreasingFamily sum_2k(std::size_t cap = 64) { return make_family(MonomialCentersSpec{2, "sum_2^k", "k_plus_1", cap}); }
IncreasingFamily liouville() { return make_family(MonomialCentersSpec{2, "sum_2^k!", "factorial_k_plus_1", 10}); }
IncreasingFamily gauss_family() { return make_family(MonomialCentersSpec{2, "zero", "k", 64}); }

}  // namespace

TEST_SUITE("limits") {
    TEST_CASE("family construction") {
        const IncreasingFamily fam = sum_2k();
        CHECK(fam.scan_cap() == 64);
        CHECK(fam.proof() == MonotoneProof::ByConstruction);
        CHECK(*fam.center(0) == Rational(1));
        CHECK(*fam.center(3) == Rational(15));
        CHECK(delta(fam.member(3)) == L("4"));
        CHECK(fam.member(3).evaluate(P("x-15")) == L("4"));
        CHECK_THROWS_AS(fam.member(65), ValidationError);
        CHECK(delta(gauss_family().member(5)) == L("5"));

        CHECK_THROWS_AS(make_family(MonomialCentersSpec{2, "sum_2^k", "factorial_k_plus_1", 10}), ValidationError);
        CHECK_THROWS_AS(make_family(MonomialCentersSpec{2, "nope", "k", 10}), ValidationError);
        CHECK_THROWS_AS(make_family(MonomialCentersSpec{2, "zero", "nope", 10}), ValidationError);
        CHECK_THROWS_AS(make_family(MonomialCentersSpec{3, "sum_2^k", "k", 10}), ValidationError);
        CHECK_NOTHROW(make_family(MonomialCentersSpec{3, "sum_p^k", "k_plus_1", 10}));
    }

    TEST_CASE("explicit families are checked pairwise") {
        const Prime p(2);
        const IncreasingFamily ok = make_family(ExplicitSpec{{gauss(p, 0), gauss(p, 1), augment(gauss(p, 1), P("x+2"), L("3"))}});
        CHECK(ok.scan_cap() == 2);
        CHECK(ok.proof() == MonotoneProof::CheckedPrefix);
        CHECK_FALSE(ok.center(0).has_value());
        CHECK_THROWS_AS(make_family(ExplicitSpec{{gauss(p, 1), gauss(p, 0)}}), ValidationError);
        CHECK_THROWS_AS(make_family(ExplicitSpec{{gauss(p, 1), gauss(p, 1)}}), ValidationError);
        CHECK_THROWS_AS(make_family(ExplicitSpec{{gauss(p, 0), gauss(Prime(3), 1)}}), ValidationError);
        CHECK_THROWS_AS(make_family(ExplicitSpec{}), ValidationError);
    }

    TEST_CASE("stable_eval examples") {
        const IncreasingFamily fam = sum_2k();
        const StableResult r = stable_eval(fam, P("x-1"));
        CHECK(r.certified);
        CHECK(r.witness_index == 1);
        CHECK(r.value == L("1"));

        const StableResult u = stable_eval(fam, P("x+1"));
        CHECK_FALSE(u.certified);
        CHECK(u.witness_index == 64);
        CHECK(u.value == L("65"));

        const StableResult l = stable_eval(liouville(), P("x^2+x"));
        CHECK(l.certified);
        CHECK(l.witness_index <= 2);

        const StableResult c = stable_eval(fam, P("12"));
        CHECK(c.certified);
        CHECK(c.witness_index == 0);
        CHECK(c.value == L("2"));

        CHECK_THROWS_AS(stable_eval(fam, RatPoly()), ValidationError);
        CHECK_THROWS_AS(stable_eval(fam, P("x"), 65), ValidationError);
    }

    TEST_CASE("is_unstable_up_to examples") {
        CHECK(is_unstable_up_to(sum_2k(), P("x+1"), 10));
        CHECK_FALSE(is_unstable_up_to(sum_2k(), P("x-1"), 10));
        CHECK_FALSE(is_unstable_up_to(sum_2k(), P("1"), 10));
        CHECK_FALSE(is_unstable_up_to(liouville(), P("1"), 3));
        CHECK(is_unstable_up_to(gauss_family(), P("x"), 10));
    }

    TEST_CASE("find_limit_kp examples") {
        CHECK(find_limit_kp(sum_2k(), 2, 4, 12) == std::vector<RatPoly>{P("x+1")});
        CHECK(find_limit_kp(liouville(), 3, 4, 8).empty());
        CHECK(find_limit_kp(gauss_family(), 1, 2, 10) == std::vector<RatPoly>{P("x")});
        CHECK_THROWS_AS(find_limit_kp(sum_2k(), 0, 4, 12), ValidationError);
    }

    TEST_CASE("find_limit_kp output is minimal, monic and irreducible") {
        const IncreasingFamily fam = make_family(MonomialCentersSpec{3, "sum_p^k", "k_plus_1", 20});
        const auto found = find_limit_kp(fam, 2, 3, 8);
        REQUIRE_FALSE(found.empty());
        // sum 3^k converges to -1/2 in Z_3.
        CHECK(found == std::vector<RatPoly>{P("x+1/2")});
        for (const auto& f : found) {
            CHECK(f.is_monic());
            CHECK(is_irreducible_q(f));
        }
        for_each_poly(EnumSpec{2, 3, true}, [&](const RatPoly& f) {
            if (is_unstable_up_to(fam, f, 8)) CHECK(found.front().degree() <= f.degree());
            return true;
        });
    }

    TEST_CASE("limit_augment examples") {
        const LimitAugmentation aug = limit_augment(sum_2k(), P("x+1"), L("20"), 12);
        CHECK(aug.evaluate(P("x+1")) == L("20"));
        CHECK(aug.evaluate(P("x-1")) == L("1"));
        CHECK(aug.evaluate(pow(P("x+1"), 2)) == L("40"));
        CHECK(aug.anchor() == 12);
        CHECK_THROWS_AS(limit_augment(sum_2k(), P("x+1"), L("eps"), 12), ValidationError);
        CHECK_THROWS_AS(limit_augment(sum_2k(), P("x+1"), L("10"), 12), ValidationError);
        CHECK_THROWS_AS(limit_augment(sum_2k(), P("x+1"), L("100"), 65), ValidationError);

        const LimitAugmentation mono = limit_augment(gauss_family(), P("x"), L("100"), 50);
        CHECK(mono.evaluate(P("x")) == L("100"));
        CHECK(mono.evaluate(P("x^2 + 4")) == L("2"));
    }

    TEST_CASE("limit_augment reports uncertified coefficients") {
        // x + 1 is unstable along the family, so its value is never certified.
        const LimitAugmentation aug = limit_augment(sum_2k(3), P("x^2+1"), L("50"), 3);
        CHECK_THROWS_AS(aug.evaluate(P("x+1")), ComputationError);
    }

    TEST_CASE("certificates are sound and values monotone") {
        const IncreasingFamily fams[] = {sum_2k(), make_family(MonomialCentersSpec{3, "sum_p^k", "k_plus_1", 30})};
        for (const auto& fam : fams) {
            for (const auto& f : enumerate_polys(EnumSpec{2, 2, false, 1})) {
                const StableResult r = stable_eval(fam, f, 15);
                LambdaValue prev = fam.member(0).evaluate(f);
                for (std::size_t i = 1; i <= 15; ++i) {
                    const LambdaValue v = fam.member(i).evaluate(f);
                    CHECK(v >= prev);
                    if (!r.certified || i < r.witness_index) CHECK(v > prev);
                    prev = v;
                }
                if (!r.certified) continue;
                for (std::size_t j = r.witness_index + 1; j <= r.witness_index + 10; ++j) {
                    CHECK(fam.member(j).evaluate(f) == r.value);
                }
                const Rational at = f(*fam.center(r.witness_index));
                CHECK(r.value == LambdaValue(base_val(fam.prime(), at)));
            }
        }
    }
}
