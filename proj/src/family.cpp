#include "keypoly/family.hpp"

#include "keypoly/errors.hpp"
#include "keypoly/valuations.hpp"

namespace keypoly {

IncreasingFamily::IncreasingFamily(Prime p, Generator generator, std::size_t scan_cap, MonotoneProof proof,
                                   std::size_t checked)
    : p_(p), gen_(std::move(generator)), cap_(scan_cap), proof_(proof), checked_(checked) {
    if (!gen_) throw ValidationError("family generator is empty");
    if (proof_ != MonotoneProof::CheckedPrefix) return;
    if (checked_ > cap_) throw ValidationError("checked prefix exceeds the scan cap");
    std::vector<MacLaneChain> members;
    for (std::size_t i = 0; i <= checked_; ++i) {
        members.push_back(gen_(i));
        if (!(members.back().prime() == p_)) throw ValidationError("family member over a different prime");
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!compare(members[i], members[j]) || compare(members[j], members[i])) {
                throw ValidationError("family is not strictly increasing at indices " + std::to_string(i) + " < " +
                                      std::to_string(j));
            }
        }
    }
}

MacLaneChain IncreasingFamily::member(std::size_t i) const {
    if (i > cap_) throw ValidationError("family index " + std::to_string(i) + " beyond scan cap");
    return gen_(i);
}

std::optional<Rational> IncreasingFamily::center(std::size_t i) const {
    if (!center_) return std::nullopt;
    return center_(i);
}

namespace {

Integer factorial(std::size_t n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

Integer power(unsigned long p, const Integer& e) {
    if (!e.fits_ulong_p()) throw ValidationError("centre exponent too large");
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), p, e.get_ui());
    return out;
}

struct CenterLaw {
    std::function<Rational(std::size_t)> center;
    // v(a_j - a_i) for every j > i; nullopt means infinite.
    std::function<std::optional<Integer>(std::size_t)> distance;
};

CenterLaw center_law(const std::string& name, unsigned long p) {
    if (name == "zero") {
        return {[](std::size_t) { return Rational(0); }, [](std::size_t) { return std::optional<Integer>(); }};
    }
    if (name == "sum_p^k" || (name == "sum_2^k" && p == 2)) {
        return {[p](std::size_t i) {
                    Integer s = 0;
                    for (std::size_t k = 0; k <= i; ++k) s += power(p, Integer(static_cast<unsigned long>(k)));
                    return Rational(s);
                },
                [](std::size_t i) { return std::optional<Integer>(Integer(static_cast<unsigned long>(i + 1))); }};
    }
    if (name == "sum_p^k!" || (name == "sum_2^k!" && p == 2)) {
        return {[p](std::size_t i) {
                    Integer s = 0;
                    for (std::size_t k = 0; k <= i; ++k) s += power(p, factorial(k));
                    return Rational(s);
                },
                [](std::size_t i) { return std::optional<Integer>(factorial(i + 1)); }};
    }
    throw ValidationError("unknown centre law '" + name + "' for p = " + std::to_string(p));
}

std::function<Integer(std::size_t)> delta_law(const std::string& name) {
    if (name == "k") return [](std::size_t i) { return Integer(static_cast<unsigned long>(i)); };
    if (name == "k_plus_1") return [](std::size_t i) { return Integer(static_cast<unsigned long>(i + 1)); };
    if (name == "factorial_k_plus_1") return [](std::size_t i) { return factorial(i + 1); };
    throw ValidationError("unknown radius law '" + name + "'");
}

IncreasingFamily monomial_family(const MonomialCentersSpec& spec) {
    const Prime p(spec.p);
    if (spec.cap < 1) throw ValidationError("scan cap must be positive");
    CenterLaw centers = center_law(spec.centers, spec.p);
    auto deltas = delta_law(spec.deltas);
    // mu_i <= mu_j iff delta_i <= delta_j and v(a_j - a_i) >= delta_i.
    for (std::size_t i = 0; i < spec.cap; ++i) {
        const Integer di = deltas(i);
        if (!(di < deltas(i + 1))) throw ValidationError("radii must strictly increase");
        const auto dist = centers.distance(i);
        if (dist && di > *dist) {
            throw ValidationError("radius " + di.get_str() + " exceeds the centre distance " + dist->get_str() +
                                  " at index " + std::to_string(i));
        }
    }
    auto center_fn = centers.center;
    IncreasingFamily family(
        p,
        [p, center_fn, deltas](std::size_t i) {
            return monomial_chain(p, center_fn(i), LambdaValue(Rational(deltas(i))));
        },
        spec.cap, MonotoneProof::ByConstruction);
    return family;
}

}  // namespace

IncreasingFamily make_family(const FamilySpec& spec) {
    if (const auto* m = std::get_if<MonomialCentersSpec>(&spec)) {
        IncreasingFamily family = monomial_family(*m);
        family.center_ = center_law(m->centers, m->p).center;
        family.spec_ = std::make_shared<const FamilySpec>(spec);
        return family;
    }
    const auto& chains = std::get<ExplicitSpec>(spec).chains;
    if (chains.empty()) throw ValidationError("explicit family needs at least one chain");
    auto shared = std::make_shared<const std::vector<MacLaneChain>>(chains);
    const std::size_t cap = chains.size() - 1;
    IncreasingFamily family(
        chains.front().prime(), [shared](std::size_t i) { return (*shared)[i]; }, cap, MonotoneProof::CheckedPrefix,
        cap);
    family.spec_ = std::make_shared<const FamilySpec>(spec);
    return family;
}

}  // namespace keypoly
