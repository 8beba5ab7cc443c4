#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "keypoly/chain.hpp"

namespace keypoly {

/// Family of monomial valuations v_{a_i, delta_i} with named laws for the
/// centres a_i and radii delta_i.
///
/// Centre laws: "zero" (a_i = 0), "sum_p^k" (a_i = sum_{k<=i} p^k) and
/// "sum_p^k!" (a_i = sum_{k<=i} p^(k!)); "sum_2^k" and "sum_2^k!" are
/// accepted as aliases. Radius laws: "k" (i), "k_plus_1" (i + 1) and
/// "factorial_k_plus_1" ((i + 1)!).
struct MonomialCentersSpec {
    unsigned long p = 2;
    std::string centers;
    std::string deltas;
    std::size_t cap = 64;
};

/// A finite strictly increasing list of chains.
struct ExplicitSpec {
    std::vector<MacLaneChain> chains;
};

using FamilySpec = std::variant<MonomialCentersSpec, ExplicitSpec>;

enum class MonotoneProof { ByConstruction, CheckedPrefix };

/// A strictly increasing family mu_0 < mu_1 < ... of chain valuations,
/// generated lazily by index. Valid indices are 0..scan_cap().
class IncreasingFamily {
public:
    using Generator = std::function<MacLaneChain(std::size_t)>;

    /// In CheckedPrefix mode the first `checked + 1` members are compared
    /// pairwise on construction; a failure throws ValidationError.
    IncreasingFamily(Prime p, Generator generator, std::size_t scan_cap, MonotoneProof proof,
                     std::size_t checked = 0);

    Prime prime() const { return p_; }
    std::size_t scan_cap() const { return cap_; }
    MonotoneProof proof() const { return proof_; }
    std::size_t checked_prefix() const { return checked_; }

    /// mu_i. Throws ValidationError for i > scan_cap().
    MacLaneChain member(std::size_t i) const;

    /// The centre a_i when every member is a monomial valuation v_{a_i, delta_i}.
    std::optional<Rational> center(std::size_t i) const;

    /// The specification this family was built from, if any.
    const FamilySpec* spec() const { return spec_.get(); }

    friend IncreasingFamily make_family(const FamilySpec& spec);

private:
    Prime p_;
    Generator gen_;
    std::size_t cap_;
    MonotoneProof proof_;
    std::size_t checked_;
    std::function<Rational(std::size_t)> center_;
    std::shared_ptr<const FamilySpec> spec_;
};

/// Builds a family from its specification. Monomial-centre families are
/// validated against the distance law of their centres (delta_i must not
/// exceed v(a_j - a_i) for j > i and must strictly increase); explicit
/// families are checked pairwise. Throws ValidationError on failure or an
/// unknown law name.
IncreasingFamily make_family(const FamilySpec& spec);

}  // namespace keypoly
