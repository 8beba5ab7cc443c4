#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "keypoly/rational.hpp"

namespace keypoly {


/// Parses "a", "-a", "a/b" (whitespace tolerated). Result is canonical.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

std::strong_ordering compare_rationals(const Rational& a, const Rational& b);

/// An element of Gamma = Q, or infinity.
class RationalValue {
public:
    RationalValue() = default;  // zero
    RationalValue(Rational q) : value_(std::move(q)) {}
    RationalValue(long q) : value_(Rational(q)) {}

    static RationalValue infinity() {
        RationalValue r;
        r.value_.reset();
        return r;
    }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& finite() const;

    friend RationalValue operator+(const RationalValue& a, const RationalValue& b);
    friend std::strong_ordering operator<=>(const RationalValue& a, const RationalValue& b);
    friend bool operator==(const RationalValue& a, const RationalValue& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    std::optional<Rational> value_ = Rational(0);
};

std::string to_string(const RationalValue& v);

/// An element of Lambda = Q (+) Q*eps ordered lexicographically, with eps a
/// positive infinitesimal, or infinity. Gamma embeds as eps = 0.
class LambdaValue {
public:
    LambdaValue() = default;
    LambdaValue(Rational standard, Rational eps = 0);
    LambdaValue(long standard) : LambdaValue(Rational(standard)) {}
    LambdaValue(const RationalValue& v);

    static LambdaValue infinity();

    bool is_infinite() const { return infinite_; }
    bool is_in_gamma() const { return !infinite_ && sgn(eps_) == 0; }
    const Rational& standard() const;
    const Rational& eps() const;

    /// Exact division by a positive integer. Throws ValidationError on
    /// infinity or s == 0.
    LambdaValue divided_by(std::int64_t s) const;

    friend LambdaValue operator+(const LambdaValue& a, const LambdaValue& b);
    /// a - b for finite b; infinity - finite stays infinite.
    friend LambdaValue operator-(const LambdaValue& a, const LambdaValue& b);
    friend LambdaValue operator*(std::int64_t n, const LambdaValue& a);
    friend std::strong_ordering operator<=>(const LambdaValue& a, const LambdaValue& b);
    friend bool operator==(const LambdaValue& a, const LambdaValue& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    Rational std_ = 0;
    Rational eps_ = 0;
    bool infinite_ = false;
};

// Named forms of the group operations.
inline LambdaValue lambda_add(const LambdaValue& a, const LambdaValue& b) { return a + b; }
inline std::strong_ordering lambda_cmp(const LambdaValue& a, const LambdaValue& b) { return a <=> b; }
inline LambdaValue lambda_div_int(const LambdaValue& a, std::int64_t s) { return a.divided_by(s); }

/// "3/2", "1/2 + 1*eps", "-1 - 1/3*eps", "inf".
std::string to_string(const LambdaValue& v);
/// Accepts the forms produced by to_string plus "eps", "2*eps", "a/b+c/d*eps"
/// with arbitrary whitespace.
LambdaValue parse_lambda(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LambdaValue& v);
std::ostream& operator<<(std::ostream& os, const RationalValue& v);

}  // namespace keypoly
