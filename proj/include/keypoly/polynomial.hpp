#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "keypoly/value_group.hpp"

namespace keypoly {

/// A rational prime p, fixing the base valuation v = v_p on Q.
class Prime {
public:
    /// Throws ValidationError unless p is prime.
    explicit Prime(unsigned long p);
    unsigned long value() const { return p_; }
    friend bool operator==(Prime a, Prime b) = default;

private:
    unsigned long p_;
};

bool is_prime_number(unsigned long n);

/// v_p(q), normalised so that v_p(p) = 1; v_p(0) = infinity.
RationalValue base_val(Prime p, const Rational& q);
RationalValue base_val(unsigned long p, const Rational& q);
/// Exponent of p in a nonzero integer.
long valuation_of_integer(Prime p, const Integer& n);
/// Same as base_val for a nonzero rational, as a plain integer.
long valuation_of_nonzero(Prime p, const Rational& q);

/// Dense univariate polynomial over Q; coeffs()[i] multiplies x^i. The
/// leading coefficient is always nonzero and the zero polynomial has no
/// coefficients.
class RatPoly {
public:
    /// Degree reported for the zero polynomial.
    static constexpr int kZeroDegree = -1;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs);
    RatPoly(std::initializer_list<Rational> coeffs);

    static RatPoly constant(Rational c);
    static RatPoly x();
    /// x^k
    static RatPoly monomial(std::size_t k, Rational c = 1);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    const Rational& leading() const;
    /// Coefficient of x^i, zero beyond the degree.
    Rational coeff(std::size_t i) const;

    Rational operator()(const Rational& at) const;

    RatPoly& operator+=(const RatPoly& o);
    RatPoly& operator-=(const RatPoly& o);
    RatPoly& operator*=(const Rational& c);

    friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
    friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
    friend RatPoly operator-(RatPoly a);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(RatPoly a, const Rational& c) { return a *= c; }
    friend RatPoly operator*(const Rational& c, RatPoly a) { return a *= c; }
    friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

RatPoly pow(const RatPoly& f, std::size_t k);

struct DivMod {
    RatPoly quotient;
    RatPoly remainder;
};

/// f = q*g + r with deg r < deg g. Throws ValidationError when g = 0.
DivMod poly_divmod(const RatPoly& f, const RatPoly& g);

/// (f_0, ..., f_r) with f = sum f_i * phi^i and deg f_i < deg phi. The zero
/// polynomial expands to the empty list. Throws unless phi is monic and
/// nonconstant.
std::vector<RatPoly> phi_expansion(const RatPoly& f, const RatPoly& phi);

/// s-th Hasse-Schmidt derivative: sum_{i>=s} C(i,s) a_i x^(i-s).
RatPoly hasse_derivative(const RatPoly& f, std::size_t s);

/// f(x + c).
RatPoly shift(const RatPoly& f, const Rational& c);

RatPoly monic_part(const RatPoly& f);
RatPoly poly_gcd(RatPoly a, RatPoly b);
/// Formal derivative.
RatPoly derivative(const RatPoly& f);

/// Parses "x^3 - 2*x + 1/2", "-x", "3", "x^2+2" (whitespace-insensitive).
/// Throws ValidationError on malformed input.
RatPoly parse_poly(std::string_view text);
/// Descending powers, reduced fractions: "x^3 - 2*x + 1/2".
std::string to_string(const RatPoly& f);
std::ostream& operator<<(std::ostream& os, const RatPoly& f);

}  // namespace keypoly
