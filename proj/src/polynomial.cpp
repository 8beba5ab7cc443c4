#include "keypoly/polynomial.hpp"

#include <gmp.h>

#include <cctype>
#include <sstream>

#include "keypoly/errors.hpp"

namespace keypoly {

// ---------------------------------------------------------------------------
// Primes and v_p

bool is_prime_number(unsigned long n) {
    if (n < 2) return false;
    Integer z(n);
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

Prime::Prime(unsigned long p) : p_(p) {
    if (!is_prime_number(p)) throw ValidationError("p = " + std::to_string(p) + " is not prime");
}

long valuation_of_integer(Prime p, const Integer& n) {
    if (sgn(n) == 0) throw ValidationError("valuation of zero is infinite");
    if (p.value() == 2) return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
    if (mpz_divisible_ui_p(n.get_mpz_t(), p.value()) == 0) return 0;
    thread_local Integer rest;
    thread_local Integer pz;
    pz = p.value();
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

namespace {

long valuation_of_small(unsigned long p, std::uint64_t n) {
    if (p == 2) return __builtin_ctzll(n);
    long k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

}  // namespace

long valuation_of_nonzero(Prime p, const Rational& q) {
    if (sgn(q) == 0) throw ValidationError("valuation of zero is infinite");
    if (q.is_small()) {
        const std::int64_t n = q.small_num();
        return valuation_of_small(p.value(), static_cast<std::uint64_t>(n < 0 ? -n : n)) -
               valuation_of_small(p.value(), static_cast<std::uint64_t>(q.small_den()));
    }
    return valuation_of_integer(p, q.get_num()) - valuation_of_integer(p, q.get_den());
}

RationalValue base_val(Prime p, const Rational& q) {
    if (sgn(q) == 0) return RationalValue::infinity();
    return RationalValue(valuation_of_nonzero(p, q));
}

RationalValue base_val(unsigned long p, const Rational& q) { return base_val(Prime(p), q); }

// ---------------------------------------------------------------------------
// RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : RatPoly(std::vector<Rational>(coeffs)) {}

RatPoly RatPoly::constant(Rational c) { return RatPoly(std::vector<Rational>{std::move(c)}); }

RatPoly RatPoly::x() { return RatPoly({Rational(0), Rational(1)}); }

RatPoly RatPoly::monomial(std::size_t k, Rational c) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = std::move(c);
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& RatPoly::leading() const {
    if (coeffs_.empty()) throw ValidationError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

Rational RatPoly::operator()(const Rational& at) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& a : coeffs_) a *= c;
    return *this;
}

RatPoly operator-(RatPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return RatPoly(std::move(out));
}

RatPoly pow(const RatPoly& f, std::size_t k) {
    RatPoly result = RatPoly::constant(1);
    for (std::size_t i = 0; i < k; ++i) result = result * f;
    return result;
}

DivMod poly_divmod(const RatPoly& f, const RatPoly& g) {
    if (g.is_zero()) throw ValidationError("division by the zero polynomial");
    if (f.degree() < g.degree()) return {RatPoly(), f};
    std::vector<Rational> rem = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const bool monic = gc.back() == 1;
    std::vector<Rational> quot(rem.size() - dg, Rational(0));
    Rational t;
    for (std::size_t k = rem.size(); k-- > dg;) {
        if (sgn(rem[k]) == 0) continue;
        Rational lead = monic ? rem[k] : Rational(rem[k] / gc.back());
        const std::size_t shift_by = k - dg;
        quot[shift_by] = lead;
        for (std::size_t j = 0; j <= dg; ++j) {
            t = lead * gc[j];
            rem[shift_by + j] -= t;
        }
    }
    rem.resize(dg);
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

std::vector<RatPoly> phi_expansion(const RatPoly& f, const RatPoly& phi) {
    if (phi.degree() < 1) throw ValidationError("expansion base must be nonconstant");
    if (!phi.is_monic()) throw ValidationError("expansion base must be monic");
    std::vector<RatPoly> out;
    RatPoly rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = poly_divmod(rest, phi);
        out.push_back(std::move(r));
        rest = std::move(q);
    }
    return out;
}

RatPoly hasse_derivative(const RatPoly& f, std::size_t s) {
    const auto& a = f.coeffs();
    if (a.size() <= s) return {};
    std::vector<Rational> out(a.size() - s);
    if (a.size() <= 60) {
        // C(i, s) < 2^62 for i < 60.
        long binom = 1;
        for (std::size_t i = s; i < a.size(); ++i) {
            if (i > s) binom = static_cast<long>(static_cast<__int128>(binom) * static_cast<long>(i) / static_cast<long>(i - s));
            if (sgn(a[i]) != 0) out[i - s] = a[i] * Rational(binom);
        }
        return RatPoly(std::move(out));
    }
    Integer binom = 1;  // C(i, s), starting at i = s
    for (std::size_t i = s; i < a.size(); ++i) {
        if (i > s) {
            binom *= static_cast<unsigned long>(i);
            mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(), static_cast<unsigned long>(i - s));
        }
        out[i - s] = a[i] * Rational(binom);
    }
    return RatPoly(std::move(out));
}

RatPoly shift(const RatPoly& f, const Rational& c) {
    // Horner in the shifted variable: f(x + c) = (...(a_n (x+c) + a_{n-1})(x+c) ...)
    std::vector<Rational> acc;
    const auto& a = f.coeffs();
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc.push_back(Rational(0));
        for (std::size_t j = acc.size() - 1; j > 0; --j) acc[j] = acc[j - 1] + acc[j] * c;
        acc[0] = acc[0] * c + *it;
    }
    return RatPoly(std::move(acc));
}

RatPoly monic_part(const RatPoly& f) {
    if (f.is_zero()) return f;
    return f * Rational(1 / f.leading());
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = poly_divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return monic_part(a);
}

RatPoly derivative(const RatPoly& f) { return hasse_derivative(f, 1); }

// ---------------------------------------------------------------------------
// Text form

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : src_(text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(text[i]);
            // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
            if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                static_cast<unsigned char>(text[i + 2]) == 0x92) {
                s_.push_back('-');
                i += 2;
            } else if (!std::isspace(c)) {
                s_.push_back(static_cast<char>(c));
            }
        }
    }

    RatPoly parse() {
        if (s_.empty()) fail("empty polynomial");
        RatPoly result;
        bool first = true;
        while (pos_ < s_.size()) {
            bool negative = false;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                negative = s_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            RatPoly term = parse_term();
            if (negative) term = -term;
            result += term;
            first = false;
        }
        return result;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ValidationError("malformed polynomial '" + std::string(src_) + "': " + why);
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return s_.substr(start, pos_ - start);
    }

    RatPoly parse_term() {
        Rational coeff = 1;
        bool has_coeff = false;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            std::string num = digits();
            std::string den = "1";
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                den = digits();
                if (den.empty()) fail("missing denominator");
            }
            coeff = parse_rational(num + "/" + den);
            has_coeff = true;
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                if (pos_ >= s_.size() || s_[pos_] != 'x') fail("expected 'x' after '*'");
            }
        }
        if (pos_ < s_.size() && s_[pos_] == 'x') {
            ++pos_;
            std::size_t k = 1;
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                std::string e = digits();
                if (e.empty()) fail("missing exponent");
                if (e.size() > 4) fail("exponent too large");
                k = std::stoul(e);
            }
            return RatPoly::monomial(k, coeff);
        }
        if (!has_coeff) fail("expected a coefficient or 'x'");
        return RatPoly::constant(coeff);
    }

    std::string_view src_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace

RatPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

std::string to_string(const RatPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& a = f.coeffs();
    for (std::size_t k = a.size(); k-- > 0;) {
        const Rational& c = a[k];
        if (sgn(c) == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << '-';
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << '*';
        os << 'x';
        if (k > 1) os << '^' << k;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatPoly& f) { return os << to_string(f); }

}  // namespace keypoly
