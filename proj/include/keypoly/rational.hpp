#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>

namespace keypoly {

using Integer = mpz_class;

/// Exact rational number, always in lowest terms with a positive
/// denominator. Values whose numerator and denominator fit in 63 bits are
/// stored inline; anything larger is held in a GMP rational. Every operation
/// is exact: results that overflow the inline form are recomputed in GMP.
class Rational {
public:
    Rational() = default;
    Rational(int n) : num_(n) {}
    Rational(long n);
    Rational(long long n) : Rational(static_cast<long>(n)) {}
    Rational(unsigned long n);
    /// n/d, reduced. Throws ValidationError when d == 0.
    Rational(long n, long d);
    Rational(const Integer& n);
    Rational(const Integer& n, const Integer& d);
    Rational(const mpq_class& q);

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) copy_big(o);
    }
    Rational(Rational&& o) noexcept = default;
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept = default;

    bool is_small() const { return !big_; }
    /// Inline numerator/denominator; only meaningful when is_small().
    std::int64_t small_num() const { return num_; }
    std::int64_t small_den() const { return den_; }

    Integer get_num() const;
    Integer get_den() const;
    mpq_class to_mpq() const;
    bool is_integer() const;
    std::string get_str() const;

    int sign() const {
        if (big_) return big_sign();
        return (num_ > 0) - (num_ < 0);
    }

    Rational& operator+=(const Rational& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_add_overflow(num_, o.num_, &r) &&
            r != INT64_MIN) {
            num_ = r;
            return *this;
        }
        return add_general(o);
    }
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o) {
        std::int64_t r;
        if (!big_ && !o.big_ && den_ == 1 && o.den_ == 1 && !__builtin_mul_overflow(num_, o.num_, &r) &&
            r != INT64_MIN) {
            num_ = r;
            return *this;
        }
        return mul_general(o);
    }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);

private:
    void assign_big(mpq_class q);  // demotes when the value fits inline
    void copy_big(const Rational& o);
    int big_sign() const;
    Rational& add_general(const Rational& o);
    Rational& mul_general(const Rational& o);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

inline int sgn(const Rational& q) { return q.sign(); }
Rational abs(const Rational& q);
inline int cmp(const Rational& a, const Rational& b) {
    auto c = a <=> b;
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace keypoly
