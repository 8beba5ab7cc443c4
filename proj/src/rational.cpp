#include "keypoly/rational.hpp"

#include <limits>

#include "keypoly/errors.hpp"

namespace keypoly {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v >= -static_cast<i128>(kMax) && v <= static_cast<i128>(kMax); }

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
    if (a == 0) return b;
    if (b == 0) return a;
    const int shift = __builtin_ctzll(a | b);
    a >>= __builtin_ctzll(a);
    do {
        b >>= __builtin_ctzll(b);
        if (a > b) std::swap(a, b);
        b -= a;
    } while (b != 0);
    return a << shift;
}

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Integer to_integer(i128 v) {
    const bool negative = v < 0;
    u128 m = uabs(v);
    Integer z(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
    z <<= 64;
    z += Integer(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
    return negative ? Integer(-z) : z;
}

mpq_class to_mpq_parts(i128 n, i128 d) {
    mpq_class q(to_integer(n), to_integer(d));
    q.canonicalize();
    return q;
}

bool mpz_fits_int64(const Integer& z) { return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63; }

}  // namespace

Rational::Rational(long n) : num_(n) {
    if (n == std::numeric_limits<long>::min()) assign_big(mpq_class(n));
}

Rational::Rational(unsigned long n) {
    if (n > static_cast<unsigned long>(kMax)) {
        assign_big(mpq_class(n));
    } else {
        num_ = static_cast<std::int64_t>(n);
    }
}

Rational::Rational(long n, long d) {
    if (d == 0) throw ValidationError("zero denominator");
    if (n == std::numeric_limits<long>::min() || d == std::numeric_limits<long>::min()) {
        mpq_class q(n, d);
        q.canonicalize();
        assign_big(std::move(q));
        return;
    }
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const std::uint64_t g = gcd64(static_cast<std::uint64_t>(n < 0 ? -n : n), static_cast<std::uint64_t>(d));
    num_ = n / static_cast<long>(g);
    den_ = d / static_cast<long>(g);
}

Rational::Rational(const Integer& n) {
    if (mpz_fits_int64(n)) {
        num_ = n.get_si();
    } else {
        big_ = std::make_unique<mpq_class>(n);
    }
}

Rational::Rational(const Integer& n, const Integer& d) {
    if (sgn(d) == 0) throw ValidationError("zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    assign_big(std::move(q));
}

Rational::Rational(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    assign_big(std::move(c));
}

void Rational::copy_big(const Rational& o) { big_ = std::make_unique<mpq_class>(*o.big_); }

Rational& Rational::operator=(const Rational& o) {
    if (this == &o) return *this;
    num_ = o.num_;
    den_ = o.den_;
    if (o.big_) {
        if (big_) {
            *big_ = *o.big_;
        } else {
            big_ = std::make_unique<mpq_class>(*o.big_);
        }
    } else {
        big_.reset();
    }
    return *this;
}

void Rational::assign_big(mpq_class q) {
    if (mpz_fits_int64(q.get_num()) && mpz_fits_int64(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_unique<mpq_class>(std::move(q));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(Integer(static_cast<long>(num_)), Integer(static_cast<long>(den_)));
}

Integer Rational::get_num() const { return big_ ? Integer(big_->get_num()) : Integer(static_cast<long>(num_)); }

Integer Rational::get_den() const { return big_ ? Integer(big_->get_den()) : Integer(static_cast<long>(den_)); }

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

std::string Rational::get_str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::big_sign() const { return sgn(*big_); }

Rational& Rational::add_general(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            const i128 s = static_cast<i128>(num_) + o.num_;
            if (fits(s)) {
                num_ = static_cast<std::int64_t>(s);
                return *this;
            }
            assign_big(to_mpq_parts(s, 1));
            return *this;
        }
        const std::uint64_t g = gcd64(static_cast<std::uint64_t>(den_), static_cast<std::uint64_t>(o.den_));
        i128 n, d;
        if (g == 1) {
            n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
            d = static_cast<i128>(den_) * o.den_;
        } else {
            const std::int64_t d1g = den_ / static_cast<std::int64_t>(g);
            const std::int64_t d2g = o.den_ / static_cast<std::int64_t>(g);
            const i128 t = static_cast<i128>(num_) * d2g + static_cast<i128>(o.num_) * d1g;
            if (t == 0) {
                num_ = 0;
                den_ = 1;
                return *this;
            }
            const u128 g2 = gcd128(uabs(t), g);
            n = t / static_cast<i128>(g2);
            d = static_cast<i128>(d1g) * (o.den_ / static_cast<std::int64_t>(g2));
        }
        if (n == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign_big(to_mpq_parts(n, d));
        return *this;
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    return *this += -o;
}

Rational& Rational::mul_general(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        const std::uint64_t g1 = gcd64(static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_), static_cast<std::uint64_t>(o.den_));
        const std::uint64_t g2 = gcd64(static_cast<std::uint64_t>(o.num_ < 0 ? -o.num_ : o.num_), static_cast<std::uint64_t>(den_));
        const i128 n = static_cast<i128>(num_ / static_cast<std::int64_t>(g1)) * (o.num_ / static_cast<std::int64_t>(g2));
        const i128 d = static_cast<i128>(den_ / static_cast<std::int64_t>(g2)) * (o.den_ / static_cast<std::int64_t>(g1));
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
        assign_big(to_mpq_parts(n, d));
        return *this;
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.sign() == 0) throw ValidationError("division by zero");
    if (!o.big_) {
        const std::int64_t n = o.num_ < 0 ? -o.den_ : o.den_;
        const std::int64_t d = o.num_ < 0 ? -o.num_ : o.num_;
        Rational inv;
        inv.num_ = n;
        inv.den_ = d;
        return *this *= inv;
    }
    assign_big(to_mpq() / o.to_mpq());
    return *this;
}

Rational operator-(const Rational& a) {
    Rational r(a);
    if (r.big_) {
        mpq_neg(r.big_->get_mpq_t(), r.big_->get_mpq_t());
    } else {
        r.num_ = -r.num_;
    }
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return a.num_ <=> b.num_;
        const i128 l = static_cast<i128>(a.num_) * b.den_;
        const i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool operator==(const Rational& a, const Rational& b) {
    // Canonical forms: inline and big representations never overlap.
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

Rational abs(const Rational& q) { return q.sign() < 0 ? -q : q; }

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.get_str(); }

}  // namespace keypoly
