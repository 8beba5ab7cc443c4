#include "keypoly/irreducible.hpp"

#include <gmp.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "keypoly/errors.hpp"

namespace keypoly {

namespace {

// Dense polynomials over Z/pZ, coefficients kept in [0, p).
class ModPolyRing {
public:
    using Poly = std::vector<Integer>;

    explicit ModPolyRing(Integer p) : p_(std::move(p)) {}

    const Integer& modulus() const { return p_; }

    void trim(Poly& a) const {
        while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
    }

    Poly reduce(const std::vector<Integer>& a) const {
        Poly out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) mpz_mod(out[i].get_mpz_t(), a[i].get_mpz_t(), p_.get_mpz_t());
        trim(out);
        return out;
    }

    Integer inverse(const Integer& a) const {
        Integer inv;
        if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t()) == 0) {
            throw ComputationError("non-invertible element modulo p");
        }
        return inv;
    }

    Poly sub(Poly a, const Poly& b) const {
        if (b.size() > a.size()) a.resize(b.size(), Integer(0));
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[i] -= b[i];
            mpz_mod(a[i].get_mpz_t(), a[i].get_mpz_t(), p_.get_mpz_t());
        }
        trim(a);
        return a;
    }

    Poly mul(const Poly& a, const Poly& b) const {
        if (a.empty() || b.empty()) return {};
        Poly out(a.size() + b.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        for (auto& c : out) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
        trim(out);
        return out;
    }

    // Returns {quotient, remainder}.
    std::pair<Poly, Poly> divmod(Poly a, const Poly& b) const {
        if (b.empty()) throw ComputationError("modular division by zero");
        if (a.size() < b.size()) return {{}, a};
        Integer inv = inverse(b.back());
        const std::size_t db = b.size() - 1;
        Poly q(a.size() - db, Integer(0));
        for (std::size_t k = a.size(); k-- > db;) {
            if (sgn(a[k]) == 0) continue;
            Integer c = a[k] * inv;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
            q[k - db] = c;
            for (std::size_t j = 0; j <= db; ++j) {
                a[k - db + j] -= c * b[j];
                mpz_mod(a[k - db + j].get_mpz_t(), a[k - db + j].get_mpz_t(), p_.get_mpz_t());
            }
        }
        a.resize(db);
        trim(a);
        trim(q);
        return {q, a};
    }

    Poly rem(const Poly& a, const Poly& b) const { return divmod(a, b).second; }

    Poly monic(Poly a) const {
        if (a.empty()) return a;
        Integer inv = inverse(a.back());
        for (auto& c : a) {
            c *= inv;
            mpz_mod(c.get_mpz_t(), c.get_mpz_t(), p_.get_mpz_t());
        }
        return a;
    }

    Poly gcd(Poly a, Poly b) const {
        while (!b.empty()) {
            Poly r = rem(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return monic(std::move(a));
    }

    Poly powmod(Poly base, const Integer& e, const Poly& m) const {
        Poly result{Integer(1)};
        base = rem(base, m);
        const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
        for (std::size_t i = bits; i-- > 0;) {
            result = rem(mul(result, result), m);
            if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base), m);
        }
        return result;
    }

    Poly derivative(const Poly& a) const {
        if (a.size() <= 1) return {};
        Poly out(a.size() - 1);
        for (std::size_t i = 1; i < a.size(); ++i) {
            out[i - 1] = a[i] * static_cast<unsigned long>(i);
            mpz_mod(out[i - 1].get_mpz_t(), out[i - 1].get_mpz_t(), p_.get_mpz_t());
        }
        trim(out);
        return out;
    }

    static int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

private:
    Integer p_;
};

using ModPoly = ModPolyRing::Poly;

// Cantor-Zassenhaus equal-degree splitting; p is odd.
void split_equal_degree(const ModPolyRing& R, const ModPoly& g, int d, gmp_randclass& rng, std::vector<ModPoly>& out) {
    const int n = ModPolyRing::degree(g);
    if (n == d) {
        out.push_back(g);
        return;
    }
    Integer exponent;
    mpz_pow_ui(exponent.get_mpz_t(), R.modulus().get_mpz_t(), static_cast<unsigned long>(d));
    exponent = (exponent - 1) / 2;
    for (;;) {
        ModPoly a(static_cast<std::size_t>(n));
        for (auto& c : a) c = rng.get_z_range(R.modulus());
        R.trim(a);
        if (ModPolyRing::degree(a) < 1) continue;
        ModPoly b = R.powmod(a, exponent, g);
        b = R.sub(b, ModPoly{Integer(1)});
        ModPoly h = R.gcd(g, b);
        const int dh = ModPolyRing::degree(h);
        if (dh > 0 && dh < n) {
            split_equal_degree(R, h, d, rng, out);
            split_equal_degree(R, R.monic(R.divmod(g, h).first), d, rng, out);
            return;
        }
    }
}

// Monic irreducible factors of a squarefree monic f.
std::vector<ModPoly> factor_mod_p(const ModPolyRing& R, ModPoly f) {
    std::vector<ModPoly> factors;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(20240611UL);
    const ModPoly x{Integer(0), Integer(1)};
    ModPoly h = x;
    for (int d = 1; 2 * d <= ModPolyRing::degree(f); ++d) {
        h = R.powmod(h, R.modulus(), f);
        ModPoly g = R.gcd(f, R.sub(h, x));
        if (ModPolyRing::degree(g) > 0) {
            split_equal_degree(R, g, d, rng, factors);
            f = R.monic(R.divmod(f, g).first);
            h = R.rem(h, f);
        }
    }
    if (ModPolyRing::degree(f) > 0) factors.push_back(f);
    return factors;
}

// Primitive integer polynomial with positive leading coefficient.
std::vector<Integer> primitive_integer_part(const RatPoly& f) {
    Integer den = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Integer> out;
    Integer content = 0;
    for (const auto& c : f.coeffs()) {
        Rational scaled = c * Rational(den);
        out.push_back(scaled.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
    }
    if (sgn(out.back()) < 0) content = -content;
    for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
    return out;
}

RatPoly to_ratpoly(const std::vector<Integer>& a) {
    std::vector<Rational> c;
    c.reserve(a.size());
    for (const auto& v : a) c.emplace_back(v);
    return RatPoly(std::move(c));
}

}  // namespace

bool is_irreducible_q(const RatPoly& f) {
    const int n = f.degree();
    if (n < 1) throw ValidationError("irreducibility is only defined for nonconstant polynomials");
    if (n > kMaxIrreducibilityDegree) throw ValidationError("degree beyond supported bound");
    if (n == 1) return true;

    // Irreducible polynomials in characteristic zero are squarefree.
    if (poly_gcd(f, derivative(f)).degree() > 0) return false;

    const std::vector<Integer> F = primitive_integer_part(f);
    const RatPoly Fq = to_ratpoly(F);
    const Integer& lc = F.back();

    // Every factor of degree k has coefficients bounded by 2^k ||F||_2; after
    // scaling its leading coefficient to lc(F) the bound grows by |lc(F)|.
    Integer norm2 = 0;
    for (const auto& c : F) norm2 += c * c;
    Integer norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Integer bound = norm * abs(lc);
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));

    Integer p = 2 * bound + 1;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (mpz_divisible_p(lc.get_mpz_t(), p.get_mpz_t())) continue;
        ModPolyRing R(p);
        ModPoly fp = R.reduce(F);
        if (ModPolyRing::degree(R.gcd(fp, R.derivative(fp))) > 0) continue;

        const std::vector<ModPoly> factors = factor_mod_p(R, R.monic(fp));
        const std::size_t r = factors.size();
        if (r == 1) return true;

        // A reducible F has a factor of degree <= n/2; its scaled image mod p
        // is lc(F) times a product of modular factors.
        Integer half_p = p / 2;
        for (unsigned long mask = 1; mask < (1UL << r) - 1; ++mask) {
            int deg = 0;
            for (std::size_t i = 0; i < r; ++i) {
                if (mask >> i & 1UL) deg += ModPolyRing::degree(factors[i]);
            }
            if (2 * deg > n) continue;
            ModPoly g{lc % p < 0 ? Integer(lc % p + p) : Integer(lc % p)};
            for (std::size_t i = 0; i < r; ++i) {
                if (mask >> i & 1UL) g = R.mul(g, factors[i]);
            }
            std::vector<Integer> lifted(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) lifted[i] = g[i] > half_p ? Integer(g[i] - p) : g[i];
            RatPoly candidate = to_ratpoly(lifted);
            if (candidate.degree() < 1) continue;
            if (poly_divmod(Fq, candidate).remainder.is_zero()) return false;
        }
        return true;
    }
}

}  // namespace keypoly
