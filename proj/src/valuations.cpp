#include "keypoly/valuations.hpp"

#include <algorithm>

#include "keypoly/enumerate.hpp"
#include "keypoly/errors.hpp"
#include "keypoly/irreducible.hpp"

namespace keypoly {

const char* to_string(ValuationClass c) {
    return c == ValuationClass::ResidueTranscendental ? "residue-transcendental" : "value-transcendental";
}

const char* to_string(KeyVerdict v) {
    switch (v) {
        case KeyVerdict::Yes: return "yes";
        case KeyVerdict::No: return "no";
        case KeyVerdict::UnknownAtBound: return "unknown";
    }
    return "unknown";
}

MacLaneChain monomial_chain(Prime p, const Rational& center, const LambdaValue& delta) {
    const RationalValue vc = base_val(p, center);
    if (vc.is_infinite() || LambdaValue(vc) >= delta) return gauss(p, delta);
    // [v_{0,v(c)}; x - c, delta] is v_{c,delta}.
    MacLaneChain base = gauss(p, LambdaValue(vc));
    return augment(base, RatPoly({Rational(-center), Rational(1)}), delta);
}

LambdaValue epsilon(const MacLaneChain& mu, const RatPoly& f) {
    if (f.degree() < 1) throw ValidationError("epsilon is only defined for nonconstant polynomials");
    const LambdaValue value = mu.evaluate(f);
    LambdaValue best;
    bool first = true;
    for (int s = 1; s <= f.degree(); ++s) {
        RatPoly ds = hasse_derivative(f, static_cast<std::size_t>(s));
        if (ds.is_zero()) continue;
        LambdaValue candidate = (value - mu.evaluate(ds)).divided_by(s);
        if (first || candidate > best) {
            best = std::move(candidate);
            first = false;
        }
    }
    return best;
}

LambdaValue delta(const MacLaneChain& mu) { return epsilon(mu, mu.last_key()); }

ValuationClass classify(const MacLaneChain& mu) {
    return delta(mu).is_in_gamma() ? ValuationClass::ResidueTranscendental : ValuationClass::ValueTranscendental;
}

bool is_unit_initial(const MacLaneChain& mu, const RatPoly& f) {
    if (f.is_zero()) throw ValidationError("the zero polynomial has no initial form");
    if (f.is_constant()) return true;
    return epsilon(mu, f) < delta(mu);
}

namespace {

// Value jump under the formula augmentation; phi is assumed to be key.
bool divides_by_formula(const MacLaneChain& mu, const RatPoly& phi, const RatPoly& f) {
    const LambdaValue base = mu.evaluate(f);
    const MacLaneChain eta = mu.with_step({phi, mu.evaluate(phi) + LambdaValue(1), true});
    return eta.evaluate(f) > base;
}

bool is_accepted_key(const MacLaneChain& mu, const RatPoly& phi) {
    if (!phi.is_monic() || phi.degree() < 1) return false;
    if (phi.degree() == mu.degree()) return is_key_min_degree(mu, phi);
    return phi.degree() > mu.degree() && is_key(mu, phi) == KeyVerdict::Yes;
}

// Representatives of every degree-1 direction when mu = v_{c,delta} has
// degree 1: x - c alone unless delta is an integer, in which case the open
// balls of radius delta meeting Q are c + p^delta * r, 0 <= r < p.
std::vector<RatPoly> degree_one_directions(const MacLaneChain& mu, const LambdaValue& radius) {
    const RatPoly& last = mu.last_key();
    const Rational center = -last.coeff(0);
    std::vector<RatPoly> out{last};
    if (!radius.is_in_gamma() || radius.standard().get_den() != 1) return out;
    const long r_exp = radius.standard().get_num().get_si();
    if (r_exp > 4096 || r_exp < -4096) return out;
    Rational step = 1;
    const Rational pq(static_cast<long>(mu.prime().value()));
    for (long k = 0; k < (r_exp < 0 ? -r_exp : r_exp); ++k) step *= pq;
    if (r_exp < 0) step = 1 / step;
    for (unsigned long r = 1; r < mu.prime().value() && r < 64; ++r) {
        Rational c = center + step * Rational(static_cast<long>(r));
        out.push_back(RatPoly({Rational(-c), Rational(1)}));
    }
    return out;
}

KeyVerdict is_key_impl(const MacLaneChain& mu, const RatPoly& f, const KeyBounds& bounds, const LambdaValue& radius) {
    if (!is_irreducible_q(f)) return KeyVerdict::No;
    if (epsilon(mu, f) < radius) return KeyVerdict::No;
    const int d = mu.degree();
    if (f.degree() < d) return KeyVerdict::No;
    if (f.degree() == d) return is_key_min_degree(mu, f) ? KeyVerdict::Yes : KeyVerdict::No;
    if (divides_by_formula(mu, mu.last_key(), f)) return KeyVerdict::No;

    bool unknown = false;
    // Returns true when the verdict for f is settled as No.
    auto try_candidate = [&](const RatPoly& chi) {
        if (!chi.is_monic() || chi.degree() < d || chi.degree() >= f.degree()) return false;
        if (epsilon(mu, chi) < radius) return false;
        if (!divides_by_formula(mu, chi, f)) return false;
        KeyVerdict status = chi.degree() == d ? (is_key_min_degree(mu, chi) ? KeyVerdict::Yes : KeyVerdict::No)
                                              : is_key_impl(mu, chi, bounds, radius);
        if (status == KeyVerdict::Yes) return true;
        // The formula test proves nothing for a non-key chi.
        unknown = true;
        return false;
    };

    for (const auto& chi : bounds.known_keys) {
        if (try_candidate(chi)) return KeyVerdict::No;
    }
    if (d == 1) {
        for (const auto& chi : degree_one_directions(mu, radius)) {
            if (try_candidate(chi)) return KeyVerdict::No;
        }
    }
    bool settled = false;
    for_each_poly(EnumSpec{f.degree() - 1, bounds.height, true, d}, [&](const RatPoly& chi) {
        settled = try_candidate(chi);
        return !settled;
    });
    if (settled) return KeyVerdict::No;
    return unknown ? KeyVerdict::UnknownAtBound : KeyVerdict::Yes;
}

}  // namespace

bool divides_initial(const MacLaneChain& mu, const RatPoly& phi, const RatPoly& f) {
    if (!is_accepted_key(mu, phi)) throw ValidationError("'" + to_string(phi) + "' is not an accepted key polynomial");
    if (f.is_zero()) return true;
    return divides_by_formula(mu, phi, f);
}

AbstractKeyTest::AbstractKeyTest(const MacLaneChain& mu) : mu_(&mu) {
    for (const auto& phi : mu.key_polynomials()) key_eps_.emplace_back(phi.degree(), epsilon(mu, phi));
}

bool AbstractKeyTest::operator()(const RatPoly& Q) const {
    if (Q.degree() < 1) throw ValidationError("abstract key polynomials are nonconstant");
    if (!Q.is_monic()) throw ValidationError("abstract key polynomials are monic");
    if (Q.degree() == 1) return true;
    const LambdaValue eq = epsilon(*mu_, Q);
    for (const auto& [deg, eps] : key_eps_) {
        if (deg < Q.degree() && eps >= eq) return false;
    }
    return true;
}

bool is_abstract_key(const MacLaneChain& mu, const RatPoly& Q) { return AbstractKeyTest(mu)(Q); }

LambdaValue truncate_value(const MacLaneChain& mu, const RatPoly& Q, const RatPoly& f) {
    if (!is_abstract_key(mu, Q)) throw ValidationError("'" + to_string(Q) + "' is not an abstract key polynomial");
    const LambdaValue q_value = mu.evaluate(Q);
    LambdaValue best = LambdaValue::infinity();
    const auto expansion = phi_expansion(f, Q);
    for (std::size_t i = 0; i < expansion.size(); ++i) {
        if (expansion[i].is_zero()) continue;
        LambdaValue term = mu.evaluate(expansion[i]) + static_cast<std::int64_t>(i) * q_value;
        if (term < best) best = std::move(term);
    }
    return best;
}

bool is_key_min_degree(const MacLaneChain& mu, const RatPoly& Q) {
    if (!Q.is_monic() || Q.degree() != mu.degree()) return false;
    if (!is_abstract_key(mu, Q)) return false;
    const LambdaValue at_q = mu.evaluate(Q);
    const LambdaValue at_diff = mu.evaluate(mu.last_key() - Q);
    return std::min(at_q, at_diff) == mu.last_gamma();
}

KeyVerdict is_key(const MacLaneChain& mu, const RatPoly& f, const KeyBounds& bounds) {
    if (f.degree() < 1) throw ValidationError("key polynomials are nonconstant");
    if (!f.is_monic()) throw ValidationError("key polynomials are monic");
    return is_key_impl(mu, f, bounds, delta(mu));
}

MacLaneChain augment(const MacLaneChain& mu, const RatPoly& phi, const LambdaValue& gamma, bool trusted,
                     const KeyBounds& bounds) {
    if (phi.degree() < 1 || !phi.is_monic()) throw ValidationError("key polynomial must be monic and nonconstant");
    if (phi.degree() < mu.degree()) throw ValidationError("key polynomial degree is below the chain degree");
    if (gamma.is_infinite()) throw ValidationError("augmentation value must be finite");
    if (!(gamma > mu.evaluate(phi))) throw ValidationError("not an augmentation: gamma does not exceed mu(phi)");
    if (!trusted) {
        if (phi.degree() == mu.degree()) {
            if (!is_key_min_degree(mu, phi)) throw ValidationError("'" + to_string(phi) + "' rejected by key test");
        } else {
            switch (is_key(mu, phi, bounds)) {
                case KeyVerdict::Yes: break;
                case KeyVerdict::No: throw ValidationError("'" + to_string(phi) + "' rejected by key test");
                case KeyVerdict::UnknownAtBound:
                    throw ValidationError("key status of '" + to_string(phi) + "' unknown at bound; set trusted to accept");
            }
        }
    }
    return mu.with_step({phi, gamma, trusted});
}

bool same_direction(const MacLaneChain& mu, const RatPoly& f, const RatPoly& g) {
    if (!is_accepted_key(mu, f)) throw ValidationError("'" + to_string(f) + "' is not an accepted key polynomial");
    if (!is_accepted_key(mu, g)) throw ValidationError("'" + to_string(g) + "' is not an accepted key polynomial");
    if (f.degree() != g.degree()) return false;
    return mu.evaluate(f - g) > mu.evaluate(f);
}

bool compare(const MacLaneChain& mu, const MacLaneChain& eta) {
    if (!(mu.prime() == eta.prime())) throw ValidationError("valuations over different primes");
    const LambdaValue radius = delta(mu);
    if (radius > delta(eta)) return false;
    return epsilon(mu, eta.last_key()) == radius;
}

bool equivalent(const MacLaneChain& mu, const MacLaneChain& eta) { return compare(mu, eta) && compare(eta, mu); }

}  // namespace keypoly
