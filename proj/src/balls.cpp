#include "keypoly/balls.hpp"

#include "keypoly/errors.hpp"
#include "keypoly/valuations.hpp"

namespace keypoly {

BallAvatar ball_of(const MacLaneChain& mu) { return {mu, delta(mu), mu.last_key()}; }

bool contains(const BallAvatar& b, const BallAvatar& b2) { return compare(b.chain, b2.chain); }

namespace {

struct KeyEntry {
    RatPoly phi;
    LambdaValue gamma;
    bool trusted;
};

// x with gamma0, then every step; only the last entry of each run of equal
// degrees is kept.
std::vector<KeyEntry> deepest_keys(const MacLaneChain& mu) {
    std::vector<KeyEntry> all{{RatPoly::x(), mu.gamma0(), false}};
    for (const auto& s : mu.steps()) all.push_back({s.phi, s.gamma, s.trusted});
    std::vector<KeyEntry> out;
    for (auto& e : all) {
        if (!out.empty() && out.back().phi.degree() == e.phi.degree()) {
            out.back() = std::move(e);
        } else {
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace

std::vector<OptimalEntry> optimal_sequence(const MacLaneChain& mu) {
    std::vector<OptimalEntry> out;
    for (auto& e : deepest_keys(mu)) out.push_back({e.phi.degree(), e.phi, epsilon(mu, e.phi)});
    return out;
}

bool complete_set_check(const MacLaneChain& mu, const std::vector<OptimalEntry>& seq,
                        const std::vector<RatPoly>& corpus) {
    for (const auto& f : corpus) {
        if (f.is_constant()) throw ValidationError("corpus polynomials must be nonconstant");
        const LambdaValue value = mu.evaluate(f);
        bool matched = false;
        for (const auto& entry : seq) {
            if (entry.degree <= f.degree() && truncate_value(mu, entry.q, f) == value) {
                matched = true;
                break;
            }
        }
        if (!matched) return false;
    }
    return true;
}

const char* to_string(StepKind k) { return k == StepKind::Ordinary ? "ordinary" : "limit"; }

MLVChain mlv_normalize(const MacLaneChain& raw) {
    MLVChain out{raw.prime(), {}, Terminal::AtLastStep, nullptr};
    for (auto& e : deepest_keys(raw)) {
        MLVStep step{StepKind::Ordinary, std::move(e.phi), LambdaValue(), e.trusted, nullptr};
        step.gamma = raw.evaluate(step.phi);
        if (out.steps.empty() && !(step.phi == RatPoly::x())) {
            // v_{c,gamma} = v_{0,gamma} once v(c) >= gamma.
            const Rational c = -step.phi.coeff(0);
            if (LambdaValue(base_val(raw.prime(), c)) >= step.gamma) step.phi = RatPoly::x();
        }
        out.steps.push_back(std::move(step));
    }
    return out;
}

MacLaneChain to_chain(const MLVChain& chain, std::size_t n) {
    if (n >= chain.steps.size()) throw ValidationError("MLV step index out of range");
    for (std::size_t k = 0; k <= n; ++k) {
        if (chain.steps[k].kind != StepKind::Ordinary) {
            throw ValidationError("limit steps have no finite chain representation");
        }
    }
    const MLVStep& first = chain.steps[0];
    if (first.phi.degree() != 1 || !first.phi.is_monic()) throw ValidationError("first MLV key must be monic of degree 1");
    MacLaneChain mu = monomial_chain(chain.p, -first.phi.coeff(0), first.gamma);
    for (std::size_t k = 1; k <= n; ++k) {
        const MLVStep& s = chain.steps[k];
        if (!(s.gamma > mu.evaluate(s.phi))) {
            throw ValidationError("not an augmentation at MLV step " + std::to_string(k));
        }
        mu = mu.with_step({s.phi, s.gamma, s.trusted});
    }
    return mu;
}

MacLaneChain to_chain(const MLVChain& chain) {
    if (chain.steps.empty()) throw ValidationError("empty MLV chain");
    return to_chain(chain, chain.steps.size() - 1);
}

MLVReport verify_mlv(const MLVChain& chain, const MacLaneChain& mu) {
    MLVReport report;
    report.mlv1 = !chain.steps.empty() && chain.steps.front().phi.degree() == 1;
    for (std::size_t n = 0; n < chain.steps.size(); ++n) {
        const MLVStep& s = chain.steps[n];
        report.degrees.push_back(s.phi.degree());
        report.kinds.emplace_back(to_string(s.kind));
        if (n > 0 && s.phi.degree() <= chain.steps[n - 1].phi.degree()) report.mlv1 = false;
    }

    report.mlv2 = !chain.steps.empty();
    report.mlv3 = !chain.steps.empty();
    std::optional<MacLaneChain> current;  // mu_n while every step so far is valid
    for (std::size_t n = 0; n < chain.steps.size(); ++n) {
        const MLVStep& s = chain.steps[n];
        if (s.phi.degree() < 1 || !s.phi.is_monic()) {
            report.mlv2 = report.mlv3 = false;
            break;
        }
        if (s.kind == StepKind::Limit) {
            if (!s.family) throw ValidationError("limit step without a family");
            for (std::size_t i = 0; i <= s.family->scan_cap(); ++i) {
                if (!(s.gamma > s.family->member(i).evaluate(s.phi))) report.mlv2 = false;
            }
            current.reset();
            if (s.gamma != mu.evaluate(s.phi)) report.mlv3 = false;
            continue;
        }
        if (n == 0) {
            if (s.phi.degree() != 1) {
                report.mlv2 = false;
            } else {
                current = monomial_chain(chain.p, -s.phi.coeff(0), s.gamma);
            }
        } else if (current && s.gamma > current->evaluate(s.phi)) {
            current = current->with_step({s.phi, s.gamma, s.trusted});
        } else {
            report.mlv2 = false;
            current.reset();
        }
        if (current && current->evaluate(s.phi) != s.gamma) report.mlv3 = false;
        if (s.gamma != mu.evaluate(s.phi)) report.mlv3 = false;
    }

    if (chain.terminal == Terminal::AtLastStep) {
        report.mlv4 = current.has_value() && equivalent(*current, mu);
    }
    return report;
}

}  // namespace keypoly
