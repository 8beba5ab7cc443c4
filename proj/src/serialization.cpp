#include "keypoly/serialization.hpp"

#include "keypoly/errors.hpp"
#include "keypoly/valuations.hpp"

namespace keypoly {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ValidationError("expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(std::string("missing field '") + key + "'");
    return *it;
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw ValidationError(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

unsigned long unsigned_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ValidationError(std::string("field '") + key + "' must be a nonnegative integer");
    }
    return v.get<unsigned long>();
}

bool bool_field(const Json& j, const char* key, bool fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_boolean()) throw ValidationError(std::string("field '") + key + "' must be a boolean");
    return it->get<bool>();
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ValidationError("rationals must be encoded as strings");
    return parse_rational(j.get<std::string>());
}

Json family_json(const IncreasingFamily& family) {
    if (family.spec() == nullptr) throw ValidationError("family has no serializable description");
    return to_json(*family.spec());
}

}  // namespace

Json to_json(const LambdaValue& v) {
    if (v.is_infinite()) return "inf";
    if (v.is_in_gamma()) return to_string(v.standard());
    return Json{{"std", to_string(v.standard())}, {"eps", to_string(v.eps())}};
}

LambdaValue lambda_from_json(const Json& j) {
    if (j.is_string()) return parse_lambda(j.get<std::string>());
    if (j.is_object()) {
        Rational eps = 0;
        if (j.contains("eps")) eps = rational_from_json(j.at("eps"));
        return LambdaValue(rational_from_json(field(j, "std")), eps);
    }
    throw ValidationError("a value must be a string or an object {\"std\", \"eps\"}");
}

Json to_json(const MacLaneChain& mu) {
    Json steps = Json::array();
    for (const auto& s : mu.steps()) {
        steps.push_back({{"phi", to_string(s.phi)}, {"gamma", to_json(s.gamma)}, {"trusted", s.trusted}});
    }
    return Json{{"p", mu.prime().value()}, {"gamma0", to_json(mu.gamma0())}, {"steps", steps}};
}

MacLaneChain chain_from_json(const Json& j) {
    MacLaneChain mu = gauss(Prime(unsigned_field(j, "p")), lambda_from_json(field(j, "gamma0")));
    if (!j.contains("steps")) return mu;
    const Json& steps = j.at("steps");
    if (!steps.is_array()) throw ValidationError("field 'steps' must be an array");
    for (const auto& s : steps) {
        mu = augment(mu, parse_poly(string_field(s, "phi")), lambda_from_json(field(s, "gamma")),
                     bool_field(s, "trusted", false));
    }
    return mu;
}

Json to_json(const FamilySpec& spec) {
    if (const auto* m = std::get_if<MonomialCentersSpec>(&spec)) {
        return Json{{"kind", "monomial_centers"}, {"p", m->p}, {"centers", m->centers}, {"deltas", m->deltas},
                    {"cap", m->cap}};
    }
    Json chains = Json::array();
    for (const auto& c : std::get<ExplicitSpec>(spec).chains) chains.push_back(to_json(c));
    return Json{{"kind", "explicit"}, {"chains", chains}};
}

FamilySpec family_spec_from_json(const Json& j) {
    const std::string kind = string_field(j, "kind");
    if (kind == "monomial_centers") {
        MonomialCentersSpec m;
        m.p = unsigned_field(j, "p");
        m.centers = string_field(j, "centers");
        m.deltas = string_field(j, "deltas");
        if (j.contains("cap")) m.cap = unsigned_field(j, "cap");
        return m;
    }
    if (kind == "explicit") {
        ExplicitSpec e;
        const Json& chains = field(j, "chains");
        if (!chains.is_array()) throw ValidationError("field 'chains' must be an array");
        for (const auto& c : chains) e.chains.push_back(chain_from_json(c));
        return e;
    }
    throw ValidationError("unknown family kind '" + kind + "'");
}

Json to_json(const StableResult& r) {
    return Json{{"value", to_json(r.value)}, {"witness_index", r.witness_index}, {"certified", r.certified}};
}

Json to_json(const BallAvatar& b) {
    return Json{{"radius", to_json(b.radius)}, {"center_poly", to_string(b.center_poly)}, {"chain", to_json(b.chain)}};
}

Json to_json(const std::vector<OptimalEntry>& seq) {
    Json out = Json::array();
    for (const auto& e : seq) out.push_back({{"degree", e.degree}, {"q", to_string(e.q)}, {"eps", to_json(e.eps)}});
    return out;
}

Json to_json(const MLVChain& chain) {
    Json steps = Json::array();
    for (const auto& s : chain.steps) {
        Json step{{"kind", to_string(s.kind)}, {"phi", to_string(s.phi)}, {"gamma", to_json(s.gamma)},
                  {"trusted", s.trusted}};
        if (s.family) step["family"] = family_json(*s.family);
        steps.push_back(std::move(step));
    }
    Json terminal = "at_last_step";
    if (chain.terminal == Terminal::StableLimit) {
        if (!chain.terminal_family) throw ValidationError("stable-limit terminal without a family");
        terminal = Json{{"stable_limit", family_json(*chain.terminal_family)}};
    }
    return Json{{"p", chain.p.value()}, {"steps", steps}, {"terminal", terminal}};
}

MLVChain mlv_from_json(const Json& j) {
    MLVChain chain{Prime(unsigned_field(j, "p")), {}, Terminal::AtLastStep, nullptr};
    const Json& steps = field(j, "steps");
    if (!steps.is_array()) throw ValidationError("field 'steps' must be an array");
    for (const auto& s : steps) {
        MLVStep step;
        const std::string kind = s.contains("kind") ? string_field(s, "kind") : "ordinary";
        if (kind == "ordinary") {
            step.kind = StepKind::Ordinary;
        } else if (kind == "limit") {
            step.kind = StepKind::Limit;
            step.family = std::make_shared<const IncreasingFamily>(make_family(family_spec_from_json(field(s, "family"))));
        } else {
            throw ValidationError("unknown step kind '" + kind + "'");
        }
        step.phi = parse_poly(string_field(s, "phi"));
        step.gamma = lambda_from_json(field(s, "gamma"));
        step.trusted = bool_field(s, "trusted", false);
        chain.steps.push_back(std::move(step));
    }
    if (j.contains("terminal")) {
        const Json& t = j.at("terminal");
        if (t.is_object()) {
            chain.terminal = Terminal::StableLimit;
            chain.terminal_family =
                std::make_shared<const IncreasingFamily>(make_family(family_spec_from_json(field(t, "stable_limit"))));
        } else if (!(t.is_string() && t.get<std::string>() == "at_last_step")) {
            throw ValidationError("terminal must be \"at_last_step\" or {\"stable_limit\": family}");
        }
    }
    return chain;
}

Json to_json(const MLVReport& r) {
    Json out{{"mlv1", r.mlv1}, {"mlv2", r.mlv2}, {"mlv3", r.mlv3}, {"degrees", r.degrees}, {"kinds", r.kinds}};
    out["mlv4"] = r.mlv4 ? Json(*r.mlv4) : Json("not_applicable");
    return out;
}

}  // namespace keypoly
