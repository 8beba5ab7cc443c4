#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "keypoly/balls.hpp"
#include "keypoly/errors.hpp"
#include "keypoly/irreducible.hpp"
#include "keypoly/limits.hpp"
#include "keypoly/serialization.hpp"
#include "keypoly/valuations.hpp"
#include "selftest.hpp"

namespace keypoly::cli {

namespace {

struct Options {
    std::optional<unsigned long> p;
    std::string gauss;
    std::string chain;
    std::string chain2;
    std::string poly;
    std::string phi;
    std::string gamma;
    std::string q;
    std::string family;
    std::string mlv;
    bool prime_check = false;
    bool strict = false;
    bool trusted = false;
    int height = 2;
    int max_degree = 2;
    int kp_height = 4;
    std::optional<std::size_t> scan;
    std::optional<std::size_t> anchor;
    std::uint64_t seed = 42;
};

class Context {
public:
    Context(const Options& o, std::istream& in) : o_(o), in_(in) {}

    std::string read(const std::string& path) const {
        if (path == "-") {
            return std::string(std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>());
        }
        std::ifstream file(path);
        if (!file) throw ValidationError("cannot read '" + path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        return buf.str();
    }

    Json read_json(const std::string& path) const {
        try {
            return Json::parse(read(path));
        } catch (const Json::parse_error& e) {
            throw ValidationError("malformed JSON in '" + path + "': " + e.what());
        }
    }

    MacLaneChain chain(const std::string& path) const {
        if (!path.empty()) return chain_from_json(read_json(path));
        if (o_.p && !o_.gauss.empty()) return gauss(Prime(*o_.p), parse_lambda(o_.gauss));
        throw ValidationError("a valuation needs --chain FILE or --p P --gauss VALUE");
    }

    MacLaneChain mu() const { return chain(o_.chain); }

    RatPoly poly(const std::string& text, const char* flag) const {
        if (text.empty()) throw ValidationError(std::string("missing ") + flag);
        RatPoly f = parse_poly(text);
        if (o_.prime_check && (f.degree() < 1 || !is_irreducible_q(f))) {
            throw ValidationError("'" + to_string(f) + "' is not irreducible over Q");
        }
        return f;
    }

    RatPoly poly() const { return poly(o_.poly, "--poly"); }

    IncreasingFamily family() const {
        if (o_.family.empty()) throw ValidationError("missing --family");
        return make_family(family_spec_from_json(read_json(o_.family)));
    }

    std::size_t scan(const IncreasingFamily& fam, std::size_t fallback) const {
        return o_.scan.value_or(std::min(fallback, fam.scan_cap()));
    }

private:
    const Options& o_;
    std::istream& in_;
};

Json error_object(const char* kind, const std::string& message) {
    return Json{{"error", {{"kind", kind}, {"message", message}}}};
}

// Returns the exit code.
int dispatch(const std::string& command, const Options& o, const Context& ctx, std::ostream& out) {
    auto emit = [&](const Json& j) { out << j.dump() << "\n"; };

    if (command == "eval") {
        emit({{"value", to_json(ctx.mu().evaluate(ctx.poly()))}});
    } else if (command == "epsilon") {
        emit({{"value", to_json(epsilon(ctx.mu(), ctx.poly()))}});
    } else if (command == "delta") {
        emit({{"value", to_json(delta(ctx.mu()))}});
    } else if (command == "classify") {
        emit({{"class", to_string(classify(ctx.mu()))}});
    } else if (command == "augment") {
        const RatPoly phi = ctx.poly(o.phi.empty() ? o.poly : o.phi, "--phi");
        if (o.gamma.empty()) throw ValidationError("missing --gamma");
        KeyBounds bounds;
        bounds.height = o.height;
        emit(to_json(augment(ctx.mu(), phi, parse_lambda(o.gamma), o.trusted, bounds)));
    } else if (command == "truncate") {
        emit({{"value", to_json(truncate_value(ctx.mu(), ctx.poly(o.q, "--q"), ctx.poly()))}});
    } else if (command == "is-akp") {
        emit({{"result", is_abstract_key(ctx.mu(), ctx.poly())}});
    } else if (command == "is-key") {
        KeyBounds bounds;
        bounds.height = o.height;
        const KeyVerdict v = is_key(ctx.mu(), ctx.poly(), bounds);
        if (v == KeyVerdict::UnknownAtBound) {
            if (o.strict) {
                emit(error_object("computation", "key status unknown at height " + std::to_string(o.height)));
                return 3;
            }
            emit({{"result", "unknown"}, {"bound", {{"height", o.height}}}});
        } else {
            emit({{"result", to_string(v)}});
        }
    } else if (command == "compare") {
        if (o.chain2.empty()) throw ValidationError("missing --chain2");
        emit({{"leq", compare(ctx.mu(), ctx.chain(o.chain2))}});
    } else if (command == "ball") {
        emit(to_json(ball_of(ctx.mu())));
    } else if (command == "optimal-seq") {
        emit({{"sequence", to_json(optimal_sequence(ctx.mu()))}});
    } else if (command == "mlv-normalize") {
        emit(to_json(mlv_normalize(ctx.mu())));
    } else if (command == "mlv-verify") {
        if (o.mlv.empty()) throw ValidationError("missing --mlv");
        emit(to_json(verify_mlv(mlv_from_json(ctx.read_json(o.mlv)), ctx.mu())));
    } else if (command == "limit-eval") {
        const IncreasingFamily fam = ctx.family();
        const StableResult r = stable_eval(fam, ctx.poly(), ctx.scan(fam, fam.scan_cap()));
        if (!r.certified && o.strict) {
            emit(error_object("computation", "no certified stable value within the scan bound"));
            return 3;
        }
        emit(to_json(r));
    } else if (command == "limit-kp") {
        const IncreasingFamily fam = ctx.family();
        Json result = Json::array();
        for (const auto& f : find_limit_kp(fam, o.max_degree, o.kp_height, ctx.scan(fam, 12))) result.push_back(to_string(f));
        emit({{"result", result}});
    } else if (command == "limit-augment") {
        const IncreasingFamily fam = ctx.family();
        if (o.gamma.empty()) throw ValidationError("missing --gamma");
        const RatPoly phi = ctx.poly(o.phi, "--phi");
        const LimitAugmentation aug = limit_augment(fam, phi, parse_lambda(o.gamma), o.anchor.value_or(fam.scan_cap()));
        emit({{"value", to_json(aug.evaluate(ctx.poly()))}});
    } else if (command == "selftest") {
        const Json report = run_selftest(o.seed);
        emit(report);
        return report.at("failures").empty() ? 0 : 3;
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact MacLane valuations and key polynomials over (Q, v_p)", "keypoly"};
    app.require_subcommand(1);

    auto chain_opts = [&](CLI::App* sub) {
        sub->add_option("--chain", o.chain, "chain JSON file, '-' for stdin");
        sub->add_option("--p", o.p, "prime for a Gauss valuation");
        sub->add_option("--gauss", o.gauss, "value of x for a Gauss valuation, e.g. 1/2 or '0 + 1*eps'");
    };
    auto poly_opt = [&](CLI::App* sub) { sub->add_option("--poly", o.poly, "polynomial, e.g. 'x^2 + 2'"); };
    auto prime_check = [&](CLI::App* sub) {
        sub->add_flag("--prime-check", o.prime_check, "reject polynomials that are reducible over Q");
    };

    struct Spec {
        const char* name;
        const char* help;
    };
    const Spec commands[] = {
        {"eval", "value mu(f)"},
        {"epsilon", "epsilon_mu(f)"},
        {"delta", "delta(mu)"},
        {"classify", "residue- or value-transcendental"},
        {"augment", "validated augmentation [mu; phi, gamma]"},
        {"truncate", "truncation mu_Q(f)"},
        {"is-akp", "abstract key polynomial test"},
        {"is-key", "key polynomial semi-decision"},
        {"compare", "mu <= eta"},
        {"ball", "ball avatar of mu"},
        {"optimal-seq", "optimal sequence of mu"},
        {"mlv-normalize", "normalise a chain to Mac Lane-Vaquie form"},
        {"mlv-verify", "check the Mac Lane-Vaquie conditions"},
        {"limit-eval", "stable value along an increasing family"},
        {"limit-kp", "limit key polynomial search"},
        {"limit-augment", "value under a limit augmentation"},
        {"selftest", "oracle cross-checks"},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        const std::string name = c.name;
        if (name != "selftest" && name.rfind("limit-", 0) != 0) chain_opts(sub);
        if (name == "eval" || name == "epsilon" || name == "truncate" || name == "is-akp" || name == "is-key" ||
            name.rfind("limit-", 0) == 0) {
            poly_opt(sub);
        }
        if (name == "augment" || name == "is-akp" || name == "is-key") prime_check(sub);
        if (name == "augment") {
            sub->add_option("--phi", o.phi, "key polynomial");
            poly_opt(sub);
            sub->add_option("--gamma", o.gamma, "value assigned to phi");
            sub->add_flag("--trusted", o.trusted, "accept phi without a complete key test");
            sub->add_option("--height", o.height, "candidate height for the key test");
        }
        if (name == "truncate") sub->add_option("--q", o.q, "abstract key polynomial Q");
        if (name == "is-key") {
            sub->add_option("--height", o.height, "candidate height");
            sub->add_flag("--strict", o.strict, "exit 3 when the answer is unknown at the bound");
        }
        if (name == "compare") sub->add_option("--chain2", o.chain2, "second chain JSON file");
        if (name == "mlv-verify") sub->add_option("--mlv", o.mlv, "MLV chain JSON file");
        if (name.rfind("limit-", 0) == 0) {
            sub->add_option("--family", o.family, "family JSON file, '-' for stdin");
            sub->add_option("--scan", o.scan, "largest family index scanned");
        }
        if (name == "limit-eval") sub->add_flag("--strict", o.strict, "exit 3 when the value is not certified");
        if (name == "limit-kp") {
            sub->add_option("--max-degree", o.max_degree, "largest candidate degree");
            sub->add_option("--height", o.kp_height, "candidate height");
        }
        if (name == "limit-augment") {
            sub->add_option("--phi", o.phi, "limit key polynomial");
            sub->add_option("--gamma", o.gamma, "value assigned to phi");
            sub->add_option("--anchor", o.anchor, "members checked for gamma > mu_i(phi)");
        }
        if (name == "selftest") sub->add_option("--seed", o.seed, "random seed");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        out << error_object("validation", e.what()).dump() << "\n";
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    const Context ctx(o, in);
    try {
        return dispatch(command, o, ctx, out);
    } catch (const ValidationError& e) {
        err << "keypoly: " << e.what() << "\n";
        out << error_object("validation", e.what()).dump() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "keypoly: " << e.what() << "\n";
        out << error_object("validation", e.what()).dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "keypoly: " << e.what() << "\n";
        out << error_object("computation", e.what()).dump() << "\n";
        return 3;
    }
}

}  // namespace keypoly::cli
