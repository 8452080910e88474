#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "witt/artin_hasse.hpp"
#include "witt/canonical_maps.hpp"
#include "witt/lambda.hpp"
#include "witt/padic.hpp"
#include "witt/selfcheck.hpp"
#include "witt/universal.hpp"

using nlohmann::json;
using namespace witt;

namespace {

constexpr int kSchemaVersion = 1;

// ---- text/JSON rendering -------------------------------------------------

std::string join_components(const std::vector<RingElement>& comps, const RingDescriptor& ring) {
    const char sep = element_text_has_commas(ring) ? ';' : ',';
    std::string out;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (i) out += sep;
        out += comps[i].to_string();
    }
    return out;
}

json profile_json(const Profile& p) {
    json arr = json::array();
    for (long long n : p.indices()) arr.push_back(n);
    return arr;
}

json components_json(const std::vector<RingElement>& comps) {
    json arr = json::array();
    for (const auto& c : comps) arr.push_back(c.to_string());
    return arr;
}

json vector_json(const char* op, const WittVector& x) {
    return json{{"schema", kSchemaVersion},
                {"op", op},
                {"ring", x.ring()->to_string()},
                {"profile", profile_json(x.profile())},
                {"components", components_json(x.components())}};
}

json upoly_json(const UPoly& f) {
    json arr = json::array();
    for (const auto& [monomial, coeff] : f.canonical_terms()) {
        json mono = json::object();
        for (const auto& [var, exp] : monomial) mono[UVar::from_key(var).name()] = exp;
        arr.push_back(json{{"coeff", coeff.get_str()}, {"monomial", mono}});
    }
    return arr;
}

json series_json(const char* op, const TruncatedSeries& f) {
    return json{{"schema", kSchemaVersion},
                {"op", op},
                {"ring", f.ring()->to_string()},
                {"order", f.order()},
                {"coefficients", components_json(f.coeffs())}};
}

std::vector<std::string> split_components_text(const std::string& text, const RingDescriptor& ring) {
    std::vector<std::string> parts;
    const bool semicolons = element_text_has_commas(ring) || text.find(';') != std::string::npos;
    const char sep = semicolons ? ';' : ',';
    int depth = 0;
    std::string current;
    for (char c : text) {
        if (c == '[') ++depth;
        if (c == ']') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

WittVector parse_vector(const RingPtr& ring, const Profile& profile, const std::string& text) {
    const auto parts = split_components_text(text, *ring);
    if (parts.size() != profile.size())
        throw ParseError("vector has " + std::to_string(parts.size()) + " components, profile " +
                         profile.to_string() + " needs " + std::to_string(profile.size()));
    std::vector<RingElement> comps;
    comps.reserve(parts.size());
    for (const auto& part : parts) comps.push_back(parse_element(ring, part));
    return WittVector(profile, ring, std::move(comps));
}

void emit(bool as_json, const std::string& text, const json& j) {
    if (as_json) std::cout << j.dump() << "\n";
    else std::cout << text << "\n";
}

// ---- shared option bundles -------------------------------------------------

struct VectorOpts {
    std::string ring = "int";
    std::string profile = "full:4";
    bool as_json = false;

    RingPtr parse_ring() const { return RingDescriptor::parse(ring); }
    Profile parse_profile() const { return Profile::parse(profile); }
};

void add_vector_flags(CLI::App* cmd, VectorOpts& opts) {
    cmd->add_option("--ring", opts.ring, "coefficient ring descriptor");
    cmd->add_option("--profile", opts.profile, "truncation profile");
    cmd->add_flag("--json", opts.as_json, "emit JSON");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"truncated Witt ring calculator"};
    app.require_subcommand(1);

    try {
        // ---- universal ----
        auto* universal = app.add_subcommand("universal", "universal polynomial families");
        std::string ukind;
        long long un = 1, um = 1, up = 2, uterms = 4, ua = 1, ub = 1;
        bool ujson = false;
        universal->add_option("kind", ukind, "sum|prod|neg|witt|frob|epsilon|delta")->required();
        universal->add_option("--n", un, "level / outer index");
        universal->add_option("--m", um, "component index");
        universal->add_option("--p", up, "prime");
        universal->add_option("--terms", uterms, "epsilon component count");
        universal->add_option("--a", ua, "outer truncation level");
        universal->add_option("--b", ub, "inner truncation level");
        universal->add_flag("--json", ujson, "emit JSON");
        universal->callback([&] {
            json j{{"schema", kSchemaVersion}, {"op", "universal"}, {"kind", ukind}};
            if (ukind == "sum" || ukind == "prod" || ukind == "neg") {
                const StructuralKind kind = ukind == "sum"    ? StructuralKind::Sum
                                            : ukind == "prod" ? StructuralKind::Product
                                                              : StructuralKind::Neg;
                const UPoly& f = structural_poly(kind, un);
                j["n"] = un;
                j["terms"] = upoly_json(f);
                emit(ujson, f.to_string(), j);
            } else if (ukind == "witt") {
                const UPoly& f = witt_polynomial(un);
                j["n"] = un;
                j["terms"] = upoly_json(f);
                emit(ujson, f.to_string(), j);
            } else if (ukind == "frob") {
                const UPoly& f = frobenius_poly(un, um);
                j["n"] = un;
                j["m"] = um;
                j["terms"] = upoly_json(f);
                emit(ujson, f.to_string(), j);
            } else if (ukind == "epsilon") {
                j["p"] = up;
                json list = json::array();
                std::string text;
                for (long long n = 1; n <= uterms; ++n) {
                    const UPoly& f = epsilon_poly(up, n);
                    list.push_back(json{{"n", n}, {"terms", upoly_json(f)}});
                    if (!text.empty()) text += "\n";
                    text += std::to_string(n) + ": " + f.to_string();
                }
                j["components"] = list;
                emit(ujson, text, j);
            } else if (ukind == "delta") {
                const UPoly& f = delta_poly(ua, ub, un, um);
                j["a"] = ua;
                j["b"] = ub;
                j["n"] = un;
                j["m"] = um;
                j["terms"] = upoly_json(f);
                emit(ujson, f.to_string(), j);
            } else {
                throw ParseError("unknown universal kind '" + ukind + "'");
            }
        });

        // ---- binary/unary ring laws ----
        VectorOpts add_opts, mul_opts, neg_opts;
        std::string lhs_text, rhs_text, only_text;
        auto* addc = app.add_subcommand("add", "Witt vector addition");
        add_vector_flags(addc, add_opts);
        addc->add_option("x", lhs_text, "left operand")->required();
        addc->add_option("y", rhs_text, "right operand")->required();
        addc->callback([&] {
            const RingPtr ring = add_opts.parse_ring();
            const Profile profile = add_opts.parse_profile();
            const WittVector out = witt_add(parse_vector(ring, profile, lhs_text),
                                            parse_vector(ring, profile, rhs_text));
            emit(add_opts.as_json, join_components(out.components(), *ring), vector_json("add", out));
        });
        auto* mulc = app.add_subcommand("mul", "Witt vector multiplication");
        add_vector_flags(mulc, mul_opts);
        std::string mul_lhs, mul_rhs;
        mulc->add_option("x", mul_lhs, "left operand")->required();
        mulc->add_option("y", mul_rhs, "right operand")->required();
        mulc->callback([&] {
            const RingPtr ring = mul_opts.parse_ring();
            const Profile profile = mul_opts.parse_profile();
            const WittVector out = witt_mul(parse_vector(ring, profile, mul_lhs),
                                            parse_vector(ring, profile, mul_rhs));
            emit(mul_opts.as_json, join_components(out.components(), *ring), vector_json("mul", out));
        });
        auto* negc = app.add_subcommand("neg", "Witt vector negation");
        add_vector_flags(negc, neg_opts);
        negc->add_option("x", only_text, "operand")->required();
        negc->callback([&] {
            const RingPtr ring = neg_opts.parse_ring();
            const Profile profile = neg_opts.parse_profile();
            const WittVector out = witt_neg(parse_vector(ring, profile, only_text));
            emit(neg_opts.as_json, join_components(out.components(), *ring), vector_json("neg", out));
        });

        // ---- ghost / unghost ----
        VectorOpts ghost_opts, unghost_opts;
        std::string ghost_text, unghost_text;
        auto* ghostc = app.add_subcommand("ghost", "ghost components w_*(x)");
        add_vector_flags(ghostc, ghost_opts);
        ghostc->add_option("x", ghost_text, "Witt vector")->required();
        ghostc->callback([&] {
            const RingPtr ring = ghost_opts.parse_ring();
            const Profile profile = ghost_opts.parse_profile();
            const GhostVector g = ghost(parse_vector(ring, profile, ghost_text));
            json j{{"schema", kSchemaVersion},
                   {"op", "ghost"},
                   {"ring", ring->to_string()},
                   {"profile", profile_json(profile)},
                   {"components", components_json(g.components())}};
            emit(ghost_opts.as_json, join_components(g.components(), *ring), j);
        });
        auto* unghostc = app.add_subcommand("unghost", "solve w_*(x) = g for x");
        add_vector_flags(unghostc, unghost_opts);
        unghostc->add_option("g", unghost_text, "ghost vector")->required();
        unghostc->callback([&] {
            const RingPtr ring = unghost_opts.parse_ring();
            const Profile profile = unghost_opts.parse_profile();
            const auto parts = split_components_text(unghost_text, *ring);
            if (parts.size() != profile.size()) throw ParseError("ghost vector has wrong length");
            std::vector<RingElement> comps;
            for (const auto& part : parts) comps.push_back(parse_element(ring, part));
            const WittVector out = unghost(GhostVector(profile, ring, std::move(comps)));
            emit(unghost_opts.as_json, join_components(out.components(), *ring),
                 vector_json("unghost", out));
        });

        // ---- teichmuller ----
        VectorOpts teich_opts;
        std::string teich_text;
        auto* teichc = app.add_subcommand("teich", "Teichmuller lift [a]");
        add_vector_flags(teichc, teich_opts);
        teichc->add_option("a", teich_text, "ring element")->required();
        teichc->callback([&] {
            const RingPtr ring = teich_opts.parse_ring();
            const Profile profile = teich_opts.parse_profile();
            const WittVector out = teichmuller(parse_element(ring, teich_text), profile);
            emit(teich_opts.as_json, join_components(out.components(), *ring),
                 vector_json("teich", out));
        });

        // ---- frobenius / verschiebung / project ----
        VectorOpts frob_opts;
        long long frob_n = 2;
        std::string frob_text;
        auto* frobc = app.add_subcommand("frob", "Frobenius F_n");
        add_vector_flags(frobc, frob_opts);
        frobc->add_option("--n", frob_n, "index")->required();
        frobc->add_option("x", frob_text, "Witt vector")->required();
        frobc->callback([&] {
            const RingPtr ring = frob_opts.parse_ring();
            const Profile profile = frob_opts.parse_profile();
            const WittVector out = frobenius(frob_n, parse_vector(ring, profile, frob_text));
            emit(frob_opts.as_json, join_components(out.components(), *ring),
                 vector_json("frob", out));
        });

        VectorOpts versch_opts;
        long long versch_n = 2;
        std::string versch_text;
        auto* verschc = app.add_subcommand("versch", "Verschiebung V_n into --profile");
        add_vector_flags(verschc, versch_opts);
        verschc->add_option("--n", versch_n, "index")->required();
        verschc->add_option("x", versch_text, "source vector over profile/n")->required();
        verschc->callback([&] {
            const RingPtr ring = versch_opts.parse_ring();
            const Profile target = versch_opts.parse_profile();
            const Profile source = target.quotient(versch_n);
            const WittVector out =
                verschiebung(versch_n, parse_vector(ring, source, versch_text), target);
            emit(versch_opts.as_json, join_components(out.components(), *ring),
                 vector_json("versch", out));
        });

        VectorOpts project_opts;
        std::string project_to = "full:1", project_text;
        auto* projectc = app.add_subcommand("project", "restrict to a sub-profile");
        add_vector_flags(projectc, project_opts);
        projectc->add_option("--to", project_to, "target profile")->required();
        projectc->add_option("x", project_text, "Witt vector")->required();
        projectc->callback([&] {
            const RingPtr ring = project_opts.parse_ring();
            const Profile profile = project_opts.parse_profile();
            const WittVector out =
                project(parse_vector(ring, profile, project_text), Profile::parse(project_to));
            emit(project_opts.as_json, join_components(out.components(), *ring),
                 vector_json("project", out));
        });

        // ---- lambda ----
        auto* lambda = app.add_subcommand("lambda", "the 1 + tA[[t]] model");
        std::string lkind, lx, ly;
        std::string lring = "int";
        long long lorder = 4;
        bool ljson = false;
        lambda->add_option("kind", lkind, "to|from|d|mul")->required();
        lambda->add_option("--ring", lring, "coefficient ring descriptor");
        lambda->add_option("--order", lorder, "series order N");
        lambda->add_flag("--json", ljson, "emit JSON");
        lambda->add_option("x", lx, "vector (to) or series (from|d|mul)")->required();
        lambda->add_option("y", ly, "second series (mul)");
        lambda->callback([&] {
            const RingPtr ring = RingDescriptor::parse(lring);
            if (lkind == "to") {
                const WittVector x = parse_vector(ring, Profile::full(lorder), lx);
                const TruncatedSeries f = witt_to_lambda(x);
                emit(ljson, f.to_string(), series_json("lambda_to", f));
            } else if (lkind == "from") {
                const WittVector x = lambda_to_witt(parse_series(ring, lx, lorder));
                emit(ljson, join_components(x.components(), *ring), vector_json("lambda_from", x));
            } else if (lkind == "d") {
                const TruncatedSeries f = d_operator(parse_series(ring, lx, lorder));
                emit(ljson, f.to_string(), series_json("lambda_d", f));
            } else if (lkind == "mul") {
                if (ly.empty()) throw ParseError("lambda mul needs two series");
                const TruncatedSeries f = lambda_witt_mul(parse_series(ring, lx, lorder),
                                                          parse_series(ring, ly, lorder));
                emit(ljson, f.to_string(), series_json("lambda_mul", f));
            } else {
                throw ParseError("unknown lambda kind '" + lkind + "'");
            }
        });

        // ---- artinhasse ----
        long long ah_p = 2, ah_terms = 8;
        bool ah_moebius = false, ah_json = false;
        auto* ahc = app.add_subcommand("artinhasse", "Artin-Hasse exponential coefficients");
        ahc->add_option("--p", ah_p, "prime")->required();
        ahc->add_option("--terms", ah_terms, "highest power of x");
        ahc->add_flag("--moebius", ah_moebius, "use the Moebius product expansion");
        ahc->add_flag("--json", ah_json, "emit JSON");
        ahc->callback([&] {
            const AHSeries h = ah_moebius ? hexp_moebius(ah_p, ah_terms) : hexp_coeffs(ah_p, ah_terms);
            std::string text;
            json coeffs = json::array();
            for (const auto& c : h.coeffs()) {
                if (!text.empty()) text += ", ";
                text += c.get_str();
                coeffs.push_back(c.get_str());
            }
            json j{{"schema", kSchemaVersion}, {"op", "artinhasse"},     {"p", ah_p},
                   {"terms", ah_terms},       {"moebius", ah_moebius},  {"coefficients", coeffs}};
            emit(ah_json, text, j);
        });

        // ---- phi ----
        std::string phi_spec = "id", phi_value = "1";
        long long phi_upto = 4;
        bool phi_json = false;
        auto* phic = app.add_subcommand("phi", "section from commuting Frobenius lifts");
        phic->add_option("--spec", phi_spec, "id|power")->required();
        phic->add_option("--value", phi_value, "ring element")->required();
        phic->add_option("--upto", phi_upto, "full profile bound N");
        phic->add_flag("--json", phi_json, "emit JSON");
        phic->callback([&] {
            const FrobeniusLiftSpec spec = phi_spec == "id" ? FrobeniusLiftSpec::identity_on_integers()
                                            : phi_spec == "power"
                                                ? FrobeniusLiftSpec::power_substitution()
                                                : throw ParseError("unknown spec '" + phi_spec + "'");
            const RingElement a = parse_element(spec.ring(), phi_value);
            const WittVector out = phi(spec, a, Profile::full(phi_upto));
            emit(phi_json, join_components(out.components(), *spec.ring()),
                 vector_json("phi", out));
        });

        // ---- delta ----
        long long delta_a = 2, delta_b = 2;
        std::string delta_input, delta_ring = "int";
        bool delta_json = false;
        auto* deltac = app.add_subcommand("delta", "diagonal W -> W o W");
        deltac->add_option("--a", delta_a, "outer level")->required();
        deltac->add_option("--b", delta_b, "inner level")->required();
        deltac->add_option("--ring", delta_ring, "coefficient ring descriptor");
        deltac->add_option("--input", delta_input, "vector over full:(a*b)")->required();
        deltac->add_flag("--json", delta_json, "emit JSON");
        deltac->callback([&] {
            const RingPtr ring = RingDescriptor::parse(delta_ring);
            const WittVector x = parse_vector(ring, Profile::full(delta_a * delta_b), delta_input);
            const NestedWittVector out = delta(x, delta_a, delta_b);
            std::string text;
            json outer = json::array();
            for (long long n = 1; n <= delta_a; ++n) {
                const WittVector& c = out.component(n);
                if (!text.empty()) text += "\n";
                text += std::to_string(n) + ": " + join_components(c.components(), *ring);
                outer.push_back(json{{"n", n}, {"components", components_json(c.components())}});
            }
            json j{{"schema", kSchemaVersion},
                   {"op", "delta"},
                   {"ring", ring->to_string()},
                   {"a", delta_a},
                   {"b", delta_b},
                   {"outer", outer}};
            emit(delta_json, text, j);
        });

        // ---- oracle ----
        long long oracle_p = 2, oracle_trials = 100;
        int oracle_len = 3;
        bool oracle_exhaustive = false, oracle_json = false;
        std::uint64_t oracle_seed = 0x5717c0de;
        auto* oraclec = app.add_subcommand("oracle", "W_p(F_p) vs Z/p^L carry arithmetic");
        oraclec->add_option("--p", oracle_p, "prime")->required();
        oraclec->add_option("--len", oracle_len, "digit length L")->required();
        oraclec->add_option("--trials", oracle_trials, "random pair count");
        oraclec->add_option("--seed", oracle_seed, "PRNG seed");
        oraclec->add_flag("--exhaustive", oracle_exhaustive, "check all p^L x p^L pairs");
        oraclec->add_flag("--json", oracle_json, "emit JSON");
        oraclec->callback([&] {
            const OracleReport r =
                oracle_check(oracle_p, oracle_len, oracle_trials, oracle_exhaustive, oracle_seed);
            json j{{"schema", kSchemaVersion},
                   {"op", "oracle"},
                   {"p", r.p},
                   {"len", r.length},
                   {"mode", r.exhaustive ? "exhaustive" : "random"},
                   {"pairs_checked", r.pairs_checked},
                   {"ok", r.ok},
                   {"counterexample", r.ok ? json(nullptr) : json(r.counterexample)}};
            const std::string text =
                r.ok ? "ok: " + std::to_string(r.pairs_checked) + " pairs agree"
                     : "FAIL: " + r.counterexample;
            emit(oracle_json, text, j);
            if (!r.ok) std::exit(1);
        });

        // ---- selfcheck ----
        SelfcheckOptions sc;
        bool sc_json = false;
        auto* scc = app.add_subcommand("selfcheck", "run the full identity suite");
        scc->add_option("--trials", sc.trials, "trials per randomized check");
        scc->add_option("--seed", sc.seed, "PRNG seed");
        scc->add_option("--level", sc.universal_level, "symbolic identity sweep bound");
        scc->add_flag("--json", sc_json, "emit JSON");
        scc->callback([&] {
            const auto results = run_selfcheck(sc);
            bool all_ok = true;
            json checks = json::array();
            for (const auto& r : results) {
                all_ok = all_ok && r.passed;
                if (sc_json) {
                    checks.push_back(json{{"name", r.name},
                                          {"passed", r.passed},
                                          {"detail", r.detail}});
                } else {
                    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
                    if (!r.passed) std::cout << ": " << r.detail;
                    std::cout << "\n";
                }
            }
            if (sc_json) {
                std::cout << json{{"schema", kSchemaVersion},
                                  {"op", "selfcheck"},
                                  {"ok", all_ok},
                                  {"checks", checks}}
                                 .dump()
                          << "\n";
            } else {
                std::cout << (all_ok ? "selfcheck: all checks passed"
                                     : "selfcheck: FAILURES present")
                          << "\n";
            }
            if (!all_ok) std::exit(1);
        });

        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
            return app.exit(e);
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const witt::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const witt::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
