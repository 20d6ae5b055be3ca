// Batch command-line front end: wires scripts to the engine and the model
// checkers with machine-readable output.
//
// Exit codes: 0 all-pass, 2 verification failure (or rejected input to
// symmetrize), 1 usage/parse errors.
#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "symq/checks.hpp"
#include "symq/dsl.hpp"
#include "symq/moments.hpp"
#include "symq/pipelines.hpp"
#include "symq/polarize.hpp"
#include "symq/prng.hpp"

namespace symq {

struct CliResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

namespace cli_detail {

struct Options {
    std::string input_path;
    std::string expr_text;
    int samples = 20;
    uint64_t seed = 0;
    std::string format = "text";
    int degree = 0;
    int rank = 1;
    int bound = 2;
    std::string model;
    std::string subtarget;
};

inline std::string load_script_source(const Options& opt) {
    if (!opt.input_path.empty() && !opt.expr_text.empty())
        throw std::invalid_argument("pass either --input or --expr, not both");
    if (!opt.input_path.empty()) {
        std::ifstream in(opt.input_path);
        if (!in) throw std::invalid_argument("cannot open input file '" + opt.input_path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (!opt.expr_text.empty()) return opt.expr_text;
    throw std::invalid_argument("an input script is required (--input PATH or --expr TEXT)");
}

// All free variables collapsed onto the lexicographically first one, turning
// a several-variable hypothesis into its one-variable trace.
inline Expr diagonalized(const Expr& e) {
    auto vars = e.free_vars();
    if (vars.size() <= 1) return e;
    std::string target = *vars.begin();
    std::map<std::string, RawPtr> sub;
    for (const auto& v : vars) sub[v] = rvar(target);
    return subst_expand(e, sub);
}

inline void emit_report(const CheckReport& rep, const Options& opt, std::string& out) {
    out += opt.format == "json" ? rep.json() : rep.text();
    out += "\n";
}

inline int cmd_symmetrize(const Options& opt, std::string& out, std::string& err) {
    Script script = parse(load_script_source(opt));
    bool any = false;
    for (const Equation* eq : script.equations()) {
        std::optional<int> degree = script.degree_of(eq->name);
        if (!degree && opt.degree > 0) degree = opt.degree;  // --degree fallback
        if (!degree) continue;
        any = true;
        Expr trace = diagonalized(eq->lhs - eq->rhs);
        Expr sym;
        try {
            sym = trace.is_zero() ? Expr::zero() : symmetrize(trace, *degree);
        } catch (const homogeneity_error& ex) {
            err += "equation '" + eq->name + "': " + ex.what() + "\n";
            return 2;
        }
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["equation"] = eq->name;
            j["degree"] = *degree;
            j["result"] = sym.str();
            out += j.dump() + "\n";
        } else {
            out += eq->name + ": " + sym.str() + "\n";
        }
    }
    if (!any) {
        err += "no equation with a degree directive in the script (or pass --degree N)\n";
        return 1;
    }
    return 0;
}

inline int cmd_specialize(const Options& opt, std::string& out, std::string& err) {
    Script script = parse(load_script_source(opt));
    auto dirs = script.specializations();
    if (dirs.empty()) {
        err += "no specialize directive in the script\n";
        return 1;
    }
    for (const SpecializeDirective* dir : dirs) {
        const Equation* eq = script.find_equation(dir->eq);
        std::optional<int> degree = script.degree_of(dir->eq);
        if (!degree) {
            err += "equation '" + dir->eq + "' has no degree directive\n";
            return 1;
        }
        if (static_cast<int>(dir->slots.size()) != *degree) {
            err += "specialize tuple for '" + dir->eq + "' must have " + std::to_string(*degree) +
                   " entries\n";
            return 1;
        }
        Expr trace = diagonalized(eq->lhs - eq->rhs);
        Expr sym;
        try {
            sym = trace.is_zero() ? Expr::zero() : symmetrize(trace, *degree);
        } catch (const homogeneity_error& ex) {
            err += "equation '" + dir->eq + "': " + ex.what() + "\n";
            return 2;
        }
        FactSet facts = dir->has_with ? script.fact_set(&dir->with) : script.fact_set();
        Expr result = specialize_at(sym, dir->slots, facts);
        std::string tuple;
        for (size_t i = 0; i < dir->slots.size(); ++i) {
            if (i) tuple += ", ";
            tuple += dir->slots[i].str();
        }
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["equation"] = dir->eq;
            j["at"] = tuple;
            j["result"] = result.str();
            out += j.dump() + "\n";
        } else {
            out += dir->eq + " at (" + tuple + "): " + result.str() + "\n";
        }
    }
    return 0;
}

inline std::optional<CheckReport> run_verify_model(const std::string& subtarget, const std::string& model,
                                                   int samples, uint64_t seed, const std::string& expr_text) {
    const FieldMap d = FieldMap::formal_derivative();
    const FieldMap dd = FieldMap::composition({d, d});
    const FieldMap id = FieldMap::identity();
    const FieldMap qid = FieldMap::identity(Carrier::QuadField);
    const FieldMap conj = FieldMap::quad_conjugation();
    const FieldMap subst2 = FieldMap::substitution(Poly::t() * Poly::t());
    const FieldMap subst3 = FieldMap::substitution(Poly::t().pow(3));
    const FieldMap combo = FieldMap::linear_combo(
        {{RatFunc::t(), d}, {RatFunc::t() * RatFunc::t() + RatFunc(1), dd}, {RatFunc(3), d}});
    RatFuncSampler gen(seed);
    QuadExtSampler qgen(seed, 2);
    const std::string name = subtarget + ":" + model;

    if (subtarget == "mult") {
        if (model == "sq") return check_multiplicative<RatFunc>(name, QuadMap::prod_of_homs(id, id), samples, gen);
        if (model == "hom-prod")
            return check_multiplicative<RatFunc>(name, QuadMap::prod_of_homs(subst2, subst3), samples, gen);
        if (model == "norm-sqrt2")
            return check_multiplicative<QuadExt>(name, QuadMap::prod_of_homs(qid, conj), samples, qgen);
        if (model == "deriv-square")
            return check_multiplicative<RatFunc>(name, QuadMap::deriv_of_square(d), samples, gen);
    } else if (subtarget == "pi2") {
        if (model == "deriv-square")
            return check_pi2_additive<RatFunc>(name, QuadMap::deriv_of_square(d), samples, gen);
        if (model == "second-order-d")
            return check_pi2_additive<RatFunc>(name, QuadMap::second_order_form(d), samples, gen);
        if (model == "second-order-dd")
            return check_pi2_additive<RatFunc>(name, QuadMap::second_order_form(dd), samples, gen);
        if (model == "second-order-combo")
            return check_pi2_additive<RatFunc>(name, QuadMap::second_order_form(combo), samples, gen);
        if (model == "sq") return check_pi2_additive<RatFunc>(name, QuadMap::prod_of_homs(id, id), samples, gen);
    } else if (subtarget == "twisted") {
        if (model == "twisted-subst-d")
            return check_twisted<RatFunc>(name, QuadMap::twisted_second_order(subst2, d), subst2, samples, gen);
        if (model == "twisted-subst-dd")
            return check_twisted<RatFunc>(name, QuadMap::twisted_second_order(subst2, dd), subst2, samples, gen);
        if (model == "twisted-id-d")
            return check_twisted<RatFunc>(name, QuadMap::second_order_form(d), id, samples, gen);
        if (model == "sq")
            return check_twisted<RatFunc>(name, QuadMap::prod_of_homs(id, id), id, samples, gen);
    } else if (subtarget == "moment1") {
        if (model == "moment-id-d")
            return check_moment1<RatFunc>(name, QuadMap::moment_form(id, id, d), id, id, samples, gen);
        if (model == "moment-zero")
            return check_moment1<RatFunc>(name, QuadMap::moment_form(id, id, FieldMap::zero()), id, id, samples, gen);
        if (model == "moment-subst-d")
            return check_moment1<RatFunc>(name,
                                          QuadMap::moment_form(subst2, subst2, FieldMap::composition({subst2, d})),
                                          subst2, subst2, samples, gen);
        if (model == "sq")
            return check_moment1<RatFunc>(name, QuadMap::prod_of_homs(id, id), id, id, samples, gen);
    } else if (subtarget == "spadesuit") {
        if (model == "d-id") return check_spadesuit<RatFunc>(name, d, id, id, samples, gen);
        if (model == "dd-id") return check_spadesuit<RatFunc>(name, dd, id, id, samples, gen);
        if (model == "subst-comp")
            return check_spadesuit<RatFunc>(name, FieldMap::composition({subst2, d}), subst2, subst2, samples, gen);
        if (model == "id") return check_spadesuit<RatFunc>(name, id, id, id, samples, gen);
    } else if (subtarget == "classical") {
        Poly p = expr_text.empty() ? Poly::t() * Poly::t() : Poly::parse(expr_text);
        if (model == "d") return check_classical_derivation_identity(name, d, p, samples, gen);
        if (model == "zero") return check_classical_derivation_identity(name, FieldMap::zero(), p, samples, gen);
        if (model == "dd") return check_classical_derivation_identity(name, dd, p, samples, gen);
    } else if (subtarget == "order2") {
        if (model == "d") return check_order_two_derivation<RatFunc>(name, d, samples, gen);
        if (model == "dd") return check_order_two_derivation<RatFunc>(name, dd, samples, gen);
        if (model == "combo") return check_order_two_derivation<RatFunc>(name, combo, samples, gen);
        if (model == "subst-minus-id")
            return check_order_two_derivation<RatFunc>(
                name, FieldMap::linear_combo({{RatFunc(1), subst2}, {RatFunc(-1), id}}), samples, gen);
    } else if (subtarget == "parallelogram") {
        if (model == "sq") return check_parallelogram<RatFunc>(name, QuadMap::prod_of_homs(id, id), samples, gen);
        if (model == "deriv-square")
            return check_parallelogram<RatFunc>(name, QuadMap::deriv_of_square(d), samples, gen);
        if (model == "second-order-dd")
            return check_parallelogram<RatFunc>(name, QuadMap::second_order_form(dd), samples, gen);
        if (model == "twisted-subst-d")
            return check_parallelogram<RatFunc>(name, QuadMap::twisted_second_order(subst2, d), samples, gen);
        if (model == "moment-id-d")
            return check_parallelogram<RatFunc>(name, QuadMap::moment_form(id, id, d), samples, gen);
        if (model == "norm-sqrt2")
            return check_parallelogram<QuadExt>(name, QuadMap::prod_of_homs(qid, conj), samples, qgen);
    }
    return std::nullopt;
}

inline int cmd_verify(const Options& opt, std::string& out, std::string& err) {
    static const std::map<std::string, std::vector<std::string>> known = {
        {"mult", {"sq", "hom-prod", "norm-sqrt2", "deriv-square"}},
        {"pi2", {"deriv-square", "second-order-d", "second-order-dd", "second-order-combo", "sq"}},
        {"twisted", {"twisted-subst-d", "twisted-subst-dd", "twisted-id-d", "sq"}},
        {"moment1", {"moment-id-d", "moment-zero", "moment-subst-d", "sq"}},
        {"spadesuit", {"d-id", "dd-id", "subst-comp", "id"}},
        {"classical", {"d", "zero", "dd"}},
        {"order2", {"d", "dd", "combo", "subst-minus-id"}},
        {"parallelogram",
         {"sq", "deriv-square", "second-order-dd", "twisted-subst-d", "moment-id-d", "norm-sqrt2"}},
    };
    auto sub = known.find(opt.subtarget);
    if (sub == known.end()) {
        err += "unknown verify subtarget '" + opt.subtarget + "'\n";
        return 1;
    }
    if (opt.model.empty()) {
        err += "--model is required; models for '" + opt.subtarget + "':";
        for (const auto& m : sub->second) err += " " + m;
        err += "\n";
        return 1;
    }
    auto rep = run_verify_model(opt.subtarget, opt.model, opt.samples, opt.seed, opt.expr_text);
    if (!rep) {
        err += "unknown model '" + opt.model + "' for subtarget '" + opt.subtarget + "'; models:";
        for (const auto& m : sub->second) err += " " + m;
        err += "\n";
        return 1;
    }
    emit_report(*rep, opt, out);
    return rep->pass ? 0 : 2;
}

inline int cmd_moments(const Options& opt, std::string& out, std::string& err) {
    if (opt.rank < 1 || opt.bound < 0) {
        err += "--rank must be >= 1 and --bound >= 0\n";
        return 1;
    }
    BellCache cache(opt.rank);
    for (const MultiIndex& alpha : indices_up_to(opt.rank, opt.bound)) {
        if (opt.format == "json") {
            nlohmann::ordered_json j;
            j["bell"] = alpha.str();
            j["expansion"] = cache.bell(alpha).str();
            out += j.dump() + "\n";
        } else {
            out += "B" + alpha.str() + " = " + cache.bell(alpha).str() + "\n";
        }
    }

    bool all_pass = true;

    // coordinate independence of the recurrence
    {
        bool ok = true;
        std::string witness;
        for (const MultiIndex& alpha : indices_up_to(opt.rank, opt.bound)) {
            if (alpha.is_zero()) continue;
            for (int i = 0; i < opt.rank && ok; ++i) {
                if (alpha.at(i) == 0) continue;
                if (cache.bell_via(alpha, i) != cache.bell(alpha)) {
                    ok = false;
                    witness = "alpha=" + alpha.str() + " via coordinate " + std::to_string(i);
                }
            }
        }
        CheckReport rep = ok ? CheckReport::passed("bell-coordinate-independence", 0)
                             : CheckReport::failed("bell-coordinate-independence", 0, witness);
        emit_report(rep, opt, out);
        all_pass = all_pass && ok;
    }

    // symbolic closure of the defining property
    {
        bool ok = true;
        std::string witness;
        BellCache xs(opt.rank, "u"), ys(opt.rank, "v");
        for (const MultiIndex& alpha : indices_up_to(opt.rank, opt.bound)) {
            Expr lhs = cache.bell(alpha);
            for (const MultiIndex& beta : alpha.lower_set())
                if (!beta.is_zero())
                    lhs = subst_scalar(lhs, bell_scalar_name("a", beta),
                                       bell_scalar("u", beta) + bell_scalar("v", beta));
            Expr rhs;
            for (const MultiIndex& beta : alpha.lower_set())
                rhs += (xs.bell(beta) * ys.bell(alpha.minus(beta))).scaled(MultiIndex::binom(alpha, beta));
            if (lhs != rhs) {
                ok = false;
                witness = "alpha=" + alpha.str();
                break;
            }
        }
        CheckReport rep = ok ? CheckReport::passed("bell-closure", 0)
                             : CheckReport::failed("bell-closure", 0, witness);
        emit_report(rep, opt, out);
        all_pass = all_pass && ok;
    }

    // optional concrete quadratic moment family
    if (!opt.model.empty()) {
        const FieldMap d = FieldMap::formal_derivative();
        std::map<MultiIndex, FieldMap> ds;
        if (opt.model == "d") {
            ds.emplace(MultiIndex::unit(opt.rank, 0), d);
        } else if (opt.model == "dd") {
            ds.emplace(MultiIndex::unit(opt.rank, 0), FieldMap::composition({d, d}));
        } else {
            err += "unknown moments model '" + opt.model + "'; models: d dd\n";
            return 1;
        }
        RatFuncSampler gen(opt.seed, 2, 5);
        QuadMomentResult res = build_quadratic_moment_family(opt.rank, ds, opt.bound, opt.samples, gen);
        for (const auto& rep : res.reports) emit_report(rep, opt, out);
        all_pass = all_pass && res.ok;
    }

    return all_pass ? 0 : 2;
}

inline int cmd_parse(const Options& opt, std::string& out, std::string&) {
    Script script = parse(load_script_source(opt));
    out += print(script);
    return 0;
}

}  // namespace cli_detail

inline CliResult run_cli(const std::vector<std::string>& args) {
    using cli_detail::Options;
    CliResult result;
    Options opt;

    CLI::App app{"exact symbolic workbench for quadratic functional equations"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd, bool with_script) {
        if (with_script) {
            cmd->add_option("--input", opt.input_path, "script file");
            cmd->add_option("--expr", opt.expr_text, "inline script text");
        }
        cmd->add_option("--samples", opt.samples, "random tuples per check")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", opt.seed, "PRNG seed");
        cmd->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* c_sym = app.add_subcommand("symmetrize", "symmetrize annotated equations");
    add_common(c_sym, true);
    c_sym->add_option("--degree", opt.degree, "degree for equations without a degree directive");

    CLI::App* c_spec = app.add_subcommand("specialize", "run specialize directives of a script");
    add_common(c_spec, true);

    CLI::App* c_verify = app.add_subcommand("verify", "check an identity on a named model");
    c_verify->add_option("subtarget", opt.subtarget,
                         "mult|pi2|twisted|moment1|spadesuit|classical|order2|parallelogram")
        ->required();
    c_verify->add_option("--model", opt.model, "model name");
    c_verify->add_option("--expr", opt.expr_text, "polynomial for the classical identity, e.g. t^2");
    add_common(c_verify, false);

    CLI::App* c_moments = app.add_subcommand("moments", "Bell expansions and moment-family checks");
    add_common(c_moments, false);
    c_moments->add_option("--rank", opt.rank, "multi-index rank")->check(CLI::PositiveNumber);
    c_moments->add_option("--bound", opt.bound, "maximum |alpha|");
    c_moments->add_option("--model", opt.model, "quadratic family model: d or dd");

    CLI::App* c_parse = app.add_subcommand("parse", "parse a script and print its canonical form");
    add_common(c_parse, true);

    std::vector<const char*> argv;
    argv.push_back("symq");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        result.out = app.help();
        result.exit_code = 0;
        return result;
    } catch (const CLI::ParseError& e) {
        result.err = std::string(e.what()) + "\n";
        result.exit_code = 1;
        return result;
    }

    try {
        if (c_sym->parsed()) result.exit_code = cli_detail::cmd_symmetrize(opt, result.out, result.err);
        else if (c_spec->parsed()) result.exit_code = cli_detail::cmd_specialize(opt, result.out, result.err);
        else if (c_verify->parsed()) result.exit_code = cli_detail::cmd_verify(opt, result.out, result.err);
        else if (c_moments->parsed()) result.exit_code = cli_detail::cmd_moments(opt, result.out, result.err);
        else if (c_parse->parsed()) result.exit_code = cli_detail::cmd_parse(opt, result.out, result.err);
    } catch (const parse_error& e) {
        result.err += std::string("parse error: ") + e.what() + "\n";
        result.exit_code = 1;
    } catch (const fact_error& e) {
        result.err += std::string("fact error: ") + e.what() + "\n";
        result.exit_code = 1;
    } catch (const std::invalid_argument& e) {
        result.err += std::string("error: ") + e.what() + "\n";
        result.exit_code = 1;
    }
    return result;
}

}  // namespace symq
