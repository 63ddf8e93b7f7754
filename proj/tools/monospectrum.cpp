// monospectrum: weights, spectra, and codeword multiplicities of decreasing
// monomial codes, in exact arithmetic.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage or refused input,
// 3 result flagged incomplete. Output is JSON (default) or CSV; identical
// invocations produce byte-identical output. Caps default to desk scale and
// are overridden by MONO_SPECTRUM_CAPS ({"eval_m", "orbit_m", "dim"}), then
// by --cap-m / --cap-dim.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mono/code_model.hpp"
#include "mono/enumerators.hpp"
#include "mono/eval.hpp"
#include "mono/json_io.hpp"
#include "mono/lta.hpp"
#include "mono/oracle.hpp"
#include "mono/selftest.hpp"
#include "mono/templates.hpp"
#include "mono/weight_engine.hpp"

using namespace mono;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

struct Caps {
    int eval_m = 20;  // truth-table evaluation, hard limit kMaxEvalVars
    int orbit_m = 5;  // explicit orbit construction, hard limit kMaxExplicitGroupVars
    int dim = 24;     // exhaustive walks, hard limit kMaxOracleDim
};

Caps caps_from_env() {
    Caps caps;
    const char* env = std::getenv("MONO_SPECTRUM_CAPS");
    if (!env || !*env) return caps;
    Json j;
    try {
        j = Json::parse(env);
    } catch (const Json::exception&) {
        throw std::invalid_argument("MONO_SPECTRUM_CAPS is not valid JSON");
    }
    if (!j.is_object()) throw std::invalid_argument("MONO_SPECTRUM_CAPS must be a JSON object");
    if (j.contains("eval_m")) caps.eval_m = j["eval_m"].get<int>();
    if (j.contains("orbit_m")) caps.orbit_m = j["orbit_m"].get<int>();
    if (j.contains("dim")) caps.dim = j["dim"].get<int>();
    return caps;
}

// Inline JSON if the text starts with '{', otherwise a file path.
Json load_spec(const std::string& text) {
    std::string body = text;
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') {
        std::ifstream in(text);
        if (!in) throw std::invalid_argument("cannot read spec file: " + text);
        std::ostringstream buf;
        buf << in.rdbuf();
        body = buf.str();
    }
    try {
        return Json::parse(body);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("spec is not valid JSON: ") + e.what());
    }
}

std::string scalars_to_csv(const Json& j) {
    std::string out = "field,value\n";
    for (const auto& [key, value] : j.items()) {
        if (value.is_structured()) continue;
        out += key + ",";
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += "\n";
    }
    return out;
}

void emit(const Json& j, const std::string& fmt) {
    if (fmt == "csv")
        std::cout << scalars_to_csv(j);
    else
        std::cout << j.dump() << "\n";
}

BigInt pow2(int e) { return BigInt(1) << e; }

Dyadic parse_dyadic_text(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string num_text = text.substr(0, slash == std::string::npos ? text.size() : slash);
    auto digits_only = [](const std::string& s, std::size_t from) {
        if (from >= s.size()) return false;
        for (std::size_t i = from; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_only(num_text, num_text.size() > 0 && num_text[0] == '-' ? 1 : 0))
        throw std::invalid_argument("numerator must be an integer: " + text);
    BigInt num(num_text);
    int k = 0;
    if (slash != std::string::npos) {
        std::string den_text = text.substr(slash + 1);
        if (!digits_only(den_text, 0))
            throw std::invalid_argument("denominator must be an integer: " + text);
        BigInt den(den_text);
        if (den <= 0) throw std::invalid_argument("denominator must be positive");
        while (den > 1) {
            if (den % 2 != 0)
                throw std::invalid_argument("denominator must be a power of two: " + text);
            den /= 2;
            ++k;
        }
    }
    return Dyadic(num, k);
}

int cmd_weight(const std::string& poly_text, int m, const Caps& caps, const std::string& fmt,
               long long seed) {
    Poly p = parse_poly(poly_text, m);
    Json out{{"poly", to_string(p)}, {"m", m}, {"seed", seed}};
    int code = kExitOk;
    if (p.is_zero()) {
        out["formula_weight"] = "0";
        if (m <= caps.eval_m) {
            out["evaluation_weight"] = "0";
            out["match"] = true;
        }
    } else {
        ResidualFamily fam = residual_family_of(p);
        SigmaResult sr = sigma(fam);
        BigInt formula = general_weight(fam);
        out["formula_weight"] = formula.str();
        out["sigma"] = to_json(sr);
        out["digits"] = to_json(dyadic_decompose(sr.sigma, fam));
        if (m <= caps.eval_m) {
            BigInt truth = weight(p);
            out["evaluation_weight"] = truth.str();
            bool match = truth == formula;
            out["match"] = match;
            if (!match) code = kExitMismatch;
        }
    }
    emit(out, fmt);
    return code;
}

int cmd_dyadic(const std::string& value_text, const std::string& fmt, long long seed) {
    Dyadic d = parse_dyadic_text(value_text);
    DyadicWeight w = dyadic_decompose(d);
    Json out = to_json(w);
    out["value"] = d.str();
    out["seed"] = seed;
    emit(out, fmt);
    return kExitOk;
}

int cmd_template(const std::string& spec_text, const Caps& caps, bool verify,
                 const std::string& fmt, long long seed) {
    TemplateInstance inst = parse_template_spec(load_spec(spec_text));
    Json out = to_json(inst);
    out["seed"] = seed;
    int code = kExitOk;
    if (verify) {
        if (inst.m > caps.eval_m) {
            std::cerr << "m=" << inst.m << " exceeds the evaluation cap " << caps.eval_m
                      << "; pass --no-verify to skip the truth table\n";
            return kExitUsage;
        }
        BigInt truth = weight(inst.poly);
        out["evaluation_weight"] = truth.str();
        bool match = truth == inst.predicted_weight;
        out["match"] = match;
        if (!match) code = kExitMismatch;
    }
    emit(out, fmt);
    return code;
}

int cmd_code_validate(const std::string& spec_text, const std::string& fmt, long long seed) {
    Json spec = load_spec(spec_text);
    Json out;
    bool ok = true;
    if (spec.contains("rm")) {
        DecreasingSet I = parse_code_spec(spec);
        out = Json{{"m", I.m}, {"seed", seed}, {"decreasing", true}, {"dimension", I.dimension()}};
    } else {
        if (!spec.contains("m") || !spec.contains("monomials"))
            throw std::invalid_argument("code spec needs \"rm\" or \"m\" + \"monomials\"");
        int m = spec["m"].get<int>();
        std::vector<Monomial> monos;
        for (const auto& item : spec["monomials"]) {
            Monomial f = parse_monomial(item.get<std::string>());
            if (max_index(f) >= m) throw std::invalid_argument("monomial index out of range");
            monos.push_back(f);
        }
        ok = is_decreasing(m, monos);
        out = Json{{"m", m}, {"seed", seed}, {"decreasing", ok}};
        if (ok)
            out["dimension"] = make_decreasing_set(m, monos).dimension();
        else
            out["closure_dimension"] = decreasing_closure(m, monos).dimension();
    }
    emit(out, fmt);
    return ok ? kExitOk : kExitMismatch;
}

int cmd_code_closure(const std::string& spec_text, const std::string& fmt, long long seed) {
    DecreasingSet I = parse_code_spec(load_spec(spec_text), true);
    Json monos = Json::array();
    for (std::uint64_t mask : I.members) monos.push_back(to_string(Monomial{mask}));
    Json out{{"m", I.m}, {"seed", seed}, {"dimension", I.dimension()}, {"monomials", monos}};
    emit(out, fmt);
    return kExitOk;
}

int cmd_code_matrix(const std::string& spec_text, bool auto_close, const std::string& fmt,
                    long long seed) {
    DecreasingSet I = parse_code_spec(load_spec(spec_text), auto_close);
    std::vector<std::string> rows = generator_matrix_hex(I);
    if (fmt == "csv") {
        std::cout << "row\n";
        for (const std::string& row : rows) std::cout << row << "\n";
        return kExitOk;
    }
    Json out{{"m", I.m}, {"seed", seed}, {"dimension", I.dimension()}, {"rows", rows}};
    emit(out, fmt);
    return kExitOk;
}

int cmd_enumerate(const std::string& spec_text, const std::string& kind, int r, int k,
                  bool ordered, bool uncorrected, bool auto_close, bool verify, const Caps& caps,
                  const std::string& fmt, long long seed) {
    DecreasingSet I = parse_code_spec(load_spec(spec_text), auto_close);
    EnumerationReport rep;
    if (kind == "disjoint-k-sum") {
        DisjointCountOptions opt;
        opt.collision_corrected = !uncorrected;
        opt.ordered = ordered;
        rep = count_disjoint_k_sum(I, r, k, opt);
    } else {
        rep = count_nested_degree_drop(I, r);
    }
    if (verify) {
        if (static_cast<int>(I.dimension()) > caps.dim) {
            std::cerr << "dimension " << I.dimension() << " exceeds the oracle cap " << caps.dim
                      << "; pass --no-verify to keep the symbolic count\n";
            return kExitUsage;
        }
        attach_oracle_comparison(rep, I);
    }
    if (fmt == "csv") {
        std::cout << to_csv(rep);
    } else {
        Json out = to_json(rep);
        out["seed"] = seed;
        std::cout << out.dump() << "\n";
    }
    if (rep.incomplete) return kExitIncomplete;
    if (rep.verified && !rep.verified->equal) return kExitMismatch;
    return kExitOk;
}

int cmd_spectrum(const std::string& spec_text, bool auto_close, const Caps& caps,
                 const std::string& fmt, long long seed) {
    DecreasingSet I = parse_code_spec(load_spec(spec_text), auto_close);
    if (static_cast<int>(I.dimension()) > caps.dim) {
        std::cerr << "dimension " << I.dimension() << " exceeds the oracle cap " << caps.dim
                  << "\n";
        return kExitUsage;
    }
    OracleOptions opt;
    opt.dim_cap = caps.dim;
    WeightDistribution dist = full_weight_distribution(I, opt);
    if (fmt == "csv") {
        std::cout << to_csv(dist);
    } else {
        Json out = to_json(dist);
        out["seed"] = seed;
        std::cout << out.dump() << "\n";
    }
    return kExitOk;
}

int cmd_orbit(const std::string& poly_text, int m, const Caps& caps, const std::string& fmt,
              long long seed) {
    Poly p = parse_poly(poly_text, m);
    if (p.is_zero()) throw std::invalid_argument("orbit of the zero polynomial is trivial");
    Json out{{"poly", to_string(p)}, {"m", m}, {"seed", seed}};
    int code = kExitOk;
    if (m <= caps.orbit_m) {
        OrbitOptions opt;
        opt.keep_elements = false;
        OrbitSummary orb = orbit(p, opt);
        out["explicit"] = true;
        out["size"] = orb.size.str();
        if (p.terms.size() == 1) {
            int e = orbit_size_log2_formula(Monomial{p.terms[0]});
            out["formula_exponent"] = e;
            bool match = orb.size == pow2(e);
            out["match"] = match;
            if (!match) code = kExitMismatch;
        }
    } else {
        // beyond the explicit cap only the single-monomial closed form is exact
        out["explicit"] = false;
        out["incomplete"] = true;
        if (p.terms.size() == 1) {
            int e = orbit_size_log2_formula(Monomial{p.terms[0]});
            out["formula_exponent"] = e;
            out["size"] = pow2(e).str();
        }
        code = kExitIncomplete;
    }
    emit(out, fmt);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weights and codeword multiplicities of decreasing monomial codes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string fmt = "json";
    long long seed = 0;
    int cap_m = 0, cap_dim = 0;
    bool verify = true;
    app.add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "seed recorded in the output")->capture_default_str();
    app.add_option("--cap-m", cap_m, "override the evaluation and orbit caps on m");
    app.add_option("--cap-dim", cap_dim, "override the exhaustive-walk dimension cap");
    app.add_flag("--verify,!--no-verify", verify, "compare against the brute-force oracle");

    std::string poly_text, value_text, spec_text, kind;
    int m = 0, r = 0, k = 1;
    bool ordered = false, uncorrected = false, auto_close = false;

    CLI::App* weight_cmd = app.add_subcommand("weight", "formula weight of a polynomial");
    weight_cmd->add_option("--poly", poly_text, "polynomial text, e.g. \"x0*x1 + x2\"")->required();
    weight_cmd->add_option("-m,--vars", m, "number of variables")->required();

    CLI::App* dyadic_cmd = app.add_subcommand("dyadic", "digit expansion of a dyadic rational");
    dyadic_cmd->add_option("value", value_text, "value such as 37/16 or -3/8")->required();

    CLI::App* template_cmd = app.add_subcommand("template", "build and check a weight template");
    template_cmd->add_option("--spec", spec_text, "template spec: inline JSON or a file path")
        ->required();

    CLI::App* code_cmd = app.add_subcommand("code", "inspect a decreasing monomial code");
    code_cmd->require_subcommand(1);
    CLI::App* validate_cmd = code_cmd->add_subcommand("validate", "check downward closure");
    CLI::App* closure_cmd = code_cmd->add_subcommand("closure", "emit the downward closure");
    CLI::App* matrix_cmd = code_cmd->add_subcommand("matrix", "emit the generator matrix rows");
    for (CLI::App* sub : {validate_cmd, closure_cmd, matrix_cmd})
        sub->add_option("--spec", spec_text, "code spec: inline JSON or a file path")->required();
    matrix_cmd->add_flag("--auto-close", auto_close, "close the member list instead of rejecting");

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "count codewords of a template class");
    enum_cmd->add_option("--code", spec_text, "code spec: inline JSON or a file path")->required();
    enum_cmd->add_option("--template", kind, "codeword class")
        ->check(CLI::IsMember({"disjoint-k-sum", "nested-degree-drop"}))
        ->required();
    enum_cmd->add_option("-r", r, "term degree")->required();
    enum_cmd->add_option("-k", k, "number of terms (disjoint-k-sum only)")->capture_default_str();
    enum_cmd->add_flag("--ordered", ordered, "count ordered tuples");
    enum_cmd->add_flag("--uncorrected", uncorrected, "skip the collision correction");
    enum_cmd->add_flag("--auto-close", auto_close, "close the member list instead of rejecting");

    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "full weight distribution");
    spectrum_cmd->add_option("--code", spec_text, "code spec: inline JSON or a file path")
        ->required();
    spectrum_cmd->add_flag("--auto-close", auto_close, "close the member list instead of rejecting");

    CLI::App* orbit_cmd = app.add_subcommand("orbit", "orbit size under the triangular affine group");
    orbit_cmd->add_option("--poly", poly_text, "polynomial text")->required();
    orbit_cmd->add_option("-m,--vars", m, "number of variables")->required();

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run the built-in fixture checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        Caps caps = caps_from_env();
        if (app.count("--cap-m")) {
            caps.eval_m = cap_m;
            caps.orbit_m = cap_m;
        }
        if (app.count("--cap-dim")) caps.dim = cap_dim;

        if (weight_cmd->parsed()) return cmd_weight(poly_text, m, caps, fmt, seed);
        if (dyadic_cmd->parsed()) return cmd_dyadic(value_text, fmt, seed);
        if (template_cmd->parsed()) return cmd_template(spec_text, caps, verify, fmt, seed);
        if (code_cmd->parsed()) {
            if (validate_cmd->parsed()) return cmd_code_validate(spec_text, fmt, seed);
            if (closure_cmd->parsed()) return cmd_code_closure(spec_text, fmt, seed);
            return cmd_code_matrix(spec_text, auto_close, fmt, seed);
        }
        if (enum_cmd->parsed())
            return cmd_enumerate(spec_text, kind, r, k, ordered, uncorrected, auto_close, verify,
                                 caps, fmt, seed);
        if (spectrum_cmd->parsed()) return cmd_spectrum(spec_text, auto_close, caps, fmt, seed);
        if (orbit_cmd->parsed()) return cmd_orbit(poly_text, m, caps, fmt, seed);
        if (selftest_cmd->parsed()) return run_selftest(std::cout);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
