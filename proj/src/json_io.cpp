#include "mono/json_io.hpp"

#include <stdexcept>

namespace mono {

namespace {

std::string big_str(const BigInt& n) { return n.str(); }

Monomial monomial_at(const Json& j, int m) {
    Monomial mono = parse_monomial(j.get<std::string>());
    if (max_index(mono) >= m) throw std::invalid_argument("monomial index out of range");
    return mono;
}

std::vector<Monomial> monomial_list(const Json& j, int m) {
    std::vector<Monomial> out;
    for (const auto& item : j) out.push_back(monomial_at(item, m));
    return out;
}

const Json& field(const Json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw std::invalid_argument(std::string("missing field: ") + name);
    return *it;
}

}  // namespace

Json to_json(const Dyadic& d) {
    return Json{{"num", big_str(d.num)}, {"k", d.k}, {"value", d.str()}};
}

Json to_json(const SigmaResult& s) {
    Json coeffs = Json::array();
    for (const auto& [u, c] : s.c) coeffs.push_back(Json::array({u, c}));
    return Json{{"sigma", s.sigma.str()}, {"coefficients", coeffs}};
}

Json to_json(const DyadicWeight& w) {
    Json digits = Json::array();
    if (!w.digits.empty()) {
        int top = w.digits.back();
        std::size_t next = 0;
        for (int j = 0; j <= top; ++j) {
            int bit = 0;
            if (next < w.digits.size() && w.digits[next] == j) {
                bit = 1;
                ++next;
            }
            digits.push_back(Json::array({j, bit}));
        }
    }
    return Json{{"N", big_str(w.N)}, {"k", w.k}, {"digits", digits}};
}

Json to_json(const WeightDistribution& dist) {
    Json rows = Json::array();
    for (const auto& [w, count] : dist.entries)
        rows.push_back(Json{{"weight", std::to_string(w)}, {"count", big_str(count)}});
    return Json{{"m", dist.m}, {"dimension", dist.dimension}, {"distribution", rows}};
}

Json to_json(const SeedDescriptor& seed) {
    Json terms = Json::array();
    for (Monomial f : seed.S) terms.push_back(to_string(f));
    Json out{{"kind", seed.kind == SeedDescriptor::Kind::kDisjointTuple ? "disjoint_tuple"
                                                                        : "nested_degree_drop"},
             {"h", to_string(seed.h)},
             {"terms", terms}};
    if (seed.j) out["j"] = *seed.j;
    out["exponent"] = seed.exponent;
    return out;
}

Json to_json(const EnumerationReport& report) {
    Json seeds = Json::array();
    for (const auto& seed : report.seeds) seeds.push_back(to_json(seed));
    Json out{{"weight", big_str(report.weight)},
             {"count", big_str(report.total_count)},
             {"incomplete", report.incomplete},
             {"seeds", seeds}};
    if (report.verified) {
        out["verified"] = Json{{"oracle_count", big_str(report.verified->oracle_count)},
                               {"equal", report.verified->equal},
                               {"exceeds", report.verified->exceeds}};
    }
    return out;
}

Json to_json(const TemplateInstance& inst) {
    return Json{{"kind", to_string(inst.kind)},
                {"m", inst.m},
                {"r", inst.r},
                {"head", to_string(inst.head)},
                {"kernel", to_string(inst.kernel)},
                {"poly", to_string(inst.poly)},
                {"sigma", inst.predicted_sigma.str()},
                {"weight", big_str(inst.predicted_weight)}};
}

Json to_json(const CollisionReport& rep) {
    return Json{{"alpha", rep.alpha},
                {"power_of_two", rep.power_of_two},
                {"orbit_i", rep.orbit_i},
                {"orbit_j", rep.orbit_j},
                {"minkowski", rep.minkowski}};
}

Json to_json(const MasterOrbit& orbit) {
    Json pairs = Json::array();
    for (const auto& rep : orbit.pairs) pairs.push_back(to_json(rep));
    return Json{{"head_exponent", orbit.head_exponent},
                {"beta", orbit.beta},
                {"beta_mix", orbit.beta_mix},
                {"alpha", orbit.alpha},
                {"alpha_all_power_of_two", orbit.alpha_all_power_of_two},
                {"pairs", pairs},
                {"stabilizer_orbit", big_str(orbit.stabilizer_orbit)},
                {"full_orbit", big_str(orbit.full_orbit)},
                {"predicted_stabilizer_exponent", orbit.predicted_stabilizer_exponent()},
                {"predicted_full_exponent", orbit.predicted_full_exponent()}};
}

std::string to_csv(const WeightDistribution& dist) {
    std::string out = "weight,count\n";
    for (const auto& [w, count] : dist.entries)
        out += std::to_string(w) + "," + big_str(count) + "\n";
    return out;
}

std::string to_csv(const EnumerationReport& report) {
    return "weight,count\n" + big_str(report.weight) + "," + big_str(report.total_count) + "\n";
}

DecreasingSet parse_code_spec(const Json& spec, bool auto_close) {
    if (!spec.is_object()) throw std::invalid_argument("code spec must be an object");
    if (spec.contains("rm")) {
        const Json& rm = spec["rm"];
        if (!rm.is_array() || rm.size() != 2)
            throw std::invalid_argument("\"rm\" must be [r, m]");
        return reed_muller(rm[0].get<int>(), rm[1].get<int>());
    }
    int m = field(spec, "m").get<int>();
    std::vector<Monomial> monos = monomial_list(field(spec, "monomials"), m);
    return auto_close ? decreasing_closure(m, monos) : make_decreasing_set(m, monos);
}

DecreasingSet parse_code_spec_text(const std::string& text, bool auto_close) {
    return parse_code_spec(Json::parse(text), auto_close);
}

TemplateInstance parse_template_spec(const Json& spec) {
    std::string kind = field(spec, "kind").get<std::string>();
    int m = field(spec, "m").get<int>();
    const Json& params = field(spec, "params");

    if (kind == "disjoint_k_sum")
        return disjoint_k_sum(monomial_list(field(params, "terms"), m), m);
    if (kind == "rank_ell_degree_drop")
        return rank_ell_degree_drop(monomial_list(field(params, "terms"), m),
                                    monomial_at(field(params, "g"), m), m);
    if (kind == "complementary_flip")
        return complementary_flip(monomial_at(field(params, "f"), m),
                                  field(params, "j").get<int>(),
                                  monomial_at(field(params, "g"), m), m);
    if (kind == "shared_3term_b" || kind == "shared_3term_c") {
        SharedKernelVariant variant =
            kind == "shared_3term_b" ? SharedKernelVariant::kB : SharedKernelVariant::kC;
        Monomial h = monomial_at(field(params, "h"), m);
        if (params.contains("labels"))
            return shared_3term(h, variant, m, params["labels"].get<std::vector<int>>());
        return shared_3term(h, variant, m);
    }
    if (kind == "nested")
        return nest(monomial_at(field(params, "h"), m),
                    parse_poly(field(params, "kernel").get<std::string>(), m));
    throw std::invalid_argument("unknown template kind: " + kind);
}

TemplateInstance parse_template_spec_text(const std::string& text) {
    return parse_template_spec(Json::parse(text));
}

}  // namespace mono
