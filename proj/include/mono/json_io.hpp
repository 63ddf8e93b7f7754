// JSON and CSV serialization, plus parsing of code and template descriptions.
//
// All big integers travel as decimal strings so nothing is truncated. Output
// uses insertion-ordered objects: the same value always serializes to the
// same bytes.

#pragma once

#include <string>

#include "json.hpp"
#include "mono/code_model.hpp"
#include "mono/enumerators.hpp"
#include "mono/oracle.hpp"
#include "mono/templates.hpp"
#include "mono/weight_engine.hpp"

namespace mono {

using Json = nlohmann::ordered_json;

Json to_json(const Dyadic& d);
Json to_json(const SigmaResult& s);
Json to_json(const DyadicWeight& w);  // digits listed as [position, bit] up to the top bit
Json to_json(const WeightDistribution& dist);
Json to_json(const SeedDescriptor& seed);
Json to_json(const EnumerationReport& report);
Json to_json(const TemplateInstance& inst);
Json to_json(const CollisionReport& rep);
Json to_json(const MasterOrbit& orbit);

std::string to_csv(const WeightDistribution& dist);   // weight,count rows
std::string to_csv(const EnumerationReport& report);  // single weight,count row

// {"rm": [r, m]} or {"m": m, "monomials": ["x0*x1", ...]}. A monomial list
// that is not downward closed is rejected unless auto_close is set, in which
// case the closure is taken.
DecreasingSet parse_code_spec(const Json& spec, bool auto_close = false);
DecreasingSet parse_code_spec_text(const std::string& text, bool auto_close = false);

// {"kind": ..., "m": ..., "params": {...}}; params are kind-specific:
//   disjoint_k_sum        {"terms": [monomials]}
//   rank_ell_degree_drop  {"terms": [monomials], "g": monomial}
//   complementary_flip    {"f": monomial, "j": index, "g": monomial}
//   shared_3term_b / _c   {"h": monomial, "labels": [indices] (optional)}
//   nested                {"h": monomial, "kernel": polynomial}
TemplateInstance parse_template_spec(const Json& spec);
TemplateInstance parse_template_spec_text(const std::string& text);

}  // namespace mono
