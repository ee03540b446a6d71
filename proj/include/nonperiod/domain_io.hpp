#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "nonperiod/domain.hpp"

namespace nonperiod {

// Domain file schema:
//   {"dim": L, "box_scale": "p/q",
//    "polynomials": [{"terms": [{"coeff": "<signed decimal>",
//                                "exponents": [j_1, ..., j_L]}]}]}
// Coefficients are decimal strings of unbounded size. Parse errors carry a
// field (or byte-position) diagnostic and throw ParseError.
BasicDomain parse_domain(const nlohmann::json& j, const std::string& source = "domain");
BasicDomain load_domain(const std::string& path);
BasicDomain load_domain(std::istream& in, const std::string& source);

// Normalized serialization: terms sorted by exponent vector, box_scale as
// "p/q". parse ∘ serialize is the identity on normalized domains.
nlohmann::json serialize_domain(const BasicDomain& domain);
void save_domain(const BasicDomain& domain, const std::string& path);

}  // namespace nonperiod
