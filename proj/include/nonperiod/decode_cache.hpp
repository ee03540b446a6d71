#pragma once

#include <string>

#include <json.hpp>

#include "nonperiod/elem_expr.hpp"
#include "nonperiod/enumeration.hpp"

namespace nonperiod {

// Structural JSON form of an expression, e.g.
//   {"k":"monus","l":{"k":"proj","n":1,"i":1},"r":{"k":"proj","n":1,"i":1}}
nlohmann::json expr_to_json(const ElemExpr& expr);
ExprPtr expr_from_json(const nlohmann::json& j);

// Persistence for a Decoder's memo table:
//   {"memo_limit": L, "entries": {"<e>": <expr json>, ...}}
void save_decode_cache(const Decoder& decoder, const std::string& path);
// Seeds `decoder` with the file's entries; loaded expressions are value-
// identical to fresh decodes by construction of the format.
void load_decode_cache(Decoder& decoder, const std::string& path);

}  // namespace nonperiod
