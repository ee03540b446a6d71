#include "nonperiod/decode_cache.hpp"

#include <fstream>

#include "nonperiod/errors.hpp"

namespace nonperiod {

namespace {

using nlohmann::json;

const char* kind_name(ExprKind k) {
  switch (k) {
    case ExprKind::Zero: return "zero";
    case ExprKind::Succ: return "succ";
    case ExprKind::Proj: return "proj";
    case ExprKind::Add: return "add";
    case ExprKind::Mul: return "mul";
    case ExprKind::Monus: return "monus";
    case ExprKind::Quot: return "quot";
    case ExprKind::Pow: return "pow";
    case ExprKind::Comp: return "comp";
    case ExprKind::BoundedSum: return "bsum";
    case ExprKind::BoundedProd: return "bprod";
  }
  return "?";
}

}  // namespace

json expr_to_json(const ElemExpr& expr) {
  json j;
  j["k"] = kind_name(expr.kind());
  switch (expr.kind()) {
    case ExprKind::Zero:
      j["n"] = expr.arity();
      break;
    case ExprKind::Proj:
      j["n"] = expr.arity();
      j["i"] = expr.proj_index();
      break;
    case ExprKind::Succ:
    case ExprKind::BoundedSum:
    case ExprKind::BoundedProd:
      j["c"] = expr_to_json(*expr.child(0));
      break;
    case ExprKind::Add:
    case ExprKind::Mul:
    case ExprKind::Monus:
    case ExprKind::Quot:
    case ExprKind::Pow:
      j["l"] = expr_to_json(*expr.child(0));
      j["r"] = expr_to_json(*expr.child(1));
      break;
    case ExprKind::Comp: {
      j["f"] = expr_to_json(*expr.child(0));
      json gs = json::array();
      for (std::size_t i = 1; i < expr.child_count(); ++i) gs.push_back(expr_to_json(*expr.child(i)));
      j["g"] = std::move(gs);
      break;
    }
  }
  return j;
}

ExprPtr expr_from_json(const json& j) {
  if (!j.is_object() || !j.contains("k") || !j["k"].is_string())
    throw ParseError("expression: missing kind tag");
  const std::string k = j["k"].get<std::string>();
  auto child = [&](const char* name) {
    if (!j.contains(name)) throw ParseError("expression '" + k + "': missing '" + name + "'");
    return expr_from_json(j[name]);
  };
  auto size_field = [&](const char* name) -> std::size_t {
    if (!j.contains(name) || !j[name].is_number_unsigned())
      throw ParseError("expression '" + k + "': missing numeric '" + name + "'");
    return j[name].get<std::size_t>();
  };
  try {
    if (k == "zero") return ElemExpr::zero(size_field("n"));
    if (k == "proj") return ElemExpr::proj(size_field("n"), size_field("i"));
    if (k == "succ") return ElemExpr::succ(child("c"));
    if (k == "bsum") return ElemExpr::bounded_sum(child("c"));
    if (k == "bprod") return ElemExpr::bounded_prod(child("c"));
    if (k == "add") return ElemExpr::add(child("l"), child("r"));
    if (k == "mul") return ElemExpr::mul(child("l"), child("r"));
    if (k == "monus") return ElemExpr::monus(child("l"), child("r"));
    if (k == "quot") return ElemExpr::quot(child("l"), child("r"));
    if (k == "pow") return ElemExpr::pow(child("l"), child("r"));
    if (k == "comp") {
      if (!j.contains("g") || !j["g"].is_array() || j["g"].empty())
        throw ParseError("expression 'comp': missing inner list");
      std::vector<ExprPtr> gs;
      for (const auto& jg : j["g"]) gs.push_back(expr_from_json(jg));
      return ElemExpr::comp(child("f"), std::move(gs));
    }
  } catch (const ArityMismatch& e) {
    throw ParseError(std::string("expression: inconsistent arity: ") + e.what());
  }
  throw ParseError("expression: unknown kind '" + k + "'");
}

void save_decode_cache(const Decoder& decoder, const std::string& path) {
  json entries = json::object();
  for (const auto& [e, expr] : decoder.memo_snapshot())
    entries[std::to_string(e)] = expr_to_json(*expr);
  json j{{"memo_limit", decoder.memo_limit()}, {"entries", std::move(entries)}};
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open for writing");
  out << j.dump() << "\n";
}

void load_decode_cache(Decoder& decoder, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": malformed JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_object())
    throw ParseError(path + ": missing 'entries' object");
  for (const auto& [key, jexpr] : j["entries"].items()) {
    std::uint64_t e = 0;
    try {
      e = std::stoull(key);
    } catch (const std::exception&) {
      throw ParseError(path + ": bad code key '" + key + "'");
    }
    decoder.memo_insert(e, expr_from_json(jexpr));
  }
}

}  // namespace nonperiod
