#include "nonperiod/domain_io.hpp"

#include <fstream>

#include "nonperiod/errors.hpp"

namespace nonperiod {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(name);
  if (it == j.end()) fail(where, std::string("missing field '") + name + "'");
  return *it;
}

Int parse_int(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a decimal string");
  const std::string s = j.get<std::string>();
  const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) fail(where, "empty integer");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') fail(where, "not a decimal integer: '" + s + "'");
  return Int(s, 10);
}

Rat parse_fraction(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a fraction string \"p/q\"");
  const std::string s = j.get<std::string>();
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s, 10), Int(1));
    const Int den(s.substr(slash + 1), 10);
    if (den == 0) fail(where, "zero denominator in '" + s + "'");
    return Rat(Int(s.substr(0, slash), 10), den);
  } catch (const std::invalid_argument&) {
    fail(where, "not a fraction: '" + s + "'");
  }
}

}  // namespace

BasicDomain parse_domain(const json& j, const std::string& source) {
  BasicDomain domain;

  const json& jdim = field(j, "dim", source);
  if (!jdim.is_number_unsigned() || jdim.get<std::uint64_t>() < 1)
    fail(source + ".dim", "expected a positive integer");
  domain.dim = jdim.get<std::uint64_t>();

  domain.box_scale = parse_fraction(field(j, "box_scale", source), source + ".box_scale");
  if (!(domain.box_scale > Rat(0))) fail(source + ".box_scale", "must be positive");

  const json& jpolys = field(j, "polynomials", source);
  if (!jpolys.is_array() || jpolys.empty())
    fail(source + ".polynomials", "expected a nonempty array");

  domain.constraints.clear();
  for (std::size_t p = 0; p < jpolys.size(); ++p) {
    const std::string pwhere = source + ".polynomials[" + std::to_string(p) + "]";
    IntPolynomial poly(domain.dim);
    const json& jterms = field(jpolys[p], "terms", pwhere);
    if (!jterms.is_array()) fail(pwhere + ".terms", "expected an array");
    for (std::size_t t = 0; t < jterms.size(); ++t) {
      const std::string twhere = pwhere + ".terms[" + std::to_string(t) + "]";
      const Int coeff = parse_int(field(jterms[t], "coeff", twhere), twhere + ".coeff");
      const json& jexps = field(jterms[t], "exponents", twhere);
      if (!jexps.is_array() || jexps.size() != domain.dim)
        fail(twhere + ".exponents", "expected an array of length " + std::to_string(domain.dim) +
                                        " (dimension mismatch)");
      IntPolynomial::Exponents exps;
      exps.reserve(domain.dim);
      for (const auto& je : jexps) {
        if (!je.is_number_unsigned()) fail(twhere + ".exponents", "expected nonnegative integers");
        exps.push_back(je.get<std::uint32_t>());
      }
      poly.add_term(coeff, std::move(exps));
    }
    domain.constraints.push_back(std::move(poly));
  }
  domain.validate();
  return domain;
}

BasicDomain load_domain(std::istream& in, const std::string& source) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": malformed JSON: " + e.what());
  }
  return parse_domain(j, source);
}

BasicDomain load_domain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return load_domain(in, path);
}

nlohmann::json serialize_domain(const BasicDomain& domain) {
  json jpolys = json::array();
  for (const auto& poly : domain.constraints) {
    json jterms = json::array();
    for (const auto& [exps, coeff] : poly.terms()) {
      json jt;
      jt["coeff"] = coeff.get_str();
      jt["exponents"] = exps;
      jterms.push_back(std::move(jt));
    }
    jpolys.push_back(json{{"terms", std::move(jterms)}});
  }
  return json{{"dim", domain.dim},
              {"box_scale", domain.box_scale.num().get_str() + "/" + domain.box_scale.den().get_str()},
              {"polynomials", std::move(jpolys)}};
}

void save_domain(const BasicDomain& domain, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(path + ": cannot open for writing");
  out << serialize_domain(domain).dump(2) << "\n";
}

}  // namespace nonperiod
