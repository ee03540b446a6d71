#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nonperiod/builtins.hpp"
#include "nonperiod/cli.hpp"
#include "nonperiod/decode_cache.hpp"
#include "nonperiod/domain_io.hpp"
#include "nonperiod/errors.hpp"

using namespace nonperiod;

namespace {

std::string fixture_path(const char* name) {
  return std::string(NONPERIOD_FIXTURE_DIR) + "/" + name;
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::initializer_list<const char*> args) {
  std::ostringstream out, err;
  const int code = cli::run({args.begin(), args.end()}, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("domain files round-trip through the normalized form") {
  const BasicDomain disc = load_domain(fixture_path("disc.json"));
  CHECK(disc.dim == 2);
  CHECK(disc.box_scale == Rat(2));
  REQUIRE(disc.constraints.size() == 1);
  CHECK(disc.constraints[0].terms().size() == 5);

  const auto j = serialize_domain(disc);
  const BasicDomain again = parse_domain(j, "round-trip");
  CHECK(again.dim == disc.dim);
  CHECK(again.box_scale == disc.box_scale);
  CHECK(again.constraints == disc.constraints);
  CHECK(serialize_domain(again) == j);
}

TEST_CASE("domain parse diagnostics") {
  auto parse_text = [](const char* text) {
    std::istringstream in(text);
    return load_domain(in, "test");
  };

  CHECK_THROWS_WITH_AS(parse_text("{"), doctest::Contains("malformed JSON"), ParseError);
  CHECK_THROWS_WITH_AS(parse_text(R"({"box_scale":"1","polynomials":[]})"),
                       doctest::Contains("missing field 'dim'"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_text(R"({"dim":2,"box_scale":"1/0","polynomials":[{"terms":[]}]})"),
      doctest::Contains("zero denominator"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_text(
          R"({"dim":2,"box_scale":"1","polynomials":[{"terms":[{"coeff":"1","exponents":[1]}]}]})"),
      doctest::Contains("dimension mismatch"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_text(R"({"dim":2,"box_scale":"-3/2","polynomials":[{"terms":[]}]})"),
      doctest::Contains("positive"), ParseError);
  CHECK_THROWS_WITH_AS(
      parse_text(
          R"({"dim":1,"box_scale":"1","polynomials":[{"terms":[{"coeff":"x","exponents":[1]}]}]})"),
      doctest::Contains("decimal integer"), ParseError);
}

TEST_CASE("expression JSON round-trips structurally") {
  for (auto name : {Builtin::Sgn, Builtin::QuotientFormula, Builtin::BoundedMin, Builtin::PairingJ,
                    Builtin::PairingL})
    CHECK(structurally_equal(*expr_from_json(expr_to_json(*builtin(name))), *builtin(name)));
  Decoder decoder;
  for (unsigned long e = 0; e < 200; ++e) {
    auto f = decoder.decode(Nat(e));
    CHECK(structurally_equal(*expr_from_json(expr_to_json(*f)), *f));
  }
}

TEST_CASE("decode cache persists and reproduces identical expressions") {
  const auto path = temp_file("nonperiod_cache_test.json");
  std::filesystem::remove(path);
  {
    Decoder decoder;
    for (unsigned long e = 0; e < 1000; ++e) decoder.decode(Nat(e));
    save_decode_cache(decoder, path.string());
  }
  Decoder loaded;
  load_decode_cache(loaded, path.string());
  CHECK(loaded.memo_snapshot().size() == 1000);
  Decoder fresh;
  for (unsigned long e = 0; e < 1000; ++e)
    CHECK(structurally_equal(*loaded.decode(Nat(e)), *fresh.decode(Nat(e))));
  std::filesystem::remove(path);
}

TEST_CASE("cli golden outputs") {
  auto eps = run_cli({"epsilons", "--count", "16"});
  CHECK(eps.code == 0);
  CHECK(eps.out == "1 0 1 1 1 1 1 1 0 1 0 1 1 0 1 1\n");

  auto digits = run_cli({"alpha-digits", "--digits", "5"});
  CHECK(digits.code == 0);
  CHECK(digits.out == "0.38883\n");

  auto b = run_cli({"beta", "40", "--index", "10"});
  CHECK(b.code == 0);
  CHECK(b.out == "3/4 ± 1/(6*7^10)\n");

  auto gv = run_cli({"g", "40", "0"});
  CHECK(gv.code == 0);
  CHECK(gv.out == "2/3\n");

  auto dec = run_cli({"decode", "3"});
  CHECK(dec.code == 0);
  CHECK(dec.out == "(x_1 ∸ x_1)\n");

  auto dec_ascii = run_cli({"--ascii", "decode", "3"});
  CHECK(dec_ascii.code == 0);
  CHECK(dec_ascii.out == "(x_1 -. x_1)\n");

  auto ev = run_cli({"eval", "4", "5"});
  CHECK(ev.code == 0);
  CHECK(ev.out == "7\n");
}

TEST_CASE("cli json output is schema-stable") {
  auto eps = run_cli({"--format", "json", "epsilons", "--count", "3"});
  CHECK(eps.code == 0);
  const auto jeps = nlohmann::json::parse(eps.out);
  REQUIRE(jeps.contains("epsilons"));
  CHECK(jeps.size() == 1);
  CHECK(jeps["epsilons"] == nlohmann::json::array({1, 0, 1}));

  auto digits = run_cli({"--format", "json", "alpha-digits", "--digits", "5"});
  const auto jd = nlohmann::json::parse(digits.out);
  CHECK(jd.size() == 1);
  CHECK(jd["digits"] == "38883");

  auto vol = run_cli({"--format", "json", "volume", "--domain", fixture_path("interval.json").c_str(),
                      "--n", "4"});
  CHECK(vol.code == 0);
  const auto jv = nlohmann::json::parse(vol.out);
  CHECK(jv["volume"] == "1/2");
  CHECK(jv["decimal"] == "0.500000000000");
  CHECK(jv["unknown_count"] == 0);
  CHECK(jv["n_used"] == 4);

  auto g0 = run_cli({"--format", "json", "g", "1", "7"});
  const auto jg = nlohmann::json::parse(g0.out);
  CHECK(jg["value"] == "1");

  auto beta0 = run_cli({"--format", "json", "beta", "40", "--index", "2"});
  const auto jb = nlohmann::json::parse(beta0.out);
  CHECK(jb["value"] == "3/4");
  CHECK(jb["radius"] == "1/294");
}

TEST_CASE("cli volume text output") {
  auto vol = run_cli({"volume", "--domain", fixture_path("interval.json").c_str(), "--n", "4"});
  CHECK(vol.code == 0);
  CHECK(vol.out == "volume 1/2\ndecimal 0.500000000000\nunknown_count 0\nn_used 4\n");

  auto tol = run_cli({"volume", "--domain", fixture_path("interval.json").c_str(), "--tol", "1/100"});
  CHECK(tol.code == 0);
  CHECK(tol.out.find("n_used 512") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"epsilons"}).code == 2);                    // missing --count
  CHECK(run_cli({"eval", "abc", "1"}).code == 2);            // bad number
  CHECK(run_cli({"alpha-digits", "--digits", "0"}).code == 2);
  CHECK(run_cli({"volume", "--domain", fixture_path("interval.json").c_str()}).code == 2);
  CHECK(run_cli({"volume", "--domain", "/nonexistent.json", "--n", "4"}).code == 2);

  auto over = run_cli({"--budget-bits", "8", "eval", "10", "9"});  // 9^9 needs 29 bits
  CHECK(over.code == 3);
  CHECK(over.err.find("max_bits") != std::string::npos);

  auto ambiguous = run_cli({"alpha-digits", "--digits", "30", "--max-terms", "5"});
  CHECK(ambiguous.code == 3);

  auto noconv = run_cli({"volume", "--domain", fixture_path("disc.json").c_str(), "--tol",
                         "1/1000000", "--n0", "8", "--max-n", "16"});
  CHECK(noconv.code == 3);
  CHECK(noconv.err.find("max_n") != std::string::npos);

  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("environment variables mirror budget flags, flags win") {
  setenv("NONPERIOD_BUDGET_BITS", "8", 1);
  CHECK(run_cli({"eval", "10", "9"}).code == 3);
  CHECK(run_cli({"--budget-bits", "1048576", "eval", "10", "9"}).code == 0);
  unsetenv("NONPERIOD_BUDGET_BITS");
  CHECK(run_cli({"eval", "10", "9"}).code == 0);
}

TEST_CASE("cli decode cache file") {
  const auto path = temp_file("nonperiod_cli_cache.json");
  std::filesystem::remove(path);
  auto first = run_cli({"decode", "169", "--cache", path.string().c_str()});
  CHECK(first.code == 0);
  CHECK(std::filesystem::exists(path));
  auto second = run_cli({"decode", "169", "--cache", path.string().c_str()});
  CHECK(second.out == first.out);
  std::filesystem::remove(path);
}
