#include "nonperiod/cli.hpp"

#include <filesystem>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nonperiod/budget.hpp"
#include "nonperiod/cauchy.hpp"
#include "nonperiod/decode_cache.hpp"
#include "nonperiod/diagonal.hpp"
#include "nonperiod/domain_io.hpp"
#include "nonperiod/elem_expr.hpp"
#include "nonperiod/enumeration.hpp"
#include "nonperiod/errors.hpp"
#include "nonperiod/volume.hpp"

namespace nonperiod::cli {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

Nat parse_nat_arg(const std::string& s, const char* name) {
  try {
    return Nat::from_string(s);
  } catch (const Error&) {
    throw ParseError(std::string(name) + ": expected a nonnegative integer, got '" + s + "'");
  }
}

std::size_t parse_count_arg(const std::string& s, const char* name) {
  const Nat n = parse_nat_arg(s, name);
  if (!n.fits_u64()) throw ParseError(std::string(name) + ": value too large");
  return static_cast<std::size_t>(n.to_u64());
}

void emit(const Config& cfg, std::ostream& out, const json& j, const std::string& text) {
  if (cfg.output_format == Config::Format::Json)
    out << j.dump() << "\n";
  else
    out << text << "\n";
}

struct VolumeArgs {
  std::string domain_path;
  std::string n;
  std::string tol;
  std::uint32_t max_depth = 6;
  std::string max_n = "4096";
  std::string n0 = "16";
  unsigned threads = 0;
};

void run_volume(const Config& cfg, const VolumeArgs& args, std::ostream& out) {
  const BasicDomain domain = load_domain(args.domain_path);
  if (args.n.empty() == args.tol.empty())
    throw ParseError("volume: exactly one of --n and --tol is required");

  Rat value;
  std::uint64_t n_used = 0, unknown = 0;
  if (!args.n.empty()) {
    const std::size_t n = parse_count_arg(args.n, "--n");
    if (n < 1) throw ParseError("--n: must be >= 1");
    VolumeResult res = riemann_volume(domain, n, args.max_depth, args.threads);
    value = std::move(res.volume);
    n_used = n;
    unknown = res.unknown;
  } else {
    Rat tol;
    try {
      tol = Rat::from_string(args.tol);
    } catch (const Error&) {
      throw ParseError("--tol: expected a fraction p/q, got '" + args.tol + "'");
    }
    if (!(tol > Rat(0))) throw ParseError("--tol: must be positive");
    ApproxResult res = approximate_volume(domain, tol, parse_count_arg(args.n0, "--n0"),
                                          parse_count_arg(args.max_n, "--max-n"), args.max_depth,
                                          args.threads);
    value = std::move(res.value);
    n_used = res.n_used;
    unknown = res.unknown;
  }

  const std::string frac = value.num().get_str() + "/" + value.den().get_str();
  const std::string dec = value.decimal(12);
  emit(cfg, out,
       json{{"volume", frac}, {"decimal", dec}, {"unknown_count", unknown}, {"n_used", n_used}},
       "volume " + frac + "\ndecimal " + dec + "\nunknown_count " + std::to_string(unknown) +
           "\nn_used " + std::to_string(n_used));
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact elementary-function enumeration, a diagonal computable real, "
               "and certified semi-algebraic volumes"};
  app.require_subcommand(1);

  Config cfg;
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget-bits", cfg.budget_bits, "bit-length cap for intermediates")
      ->envname("NONPERIOD_BUDGET_BITS")
      ->capture_default_str();
  app.add_option("--budget-nodes", cfg.budget_nodes, "evaluation step cap")
      ->capture_default_str();
  app.add_flag("--ascii", cfg.ascii, "ASCII-only rendering");

  std::string arg_e, arg_x, arg_n, arg_count, arg_digits;

  auto* cmd_decode = app.add_subcommand("decode", "print the expression for code e");
  cmd_decode->add_option("e", arg_e, "code")->required();
  std::string cache_path;
  cmd_decode->add_option("--cache", cache_path, "decode-cache file to load and update");

  auto* cmd_eval = app.add_subcommand("eval", "evaluate f_e(x)");
  cmd_eval->add_option("e", arg_e, "code")->required();
  cmd_eval->add_option("x", arg_x, "argument")->required();

  auto* cmd_g = app.add_subcommand("g", "exact value of the enumerated sequence g_e(n)");
  cmd_g->add_option("e", arg_e, "code")->required();
  cmd_g->add_option("n", arg_n, "index")->required();

  auto* cmd_beta = app.add_subcommand("beta", "certified approximation of the e-th real");
  cmd_beta->add_option("e", arg_e, "code")->required();
  cmd_beta->add_option("--index", arg_n, "sequence index")->required();

  auto* cmd_eps = app.add_subcommand("epsilons", "bits of the diagonal construction");
  cmd_eps->add_option("--count", arg_count, "number of bits")->required();

  auto* cmd_digits = app.add_subcommand("alpha-digits", "certified decimal digits of the diagonal real over 2");
  cmd_digits->add_option("--digits", arg_digits, "number of digits")->required();
  std::string max_terms = "0";
  cmd_digits->add_option("--max-terms", max_terms, "ternary term cap (0 = 4*digits+16)");

  VolumeArgs vol;
  auto* cmd_volume = app.add_subcommand("volume", "inner Riemann sum of a semi-algebraic domain");
  cmd_volume->add_option("--domain", vol.domain_path, "domain JSON file")->required();
  cmd_volume->add_option("--n", vol.n, "grid subdivisions per axis");
  cmd_volume->add_option("--tol", vol.tol, "target tolerance p/q (doubling schedule)");
  cmd_volume->add_option("--max-depth", vol.max_depth, "certification bisection depth")
      ->envname("NONPERIOD_MAX_DEPTH")
      ->capture_default_str();
  cmd_volume->add_option("--max-n", vol.max_n, "schedule cap")->capture_default_str();
  cmd_volume->add_option("--n0", vol.n0, "schedule start")->capture_default_str();
  cmd_volume->add_option("--threads", vol.threads, "worker threads (0 = hardware)");

  for (auto* sub : {cmd_decode, cmd_eval, cmd_g, cmd_beta, cmd_eps, cmd_digits, cmd_volume})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  cfg.output_format = format == "json" ? Config::Format::Json : Config::Format::Text;
  const Budget budget{cfg.budget_bits, cfg.budget_nodes};
  budget.validate();
  const RenderStyle style = cfg.ascii ? RenderStyle::Ascii : RenderStyle::Unicode;

  if (cmd_decode->parsed()) {
    const Nat e = parse_nat_arg(arg_e, "e");
    ExprPtr expr;
    if (!cache_path.empty()) {
      Decoder decoder;
      if (std::filesystem::exists(cache_path)) load_decode_cache(decoder, cache_path);
      expr = decoder.decode(e);
      save_decode_cache(decoder, cache_path);
    } else {
      expr = decode(e);
    }
    const std::string text = render(expr, style);
    emit(cfg, out, json{{"e", e.str()}, {"expr", render(expr, RenderStyle::Unicode)}}, text);
    return kExitOk;
  }
  if (cmd_eval->parsed()) {
    const Nat e = parse_nat_arg(arg_e, "e");
    const Nat x = parse_nat_arg(arg_x, "x");
    const Nat value = eval1(decode(e), x, budget);
    emit(cfg, out, json{{"e", e.str()}, {"x", x.str()}, {"value", value.str()}}, value.str());
    return kExitOk;
  }
  if (cmd_g->parsed()) {
    const Nat e = parse_nat_arg(arg_e, "e");
    const Nat n = parse_nat_arg(arg_n, "n");
    const Rat value = g(e, n, budget);
    emit(cfg, out, json{{"e", e.str()}, {"n", n.str()}, {"value", value.str()}}, value.str());
    return kExitOk;
  }
  if (cmd_beta->parsed()) {
    const Nat e = parse_nat_arg(arg_e, "e");
    const Nat n = parse_nat_arg(arg_n, "--index");
    const RealApprox approx = beta(e, n, budget);
    const std::string radius_sym = "1/(6*7^" + n.str() + ")";
    const char* pm = cfg.ascii ? " +/- " : " ± ";
    emit(cfg, out,
         json{{"e", e.str()}, {"n", n.str()}, {"value", approx.value.str()},
              {"radius", approx.radius.str()}},
         approx.value.str() + pm + radius_sym);
    return kExitOk;
  }
  if (cmd_eps->parsed()) {
    const std::size_t count = parse_count_arg(arg_count, "--count");
    const auto bits = epsilons(count, budget);
    json jbits = json::array();
    std::string text;
    for (std::size_t i = 0; i < bits.size(); ++i) {
      jbits.push_back(static_cast<int>(bits[i]));
      if (i) text += " ";
      text += bits[i] ? "1" : "0";
    }
    emit(cfg, out, json{{"epsilons", std::move(jbits)}}, text);
    return kExitOk;
  }
  if (cmd_digits->parsed()) {
    const std::size_t count = parse_count_arg(arg_digits, "--digits");
    if (count < 1) throw ParseError("--digits: must be >= 1");
    const std::string digits =
        half_alpha_digits(count, budget, parse_count_arg(max_terms, "--max-terms"));
    emit(cfg, out, json{{"digits", digits}}, "0." + digits);
    return kExitOk;
  }
  if (cmd_volume->parsed()) {
    run_volume(cfg, vol, out);
    return kExitOk;
  }
  err << "usage error: no subcommand\n";
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const BudgetExceeded& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const AmbiguousAtBudget& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const NoConvergenceAtBudget& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace nonperiod::cli
