#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nonperiod/budget.hpp"
#include "nonperiod/cauchy.hpp"
#include "nonperiod/diagonal.hpp"
#include "nonperiod/domain_io.hpp"
#include "nonperiod/elem_expr.hpp"
#include "nonperiod/enumeration.hpp"
#include "nonperiod/errors.hpp"
#include "nonperiod/volume.hpp"

namespace py = pybind11;
using namespace nonperiod;

namespace {

Budget make_budget(std::uint64_t bits, std::uint64_t nodes) { return Budget{bits, nodes}; }

BasicDomain domain_from_json(const std::string& text) {
  std::istringstream in(text);
  return load_domain(in, "domain");
}

py::int_ nat_to_py(const Nat& v) { return py::int_(py::str(v.str())); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact elementary-function enumeration, the diagonal computable real, and "
            "certified semi-algebraic volumes";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
  py::register_exception<AmbiguousAtBudget>(m, "AmbiguousAtBudget");
  py::register_exception<NoConvergenceAtBudget>(m, "NoConvergenceAtBudget");
  py::register_exception<ParseError>(m, "ParseError");

  m.def(
      "decode",
      [](unsigned long long e) { return render(decode(Nat(static_cast<unsigned long>(e)))); },
      py::arg("e"), "Rendered expression for code e.");

  m.def(
      "eval",
      [](unsigned long long e, unsigned long long x, std::uint64_t budget_bits,
         std::uint64_t budget_nodes) {
        const Nat value = eval1(decode(Nat(static_cast<unsigned long>(e))),
                                Nat(static_cast<unsigned long>(x)),
                                make_budget(budget_bits, budget_nodes));
        return nat_to_py(value);
      },
      py::arg("e"), py::arg("x"), py::arg("budget_bits") = Budget{}.max_bits,
      py::arg("budget_nodes") = Budget{}.max_nodes, "f_e(x), exactly.");

  m.def(
      "g",
      [](unsigned long long e, unsigned long long n, std::uint64_t budget_bits,
         std::uint64_t budget_nodes) {
        return g(Nat(static_cast<unsigned long>(e)), Nat(static_cast<unsigned long>(n)),
                 make_budget(budget_bits, budget_nodes))
            .str();
      },
      py::arg("e"), py::arg("n"), py::arg("budget_bits") = Budget{}.max_bits,
      py::arg("budget_nodes") = Budget{}.max_nodes,
      "g_e(n) as an exact fraction string \"p/q\".");

  m.def(
      "beta",
      [](unsigned long long e, unsigned long long n, std::uint64_t budget_bits,
         std::uint64_t budget_nodes) {
        const RealApprox approx = beta(Nat(static_cast<unsigned long>(e)),
                                       Nat(static_cast<unsigned long>(n)),
                                       make_budget(budget_bits, budget_nodes));
        return py::make_tuple(approx.value.str(), approx.radius.str());
      },
      py::arg("e"), py::arg("n"), py::arg("budget_bits") = Budget{}.max_bits,
      py::arg("budget_nodes") = Budget{}.max_nodes,
      "(value, radius) of the certified approximation of the e-th real.");

  m.def(
      "enforce",
      [](unsigned long long e, unsigned long long n, std::uint64_t budget_bits,
         std::uint64_t budget_nodes) {
        return enforce(Nat(static_cast<unsigned long>(e)), Nat(static_cast<unsigned long>(n)),
                       make_budget(budget_bits, budget_nodes))
            .str();
      },
      py::arg("e"), py::arg("n"), py::arg("budget_bits") = Budget{}.max_bits,
      py::arg("budget_nodes") = Budget{}.max_nodes, "ḡ_e(n) as an exact fraction string.");

  m.def(
      "epsilons",
      [](std::size_t count, std::uint64_t budget_bits, std::uint64_t budget_nodes) {
        const auto bits = epsilons(count, make_budget(budget_bits, budget_nodes));
        return std::vector<int>(bits.begin(), bits.end());
      },
      py::arg("count"), py::arg("budget_bits") = Budget{}.max_bits,
      py::arg("budget_nodes") = Budget{}.max_nodes, "ε_1..ε_count of the diagonal construction.");

  m.def(
      "alpha_digits",
      [](std::size_t count, std::uint64_t budget_bits, std::uint64_t budget_nodes) {
        return half_alpha_digits(count, make_budget(budget_bits, budget_nodes));
      },
      py::arg("count"), py::arg("budget_bits") = Budget{}.max_bits,
      py::arg("budget_nodes") = Budget{}.max_nodes,
      "First `count` certified decimal digits of the constructed real over two.");

  m.def(
      "alpha_interval",
      [](std::size_t n, std::uint64_t budget_bits, std::uint64_t budget_nodes) {
        const auto [lo, hi] = alpha_interval(n, make_budget(budget_bits, budget_nodes));
        return py::make_tuple(lo.str(), hi.str());
      },
      py::arg("n"), py::arg("budget_bits") = Budget{}.max_bits,
      py::arg("budget_nodes") = Budget{}.max_nodes, "Exact enclosure [α_n, α_n + 3^-n].");

  m.def(
      "riemann_volume",
      [](const std::string& domain_json, std::uint64_t n, std::uint32_t max_depth,
         unsigned threads) {
        const VolumeResult res = riemann_volume(domain_from_json(domain_json), n, max_depth, threads);
        py::dict d;
        d["volume"] = res.volume.str();
        d["decimal"] = res.volume.decimal(12);
        d["contained"] = res.contained;
        d["unknown_count"] = res.unknown;
        return d;
      },
      py::arg("domain_json"), py::arg("n"), py::arg("max_depth") = 6, py::arg("threads") = 0,
      "Inner Riemann sum on the n-grid; domain given as JSON text.");

  m.def(
      "approximate_volume",
      [](const std::string& domain_json, const std::string& tol, std::uint64_t n0,
         std::uint64_t max_n, std::uint32_t max_depth, unsigned threads) {
        const ApproxResult res = approximate_volume(domain_from_json(domain_json),
                                                    Rat::from_string(tol), n0, max_n, max_depth,
                                                    threads);
        py::dict d;
        d["value"] = res.value.str();
        d["decimal"] = res.value.decimal(12);
        d["n_used"] = res.n_used;
        d["unknown_count"] = res.unknown;
        return d;
      },
      py::arg("domain_json"), py::arg("tol"), py::arg("n0") = 16, py::arg("max_n") = 4096,
      py::arg("max_depth") = 6, py::arg("threads") = 0,
      "Doubling-schedule volume approximation to tolerance tol (\"p/q\").");
}
