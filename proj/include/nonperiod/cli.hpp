#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace nonperiod::cli {

struct Config {
  std::uint64_t budget_bits = std::uint64_t{1} << 20;
  std::uint64_t budget_nodes = 10'000'000;
  std::optional<std::string> decode_cache_path;
  enum class Format { Text, Json } output_format = Format::Text;
  bool ascii = false;
};

// Full command-line front end. Exit status: 0 success, 2 usage or input
// errors, 3 exhausted budgets (BudgetExceeded, AmbiguousAtBudget,
// NoConvergenceAtBudget).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nonperiod::cli
