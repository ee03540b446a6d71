#pragma once

#include <cstdint>

#include "nonperiod/errors.hpp"

namespace nonperiod {

// Resource caps for exact evaluation. Budgets never change a computed
// value; they only decide whether the computation errors out instead.
struct Budget {
  std::uint64_t max_bits = std::uint64_t{1} << 20;  // bit-length cap per intermediate
  std::uint64_t max_nodes = 10'000'000;             // evaluation step cap

  void validate() const {
    if (max_bits == 0 || max_nodes == 0) throw Error("budget caps must be positive");
  }
};

}  // namespace nonperiod
