#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nonperiod/budget.hpp"
#include "nonperiod/rat.hpp"

namespace nonperiod {

// State of the diagonal construction after n steps:
//   alpha = Σ_{i=1..n} 2·ε_i·3^{-i}, exactly; the limit lies in
//   [alpha, alpha + 3^{-n}].
struct DiagonalState {
  std::size_t n = 0;
  std::vector<std::uint8_t> epsilons;  // ε_1..ε_n
  Rat alpha;
};

// One diagonal step: ε_{n+1} = 0 if ḡ_n(n) > α_n + 1/(2·3^n), else 1.
// The comparison is exact; on BudgetExceeded no bit is guessed.
DiagonalState step(const DiagonalState& state, const Budget& budget);

// ε_1..ε_count by repeated stepping.
std::vector<std::uint8_t> epsilons(std::size_t count, const Budget& budget);

// Exact enclosure [α_n, α_n + 3^{-n}] of the limit.
std::pair<Rat, Rat> alpha_interval(std::size_t n, const Budget& budget);

// First `count` decimal digits of α/2 = Σ ε_i·3^{-i}, each certified by the
// enclosure [S_N, S_N + 3^{-N}/2]: terms are added until the whole enclosure
// agrees on the digits. max_terms = 0 selects the default 4·count + 16;
// throws AmbiguousAtBudget if the enclosure still straddles a decimal
// boundary at that many terms.
std::string half_alpha_digits(std::size_t count, const Budget& budget, std::size_t max_terms = 0);

}  // namespace nonperiod
