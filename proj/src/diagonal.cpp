#include "nonperiod/diagonal.hpp"

#include "nonperiod/cauchy.hpp"
#include "nonperiod/errors.hpp"

namespace nonperiod {

DiagonalState step(const DiagonalState& state, const Budget& budget) {
  const std::size_t n = state.n;
  const Rat gbar = enforce(Nat(static_cast<unsigned long>(n)), Nat(static_cast<unsigned long>(n)), budget);
  const Rat threshold = state.alpha + Rat(Nat(1ul), Nat(2ul) * pow_u(Nat(3ul), n));
  const std::uint8_t eps = gbar > threshold ? 0 : 1;

  DiagonalState next;
  next.n = n + 1;
  next.epsilons = state.epsilons;
  next.epsilons.push_back(eps);
  next.alpha = state.alpha;
  if (eps) next.alpha += Rat(Nat(2ul), pow_u(Nat(3ul), n + 1));
  return next;
}

std::vector<std::uint8_t> epsilons(std::size_t count, const Budget& budget) {
  DiagonalState state;
  for (std::size_t i = 0; i < count; ++i) state = step(state, budget);
  return state.epsilons;
}

std::pair<Rat, Rat> alpha_interval(std::size_t n, const Budget& budget) {
  DiagonalState state;
  for (std::size_t i = 0; i < n; ++i) state = step(state, budget);
  Rat width(Nat(1ul), pow_u(Nat(3ul), n));
  return {state.alpha, state.alpha + width};
}

namespace {

// floor(x · 10^places) as a decimal string zero-padded to `places` digits;
// valid for 0 <= x < 1.
Int scaled_floor(const Rat& x, const Int& pow10) {
  Int q;
  Int num = x.num() * pow10;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.den().get_mpz_t());
  return q;
}

}  // namespace

std::string half_alpha_digits(std::size_t count, const Budget& budget, std::size_t max_terms) {
  if (count < 1) throw Error("half_alpha_digits: count must be >= 1");
  if (max_terms == 0) max_terms = 4 * count + 16;

  Int pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, count);

  DiagonalState state;
  Rat partial;  // S_N = Σ_{i<=N} ε_i·3^{-i}
  for (std::size_t term = 1; term <= max_terms; ++term) {
    state = step(state, budget);
    if (state.epsilons.back()) partial += Rat(Nat(1ul), pow_u(Nat(3ul), term));
    const Rat tail(Nat(1ul), Nat(2ul) * pow_u(Nat(3ul), term));  // Σ_{i>N} 3^{-i} bound
    const Int lo = scaled_floor(partial, pow10);
    const Int hi = scaled_floor(partial + tail, pow10);
    if (lo == hi) {
      std::string digits = lo.get_str();
      digits.insert(digits.begin(), count - digits.size(), '0');
      return digits;
    }
  }
  throw AmbiguousAtBudget("digit enclosure still straddles a decimal boundary after " +
                          std::to_string(max_terms) + " ternary terms");
}

}  // namespace nonperiod
