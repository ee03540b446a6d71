#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "nonperiod/budget.hpp"
#include "nonperiod/elem_expr.hpp"
#include "nonperiod/nat.hpp"
#include "nonperiod/rat.hpp"

namespace nonperiod {

// Every natural number is a valid code; the decoder is total.
using Code = Nat;

// Code-to-expression decoder for the one-variable enumeration f_e.
// Dispatch on c = L(e), k = R(e):
//   c = 0 -> x        c = 1 -> S(f_k)           c = 2 -> f_{L(k)} ∸ f_{R(k)}
//   c = 3 -> ⌊f_{L(k)} / (f_{R(k)}+1)⌋          c = 4 -> f_{L(k)} ^ f_{R(k)}
//   c >= 5 -> 0
// Recursion is well-founded: R(e) < e whenever L(e) >= 1, and L(k), R(k) <= k.
//
// Codes below memo_limit are cached; the cache is guarded for concurrent
// use and never changes the decoded structure.
class Decoder {
 public:
  explicit Decoder(std::uint64_t memo_limit = 10'000) : memo_limit_(memo_limit) {}

  ExprPtr decode(const Code& e) const;

  std::uint64_t memo_limit() const { return memo_limit_; }
  std::vector<std::pair<std::uint64_t, ExprPtr>> memo_snapshot() const;
  // Pre-seeds the cache (used when loading a persisted table). Entries at or
  // above memo_limit are ignored.
  void memo_insert(std::uint64_t e, ExprPtr expr) const;

 private:
  ExprPtr decode_uncached(const Code& e) const;

  std::uint64_t memo_limit_;
  mutable std::mutex mutex_;
  mutable std::map<std::uint64_t, ExprPtr> memo_;
};

// Shared default decoder.
ExprPtr decode(const Code& e);

// g_e(n) = f_{L(e)}(n) / (f_{R(e)}(n) + 1), exact.
Rat g(const Code& e, const Nat& n, const Budget& budget);

}  // namespace nonperiod
