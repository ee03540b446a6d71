#pragma once

#include <optional>
#include <vector>

#include "nonperiod/budget.hpp"
#include "nonperiod/elem_expr.hpp"
#include "nonperiod/enumeration.hpp"
#include "nonperiod/rat.hpp"

namespace nonperiod {

// A certified approximation: the represented real lies in the open
// interval (value - radius, value + radius).
struct RealApprox {
  Rat value;
  Rat radius;
};

// The sequence g_e with fastness enforced lazily. Inspected values are
// cached; truncation() is the least index n0 (among the inspected prefix)
// with |g(n0) - g(n0+1)| >= 7^{-(n0+1)}, if one was found.
class FastSeq {
 public:
  explicit FastSeq(Code source) : source_(std::move(source)) {}

  const Code& source() const { return source_; }
  const std::vector<Rat>& inspected() const { return values_; }
  std::optional<std::size_t> truncation() const { return truncation_; }

  // ḡ(n): g(n) when no index i < n violates fastness, else g(n0) for the
  // least violating n0 < n. Exact comparisons throughout.
  Rat enforced(std::size_t n, const Budget& budget);

 private:
  void extend_to(std::size_t n, const Budget& budget);

  Code source_;
  std::vector<Rat> values_;
  std::optional<std::size_t> truncation_;
};

// One-shot versions over a fresh FastSeq.
Rat enforce(const Code& e, const Nat& n, const Budget& budget);

// β_e approximant at index n: value ḡ_e(n), radius 1/(6·7^n).
RealApprox beta(const Code& e, const Nat& n, const Budget& budget);

// Re-indexed sequence from a modulus-style triple (a, b, c) of arity-1
// expressions: x ↦ a(c(8^{x+1})) / (b(c(8^{x+1})) + 1). When (a, b, c)
// certify a real α with error < 1/k for inputs >= c(k), the result
// converges fast to α.
Rat reindex_fast(const ExprPtr& a, const ExprPtr& b, const ExprPtr& c, const Nat& x,
                 const Budget& budget);

}  // namespace nonperiod
