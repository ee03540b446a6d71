#include "nonperiod/cauchy.hpp"

#include "nonperiod/errors.hpp"

namespace nonperiod {

namespace {

std::size_t index_as_size(const Nat& n, const Budget& budget) {
  // Enforcement scans every index up to n, so anything past max_nodes can
  // never complete within budget anyway.
  if (!n.fits_u64() || n.to_u64() > budget.max_nodes)
    throw BudgetExceeded("max_nodes: sequence index " + n.str() + " out of reach");
  return static_cast<std::size_t>(n.to_u64());
}

}  // namespace

void FastSeq::extend_to(std::size_t n, const Budget& budget) {
  while (values_.size() <= n) {
    const std::size_t i = values_.size();
    values_.push_back(g(source_, Nat(static_cast<unsigned long>(i)), budget));
    if (i >= 1 && !truncation_.has_value()) {
      const Rat gap = abs(values_[i] - values_[i - 1]);
      const Rat bound(Nat(1ul), pow_u(Nat(7ul), i));  // 7^{-i} for the pair (i-1, i)
      if (gap >= bound) truncation_ = i - 1;
    }
  }
}

Rat FastSeq::enforced(std::size_t n, const Budget& budget) {
  extend_to(n, budget);
  if (truncation_.has_value() && *truncation_ < n) return values_[*truncation_];
  return values_[n];
}

Rat enforce(const Code& e, const Nat& n, const Budget& budget) {
  FastSeq seq(e);
  return seq.enforced(index_as_size(n, budget), budget);
}

RealApprox beta(const Code& e, const Nat& n, const Budget& budget) {
  const std::size_t idx = index_as_size(n, budget);
  FastSeq seq(e);
  Rat value = seq.enforced(idx, budget);
  Rat radius(Nat(1ul), Nat(6ul) * pow_u(Nat(7ul), idx));
  return RealApprox{std::move(value), std::move(radius)};
}

Rat reindex_fast(const ExprPtr& a, const ExprPtr& b, const ExprPtr& c, const Nat& x,
                 const Budget& budget) {
  if (!a || !b || !c || a->arity() != 1 || b->arity() != 1 || c->arity() != 1)
    throw ArityMismatch("reindex_fast: a, b, c must have arity 1");
  const Nat exponent = x + Nat(1ul);
  // 8^{x+1} has 3(x+1)+1 bits; refuse before materializing.
  if (!exponent.fits_u64() || 3 * exponent.to_u64() >= budget.max_bits)
    throw BudgetExceeded("max_bits: 8^" + exponent.str() + " exceeds the bit cap");
  const Nat m = pow_u(Nat(8ul), exponent.to_u64());
  const Nat cm = eval1(c, m, budget);
  const Nat num = eval1(a, cm, budget);
  const Nat den = eval1(b, cm, budget);
  return Rat(num.raw(), Int(den.raw() + 1));
}

}  // namespace nonperiod
