#include "nonperiod/enumeration.hpp"

#include "nonperiod/pairing.hpp"

namespace nonperiod {

ExprPtr Decoder::decode(const Code& e) const {
  const bool cacheable = e.fits_u64() && e.to_u64() < memo_limit_;
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(e.to_u64());
    if (it != memo_.end()) return it->second;
  }
  ExprPtr expr = decode_uncached(e);
  if (cacheable) {
    std::lock_guard<std::mutex> lock(mutex_);
    memo_.emplace(e.to_u64(), expr);
  }
  return expr;
}

ExprPtr Decoder::decode_uncached(const Code& e) const {
  const Nat c = cantor_left(e);
  const Nat k = cantor_right(e);
  if (c.is_zero()) return ElemExpr::proj(1, 1);
  if (c == Nat(1ul)) return ElemExpr::succ(decode(k));
  if (c == Nat(2ul)) return ElemExpr::monus(decode(cantor_left(k)), decode(cantor_right(k)));
  if (c == Nat(3ul)) return ElemExpr::quot(decode(cantor_left(k)), decode(cantor_right(k)));
  if (c == Nat(4ul)) return ElemExpr::pow(decode(cantor_left(k)), decode(cantor_right(k)));
  return ElemExpr::zero(1);
}

std::vector<std::pair<std::uint64_t, ExprPtr>> Decoder::memo_snapshot() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return {memo_.begin(), memo_.end()};
}

void Decoder::memo_insert(std::uint64_t e, ExprPtr expr) const {
  if (e >= memo_limit_ || !expr) return;
  std::lock_guard<std::mutex> lock(mutex_);
  memo_.emplace(e, std::move(expr));
}

namespace {
const Decoder& shared_decoder() {
  static Decoder d;
  return d;
}
}  // namespace

ExprPtr decode(const Code& e) { return shared_decoder().decode(e); }

Rat g(const Code& e, const Nat& n, const Budget& budget) {
  const Nat a = eval1(decode(cantor_left(e)), n, budget);
  const Nat b = eval1(decode(cantor_right(e)), n, budget);
  return Rat(a.raw(), Int(b.raw() + 1));
}

}  // namespace nonperiod
