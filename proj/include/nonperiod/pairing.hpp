#pragma once

#include "nonperiod/nat.hpp"

namespace nonperiod {

// Cantor pairing J(x, y) = (x+y)(x+y+1)/2 + y and its inverses L, R.
// These are the direct arithmetic versions used by the enumeration
// decoder; the expression-level counterparts live in builtins.

inline Nat cantor_join(const Nat& x, const Nat& y) {
  Int s = x.raw() + y.raw();
  return Nat(Int(s * (s + 1) / 2 + y.raw()));
}

// Largest w with w(w+1)/2 <= z, via exact integer square root.
inline Nat triangle_floor(const Nat& z) {
  Int t;
  Int arg = 8 * z.raw() + 1;
  mpz_sqrt(t.get_mpz_t(), arg.get_mpz_t());
  Int w = (t - 1) / 2;
  // guard against any off-by-one at perfect squares
  while ((w + 1) * (w + 2) / 2 <= z.raw()) w += 1;
  while (w > 0 && w * (w + 1) / 2 > z.raw()) w -= 1;
  return Nat(w);
}

inline Nat cantor_right(const Nat& z) {
  Int w = triangle_floor(z).raw();
  return Nat(Int(z.raw() - w * (w + 1) / 2));
}

inline Nat cantor_left(const Nat& z) {
  Int w = triangle_floor(z).raw();
  Int r = z.raw() - w * (w + 1) / 2;
  return Nat(Int(w - r));
}

}  // namespace nonperiod
