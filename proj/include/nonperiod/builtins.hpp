#pragma once

#include "nonperiod/elem_expr.hpp"

namespace nonperiod {

enum class Builtin {
  Sgn,              // sgn(x) = 1 ∸ (1 ∸ x)
  Gt,               // f_>(x,y) = sgn(x ∸ y)
  Geq,              // f_>=
  Lt,               // f_<
  Leq,              // f_<=
  QuotientFormula,  // (Σ_{i<=x} f_>=(x, i(y+1))) ∸ 1, the summation form of ⌊x/(y+1)⌋
  BoundedMin,       // the minimizer scheme at f(t,y) = y ∸ t; denotes min(n, y)
  PairingJ,         // J(x,y) = (x+y)(x+y+1)/2 + y
  PairingL,
  PairingR,
};

// Derived combinators assembled from the base constructors only (initial
// functions, +, ×, ∸, composition, bounded sum/product — no Quot/Pow nodes).
ExprPtr builtin(Builtin name);

// The bounded-minimizer scheme: for f of arity k >= 1, returns g of arity k
// with g(n, y_2..y_k) = the least t <= n such that f(t, y_2..y_k) = 0, and
// n when no such t exists.
ExprPtr bounded_minimizer(const ExprPtr& f);

}  // namespace nonperiod
