#include "nonperiod/builtins.hpp"

#include "nonperiod/errors.hpp"

namespace nonperiod {

namespace {

using E = ElemExpr;

ExprPtr one(std::size_t arity) { return E::succ(E::zero(arity)); }

// 1 ∸ (1 ∸ e), pointwise on e's arity
ExprPtr sgn_of(const ExprPtr& e) {
  auto o = one(e->arity());
  return E::monus(o, E::monus(o, e));
}

ExprPtr sgn_expr() { return sgn_of(E::proj(1, 1)); }

// triangle(x) = Σ_{t<=x} t = x(x+1)/2, arity 1
ExprPtr triangle_expr() { return E::bounded_sum(E::proj(2, 1)); }

ExprPtr gt_expr() { return sgn_of(E::monus(E::proj(2, 1), E::proj(2, 2))); }
ExprPtr lt_expr() { return sgn_of(E::monus(E::proj(2, 2), E::proj(2, 1))); }
ExprPtr geq_expr() { return E::monus(one(2), lt_expr()); }
ExprPtr leq_expr() { return E::monus(one(2), gt_expr()); }

// (Σ_{i<=x} f_>=(x, i·(y+1))) ∸ 1
ExprPtr quotient_formula_expr() {
  auto body = E::comp(geq_expr(), {E::proj(3, 2), E::mul(E::proj(3, 1), E::succ(E::proj(3, 3)))});
  return E::monus(E::bounded_sum(std::move(body)), one(2));
}

// J(x,y) = triangle(x+y) + y
ExprPtr pairing_j_expr() {
  auto sum_xy = E::add(E::proj(2, 1), E::proj(2, 2));
  return E::add(E::comp(triangle_expr(), {std::move(sum_xy)}), E::proj(2, 2));
}

// w(z) = (Σ_{t<=z} f_>=(z, triangle(t))) ∸ 1, the largest w with w(w+1)/2 <= z
ExprPtr triangle_floor_expr() {
  auto body = E::comp(geq_expr(), {E::proj(2, 2), E::comp(triangle_expr(), {E::proj(2, 1)})});
  return E::monus(E::bounded_sum(std::move(body)), one(1));
}

// R(z) = z ∸ triangle(w(z))
ExprPtr pairing_r_expr() {
  auto w = triangle_floor_expr();
  return E::monus(E::proj(1, 1), E::comp(triangle_expr(), {std::move(w)}));
}

// L(z) = w(z) ∸ R(z)
ExprPtr pairing_l_expr() { return E::monus(triangle_floor_expr(), pairing_r_expr()); }

}  // namespace

ExprPtr bounded_minimizer(const ExprPtr& f) {
  if (!f) throw Error("bounded_minimizer: null function");
  const std::size_t k = f->arity();

  // P(u, y...) = Π_{s<=u} sgn(f(s, y...)), arity k
  std::vector<ExprPtr> f_args;
  f_args.push_back(E::proj(k + 1, 1));
  for (std::size_t j = 3; j <= k + 1; ++j) f_args.push_back(E::proj(k + 1, j));
  auto prod_body = sgn_of(E::comp(f, std::move(f_args)));
  auto no_zero_upto = E::bounded_prod(std::move(prod_body));

  // term(t, n, y...) = sgn(t) · P(t ∸ 1, y...), arity k+1
  std::vector<ExprPtr> p_args;
  p_args.push_back(E::monus(E::proj(k + 1, 1), one(k + 1)));
  for (std::size_t j = 3; j <= k + 1; ++j) p_args.push_back(E::proj(k + 1, j));
  auto term = E::mul(sgn_of(E::proj(k + 1, 1)), E::comp(std::move(no_zero_upto), std::move(p_args)));

  return E::bounded_sum(std::move(term));
}

ExprPtr builtin(Builtin name) {
  switch (name) {
    case Builtin::Sgn:
      return sgn_expr();
    case Builtin::Gt:
      return gt_expr();
    case Builtin::Geq:
      return geq_expr();
    case Builtin::Lt:
      return lt_expr();
    case Builtin::Leq:
      return leq_expr();
    case Builtin::QuotientFormula:
      return quotient_formula_expr();
    case Builtin::BoundedMin:
      return bounded_minimizer(E::monus(E::proj(2, 2), E::proj(2, 1)));
    case Builtin::PairingJ:
      return pairing_j_expr();
    case Builtin::PairingL:
      return pairing_l_expr();
    case Builtin::PairingR:
      return pairing_r_expr();
  }
  throw Error("unknown builtin");
}

}  // namespace nonperiod
