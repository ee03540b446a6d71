#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "nonperiod/budget.hpp"
#include "nonperiod/nat.hpp"

namespace nonperiod {

enum class ExprKind {
  Zero,
  Succ,
  Proj,
  Add,
  Mul,
  Monus,
  Quot,  // ⌊l / (r + 1)⌋
  Pow,   // l^r, 0^0 = 1
  Comp,
  BoundedSum,
  BoundedProd,
};

class ElemExpr;
using ExprPtr = std::shared_ptr<const ElemExpr>;

// Immutable, arity-consistent expression tree over the elementary-function
// constructors. Binary nodes act pointwise on children of equal arity;
// BoundedSum/BoundedProd bind the first argument of their body, so a body
// of arity m >= 2 yields a node of arity m - 1:
//
//   eval(BoundedSum(f), (x, a...)) = Σ_{t=0..x} eval(f, (t, x, a...))
//
// i.e. the bound variable runs up to the node's first argument, which the
// body also sees. Nodes are freely shared; decode produces DAGs.
class ElemExpr {
 public:
  ExprKind kind() const { return kind_; }
  std::size_t arity() const { return arity_; }

  // Proj fields (1-based index).
  std::size_t proj_index() const { return index_; }

  const ExprPtr& child(std::size_t i) const { return children_[i]; }
  std::size_t child_count() const { return children_.size(); }
  const std::vector<ExprPtr>& children() const { return children_; }

  static ExprPtr zero(std::size_t arity);
  static ExprPtr succ(ExprPtr c);
  static ExprPtr proj(std::size_t n, std::size_t i);
  static ExprPtr add(ExprPtr l, ExprPtr r);
  static ExprPtr mul(ExprPtr l, ExprPtr r);
  static ExprPtr monus(ExprPtr l, ExprPtr r);
  static ExprPtr quot(ExprPtr l, ExprPtr r);
  static ExprPtr pow(ExprPtr l, ExprPtr r);
  static ExprPtr comp(ExprPtr f, std::vector<ExprPtr> gs);
  static ExprPtr bounded_sum(ExprPtr body);
  static ExprPtr bounded_prod(ExprPtr body);

 private:
  ElemExpr(ExprKind kind, std::size_t arity, std::vector<ExprPtr> children, std::size_t index = 0)
      : kind_(kind), arity_(arity), index_(index), children_(std::move(children)) {}

  ExprKind kind_;
  std::size_t arity_;
  std::size_t index_;
  std::vector<ExprPtr> children_;
};

// Exact budgeted evaluation. Throws ArityMismatch when args.size() differs
// from the expression's arity, BudgetExceeded when an intermediate passes
// budget.max_bits or the step count passes budget.max_nodes.
Nat eval(const ElemExpr& expr, std::span<const Nat> args, const Budget& budget);
Nat eval(const ExprPtr& expr, std::span<const Nat> args, const Budget& budget);
Nat eval1(const ExprPtr& expr, const Nat& x, const Budget& budget);

// Deep structural comparison (kinds, arities, projection indices, children).
bool structurally_equal(const ElemExpr& a, const ElemExpr& b);

enum class RenderStyle { Unicode, Ascii };

// Canonical parenthesized rendering: Zero "0", Succ(e) "S(e)",
// Proj(n,i) "x_i", Monus "(a ∸ b)" (Ascii: "(a -. b)"),
// Quot "floor(a/(b+1))", Pow "(a^b)".
std::string render(const ElemExpr& expr, RenderStyle style = RenderStyle::Unicode);
std::string render(const ExprPtr& expr, RenderStyle style = RenderStyle::Unicode);

}  // namespace nonperiod
