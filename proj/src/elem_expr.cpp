#include "nonperiod/elem_expr.hpp"

#include <utility>

#include "nonperiod/errors.hpp"

namespace nonperiod {

namespace {

std::size_t require_same_arity(const ExprPtr& l, const ExprPtr& r, const char* what) {
  if (!l || !r) throw Error(std::string(what) + ": null child");
  if (l->arity() != r->arity())
    throw ArityMismatch(std::string(what) + ": children of arity " + std::to_string(l->arity()) +
                        " and " + std::to_string(r->arity()));
  return l->arity();
}

}  // namespace

// -- factories --------------------------------------------------------------

ExprPtr ElemExpr::zero(std::size_t arity) {
  if (arity < 1) throw ArityMismatch("Zero: arity must be >= 1");
  return ExprPtr(new ElemExpr(ExprKind::Zero, arity, {}));
}

ExprPtr ElemExpr::succ(ExprPtr c) {
  if (!c) throw Error("Succ: null child");
  const std::size_t a = c->arity();
  return ExprPtr(new ElemExpr(ExprKind::Succ, a, {std::move(c)}));
}

ExprPtr ElemExpr::proj(std::size_t n, std::size_t i) {
  if (n < 1 || i < 1 || i > n)
    throw ArityMismatch("Proj: need 1 <= i <= n, got n=" + std::to_string(n) +
                        " i=" + std::to_string(i));
  return ExprPtr(new ElemExpr(ExprKind::Proj, n, {}, i));
}

ExprPtr ElemExpr::add(ExprPtr l, ExprPtr r) {
  const std::size_t a = require_same_arity(l, r, "Add");
  return ExprPtr(new ElemExpr(ExprKind::Add, a, {std::move(l), std::move(r)}));
}

ExprPtr ElemExpr::mul(ExprPtr l, ExprPtr r) {
  const std::size_t a = require_same_arity(l, r, "Mul");
  return ExprPtr(new ElemExpr(ExprKind::Mul, a, {std::move(l), std::move(r)}));
}

ExprPtr ElemExpr::monus(ExprPtr l, ExprPtr r) {
  const std::size_t a = require_same_arity(l, r, "Monus");
  return ExprPtr(new ElemExpr(ExprKind::Monus, a, {std::move(l), std::move(r)}));
}

ExprPtr ElemExpr::quot(ExprPtr l, ExprPtr r) {
  const std::size_t a = require_same_arity(l, r, "Quot");
  return ExprPtr(new ElemExpr(ExprKind::Quot, a, {std::move(l), std::move(r)}));
}

ExprPtr ElemExpr::pow(ExprPtr l, ExprPtr r) {
  const std::size_t a = require_same_arity(l, r, "Pow");
  return ExprPtr(new ElemExpr(ExprKind::Pow, a, {std::move(l), std::move(r)}));
}

ExprPtr ElemExpr::comp(ExprPtr f, std::vector<ExprPtr> gs) {
  if (!f) throw Error("Comp: null outer");
  if (gs.empty()) throw ArityMismatch("Comp: empty inner list");
  if (f->arity() != gs.size())
    throw ArityMismatch("Comp: outer arity " + std::to_string(f->arity()) + " != " +
                        std::to_string(gs.size()) + " inner functions");
  const std::size_t a = gs.front()->arity();
  for (const auto& g : gs)
    if (!g || g->arity() != a) throw ArityMismatch("Comp: inner functions of differing arity");
  std::vector<ExprPtr> children;
  children.reserve(gs.size() + 1);
  children.push_back(std::move(f));
  for (auto& g : gs) children.push_back(std::move(g));
  return ExprPtr(new ElemExpr(ExprKind::Comp, a, std::move(children)));
}

ExprPtr ElemExpr::bounded_sum(ExprPtr body) {
  if (!body) throw Error("BoundedSum: null body");
  if (body->arity() < 2) throw ArityMismatch("BoundedSum: body arity must be >= 2");
  const std::size_t a = body->arity() - 1;
  return ExprPtr(new ElemExpr(ExprKind::BoundedSum, a, {std::move(body)}));
}

ExprPtr ElemExpr::bounded_prod(ExprPtr body) {
  if (!body) throw Error("BoundedProd: null body");
  if (body->arity() < 2) throw ArityMismatch("BoundedProd: body arity must be >= 2");
  const std::size_t a = body->arity() - 1;
  return ExprPtr(new ElemExpr(ExprKind::BoundedProd, a, {std::move(body)}));
}

// -- evaluation -------------------------------------------------------------

namespace {

struct EvalCtx {
  const Budget& budget;
  std::uint64_t nodes = 0;

  void tick() {
    if (++nodes > budget.max_nodes)
      throw BudgetExceeded("max_nodes: evaluation passed " + std::to_string(budget.max_nodes) +
                           " steps");
  }
  const Nat& checked(const Nat& v) const {
    if (v.bit_length() > budget.max_bits)
      throw BudgetExceeded("max_bits: intermediate has " + std::to_string(v.bit_length()) +
                           " bits, cap is " + std::to_string(budget.max_bits));
    return v;
  }
  Nat checked(Nat&& v) const {
    checked(static_cast<const Nat&>(v));
    return std::move(v);
  }
};

Nat eval_node(const ElemExpr& e, std::span<const Nat> args, EvalCtx& ctx) {
  ctx.tick();
  switch (e.kind()) {
    case ExprKind::Zero:
      return Nat(0ul);
    case ExprKind::Succ: {
      Nat v = eval_node(*e.child(0), args, ctx);
      ++v;
      return ctx.checked(std::move(v));
    }
    case ExprKind::Proj:
      return args[e.proj_index() - 1];
    case ExprKind::Add:
      return ctx.checked(eval_node(*e.child(0), args, ctx) + eval_node(*e.child(1), args, ctx));
    case ExprKind::Mul:
      return ctx.checked(eval_node(*e.child(0), args, ctx) * eval_node(*e.child(1), args, ctx));
    case ExprKind::Monus:
      return monus(eval_node(*e.child(0), args, ctx), eval_node(*e.child(1), args, ctx));
    case ExprKind::Quot:
      return quot(eval_node(*e.child(0), args, ctx), eval_node(*e.child(1), args, ctx));
    case ExprKind::Pow:
      return pow_within(eval_node(*e.child(0), args, ctx), eval_node(*e.child(1), args, ctx),
                        ctx.budget.max_bits);
    case ExprKind::Comp: {
      std::vector<Nat> inner(e.child_count() - 1);
      for (std::size_t j = 1; j < e.child_count(); ++j) inner[j - 1] = eval_node(*e.child(j), args, ctx);
      return eval_node(*e.child(0), inner, ctx);
    }
    case ExprKind::BoundedSum:
    case ExprKind::BoundedProd: {
      const bool is_sum = e.kind() == ExprKind::BoundedSum;
      const Nat& limit = args[0];
      std::vector<Nat> inner(args.size() + 1);
      for (std::size_t j = 0; j < args.size(); ++j) inner[j + 1] = args[j];
      Nat acc(is_sum ? 0ul : 1ul);
      for (Nat t(0ul); t <= limit; ++t) {
        ctx.tick();
        inner[0] = t;
        Nat term = eval_node(*e.child(0), inner, ctx);
        acc = is_sum ? acc + term : acc * term;
        ctx.checked(acc);
      }
      return acc;
    }
  }
  throw Error("unreachable expression kind");
}

}  // namespace

Nat eval(const ElemExpr& expr, std::span<const Nat> args, const Budget& budget) {
  budget.validate();
  if (args.size() != expr.arity())
    throw ArityMismatch("eval: expression of arity " + std::to_string(expr.arity()) + " called with " +
                        std::to_string(args.size()) + " arguments");
  EvalCtx ctx{budget};
  for (const Nat& a : args) ctx.checked(a);
  return eval_node(expr, args, ctx);
}

Nat eval(const ExprPtr& expr, std::span<const Nat> args, const Budget& budget) {
  if (!expr) throw Error("eval: null expression");
  return eval(*expr, args, budget);
}

Nat eval1(const ExprPtr& expr, const Nat& x, const Budget& budget) {
  return eval(expr, std::span<const Nat>(&x, 1), budget);
}

// -- structure and rendering -------------------------------------------------

bool structurally_equal(const ElemExpr& a, const ElemExpr& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind() || a.arity() != b.arity()) return false;
  if (a.kind() == ExprKind::Proj && a.proj_index() != b.proj_index()) return false;
  if (a.child_count() != b.child_count()) return false;
  for (std::size_t i = 0; i < a.child_count(); ++i)
    if (!structurally_equal(*a.child(i), *b.child(i))) return false;
  return true;
}

namespace {

void render_to(const ElemExpr& e, RenderStyle style, std::string& out) {
  switch (e.kind()) {
    case ExprKind::Zero:
      out += "0";
      return;
    case ExprKind::Succ:
      out += "S(";
      render_to(*e.child(0), style, out);
      out += ")";
      return;
    case ExprKind::Proj:
      out += "x_" + std::to_string(e.proj_index());
      return;
    case ExprKind::Add:
    case ExprKind::Mul:
    case ExprKind::Monus:
    case ExprKind::Pow: {
      const char* op = e.kind() == ExprKind::Add   ? " + "
                       : e.kind() == ExprKind::Mul ? " * "
                       : e.kind() == ExprKind::Pow ? "^"
                       : (style == RenderStyle::Unicode ? " ∸ " : " -. ");
      out += "(";
      render_to(*e.child(0), style, out);
      out += op;
      render_to(*e.child(1), style, out);
      out += ")";
      return;
    }
    case ExprKind::Quot:
      out += "floor(";
      render_to(*e.child(0), style, out);
      out += "/(";
      render_to(*e.child(1), style, out);
      out += "+1))";
      return;
    case ExprKind::Comp:
      out += "comp(";
      render_to(*e.child(0), style, out);
      out += "; ";
      for (std::size_t i = 1; i < e.child_count(); ++i) {
        if (i > 1) out += ", ";
        render_to(*e.child(i), style, out);
      }
      out += ")";
      return;
    case ExprKind::BoundedSum:
    case ExprKind::BoundedProd:
      out += e.kind() == ExprKind::BoundedSum ? "bsum(" : "bprod(";
      render_to(*e.child(0), style, out);
      out += ")";
      return;
  }
}

}  // namespace

std::string render(const ElemExpr& expr, RenderStyle style) {
  std::string out;
  render_to(expr, style, out);
  return out;
}

std::string render(const ExprPtr& expr, RenderStyle style) {
  if (!expr) throw Error("render: null expression");
  return render(*expr, style);
}

}  // namespace nonperiod
