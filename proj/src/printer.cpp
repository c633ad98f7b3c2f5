#include "pnd/printer.hpp"

#include <stdexcept>

namespace pnd {

namespace {

// min_prec: the loosest precedence allowed here without parentheses.
std::string render(const Formula& f, const TheoryContext& ctx, int min_prec) {
  if (f.is_atom() || f.is_schematic()) return f.name();

  const ConnectiveDecl* decl = ctx.find_connective(f.name());
  if (!decl || !decl->mixfix)
    throw std::logic_error("cannot print constant without notation: " + f.name());
  const MixfixDecl& mx = *decl->mixfix;

  std::string out;
  int prec = mx.precedence;
  switch (mx.kind) {
    case MixfixKind::Nullary:
      return mx.symbol;
    case MixfixKind::Prefix:
      out = mx.symbol + render(f.args()[0], ctx, prec);
      break;
    case MixfixKind::Infixr:
      out = render(f.args()[0], ctx, prec + 1) + " " + mx.symbol + " " +
            render(f.args()[1], ctx, prec);
      break;
    case MixfixKind::Infixl:
      out = render(f.args()[0], ctx, prec) + " " + mx.symbol + " " +
            render(f.args()[1], ctx, prec + 1);
      break;
  }
  if (prec < min_prec) return "(" + out + ")";
  return out;
}

} // namespace

std::string pretty(const Formula& f, const TheoryContext& ctx) {
  return render(f, ctx, 0);
}

std::string pretty(const MetaProp& p, const TheoryContext& ctx) {
  // ==> binds looser than every object operator and associates right;
  // meta-implication premises need parentheses.
  if (p.is_judgment()) return pretty(p.formula(), ctx);
  std::string lhs = p.premise().is_judgment() ? pretty(p.premise().formula(), ctx)
                                              : "(" + pretty(p.premise(), ctx) + ")";
  return lhs + " ==> " + pretty(p.conclusion(), ctx);
}

} // namespace pnd
