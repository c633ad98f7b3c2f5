#include "pnd/prover.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pnd/kernel.hpp"
#include "pnd/printer.hpp"

namespace pnd {

namespace {

bool is_op(const Formula& f, const char* name) { return f.is_app() && f.name() == name; }
bool is_falsity(const Formula& f) { return is_op(f, kFalsity); }
bool is_var(const Formula& f) { return f.is_atom() || f.is_schematic(); }

Formula mk2(const char* op, Formula a, Formula b) {
  return Formula::app(op, {std::move(a), std::move(b)});
}

void check_core(const Formula& f) {
  if (f.is_app() && f.name() != kImp && f.name() != kDis && f.name() != kCon &&
      f.name() != kFalsity)
    throw std::logic_error("g4ip: formula contains a non-core connective after unfolding: " +
                           f.name());
  for (const auto& a : f.args()) check_core(a);
}

Formula normalize(const Formula& f, const std::vector<DefEq>& defs) {
  Formula out = atomize_schematics(unfold(defs, f));
  check_core(out);
  return out;
}

// Context kept canonically sorted so that search order, derivations and the
// rendered output are deterministic.
using Context = std::vector<Formula>;

void ctx_insert(Context& ctx, Formula f) {
  auto it = std::lower_bound(ctx.begin(), ctx.end(), f, formula_less);
  ctx.insert(it, std::move(f));
}

Context ctx_without(const Context& ctx, std::size_t index) {
  Context out = ctx;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

bool ctx_contains(const Context& ctx, const Formula& f) {
  return std::find(ctx.begin(), ctx.end(), f) != ctx.end();
}

struct Searcher {
  std::optional<Derivation> search(const Context& ctx, const Formula& goal) {
    // Closure rules.
    for (const Formula& h : ctx)
      if (is_falsity(h))
        return Derivation{"L-False", ctx, goal, h, {}};
    if (is_var(goal) && ctx_contains(ctx, goal))
      return Derivation{"Ax", ctx, goal, std::nullopt, {}};

    // Invertible left rules, smallest principal formula first.
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula& h = ctx[i];
      if (is_op(h, kCon)) {
        Context next = ctx_without(ctx, i);
        ctx_insert(next, h.args()[0]);
        ctx_insert(next, h.args()[1]);
        return wrap1("L-Con", ctx, goal, h, search(next, goal));
      }
      if (is_op(h, kDis)) {
        Context left = ctx_without(ctx, i);
        Context right = left;
        ctx_insert(left, h.args()[0]);
        ctx_insert(right, h.args()[1]);
        auto c1 = search(left, goal);
        if (!c1) return std::nullopt; // invertible: no backtracking
        auto c2 = search(right, goal);
        if (!c2) return std::nullopt;
        return Derivation{"L-Dis", ctx, goal, h, {std::move(*c1), std::move(*c2)}};
      }
      if (is_op(h, kImp)) {
        const Formula& ant = h.args()[0];
        const Formula& suc = h.args()[1];
        if (is_falsity(ant)) {
          return wrap1("L-Imp-False", ctx, goal, h, search(ctx_without(ctx, i), goal));
        }
        if (is_var(ant) && ctx_contains(ctx, ant)) {
          Context next = ctx_without(ctx, i);
          ctx_insert(next, suc);
          return wrap1("L-Imp-Atom", ctx, goal, h, search(next, goal));
        }
        if (is_op(ant, kCon)) {
          Context next = ctx_without(ctx, i);
          ctx_insert(next, mk2(kImp, ant.args()[0], mk2(kImp, ant.args()[1], suc)));
          return wrap1("L-Imp-Con", ctx, goal, h, search(next, goal));
        }
        if (is_op(ant, kDis)) {
          Context next = ctx_without(ctx, i);
          ctx_insert(next, mk2(kImp, ant.args()[0], suc));
          ctx_insert(next, mk2(kImp, ant.args()[1], suc));
          return wrap1("L-Imp-Dis", ctx, goal, h, search(next, goal));
        }
      }
    }

    // Invertible right rules.
    if (is_op(goal, kCon)) {
      auto c1 = search(ctx, goal.args()[0]);
      if (!c1) return std::nullopt;
      auto c2 = search(ctx, goal.args()[1]);
      if (!c2) return std::nullopt;
      return Derivation{"R-Con", ctx, goal, std::nullopt, {std::move(*c1), std::move(*c2)}};
    }
    if (is_op(goal, kImp)) {
      Context next = ctx;
      ctx_insert(next, goal.args()[0]);
      return wrap1("R-Imp", ctx, goal, std::nullopt, search(next, goal.args()[1]));
    }

    // Choice points: the right disjunct split, then implication nesting.
    if (is_op(goal, kDis)) {
      if (auto c = search(ctx, goal.args()[0]))
        return Derivation{"R-Dis1", ctx, goal, std::nullopt, {std::move(*c)}};
      if (auto c = search(ctx, goal.args()[1]))
        return Derivation{"R-Dis2", ctx, goal, std::nullopt, {std::move(*c)}};
    }
    for (std::size_t i = 0; i < ctx.size(); ++i) {
      const Formula& h = ctx[i];
      if (!is_op(h, kImp) || !is_op(h.args()[0], kImp)) continue;
      const Formula& nested = h.args()[0]; // A --> B
      const Formula& suc = h.args()[1];    // C
      Context first = ctx_without(ctx, i);
      ctx_insert(first, mk2(kImp, nested.args()[1], suc)); // B --> C
      auto c1 = search(first, nested);
      if (!c1) continue;
      Context second = ctx_without(ctx, i);
      ctx_insert(second, suc);
      auto c2 = search(second, goal);
      if (!c2) continue;
      return Derivation{"L-Imp-Imp", ctx, goal, h, {std::move(*c1), std::move(*c2)}};
    }
    return std::nullopt;
  }

private:
  static std::optional<Derivation> wrap1(const char* rule, const Context& ctx,
                                         const Formula& goal, std::optional<Formula> principal,
                                         std::optional<Derivation> child) {
    if (!child) return std::nullopt;
    return Derivation{rule, ctx, goal, std::move(principal), {std::move(*child)}};
  }
};

} // namespace

Verdict g4ip(std::vector<Formula> hyps, const Formula& goal, const TheoryContext& ctx) {
  std::vector<DefEq> defs = ctx.all_defs();
  Context context;
  for (const Formula& h : hyps) ctx_insert(context, normalize(h, defs));
  Formula g = normalize(goal, defs);
  Searcher searcher;
  auto derivation = searcher.search(context, g);
  if (!derivation) return Verdict{false, std::nullopt};
  return Verdict{true, std::move(derivation)};
}

namespace {

Formula metaprop_to_formula(const MetaProp& p) {
  if (p.is_judgment()) return p.formula();
  return mk2(kImp, metaprop_to_formula(p.premise()), metaprop_to_formula(p.conclusion()));
}

} // namespace

Verdict g4ip(const MetaProp& statement, const TheoryContext& ctx) {
  RuleView view = premises_and_conclusion(statement);
  std::vector<Formula> hyps;
  hyps.reserve(view.premises.size());
  for (const MetaProp& prem : view.premises) hyps.push_back(metaprop_to_formula(prem));
  return g4ip(std::move(hyps), view.conclusion, ctx);
}

namespace {

bool same_context(Context a, Context b) {
  std::sort(a.begin(), a.end(), formula_less);
  std::sort(b.begin(), b.end(), formula_less);
  return a == b;
}

std::optional<std::size_t> find_in(const Context& ctx, const Formula& f) {
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx[i] == f) return i;
  return std::nullopt;
}

} // namespace

bool replay_derivation(const Derivation& d) {
  const Context& ctx = d.context;
  auto expect_children = [&](std::vector<std::pair<Context, Formula>> expected) {
    if (d.children.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!same_context(d.children[i].context, expected[i].first)) return false;
      if (!(d.children[i].goal == expected[i].second)) return false;
      if (!replay_derivation(d.children[i])) return false;
    }
    return true;
  };

  if (d.rule == "Ax")
    return d.children.empty() && is_var(d.goal) && ctx_contains(ctx, d.goal);
  if (d.rule == "L-False")
    return d.children.empty() && d.principal && is_falsity(*d.principal) &&
           ctx_contains(ctx, *d.principal);

  if (d.rule == "R-Con") {
    if (!is_op(d.goal, kCon)) return false;
    return expect_children({{ctx, d.goal.args()[0]}, {ctx, d.goal.args()[1]}});
  }
  if (d.rule == "R-Imp") {
    if (!is_op(d.goal, kImp)) return false;
    Context next = ctx;
    ctx_insert(next, d.goal.args()[0]);
    return expect_children({{next, d.goal.args()[1]}});
  }
  if (d.rule == "R-Dis1" || d.rule == "R-Dis2") {
    if (!is_op(d.goal, kDis)) return false;
    return expect_children({{ctx, d.goal.args()[d.rule == "R-Dis1" ? 0 : 1]}});
  }

  if (!d.principal) return false;
  auto idx = find_in(ctx, *d.principal);
  if (!idx) return false;
  Context rest = ctx_without(ctx, *idx);
  const Formula& h = *d.principal;

  if (d.rule == "L-Con") {
    if (!is_op(h, kCon)) return false;
    Context next = rest;
    ctx_insert(next, h.args()[0]);
    ctx_insert(next, h.args()[1]);
    return expect_children({{next, d.goal}});
  }
  if (d.rule == "L-Dis") {
    if (!is_op(h, kDis)) return false;
    Context left = rest, right = rest;
    ctx_insert(left, h.args()[0]);
    ctx_insert(right, h.args()[1]);
    return expect_children({{left, d.goal}, {right, d.goal}});
  }
  if (!is_op(h, kImp)) return false;
  const Formula& ant = h.args()[0];
  const Formula& suc = h.args()[1];
  if (d.rule == "L-Imp-False")
    return is_falsity(ant) && expect_children({{rest, d.goal}});
  if (d.rule == "L-Imp-Atom") {
    if (!is_var(ant) || !ctx_contains(rest, ant)) return false;
    Context next = rest;
    ctx_insert(next, suc);
    return expect_children({{next, d.goal}});
  }
  if (d.rule == "L-Imp-Con") {
    if (!is_op(ant, kCon)) return false;
    Context next = rest;
    ctx_insert(next, mk2(kImp, ant.args()[0], mk2(kImp, ant.args()[1], suc)));
    return expect_children({{next, d.goal}});
  }
  if (d.rule == "L-Imp-Dis") {
    if (!is_op(ant, kDis)) return false;
    Context next = rest;
    ctx_insert(next, mk2(kImp, ant.args()[0], suc));
    ctx_insert(next, mk2(kImp, ant.args()[1], suc));
    return expect_children({{next, d.goal}});
  }
  if (d.rule == "L-Imp-Imp") {
    if (!is_op(ant, kImp)) return false;
    Context first = rest;
    ctx_insert(first, mk2(kImp, ant.args()[1], suc));
    Context second = rest;
    ctx_insert(second, suc);
    return expect_children({{first, ant}, {second, d.goal}});
  }
  return false;
}

namespace {

void render_rec(const Derivation& d, const TheoryContext& ctx, int indent, std::ostream& os) {
  for (int i = 0; i < indent; ++i) os << ' ';
  os << '[' << d.rule << "] ";
  for (std::size_t i = 0; i < d.context.size(); ++i) {
    if (i) os << ", ";
    os << pretty(d.context[i], ctx);
  }
  if (!d.context.empty()) os << ' ';
  os << "|- " << pretty(d.goal, ctx) << '\n';
  for (const Derivation& c : d.children) render_rec(c, ctx, indent + 2, os);
}

} // namespace

std::string render_derivation(const Derivation& d, const TheoryContext& ctx) {
  std::ostringstream os;
  render_rec(d, ctx, 0, os);
  return os.str();
}

// ---------------------------------------------------------------------------
// Truth tables.

namespace {

void collect_vars(const Formula& f, std::vector<std::string>& out) {
  collect_variable_names(f, out);
}

void collect_vars(const MetaProp& p, std::vector<std::string>& out) {
  if (p.is_judgment()) {
    collect_vars(p.formula(), out);
  } else {
    collect_vars(p.premise(), out);
    collect_vars(p.conclusion(), out);
  }
}

bool eval(const Formula& f, const std::map<std::string, bool>& val) {
  if (is_var(f)) return val.at(f.name());
  if (is_op(f, kFalsity)) return false;
  if (is_op(f, kImp)) return !eval(f.args()[0], val) || eval(f.args()[1], val);
  if (is_op(f, kDis)) return eval(f.args()[0], val) || eval(f.args()[1], val);
  if (is_op(f, kCon)) return eval(f.args()[0], val) && eval(f.args()[1], val);
  throw std::logic_error("truth table: non-core connective after unfolding: " + f.name());
}

std::vector<std::string> table_vars(const Formula& f) {
  std::vector<std::string> vars;
  collect_vars(f, vars);
  std::sort(vars.begin(), vars.end());
  if (vars.size() > static_cast<std::size_t>(kMaxTruthTableAtoms))
    throw TooManyAtoms(vars.size());
  return vars;
}

std::map<std::string, bool> valuation(const std::vector<std::string>& vars, std::uint32_t row) {
  std::map<std::string, bool> val;
  for (std::size_t j = 0; j < vars.size(); ++j)
    val[vars[j]] = ((row >> (vars.size() - 1 - j)) & 1u) == 0;
  return val;
}

} // namespace

bool truth_table_valid(const Formula& f, const TheoryContext& ctx) {
  Formula g = atomize_schematics(unfold(ctx.all_defs(), f));
  std::vector<std::string> vars = table_vars(g);
  std::uint32_t rows = 1u << vars.size();
  for (std::uint32_t r = 0; r < rows; ++r)
    if (!eval(g, valuation(vars, r))) return false;
  return true;
}

bool truth_table_valid(const MetaProp& p, const TheoryContext& ctx) {
  return truth_table_valid(metaprop_to_formula(p), ctx);
}

std::string truth_table_text(const Formula& f, const TheoryContext& ctx) {
  Formula g = atomize_schematics(unfold(ctx.all_defs(), f));
  std::vector<std::string> vars = table_vars(g);
  std::ostringstream os;
  for (const auto& v : vars) os << v << ' ';
  os << "| " << pretty(f, ctx) << '\n';
  bool valid = true;
  std::uint32_t rows = 1u << vars.size();
  for (std::uint32_t r = 0; r < rows; ++r) {
    auto val = valuation(vars, r);
    for (const auto& v : vars) os << (val[v] ? 'T' : 'F') << ' ';
    bool res = eval(g, val);
    valid = valid && res;
    os << "| " << (res ? 'T' : 'F') << '\n';
  }
  os << (valid ? "valid" : "invalid") << '\n';
  return os.str();
}

std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atoms,
                                        std::size_t max_size) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  if (max_size >= 1) {
    for (const auto& a : atoms) by_size[1].push_back(Formula::atom(a));
    by_size[1].push_back(Formula::app(kFalsity, {}));
  }
  static const char* ops[] = {kImp, kDis, kCon};
  for (std::size_t s = 2; s <= max_size; ++s) {
    for (const char* op : ops) {
      for (std::size_t l = 1; l + 2 <= s; ++l) {
        std::size_t r = s - 1 - l;
        for (const Formula& lf : by_size[l])
          for (const Formula& rf : by_size[r]) by_size[s].push_back(mk2(op, lf, rf));
      }
    }
  }
  std::vector<Formula> out;
  for (std::size_t s = 1; s <= max_size; ++s)
    out.insert(out.end(), by_size[s].begin(), by_size[s].end());
  return out;
}

} // namespace pnd
