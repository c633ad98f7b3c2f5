#include "pnd/kernel.hpp"

#include <cassert>
#include <stdexcept>

namespace pnd {

namespace {

bool match_impl(const Formula& pattern, const Formula& target, Substitution& sub) {
  switch (pattern.kind()) {
    case Formula::Kind::Schematic: {
      auto it = sub.find(pattern.name());
      if (it != sub.end()) return it->second == target;
      sub.emplace(pattern.name(), target);
      return true;
    }
    case Formula::Kind::Atom:
      return target.is_atom() && target.name() == pattern.name();
    case Formula::Kind::App: {
      if (!target.is_app() || target.name() != pattern.name()) return false;
      if (target.args().size() != pattern.args().size()) return false;
      for (std::size_t i = 0; i < pattern.args().size(); ++i)
        if (!match_impl(pattern.args()[i], target.args()[i], sub)) return false;
      return true;
    }
  }
  return false;
}

bool match_impl(const MetaProp& pattern, const MetaProp& target, Substitution& sub) {
  if (pattern.is_judgment() != target.is_judgment()) return false;
  if (pattern.is_judgment()) return match_impl(pattern.formula(), target.formula(), sub);
  return match_impl(pattern.premise(), target.premise(), sub) &&
         match_impl(pattern.conclusion(), target.conclusion(), sub);
}

void collect_schematics(const Formula& f, std::vector<std::string>& out) {
  if (f.is_schematic()) {
    for (const auto& n : out)
      if (n == f.name()) return;
    out.push_back(f.name());
  }
  for (const auto& a : f.args()) collect_schematics(a, out);
}

void collect_schematics(const MetaProp& p, std::vector<std::string>& out) {
  if (p.is_judgment()) {
    collect_schematics(p.formula(), out);
  } else {
    collect_schematics(p.premise(), out);
    collect_schematics(p.conclusion(), out);
  }
}

} // namespace

std::optional<Substitution> match(const Formula& pattern, const Formula& target,
                                  Substitution seed) {
  if (contains_schematic(target)) throw std::logic_error("match: target is not ground");
  if (!match_impl(pattern, target, seed)) return std::nullopt;
  assert(apply_subst(seed, pattern) == target);
  return seed;
}

std::optional<Substitution> match(const MetaProp& pattern, const MetaProp& target,
                                  Substitution seed) {
  if (contains_schematic(target)) throw std::logic_error("match: target is not ground");
  if (!match_impl(pattern, target, seed)) return std::nullopt;
  assert(apply_subst(seed, pattern) == target);
  return seed;
}

namespace {

// Instantiated premise -> new goal: the premise's own hypothetical premises
// join the inherited hypotheses.
Goal goal_from_premise(const Goal& base, const MetaProp& premise) {
  RuleView view = premises_and_conclusion(premise);
  Goal g;
  g.hyps = base.hyps;
  g.hyps.insert(g.hyps.end(), view.premises.begin(), view.premises.end());
  g.concl = view.conclusion;
  return g;
}

} // namespace

std::optional<std::vector<Goal>> apply_rule_intro(const MetaProp& rule, const Goal& goal) {
  RuleView view = premises_and_conclusion(rule);
  auto sub = match(view.conclusion, goal.concl, {});
  if (!sub) return std::nullopt;
  std::vector<std::string> schematics;
  collect_schematics(rule, schematics);
  for (const auto& s : schematics)
    if (!sub->count(s)) return std::nullopt; // premise-only schematic left free
  std::vector<Goal> out;
  out.reserve(view.premises.size());
  for (const auto& prem : view.premises)
    out.push_back(goal_from_premise(goal, apply_subst(*sub, prem)));
  return out;
}

std::optional<std::vector<Goal>> apply_rule_elim(const MetaProp& rule,
                                                 std::span<const MetaProp> chained,
                                                 const Goal& goal) {
  if (chained.empty()) throw std::logic_error("apply_rule_elim: no chained facts");
  RuleView view = premises_and_conclusion(rule);
  if (chained.size() > view.premises.size()) return std::nullopt;
  Substitution sub;
  for (std::size_t i = 0; i < chained.size(); ++i) {
    auto next = match(view.premises[i], chained[i], std::move(sub));
    if (!next) return std::nullopt;
    sub = std::move(*next);
  }
  auto final_sub = match(view.conclusion, goal.concl, std::move(sub));
  if (!final_sub) return std::nullopt;
  std::vector<Goal> out;
  for (std::size_t i = chained.size(); i < view.premises.size(); ++i) {
    MetaProp inst = apply_subst(*final_sub, view.premises[i]);
    if (contains_schematic(inst)) return std::nullopt; // would create a non-ground goal
    out.push_back(goal_from_premise(goal, inst));
  }
  return out;
}

std::optional<CloseInfo> close_by_assumption_ex(const Goal& goal,
                                                std::span<const MetaProp> facts) {
  const std::size_t n = goal.hyps.size();
  for (std::size_t j = n + 1; j-- > 0;) {
    MetaProp candidate =
        fold_metaprop(std::span<const MetaProp>(goal.hyps).subspan(j), MetaProp::judg(goal.concl));
    for (std::size_t i = 0; i < j; ++i)
      if (goal.hyps[i] == candidate) return CloseInfo{j, -1};
    for (std::size_t k = 0; k < facts.size(); ++k)
      if (facts[k] == candidate) return CloseInfo{j, static_cast<int>(k)};
  }
  return std::nullopt;
}

bool close_by_assumption(const Goal& goal, std::span<const MetaProp> facts) {
  return close_by_assumption_ex(goal, facts).has_value();
}

namespace {

const DefEq* find_head(std::span<const DefEq> defs, const std::string& head) {
  for (const DefEq& d : defs)
    if (d.head == head) return &d;
  return nullptr;
}

} // namespace

Formula unfold(std::span<const DefEq> defs, const Formula& f) {
  if (!f.is_app()) return f;
  std::vector<Formula> args;
  args.reserve(f.args().size());
  for (const auto& a : f.args()) args.push_back(unfold(defs, a));
  if (const DefEq* def = find_head(defs, f.name())) {
    Substitution sub;
    for (std::size_t i = 0; i < def->params.size(); ++i) sub.emplace(def->params[i], args[i]);
    // The body may mention other listed heads; rewrite the instance too.
    return unfold(defs, apply_subst(sub, def->body));
  }
  return Formula::app(f.name(), std::move(args));
}

MetaProp unfold(std::span<const DefEq> defs, const MetaProp& p) {
  if (p.is_judgment()) return MetaProp::judg(unfold(defs, p.formula()));
  return MetaProp::imp(unfold(defs, p.premise()), unfold(defs, p.conclusion()));
}

Goal unfold(std::span<const DefEq> defs, const Goal& g) {
  Goal out;
  out.hyps.reserve(g.hyps.size());
  for (const auto& h : g.hyps) out.hyps.push_back(unfold(defs, h));
  out.concl = unfold(defs, g.concl);
  return out;
}

} // namespace pnd
