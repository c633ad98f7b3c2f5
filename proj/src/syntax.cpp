#include "pnd/syntax.hpp"

#include <stdexcept>

namespace pnd {

Formula Formula::atom(std::string name) {
  return Formula(Kind::Atom, std::move(name), {});
}

Formula Formula::schematic(std::string name) {
  return Formula(Kind::Schematic, std::move(name), {});
}

Formula Formula::app(std::string constant, std::vector<Formula> args) {
  return Formula(Kind::App, std::move(constant), std::move(args));
}

bool Formula::operator==(const Formula& rhs) const {
  if (kind_ != rhs.kind_ || name_ != rhs.name_) return false;
  if (args_.size() != rhs.args_.size()) return false;
  for (std::size_t i = 0; i < args_.size(); ++i)
    if (args_[i] != rhs.args_[i]) return false;
  return true;
}

std::size_t node_count(const Formula& f) {
  std::size_t n = 1;
  for (const auto& a : f.args()) n += node_count(a);
  return n;
}

static int formula_cmp(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
  if (a.args().size() != b.args().size())
    return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (int c = formula_cmp(a.args()[i], b.args()[i]); c != 0) return c;
  return 0;
}

bool formula_less(const Formula& a, const Formula& b) {
  std::size_t na = node_count(a), nb = node_count(b);
  if (na != nb) return na < nb;
  return formula_cmp(a, b) < 0;
}

MetaProp::MetaProp(MetaProp premise, MetaProp conclusion) {
  children_.reserve(2);
  children_.push_back(std::move(premise));
  children_.push_back(std::move(conclusion));
}

MetaProp MetaProp::judg(Formula f) { return MetaProp(std::move(f)); }

MetaProp MetaProp::imp(MetaProp premise, MetaProp conclusion) {
  return MetaProp(std::move(premise), std::move(conclusion));
}

const Formula& MetaProp::formula() const {
  if (!is_judgment()) throw std::logic_error("MetaProp::formula on meta-implication");
  return formula_.front();
}

const MetaProp& MetaProp::premise() const {
  if (!is_meta_imp()) throw std::logic_error("MetaProp::premise on judgment");
  return children_[0];
}

const MetaProp& MetaProp::conclusion() const {
  if (!is_meta_imp()) throw std::logic_error("MetaProp::conclusion on judgment");
  return children_[1];
}

bool MetaProp::operator==(const MetaProp& rhs) const {
  if (is_judgment() != rhs.is_judgment()) return false;
  if (is_judgment()) return formula() == rhs.formula();
  return premise() == rhs.premise() && conclusion() == rhs.conclusion();
}

RuleView premises_and_conclusion(const MetaProp& p) {
  RuleView view{{}, Formula::atom("_")};
  const MetaProp* cur = &p;
  while (cur->is_meta_imp()) {
    view.premises.push_back(cur->premise());
    cur = &cur->conclusion();
  }
  view.conclusion = cur->formula();
  return view;
}

MetaProp fold_metaprop(std::span<const MetaProp> premises, MetaProp tail) {
  MetaProp result = std::move(tail);
  for (std::size_t i = premises.size(); i-- > 0;)
    result = MetaProp::imp(premises[i], std::move(result));
  return result;
}

Formula apply_subst(const Substitution& s, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom:
      return f;
    case Formula::Kind::Schematic: {
      auto it = s.find(f.name());
      return it == s.end() ? f : it->second;
    }
    case Formula::Kind::App: {
      std::vector<Formula> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(apply_subst(s, a));
      return Formula::app(f.name(), std::move(args));
    }
  }
  throw std::logic_error("unreachable");
}

MetaProp apply_subst(const Substitution& s, const MetaProp& p) {
  if (p.is_judgment()) return MetaProp::judg(apply_subst(s, p.formula()));
  return MetaProp::imp(apply_subst(s, p.premise()), apply_subst(s, p.conclusion()));
}

bool contains_schematic(const Formula& f) {
  if (f.is_schematic()) return true;
  for (const auto& a : f.args())
    if (contains_schematic(a)) return true;
  return false;
}

bool contains_schematic(const MetaProp& p) {
  if (p.is_judgment()) return contains_schematic(p.formula());
  return contains_schematic(p.premise()) || contains_schematic(p.conclusion());
}

bool mentions_constant(const Formula& f, const std::string& constant) {
  if (f.is_app() && f.name() == constant) return true;
  for (const auto& a : f.args())
    if (mentions_constant(a, constant)) return true;
  return false;
}

void collect_atom_names(const Formula& f, std::vector<std::string>& out) {
  if (f.is_atom()) {
    for (const auto& n : out)
      if (n == f.name()) return;
    out.push_back(f.name());
  }
  for (const auto& a : f.args()) collect_atom_names(a, out);
}

void collect_atom_names(const MetaProp& p, std::vector<std::string>& out) {
  if (p.is_judgment()) {
    collect_atom_names(p.formula(), out);
  } else {
    collect_atom_names(p.premise(), out);
    collect_atom_names(p.conclusion(), out);
  }
}

void collect_variable_names(const Formula& f, std::vector<std::string>& out) {
  if (f.is_atom() || f.is_schematic()) {
    for (const auto& n : out)
      if (n == f.name()) return;
    out.push_back(f.name());
  }
  for (const auto& a : f.args()) collect_variable_names(a, out);
}

namespace {

template <typename Fn>
Formula map_leaves(const Formula& f, Fn&& fn) {
  if (f.is_app()) {
    std::vector<Formula> args;
    args.reserve(f.args().size());
    for (const auto& a : f.args()) args.push_back(map_leaves(a, fn));
    return Formula::app(f.name(), std::move(args));
  }
  return fn(f);
}

template <typename Fn>
MetaProp map_formulas(const MetaProp& p, Fn&& fn) {
  if (p.is_judgment()) return MetaProp::judg(fn(p.formula()));
  return MetaProp::imp(map_formulas(p.premise(), fn), map_formulas(p.conclusion(), fn));
}

} // namespace

Formula generalize_atoms(const Formula& f) {
  return map_leaves(f, [](const Formula& leaf) {
    return leaf.is_atom() ? Formula::schematic(leaf.name()) : leaf;
  });
}

MetaProp generalize_atoms(const MetaProp& p) {
  return map_formulas(p, [](const Formula& f) { return generalize_atoms(f); });
}

Formula atomize_schematics(const Formula& f) {
  return map_leaves(f, [](const Formula& leaf) {
    return leaf.is_schematic() ? Formula::atom(leaf.name()) : leaf;
  });
}

MetaProp atomize_schematics(const MetaProp& p) {
  return map_formulas(p, [](const Formula& f) { return atomize_schematics(f); });
}

} // namespace pnd
