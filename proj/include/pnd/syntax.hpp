// Term language of the framework: object-level formulas over dynamically
// declared connectives, and meta-level propositions built from a truth
// judgment and right-nested meta-implication.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace pnd {

// Object-level formula: an atom, a schematic (rule variable), or a declared
// connective applied to arguments. Immutable value type.
class Formula {
public:
  enum class Kind { Atom, Schematic, App };

  static Formula atom(std::string name);
  static Formula schematic(std::string name);
  static Formula app(std::string constant, std::vector<Formula> args);

  Kind kind() const { return kind_; }
  bool is_atom() const { return kind_ == Kind::Atom; }
  bool is_schematic() const { return kind_ == Kind::Schematic; }
  bool is_app() const { return kind_ == Kind::App; }

  // Atom/schematic name, or the applied constant's name.
  const std::string& name() const { return name_; }
  const std::vector<Formula>& args() const { return args_; }

  bool operator==(const Formula& rhs) const;
  bool operator!=(const Formula& rhs) const { return !(*this == rhs); }

private:
  Formula(Kind kind, std::string name, std::vector<Formula> args)
      : kind_(kind), name_(std::move(name)), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  std::vector<Formula> args_;
};

// Total order on formulas: by node count, then structurally. Used wherever a
// canonical traversal order is needed (proof search, test enumeration).
bool formula_less(const Formula& a, const Formula& b);

std::size_t node_count(const Formula& f);

// Meta-level proposition: Judg(formula) or MetaImp(premise, conclusion).
// Every MetaProp decomposes as premises P1..Pn and a final judgment.
class MetaProp {
public:
  static MetaProp judg(Formula f);
  static MetaProp imp(MetaProp premise, MetaProp conclusion);

  bool is_judgment() const { return children_.empty(); }
  bool is_meta_imp() const { return !children_.empty(); }

  const Formula& formula() const;     // judgment only
  const MetaProp& premise() const;    // meta-implication only
  const MetaProp& conclusion() const; // meta-implication only

  bool operator==(const MetaProp& rhs) const;
  bool operator!=(const MetaProp& rhs) const { return !(*this == rhs); }

private:
  explicit MetaProp(Formula f) : formula_({std::move(f)}) {}
  MetaProp(MetaProp premise, MetaProp conclusion);

  std::vector<Formula> formula_;   // size 1 for judgments
  std::vector<MetaProp> children_; // size 2 for meta-implications
};

struct RuleView {
  std::vector<MetaProp> premises;
  Formula conclusion;
};

// Decompose p = P1 ==> ... ==> Pn ==> Judg(F) into ([P1..Pn], F).
RuleView premises_and_conclusion(const MetaProp& p);

// Refold premises and a conclusion into the right-nested meta-implication.
MetaProp fold_metaprop(std::span<const MetaProp> premises, MetaProp tail);

// Schematic name -> replacement formula. Idempotent by construction as long
// as range formulas avoid the domain's schematics.
using Substitution = std::map<std::string, Formula>;

Formula apply_subst(const Substitution& s, const Formula& f);
MetaProp apply_subst(const Substitution& s, const MetaProp& p);

bool contains_schematic(const Formula& f);
bool contains_schematic(const MetaProp& p);
bool mentions_constant(const Formula& f, const std::string& constant);

void collect_atom_names(const Formula& f, std::vector<std::string>& out);
void collect_atom_names(const MetaProp& p, std::vector<std::string>& out);
void collect_variable_names(const Formula& f, std::vector<std::string>& out);

// Atom -> Schematic of the same name (theorem export).
Formula generalize_atoms(const Formula& f);
MetaProp generalize_atoms(const MetaProp& p);

// Schematic -> Atom of the same name (citing a theorem as a ground fact).
Formula atomize_schematics(const Formula& f);
MetaProp atomize_schematics(const MetaProp& p);

} // namespace pnd
