// Theory state: declared connectives with their surface syntax, definitional
// equations, and the theorem table with intro/elim registries. Theorem values
// originate here and nowhere else.

#pragma once

#include <optional>
#include <map>
#include <string>
#include <vector>

#include "pnd/diagnostics.hpp"
#include "pnd/syntax.hpp"

namespace pnd {

enum class MixfixKind { Infixr, Infixl, Prefix, Nullary };

struct MixfixDecl {
  MixfixKind kind;
  std::string symbol;
  int precedence = 0; // ignored for nullary notation
};

struct ConnectiveDecl {
  std::string name;
  int arity = 0;
  std::optional<MixfixDecl> mixfix;
};

// Definitional equation head(params) == body. The body mentions no schematic
// outside params and never the head itself; together with declaration order
// this keeps the definition graph acyclic.
struct DefEq {
  std::string head;
  std::vector<std::string> params;
  Formula body = Formula::atom("_");
};

enum class TheoremOrigin { Axiom, DefinitionRule, Proved };
enum class RuleAttr { Intro, Elim };

class TheoryContext;

// A kernel-certified statement. Schematics stand for arbitrary formulas.
class Theorem {
public:
  const std::string& name() const { return name_; }
  const MetaProp& statement() const { return statement_; }
  TheoremOrigin origin() const { return origin_; }

private:
  friend class TheoryContext;
  Theorem(std::string name, MetaProp statement, TheoremOrigin origin)
      : name_(std::move(name)), statement_(std::move(statement)), origin_(origin) {}

  std::string name_;
  MetaProp statement_;
  TheoremOrigin origin_;
};

class TheoryContext {
public:
  // --- surface syntax -------------------------------------------------
  void declare_connective(const ConnectiveDecl& decl, const std::string& file, Span span);

  const ConnectiveDecl* find_connective(const std::string& name) const;
  // Infix or prefix operator by symbol.
  const ConnectiveDecl* find_operator(const std::string& symbol) const;
  // Nullary notation by symbol.
  const ConnectiveDecl* find_notation(const std::string& symbol) const;
  // All registered operator symbols (for the inner lexer's longest match).
  const std::vector<std::string>& operator_symbols() const { return op_symbols_; }

  // --- kernel registration ---------------------------------------------
  // Statements are generalized on registration: every atom becomes a
  // schematic of the same name.
  const Theorem& register_axiom(const std::string& name, const std::vector<RuleAttr>& attrs,
                                const MetaProp& statement, const std::string& file, Span span);

  // Registers the equation and a <head>_def entry for `unfolding`.
  void register_definition(const DefEq& def, const std::string& file, Span span);

  // Export at the end of a successful proof; used by the proof engine only.
  const Theorem& export_theorem(const std::string& name, const std::vector<RuleAttr>& attrs,
                                const MetaProp& statement, const std::string& file, Span span);

  // --- lookup ------------------------------------------------------------
  const Theorem* find_theorem(const std::string& name) const;
  const DefEq* find_def(const std::string& def_name) const; // e.g. "Neg_def"
  std::vector<const Theorem*> intro_rules() const;
  std::vector<const Theorem*> elim_rules() const;
  const std::vector<std::string>& theorem_names() const { return theorem_order_; }
  std::vector<DefEq> all_defs() const;

  std::size_t theorem_count() const { return theorems_.size(); }

  // Arity check over every App node.
  void validate_wellformed(const Formula& f, const std::string& file, Span span) const;
  void validate_wellformed(const MetaProp& p, const std::string& file, Span span) const;

private:
  void check_fresh_name(const std::string& name, const std::string& file, Span span) const;
  const Theorem& add_theorem(std::string name, std::vector<RuleAttr> attrs, MetaProp statement,
                             TheoremOrigin origin, const std::string& file, Span span);

  std::vector<ConnectiveDecl> connectives_;
  std::map<std::string, std::size_t> connective_index_;
  std::map<std::string, std::size_t> operator_index_; // infix/prefix symbol
  std::map<std::string, std::size_t> notation_index_; // nullary symbol
  std::vector<std::string> op_symbols_;

  std::map<std::string, Theorem> theorems_;
  std::vector<std::string> theorem_order_;
  std::vector<std::string> intro_order_;
  std::vector<std::string> elim_order_;

  std::map<std::string, DefEq> defs_;        // keyed by "<head>_def"
  std::vector<std::string> def_order_;
};

} // namespace pnd
