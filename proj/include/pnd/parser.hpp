// Script and formula parsing. Formula strings are parsed with a precedence
// climbing parser over the context's dynamic operator table; scripts are a
// single pass in which axiomatizations and definitions extend that table
// immediately, so later items can already use the new syntax.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pnd/context.hpp"
#include "pnd/lexer.hpp"
#include "pnd/syntax.hpp"

namespace pnd {

Formula parse_formula(std::string_view text, const TheoryContext& ctx, const std::string& file,
                      Span content_span);
MetaProp parse_metaprop(std::string_view text, const TheoryContext& ctx, const std::string& file,
                        Span content_span);

// Convenience overloads for whole-string inputs (tests, CLI arguments).
Formula parse_formula(std::string_view text, const TheoryContext& ctx,
                      const std::string& file = "<input>");
MetaProp parse_metaprop(std::string_view text, const TheoryContext& ctx,
                        const std::string& file = "<input>");

struct RuleSrc {
  std::string name;
  std::vector<RuleAttr> attrs;
  MetaProp statement = MetaProp::judg(Formula::atom("_"));
  Span span;
};

struct AxiomatizationItem {
  std::vector<ConnectiveDecl> decls;
  std::vector<RuleSrc> rules;
  Span span;
};

struct DefinitionItem {
  DefEq def;
  Span span;
};

struct Method {
  enum class Kind { This, Standard, Rule };
  Kind kind = Kind::Standard;
  std::string rule_name; // Kind::Rule only
  Span span;
};

struct ProofBody;

struct AssumeEntry {
  std::optional<std::string> label;
  MetaProp prop = MetaProp::judg(Formula::atom("_"));
  Span span;
};

struct Step {
  enum class Kind { Assume, Then, From, With, Have, Show, Next };
  Kind kind = Kind::Assume;
  Span span;
  std::vector<AssumeEntry> assumes;           // Assume
  std::vector<std::string> names;             // From/With
  std::optional<std::string> label;           // Have
  std::optional<Formula> formula;             // Have/Show
  std::shared_ptr<ProofBody> body;            // Have/Show
};

struct ProofBody {
  std::vector<std::string> unfolds; // names of _def entries, possibly empty
  Span unfolds_span;

  enum class Kind { Terminal, Structured } kind = Kind::Terminal;

  // Terminal: ".", "..", "by m". dots marks the implicit forms for the
  // explicit-rule rewriting harness.
  Method terminal;
  bool terminal_dots = false;

  // Structured: proof [- | m] step* qed
  enum class Opener { Dash, Default, Explicit } opener = Opener::Dash;
  Method opener_method;   // Opener::Explicit only
  Span opener_span;       // span of the `proof` keyword
  std::vector<Step> steps;
  Span qed_span;
};

enum class GoalKind { Theorem, Proposition, Lemma };

struct GoalItem {
  GoalKind kind = GoalKind::Theorem;
  std::string name;     // synthesized for anonymous goals
  bool anonymous = false;
  std::vector<RuleAttr> attrs;
  MetaProp statement = MetaProp::judg(Formula::atom("_"));
  std::string display;  // name, or the statement text for anonymous goals
  ProofBody proof;
  Span span;
};

using Item = std::variant<AxiomatizationItem, DefinitionItem, GoalItem>;

// Parses a whole script. Connective declarations (including definition
// notation) are entered into ctx as they are encountered; rule statements,
// definitions and proofs are returned for the checker to process in order.
std::vector<Item> parse_script(std::string_view text, const std::string& file,
                               TheoryContext& ctx);

// Number of proof steps of a goal item as surfaced in diagnostics/tests: the
// unfolding prelude, the proof opener, each command, and qed all count as one.
std::size_t step_count(const GoalItem& item);

} // namespace pnd
