#include "pnd/context.hpp"

#include <algorithm>

namespace pnd {

namespace {

[[noreturn]] void fail(const std::string& file, Span span, std::string message) {
  throw CheckError(Diagnostic{file, span, std::move(message), std::nullopt, std::nullopt});
}

} // namespace

void TheoryContext::declare_connective(const ConnectiveDecl& decl, const std::string& file,
                                       Span span) {
  if (connective_index_.count(decl.name))
    fail(file, span, "duplicate constant declaration: " + decl.name);
  if (decl.arity < 0) fail(file, span, "negative arity for " + decl.name);
  if (decl.mixfix) {
    const MixfixDecl& mx = *decl.mixfix;
    if (mx.symbol.empty()) fail(file, span, "empty notation symbol for " + decl.name);
    if (operator_index_.count(mx.symbol) || notation_index_.count(mx.symbol))
      fail(file, span, "duplicate notation symbol: " + mx.symbol);
    switch (mx.kind) {
      case MixfixKind::Infixr:
      case MixfixKind::Infixl:
        if (decl.arity != 2)
          fail(file, span, "infix notation requires arity 2: " + decl.name);
        break;
      case MixfixKind::Prefix:
        if (decl.arity != 1)
          fail(file, span, "prefix notation requires arity 1: " + decl.name);
        break;
      case MixfixKind::Nullary:
        if (decl.arity != 0)
          fail(file, span, "nullary notation requires arity 0: " + decl.name);
        break;
    }
  }
  connectives_.push_back(decl);
  connective_index_[decl.name] = connectives_.size() - 1;
  if (decl.mixfix) {
    if (decl.mixfix->kind == MixfixKind::Nullary) {
      notation_index_[decl.mixfix->symbol] = connectives_.size() - 1;
    } else {
      operator_index_[decl.mixfix->symbol] = connectives_.size() - 1;
      op_symbols_.push_back(decl.mixfix->symbol);
    }
  }
}

const ConnectiveDecl* TheoryContext::find_connective(const std::string& name) const {
  auto it = connective_index_.find(name);
  return it == connective_index_.end() ? nullptr : &connectives_[it->second];
}

const ConnectiveDecl* TheoryContext::find_operator(const std::string& symbol) const {
  auto it = operator_index_.find(symbol);
  return it == operator_index_.end() ? nullptr : &connectives_[it->second];
}

const ConnectiveDecl* TheoryContext::find_notation(const std::string& symbol) const {
  auto it = notation_index_.find(symbol);
  return it == notation_index_.end() ? nullptr : &connectives_[it->second];
}

void TheoryContext::check_fresh_name(const std::string& name, const std::string& file,
                                     Span span) const {
  if (theorems_.count(name)) fail(file, span, "duplicate theorem name: " + name);
  if (defs_.count(name)) fail(file, span, "duplicate theorem name: " + name);
}

const Theorem& TheoryContext::add_theorem(std::string name, std::vector<RuleAttr> attrs,
                                          MetaProp statement, TheoremOrigin origin,
                                          const std::string& file, Span span) {
  check_fresh_name(name, file, span);
  validate_wellformed(statement, file, span);
  MetaProp general = generalize_atoms(statement);
  auto [it, inserted] = theorems_.emplace(name, Theorem(name, std::move(general), origin));
  (void)inserted;
  theorem_order_.push_back(name);
  for (RuleAttr attr : attrs) {
    if (attr == RuleAttr::Intro)
      intro_order_.push_back(name);
    else
      elim_order_.push_back(name);
  }
  return it->second;
}

const Theorem& TheoryContext::register_axiom(const std::string& name,
                                             const std::vector<RuleAttr>& attrs,
                                             const MetaProp& statement, const std::string& file,
                                             Span span) {
  return add_theorem(name, attrs, statement, TheoremOrigin::Axiom, file, span);
}

void TheoryContext::register_definition(const DefEq& def, const std::string& file, Span span) {
  std::string def_name = def.head + "_def";
  if (defs_.count(def_name) || theorems_.count(def_name))
    fail(file, span, "duplicate theorem name: " + def_name);
  const ConnectiveDecl* decl = find_connective(def.head);
  if (!decl) fail(file, span, "definition of undeclared constant: " + def.head);
  if (static_cast<int>(def.params.size()) != decl->arity)
    fail(file, span, "definition arity mismatch for " + def.head);
  for (std::size_t i = 0; i < def.params.size(); ++i)
    for (std::size_t j = i + 1; j < def.params.size(); ++j)
      if (def.params[i] == def.params[j])
        fail(file, span, "definition parameters must be distinct: " + def.params[i]);
  if (mentions_constant(def.body, def.head))
    fail(file, span, "cyclic definition: " + def.head + " occurs in its own body");
  validate_wellformed(def.body, file, span);
  defs_.emplace(def_name, def);
  def_order_.push_back(def_name);
}

const Theorem& TheoryContext::export_theorem(const std::string& name,
                                             const std::vector<RuleAttr>& attrs,
                                             const MetaProp& statement, const std::string& file,
                                             Span span) {
  return add_theorem(name, attrs, statement, TheoremOrigin::Proved, file, span);
}

const Theorem* TheoryContext::find_theorem(const std::string& name) const {
  auto it = theorems_.find(name);
  return it == theorems_.end() ? nullptr : &it->second;
}

const DefEq* TheoryContext::find_def(const std::string& def_name) const {
  auto it = defs_.find(def_name);
  return it == defs_.end() ? nullptr : &it->second;
}

std::vector<const Theorem*> TheoryContext::intro_rules() const {
  std::vector<const Theorem*> out;
  out.reserve(intro_order_.size());
  for (const auto& n : intro_order_) out.push_back(&theorems_.at(n));
  return out;
}

std::vector<const Theorem*> TheoryContext::elim_rules() const {
  std::vector<const Theorem*> out;
  out.reserve(elim_order_.size());
  for (const auto& n : elim_order_) out.push_back(&theorems_.at(n));
  return out;
}

std::vector<DefEq> TheoryContext::all_defs() const {
  std::vector<DefEq> out;
  out.reserve(def_order_.size());
  for (const auto& n : def_order_) out.push_back(defs_.at(n));
  return out;
}

void TheoryContext::validate_wellformed(const Formula& f, const std::string& file,
                                        Span span) const {
  if (f.is_app()) {
    const ConnectiveDecl* decl = find_connective(f.name());
    if (!decl) fail(file, span, "undeclared constant: " + f.name());
    if (static_cast<int>(f.args().size()) != decl->arity)
      fail(file, span, "arity mismatch for " + f.name());
    for (const auto& a : f.args()) validate_wellformed(a, file, span);
  } else if (f.name().empty()) {
    fail(file, span, "empty variable name");
  }
}

void TheoryContext::validate_wellformed(const MetaProp& p, const std::string& file,
                                        Span span) const {
  if (p.is_judgment()) {
    validate_wellformed(p.formula(), file, span);
  } else {
    validate_wellformed(p.premise(), file, span);
    validate_wellformed(p.conclusion(), file, span);
  }
}

} // namespace pnd
