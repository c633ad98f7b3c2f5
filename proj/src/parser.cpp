#include "pnd/parser.hpp"

#include <cctype>

namespace pnd {

namespace {

[[noreturn]] void parse_fail(const std::string& file, Span span, std::string msg) {
  throw ParseError(Diagnostic{file, span, std::move(msg), std::nullopt, std::nullopt});
}

// ---------------------------------------------------------------------------
// Formula / meta-proposition parser (precedence climbing over ctx's table).

class FormulaParser {
public:
  FormulaParser(std::vector<FToken> toks, const TheoryContext& ctx, const std::string& file)
      : toks_(std::move(toks)), ctx_(ctx), file_(file) {}

  MetaProp metaprop() {
    MetaProp mp = operand();
    if (at_sym("==>")) {
      next();
      return MetaProp::imp(std::move(mp), metaprop());
    }
    return mp;
  }

  Formula formula_only() {
    Formula f = formula(0);
    expect_end();
    return f;
  }

  MetaProp metaprop_only() {
    MetaProp mp = metaprop();
    expect_end();
    return mp;
  }

  // "lhs == rhs" of a definition.
  std::pair<Formula, Formula> equation() {
    Formula lhs = formula(0);
    if (!at_sym("==")) parse_fail(file_, peek().span, "expected == in definition");
    next();
    Formula rhs = formula(0);
    expect_end();
    return {std::move(lhs), std::move(rhs)};
  }

private:
  const FToken& peek() const { return toks_[pos_]; }
  const FToken& next() { return toks_[pos_++]; }
  bool at_sym(std::string_view s) const {
    return peek().kind == FTokenKind::Sym && peek().text == s;
  }

  void expect_end() {
    if (peek().kind != FTokenKind::End)
      parse_fail(file_, peek().span, "unexpected token '" + peek().text + "' after formula");
  }

  // One ==>-operand: either a parenthesized meta-implication or a formula.
  MetaProp operand() {
    if (peek().kind == FTokenKind::LParen) {
      std::size_t save = pos_;
      next();
      MetaProp inner = metaprop();
      if (peek().kind != FTokenKind::RParen)
        parse_fail(file_, peek().span, "expected )");
      next();
      if (inner.is_meta_imp()) {
        if (is_object_operator(peek()))
          parse_fail(file_, peek().span, "meta-implication cannot occur inside a formula");
        return inner;
      }
      // Plain group: resume ordinary formula parsing with it on the left.
      Formula left = infix_loop(inner.formula(), 0);
      return MetaProp::judg(std::move(left));
      (void)save;
    }
    return MetaProp::judg(formula(0));
  }

  bool is_object_operator(const FToken& t) const {
    return t.kind == FTokenKind::Sym && t.text != "==>" && t.text != "==" &&
           ctx_.find_operator(t.text) != nullptr;
  }

  Formula formula(int min_prec) { return infix_loop(prefix_or_primary(), min_prec); }

  Formula infix_loop(Formula left, int min_prec) {
    while (is_object_operator(peek())) {
      const ConnectiveDecl* decl = ctx_.find_operator(peek().text);
      const MixfixDecl& mx = *decl->mixfix;
      if (mx.kind == MixfixKind::Prefix) break;
      if (mx.precedence < min_prec) break;
      next();
      int rhs_min = mx.kind == MixfixKind::Infixr ? mx.precedence : mx.precedence + 1;
      Formula right = formula(rhs_min);
      left = Formula::app(decl->name, {std::move(left), std::move(right)});
    }
    return left;
  }

  Formula prefix_or_primary() {
    const FToken& t = peek();
    if (t.kind == FTokenKind::Sym) {
      const ConnectiveDecl* decl = ctx_.find_operator(t.text);
      if (decl && decl->mixfix->kind == MixfixKind::Prefix) {
        next();
        Formula arg = formula(decl->mixfix->precedence);
        return Formula::app(decl->name, {std::move(arg)});
      }
      parse_fail(file_, t.span, "dangling operator '" + t.text + "'");
    }
    if (t.kind == FTokenKind::Name) {
      next();
      if (const ConnectiveDecl* decl = ctx_.find_notation(t.text))
        return Formula::app(decl->name, {});
      if (std::islower(static_cast<unsigned char>(t.text[0]))) return Formula::atom(t.text);
      parse_fail(file_, t.span, "unknown constant or notation: " + t.text);
    }
    if (t.kind == FTokenKind::LParen) {
      next();
      MetaProp inner = metaprop();
      if (peek().kind != FTokenKind::RParen)
        parse_fail(file_, peek().span, "expected )");
      next();
      if (inner.is_meta_imp())
        parse_fail(file_, t.span, "meta-implication cannot occur inside a formula");
      return inner.formula();
    }
    parse_fail(file_, t.span, "expected a formula");
  }

  std::vector<FToken> toks_;
  std::size_t pos_ = 0;
  const TheoryContext& ctx_;
  const std::string& file_;
};

Span whole_span(std::string_view text) {
  return Span{0, text.size(), 1, 1};
}

} // namespace

Formula parse_formula(std::string_view text, const TheoryContext& ctx, const std::string& file,
                      Span content_span) {
  FormulaParser p(tokenize_formula(text, file, content_span, ctx), ctx, file);
  return p.formula_only();
}

MetaProp parse_metaprop(std::string_view text, const TheoryContext& ctx, const std::string& file,
                        Span content_span) {
  FormulaParser p(tokenize_formula(text, file, content_span, ctx), ctx, file);
  return p.metaprop_only();
}

Formula parse_formula(std::string_view text, const TheoryContext& ctx, const std::string& file) {
  return parse_formula(text, ctx, file, whole_span(text));
}

MetaProp parse_metaprop(std::string_view text, const TheoryContext& ctx, const std::string& file) {
  return parse_metaprop(text, ctx, file, whole_span(text));
}

// ---------------------------------------------------------------------------
// Script parser.

namespace {

class ScriptParser {
public:
  ScriptParser(std::string_view text, const std::string& file, TheoryContext& ctx)
      : toks_(tokenize(text, file)), file_(file), ctx_(ctx) {}

  std::vector<Item> parse() {
    std::vector<Item> items;
    while (peek().kind != TokenKind::End) {
      if (at_kw("axiomatization")) {
        items.push_back(axiomatization());
      } else if (at_kw("definition")) {
        items.push_back(definition());
      } else if (at_kw("theorem") || at_kw("proposition") || at_kw("lemma")) {
        items.push_back(goal());
      } else {
        parse_fail(file_, peek().span, "expected a command, found '" + peek().text + "'");
      }
    }
    return items;
  }

private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  const Token& next() { return toks_[pos_++]; }
  bool at_kw(std::string_view kw) const {
    return peek().kind == TokenKind::Keyword && peek().text == kw;
  }
  bool at_sym(std::string_view s) const {
    return peek().kind == TokenKind::Sym && peek().text == s;
  }
  Token expect_kw(std::string_view kw) {
    if (!at_kw(kw)) parse_fail(file_, peek().span, std::string("expected '") + std::string(kw) + "'");
    return next();
  }
  Token expect_sym(std::string_view s) {
    if (!at_sym(s)) parse_fail(file_, peek().span, std::string("expected '") + std::string(s) + "'");
    return next();
  }
  Token expect_ident() {
    if (peek().kind != TokenKind::Ident)
      parse_fail(file_, peek().span, "expected an identifier, found '" + peek().text + "'");
    return next();
  }
  Token expect_string() {
    if (peek().kind != TokenKind::String)
      parse_fail(file_, peek().span, "expected a quoted string");
    return next();
  }
  int expect_number() {
    if (peek().kind != TokenKind::Number)
      parse_fail(file_, peek().span, "expected a number");
    return std::stoi(next().text);
  }

  Span string_content_span(const Token& str) const {
    // Content begins one character after the opening quote; strings never
    // contain newlines.
    return Span{str.span.offset + 1, str.span.length >= 2 ? str.span.length - 2 : 0,
                str.span.line, str.span.column + 1};
  }

  MetaProp parse_stmt(const Token& str) {
    return parse_metaprop(str.text, ctx_, file_, string_content_span(str));
  }
  Formula parse_form(const Token& str) {
    return parse_formula(str.text, ctx_, file_, string_content_span(str));
  }

  std::optional<MixfixDecl> mixfix() {
    if (!at_sym("(")) return std::nullopt;
    next();
    MixfixDecl decl;
    if (at_kw("infixr") || at_kw("infixl") || at_kw("prefix")) {
      std::string kw = next().text;
      decl.kind = kw == "infixr"  ? MixfixKind::Infixr
                  : kw == "infixl" ? MixfixKind::Infixl
                                   : MixfixKind::Prefix;
      decl.symbol = expect_string().text;
      decl.precedence = expect_number();
    } else {
      decl.kind = MixfixKind::Nullary;
      decl.symbol = expect_string().text;
    }
    expect_sym(")");
    return decl;
  }

  ConnectiveDecl connective_decl() {
    ConnectiveDecl decl;
    Span span = peek().span;
    decl.name = expect_ident().text;
    expect_sym("::");
    decl.arity = expect_number();
    decl.mixfix = mixfix();
    ctx_.declare_connective(decl, file_, span);
    return decl;
  }

  std::vector<RuleAttr> attrs() {
    std::vector<RuleAttr> out;
    if (!at_sym("[")) return out;
    next();
    while (true) {
      if (at_kw("intro")) {
        out.push_back(RuleAttr::Intro);
        next();
      } else if (at_kw("elim")) {
        out.push_back(RuleAttr::Elim);
        next();
      } else {
        parse_fail(file_, peek().span, "expected 'intro' or 'elim'");
      }
      if (at_sym(",")) {
        next();
        continue;
      }
      break;
    }
    expect_sym("]");
    return out;
  }

  Item axiomatization() {
    AxiomatizationItem item;
    item.span = expect_kw("axiomatization").span;
    // Declarations are optional: `axiomatization where LEM: "..."` adds a
    // rule over existing syntax.
    if (peek().kind == TokenKind::Ident) {
      item.decls.push_back(connective_decl());
      while (at_kw("and")) {
        next();
        item.decls.push_back(connective_decl());
      }
    }
    if (at_kw("where")) {
      next();
      while (true) {
        RuleSrc rule;
        rule.span = peek().span;
        rule.name = expect_ident().text;
        rule.attrs = attrs();
        expect_sym(":");
        Token str = expect_string();
        rule.statement = parse_stmt(str);
        item.rules.push_back(std::move(rule));
        if (at_kw("and")) {
          next();
          continue;
        }
        break;
      }
    }
    if (item.decls.empty() && item.rules.empty())
      parse_fail(file_, item.span, "empty axiomatization");
    return item;
  }

  Item definition() {
    DefinitionItem item;
    item.span = expect_kw("definition").span;
    ConnectiveDecl decl = connective_decl();
    expect_kw("where");
    Token str = expect_string();
    FormulaParser fp(tokenize_formula(str.text, file_, string_content_span(str), ctx_), ctx_,
                     file_);
    auto [lhs, rhs] = fp.equation();
    if (!lhs.is_app() || lhs.name() != decl.name)
      parse_fail(file_, str.span, "definition head must be " + decl.name);
    DefEq def;
    def.head = decl.name;
    for (const Formula& arg : lhs.args()) {
      if (!arg.is_atom())
        parse_fail(file_, str.span, "definition parameters must be distinct atoms");
      def.params.push_back(arg.name());
    }
    std::vector<std::string> body_atoms;
    collect_atom_names(rhs, body_atoms);
    for (const auto& a : body_atoms) {
      bool found = false;
      for (const auto& p : def.params) found = found || p == a;
      if (!found)
        parse_fail(file_, str.span, "definition body mentions unbound variable: " + a);
    }
    def.body = generalize_atoms(rhs);
    item.def = std::move(def);
    return item;
  }

  Method method() {
    Method m;
    m.span = peek().span;
    if (at_kw("this")) {
      next();
      m.kind = Method::Kind::This;
    } else if (at_kw("standard")) {
      next();
      m.kind = Method::Kind::Standard;
    } else if (at_sym("(")) {
      next();
      expect_kw("rule");
      m.kind = Method::Kind::Rule;
      m.rule_name = expect_ident().text;
      expect_sym(")");
    } else {
      parse_fail(file_, peek().span, "expected a proof method");
    }
    return m;
  }

  bool at_body_start() const {
    return at_sym(".") || at_sym("..") || at_kw("by") || at_kw("proof") || at_kw("unfolding");
  }

  ProofBody proofbody() {
    ProofBody body;
    if (at_kw("unfolding")) {
      body.unfolds_span = next().span;
      while (peek().kind == TokenKind::Ident) body.unfolds.push_back(next().text);
      if (body.unfolds.empty())
        parse_fail(file_, body.unfolds_span, "unfolding requires at least one definition name");
    }
    if (at_sym(".")) {
      Token t = next();
      body.kind = ProofBody::Kind::Terminal;
      body.terminal = Method{Method::Kind::This, "", t.span};
      body.terminal_dots = true;
      return body;
    }
    if (at_sym("..")) {
      Token t = next();
      body.kind = ProofBody::Kind::Terminal;
      body.terminal = Method{Method::Kind::Standard, "", t.span};
      body.terminal_dots = true;
      return body;
    }
    if (at_kw("by")) {
      next();
      body.kind = ProofBody::Kind::Terminal;
      body.terminal = method();
      return body;
    }
    if (at_kw("proof")) {
      body.kind = ProofBody::Kind::Structured;
      body.opener_span = next().span;
      if (at_sym("-")) {
        next();
        body.opener = ProofBody::Opener::Dash;
      } else if (at_kw("this") || at_kw("standard") || (at_sym("(") && peek(1).kind == TokenKind::Keyword && peek(1).text == "rule")) {
        body.opener = ProofBody::Opener::Explicit;
        body.opener_method = method();
      } else {
        body.opener = ProofBody::Opener::Default;
      }
      while (!at_kw("qed")) {
        if (peek().kind == TokenKind::End)
          parse_fail(file_, peek().span, "unterminated proof: expected qed");
        body.steps.push_back(step());
      }
      body.qed_span = expect_kw("qed").span;
      return body;
    }
    parse_fail(file_, peek().span, "expected a proof");
  }

  Step step() {
    Step s;
    s.span = peek().span;
    if (at_kw("assume")) {
      next();
      s.kind = Step::Kind::Assume;
      while (true) {
        AssumeEntry entry;
        entry.span = peek().span;
        if (peek().kind == TokenKind::Ident && peek(1).kind == TokenKind::Sym &&
            peek(1).text == ":") {
          entry.label = next().text;
          next();
        }
        Token str = expect_string();
        entry.prop = parse_stmt(str);
        s.assumes.push_back(std::move(entry));
        if (at_kw("and")) {
          next();
          continue;
        }
        break;
      }
      return s;
    }
    if (at_kw("then") || at_kw("from") || at_kw("with")) {
      std::string kw = next().text;
      s.kind = kw == "then" ? Step::Kind::Then : kw == "from" ? Step::Kind::From : Step::Kind::With;
      if (s.kind != Step::Kind::Then) {
        while (peek().kind == TokenKind::Ident) s.names.push_back(next().text);
        if (s.names.empty())
          parse_fail(file_, s.span, kw + " requires at least one fact name");
      }
      if (!at_kw("have") && !at_kw("show"))
        parse_fail(file_, peek().span, "'" + kw + "' must be followed by have or show");
      return s;
    }
    if (at_kw("have")) {
      next();
      s.kind = Step::Kind::Have;
      if (peek().kind == TokenKind::Ident && peek(1).kind == TokenKind::Sym &&
          peek(1).text == ":") {
        s.label = next().text;
        next();
      }
      Token str = expect_string();
      s.formula = parse_form(str);
      s.body = std::make_shared<ProofBody>(proofbody());
      return s;
    }
    if (at_kw("show")) {
      next();
      s.kind = Step::Kind::Show;
      Token str = expect_string();
      s.formula = parse_form(str);
      s.body = std::make_shared<ProofBody>(proofbody());
      return s;
    }
    if (at_kw("next")) {
      next();
      s.kind = Step::Kind::Next;
      return s;
    }
    parse_fail(file_, peek().span, "expected a proof step, found '" + peek().text + "'");
  }

  Item goal() {
    GoalItem item;
    Token kw = next();
    item.span = kw.span;
    item.kind = kw.text == "theorem"     ? GoalKind::Theorem
                : kw.text == "proposition" ? GoalKind::Proposition
                                           : GoalKind::Lemma;
    if (peek().kind == TokenKind::Ident || at_sym("[")) {
      if (peek().kind == TokenKind::Ident) item.name = expect_ident().text;
      item.attrs = attrs();
      expect_sym(":");
    }
    Token str = expect_string();
    item.statement = parse_stmt(str);
    if (item.name.empty()) {
      item.anonymous = true;
      item.name = "#anon." + std::to_string(++anon_counter_);
      item.display = kw.text + " \"" + str.text + "\"";
    } else {
      item.display = item.name;
    }
    item.proof = proofbody();
    return item;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::string file_;
  TheoryContext& ctx_;
  int anon_counter_ = 0;
};

} // namespace

std::vector<Item> parse_script(std::string_view text, const std::string& file,
                               TheoryContext& ctx) {
  ScriptParser p(text, file, ctx);
  return p.parse();
}

std::size_t step_count(const GoalItem& item) {
  const ProofBody& b = item.proof;
  std::size_t n = b.unfolds.empty() ? 0 : 1;
  if (b.kind == ProofBody::Kind::Terminal) return n + 1;
  return n + 1 /*proof*/ + b.steps.size() + 1 /*qed*/;
}

} // namespace pnd
