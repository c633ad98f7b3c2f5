#include "pnd/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace pnd {

namespace {

const std::array<std::string_view, 26> kKeywords = {
    "axiomatization", "definition", "theorem", "proposition", "lemma", "where",
    "and",            "unfolding",  "proof",   "qed",         "assume", "then",
    "from",           "with",       "have",    "show",        "next",  "by",
    "rule",           "this",       "standard", "infixr",     "infixl", "prefix",
    "intro",          "elim"};

[[noreturn]] void lex_fail(const std::string& file, Span span, std::string msg) {
  throw ParseError(Diagnostic{file, span, std::move(msg), std::nullopt, std::nullopt});
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  int line = 1;
  int col = 1;

  bool done() const { return pos >= text.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  }
  bool starts_with(std::string_view s) const { return text.substr(pos, s.size()) == s; }
  Span here(std::size_t len = 1) const { return Span{pos, len, line, col}; }
  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) advance();
  }
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

void skip_comment(Cursor& cur, const std::string& file) {
  Span start = cur.here(2);
  cur.advance(2); // "(*"
  int depth = 1;
  while (depth > 0) {
    if (cur.done()) lex_fail(file, start, "unterminated comment");
    if (cur.starts_with("(*")) {
      ++depth;
      cur.advance(2);
    } else if (cur.starts_with("*)")) {
      --depth;
      cur.advance(2);
    } else {
      cur.advance();
    }
  }
}

} // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text, const std::string& file) {
  std::vector<Token> out;
  Cursor cur{text};
  while (!cur.done()) {
    char c = cur.peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      cur.advance();
      continue;
    }
    if (cur.starts_with("(*")) {
      skip_comment(cur, file);
      continue;
    }
    if (c == '"') {
      Span span = cur.here();
      cur.advance();
      std::size_t content_start = cur.pos;
      while (!cur.done() && cur.peek() != '"') {
        if (cur.peek() == '\n') lex_fail(file, span, "unterminated string literal");
        cur.advance();
      }
      if (cur.done()) lex_fail(file, span, "unterminated string literal");
      std::string content(text.substr(content_start, cur.pos - content_start));
      cur.advance(); // closing quote
      span.length = cur.pos - span.offset;
      out.push_back(Token{TokenKind::String, std::move(content), span});
      continue;
    }
    if (ident_start(c)) {
      Span span = cur.here();
      std::size_t start = cur.pos;
      while (!cur.done() && ident_char(cur.peek())) cur.advance();
      std::string word(text.substr(start, cur.pos - start));
      span.length = cur.pos - start;
      out.push_back(Token{is_keyword(word) ? TokenKind::Keyword : TokenKind::Ident,
                          std::move(word), span});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Span span = cur.here();
      std::size_t start = cur.pos;
      while (!cur.done() && std::isdigit(static_cast<unsigned char>(cur.peek()))) cur.advance();
      span.length = cur.pos - start;
      out.push_back(Token{TokenKind::Number, std::string(text.substr(start, span.length)), span});
      continue;
    }
    // punctuation, longest first
    static const std::array<std::string_view, 10> puncts = {"::", "..", ":", "[", "]",
                                                            "(",  ")",  ",", ".", "-"};
    bool matched = false;
    for (std::string_view p : puncts) {
      if (cur.starts_with(p)) {
        Span span = cur.here(p.size());
        cur.advance(p.size());
        out.push_back(Token{TokenKind::Sym, std::string(p), span});
        matched = true;
        break;
      }
    }
    if (!matched) lex_fail(file, cur.here(), std::string("stray character: ") + c);
  }
  out.push_back(Token{TokenKind::End, "", cur.here(0)});
  return out;
}

namespace {

struct Alias {
  std::string_view utf8;
  std::string_view ascii;
  bool is_name; // normalizes to a Name token rather than a symbol
};

// Unicode aliases accepted in formulas, normalized to the ASCII surface form.
const std::array<Alias, 8> kAliases = {{{"⟶", "-->", false}, // ⟶
                                        {"∨", "\\/", false}, // ∨
                                        {"∧", "/\\", false}, // ∧
                                        {"¬", "~", false},   // ¬
                                        {"↔", "<->", false}, // ↔
                                        {"⟹", "==>", false}, // ⟹
                                        {"⊥", "F", true},    // ⊥
                                        {"⊤", "T", true}}};  // ⊤

bool op_char(char c) {
  return std::string_view("-+*/\\<>=~!?&|^:.@#$%").find(c) != std::string_view::npos;
}

} // namespace

std::vector<FToken> tokenize_formula(std::string_view text, const std::string& file,
                                     Span content_span, const TheoryContext& ctx) {
  // Candidate symbols for longest-match, built-ins included.
  std::vector<std::string> symbols = ctx.operator_symbols();
  symbols.push_back("==>");
  symbols.push_back("==");
  std::sort(symbols.begin(), symbols.end(),
            [](const std::string& a, const std::string& b) { return a.size() > b.size(); });

  std::vector<FToken> out;
  Cursor cur{text};
  cur.line = content_span.line;
  cur.col = content_span.column;
  auto abs_span = [&](std::size_t len) {
    return Span{content_span.offset + cur.pos, len, cur.line, cur.col};
  };

  while (!cur.done()) {
    char c = cur.peek();
    if (std::isspace(static_cast<unsigned char>(c))) {
      cur.advance();
      continue;
    }
    if (c == '(') {
      out.push_back(FToken{FTokenKind::LParen, "(", abs_span(1)});
      cur.advance();
      continue;
    }
    if (c == ')') {
      out.push_back(FToken{FTokenKind::RParen, ")", abs_span(1)});
      cur.advance();
      continue;
    }
    bool aliased = false;
    for (const Alias& a : kAliases) {
      if (cur.starts_with(a.utf8)) {
        out.push_back(FToken{a.is_name ? FTokenKind::Name : FTokenKind::Sym,
                             std::string(a.ascii), abs_span(a.utf8.size())});
        cur.advance(a.utf8.size());
        aliased = true;
        break;
      }
    }
    if (aliased) continue;
    if (ident_start(c)) {
      Span span = abs_span(0);
      std::size_t start = cur.pos;
      while (!cur.done() && ident_char(cur.peek())) cur.advance();
      span.length = cur.pos - start;
      out.push_back(FToken{FTokenKind::Name, std::string(text.substr(start, span.length)), span});
      continue;
    }
    if (op_char(c)) {
      bool matched = false;
      for (const std::string& sym : symbols) {
        if (cur.starts_with(sym)) {
          out.push_back(FToken{FTokenKind::Sym, sym, abs_span(sym.size())});
          cur.advance(sym.size());
          matched = true;
          break;
        }
      }
      if (matched) continue;
      lex_fail(file, abs_span(1), std::string("unknown symbol starting at '") + c + "'");
    }
    lex_fail(file, abs_span(1), std::string("stray character in formula: ") + c);
  }
  out.push_back(FToken{FTokenKind::End, "", abs_span(0)});
  return out;
}

} // namespace pnd
