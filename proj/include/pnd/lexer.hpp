#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pnd/context.hpp"
#include "pnd/diagnostics.hpp"

namespace pnd {

enum class TokenKind { Ident, Keyword, String, Number, Sym, End };

struct Token {
  TokenKind kind;
  std::string text; // string tokens: the content without quotes
  Span span;
};

bool is_keyword(std::string_view word);

// Script-level tokenizer: identifiers, keywords, quoted strings, numbers,
// punctuation. Comments (* ... *) nest and are skipped.
std::vector<Token> tokenize(std::string_view text, const std::string& file);

// Formula-level tokens produced from the contents of a quoted string.
enum class FTokenKind { Name, Sym, LParen, RParen, End };

struct FToken {
  FTokenKind kind;
  std::string text; // symbols normalized to their ASCII form
  Span span;
};

// Splits operator characters by longest match against the context's declared
// symbols plus the built-in "==>" and "==". Unicode aliases are normalized.
std::vector<FToken> tokenize_formula(std::string_view text, const std::string& file,
                                     Span content_span, const TheoryContext& ctx);

} // namespace pnd
