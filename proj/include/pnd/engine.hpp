// Interpreter for the declarative proof language: maintains the goal stack,
// block assumptions, named facts and the chained-fact register, driving the
// kernel operations. Facts remember which assumptions their proofs consumed,
// and a discharged goal must account for every consumption through its own
// hypotheses; this is what keeps the block discipline sound.

#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "pnd/context.hpp"
#include "pnd/kernel.hpp"
#include "pnd/parser.hpp"

namespace pnd {

struct RuleChoice {
  Span span;
  bool terminal = false; // true: a ".." terminal; false: a bare `proof` opener
  std::string rule;
};

struct CheckReport {
  std::vector<std::string> certified; // display names in registration order
  std::vector<RuleChoice> choices;    // implicit rule selections, in order
};

// Parses and checks a whole script against (and into) the context.
// Throws ParseError/CheckError with a formatted diagnostic.
CheckReport check_script(std::string_view text, const std::string& file, TheoryContext& ctx);

// Checks already-parsed items (parse_script must have run against this ctx).
CheckReport check_items(std::span<const Item> items, const std::string& file,
                        TheoryContext& ctx);

// Rewrites every implicit rule application recorded in `choices` into its
// explicit form: a ".." terminal becomes "by (rule R)", a bare `proof` opener
// becomes "proof (rule R)". Used to validate the explicit/implicit
// equivalence of the bundled corpus.
std::string rewrite_explicit(std::string_view source, std::span<const RuleChoice> choices);

} // namespace pnd
