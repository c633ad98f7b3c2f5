// Independent decision procedures used as oracles against the kernel and as
// the CLI's `prove`/`table` commands: a contraction-free intuitionistic
// prover over the core connectives, and a classical truth-table checker.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pnd/context.hpp"
#include "pnd/syntax.hpp"

namespace pnd {

// Resource guard for the truth-table checker.
struct TooManyAtoms : std::runtime_error {
  explicit TooManyAtoms(std::size_t n)
      : std::runtime_error("refused: " + std::to_string(n) +
                           " distinct atoms exceeds the truth-table limit of 20") {}
};

// Core connective names the prover operates over; every defined constant is
// unfolded first.
inline constexpr const char* kImp = "Imp";
inline constexpr const char* kDis = "Dis";
inline constexpr const char* kCon = "Con";
inline constexpr const char* kFalsity = "Falsity";

// One node of a derivation: the sequent it concludes, the rule used, the
// principal formula (absent for axioms acting on the goal), and the premises.
struct Derivation {
  std::string rule;
  std::vector<Formula> context; // canonically ordered multiset
  Formula goal = Formula::atom("_");
  std::optional<Formula> principal;
  std::vector<Derivation> children;
};

struct Verdict {
  bool provable = false;
  std::optional<Derivation> derivation;
};

// Decides hyps |- goal in single-conclusion intuitionistic logic with the
// contraction-free rule set; terminates on all inputs without loop checking.
// Definitions from ctx are unfolded and schematics read as atoms.
Verdict g4ip(std::vector<Formula> hyps, const Formula& goal, const TheoryContext& ctx);
Verdict g4ip(const MetaProp& statement, const TheoryContext& ctx);

// Re-validates a derivation node by node: each conclusion must follow from
// its children by the named rule. Independent of the search itself.
bool replay_derivation(const Derivation& d);

// Indented text rendering, stable for golden tests.
std::string render_derivation(const Derivation& d, const TheoryContext& ctx);

// Classical validity by truth table; ==> and --> are both read as material
// implication. Refuses more than 20 distinct variables.
bool truth_table_valid(const MetaProp& p, const TheoryContext& ctx);
bool truth_table_valid(const Formula& f, const TheoryContext& ctx);

// Rows of the full table plus the verdict line, for the CLI.
std::string truth_table_text(const Formula& f, const TheoryContext& ctx);

inline constexpr int kMaxTruthTableAtoms = 20;

// All formulas over the core connectives and Falsity with at most max_size
// nodes, each exactly once, in a deterministic order.
std::vector<Formula> enumerate_formulas(const std::vector<std::string>& atoms,
                                        std::size_t max_size);

} // namespace pnd
