// Trusted core operations: one-sided first-order matching, rule application
// against goals, assumption closure, and definitional unfolding. The proof
// engine composes these; nothing else manufactures judgments.

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pnd/context.hpp"
#include "pnd/syntax.hpp"

namespace pnd {

// An open goal: hyps_1 ==> ... ==> hyps_n ==> Judg(concl), all ground.
struct Goal {
  std::vector<MetaProp> hyps;
  Formula concl = Formula::atom("_");

  MetaProp as_metaprop() const {
    return fold_metaprop(hyps, MetaProp::judg(concl));
  }
};

// One-sided matching: the target is ground, schematics occur in the pattern
// only. On success, apply_subst(result, pattern) == target and the result
// extends seed. Failure is a normal outcome, not an error.
std::optional<Substitution> match(const Formula& pattern, const Formula& target,
                                  Substitution seed);
std::optional<Substitution> match(const MetaProp& pattern, const MetaProp& target,
                                  Substitution seed);

// Backward application of a rule's conclusion to the goal's conclusion. Every
// schematic of the rule must be bound by the conclusion match; each premise,
// instantiated, becomes a goal extending the input goal's hypotheses.
std::optional<std::vector<Goal>> apply_rule_intro(const MetaProp& rule, const Goal& goal);

// Forward-and-backward application: rule premise i is matched against chained
// fact i (a prefix of the premises), the conclusion against the goal's; the
// remaining premises become goals. Fails if more facts than premises are
// supplied or any remaining premise is left with unbound schematics.
std::optional<std::vector<Goal>> apply_rule_elim(const MetaProp& rule,
                                                 std::span<const MetaProp> chained,
                                                 const Goal& goal);

// Assumption closure. A goal H_1 ==> ... ==> H_n ==> C closes when, for some
// suffix H_j..H_n, the proposition H_j ==> ... ==> H_n ==> C is itself among
// the earlier hypotheses or the supplied facts; j = n is the plain case of C
// being available directly. This is the lifted form needed to discharge
// hypothetical premises such as (p ==> F) against a matching hypothesis.
struct CloseInfo {
  std::size_t suffix_start = 0; // j
  int fact_index = -1;          // -1: closed by one of the goal's own hypotheses
};

std::optional<CloseInfo> close_by_assumption_ex(const Goal& goal,
                                                std::span<const MetaProp> facts);
bool close_by_assumption(const Goal& goal, std::span<const MetaProp> facts);

// Exhaustive innermost-first rewriting by the given definitional equations;
// the result contains none of the listed heads. Terminates by acyclicity of
// the definition set.
Formula unfold(std::span<const DefEq> defs, const Formula& f);
MetaProp unfold(std::span<const DefEq> defs, const MetaProp& p);
Goal unfold(std::span<const DefEq> defs, const Goal& g);

} // namespace pnd
