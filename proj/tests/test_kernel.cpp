#include <doctest.h>

#include <set>

#include "pnd/kernel.hpp"
#include "pnd/parser.hpp"
#include "pnd/printer.hpp"
#include "pnd/prover.hpp"
#include "pnd/stdlib.hpp"

#include "support.hpp"

using namespace pnd;

namespace {

Formula F(const std::string& text, const TheoryContext& ctx) {
  return parse_formula(text, ctx);
}

MetaProp MP(const std::string& text, const TheoryContext& ctx) {
  return parse_metaprop(text, ctx);
}

// Brute-force matching oracle: try every assignment of the pattern's
// schematics to subformulas of the target and keep those that reproduce it.
void subformulas(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  for (const auto& a : f.args()) subformulas(a, out);
}

void subformulas(const MetaProp& p, std::vector<Formula>& out) {
  if (p.is_judgment()) {
    subformulas(p.formula(), out);
  } else {
    subformulas(p.premise(), out);
    subformulas(p.conclusion(), out);
  }
}

std::vector<Substitution> brute_force_matches(const MetaProp& pattern, const MetaProp& target) {
  std::vector<std::string> vars;
  {
    MetaProp atomized = atomize_schematics(pattern);
    std::vector<std::string> all;
    collect_atom_names(pattern, all); // atoms in the pattern stay fixed
    collect_atom_names(atomized, vars);
    std::vector<std::string> schematics;
    for (const auto& v : vars) {
      bool is_atom = false;
      for (const auto& a : all) is_atom = is_atom || a == v;
      if (!is_atom) schematics.push_back(v);
    }
    vars = schematics;
  }
  std::vector<Formula> candidates;
  subformulas(target, candidates);

  std::vector<Substitution> found;
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) s.emplace(vars[i], candidates[idx[i]]);
    if (apply_subst(s, pattern) == target) {
      bool fresh = true;
      for (const auto& prev : found) fresh = fresh && !(prev == s);
      if (fresh) found.push_back(s);
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == candidates.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return found;
}

} // namespace

TEST_CASE("match: one-sided first-order matching") {
  TheoryContext ctx = base_context();

  SUBCASE("premise of modus ponens against a compound instance") {
    MetaProp pattern = MetaProp::judg(generalize_atoms(F("p --> q", ctx)));
    MetaProp target = MetaProp::judg(F("(a \\/ b) --> c", ctx));
    auto sub = match(pattern, target, {});
    REQUIRE(sub);
    CHECK(sub->at("p") == F("a \\/ b", ctx));
    CHECK(sub->at("q") == F("c", ctx));
    CHECK(apply_subst(*sub, pattern) == target);

    auto oracle = brute_force_matches(pattern, target);
    REQUIRE(oracle.size() == 1);
    CHECK(oracle[0] == *sub);
  }

  SUBCASE("head mismatch fails") {
    MetaProp pattern = MetaProp::judg(generalize_atoms(F("p \\/ q", ctx)));
    CHECK(!match(pattern, MetaProp::judg(F("a /\\ b", ctx)), {}));
  }

  SUBCASE("conflicting bindings fail") {
    MetaProp pattern = MetaProp::judg(generalize_atoms(F("p \\/ p", ctx)));
    auto ok = match(pattern, MetaProp::judg(F("a \\/ a", ctx)), {});
    REQUIRE(ok);
    CHECK(ok->at("p") == Formula::atom("a"));
    CHECK(!match(pattern, MetaProp::judg(F("a \\/ b", ctx)), {}));
  }

  SUBCASE("a non-ground target is a contract violation") {
    CHECK_THROWS_AS(match(MetaProp::judg(Formula::schematic("p")),
                          MetaProp::judg(Formula::schematic("x")), {}),
                    std::logic_error);
  }
}

TEST_CASE("apply_rule_intro") {
  TheoryContext ctx = base_context();
  const MetaProp& imp_i = ctx.find_theorem("Imp_I")->statement();
  const MetaProp& dis_i1 = ctx.find_theorem("Dis_I1")->statement();
  const MetaProp& con_i = ctx.find_theorem("Con_I")->statement();
  const MetaProp& imp_e = ctx.find_theorem("Imp_E")->statement();

  SUBCASE("Imp_I on |- F --> F") {
    Goal goal{{}, F("F --> F", ctx)};
    auto goals = apply_rule_intro(imp_i, goal);
    REQUIRE(goals);
    REQUIRE(goals->size() == 1);
    CHECK((*goals)[0].hyps == std::vector<MetaProp>{MP("F", ctx)});
    CHECK((*goals)[0].concl == F("F", ctx));
  }

  SUBCASE("Dis_I1 on |- a \\/ b") {
    Goal goal{{}, F("a \\/ b", ctx)};
    auto goals = apply_rule_intro(dis_i1, goal);
    REQUIRE(goals);
    REQUIRE(goals->size() == 1);
    CHECK((*goals)[0].hyps.empty());
    CHECK((*goals)[0].concl == Formula::atom("a"));
  }

  SUBCASE("Con_I on |- a /\\ b splits, and the instance is classically sound") {
    Goal goal{{}, F("a /\\ b", ctx)};
    auto goals = apply_rule_intro(con_i, goal);
    REQUIRE(goals);
    REQUIRE(goals->size() == 2);
    CHECK((*goals)[0].concl == Formula::atom("a"));
    CHECK((*goals)[1].concl == Formula::atom("b"));
    // truth-table check of the instantiated rule: a ==> b ==> a /\ b
    auto sub = match(premises_and_conclusion(con_i).conclusion, goal.concl, {});
    REQUIRE(sub);
    CHECK(truth_table_valid(apply_subst(*sub, con_i), ctx));
  }

  SUBCASE("a premise-only schematic left free fails, naming no goals") {
    // Imp_E used as an intro rule: its conclusion q binds, p stays free.
    Goal goal{{}, Formula::atom("c")};
    CHECK(!apply_rule_intro(imp_e, goal));
  }

  SUBCASE("goals extend the input goal's hypotheses") {
    Goal goal{{MP("h1", ctx), MP("h2 ==> h3", ctx)}, F("x --> y", ctx)};
    auto goals = apply_rule_intro(imp_i, goal);
    REQUIRE(goals);
    for (const Goal& g : *goals) {
      REQUIRE(g.hyps.size() >= goal.hyps.size());
      for (std::size_t i = 0; i < goal.hyps.size(); ++i) CHECK(g.hyps[i] == goal.hyps[i]);
    }
  }
}

TEST_CASE("apply_rule_elim") {
  TheoryContext ctx = base_context();
  const MetaProp& imp_e = ctx.find_theorem("Imp_E")->statement();
  const MetaProp& falsity_e = ctx.find_theorem("Falsity_E")->statement();
  const MetaProp& dis_e = ctx.find_theorem("Dis_E")->statement();

  SUBCASE("Imp_E with both premises chained leaves nothing") {
    std::vector<MetaProp> chained{MP("p --> F", ctx), MP("p", ctx)};
    Goal goal{{}, F("F", ctx)};
    auto goals = apply_rule_elim(imp_e, chained, goal);
    REQUIRE(goals);
    CHECK(goals->empty());
  }

  SUBCASE("Falsity_E concludes anything from F") {
    std::vector<MetaProp> chained{MP("F", ctx)};
    Goal goal{{}, Formula::atom("q")};
    auto goals = apply_rule_elim(falsity_e, chained, goal);
    REQUIRE(goals);
    CHECK(goals->empty());
  }

  SUBCASE("Dis_E produces the two hypothetical branches") {
    std::vector<MetaProp> chained{MP("a \\/ b", ctx)};
    Goal goal{{}, Formula::atom("c")};
    auto goals = apply_rule_elim(dis_e, chained, goal);
    REQUIRE(goals);
    REQUIRE(goals->size() == 2);
    CHECK((*goals)[0].hyps == std::vector<MetaProp>{MP("a", ctx)});
    CHECK((*goals)[0].concl == Formula::atom("c"));
    CHECK((*goals)[1].hyps == std::vector<MetaProp>{MP("b", ctx)});
    CHECK((*goals)[1].concl == Formula::atom("c"));
  }

  SUBCASE("more chained facts than premises fails") {
    std::vector<MetaProp> chained{MP("F", ctx), MP("p", ctx)};
    CHECK(!apply_rule_elim(falsity_e, chained, Goal{{}, Formula::atom("q")}));
  }
}

TEST_CASE("close_by_assumption") {
  TheoryContext ctx = base_context();

  SUBCASE("a hypothesis discharges the matching conclusion") {
    Goal goal{{MP("F", ctx)}, F("F", ctx)};
    CHECK(close_by_assumption(goal, {}));
  }

  SUBCASE("a fact discharges the conclusion") {
    Goal goal{{}, Formula::atom("p")};
    std::vector<MetaProp> facts{MP("p", ctx)};
    CHECK(close_by_assumption(goal, facts));
  }

  SUBCASE("no hypothesis, no fact: failure") {
    CHECK(!close_by_assumption(Goal{{}, Formula::atom("p")}, {}));
  }

  SUBCASE("a hypothetical premise closes against a matching hypothesis") {
    // (p ==> F) ==> p ==> F, the residual goal of Neg_I after Imp_I.
    Goal goal{{MP("p ==> F", ctx), MP("p", ctx)}, F("F", ctx)};
    auto info = close_by_assumption_ex(goal, {});
    REQUIRE(info);
    CHECK(info->suffix_start == 1);
    CHECK(info->fact_index == -1);
  }
}

TEST_CASE("unfold") {
  TheoryContext ctx = base_context();
  std::vector<DefEq> all = ctx.all_defs();
  auto def_of = [&](const char* name) {
    const DefEq* d = ctx.find_def(name);
    REQUIRE(d);
    return *d;
  };

  SUBCASE("Truth_def turns T into F --> F") {
    std::vector<DefEq> defs{def_of("Truth_def")};
    CHECK(unfold(defs, F("T", ctx)) == F("F --> F", ctx));
  }

  SUBCASE("Neg_def rewrites inside meta-implications") {
    std::vector<DefEq> defs{def_of("Neg_def")};
    CHECK(unfold(defs, MP("~p ==> p ==> q", ctx)) == MP("(p --> F) ==> p ==> q", ctx));
  }

  SUBCASE("Iff_def expands to the conjunction of both directions") {
    std::vector<DefEq> defs{def_of("Iff_def")};
    CHECK(unfold(defs, F("p <-> q", ctx)) == F("(p --> q) /\\ (q --> p)", ctx));
  }

  SUBCASE("idempotent and head-eliminating on defined-constant formulas") {
    for (const char* text : {"~(p <-> T)", "~ ~T", "T /\\ ~p <-> (q --> T)", "~(T <-> ~q)"}) {
      Formula f = F(text, ctx);
      Formula once = unfold(all, f);
      CHECK(unfold(all, once) == once);
      CHECK(!mentions_constant(once, "Truth"));
      CHECK(!mentions_constant(once, "Neg"));
      CHECK(!mentions_constant(once, "Iff"));
    }
  }
}

TEST_CASE("registration and export") {
  SUBCASE("axioms are generalized on registration") {
    TheoryContext ctx = base_context();
    const Theorem& lem =
        ctx.register_axiom("LEM", {}, parse_metaprop("p \\/ ~p", ctx), "t", Span{});
    CHECK(contains_schematic(lem.statement()));
    CHECK(lem.origin() == TheoremOrigin::Axiom);
    CHECK(pretty(lem.statement(), ctx) == "p \\/ ~p");
  }

  SUBCASE("duplicate names are rejected") {
    TheoryContext ctx = base_context();
    CHECK_THROWS_AS(
        ctx.register_axiom("Imp_I", {}, parse_metaprop("p", ctx), "t", Span{}),
        CheckError);
  }

  SUBCASE("a self-referential definition is a cycle of length one") {
    TheoryContext ctx = base_context();
    ctx.declare_connective(ConnectiveDecl{"Loop", 1, MixfixDecl{MixfixKind::Prefix, "!", 6}},
                           "t", Span{});
    DefEq bad{"Loop", {"p"}, Formula::app("Loop", {Formula::schematic("p")})};
    CHECK_THROWS_AS(ctx.register_definition(bad, "t", Span{}), CheckError);
  }

  SUBCASE("intro attribute registers in the intro table") {
    TheoryContext ctx = base_context();
    auto intros = ctx.intro_rules();
    REQUIRE(intros.size() == 7);
    CHECK(intros[0]->name() == "Imp_I");
    CHECK(intros[4]->name() == "Truth_I");
    auto elims = ctx.elim_rules();
    REQUIRE(elims.size() == 8);
    CHECK(elims[0]->name() == "Imp_E");
    CHECK(elims[4]->name() == "Falsity_E");
  }
}
