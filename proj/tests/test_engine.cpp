#include <doctest.h>

#include "pnd/engine.hpp"
#include "pnd/printer.hpp"
#include "pnd/prover.hpp"
#include "pnd/stdlib.hpp"

#include "support.hpp"

using namespace pnd;

namespace {

CheckReport check(const std::string& script, TheoryContext& ctx) {
  return check_script(script, "test.pnd", ctx);
}

std::string error_of(const std::string& script) {
  TheoryContext ctx = base_context();
  try {
    check_script(script, "test.pnd", ctx);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

} // namespace

TEST_CASE("run_goal replays the derived truth introduction") {
  TheoryContext ctx = base_context();
  auto report = check("proposition t1: \"T\" unfolding Truth_def ..", ctx);
  CHECK(report.certified == std::vector<std::string>{"t1"});
  const Theorem* t1 = ctx.find_theorem("t1");
  REQUIRE(t1);
  CHECK(pretty(t1->statement(), ctx) == "T");
  // the double period picked the implication introduction
  REQUIRE(report.choices.size() == 1);
  CHECK(report.choices[0].rule == "Imp_I");
  CHECK(report.choices[0].terminal);
}

TEST_CASE("the full negation elimination proof walks assume/then/have/show") {
  TheoryContext ctx = base_context();
  auto report = check(R"(
lemma ne2: "~p ==> p ==> q"
  unfolding Neg_def
proof -
  assume "p --> F" and "p"
  then have "F" ..
  then show "q" ..
qed
)",
                      ctx);
  const Theorem* thm = ctx.find_theorem("ne2");
  REQUIRE(thm);
  CHECK(pretty(thm->statement(), ctx) == "~p ==> p ==> q");
  CHECK(contains_schematic(thm->statement()));
  // implicit selections: Imp_E for the have, Falsity_E for the show
  REQUIRE(report.choices.size() == 2);
  CHECK(report.choices[0].rule == "Imp_E");
  CHECK(report.choices[1].rule == "Falsity_E");
}

TEST_CASE("an exported theorem is usable at new instances") {
  TheoryContext ctx = base_context();
  check(R"(
theorem imp_refl: "p --> p"
proof (rule Imp_I)
  assume "p"
  then show "p" .
qed

proposition "(a \/ b) --> (a \/ b)"
  by (rule imp_refl)
)",
        ctx);
  CHECK(ctx.find_theorem("imp_refl"));
}

TEST_CASE("Peirce's law cannot be proved without the classical theory") {
  std::string err = error_of(testutil::slurp(testutil::fixture_path("peirce_attempt.pnd")));
  CHECK(err.find("no applicable rule") != std::string::npos);
  CHECK(err.find("goal:") != std::string::npos);

  // and citing the classical principle by name fails to resolve
  std::string err2 = error_of(R"(
proposition "((p --> q) --> p) --> p"
proof (rule Imp_I)
  assume hyp: "(p --> q) --> p"
  show "p"
  proof (rule classical)
    assume "~p"
    with hyp show "p" ..
  qed
qed
)");
  CHECK(err2.find("unknown theorem or fact: classical") != std::string::npos);
}

TEST_CASE("step_assume enforces the hypothesis prefix") {
  SUBCASE("assuming with no hypothesis left") {
    std::string err = error_of("proposition \"p\" proof - assume \"q\" qed");
    CHECK(err.find("nothing left to assume") != std::string::npos);
  }

  SUBCASE("assuming out of order names the expected hypothesis") {
    std::string err = error_of(R"(
proposition "p ==> q ==> p"
proof -
  assume "q"
qed
)");
    CHECK(err.find("expected: p") != std::string::npos);
  }

  SUBCASE("assumptions land in order and chain") {
    TheoryContext ctx = base_context();
    check(R"(
proposition "p --> F ==> p ==> q"
proof -
  assume "p --> F" and "p"
  then have "F" ..
  then show "q" ..
qed
)",
          ctx);
  }
}

TEST_CASE("step_have records local facts, optionally labeled") {
  TheoryContext ctx = base_context();
  check(R"(
proposition "T"
proof -
  have "T" unfolding Truth_def ..
  then show "T" .
qed
)",
        ctx);
}

TEST_CASE("chaining: then, from, with") {
  SUBCASE("with puts the named facts before the current ones") {
    // Imp_E needs [p --> q, p] in exactly that order.
    TheoryContext ctx = base_context();
    check(R"(
proposition "p --> q ==> p ==> q"
proof -
  assume imp: "p --> q"
  assume "p"
  with imp have "q" ..
  then show "q" .
qed
)",
          ctx);
  }

  SUBCASE("from drops the current facts") {
    TheoryContext ctx = base_context();
    check(R"(
proposition "p --> q ==> p ==> q"
proof -
  assume imp: "p --> q"
  assume prem: "p"
  from imp prem have "q" ..
  then show "q" .
qed
)",
          ctx);
  }

  SUBCASE("unknown fact names are errors") {
    std::string err = error_of(R"(
proposition "p ==> p"
proof -
  assume "p"
  from nowhere show "p" .
qed
)");
    CHECK(err.find("unknown fact: nowhere") != std::string::npos);
  }
}

TEST_CASE("step_next resets the local context") {
  SUBCASE("facts and assumptions from the first branch are gone") {
    std::string err = error_of(testutil::slurp(testutil::fixture_path("broken_next_fact.pnd")));
    CHECK(err.find("unknown fact: h1") != std::string::npos);
  }

  SUBCASE("next with no pending goals is accepted") {
    TheoryContext ctx = base_context();
    check(R"(
proposition "p ==> p"
proof -
  assume "p"
  then show "p" .
  next
qed
)",
          ctx);
  }

  SUBCASE("next twice in a row is idempotent") {
    TheoryContext ctx = base_context();
    check(R"(
proposition "p /\ q <-> q /\ p"
proof (rule Iff_I)
  assume pq: "p /\ q"
  then have a1: "q" ..
  from pq have a2: "p" ..
  from a1 a2 show "q /\ p" ..
next
next
  assume qp: "q /\ p"
  then have b1: "p" ..
  from qp have b2: "q" ..
  from b1 b2 show "p /\ q" ..
qed
)",
          ctx);
  }
}

TEST_CASE("method application") {
  SUBCASE("single period proves immediate facts") {
    TheoryContext ctx = base_context();
    check(R"(
proposition "p ==> p"
proof -
  assume "p"
  then show "p" .
qed
)",
          ctx);
  }

  SUBCASE("single period refuses non-immediate goals") {
    std::string err =
        error_of(testutil::slurp(testutil::fixture_path("broken_dot_nonimmediate.pnd")));
    CHECK(err.find("not an immediate consequence") != std::string::npos);
    CHECK(err.find("goal:") != std::string::npos);
  }

  SUBCASE("rule with an explicit name leaves pending goals for the body") {
    TheoryContext ctx = base_context();
    auto report = check(R"(
proposition "a --> b --> a"
proof (rule Imp_I)
  assume "a"
  show "b --> a"
  proof (rule Imp_I)
    assume "b"
    show "a" .
  qed
qed
)",
                        ctx);
    CHECK(report.choices.empty()); // everything explicit
  }

  SUBCASE("no applicable rule lists the rules it tried") {
    std::string err = error_of("proposition \"p\" ..");
    CHECK(err.find("no applicable rule") != std::string::npos);
    CHECK(err.find("Imp_I") != std::string::npos);
    CHECK(err.find("Iff_I") != std::string::npos);
  }
}

TEST_CASE("show discharge checks") {
  SUBCASE("wrong show formula") {
    std::string err = error_of(testutil::slurp(testutil::fixture_path("broken_wrong_show.pnd")));
    CHECK(err.find("failed to refine any pending goal") != std::string::npos);
  }

  SUBCASE("unassumed hypothesis") {
    std::string err =
        error_of(testutil::slurp(testutil::fixture_path("broken_unassumed_hyp.pnd")));
    CHECK(err.find("hypothesis was never assumed") != std::string::npos);
  }

  SUBCASE("an assumption cannot leak into a sibling goal") {
    std::string script = testutil::slurp(testutil::fixture_path("broken_smuggle.pnd"));
    std::string err = error_of(script);
    CHECK(err.find("not a hypothesis of the shown goal") != std::string::npos);

    // The statement the broken proof would have exported is classically
    // invalid, which is why the engine must reject it.
    TheoryContext ctx = base_context();
    CHECK(!truth_table_valid(parse_metaprop("(p ==> q) ==> p <-> q", ctx), ctx));
  }
}

TEST_CASE("qed requires an empty goal stack") {
  std::string err = error_of(testutil::slurp(testutil::fixture_path("broken_open_goal.pnd")));
  CHECK(err.find("no remaining goals") != std::string::npos);
  CHECK(err.find("goal:") != std::string::npos);
}

TEST_CASE("duplicate theorem names are rejected with the goal printed") {
  std::string err =
      error_of(testutil::slurp(testutil::fixture_path("broken_duplicate_name.pnd")));
  CHECK(err.find("duplicate theorem name: Truth_I") != std::string::npos);
  CHECK(err.find("goal: T") != std::string::npos);
}

TEST_CASE("error diagnostics carry the normative format") {
  std::string err = error_of(testutil::slurp(testutil::fixture_path("broken_open_goal.pnd")));
  CHECK(err.find("test.pnd:") == 0);
  CHECK(err.find(": error: ") != std::string::npos);
  CHECK(err.find("\n  goal: ") != std::string::npos);
  CHECK(err.find("\n  chained: ") != std::string::npos);
}

TEST_CASE("rechecking is deterministic") {
  auto run = [] {
    TheoryContext ctx = base_context();
    return check_script(stdlib_source("examples"), "examples.pnd", ctx);
  };
  CheckReport a = run();
  CheckReport b = run();
  CHECK(a.certified == b.certified);
  REQUIRE(a.choices.size() == b.choices.size());
  for (std::size_t i = 0; i < a.choices.size(); ++i) {
    CHECK(a.choices[i].rule == b.choices[i].rule);
    CHECK(a.choices[i].span.offset == b.choices[i].span.offset);
  }
}

TEST_CASE("explicit rewriting of the implicit steps re-checks") {
  TheoryContext ctx = base_context();
  std::string source(stdlib_source("examples"));
  CheckReport original = check_script(source, "examples.pnd", ctx);

  std::string rewritten = rewrite_explicit(source, original.choices);
  CHECK(rewritten.find("..") == std::string::npos);

  TheoryContext ctx2 = base_context();
  CheckReport again = check_script(rewritten, "examples_explicit.pnd", ctx2);
  CHECK(again.certified == original.certified);
  CHECK(again.choices.empty()); // nothing implicit left
}
