// pnd: check theory scripts, run the decision procedures, print diagnostics.
//
//   pnd check [--classical] [--no-base] [--trace] FILE...
//   pnd prove [--classical] [--hyps "F1; F2; ..."] "GOAL"
//   pnd table "GOAL"
//
// Exit codes: 0 success/provable, 1 check-failure/unprovable, 2 usage,
// parse or I/O error. Results go to stdout, diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pnd/engine.hpp"
#include "pnd/parser.hpp"
#include "pnd/printer.hpp"
#include "pnd/prover.hpp"
#include "pnd/stdlib.hpp"

namespace {

int cmd_check(const std::vector<std::string>& files, bool classical, bool no_base, bool trace) {
  pnd::TheoryContext ctx;
  auto report = [&](const pnd::CheckReport& r) {
    if (trace)
      for (const auto& name : r.certified) std::cout << "ok: " << name << '\n';
  };
  try {
    if (!no_base) report(pnd::load_base(ctx));
    if (classical) report(pnd::load_classical(ctx));
    for (const std::string& path : files) {
      std::string text;
      if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
      } else {
        std::ifstream in(path);
        if (!in) {
          std::cerr << "pnd: cannot read " << path << '\n';
          return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
      }
      report(pnd::check_script(text, path == "-" ? "<stdin>" : path, ctx));
    }
  } catch (const pnd::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 0;
}

int cmd_prove(const std::string& goal_text, const std::string& hyps_text, bool classical,
              bool trace) {
  pnd::TheoryContext ctx;
  try {
    pnd::load_base(ctx);
  } catch (const pnd::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  try {
    pnd::Formula goal = pnd::parse_formula(goal_text, ctx, "<goal>");
    std::vector<pnd::Formula> hyps;
    std::stringstream ss(hyps_text);
    std::string part;
    while (std::getline(ss, part, ';')) {
      if (part.find_first_not_of(" \t") == std::string::npos) continue;
      hyps.push_back(pnd::parse_formula(part, ctx, "<hyps>"));
    }
    if (classical) {
      if (!hyps.empty()) {
        // H1; ...; Hn |= G classically iff H1 /\ ... /\ Hn --> G is valid.
        pnd::Formula acc = goal;
        for (std::size_t i = hyps.size(); i-- > 0;)
          acc = pnd::Formula::app("Imp", {hyps[i], acc});
        goal = acc;
      }
      bool valid = pnd::truth_table_valid(goal, ctx);
      std::cout << (valid ? "valid" : "invalid") << '\n';
      return valid ? 0 : 1;
    }
    pnd::Verdict verdict = pnd::g4ip(hyps, goal, ctx);
    std::cout << (verdict.provable ? "provable" : "unprovable") << '\n';
    if (trace && verdict.derivation)
      std::cout << pnd::render_derivation(*verdict.derivation, ctx);
    return verdict.provable ? 0 : 1;
  } catch (const pnd::TooManyAtoms& e) {
    std::cerr << "pnd: " << e.what() << '\n';
    return 2;
  } catch (const pnd::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

int cmd_table(const std::string& goal_text) {
  pnd::TheoryContext ctx;
  try {
    pnd::load_base(ctx);
  } catch (const pnd::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  try {
    pnd::Formula goal = pnd::parse_formula(goal_text, ctx, "<goal>");
    std::cout << pnd::truth_table_text(goal, ctx);
    return pnd::truth_table_valid(goal, ctx) ? 0 : 1;
  } catch (const pnd::TooManyAtoms& e) {
    std::cerr << "pnd: " << e.what() << '\n';
    return 2;
  } catch (const pnd::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"pure-nd: a miniature natural deduction proof checker"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Check theory scripts");
  std::vector<std::string> files;
  bool classical = false, no_base = false, trace = false;
  check->add_option("files", files, "Theory files (- for stdin)")->required();
  check->add_flag("--classical", classical, "Load the classical theory before the files");
  check->add_flag("--no-base", no_base, "Do not load the base theory");
  check->add_flag("--trace", trace, "Print ok: NAME for every certified item");

  auto* prove = app.add_subcommand("prove", "Decide a formula");
  std::string goal, hyps;
  bool prove_classical = false, prove_trace = false;
  prove->add_option("goal", goal, "Goal formula")->required();
  prove->add_option("--hyps", hyps, "Semicolon-separated hypotheses");
  prove->add_flag("--classical", prove_classical, "Truth-table validity instead of G4ip");
  prove->add_flag("--trace", prove_trace, "Print the derivation when provable");

  auto* table = app.add_subcommand("table", "Print the truth table of a formula");
  std::string table_goal;
  table->add_option("goal", table_goal, "Goal formula")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (check->parsed()) return cmd_check(files, classical, no_base, trace);
  if (prove->parsed()) return cmd_prove(goal, hyps, prove_classical, prove_trace);
  return cmd_table(table_goal);
}
