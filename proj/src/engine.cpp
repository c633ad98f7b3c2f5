#include "pnd/engine.hpp"

#include <algorithm>
#include <sstream>

#include "pnd/printer.hpp"

namespace pnd {

namespace {

// A usable fact: its proposition plus the assumptions its derivation consumed.
struct ChainFact {
  MetaProp prop = MetaProp::judg(Formula::atom("_"));
  std::set<int> deps;
};

// Local context of one structured proof block.
struct Scope {
  Scope* parent = nullptr;
  std::vector<Goal> pending;
  std::vector<int> assumptions; // ids live in this block
  std::map<std::string, ChainFact> named;
  std::vector<ChainFact> this_reg;
  std::optional<std::vector<ChainFact>> staged; // set by then/from/with
  std::set<int> escaped; // consumptions owed to enclosing blocks
};

std::vector<MetaProp> props_of(const std::vector<ChainFact>& facts) {
  std::vector<MetaProp> out;
  out.reserve(facts.size());
  for (const auto& f : facts) out.push_back(f.prop);
  return out;
}

class Checker {
public:
  Checker(TheoryContext& ctx, std::string file) : ctx_(ctx), file_(std::move(file)) {}

  CheckReport run(std::span<const Item> items) {
    for (const Item& item : items) {
      if (const auto* ax = std::get_if<AxiomatizationItem>(&item)) {
        for (const RuleSrc& rule : ax->rules) {
          ctx_.register_axiom(rule.name, rule.attrs, rule.statement, file_, rule.span);
          report_.certified.push_back(rule.name);
        }
      } else if (const auto* def = std::get_if<DefinitionItem>(&item)) {
        ctx_.register_definition(def->def, file_, def->span);
        report_.certified.push_back(def->def.head + "_def");
      } else {
        run_goal_item(std::get<GoalItem>(item));
      }
    }
    return std::move(report_);
  }

private:
  // --- diagnostics -------------------------------------------------------
  [[noreturn]] void fail(Span span, std::string msg, const Goal* goal = nullptr,
                         const std::vector<ChainFact>* chained = nullptr) {
    Diagnostic d{file_, span, std::move(msg), std::nullopt, std::nullopt};
    if (goal) {
      d.goal = pretty(goal->as_metaprop(), ctx_);
      std::string ch;
      if (chained) {
        for (std::size_t i = 0; i < chained->size(); ++i) {
          if (i) ch += ", ";
          ch += pretty((*chained)[i].prop, ctx_);
        }
      }
      d.chained = ch;
    }
    throw CheckError(std::move(d));
  }

  // --- assumption registry -------------------------------------------------
  int new_assumption(const MetaProp& prop) {
    assumption_props_.push_back(prop);
    assumption_live_.push_back(true);
    return static_cast<int>(assumption_props_.size()) - 1;
  }

  bool prop_is_assumed(const MetaProp& prop) const {
    for (std::size_t i = 0; i < assumption_props_.size(); ++i)
      if (assumption_live_[i] && assumption_props_[i] == prop) return true;
    return false;
  }

  std::vector<ChainFact> active_assumption_facts() const {
    std::vector<ChainFact> out;
    for (std::size_t i = 0; i < assumption_props_.size(); ++i)
      if (assumption_live_[i])
        out.push_back(ChainFact{assumption_props_[i], {static_cast<int>(i)}});
    return out;
  }

  // --- fact resolution -----------------------------------------------------
  ChainFact resolve_fact(const std::string& name, Scope* scope, Span span) {
    for (Scope* s = scope; s; s = s->parent) {
      auto it = s->named.find(name);
      if (it != s->named.end()) return it->second;
    }
    if (const Theorem* thm = ctx_.find_theorem(name))
      return ChainFact{atomize_schematics(thm->statement()), {}};
    const Goal* g = scope && !scope->pending.empty() ? &scope->pending.front() : nullptr;
    fail(span, "unknown fact: " + name, g);
  }

  struct ResolvedRule {
    MetaProp statement = MetaProp::judg(Formula::atom("_"));
    std::set<int> deps;
    std::string name;
  };

  ResolvedRule resolve_rule(const std::string& name, Scope* scope, Span span, const Goal* goal) {
    for (Scope* s = scope; s; s = s->parent) {
      auto it = s->named.find(name);
      if (it != s->named.end()) return ResolvedRule{it->second.prop, it->second.deps, name};
    }
    if (const Theorem* thm = ctx_.find_theorem(name))
      return ResolvedRule{thm->statement(), {}, name};
    fail(span, "unknown theorem or fact: " + name, goal);
  }

  // --- goal items ------------------------------------------------------------
  void run_goal_item(const GoalItem& item) {
    RuleView view = premises_and_conclusion(item.statement);
    Goal goal{view.premises, view.conclusion};
    std::set<int> consumed = run_body(item.proof, goal, {}, nullptr, item.span);
    if (!consumed.empty())
      fail(item.span, "proof depends on undischarged assumptions", &goal);
    try {
      ctx_.export_theorem(item.name, item.attrs, item.statement, file_, item.span);
    } catch (const CheckError& e) {
      // Re-raise registration failures with the goal attached.
      fail(item.span, e.diagnostic().message, &goal);
    }
    report_.certified.push_back(item.display);
  }

  // --- proof bodies ---------------------------------------------------------
  std::set<int> run_body(const ProofBody& body, Goal goal, std::vector<ChainFact> chained,
                         Scope* parent, Span span) {
    if (!body.unfolds.empty()) {
      std::vector<DefEq> defs;
      for (const std::string& name : body.unfolds) {
        const DefEq* d = ctx_.find_def(name);
        if (!d) fail(body.unfolds_span, "unknown definition: " + name, &goal, &chained);
        defs.push_back(*d);
      }
      goal = unfold(defs, goal);
      for (ChainFact& f : chained) f.prop = unfold(defs, f.prop);
    }

    if (body.kind == ProofBody::Kind::Terminal)
      return apply_terminal(body.terminal, body.terminal_dots, goal, chained, parent);

    Scope scope;
    scope.parent = parent;
    open_proof(body, goal, chained, scope);

    for (const Step& step : body.steps) run_step(step, scope);

    if (!scope.pending.empty())
      fail(body.qed_span,
           "qed: " + std::to_string(scope.pending.size()) +
               " goal(s) remain; qed only succeeds if there are no remaining goals",
           &scope.pending.front(), &scope.this_reg);
    retire(scope);
    return std::move(scope.escaped);
  }

  void retire(Scope& scope) {
    for (int id : scope.assumptions) assumption_live_[id] = false;
  }

  void open_proof(const ProofBody& body, const Goal& goal, const std::vector<ChainFact>& chained,
                  Scope& scope) {
    switch (body.opener) {
      case ProofBody::Opener::Dash:
        scope.pending = {goal};
        scope.this_reg = chained;
        return;
      case ProofBody::Opener::Default:
        open_with_standard(goal, chained, scope, body.opener_span, /*implicit=*/true);
        return;
      case ProofBody::Opener::Explicit:
        switch (body.opener_method.kind) {
          case Method::Kind::Standard:
            open_with_standard(goal, chained, scope, body.opener_method.span,
                               /*implicit=*/false);
            return;
          case Method::Kind::This: {
            auto info = close_by_assumption_ex(goal, props_of(chained));
            if (!info)
              fail(body.opener_method.span,
                   "the goal is not an immediate consequence of the chained facts", &goal,
                   &chained);
            if (info->fact_index >= 0)
              scope.escaped.insert(chained[info->fact_index].deps.begin(),
                                   chained[info->fact_index].deps.end());
            return;
          }
          case Method::Kind::Rule: {
            ResolvedRule rule =
                resolve_rule(body.opener_method.rule_name, scope.parent, body.opener_method.span,
                             &goal);
            auto goals = chained.empty()
                             ? apply_rule_intro(rule.statement, goal)
                             : apply_rule_elim(rule.statement, props_of(chained), goal);
            if (!goals)
              fail(body.opener_method.span, "rule " + rule.name + " is not applicable to the goal",
                   &goal, &chained);
            scope.escaped.insert(rule.deps.begin(), rule.deps.end());
            if (!chained.empty())
              for (const ChainFact& f : chained)
                scope.escaped.insert(f.deps.begin(), f.deps.end());
            scope.pending = std::move(*goals);
            return;
          }
        }
    }
  }

  // Bare `proof` (and an explicit `proof standard`): pick the first
  // registered rule that applies and leave its subgoals pending.
  void open_with_standard(const Goal& goal, const std::vector<ChainFact>& chained, Scope& scope,
                          Span span, bool implicit) {
    std::vector<std::string> tried;
    auto try_phase = [&](const std::vector<const Theorem*>& rules, bool as_elim) -> bool {
      for (const Theorem* thm : rules) {
        auto goals = as_elim ? apply_rule_elim(thm->statement(), props_of(chained), goal)
                             : apply_rule_intro(thm->statement(), goal);
        if (!goals) {
          tried.push_back(thm->name());
          continue;
        }
        if (as_elim)
          for (const ChainFact& f : chained) scope.escaped.insert(f.deps.begin(), f.deps.end());
        scope.pending = std::move(*goals);
        if (implicit) report_.choices.push_back(RuleChoice{span, false, thm->name()});
        return true;
      }
      return false;
    };
    if (!chained.empty() && try_phase(ctx_.elim_rules(), true)) return;
    if (try_phase(ctx_.intro_rules(), false)) return;
    fail(span, "no applicable rule for the goal" + tried_list(tried), &goal, &chained);
  }

  static std::string tried_list(const std::vector<std::string>& tried) {
    if (tried.empty()) return "";
    std::string out = " (tried: ";
    for (std::size_t i = 0; i < tried.size(); ++i) {
      if (i) out += ", ";
      out += tried[i];
    }
    return out + ")";
  }

  // Terminal methods must leave nothing open: residual subgoals are closed by
  // assumption against the chained facts and the active block assumptions.
  std::set<int> apply_terminal(const Method& m, bool dots, const Goal& goal,
                               const std::vector<ChainFact>& chained, Scope* parent) {
    switch (m.kind) {
      case Method::Kind::This: {
        auto info = close_by_assumption_ex(goal, props_of(chained));
        if (!info)
          fail(m.span, "the goal is not an immediate consequence of the chained facts", &goal,
               &chained);
        std::set<int> consumed;
        if (info->fact_index >= 0) consumed = chained[info->fact_index].deps;
        return consumed;
      }
      case Method::Kind::Standard:
        return terminal_standard(goal, chained, parent, m.span, dots);
      case Method::Kind::Rule: {
        ResolvedRule rule = resolve_rule(m.rule_name, parent, m.span, &goal);
        auto goals = chained.empty() ? apply_rule_intro(rule.statement, goal)
                                     : apply_rule_elim(rule.statement, props_of(chained), goal);
        if (!goals)
          fail(m.span, "rule " + rule.name + " is not applicable to the goal", &goal, &chained);
        std::set<int> consumed = rule.deps;
        if (!chained.empty())
          for (const ChainFact& f : chained) consumed.insert(f.deps.begin(), f.deps.end());
        close_residuals(*goals, chained, parent, m.span, consumed, rule.name);
        return consumed;
      }
    }
    throw std::logic_error("unreachable");
  }

  std::set<int> terminal_standard(const Goal& goal, const std::vector<ChainFact>& chained,
                                  Scope* parent, Span span, bool dots) {
    std::vector<ChainFact> pool = chained;
    for (ChainFact& f : active_assumption_facts()) pool.push_back(std::move(f));
    std::vector<MetaProp> pool_props = props_of(pool);

    std::vector<std::string> tried;
    auto try_phase = [&](const std::vector<const Theorem*>& rules, bool as_elim)
        -> std::optional<std::set<int>> {
      for (const Theorem* thm : rules) {
        auto goals = as_elim ? apply_rule_elim(thm->statement(), props_of(chained), goal)
                             : apply_rule_intro(thm->statement(), goal);
        if (!goals) {
          tried.push_back(thm->name());
          continue;
        }
        std::set<int> consumed;
        if (as_elim)
          for (const ChainFact& f : chained) consumed.insert(f.deps.begin(), f.deps.end());
        bool ok = true;
        for (const Goal& g : *goals) {
          auto info = close_by_assumption_ex(g, pool_props);
          if (!info) {
            ok = false;
            break;
          }
          if (info->fact_index >= 0) {
            const ChainFact& f = pool[info->fact_index];
            consumed.insert(f.deps.begin(), f.deps.end());
          }
        }
        if (!ok) {
          tried.push_back(thm->name());
          continue;
        }
        if (dots) report_.choices.push_back(RuleChoice{span, true, thm->name()});
        return consumed;
      }
      return std::nullopt;
    };

    if (!chained.empty())
      if (auto consumed = try_phase(ctx_.elim_rules(), true)) return *consumed;
    if (auto consumed = try_phase(ctx_.intro_rules(), false)) return *consumed;
    fail(span, "no applicable rule for the goal" + tried_list(tried), &goal, &chained);
  }

  void close_residuals(const std::vector<Goal>& goals, const std::vector<ChainFact>& chained,
                       Scope* parent, Span span, std::set<int>& consumed,
                       const std::string& rule_name) {
    std::vector<ChainFact> pool = chained;
    for (ChainFact& f : active_assumption_facts()) pool.push_back(std::move(f));
    std::vector<MetaProp> pool_props = props_of(pool);
    (void)parent;
    for (const Goal& g : goals) {
      auto info = close_by_assumption_ex(g, pool_props);
      if (!info)
        fail(span, "rule " + rule_name + " leaves a goal that is not closed by assumption", &g,
             &chained);
      if (info->fact_index >= 0) {
        const ChainFact& f = pool[info->fact_index];
        consumed.insert(f.deps.begin(), f.deps.end());
      }
    }
  }

  // --- steps ----------------------------------------------------------------
  void run_step(const Step& step, Scope& scope) {
    switch (step.kind) {
      case Step::Kind::Assume: {
        if (scope.pending.empty()) fail(step.span, "assume: no current goal");
        const Goal& g = scope.pending.front();
        std::size_t k = 0;
        while (k < g.hyps.size() && prop_is_assumed(g.hyps[k])) ++k;
        std::vector<ChainFact> fresh;
        for (const AssumeEntry& entry : step.assumes) {
          if (k >= g.hyps.size())
            fail(entry.span, "nothing left to assume; every hypothesis of the goal is assumed",
                 &g, &scope.this_reg);
          if (!(g.hyps[k] == entry.prop))
            fail(entry.span,
                 "assumed proposition does not match the next hypothesis; expected: " +
                     pretty(g.hyps[k], ctx_),
                 &g, &scope.this_reg);
          int id = new_assumption(entry.prop);
          scope.assumptions.push_back(id);
          ChainFact fact{entry.prop, {id}};
          if (entry.label) add_named(scope, *entry.label, fact, entry.span);
          fresh.push_back(std::move(fact));
          ++k;
        }
        scope.this_reg = std::move(fresh);
        scope.staged.reset();
        return;
      }
      case Step::Kind::Then:
        scope.staged = scope.this_reg;
        return;
      case Step::Kind::From: {
        std::vector<ChainFact> facts;
        for (const auto& n : step.names) facts.push_back(resolve_fact(n, &scope, step.span));
        scope.staged = std::move(facts);
        return;
      }
      case Step::Kind::With: {
        std::vector<ChainFact> facts;
        for (const auto& n : step.names) facts.push_back(resolve_fact(n, &scope, step.span));
        facts.insert(facts.end(), scope.this_reg.begin(), scope.this_reg.end());
        scope.staged = std::move(facts);
        return;
      }
      case Step::Kind::Have: {
        std::vector<ChainFact> chained = scope.staged.value_or(std::vector<ChainFact>{});
        scope.staged.reset();
        Goal goal{{}, *step.formula};
        std::set<int> consumed = run_body(*step.body, goal, chained, &scope, step.span);
        ChainFact fact{MetaProp::judg(*step.formula), std::move(consumed)};
        if (step.label) add_named(scope, *step.label, fact, step.span);
        scope.this_reg = {std::move(fact)};
        return;
      }
      case Step::Kind::Show: {
        std::vector<ChainFact> chained = scope.staged.value_or(std::vector<ChainFact>{});
        scope.staged.reset();
        std::size_t idx = scope.pending.size();
        for (std::size_t i = 0; i < scope.pending.size(); ++i) {
          if (scope.pending[i].concl == *step.formula) {
            idx = i;
            break;
          }
        }
        if (idx == scope.pending.size()) {
          const Goal* g = scope.pending.empty() ? nullptr : &scope.pending.front();
          fail(step.span, "show: the statement failed to refine any pending goal", g, &chained);
        }
        Goal goal = scope.pending[idx];
        std::set<int> consumed = run_body(*step.body, goal, chained, &scope, step.span);
        for (const MetaProp& h : goal.hyps)
          if (!prop_is_assumed(h))
            fail(step.span, "hypothesis was never assumed: " + pretty(h, ctx_), &goal, &chained);
        for (int id : consumed) {
          bool absorbed = false;
          for (const MetaProp& h : goal.hyps)
            if (h == assumption_props_[id]) {
              absorbed = true;
              break;
            }
          if (absorbed) continue;
          bool own = std::find(scope.assumptions.begin(), scope.assumptions.end(), id) !=
                     scope.assumptions.end();
          if (own)
            fail(step.span,
                 "the proof uses an assumption that is not a hypothesis of the shown goal: " +
                     pretty(assumption_props_[id], ctx_),
                 &goal, &chained);
          scope.escaped.insert(id);
        }
        scope.pending.erase(scope.pending.begin() + static_cast<std::ptrdiff_t>(idx));
        return;
      }
      case Step::Kind::Next:
        retire(scope);
        scope.assumptions.clear();
        scope.named.clear();
        scope.this_reg.clear();
        scope.staged.reset();
        return;
    }
  }

  void add_named(Scope& scope, const std::string& label, const ChainFact& fact, Span span) {
    if (scope.named.count(label))
      fail(span, "duplicate fact label in this block: " + label);
    scope.named.emplace(label, fact);
  }

  TheoryContext& ctx_;
  std::string file_;
  CheckReport report_;
  std::vector<MetaProp> assumption_props_;
  std::vector<bool> assumption_live_;
};

} // namespace

CheckReport check_items(std::span<const Item> items, const std::string& file,
                        TheoryContext& ctx) {
  Checker checker(ctx, file);
  return checker.run(items);
}

CheckReport check_script(std::string_view text, const std::string& file, TheoryContext& ctx) {
  std::vector<Item> items = parse_script(text, file, ctx);
  return check_items(items, file, ctx);
}

std::string rewrite_explicit(std::string_view source, std::span<const RuleChoice> choices) {
  std::vector<RuleChoice> sorted(choices.begin(), choices.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const RuleChoice& a, const RuleChoice& b) { return a.span.offset > b.span.offset; });
  std::string out(source);
  for (const RuleChoice& c : sorted) {
    std::string replacement =
        c.terminal ? "by (rule " + c.rule + ")" : "proof (rule " + c.rule + ")";
    out.replace(c.span.offset, c.span.length, replacement);
  }
  return out;
}

} // namespace pnd
