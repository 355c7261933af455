#include <doctest.h>

#include "figures.hpp"
#include "hyperseq/parse.hpp"
#include "hyperseq/proof.hpp"
#include "testutil.hpp"

using namespace hyperseq;
using namespace hyperseq::figures;

namespace {

ProofTree id_proof(const std::string& phi) {
  Formula f = parse_formula(phi);
  return ProofTree{Hypersequent{{Sequent{{f}, {f}}}}, RuleInstance{.rule = RuleId::Id}, {}};
}

}  // namespace

TEST_CASE("a single Id node checks and counts one step") {
  auto cfg = *CalculusConfig::preset("HLJ");
  ProofTree p = id_proof("p");
  CheckReport r = check_proof(cfg, p);
  CHECK(r.accepted);
  CHECK(r.steps == 1);
  CHECK(r.rule_histogram.at(RuleId::Id) == 1);

  ProofStats st = proof_stats(p);
  CHECK(st.steps == 1);
  CHECK(st.formulas == 2);
  CHECK(st.symbols == 2);
}

TEST_CASE("all six golden figures are accepted under their presets") {
  for (const auto& fig : golden_figures()) {
    CAPTURE(fig.name);
    CheckReport r = check_proof(fig.config, fig.proof);
    if (!r.accepted) {
      CAPTURE(to_string(r.error->kind));
      CAPTURE(r.error->detail);
      CAPTURE(r.error->path);
    }
    CHECK(r.accepted);
  }
}

TEST_CASE("fact 1.3 uses (com) exactly once and is rejected without it") {
  GoldenFigure fig = fact13_lin_com();
  CheckReport r = check_proof(fig.config, fig.proof);
  REQUIRE(r.accepted);
  CHECK(r.rule_histogram.at(RuleId::com) == 1);

  // HLJ = GD-com without communication.
  auto hlj = *CalculusConfig::preset("HLJ");
  CheckReport r2 = check_proof(hlj, fig.proof);
  REQUIRE_FALSE(r2.accepted);
  CHECK(r2.error->kind == CheckErrorKind::rule_disabled);
  CHECK(r2.error->path == std::vector<int>{0, 0, 0, 0, 0});
  CHECK(r2.steps == r.steps);
}

TEST_CASE("each figure is rejected at the right node when its characteristic rule is disabled") {
  for (const auto& fig : golden_figures()) {
    for (const auto& [rule, path] : fig.characteristic) {
      CAPTURE(fig.name);
      CAPTURE(rule_name(rule));
      const ProofTree* node = subtree_at(fig.proof, path);
      REQUIRE(node != nullptr);
      REQUIRE(node->rule.rule == rule);
      CheckReport r = check_proof(fig.config.without(rule), fig.proof);
      REQUIRE_FALSE(r.accepted);
      CHECK(r.error->kind == CheckErrorKind::rule_disabled);
      CHECK(r.error->path == path);
    }
  }
}

TEST_CASE("acceptance is monotone in the enabled rule set") {
  for (const auto& fig : golden_figures()) {
    CalculusConfig bigger = fig.config;
    bigger.optional_rules.insert(RuleId::com);
    bigger.optional_rules.insert(RuleId::ls);
    if (bigger.base != BaseDiscipline::single_conclusion)
      bigger.optional_rules.insert(RuleId::rs);
    bigger.optional_rules.insert(RuleId::forallRms);
    bigger.optional_rules.insert(RuleId::existsLm);
    bigger.quantifiers_enabled = true;
    CHECK(check_proof(bigger, fig.proof).accepted);
  }
}

TEST_CASE("acceptance is invariant under alpha renaming of the whole tree") {
  // Rename the bound variable x to w throughout fact 1.5 (binders only).
  GoldenFigure fig = fact15_acd_com();
  struct Renamer {
    static Formula rename(const Formula& f) {
      switch (f.kind()) {
        case FKind::bottom:
        case FKind::atom:
          return f;
        case FKind::conj:
          return Formula::conj(rename(f.lhs()), rename(f.rhs()));
        case FKind::disj:
          return Formula::disj(rename(f.lhs()), rename(f.rhs()));
        case FKind::impl:
          return Formula::impl(rename(f.lhs()), rename(f.rhs()));
        case FKind::forall:
        case FKind::exists: {
          Formula body = rename(f.body());
          if (f.bound_var() == "x")
            body = substitute(body, Variable{"x", Scope::local}, Term::var("w"));
          std::string var = f.bound_var() == "x" ? "w" : f.bound_var();
          return f.kind() == FKind::forall ? Formula::forall(var, std::move(body))
                                           : Formula::exists(var, std::move(body));
        }
      }
      return f;
    }
    static ProofTree walk(const ProofTree& p) {
      ProofTree out;
      out.rule = p.rule;
      for (auto& comp : p.conclusion.components) {
        Sequent s;
        for (const auto& f : comp.antecedent) s.antecedent.push_back(rename(f));
        for (const auto& f : comp.succedent) s.succedent.push_back(rename(f));
        out.conclusion.components.push_back(std::move(s));
      }
      for (const auto& sub : p.subproofs) out.subproofs.push_back(walk(sub));
      return out;
    }
  };
  ProofTree renamed = Renamer::walk(fig.proof);
  CHECK(check_proof(fig.config, renamed).accepted);
}

TEST_CASE("premise mismatches are located leftmost-innermost") {
  auto cfg = *CalculusConfig::preset("HLJ");
  // orR1 whose subproof proves the wrong premise.
  ProofTree bad;
  bad.conclusion = parse_hypersequent("|- p \\/ q");
  bad.rule = {.rule = RuleId::orR1};
  bad.subproofs.push_back(
      ProofTree{parse_hypersequent("|- q"), RuleInstance{.rule = RuleId::Id}, {}});
  CheckReport r = check_proof(cfg, bad);
  REQUIRE_FALSE(r.accepted);
  // The subproof's own defect (Id concluding |- q) is found first.
  CHECK(r.error->path == std::vector<int>{0});
  CHECK(r.error->kind == CheckErrorKind::shape_mismatch);

  // With a healthy leaf, the mismatch is reported at the parent.
  bad.subproofs[0] = id_proof("q");
  CheckReport r2 = check_proof(cfg, bad);
  REQUIRE_FALSE(r2.accepted);
  CHECK(r2.error->path.empty());
  CHECK(r2.error->kind == CheckErrorKind::premise_mismatch);
}

TEST_CASE("premise count mismatches are reported") {
  auto cfg = *CalculusConfig::preset("HLJ");
  ProofTree bad;
  bad.conclusion = parse_hypersequent("|- p \\/ q");
  bad.rule = {.rule = RuleId::orR1};
  CheckReport r = check_proof(cfg, bad);
  REQUIRE_FALSE(r.accepted);
  CHECK(r.error->kind == CheckErrorKind::premise_count_mismatch);
}

TEST_CASE("proof stats sum over the whole figure") {
  GoldenFigure fig = fact13_lin_com();
  ProofStats st = proof_stats(fig.proof);
  CHECK(st.steps == 8);
  CHECK(check_proof(fig.config, fig.proof).steps == 8);
  CHECK(st.formulas > st.steps);
  CHECK(st.symbols > st.formulas);
}

TEST_CASE("histogram counts every node") {
  GoldenFigure fig = gdm_ls();
  CheckReport r = check_proof(fig.config, fig.proof);
  REQUIRE(r.accepted);
  std::size_t total = 0;
  for (const auto& [rule, count] : r.rule_histogram) total += count;
  CHECK(total == r.steps);
  CHECK(r.rule_histogram.at(RuleId::ls) == 1);
  CHECK(r.rule_histogram.at(RuleId::Id) == 3);
}

TEST_CASE("render produces one bar per inference") {
  GoldenFigure fig = fact13_lin_com();
  std::string art = render_proof(fig.proof);
  std::size_t bars = 0;
  for (std::size_t pos = art.find("---"); pos != std::string::npos; pos = art.find("---", pos + 1))
    ++bars;
  CHECK(bars >= 8);
  CHECK(art.find("(com)") != std::string::npos);
  CHECK(art.find("p |- q || q |- p") != std::string::npos);
}
