#include "hyperseq/proof.hpp"

namespace hyperseq {

std::string_view to_string(CheckErrorKind k) {
  switch (k) {
    case CheckErrorKind::rule_disabled: return "RuleDisabled";
    case CheckErrorKind::shape_mismatch: return "ShapeMismatch";
    case CheckErrorKind::eigenvariable_violation: return "EigenvariableViolation";
    case CheckErrorKind::discipline_violation: return "DisciplineViolation";
    case CheckErrorKind::width_exceeded: return "WidthExceeded";
    case CheckErrorKind::premise_count_mismatch: return "PremiseCountMismatch";
    case CheckErrorKind::premise_mismatch: return "PremiseMismatch";
  }
  return "?";
}

CheckErrorKind check_kind(RuleErrorKind k) {
  switch (k) {
    case RuleErrorKind::rule_disabled: return CheckErrorKind::rule_disabled;
    case RuleErrorKind::shape_mismatch: return CheckErrorKind::shape_mismatch;
    case RuleErrorKind::eigenvariable_violation: return CheckErrorKind::eigenvariable_violation;
    case RuleErrorKind::discipline_violation: return CheckErrorKind::discipline_violation;
    case RuleErrorKind::width_exceeded: return CheckErrorKind::width_exceeded;
  }
  return CheckErrorKind::shape_mismatch;
}

namespace {

// Post-order walk: subproofs left to right, then the node itself, so the
// recorded error is the leftmost-innermost one.
void check_node(const CalculusConfig& cfg, const ProofTree& p, std::vector<int>& path,
                CheckReport& report) {
  for (std::size_t i = 0; i < p.subproofs.size(); ++i) {
    path.push_back(static_cast<int>(i));
    check_node(cfg, p.subproofs[i], path, report);
    path.pop_back();
  }
  report.steps += 1;
  report.rule_histogram[p.rule.rule] += 1;
  if (report.error) return;

  PremisesResult res = premises_of(cfg, p.rule, p.conclusion);
  if (auto* err = std::get_if<RuleError>(&res)) {
    report.error = CheckError{path, check_kind(err->kind), err->detail};
    return;
  }
  const auto& premises = std::get<std::vector<Hypersequent>>(res);
  if (premises.size() != p.subproofs.size()) {
    report.error = CheckError{path, CheckErrorKind::premise_count_mismatch,
                              std::string(rule_name(p.rule.rule)) + " needs " +
                                  std::to_string(premises.size()) + " premises, proof has " +
                                  std::to_string(p.subproofs.size())};
    return;
  }
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!alpha_equal(premises[i], p.subproofs[i].conclusion)) {
      report.error = CheckError{path, CheckErrorKind::premise_mismatch,
                                "premise " + std::to_string(i) + " should be '" +
                                    to_string(premises[i]) + "' but the subproof concludes '" +
                                    to_string(p.subproofs[i].conclusion) + "'"};
      return;
    }
  }
}

}  // namespace

CheckReport check_proof(const CalculusConfig& cfg, const ProofTree& p) {
  CheckReport report;
  std::vector<int> path;
  check_node(cfg, p, path, report);
  report.accepted = !report.error.has_value();
  return report;
}

ProofStats proof_stats(const ProofTree& p) {
  ProofStats st;
  st.steps = 1;
  for (const auto& comp : p.conclusion.components) {
    st.formulas += comp.antecedent.size() + comp.succedent.size();
    for (const auto& f : comp.antecedent) st.symbols += symbol_count(f);
    for (const auto& f : comp.succedent) st.symbols += symbol_count(f);
  }
  for (const auto& sub : p.subproofs) {
    ProofStats s = proof_stats(sub);
    st.steps += s.steps;
    st.formulas += s.formulas;
    st.symbols += s.symbols;
  }
  return st;
}

const ProofTree* subtree_at(const ProofTree& p, const std::vector<int>& path) {
  const ProofTree* node = &p;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= node->subproofs.size()) return nullptr;
    node = &node->subproofs[i];
  }
  return node;
}

}  // namespace hyperseq
