#include "hyperseq/transform.hpp"

namespace hyperseq {

namespace {

Formula fold_right(const std::vector<Formula>& fs, FKind op, Formula empty) {
  if (fs.empty()) return empty;
  Formula out = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;)
    out = op == FKind::conj ? Formula::conj(fs[i], std::move(out))
                            : Formula::disj(fs[i], std::move(out));
  return out;
}

Formula close_universally(Formula f, const std::vector<Variable>& order) {
  for (std::size_t i = order.size(); i-- > 0;) f = Formula::forall(order[i].name, std::move(f));
  return f;
}

}  // namespace

Formula sequent_formula(const Sequent& s) {
  Formula succ = fold_right(s.succedent, FKind::disj, Formula::bottom());
  if (s.antecedent.empty()) return succ;
  return Formula::impl(fold_right(s.antecedent, FKind::conj, Formula::top()), std::move(succ));
}

Formula hyperseq_formula(const Hypersequent& h, TranslationMode mode) {
  for (const auto& v : free_vars(h))
    if (v.scope == Scope::global)
      throw TranslationError("hypersequent contains the global variable '" + v.name +
                             "'; no formula reading is defined for global variables");
  std::vector<Formula> parts;
  parts.reserve(h.components.size());
  if (mode == TranslationMode::local) {
    for (const auto& comp : h.components)
      parts.push_back(close_universally(sequent_formula(comp), free_vars_ordered(comp)));
    return fold_right(parts, FKind::disj, Formula::bottom());
  }
  for (const auto& comp : h.components) parts.push_back(sequent_formula(comp));
  return close_universally(fold_right(parts, FKind::disj, Formula::bottom()),
                           free_vars_ordered(h));
}

// Extraction ------------------------------------------------------------------

namespace {

// Index and single-component proof for some component of `p`'s conclusion,
// following the soundness induction case by case. `p` has already been
// accepted by the CD-free checker, so only its rules can appear.
Extraction extract(const ProofTree& p) {
  const RuleId r = p.rule.rule;
  const int k = p.rule.component;
  switch (r) {
    case RuleId::Id:
    case RuleId::Bot:
      return {0, p};

    case RuleId::ew: {
      Extraction sub = extract(p.subproofs[0]);
      return {sub.index < k ? sub.index : sub.index + 1, std::move(sub.proof)};
    }
    case RuleId::ec: {
      Extraction sub = extract(p.subproofs[0]);
      // Both duplicates map to the kept component; the leftmost wins trivially.
      return {sub.index <= k ? std::min(sub.index, k) : sub.index - 1, std::move(sub.proof)};
    }
    case RuleId::ee: {
      Extraction sub = extract(p.subproofs[0]);
      int idx = sub.index == k ? k + 1 : sub.index == k + 1 ? k : sub.index;
      return {idx, std::move(sub.proof)};
    }

    case RuleId::cut: {
      // Left premise first; a result landing in the side hypersequent is final.
      Extraction left = extract(p.subproofs[0]);
      if (left.index != k) return left;
      Extraction right = extract(p.subproofs[1]);
      if (right.index != k) return right;
      ProofTree node;
      node.conclusion = Hypersequent{{p.conclusion.components[k]}};
      node.rule = p.rule;
      node.rule.component = 0;
      node.subproofs.push_back(std::move(left.proof));
      node.subproofs.push_back(std::move(right.proof));
      return {k, std::move(node)};
    }

    case RuleId::andR:
    case RuleId::orL:
    case RuleId::impL: {
      Extraction left = extract(p.subproofs[0]);
      if (left.index != k) return left;
      Extraction right = extract(p.subproofs[1]);
      if (right.index != k) return right;
      ProofTree node;
      node.conclusion = Hypersequent{{p.conclusion.components[k]}};
      node.rule = p.rule;
      node.rule.component = 0;
      node.subproofs.push_back(std::move(left.proof));
      node.subproofs.push_back(std::move(right.proof));
      return {k, std::move(node)};
    }

    default: {
      // Single-premise rules that rewrite component k in place. The
      // multi-component quantifier rules replay as their single-component
      // forms; their eigenvariable condition only weakens.
      Extraction sub = extract(p.subproofs[0]);
      if (sub.index != k) return sub;
      ProofTree node;
      node.conclusion = Hypersequent{{p.conclusion.components[k]}};
      node.rule = p.rule;
      node.rule.component = 0;
      if (r == RuleId::forallRms) node.rule.rule = RuleId::forallRss;
      if (r == RuleId::existsLm) node.rule.rule = RuleId::existsLs;
      node.subproofs.push_back(std::move(sub.proof));
      return {k, std::move(node)};
    }
  }
}

}  // namespace

std::variant<Extraction, ExtractError> extract_component_proof(const ProofTree& p) {
  const CalculusConfig cdfree = *CalculusConfig::preset("CD-free");
  CheckReport report = check_proof(cdfree, p);
  if (!report.accepted) {
    ExtractError err;
    err.detail = "input proof is not CD-free: " + std::string(to_string(report.error->kind)) +
                 " (" + report.error->detail + ")";
    err.check_error = report.error;
    return err;
  }
  return extract(p);
}

}  // namespace hyperseq
