#ifndef HYPERSEQ_PROOF_HPP
#define HYPERSEQ_PROOF_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hyperseq/calculus.hpp"
#include "hyperseq/syntax.hpp"

namespace hyperseq {

// A proof figure: conclusion plus the rule instance that derives it from the
// subproofs' conclusions. Axioms have no subproofs.
struct ProofTree {
  Hypersequent conclusion;
  RuleInstance rule;
  std::vector<ProofTree> subproofs;
};

enum class CheckErrorKind {
  rule_disabled,
  shape_mismatch,
  eigenvariable_violation,
  discipline_violation,
  width_exceeded,
  premise_count_mismatch,
  premise_mismatch,
};

std::string_view to_string(CheckErrorKind k);
CheckErrorKind check_kind(RuleErrorKind k);

struct CheckError {
  std::vector<int> path;  // child indices from the root
  CheckErrorKind kind;
  std::string detail;
};

struct CheckReport {
  bool accepted = false;
  std::size_t steps = 0;  // node count
  std::map<RuleId, std::size_t> rule_histogram;
  std::optional<CheckError> error;  // leftmost-innermost failure
};

// Accepts iff every node's computed premises match its subproofs' conclusions
// componentwise up to alpha equivalence. Never throws; failures land in the
// report.
CheckReport check_proof(const CalculusConfig& cfg, const ProofTree& p);

struct ProofStats {
  std::size_t steps = 0;     // rule applications
  std::size_t formulas = 0;  // formula occurrences over all hypersequents
  std::size_t symbols = 0;   // syntax-tree nodes of those formulas

  friend bool operator==(const ProofStats&, const ProofStats&) = default;
};

ProofStats proof_stats(const ProofTree& p);

const ProofTree* subtree_at(const ProofTree& p, const std::vector<int>& path);

// Bottom-up inference-style rendering with the paper-style rule labels.
std::string render_proof(const ProofTree& p);

}  // namespace hyperseq

#endif
