#ifndef HYPERSEQ_CALCULUS_HPP
#define HYPERSEQ_CALCULUS_HPP

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hyperseq/syntax.hpp"

namespace hyperseq {

// The closed catalogue of inference rules. No user-defined rules.
enum class RuleId {
  Id, Bot,
  ew, ec, ee,
  iwL, iwR, icL, icR, ieL, ieR,
  cut,
  andL1, andL2, andR,
  orL, orR1, orR2,
  impL, impR, impRprime,
  forallL, forallRss, forallRms, forallRmm, forallRsm,
  existsLs, existsLm, existsR,
  com, rs, ls,
  share, unshare,
};

constexpr int kRuleCount = static_cast<int>(RuleId::unshare) + 1;

std::string_view rule_name(RuleId r);                    // stable token, e.g. "impRprime"
std::string_view rule_label(RuleId r);                   // display label, e.g. "(→-R')"
std::optional<RuleId> rule_from_name(std::string_view);  // inverse of rule_name

// One rule application. Only the parameters a rule demands are meaningful:
//   component   — index of the active (or first) component
//   component2  — second component (com, rs, ls)
//   position    — index of the principal formula in its list
//   split       — com: end of the kept antecedent prefix in `component`;
//                 cut: end of the left antecedent part
//   split2      — com: same for `component2`; cut: end of the left succedent part
//   cut_formula — cut
//   witness     — forallL, existsR
//   eigenvariable — quantifier rules with an eigenvariable (defaults to the
//                 binder name when absent)
//   local_var/global_var — share, unshare
struct RuleInstance {
  RuleId rule = RuleId::Id;
  int component = 0;
  int component2 = -1;
  int position = 0;
  int split = -1;
  int split2 = -1;
  std::optional<Formula> cut_formula;
  std::optional<Term> witness;
  std::optional<std::string> eigenvariable;
  std::optional<std::string> local_var;
  std::optional<std::string> global_var;
};

// Base disciplines: classical keeps full (→-R); single_conclusion restricts
// every succedent to at most one formula; restricted_imp keeps multi-conclusion
// sequents but replaces (→-R) by (→-R').
enum class BaseDiscipline { classical, single_conclusion, restricted_imp };

struct CalculusConfig {
  BaseDiscipline base = BaseDiscipline::classical;
  std::set<RuleId> optional_rules;  // com, rs, ls, forallRms, forallRmm, forallRsm, existsLm, share, unshare
  bool quantifiers_enabled = false;
  std::optional<int> width_cap;  // cap 1 reconstructs the plain sequent calculus

  bool rule_enabled(RuleId r) const;
  bool allows_global_vars() const;

  CalculusConfig with(RuleId extra) const;
  CalculusConfig without(RuleId removed) const;

  // Named systems: HLK, HLJ, HLJ', ∀HLJ, ∀HLJ', GD-com, GD-rs, GD-ls,
  // ∀GD-com, ∀GD-rs, LIN-pred, CD-free, LJ'. ASCII aliases replace ∀ with
  // "forall" (e.g. forallHLJ').
  static std::optional<CalculusConfig> preset(std::string_view name);
  static const std::vector<std::string>& preset_names();

  friend bool operator==(const CalculusConfig&, const CalculusConfig&) = default;
};

enum class RuleErrorKind {
  rule_disabled,
  shape_mismatch,
  eigenvariable_violation,
  discipline_violation,
  width_exceeded,
};

std::string_view to_string(RuleErrorKind k);

struct RuleError {
  RuleErrorKind kind;
  std::string detail;
};

using PremisesResult = std::variant<std::vector<Hypersequent>, RuleError>;

// Root-first reading of one rule application: given the conclusion and the
// instance, returns exactly the premises the schema demands, or the reason the
// instance is not a legal application. Checks shape, side conditions,
// discipline and width cap on conclusion and premises.
PremisesResult premises_of(const CalculusConfig& cfg, const RuleInstance& inst,
                           const Hypersequent& conclusion);

// Candidate terms/formulas for the parameterized rules during enumeration.
struct InstancePools {
  std::vector<Term> witnesses;      // forallL, existsR
  std::vector<Formula> cut_formulas;  // empty = no cut instances
};

// Every instance whose premises_of succeeds on `goal`, in a fixed canonical
// order (rule, then component, then position, then finer parameters).
// Complete for the non-parameterized rules; forallL/existsR/cut draw from the
// pools; eigenvariables use the binder name or the first fresh variant.
std::vector<RuleInstance> applicable_rules(const CalculusConfig& cfg, const Hypersequent& goal,
                                           const InstancePools& pools = {});

}  // namespace hyperseq

#endif
