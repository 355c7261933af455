#include "hyperseq/calculus.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace hyperseq {

namespace {

struct RuleNames {
  RuleId id;
  std::string_view name;
  std::string_view label;
};

constexpr std::array<RuleNames, kRuleCount> kRuleNames{{
    {RuleId::Id, "Id", "(Id)"},
    {RuleId::Bot, "Bot", "(Bot)"},
    {RuleId::ew, "ew", "(ew)"},
    {RuleId::ec, "ec", "(ec)"},
    {RuleId::ee, "ee", "(ee)"},
    {RuleId::iwL, "iwL", "(iw-L)"},
    {RuleId::iwR, "iwR", "(iw-R)"},
    {RuleId::icL, "icL", "(ic-L)"},
    {RuleId::icR, "icR", "(ic-R)"},
    {RuleId::ieL, "ieL", "(ie-L)"},
    {RuleId::ieR, "ieR", "(ie-R)"},
    {RuleId::cut, "cut", "(cut)"},
    {RuleId::andL1, "andL1", "(∧1-L)"},
    {RuleId::andL2, "andL2", "(∧2-L)"},
    {RuleId::andR, "andR", "(∧-R)"},
    {RuleId::orL, "orL", "(∨-L)"},
    {RuleId::orR1, "orR1", "(∨1-R)"},
    {RuleId::orR2, "orR2", "(∨2-R)"},
    {RuleId::impL, "impL", "(→-L)"},
    {RuleId::impR, "impR", "(→-R)"},
    {RuleId::impRprime, "impRprime", "(→-R')"},
    {RuleId::forallL, "forallL", "(∀-L)"},
    {RuleId::forallRss, "forallRss", "(∀-R_ss)"},
    {RuleId::forallRms, "forallRms", "(∀-R_ms)"},
    {RuleId::forallRmm, "forallRmm", "(∀-R_mm)"},
    {RuleId::forallRsm, "forallRsm", "(∀-R_sm)"},
    {RuleId::existsLs, "existsLs", "(∃-L_s)"},
    {RuleId::existsLm, "existsLm", "(∃-L_m)"},
    {RuleId::existsR, "existsR", "(∃-R)"},
    {RuleId::com, "com", "(com)"},
    {RuleId::rs, "rs", "(rs)"},
    {RuleId::ls, "ls", "(ls)"},
    {RuleId::share, "share", "(share)"},
    {RuleId::unshare, "unshare", "(unshare)"},
}};

}  // namespace

std::string_view rule_name(RuleId r) { return kRuleNames[static_cast<int>(r)].name; }
std::string_view rule_label(RuleId r) { return kRuleNames[static_cast<int>(r)].label; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& e : kRuleNames)
    if (e.name == name) return e.id;
  return std::nullopt;
}

bool CalculusConfig::rule_enabled(RuleId r) const {
  switch (r) {
    case RuleId::Id:
    case RuleId::Bot:
    case RuleId::ew:
    case RuleId::ec:
    case RuleId::ee:
    case RuleId::iwL:
    case RuleId::iwR:
    case RuleId::icL:
    case RuleId::ieL:
    case RuleId::cut:
    case RuleId::andL1:
    case RuleId::andL2:
    case RuleId::andR:
    case RuleId::orL:
    case RuleId::orR1:
    case RuleId::orR2:
    case RuleId::impL:
      return true;
    case RuleId::icR:
    case RuleId::ieR:
      return base != BaseDiscipline::single_conclusion;
    case RuleId::impR:
      return base == BaseDiscipline::classical;
    case RuleId::impRprime:
      return base != BaseDiscipline::classical;
    case RuleId::forallL:
    case RuleId::forallRss:
    case RuleId::existsLs:
    case RuleId::existsR:
      return quantifiers_enabled;
    case RuleId::forallRms:
    case RuleId::forallRmm:
    case RuleId::forallRsm:
    case RuleId::existsLm:
    case RuleId::share:
    case RuleId::unshare:
      return quantifiers_enabled && optional_rules.count(r) > 0;
    case RuleId::com:
      return optional_rules.count(r) > 0;
    case RuleId::rs:
      // Its premise is inherently multi-conclusion.
      return base != BaseDiscipline::single_conclusion && optional_rules.count(r) > 0;
    case RuleId::ls:
      return optional_rules.count(r) > 0;
  }
  return false;
}

bool CalculusConfig::allows_global_vars() const {
  return rule_enabled(RuleId::share) || rule_enabled(RuleId::unshare);
}

CalculusConfig CalculusConfig::with(RuleId extra) const {
  CalculusConfig c = *this;
  c.optional_rules.insert(extra);
  return c;
}

CalculusConfig CalculusConfig::without(RuleId removed) const {
  CalculusConfig c = *this;
  c.optional_rules.erase(removed);
  return c;
}

namespace {

const std::vector<std::pair<std::string, CalculusConfig>>& preset_table() {
  static const auto* table = [] {
    auto* t = new std::vector<std::pair<std::string, CalculusConfig>>;
    CalculusConfig hlk{BaseDiscipline::classical, {}, false, {}};
    CalculusConfig hlj{BaseDiscipline::single_conclusion, {}, false, {}};
    CalculusConfig hljp{BaseDiscipline::restricted_imp, {}, false, {}};
    CalculusConfig qhlj{BaseDiscipline::single_conclusion, {}, true, {}};
    CalculusConfig qhljp{BaseDiscipline::restricted_imp, {}, true, {}};
    t->push_back({"HLK", hlk});
    t->push_back({"HLJ", hlj});
    t->push_back({"HLJ'", hljp});
    t->push_back({"∀HLJ", qhlj});
    t->push_back({"∀HLJ'", qhljp});
    t->push_back({"GD-com", hlj.with(RuleId::com)});
    t->push_back({"GD-rs", hljp.with(RuleId::rs)});
    t->push_back({"GD-ls", hljp.with(RuleId::ls)});
    t->push_back({"∀GD-com", qhlj.with(RuleId::forallRms).with(RuleId::com)});
    t->push_back({"∀GD-rs", qhljp.with(RuleId::forallRms).with(RuleId::rs)});
    t->push_back({"LIN-pred", qhlj.with(RuleId::com)});
    t->push_back({"CD-free", qhljp.with(RuleId::forallRms).with(RuleId::existsLm)});
    CalculusConfig ljp = qhljp;
    ljp.width_cap = 1;
    t->push_back({"LJ'", ljp});
    return t;
  }();
  return *table;
}

std::string ascii_alias(const std::string& name) {
  std::string out;
  for (std::size_t i = 0; i < name.size();) {
    if (name.compare(i, 3, "∀") == 0) {
      out += "forall";
      i += 3;
    } else {
      out += name[i++];
    }
  }
  return out;
}

}  // namespace

std::optional<CalculusConfig> CalculusConfig::preset(std::string_view name) {
  for (const auto& [n, cfg] : preset_table())
    if (n == name || ascii_alias(n) == name) return cfg;
  return std::nullopt;
}

const std::vector<std::string>& CalculusConfig::preset_names() {
  static const auto* names = [] {
    auto* v = new std::vector<std::string>;
    for (const auto& [n, cfg] : preset_table()) v->push_back(n);
    return v;
  }();
  return *names;
}

std::string_view to_string(RuleErrorKind k) {
  switch (k) {
    case RuleErrorKind::rule_disabled: return "RuleDisabled";
    case RuleErrorKind::shape_mismatch: return "ShapeMismatch";
    case RuleErrorKind::eigenvariable_violation: return "EigenvariableViolation";
    case RuleErrorKind::discipline_violation: return "DisciplineViolation";
    case RuleErrorKind::width_exceeded: return "WidthExceeded";
  }
  return "?";
}

// premises_of -----------------------------------------------------------------

namespace {

using FList = std::vector<Formula>;

PremisesResult fail(RuleErrorKind k, std::string detail) {
  return RuleError{k, std::move(detail)};
}

FList erased(FList v, std::size_t i) {
  v.erase(v.begin() + i);
  return v;
}

FList inserted(FList v, std::size_t i, Formula f) {
  v.insert(v.begin() + i, std::move(f));
  return v;
}

FList replaced(FList v, std::size_t i, Formula f) {
  v[i] = std::move(f);
  return v;
}

FList appended(FList v, Formula f) {
  v.push_back(std::move(f));
  return v;
}

FList concat(FList a, const FList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

FList slice(const FList& v, std::size_t lo, std::size_t hi) {
  return FList(v.begin() + lo, v.begin() + hi);
}

Hypersequent with_comp(Hypersequent h, std::size_t k, Sequent s) {
  h.components[k] = std::move(s);
  return h;
}

Hypersequent without_comp(Hypersequent h, std::size_t k) {
  h.components.erase(h.components.begin() + k);
  return h;
}

bool multi_conclusion(const Hypersequent& h) {
  return std::any_of(h.components.begin(), h.components.end(),
                     [](const Sequent& s) { return s.succedent.size() > 1; });
}

bool has_global_var(const Hypersequent& h) {
  for (const auto& v : free_vars(h))
    if (v.scope == Scope::global) return true;
  return false;
}

bool lists_alpha_equal(const FList& a, const FList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!alpha_equal(a[i], b[i])) return false;
  return true;
}

// Binder instantiated at the instance's eigenvariable; rejects an
// eigenvariable that already occurs free in the matrix.
struct EigenTarget {
  std::string var;
  Formula matrix;
};

std::variant<EigenTarget, RuleError> resolve_eigen(const RuleInstance& inst,
                                                   const Formula& principal) {
  std::string e = inst.eigenvariable.value_or(principal.bound_var());
  Formula matrix =
      substitute(principal.body(), Variable{principal.bound_var(), Scope::local}, Term::var(e));
  Formula rebound = principal.kind() == FKind::forall ? Formula::forall(e, matrix)
                                                      : Formula::exists(e, matrix);
  if (!alpha_equal(rebound, principal))
    return RuleError{RuleErrorKind::eigenvariable_violation,
                     "eigenvariable '" + e + "' occurs free in the quantified formula"};
  return EigenTarget{std::move(e), std::move(matrix)};
}

}  // namespace

PremisesResult premises_of(const CalculusConfig& cfg, const RuleInstance& inst,
                           const Hypersequent& conclusion) {
  const RuleId r = inst.rule;
  if (!cfg.rule_enabled(r))
    return fail(RuleErrorKind::rule_disabled,
                std::string(rule_name(r)) + " is not available in this calculus");

  const std::size_t n = conclusion.components.size();
  if (n == 0) return fail(RuleErrorKind::shape_mismatch, "empty hypersequent");
  if (cfg.width_cap && n > static_cast<std::size_t>(*cfg.width_cap))
    return fail(RuleErrorKind::width_exceeded,
                "conclusion has " + std::to_string(n) + " components, cap is " +
                    std::to_string(*cfg.width_cap));
  if (!cfg.allows_global_vars() && has_global_var(conclusion))
    return fail(RuleErrorKind::discipline_violation,
                "global variables require share/unshare to be enabled");
  if (cfg.base == BaseDiscipline::single_conclusion && multi_conclusion(conclusion))
    return fail(RuleErrorKind::discipline_violation,
                "multi-conclusion sequent in a single-conclusion calculus");

  const std::size_t k = static_cast<std::size_t>(inst.component);
  if (inst.component < 0 || k >= n)
    return fail(RuleErrorKind::shape_mismatch, "component index out of range");
  const Sequent& c = conclusion.components[k];
  const std::size_t p = static_cast<std::size_t>(inst.position);

  auto in_ante = [&](RuleId) -> std::optional<PremisesResult> {
    if (inst.position < 0 || p >= c.antecedent.size())
      return fail(RuleErrorKind::shape_mismatch, "antecedent position out of range");
    return std::nullopt;
  };
  auto in_succ = [&](RuleId) -> std::optional<PremisesResult> {
    if (inst.position < 0 || p >= c.succedent.size())
      return fail(RuleErrorKind::shape_mismatch, "succedent position out of range");
    return std::nullopt;
  };
  auto two_components = [&]() -> std::optional<PremisesResult> {
    if (inst.component2 <= inst.component ||
        static_cast<std::size_t>(inst.component2) >= n)
      return fail(RuleErrorKind::shape_mismatch, "second component index out of range");
    return std::nullopt;
  };

  std::vector<Hypersequent> premises;

  switch (r) {
    case RuleId::Id: {
      if (n != 1 || c.antecedent.size() != 1 || c.succedent.size() != 1)
        return fail(RuleErrorKind::shape_mismatch, "(Id) concludes a single sequent phi |- phi");
      if (!alpha_equal(c.antecedent[0], c.succedent[0]))
        return fail(RuleErrorKind::shape_mismatch, "(Id) sides differ");
      break;
    }
    case RuleId::Bot: {
      if (n != 1 || c.antecedent.size() != 1 || c.succedent.size() != 1 ||
          c.antecedent[0].kind() != FKind::bottom)
        return fail(RuleErrorKind::shape_mismatch, "(Bot) concludes bot |- phi");
      break;
    }
    case RuleId::ew: {
      if (n < 2)
        return fail(RuleErrorKind::shape_mismatch, "(ew) premise would be empty");
      premises.push_back(without_comp(conclusion, k));
      break;
    }
    case RuleId::ec: {
      Hypersequent prem = conclusion;
      prem.components.insert(prem.components.begin() + k + 1, c);
      premises.push_back(std::move(prem));
      break;
    }
    case RuleId::ee: {
      if (k + 1 >= n)
        return fail(RuleErrorKind::shape_mismatch, "(ee) needs two adjacent components");
      Hypersequent prem = conclusion;
      std::swap(prem.components[k], prem.components[k + 1]);
      premises.push_back(std::move(prem));
      break;
    }
    case RuleId::iwL: {
      if (auto e = in_ante(r)) return *e;
      premises.push_back(with_comp(conclusion, k, {erased(c.antecedent, p), c.succedent}));
      break;
    }
    case RuleId::iwR: {
      if (auto e = in_succ(r)) return *e;
      premises.push_back(with_comp(conclusion, k, {c.antecedent, erased(c.succedent, p)}));
      break;
    }
    case RuleId::icL: {
      if (auto e = in_ante(r)) return *e;
      premises.push_back(
          with_comp(conclusion, k, {inserted(c.antecedent, p + 1, c.antecedent[p]), c.succedent}));
      break;
    }
    case RuleId::icR: {
      if (auto e = in_succ(r)) return *e;
      premises.push_back(
          with_comp(conclusion, k, {c.antecedent, inserted(c.succedent, p + 1, c.succedent[p])}));
      break;
    }
    case RuleId::ieL: {
      if (inst.position < 0 || p + 1 >= c.antecedent.size())
        return fail(RuleErrorKind::shape_mismatch, "(ie-L) needs two adjacent formulas");
      FList a = c.antecedent;
      std::swap(a[p], a[p + 1]);
      premises.push_back(with_comp(conclusion, k, {std::move(a), c.succedent}));
      break;
    }
    case RuleId::ieR: {
      if (inst.position < 0 || p + 1 >= c.succedent.size())
        return fail(RuleErrorKind::shape_mismatch, "(ie-R) needs two adjacent formulas");
      FList s = c.succedent;
      std::swap(s[p], s[p + 1]);
      premises.push_back(with_comp(conclusion, k, {c.antecedent, std::move(s)}));
      break;
    }
    case RuleId::cut: {
      if (!inst.cut_formula)
        return fail(RuleErrorKind::shape_mismatch, "(cut) needs a cut formula");
      if (inst.split < 0 || static_cast<std::size_t>(inst.split) > c.antecedent.size() ||
          inst.split2 < 0 || static_cast<std::size_t>(inst.split2) > c.succedent.size())
        return fail(RuleErrorKind::shape_mismatch, "(cut) split out of range");
      const std::size_t a = static_cast<std::size_t>(inst.split);
      const std::size_t s = static_cast<std::size_t>(inst.split2);
      const Formula& delta = *inst.cut_formula;
      premises.push_back(with_comp(
          conclusion, k,
          {slice(c.antecedent, 0, a), appended(slice(c.succedent, 0, s), delta)}));
      premises.push_back(with_comp(
          conclusion, k,
          {inserted(slice(c.antecedent, a, c.antecedent.size()), 0, delta),
           slice(c.succedent, s, c.succedent.size())}));
      break;
    }
    case RuleId::andL1:
    case RuleId::andL2: {
      if (auto e = in_ante(r)) return *e;
      const Formula& f = c.antecedent[p];
      if (f.kind() != FKind::conj)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not a conjunction");
      const Formula& pick = r == RuleId::andL1 ? f.lhs() : f.rhs();
      premises.push_back(with_comp(conclusion, k, {replaced(c.antecedent, p, pick), c.succedent}));
      break;
    }
    case RuleId::andR: {
      if (auto e = in_succ(r)) return *e;
      const Formula& f = c.succedent[p];
      if (f.kind() != FKind::conj)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not a conjunction");
      premises.push_back(with_comp(conclusion, k, {c.antecedent, replaced(c.succedent, p, f.lhs())}));
      premises.push_back(with_comp(conclusion, k, {c.antecedent, replaced(c.succedent, p, f.rhs())}));
      break;
    }
    case RuleId::orL: {
      if (auto e = in_ante(r)) return *e;
      const Formula& f = c.antecedent[p];
      if (f.kind() != FKind::disj)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not a disjunction");
      premises.push_back(with_comp(conclusion, k, {replaced(c.antecedent, p, f.lhs()), c.succedent}));
      premises.push_back(with_comp(conclusion, k, {replaced(c.antecedent, p, f.rhs()), c.succedent}));
      break;
    }
    case RuleId::orR1:
    case RuleId::orR2: {
      if (auto e = in_succ(r)) return *e;
      const Formula& f = c.succedent[p];
      if (f.kind() != FKind::disj)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not a disjunction");
      const Formula& pick = r == RuleId::orR1 ? f.lhs() : f.rhs();
      premises.push_back(with_comp(conclusion, k, {c.antecedent, replaced(c.succedent, p, pick)}));
      break;
    }
    case RuleId::impL: {
      if (auto e = in_ante(r)) return *e;
      const Formula& f = c.antecedent[p];
      if (f.kind() != FKind::impl)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not an implication");
      premises.push_back(
          with_comp(conclusion, k, {erased(c.antecedent, p), appended(c.succedent, f.lhs())}));
      premises.push_back(with_comp(conclusion, k, {replaced(c.antecedent, p, f.rhs()), c.succedent}));
      break;
    }
    case RuleId::impR: {
      if (auto e = in_succ(r)) return *e;
      const Formula& f = c.succedent[p];
      if (f.kind() != FKind::impl)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not an implication");
      premises.push_back(with_comp(
          conclusion, k, {inserted(c.antecedent, 0, f.lhs()), replaced(c.succedent, p, f.rhs())}));
      break;
    }
    case RuleId::impRprime: {
      if (c.succedent.size() != 1 || c.succedent[0].kind() != FKind::impl)
        return fail(RuleErrorKind::shape_mismatch,
                    "(→-R') needs the succedent to be exactly one implication");
      const Formula& f = c.succedent[0];
      premises.push_back(
          with_comp(conclusion, k, {inserted(c.antecedent, 0, f.lhs()), {f.rhs()}}));
      break;
    }
    case RuleId::forallL: {
      if (auto e = in_ante(r)) return *e;
      const Formula& f = c.antecedent[p];
      if (f.kind() != FKind::forall)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not universal");
      if (!inst.witness)
        return fail(RuleErrorKind::shape_mismatch, "(∀-L) needs a witness term");
      Formula instd = substitute(f.body(), Variable{f.bound_var(), Scope::local}, *inst.witness);
      premises.push_back(
          with_comp(conclusion, k, {replaced(c.antecedent, p, std::move(instd)), c.succedent}));
      break;
    }
    case RuleId::existsR: {
      if (auto e = in_succ(r)) return *e;
      const Formula& f = c.succedent[p];
      if (f.kind() != FKind::exists)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not existential");
      if (!inst.witness)
        return fail(RuleErrorKind::shape_mismatch, "(∃-R) needs a witness term");
      Formula instd = substitute(f.body(), Variable{f.bound_var(), Scope::local}, *inst.witness);
      premises.push_back(
          with_comp(conclusion, k, {c.antecedent, replaced(c.succedent, p, std::move(instd))}));
      break;
    }
    case RuleId::forallRss:
    case RuleId::forallRms: {
      if (r == RuleId::forallRss && n != 1)
        return fail(RuleErrorKind::shape_mismatch, "(∀-R_ss) applies to a single-component hypersequent");
      if (c.succedent.size() != 1 || c.succedent[0].kind() != FKind::forall)
        return fail(RuleErrorKind::shape_mismatch,
                    "succedent must be exactly one universal formula");
      auto res = resolve_eigen(inst, c.succedent[0]);
      if (auto* e = std::get_if<RuleError>(&res)) return *e;
      auto& tgt = std::get<EigenTarget>(res);
      const Variable ev{tgt.var, Scope::local};
      if (r == RuleId::forallRss ? occurs_free(ev, c) : occurs_free(ev, conclusion))
        return fail(RuleErrorKind::eigenvariable_violation,
                    "eigenvariable '" + tgt.var + "' occurs free in the lower " +
                        (r == RuleId::forallRss ? "sequent" : "hypersequent"));
      premises.push_back(with_comp(conclusion, k, {c.antecedent, {std::move(tgt.matrix)}}));
      break;
    }
    case RuleId::forallRmm:
    case RuleId::forallRsm: {
      if (r == RuleId::forallRsm && n != 1)
        return fail(RuleErrorKind::shape_mismatch, "(∀-R_sm) applies to a single-component hypersequent");
      if (auto e = in_succ(r)) return *e;
      const Formula& f = c.succedent[p];
      if (f.kind() != FKind::forall)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not universal");
      auto res = resolve_eigen(inst, f);
      if (auto* e = std::get_if<RuleError>(&res)) return *e;
      auto& tgt = std::get<EigenTarget>(res);
      const Variable ev{tgt.var, Scope::local};
      // The principal occurrence binds the eigenvariable; the rest must avoid it.
      Hypersequent rest = with_comp(conclusion, k, {c.antecedent, erased(c.succedent, p)});
      if (r == RuleId::forallRsm ? occurs_free(ev, rest.components[k]) : occurs_free(ev, rest))
        return fail(RuleErrorKind::eigenvariable_violation,
                    "eigenvariable '" + tgt.var + "' occurs free in the lower " +
                        (r == RuleId::forallRsm ? "sequent" : "hypersequent"));
      premises.push_back(
          with_comp(conclusion, k, {c.antecedent, replaced(c.succedent, p, std::move(tgt.matrix))}));
      break;
    }
    case RuleId::existsLs:
    case RuleId::existsLm: {
      if (r == RuleId::existsLs && n != 1)
        return fail(RuleErrorKind::shape_mismatch, "(∃-L_s) applies to a single-component hypersequent");
      if (auto e = in_ante(r)) return *e;
      const Formula& f = c.antecedent[p];
      if (f.kind() != FKind::exists)
        return fail(RuleErrorKind::shape_mismatch, "principal formula is not existential");
      auto res = resolve_eigen(inst, f);
      if (auto* e = std::get_if<RuleError>(&res)) return *e;
      auto& tgt = std::get<EigenTarget>(res);
      const Variable ev{tgt.var, Scope::local};
      Hypersequent rest = with_comp(conclusion, k, {erased(c.antecedent, p), c.succedent});
      if (r == RuleId::existsLs ? occurs_free(ev, rest.components[k]) : occurs_free(ev, rest))
        return fail(RuleErrorKind::eigenvariable_violation,
                    "eigenvariable '" + tgt.var + "' occurs free in the lower " +
                        (r == RuleId::existsLs ? "sequent" : "hypersequent"));
      premises.push_back(
          with_comp(conclusion, k, {replaced(c.antecedent, p, std::move(tgt.matrix)), c.succedent}));
      break;
    }
    case RuleId::com: {
      if (auto e = two_components()) return *e;
      const std::size_t j = static_cast<std::size_t>(inst.component2);
      const Sequent& cj = conclusion.components[j];
      if (inst.split < 0 || static_cast<std::size_t>(inst.split) > c.antecedent.size() ||
          inst.split2 < 0 || static_cast<std::size_t>(inst.split2) > cj.antecedent.size())
        return fail(RuleErrorKind::shape_mismatch, "(com) split out of range");
      const std::size_t a = static_cast<std::size_t>(inst.split);
      const std::size_t b = static_cast<std::size_t>(inst.split2);
      // Conclusion components are Γ,Δ' ⇒ Θ and Γ',Δ ⇒ Θ'; the premises put
      // each component's own Δ back: Γ,Δ ⇒ Θ | G and Γ',Δ' ⇒ Θ' | G.
      FList gamma = slice(c.antecedent, 0, a);
      FList delta_prime = slice(c.antecedent, a, c.antecedent.size());
      FList gamma_prime = slice(cj.antecedent, 0, b);
      FList delta = slice(cj.antecedent, b, cj.antecedent.size());
      premises.push_back(
          without_comp(with_comp(conclusion, k, {concat(gamma, delta), c.succedent}), j));
      premises.push_back(
          without_comp(with_comp(conclusion, j, {concat(gamma_prime, delta_prime), cj.succedent}), k));
      break;
    }
    case RuleId::rs: {
      if (auto e = two_components()) return *e;
      const std::size_t j = static_cast<std::size_t>(inst.component2);
      const Sequent& cj = conclusion.components[j];
      if (!lists_alpha_equal(c.antecedent, cj.antecedent))
        return fail(RuleErrorKind::shape_mismatch, "(rs) components must share the antecedent");
      premises.push_back(without_comp(
          with_comp(conclusion, k, {c.antecedent, concat(c.succedent, cj.succedent)}), j));
      break;
    }
    case RuleId::ls: {
      if (auto e = two_components()) return *e;
      const std::size_t j = static_cast<std::size_t>(inst.component2);
      const Sequent& cj = conclusion.components[j];
      if (!lists_alpha_equal(c.succedent, cj.succedent))
        return fail(RuleErrorKind::shape_mismatch, "(ls) components must share the succedent");
      premises.push_back(without_comp(
          with_comp(conclusion, k, {concat(c.antecedent, cj.antecedent), c.succedent}), j));
      break;
    }
    case RuleId::share:
    case RuleId::unshare: {
      if (!inst.local_var || !inst.global_var)
        return fail(RuleErrorKind::shape_mismatch, "share/unshare need local and global variables");
      const Variable lv{*inst.local_var, Scope::local};
      const Variable gv{*inst.global_var, Scope::global};
      const bool to_global = r == RuleId::share;  // premise-to-conclusion substitutes [g/l]
      Sequent prem_comp = substitute(c, to_global ? gv : lv,
                                     to_global ? Term::var(lv.name, Scope::local)
                                               : Term::var(gv.name, Scope::global));
      Sequent roundtrip = substitute(prem_comp, to_global ? lv : gv,
                                     to_global ? Term::var(gv.name, Scope::global)
                                               : Term::var(lv.name, Scope::local));
      if (!alpha_equal(roundtrip, c))
        return fail(RuleErrorKind::shape_mismatch,
                    std::string(rule_name(r)) + " conclusion is not a substitution instance");
      for (std::size_t i = 0; i < n; ++i) {
        if (i == k) continue;
        if (occurs_free(gv, conclusion.components[i]))
          return fail(RuleErrorKind::eigenvariable_violation,
                      "global variable '" + gv.name + "' occurs free in the side hypersequent");
      }
      if (to_global && occurs_free(gv, prem_comp))
        return fail(RuleErrorKind::eigenvariable_violation,
                    "global variable '" + gv.name + "' occurs free in the premise component");
      if (!to_global && occurs_free(lv, prem_comp))
        return fail(RuleErrorKind::eigenvariable_violation,
                    "local variable '" + lv.name + "' occurs free in the premise component");
      premises.push_back(with_comp(conclusion, k, std::move(prem_comp)));
      break;
    }
  }

  for (const auto& prem : premises) {
    if (cfg.width_cap && prem.components.size() > static_cast<std::size_t>(*cfg.width_cap))
      return fail(RuleErrorKind::width_exceeded,
                  "premise has " + std::to_string(prem.components.size()) +
                      " components, cap is " + std::to_string(*cfg.width_cap));
    if (cfg.base == BaseDiscipline::single_conclusion && multi_conclusion(prem))
      return fail(RuleErrorKind::discipline_violation,
                  "premise is multi-conclusion in a single-conclusion calculus");
  }
  return premises;
}

// applicable_rules -------------------------------------------------------------

namespace {

std::set<std::string> all_local_names(const Hypersequent& h) {
  std::set<std::string> names;
  for (const auto& v : free_vars(h)) names.insert(v.name);
  return names;
}

}  // namespace

std::vector<RuleInstance> applicable_rules(const CalculusConfig& cfg, const Hypersequent& goal,
                                           const InstancePools& pools) {
  std::vector<RuleInstance> out;
  auto try_add = [&](RuleInstance inst) {
    if (std::holds_alternative<std::vector<Hypersequent>>(premises_of(cfg, inst, goal)))
      out.push_back(std::move(inst));
  };

  const int n = static_cast<int>(goal.components.size());
  const std::set<std::string> names = all_local_names(goal);

  for (int ri = 0; ri < kRuleCount; ++ri) {
    const RuleId r = static_cast<RuleId>(ri);
    if (!cfg.rule_enabled(r)) continue;
    switch (r) {
      case RuleId::Id:
      case RuleId::Bot:
        try_add({.rule = r});
        break;
      case RuleId::ew:
      case RuleId::ec:
      case RuleId::ee:
        for (int k = 0; k < n; ++k) try_add({.rule = r, .component = k});
        break;
      case RuleId::iwL:
      case RuleId::icL:
      case RuleId::ieL:
      case RuleId::andL1:
      case RuleId::andL2:
      case RuleId::orL:
      case RuleId::impL:
        for (int k = 0; k < n; ++k)
          for (int p = 0; p < static_cast<int>(goal.components[k].antecedent.size()); ++p)
            try_add({.rule = r, .component = k, .position = p});
        break;
      case RuleId::iwR:
      case RuleId::icR:
      case RuleId::ieR:
      case RuleId::andR:
      case RuleId::orR1:
      case RuleId::orR2:
      case RuleId::impR:
        for (int k = 0; k < n; ++k)
          for (int p = 0; p < static_cast<int>(goal.components[k].succedent.size()); ++p)
            try_add({.rule = r, .component = k, .position = p});
        break;
      case RuleId::impRprime:
        for (int k = 0; k < n; ++k) try_add({.rule = r, .component = k});
        break;
      case RuleId::cut:
        for (int k = 0; k < n; ++k)
          for (const auto& delta : pools.cut_formulas)
            for (int a = 0; a <= static_cast<int>(goal.components[k].antecedent.size()); ++a)
              for (int s = 0; s <= static_cast<int>(goal.components[k].succedent.size()); ++s)
                try_add({.rule = r,
                         .component = k,
                         .split = a,
                         .split2 = s,
                         .cut_formula = delta});
        break;
      case RuleId::forallL:
        for (int k = 0; k < n; ++k)
          for (int p = 0; p < static_cast<int>(goal.components[k].antecedent.size()); ++p) {
            if (goal.components[k].antecedent[p].kind() != FKind::forall) continue;
            for (const auto& w : pools.witnesses)
              try_add({.rule = r, .component = k, .position = p, .witness = w});
          }
        break;
      case RuleId::existsR:
        for (int k = 0; k < n; ++k)
          for (int p = 0; p < static_cast<int>(goal.components[k].succedent.size()); ++p) {
            if (goal.components[k].succedent[p].kind() != FKind::exists) continue;
            for (const auto& w : pools.witnesses)
              try_add({.rule = r, .component = k, .position = p, .witness = w});
          }
        break;
      case RuleId::forallRss:
      case RuleId::forallRms:
        for (int k = 0; k < n; ++k) {
          const Sequent& c = goal.components[k];
          if (c.succedent.size() != 1 || c.succedent[0].kind() != FKind::forall) continue;
          const std::string& binder = c.succedent[0].bound_var();
          std::string e = names.count(binder) ? fresh_name(binder, names) : binder;
          try_add({.rule = r, .component = k, .eigenvariable = e});
        }
        break;
      case RuleId::forallRmm:
      case RuleId::forallRsm:
        for (int k = 0; k < n; ++k)
          for (int p = 0; p < static_cast<int>(goal.components[k].succedent.size()); ++p) {
            const Formula& f = goal.components[k].succedent[p];
            if (f.kind() != FKind::forall) continue;
            std::string e =
                names.count(f.bound_var()) ? fresh_name(f.bound_var(), names) : f.bound_var();
            try_add({.rule = r, .component = k, .position = p, .eigenvariable = e});
          }
        break;
      case RuleId::existsLs:
      case RuleId::existsLm:
        for (int k = 0; k < n; ++k)
          for (int p = 0; p < static_cast<int>(goal.components[k].antecedent.size()); ++p) {
            const Formula& f = goal.components[k].antecedent[p];
            if (f.kind() != FKind::exists) continue;
            std::string e =
                names.count(f.bound_var()) ? fresh_name(f.bound_var(), names) : f.bound_var();
            try_add({.rule = r, .component = k, .position = p, .eigenvariable = e});
          }
        break;
      case RuleId::com:
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            for (int a = 0; a <= static_cast<int>(goal.components[i].antecedent.size()); ++a)
              for (int b = 0; b <= static_cast<int>(goal.components[j].antecedent.size()); ++b)
                try_add({.rule = r, .component = i, .component2 = j, .split = a, .split2 = b});
        break;
      case RuleId::rs:
      case RuleId::ls:
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            try_add({.rule = r, .component = i, .component2 = j});
        break;
      case RuleId::share:
        for (int k = 0; k < n; ++k)
          for (const auto& v : free_vars(goal.components[k])) {
            if (v.scope != Scope::global) continue;
            std::string l = names.count(v.name) ? fresh_name(v.name, names) : v.name;
            try_add({.rule = r, .component = k, .local_var = l, .global_var = v.name});
          }
        break;
      case RuleId::unshare:
        for (int k = 0; k < n; ++k)
          for (const auto& v : free_vars(goal.components[k])) {
            if (v.scope != Scope::local) continue;
            std::set<std::string> avoid;
            for (const auto& g : free_vars(goal))
              if (g.scope == Scope::global) avoid.insert(g.name);
            std::string g = avoid.count(v.name) ? fresh_name(v.name, avoid) : v.name;
            try_add({.rule = r, .component = k, .local_var = v.name, .global_var = g});
          }
        break;
    }
  }
  return out;
}

}  // namespace hyperseq
