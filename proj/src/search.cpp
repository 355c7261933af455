#include "hyperseq/search.hpp"
#include <climits>

#include <algorithm>

namespace hyperseq {

namespace {

// Exchange is absorbed by comparing sorted shapes: a branch is pruned when its
// normalized hypersequent repeats an ancestor's.
Hypersequent normalized(const Hypersequent& h) {
  Hypersequent out = h;
  for (auto& comp : out.components) {
    std::sort(comp.antecedent.begin(), comp.antecedent.end(),
              [](const Formula& a, const Formula& b) { return Formula::compare(a, b) < 0; });
    std::sort(comp.succedent.begin(), comp.succedent.end(),
              [](const Formula& a, const Formula& b) { return Formula::compare(a, b) < 0; });
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const Sequent& a, const Sequent& b) { return compare(a, b) < 0; });
  return out;
}

struct HsLess {
  bool operator()(const Hypersequent& a, const Hypersequent& b) const {
    return compare(a, b) < 0;
  }
};

struct FLess {
  bool operator()(const Formula& a, const Formula& b) const {
    return Formula::compare(a, b) < 0;
  }
};

bool quantifier_free(const Formula& f) {
  switch (f.kind()) {
    case FKind::bottom:
    case FKind::atom:
      return true;
    case FKind::conj:
    case FKind::disj:
    case FKind::impl:
      return quantifier_free(f.lhs()) && quantifier_free(f.rhs());
    case FKind::forall:
    case FKind::exists:
      return false;
  }
  return false;
}

bool eval_classical(const Formula& f, const std::map<Formula, bool, FLess>& val) {
  switch (f.kind()) {
    case FKind::bottom:
      return false;
    case FKind::atom:
      return val.at(f);
    case FKind::conj:
      return eval_classical(f.lhs(), val) && eval_classical(f.rhs(), val);
    case FKind::disj:
      return eval_classical(f.lhs(), val) || eval_classical(f.rhs(), val);
    case FKind::impl:
      return !eval_classical(f.lhs(), val) || eval_classical(f.rhs(), val);
    default:
      return false;
  }
}

void collect_atoms(const Formula& f, std::map<Formula, bool, FLess>& atoms) {
  switch (f.kind()) {
    case FKind::bottom:
      return;
    case FKind::atom:
      atoms.emplace(f, false);
      return;
    default:
      collect_atoms(f.lhs(), atoms);
      collect_atoms(f.rhs(), atoms);
  }
}

// Every calculus here is sound for classical logic, so a quantifier-free goal
// whose propositional abstraction has a falsifying valuation is hopeless.
// Distinct atom instances count as independent letters, which any classical
// structure can realize.
bool classically_refutable(const Hypersequent& goal) {
  std::map<Formula, bool, FLess> atoms;
  for (const auto& comp : goal.components) {
    for (const auto& f : comp.antecedent) {
      if (!quantifier_free(f)) return false;
      collect_atoms(f, atoms);
    }
    for (const auto& f : comp.succedent) {
      if (!quantifier_free(f)) return false;
      collect_atoms(f, atoms);
    }
  }
  if (atoms.size() > 12) return false;
  for (std::uint64_t bits = 0; bits < (1ull << atoms.size()); ++bits) {
    std::size_t i = 0;
    for (auto& [atom, value] : atoms) value = (bits >> i++) & 1;
    bool some_component = false;
    for (const auto& comp : goal.components) {
      bool ante = true;
      for (const auto& f : comp.antecedent) ante = ante && eval_classical(f, atoms);
      bool succ = false;
      for (const auto& f : comp.succedent) succ = succ || eval_classical(f, atoms);
      if (!ante || succ) {
        some_component = true;
        break;
      }
    }
    if (!some_component) return true;
  }
  return false;
}

struct Searcher {
  const CalculusConfig& cfg;
  const SearchBudget& budget;
  std::vector<Hypersequent> trail;        // normalized ancestors of this branch
  std::set<Hypersequent, HsLess> on_trail;  // same contents, for membership tests

  // Failure cache. A failed subtree may have been cut short by loop checks
  // against ancestors outside it; those ancestors form the entry's footprint,
  // and the entry applies again whenever they are all back on the trail.
  struct CacheEntry {
    int depth;
    int contractions;
    std::vector<Hypersequent> footprint;  // sorted, deduplicated
  };
  std::map<Hypersequent, std::vector<CacheEntry>, HsLess> failed;

  struct Outcome {
    std::optional<ProofTree> proof;
    std::vector<Hypersequent> footprint;  // on failure: external ancestors hit
  };

  static void merge_into(std::vector<Hypersequent>& dst, const std::vector<Hypersequent>& src) {
    for (const auto& h : src) {
      auto it = std::lower_bound(dst.begin(), dst.end(), h,
                                 [](const Hypersequent& a, const Hypersequent& b) {
                                   return compare(a, b) < 0;
                                 });
      if (it == dst.end() || !(*it == h)) dst.insert(it, h);
    }
  }

  // Leaf-axiom closure: an antecedent bot, or an antecedent formula alpha-equal
  // to a succedent formula, closes the goal through explicit weakenings.
  std::optional<ProofTree> try_close(const Hypersequent& goal) {
    for (std::size_t c = 0; c < goal.components.size(); ++c) {
      const Sequent& s = goal.components[c];
      for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
        if (s.antecedent[i].kind() == FKind::bottom && !s.succedent.empty())
          return build_closure(goal, c, i, 0, RuleId::Bot);
        for (std::size_t j = 0; j < s.succedent.size(); ++j)
          if (alpha_equal(s.antecedent[i], s.succedent[j]))
            return build_closure(goal, c, i, j, RuleId::Id);
      }
    }
    return std::nullopt;
  }

  ProofTree build_closure(const Hypersequent& goal, std::size_t c, std::size_t i, std::size_t j,
                          RuleId axiom) {
    const Sequent& s = goal.components[c];
    ProofTree cur;
    cur.conclusion = Hypersequent{{Sequent{{s.antecedent[i]}, {s.succedent[j]}}}};
    cur.rule = RuleInstance{.rule = axiom};
    for (std::size_t q = 0; q < s.antecedent.size(); ++q) {
      if (q == i) continue;
      ProofTree next;
      next.conclusion = cur.conclusion;
      auto& ante = next.conclusion.components[0].antecedent;
      ante.insert(ante.begin() + q, s.antecedent[q]);
      next.rule = RuleInstance{.rule = RuleId::iwL, .position = static_cast<int>(q)};
      next.subproofs.push_back(std::move(cur));
      cur = std::move(next);
    }
    for (std::size_t q = 0; q < s.succedent.size(); ++q) {
      if (q == j) continue;
      ProofTree next;
      next.conclusion = cur.conclusion;
      auto& succ = next.conclusion.components[0].succedent;
      succ.insert(succ.begin() + q, s.succedent[q]);
      next.rule = RuleInstance{.rule = RuleId::iwR, .position = static_cast<int>(q)};
      next.subproofs.push_back(std::move(cur));
      cur = std::move(next);
    }
    for (std::size_t r = 0; r < goal.components.size(); ++r) {
      if (r == c) continue;
      ProofTree next;
      next.conclusion = cur.conclusion;
      auto& comps = next.conclusion.components;
      comps.insert(comps.begin() + r, goal.components[r]);
      next.rule = RuleInstance{.rule = RuleId::ew, .component = static_cast<int>(r)};
      next.subproofs.push_back(std::move(cur));
      cur = std::move(next);
    }
    return cur;
  }

  // Instance generation in the fixed strategy order. Decomposing rules first,
  // witness/cut instantiation later, contraction and component dropping last.
  std::vector<RuleInstance> candidates(const Hypersequent& goal, bool contraction_left) {
    std::vector<RuleInstance> out;
    const int n = static_cast<int>(goal.components.size());
    auto each_ante = [&](RuleId r, FKind kind, auto&& emit) {
      if (!cfg.rule_enabled(r)) return;
      for (int k = 0; k < n; ++k) {
        const auto& ante = goal.components[k].antecedent;
        for (int p = 0; p < static_cast<int>(ante.size()); ++p)
          if (ante[p].kind() == kind) emit(k, p);
      }
    };
    auto each_succ = [&](RuleId r, FKind kind, auto&& emit) {
      if (!cfg.rule_enabled(r)) return;
      for (int k = 0; k < n; ++k) {
        const auto& succ = goal.components[k].succedent;
        for (int p = 0; p < static_cast<int>(succ.size()); ++p)
          if (succ[p].kind() == kind) emit(k, p);
      }
    };
    auto names = [&] {
      std::set<std::string> ns;
      for (const auto& v : free_vars(goal)) ns.insert(v.name);
      return ns;
    }();
    auto eigen_for = [&](const std::string& binder) {
      return names.count(binder) ? fresh_name(binder, names) : binder;
    };

    // 1. implication right (invertible here).
    if (cfg.rule_enabled(RuleId::impRprime))
      for (int k = 0; k < n; ++k) {
        const auto& succ = goal.components[k].succedent;
        if (succ.size() == 1 && succ[0].kind() == FKind::impl)
          out.push_back({.rule = RuleId::impRprime, .component = k});
      }
    each_succ(RuleId::impR, FKind::impl, [&](int k, int p) {
      out.push_back({.rule = RuleId::impR, .component = k, .position = p});
    });
    // 2. universal right.
    for (RuleId r : {RuleId::forallRss, RuleId::forallRms, RuleId::forallRsm, RuleId::forallRmm})
      if (cfg.rule_enabled(r)) {
        if (r == RuleId::forallRss || r == RuleId::forallRms) {
          for (int k = 0; k < n; ++k) {
            const auto& succ = goal.components[k].succedent;
            if (succ.size() == 1 && succ[0].kind() == FKind::forall)
              out.push_back(
                  {.rule = r, .component = k, .eigenvariable = eigen_for(succ[0].bound_var())});
          }
        } else {
          each_succ(r, FKind::forall, [&](int k, int p) {
            out.push_back({.rule = r,
                           .component = k,
                           .position = p,
                           .eigenvariable =
                               eigen_for(goal.components[k].succedent[p].bound_var())});
          });
        }
      }
    // 3. branching invertible logical rules.
    each_succ(RuleId::andR, FKind::conj, [&](int k, int p) {
      out.push_back({.rule = RuleId::andR, .component = k, .position = p});
    });
    each_ante(RuleId::orL, FKind::disj, [&](int k, int p) {
      out.push_back({.rule = RuleId::orL, .component = k, .position = p});
    });
    // 4. existential left.
    for (RuleId r : {RuleId::existsLs, RuleId::existsLm})
      each_ante(r, FKind::exists, [&](int k, int p) {
        out.push_back({.rule = r,
                       .component = k,
                       .position = p,
                       .eigenvariable = eigen_for(goal.components[k].antecedent[p].bound_var())});
      });
    // 5-6. one-sided choices.
    for (RuleId r : {RuleId::andL1, RuleId::andL2})
      each_ante(r, FKind::conj, [&](int k, int p) {
        out.push_back({.rule = r, .component = k, .position = p});
      });
    for (RuleId r : {RuleId::orR1, RuleId::orR2})
      each_succ(r, FKind::disj, [&](int k, int p) {
        out.push_back({.rule = r, .component = k, .position = p});
      });
    // 7. witness instantiation.
    each_succ(RuleId::existsR, FKind::exists, [&](int k, int p) {
      for (const auto& w : budget.witnesses)
        out.push_back({.rule = RuleId::existsR, .component = k, .position = p, .witness = w});
    });
    each_ante(RuleId::forallL, FKind::forall, [&](int k, int p) {
      for (const auto& w : budget.witnesses)
        out.push_back({.rule = RuleId::forallL, .component = k, .position = p, .witness = w});
    });
    // 8. implication left.
    each_ante(RuleId::impL, FKind::impl, [&](int k, int p) {
      out.push_back({.rule = RuleId::impL, .component = k, .position = p});
    });
    // 9. component-mixing structural rules, all binary splits.
    if (cfg.rule_enabled(RuleId::com))
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int a = 0; a <= static_cast<int>(goal.components[i].antecedent.size()); ++a)
            for (int b = 0; b <= static_cast<int>(goal.components[j].antecedent.size()); ++b)
              out.push_back(
                  {.rule = RuleId::com, .component = i, .component2 = j, .split = a, .split2 = b});
    for (RuleId r : {RuleId::rs, RuleId::ls})
      if (cfg.rule_enabled(r))
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            out.push_back({.rule = r, .component = i, .component2 = j});
    // 10. cut from the pool; a formula already present in the component is
    // never cut in again, keeping the goal space finite.
    if (cfg.rule_enabled(RuleId::cut))
      for (int k = 0; k < n; ++k)
        for (const auto& delta : budget.cut_formulas) {
          const Sequent& c = goal.components[k];
          auto has = [&](const std::vector<Formula>& fs) {
            return std::any_of(fs.begin(), fs.end(),
                               [&](const Formula& f) { return f == delta; });
          };
          if (has(c.antecedent) || has(c.succedent)) continue;
          for (int a = 0; a <= static_cast<int>(c.antecedent.size()); ++a)
            for (int s = 0; s <= static_cast<int>(c.succedent.size()); ++s)
              out.push_back(
                  {.rule = RuleId::cut, .component = k, .split = a, .split2 = s, .cut_formula = delta});
        }
    // 11. contraction, budget-gated.
    if (contraction_left) {
      if (cfg.rule_enabled(RuleId::ec))
        for (int k = 0; k < n; ++k) out.push_back({.rule = RuleId::ec, .component = k});
      for (int k = 0; k < n; ++k) {
        for (int p = 0; p < static_cast<int>(goal.components[k].antecedent.size()); ++p)
          out.push_back({.rule = RuleId::icL, .component = k, .position = p});
        if (cfg.rule_enabled(RuleId::icR))
          for (int p = 0; p < static_cast<int>(goal.components[k].succedent.size()); ++p)
            out.push_back({.rule = RuleId::icR, .component = k, .position = p});
      }
    }
    // 12. dropping a side component.
    if (n > 1)
      for (int k = 0; k < n; ++k) out.push_back({.rule = RuleId::ew, .component = k});
    return out;
  }

  Outcome search(const Hypersequent& goal, int depth, int contractions) {
    if (static_cast<int>(goal.components.size()) > budget.max_width) return {};
    Hypersequent norm = normalized(goal);
    if (on_trail.count(norm)) return {std::nullopt, {norm}};
    if (auto closed = try_close(goal)) return {std::move(closed)};
    if (classically_refutable(goal)) return {};
    if (depth <= 0) return {};
    if (auto it = failed.find(norm); it != failed.end()) {
      for (const auto& entry : it->second) {
        if (depth > entry.depth || contractions > entry.contractions) continue;
        bool applies = true;
        for (const auto& anc : entry.footprint)
          if (!on_trail.count(anc)) {
            applies = false;
            break;
          }
        if (applies) return {std::nullopt, entry.footprint};
      }
    }

    trail.push_back(norm);
    on_trail.insert(norm);
    std::vector<Hypersequent> footprint;
    for (const RuleInstance& inst : candidates(goal, contractions > 0)) {
      PremisesResult res = premises_of(cfg, inst, goal);
      auto* premises = std::get_if<std::vector<Hypersequent>>(&res);
      if (!premises) continue;
      bool contraction =
          inst.rule == RuleId::ec || inst.rule == RuleId::icL || inst.rule == RuleId::icR;
      std::vector<ProofTree> subs;
      subs.reserve(premises->size());
      bool ok = true;
      for (const auto& prem : *premises) {
        Outcome sub = search(prem, depth - 1, contractions - (contraction ? 1 : 0));
        if (!sub.proof) {
          ok = false;
          merge_into(footprint, sub.footprint);
          break;
        }
        subs.push_back(std::move(*sub.proof));
      }
      if (!ok) continue;
      trail.pop_back();
      on_trail.erase(norm);
      ProofTree node;
      node.conclusion = goal;
      node.rule = inst;
      node.subproofs = std::move(subs);
      return {std::move(node)};
    }
    trail.pop_back();
    on_trail.erase(norm);
    // Loop hits against this goal itself were internal to the subtree.
    if (auto it = std::lower_bound(footprint.begin(), footprint.end(), norm,
                                   [](const Hypersequent& a, const Hypersequent& b) {
                                     return compare(a, b) < 0;
                                   });
        it != footprint.end() && *it == norm)
      footprint.erase(it);
    auto& entries = failed[norm];
    entries.push_back(CacheEntry{depth, contractions, footprint});
    if (entries.size() > 8) entries.erase(entries.begin());
    return {std::nullopt, std::move(footprint)};
  }
};

}  // namespace

std::optional<ProofTree> prove(const CalculusConfig& cfg, const Hypersequent& goal,
                               const SearchBudget& budget) {
  Searcher s{cfg, budget, {}, {}, {}};
  return s.search(goal, budget.max_depth, budget.max_contractions).proof;
}

}  // namespace hyperseq
