#ifndef HYPERSEQ_TESTUTIL_HPP
#define HYPERSEQ_TESTUTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "hyperseq/syntax.hpp"

namespace hyperseq::testutil {

// --- Nameless (de Bruijn) oracle -------------------------------------------
//
// Independent representation used to cross-check alpha_equal, substitute and
// free_vars. Binders carry no names; bound occurrences carry distances.

struct DTerm {
  // exactly one of: bound index >= 0, free local name, global name, application
  int bound = -1;
  std::string free_local;
  std::string global;
  std::string sym;
  bool is_app = false;
  std::vector<DTerm> args;

  friend bool operator==(const DTerm&, const DTerm&) = default;
};

struct DForm {
  FKind kind = FKind::bottom;
  std::string pred;         // atom
  std::vector<DTerm> args;  // atom
  std::vector<DForm> sub;   // binary: {lhs, rhs}; quantifier: {body}

  friend bool operator==(const DForm&, const DForm&) = default;
};

inline DTerm to_db(const Term& t, const std::vector<std::string>& ctx) {
  DTerm d;
  if (t.is_var()) {
    const Variable& v = t.as_var();
    if (v.scope == Scope::global) {
      d.global = v.name;
      return d;
    }
    for (std::size_t i = ctx.size(); i-- > 0;)
      if (ctx[i] == v.name) {
        d.bound = static_cast<int>(ctx.size() - 1 - i);
        return d;
      }
    d.free_local = v.name;
    return d;
  }
  d.is_app = true;
  d.sym = t.symbol();
  for (const auto& a : t.args()) d.args.push_back(to_db(a, ctx));
  return d;
}

inline DForm to_db(const Formula& f, std::vector<std::string>& ctx) {
  DForm d;
  d.kind = f.kind();
  switch (f.kind()) {
    case FKind::bottom:
      break;
    case FKind::atom:
      d.pred = f.predicate();
      for (const auto& a : f.args()) d.args.push_back(to_db(a, ctx));
      break;
    case FKind::conj:
    case FKind::disj:
    case FKind::impl:
      d.sub.push_back(to_db(f.lhs(), ctx));
      d.sub.push_back(to_db(f.rhs(), ctx));
      break;
    case FKind::forall:
    case FKind::exists:
      ctx.push_back(f.bound_var());
      d.sub.push_back(to_db(f.body(), ctx));
      ctx.pop_back();
      break;
  }
  return d;
}

inline DForm to_db(const Formula& f) {
  std::vector<std::string> ctx;
  return to_db(f, ctx);
}

// Nameless substitution of a free local name: terms contain no binders, so
// inserting them under quantifiers can never capture.
inline DTerm db_subst(const DTerm& d, const std::string& name, const DTerm& repl) {
  if (!d.is_app) {
    if (d.free_local == name && d.bound < 0 && d.global.empty()) return repl;
    return d;
  }
  DTerm out = d;
  out.args.clear();
  for (const auto& a : d.args) out.args.push_back(db_subst(a, name, repl));
  return out;
}

inline DForm db_subst(const DForm& d, const std::string& name, const DTerm& repl) {
  DForm out = d;
  out.args.clear();
  out.sub.clear();
  for (const auto& a : d.args) out.args.push_back(db_subst(a, name, repl));
  for (const auto& s : d.sub) out.sub.push_back(db_subst(s, name, repl));
  return out;
}

inline void db_free_locals(const DTerm& d, std::vector<std::string>& out) {
  if (!d.is_app) {
    if (d.bound < 0 && d.global.empty()) out.push_back(d.free_local);
    return;
  }
  for (const auto& a : d.args) db_free_locals(a, out);
}

inline void db_free_locals(const DForm& d, std::vector<std::string>& out) {
  for (const auto& a : d.args) db_free_locals(a, out);
  for (const auto& s : d.sub) db_free_locals(s, out);
}

// --- Random generators ------------------------------------------------------

struct Gen {
  std::mt19937 rng;
  bool quantifiers = true;
  bool globals = false;

  explicit Gen(unsigned seed) : rng(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Term term(int depth) {
    static const char* vars[] = {"x", "y", "z"};
    static const char* consts[] = {"c", "d"};
    int r = pick(depth > 0 ? 8 : 6);
    if (r < 4) return Term::var(vars[pick(3)]);
    if (r < 6) {
      if (globals && pick(2) == 0) return Term::var(vars[pick(3)], Scope::global);
      return Term::app(consts[pick(2)], {});
    }
    if (r == 6) return Term::app("f", {term(depth - 1)});
    return Term::app("g", {term(depth - 1), term(depth - 1)});
  }

  Formula formula(int depth) {
    static const char* preds0[] = {"p", "q", "r"};
    static const char* preds1[] = {"P", "Q"};
    static const char* vars[] = {"x", "y", "z"};
    int max = depth > 0 ? (quantifiers ? 8 : 6) : 3;
    int r = pick(max);
    switch (r) {
      case 0:
        return Formula::bottom();
      case 1:
        return Formula::atom(preds0[pick(3)]);
      case 2:
        return Formula::atom(preds1[pick(2)], {term(depth > 0 ? 1 : 0)});
      case 3:
        return Formula::conj(formula(depth - 1), formula(depth - 1));
      case 4:
        return Formula::disj(formula(depth - 1), formula(depth - 1));
      case 5:
        return Formula::impl(formula(depth - 1), formula(depth - 1));
      default:
        return r == 6 ? Formula::forall(vars[pick(3)], formula(depth - 1))
                      : Formula::exists(vars[pick(3)], formula(depth - 1));
    }
  }

  Formula closed_formula(int depth) {
    Formula f = formula(depth);
    for (const auto& v : free_vars(f))
      if (v.scope == Scope::local) f = Formula::forall(v.name, f);
    return f;
  }

  Sequent sequent(int nante, int nsucc, int depth) {
    Sequent s;
    for (int i = 0; i < nante; ++i) s.antecedent.push_back(formula(depth));
    for (int i = 0; i < nsucc; ++i) s.succedent.push_back(formula(depth));
    return s;
  }

  Hypersequent hypersequent(int max_comps, int depth) {
    Hypersequent h;
    int n = 1 + pick(max_comps);
    for (int i = 0; i < n; ++i) h.components.push_back(sequent(pick(3), pick(3), depth));
    return h;
  }
};

}  // namespace hyperseq::testutil

#endif
