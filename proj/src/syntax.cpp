#include "hyperseq/syntax.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hyperseq {

// Term -----------------------------------------------------------------------

struct Term::Node {
  bool is_var;
  Variable var;          // is_var
  std::string symbol;    // !is_var
  std::vector<Term> args;
};

Term Term::var(std::string name, Scope scope) {
  Term t;
  t.node_ = std::make_shared<const Node>(Node{true, Variable{std::move(name), scope}, {}, {}});
  return t;
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  Term t;
  t.node_ = std::make_shared<const Node>(Node{false, {}, std::move(symbol), std::move(args)});
  return t;
}

bool Term::is_var() const { return node_->is_var; }
const Variable& Term::as_var() const { return node_->var; }
const std::string& Term::symbol() const { return node_->symbol; }
const std::vector<Term>& Term::args() const { return node_->args; }

int Term::compare(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return 0;
  if (a.is_var() != b.is_var()) return a.is_var() ? -1 : 1;
  if (a.is_var()) {
    if (a.as_var() < b.as_var()) return -1;
    if (b.as_var() < a.as_var()) return 1;
    return 0;
  }
  if (int c = a.symbol().compare(b.symbol())) return c < 0 ? -1 : 1;
  if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (int c = compare(a.args()[i], b.args()[i])) return c;
  return 0;
}

// Formula ---------------------------------------------------------------------

struct Formula::Node {
  FKind kind;
  std::string name;        // atom predicate or binder variable
  std::vector<Term> args;  // atom
  std::optional<Formula> left, right;  // binary: left/right; quantifier: left = body
};

Formula Formula::make(Node&& n) {
  Formula f;
  f.node_ = std::make_shared<const Node>(std::move(n));
  return f;
}

Formula Formula::bottom() { return make({FKind::bottom, {}, {}, {}, {}}); }
Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  return make({FKind::atom, std::move(predicate), std::move(args), {}, {}});
}
Formula Formula::conj(Formula l, Formula r) {
  return make({FKind::conj, {}, {}, std::move(l), std::move(r)});
}
Formula Formula::disj(Formula l, Formula r) {
  return make({FKind::disj, {}, {}, std::move(l), std::move(r)});
}
Formula Formula::impl(Formula l, Formula r) {
  return make({FKind::impl, {}, {}, std::move(l), std::move(r)});
}
Formula Formula::forall(std::string var, Formula body) {
  return make({FKind::forall, std::move(var), {}, std::move(body), {}});
}
Formula Formula::exists(std::string var, Formula body) {
  return make({FKind::exists, std::move(var), {}, std::move(body), {}});
}

FKind Formula::kind() const { return node_->kind; }
const std::string& Formula::predicate() const { return node_->name; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const Formula& Formula::lhs() const { return *node_->left; }
const Formula& Formula::rhs() const { return *node_->right; }
const std::string& Formula::bound_var() const { return node_->name; }
const Formula& Formula::body() const { return *node_->left; }

int Formula::compare(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return 0;
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  switch (a.kind()) {
    case FKind::bottom:
      return 0;
    case FKind::atom: {
      if (int c = a.predicate().compare(b.predicate())) return c < 0 ? -1 : 1;
      if (a.args().size() != b.args().size()) return a.args().size() < b.args().size() ? -1 : 1;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (int c = Term::compare(a.args()[i], b.args()[i])) return c;
      return 0;
    }
    case FKind::conj:
    case FKind::disj:
    case FKind::impl: {
      if (int c = compare(a.lhs(), b.lhs())) return c;
      return compare(a.rhs(), b.rhs());
    }
    case FKind::forall:
    case FKind::exists: {
      if (int c = a.bound_var().compare(b.bound_var())) return c < 0 ? -1 : 1;
      return compare(a.body(), b.body());
    }
  }
  return 0;
}

bool operator==(const Sequent& a, const Sequent& b) {
  return a.antecedent == b.antecedent && a.succedent == b.succedent;
}
bool operator==(const Hypersequent& a, const Hypersequent& b) {
  return a.components == b.components;
}

int compare(const Sequent& a, const Sequent& b) {
  auto cmp_list = [](const std::vector<Formula>& x, const std::vector<Formula>& y) {
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (int c = Formula::compare(x[i], y[i])) return c;
    return 0;
  };
  if (int c = cmp_list(a.antecedent, b.antecedent)) return c;
  return cmp_list(a.succedent, b.succedent);
}

int compare(const Hypersequent& a, const Hypersequent& b) {
  if (a.components.size() != b.components.size())
    return a.components.size() < b.components.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.components.size(); ++i)
    if (int c = compare(a.components[i], b.components[i])) return c;
  return 0;
}

// Free variables --------------------------------------------------------------

namespace {

void collect_term(const Term& t, std::vector<Variable>& out) {
  if (t.is_var()) {
    out.push_back(t.as_var());
  } else {
    for (const auto& a : t.args()) collect_term(a, out);
  }
}

// Depth-first left-to-right walk collecting free occurrences; `bound` holds
// the local names currently in scope.
void collect_formula(const Formula& f, std::vector<std::string>& bound,
                     std::vector<Variable>& out) {
  switch (f.kind()) {
    case FKind::bottom:
      return;
    case FKind::atom: {
      std::vector<Variable> occ;
      for (const auto& a : f.args()) collect_term(a, occ);
      for (auto& v : occ) {
        if (v.scope == Scope::local &&
            std::find(bound.rbegin(), bound.rend(), v.name) != bound.rend())
          continue;
        out.push_back(std::move(v));
      }
      return;
    }
    case FKind::conj:
    case FKind::disj:
    case FKind::impl:
      collect_formula(f.lhs(), bound, out);
      collect_formula(f.rhs(), bound, out);
      return;
    case FKind::forall:
    case FKind::exists:
      bound.push_back(f.bound_var());
      collect_formula(f.body(), bound, out);
      bound.pop_back();
      return;
  }
}

std::vector<Variable> occurrences(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<Variable> out;
  collect_formula(f, bound, out);
  return out;
}

}  // namespace

std::set<Variable> free_vars(const Term& t) {
  std::vector<Variable> occ;
  collect_term(t, occ);
  return {occ.begin(), occ.end()};
}

std::set<Variable> free_vars(const Formula& f) {
  auto occ = occurrences(f);
  return {occ.begin(), occ.end()};
}

std::set<Variable> free_vars(const Sequent& s) {
  std::set<Variable> out;
  for (const auto& f : s.antecedent) out.merge(free_vars(f));
  for (const auto& f : s.succedent) out.merge(free_vars(f));
  return out;
}

std::set<Variable> free_vars(const Hypersequent& h) {
  std::set<Variable> out;
  for (const auto& s : h.components) out.merge(free_vars(s));
  return out;
}

std::vector<Variable> free_vars_ordered(const Sequent& s) {
  std::vector<Variable> out;
  auto push = [&](const Formula& f) {
    for (auto& v : occurrences(f))
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& f : s.antecedent) push(f);
  for (const auto& f : s.succedent) push(f);
  return out;
}

std::vector<Variable> free_vars_ordered(const Hypersequent& h) {
  std::vector<Variable> out;
  for (const auto& s : h.components)
    for (auto& v : free_vars_ordered(s))
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

bool occurs_free(const Variable& v, const Formula& f) { return free_vars(f).count(v) > 0; }
bool occurs_free(const Variable& v, const Sequent& s) { return free_vars(s).count(v) > 0; }
bool occurs_free(const Variable& v, const Hypersequent& h) { return free_vars(h).count(v) > 0; }

// Substitution ----------------------------------------------------------------

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  for (int i = 1;; ++i) {
    std::string cand = base + std::to_string(i);
    if (!avoid.count(cand)) return cand;
  }
}

Term substitute(const Term& in, const Variable& v, const Term& t) {
  if (in.is_var()) return in.as_var() == v ? t : in;
  std::vector<Term> args;
  args.reserve(in.args().size());
  for (const auto& a : in.args()) args.push_back(substitute(a, v, t));
  return Term::app(in.symbol(), std::move(args));
}

namespace {

std::set<std::string> local_names(const std::set<Variable>& vs) {
  std::set<std::string> out;
  for (const auto& v : vs)
    if (v.scope == Scope::local) out.insert(v.name);
  return out;
}

Formula subst_impl(const Formula& in, const Variable& v, const Term& t,
                   const std::set<Variable>& t_free) {
  switch (in.kind()) {
    case FKind::bottom:
      return in;
    case FKind::atom: {
      std::vector<Term> args;
      args.reserve(in.args().size());
      for (const auto& a : in.args()) args.push_back(substitute(a, v, t));
      return Formula::atom(in.predicate(), std::move(args));
    }
    case FKind::conj:
      return Formula::conj(subst_impl(in.lhs(), v, t, t_free), subst_impl(in.rhs(), v, t, t_free));
    case FKind::disj:
      return Formula::disj(subst_impl(in.lhs(), v, t, t_free), subst_impl(in.rhs(), v, t, t_free));
    case FKind::impl:
      return Formula::impl(subst_impl(in.lhs(), v, t, t_free), subst_impl(in.rhs(), v, t, t_free));
    case FKind::forall:
    case FKind::exists: {
      const std::string& y = in.bound_var();
      if (v.scope == Scope::local && v.name == y) return in;  // shadowed
      if (!occurs_free(v, in)) return in;                     // vacuous below here
      Formula body = in.body();
      std::string bound = y;
      if (t_free.count(Variable{y, Scope::local})) {
        // `y` would capture a variable of t: rename the binder first.
        std::set<std::string> avoid = local_names(t_free);
        avoid.merge(local_names(free_vars(body)));
        avoid.insert(v.name);
        bound = fresh_name(y, avoid);
        body = subst_impl(body, Variable{y, Scope::local}, Term::var(bound), /*t_free=*/{});
      }
      body = subst_impl(body, v, t, t_free);
      return in.kind() == FKind::forall ? Formula::forall(bound, std::move(body))
                                        : Formula::exists(bound, std::move(body));
    }
  }
  return in;
}

}  // namespace

Formula substitute(const Formula& in, const Variable& v, const Term& t) {
  return subst_impl(in, v, t, free_vars(t));
}

Sequent substitute(const Sequent& in, const Variable& v, const Term& t) {
  Sequent out;
  out.antecedent.reserve(in.antecedent.size());
  out.succedent.reserve(in.succedent.size());
  for (const auto& f : in.antecedent) out.antecedent.push_back(substitute(f, v, t));
  for (const auto& f : in.succedent) out.succedent.push_back(substitute(f, v, t));
  return out;
}

// Alpha equivalence -------------------------------------------------------------

namespace {

bool alpha_term(const Term& a, const Term& b, const std::map<std::string, int>& la,
                const std::map<std::string, int>& lb) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    const Variable& va = a.as_var();
    const Variable& vb = b.as_var();
    if (va.scope != vb.scope) return false;
    if (va.scope == Scope::global) return va.name == vb.name;
    auto ia = la.find(va.name);
    auto ib = lb.find(vb.name);
    if ((ia != la.end()) != (ib != lb.end())) return false;
    if (ia != la.end()) return ia->second == ib->second;  // both bound: same level
    return va.name == vb.name;                            // both free
  }
  if (a.symbol() != b.symbol() || a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], la, lb)) return false;
  return true;
}

bool alpha_impl(const Formula& a, const Formula& b, std::map<std::string, int>& la,
                std::map<std::string, int>& lb, int depth) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FKind::bottom:
      return true;
    case FKind::atom: {
      if (a.predicate() != b.predicate() || a.args().size() != b.args().size()) return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_term(a.args()[i], b.args()[i], la, lb)) return false;
      return true;
    }
    case FKind::conj:
    case FKind::disj:
    case FKind::impl:
      return alpha_impl(a.lhs(), b.lhs(), la, lb, depth) &&
             alpha_impl(a.rhs(), b.rhs(), la, lb, depth);
    case FKind::forall:
    case FKind::exists: {
      auto olda = la.find(a.bound_var()) != la.end() ? std::optional<int>(la[a.bound_var()])
                                                     : std::nullopt;
      auto oldb = lb.find(b.bound_var()) != lb.end() ? std::optional<int>(lb[b.bound_var()])
                                                     : std::nullopt;
      la[a.bound_var()] = depth;
      lb[b.bound_var()] = depth;
      bool ok = alpha_impl(a.body(), b.body(), la, lb, depth + 1);
      if (olda) la[a.bound_var()] = *olda; else la.erase(a.bound_var());
      if (oldb) lb[b.bound_var()] = *oldb; else lb.erase(b.bound_var());
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  std::map<std::string, int> la, lb;
  return alpha_impl(a, b, la, lb, 0);
}

bool alpha_equal(const Sequent& a, const Sequent& b) {
  if (a.antecedent.size() != b.antecedent.size() || a.succedent.size() != b.succedent.size())
    return false;
  for (std::size_t i = 0; i < a.antecedent.size(); ++i)
    if (!alpha_equal(a.antecedent[i], b.antecedent[i])) return false;
  for (std::size_t i = 0; i < a.succedent.size(); ++i)
    if (!alpha_equal(a.succedent[i], b.succedent[i])) return false;
  return true;
}

bool alpha_equal(const Hypersequent& a, const Hypersequent& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i)
    if (!alpha_equal(a.components[i], b.components[i])) return false;
  return true;
}

// Printing ----------------------------------------------------------------------

std::string to_string(const Term& t) {
  if (t.is_var())
    return t.as_var().scope == Scope::global ? t.as_var().name + "!" : t.as_var().name;
  std::string out = t.symbol() + "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    out += to_string(t.args()[i]);
  }
  return out + ")";
}

namespace {

// Precedence: quantifier scope is weakest, then -> (right-assoc),
// then \/ and & (left-assoc). Higher value binds tighter.
int prec(FKind k) {
  switch (k) {
    case FKind::forall:
    case FKind::exists:
      return 0;
    case FKind::impl:
      return 1;
    case FKind::disj:
      return 2;
    case FKind::conj:
      return 3;
    default:
      return 4;
  }
}

void print_formula(const Formula& f, int min_prec, std::string& out) {
  int p = prec(f.kind());
  bool paren = p < min_prec;
  if (paren) out += "(";
  switch (f.kind()) {
    case FKind::bottom:
      out += "bot";
      break;
    case FKind::atom:
      out += f.predicate();
      if (!f.args().empty()) {
        out += "(";
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          out += to_string(f.args()[i]);
        }
        out += ")";
      }
      break;
    case FKind::conj:
      print_formula(f.lhs(), 3, out);
      out += " & ";
      print_formula(f.rhs(), 4, out);
      break;
    case FKind::disj:
      print_formula(f.lhs(), 2, out);
      out += " \\/ ";
      print_formula(f.rhs(), 3, out);
      break;
    case FKind::impl:
      print_formula(f.lhs(), 2, out);
      out += " -> ";
      print_formula(f.rhs(), 1, out);
      break;
    case FKind::forall:
    case FKind::exists:
      out += f.kind() == FKind::forall ? "forall " : "exists ";
      out += f.bound_var();
      out += ". ";
      print_formula(f.body(), 0, out);
      break;
  }
  if (paren) out += ")";
}

}  // namespace

std::string to_string(const Formula& f) {
  std::string out;
  print_formula(f, 0, out);
  return out;
}

std::string to_string(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.antecedent[i]);
  }
  out += s.antecedent.empty() ? "|-" : " |-";
  for (std::size_t i = 0; i < s.succedent.size(); ++i) {
    out += i ? ", " : " ";
    out += to_string(s.succedent[i]);
  }
  return out;
}

std::string to_string(const Hypersequent& h) {
  std::string out;
  for (std::size_t i = 0; i < h.components.size(); ++i) {
    if (i) out += " || ";
    out += to_string(h.components[i]);
  }
  return out;
}

std::size_t symbol_count(const Term& t) {
  std::size_t n = 1;
  if (!t.is_var())
    for (const auto& a : t.args()) n += symbol_count(a);
  return n;
}

std::size_t symbol_count(const Formula& f) {
  switch (f.kind()) {
    case FKind::bottom:
      return 1;
    case FKind::atom: {
      std::size_t n = 1;
      for (const auto& a : f.args()) n += symbol_count(a);
      return n;
    }
    case FKind::conj:
    case FKind::disj:
    case FKind::impl:
      return 1 + symbol_count(f.lhs()) + symbol_count(f.rhs());
    case FKind::forall:
    case FKind::exists:
      return 1 + symbol_count(f.body());
  }
  return 0;
}

}  // namespace hyperseq
