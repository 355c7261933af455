#ifndef HYPERSEQ_SYNTAX_HPP
#define HYPERSEQ_SYNTAX_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hyperseq {

// Local variables are the ordinary bindable ones; global variables only ever
// occur free and are never captured by a quantifier.
enum class Scope { local, global };

struct Variable {
  std::string name;
  Scope scope = Scope::local;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

// First-order terms: a variable or a function application (arity 0 = constant).
class Term {
 public:
  static Term var(std::string name, Scope scope = Scope::local);
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const;
  const Variable& as_var() const;       // pre: is_var()
  const std::string& symbol() const;    // pre: !is_var()
  const std::vector<Term>& args() const;

  friend bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Term& a, const Term& b) { return compare(a, b) != 0; }
  static int compare(const Term& a, const Term& b);

 private:
  Term() = default;
  struct Node;
  std::shared_ptr<const Node> node_;
};

enum class FKind { bottom, atom, conj, disj, impl, forall, exists };

// Immutable formula tree. Negation and truth are not constructors:
// ~p is Imp(p, bottom), top is Imp(bottom, bottom).
class Formula {
 public:
  static Formula bottom();
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula impl(Formula lhs, Formula rhs);
  static Formula forall(std::string var, Formula body);  // binds the local variable `var`
  static Formula exists(std::string var, Formula body);

  static Formula negation(Formula f) { return impl(std::move(f), bottom()); }
  static Formula top() { return impl(bottom(), bottom()); }

  FKind kind() const;
  const std::string& predicate() const;  // atom
  const std::vector<Term>& args() const; // atom
  const Formula& lhs() const;            // conj/disj/impl
  const Formula& rhs() const;
  const std::string& bound_var() const;  // forall/exists
  const Formula& body() const;

  friend bool operator==(const Formula& a, const Formula& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Formula& a, const Formula& b) { return compare(a, b) != 0; }
  static int compare(const Formula& a, const Formula& b);  // syntactic (bound names included)

 private:
  Formula() = default;
  struct Node;
  static Formula make(Node&& n);
  std::shared_ptr<const Node> node_;
};

struct Sequent {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;

  friend bool operator==(const Sequent&, const Sequent&);
};

// Nonempty ordered sequence of components; external exchange is a rule,
// not a representation choice.
struct Hypersequent {
  std::vector<Sequent> components;

  friend bool operator==(const Hypersequent&, const Hypersequent&);
};

// Free variables -----------------------------------------------------------

std::set<Variable> free_vars(const Term& t);
std::set<Variable> free_vars(const Formula& f);
std::set<Variable> free_vars(const Sequent& s);
std::set<Variable> free_vars(const Hypersequent& h);

// Free variables in order of first occurrence, scanning antecedent before
// succedent and each formula depth-first left to right.
std::vector<Variable> free_vars_ordered(const Sequent& s);
std::vector<Variable> free_vars_ordered(const Hypersequent& h);

bool occurs_free(const Variable& v, const Formula& f);
bool occurs_free(const Variable& v, const Sequent& s);
bool occurs_free(const Variable& v, const Hypersequent& h);

// Substitution --------------------------------------------------------------

// Capture-avoiding [t/v]: binders whose variable would capture a free variable
// of t are renamed with fresh_name.
Term substitute(const Term& in, const Variable& v, const Term& t);
Formula substitute(const Formula& in, const Variable& v, const Term& t);
Sequent substitute(const Sequent& in, const Variable& v, const Term& t);

// First of base1, base2, ... not contained in `avoid`.
std::string fresh_name(const std::string& base, const std::set<std::string>& avoid);

// Alpha equivalence ---------------------------------------------------------

bool alpha_equal(const Formula& a, const Formula& b);
bool alpha_equal(const Sequent& a, const Sequent& b);      // pointwise, order kept
bool alpha_equal(const Hypersequent& a, const Hypersequent& b);

// Printing (the textual grammar; parseable back by parse.hpp) ---------------

std::string to_string(const Term& t);
std::string to_string(const Formula& f);
std::string to_string(const Sequent& s);
std::string to_string(const Hypersequent& h);

// Syntax-tree node count (formula connectives/atoms plus term nodes).
std::size_t symbol_count(const Term& t);
std::size_t symbol_count(const Formula& f);

int compare(const Sequent& a, const Sequent& b);
int compare(const Hypersequent& a, const Hypersequent& b);

}  // namespace hyperseq

#endif
