#ifndef HYPERSEQ_SEMANTICS_HPP
#define HYPERSEQ_SEMANTICS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperseq/syntax.hpp"

namespace hyperseq {

struct GroundAtom {
  std::string pred;
  std::vector<int> args;
  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

// Finite Kripke model: a poset of worlds with monotone domains over a global
// individual pool, a persistent atom table, and world-independent function
// interpretations (stability under <= by construction). Supports at most 32
// worlds; the enumerator stays far below that.
struct KripkeModel {
  int worlds = 0;
  std::vector<std::uint32_t> up;          // up[w] = bitmask of v with w <= v (w included)
  std::vector<std::vector<int>> domain;   // per world, sorted individuals
  std::map<GroundAtom, std::uint32_t> atoms;  // bitmask of worlds forcing the atom
  std::map<std::string, std::map<std::vector<int>, int>> functions;

  bool leq(int w, int v) const { return (up[w] >> v) & 1u; }
  bool in_domain(int w, int ind) const;

  // Empty when the structural invariants hold, else a description of the
  // first violation (order axioms, domain monotonicity, atom persistence,
  // function totality into the domain).
  std::optional<std::string> validate() const;

  std::string dump() const;
};

enum class ModelClass { all_posets, linear, constant_domain, linear_constant_domain };

std::string_view to_string(ModelClass c);
std::optional<ModelClass> model_class_from_name(std::string_view name);
bool in_class(const KripkeModel& m, ModelClass c);

enum class SemanticsErrorKind {
  env_incomplete,
  individual_out_of_domain,
  uninterpreted_symbol,
  bounds_too_large,
};

struct SemanticsError : std::runtime_error {
  SemanticsErrorKind kind;
  SemanticsError(SemanticsErrorKind k, const std::string& what)
      : std::runtime_error(what), kind(k) {}
};

using Env = std::map<Variable, int>;

// Standard intuitionistic forcing. Preconditions (throwing SemanticsError):
// env covers the free variables of f with individuals in domain(w), and every
// function symbol of f is interpreted.
bool forces(const KripkeModel& m, int w, const Env& env, const Formula& f);

// f closed; true iff forced at every world.
bool valid_in(const KripkeModel& m, const Formula& f);

// Predicate symbol -> arity. Throws when f contains a function symbol (they
// are supported in forcing but excluded from enumeration).
std::map<std::string, std::size_t> formula_signature(const Formula& f);

struct SearchBounds {
  int max_worlds = 3;
  int max_domain = 0;  // total individual pool; 0 = propositional models only
  int max_atoms = 2;   // distinct predicate symbols
};

// Hard caps keeping exhaustive enumeration at desk scale.
constexpr int kMaxWorldsCap = 4;
constexpr int kMaxDomainCap = 3;
constexpr int kMaxAtomsCap = 3;

// Enumerates every model of the class within bounds over the given signature,
// up to isomorphism of the world order, in a fixed deterministic order.
// The visitor returns false to stop early.
void enumerate_models(ModelClass cls, const SearchBounds& b,
                      const std::map<std::string, std::size_t>& signature,
                      const std::function<bool(const KripkeModel&)>& visit);

// First enumerated in-class model refuting f, or nullopt when every enumerated
// model validates f. Throws SemanticsError{bounds_too_large} when the bounds
// exceed the caps or the formula does not fit them.
std::optional<KripkeModel> countermodel_search(const Formula& f, ModelClass cls,
                                               const SearchBounds& b);

}  // namespace hyperseq

#endif
