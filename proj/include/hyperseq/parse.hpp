#ifndef HYPERSEQ_PARSE_HPP
#define HYPERSEQ_PARSE_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperseq/syntax.hpp"

namespace hyperseq {

struct ParseError : std::runtime_error {
  std::size_t position;  // byte offset into the input
  ParseError(std::size_t pos, const std::string& what)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Tracks predicate/function arities so one invocation uses each symbol with a
// single consistent arity. Shared across every parse of one run.
class SignatureTable {
 public:
  void note_predicate(const std::string& name, std::size_t arity, std::size_t pos);
  void note_function(const std::string& name, std::size_t arity, std::size_t pos);
  const std::map<std::string, std::size_t>& predicates() const { return preds_; }
  const std::map<std::string, std::size_t>& functions() const { return funcs_; }

 private:
  std::map<std::string, std::size_t> preds_, funcs_;
};

// Grammar (tokens are bit-exact):
//   term    := IDENT '!' | IDENT '(' term, ... ')' | IDENT
//   formula := 'bot' | IDENT ['(' term, ... ')'] | '(' formula ')'
//            | formula '&' formula | formula '\/' formula | formula '->' formula
//            | ('forall'|'exists') IDENT '.' formula
//   sequent := [formula, ...] '|-' [formula, ...]
//   hyperseq:= sequent ('||' sequent)*
// Quantifiers scope as far right as possible; '->' is right-associative and
// binds weaker than '\/', which binds weaker than '&'. A bare identifier in
// term position is a local variable; 'x!' is global; constants are written
// with parentheses, e.g. 'c()'.
Term parse_term(std::string_view text, SignatureTable* sig = nullptr);
Formula parse_formula(std::string_view text, SignatureTable* sig = nullptr);
Sequent parse_sequent(std::string_view text, SignatureTable* sig = nullptr);
Hypersequent parse_hypersequent(std::string_view text, SignatureTable* sig = nullptr);

}  // namespace hyperseq

#endif
