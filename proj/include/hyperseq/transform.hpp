#ifndef HYPERSEQ_TRANSFORM_HPP
#define HYPERSEQ_TRANSFORM_HPP

#include <variant>

#include "hyperseq/proof.hpp"
#include "hyperseq/syntax.hpp"

namespace hyperseq {

// shared: one universal closure over the whole disjunction of components;
// local: disjunction of per-component universal closures. Closed hypersequents
// translate identically either way.
enum class TranslationMode { shared, local };

// Right-nested /\ of the antecedent implies right-nested \/ of the succedent.
// Empty antecedent: the succedent disjunction alone. Empty succedent: bot.
Formula sequent_formula(const Sequent& s);

struct TranslationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Throws TranslationError when a global variable is present; their formula
// reading is deliberately left open. Quantification order is first free
// occurrence, left to right.
Formula hyperseq_formula(const Hypersequent& h, TranslationMode mode);

// Component extraction from communication-free proofs: a proof accepted by
// CD-free (∀HLJ' + ∀-R_ms + ∃-L_m) yields a plain sequent proof (LJ', width
// cap 1) of one root component, with steps/formulas/symbols non-increasing.
struct Extraction {
  int index = 0;    // which root component the output proves
  ProofTree proof;  // single-component proof throughout
};

struct ExtractError {
  std::string detail;
  std::optional<CheckError> check_error;  // when the CD-free check rejected
};

std::variant<Extraction, ExtractError> extract_component_proof(const ProofTree& p);

}  // namespace hyperseq

#endif
