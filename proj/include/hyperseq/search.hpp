#ifndef HYPERSEQ_SEARCH_HPP
#define HYPERSEQ_SEARCH_HPP

#include <optional>

#include "hyperseq/proof.hpp"

namespace hyperseq {

struct SearchBudget {
  int max_depth = 10;
  int max_width = 3;          // hypersequent components
  int max_contractions = 2;   // ec/icL/icR uses per branch
  std::vector<Term> witnesses;       // pool for forallL/existsR
  std::vector<Formula> cut_formulas; // empty = cut-free search
};

// Bounded root-first search. On success the result checks under cfg and its
// conclusion alpha-equals the goal; on nullopt no proof exists within the
// budget (no claim beyond it). Deterministic: fixed rule ordering,
// leftmost-first, with a loop check on sorted hypersequents along each branch.
std::optional<ProofTree> prove(const CalculusConfig& cfg, const Hypersequent& goal,
                               const SearchBudget& budget);

}  // namespace hyperseq

#endif
