#ifndef HYPERSEQ_PROOF_JSON_HPP
#define HYPERSEQ_PROOF_JSON_HPP

#include <stdexcept>
#include <string>

#include "hyperseq/proof.hpp"

namespace hyperseq {

struct ProofFormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A proof file carries the calculus and the tree. The calculus is either a
// preset name or an explicit description:
//   { "preset": "GD-com", "proof": { ... } }
//   { "calculus": { "base": "lj", "quantifiers": true, "enable": ["com"],
//                   "width_cap": 1 }, "proof": { ... } }
// Each node is { "rule": ..., "conclusion": ..., "params": {...}, "premises": [...] }
// with conclusions in the textual grammar.
struct ProofBundle {
  std::string preset;  // empty when the file used an explicit calculus
  CalculusConfig config;
  ProofTree proof;
};

std::string bundle_to_json(const ProofBundle& b);
ProofBundle bundle_from_json(const std::string& text);

ProofBundle load_proof_file(const std::string& path);
void save_proof_file(const std::string& path, const ProofBundle& b);

}  // namespace hyperseq

#endif
