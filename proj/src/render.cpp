#include <algorithm>
#include <string>
#include <vector>

#include "hyperseq/proof.hpp"

namespace hyperseq {

namespace {

// Display width in codepoints; the rule labels carry multi-byte glyphs.
std::size_t cp_len(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

std::string spaces(std::size_t n) { return std::string(n, ' '); }

struct Block {
  std::vector<std::string> lines;  // top to bottom, each padded to `width`
  std::size_t width = 0;
};

Block side_by_side(const std::vector<Block>& blocks) {
  Block out;
  if (blocks.empty()) return out;
  std::size_t height = 0;
  for (const auto& b : blocks) height = std::max(height, b.lines.size());
  for (std::size_t row = 0; row < height; ++row) {
    std::string line;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      if (i) line += "   ";
      // Bottom-align each premise block on the rule bar.
      std::size_t offset = height - blocks[i].lines.size();
      if (row < offset)
        line += spaces(blocks[i].width);
      else
        line += blocks[i].lines[row - offset];
    }
    out.lines.push_back(std::move(line));
  }
  out.width = cp_len(out.lines.back());
  return out;
}

std::string centered(const std::string& s, std::size_t width) {
  std::size_t w = cp_len(s);
  if (w >= width) return s;
  std::size_t left = (width - w) / 2;
  return spaces(left) + s + spaces(width - w - left);
}

Block render_block(const ProofTree& p) {
  std::string concl = to_string(p.conclusion);
  std::string label = std::string(rule_label(p.rule.rule));

  std::vector<Block> kids;
  kids.reserve(p.subproofs.size());
  for (const auto& sub : p.subproofs) kids.push_back(render_block(sub));
  Block top = side_by_side(kids);

  std::size_t barw = std::max(cp_len(concl), top.width);
  std::size_t width = std::max(barw + 1 + cp_len(label), top.width);

  Block out;
  out.width = width;
  for (const auto& line : top.lines) out.lines.push_back(centered(line, barw));
  out.lines.push_back(std::string(barw, '-') + " " + label);
  out.lines.push_back(centered(concl, barw));
  return out;
}

}  // namespace

std::string render_proof(const ProofTree& p) {
  Block b = render_block(p);
  std::string out;
  for (auto& line : b.lines) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace hyperseq
