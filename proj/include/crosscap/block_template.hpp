#pragma once

#include <string>
#include <utility>
#include <vector>

namespace crosscap {

// A curve path entry: the curve passes through block vertex `vertex` lying in
// the block offset (di, dj) from the curve's own block, then follows an edge
// of sign `sign` to the next entry.
struct TemplateEntry {
  int vertex = 0;
  int di = 0;
  int dj = 0;
  int sign = 1;
  friend bool operator==(const TemplateEntry&, const TemplateEntry&) = default;
};

struct TemplateCurve {
  std::string id;
  int marking = 1;
  int twist_sign = 1;
  std::vector<TemplateEntry> path;
  friend bool operator==(const TemplateCurve&, const TemplateCurve&) = default;
};

// Crossing of curve `own` with the translate of `other` by `generator`.
struct CrossCut {
  std::string generator;
  std::string own;
  std::string other;
  friend bool operator==(const CrossCut&, const CrossCut&) = default;
};

// A marked point placed in the face through dart (4 * vertex + slot, side)
// of the block in row 0 of every column.
struct TemplateMark {
  std::string name;
  int vertex = 0;
  int slot = 0;
  int side = 1;
  friend bool operator==(const TemplateMark&, const TemplateMark&) = default;
};

// One fundamental domain of the doubly periodic curve system. Slots at a
// block vertex are (first in, second in, first out, second out); translating
// by rho1 shifts the column index, rho2 the row index.
struct BlockTemplate {
  // Curves passing through each block vertex, first then second.
  std::vector<std::pair<std::string, std::string>> vertices;
  std::vector<TemplateCurve> curves;
  std::vector<std::string> red;    // twisted by the first factor
  std::vector<std::string> blue;   // twisted by the second factor
  std::string phi_red;             // twisted third, after the red sets
  std::string phi_blue;            // twisted third, last
  std::vector<CrossCut> crosscuts;
  std::vector<std::pair<std::string, std::string>> within_family;
  std::vector<TemplateMark> marks;
  std::vector<std::string> auxiliary_meets;  // curves the auxiliary curve crosses
  friend bool operator==(const BlockTemplate&, const BlockTemplate&) = default;

  int curve_index(const std::string& id) const;
  bool is_alpha(const std::string& id) const;
  bool is_beta(const std::string& id) const;
};

BlockTemplate parse_block_template(const std::string& text);
std::string serialize_block_template(const BlockTemplate& t);

// Checks the block-local constraints: curve bookkeeping, family
// disjointness, exactly the declared cross-block crossings, and the
// auxiliary curve's disjointness. Throws ValidationError naming the failure.
void validate_block_template(const BlockTemplate& t);

// Shipped template, compiled in.
const std::string& default_template_text();
const BlockTemplate& default_template();
// Reads the path in CROSSCAP_TEMPLATE when set, otherwise the shipped one.
BlockTemplate load_template(const std::string& path = "");

}  // namespace crosscap
