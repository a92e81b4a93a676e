#pragma once

#include <optional>
#include <string>

#include "crosscap/curve_system.hpp"
#include "crosscap/penner.hpp"

namespace crosscap {

// Line-oriented, versioned text form of a curve system and an optional
// word. Canonical output is what serialize() writes; parsing canonical text
// and serializing again reproduces it byte for byte.
//
//   crosscap-curves 1
//   vertex <id> <half-edges in rotation order>
//   edge <half-edge> <half-edge> <+|->
//   mark <half-edge> <side +|-> <count> <closed|open>
//   boundary <half-edge> <side +|->
//   curve <id> <two-sided|one-sided> <marking +|-> <twist sign +|-> <start>
//   symmetry <name> <image of each half-edge>
//   word
//   basis <curve ids>
//   twist <curve> <power>
//   rotate <symmetry> <exponent>
//   end
struct CurveDocument {
  CurveSystem system;
  std::optional<PennerWord> word;
};

inline constexpr int kFormatVersion = 1;

CurveDocument parse_curve_document(const std::string& text);
std::string serialize(const CurveSystem& s, const std::optional<PennerWord>& word = std::nullopt);
// Graph-only portion (vertices, edges, marks, boundary) without the header.
std::string serialize_graph_body(const SignedRibbonGraph& g);
// Parses vertex, edge, mark and boundary lines only.
SignedRibbonGraph parse_graph_body(const std::string& text);

}  // namespace crosscap
