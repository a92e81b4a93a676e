#pragma once

#include <string>
#include <variant>
#include <vector>

#include "crosscap/curve_system.hpp"
#include "crosscap/matrix.hpp"

namespace crosscap {

struct Twist {
  std::string curve;
  int power = 1;
  friend bool operator==(const Twist&, const Twist&) = default;
};

struct Rotate {
  std::string symmetry;
  int exponent = 1;
  friend bool operator==(const Rotate&, const Rotate&) = default;
};

using Move = std::variant<Twist, Rotate>;

// Moves compose like functions: the last move is applied first.
struct PennerWord {
  std::vector<Move> moves;
  std::vector<std::string> basis;
  friend bool operator==(const PennerWord&, const PennerWord&) = default;
};

PennerWord concatenate(const PennerWord& u, const PennerWord& v);

// Columns are images of basis measures.
struct TransitionMatrix {
  IntMatrix entries;
  std::vector<std::string> basis;
  PennerWord provenance;
};

TransitionMatrix twist_matrix(const CurveSystem& s, const std::string& c, int power = 1);
TransitionMatrix rotation_matrix(const CurveSystem& s, const std::vector<int>& perm);
TransitionMatrix word_matrix(const CurveSystem& s, const PennerWord& w);

struct PennerReport {
  bool filling = false;
  bool inconsistent = false;
  bool all_twisted = false;
  bool signs_consistent = false;
  int unrolled_power = 1;  // power of the word on which condition 3 was read
  std::vector<std::string> diagnostics;
  bool passed() const { return filling && inconsistent && all_twisted && signs_consistent; }
};

PennerReport validate_penner_word(const CurveSystem& s, const PennerWord& w);

// Order of a permutation given as an image list.
long permutation_order(const std::vector<int>& perm);

}  // namespace crosscap
