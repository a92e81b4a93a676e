#pragma once

// Independent reference computations used to cross-check the library.

#include <cstdint>
#include <vector>

#include "crosscap/curve_system.hpp"
#include "crosscap/matrix.hpp"
#include "crosscap/ribbon_graph.hpp"

namespace oracle {

// Flag-map model of a signed ribbon graph: two flags per half-edge, a
// corner involution and an edge involution. Faces are orbits of the group
// they generate; the surface is orientable iff the flag graph is bipartite.
struct FlagCounts {
  int faces = 0;
  int vertices = 0;
  int edges = 0;
  bool orientable = true;
  std::int64_t euler() const { return vertices - edges + faces; }
};
FlagCounts flag_counts(const crosscap::SignedRibbonGraph& g);

// Largest eigenvalue modulus by a dense floating-point eigensolver.
double spectral_radius(const crosscap::IntMatrix& m);

// Face lengths sorted ascending, from the flag model.
std::vector<int> face_lengths(const crosscap::SignedRibbonGraph& g);

// Geometric intersection matrix of the curves, retraced from their start
// half-edges by going straight through every 4-valent vertex.
std::vector<std::vector<int>> intersection_counts(const crosscap::CurveSystem& s);

}  // namespace oracle
