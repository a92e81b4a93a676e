#pragma once

// Small hand-checked surfaces and seeded random inputs shared by the suites.

#include <cstdint>
#include <random>
#include <vector>

#include "crosscap/curve_system.hpp"
#include "crosscap/matrix.hpp"
#include "crosscap/ribbon_graph.hpp"

namespace fixtures {

// One 4-valent vertex, two untwisted loops: a torus with curves a and b
// meeting once. a is marked +, b is marked -.
crosscap::CurveSystem torus();

// Same vertex with the b loop twisted: a Klein bottle where a is two-sided
// and b one-sided.
crosscap::CurveSystem klein_bottle();

// One 2-valent vertex with a single twisted loop: the projective plane.
crosscap::SignedRibbonGraph projective_plane();

// Two disjoint untwisted loops on separate vertices.
crosscap::SignedRibbonGraph two_spheres();

// Connected signed ribbon graph with 1..max_vertices vertices of valence
// 1..4 and random signs.
crosscap::SignedRibbonGraph random_graph(std::mt19937_64& rng, int max_vertices);

// Random permutation of 0..n-1.
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

// Random non-negative matrix with entries in 0..max_entry, each entry
// nonzero with probability `density`. A cycle through all indices is forced
// positive so the matrix is irreducible.
crosscap::IntMatrix random_irreducible(std::mt19937_64& rng, int n, int max_entry, double density);

}  // namespace fixtures
