#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

namespace fixtures {

using crosscap::CurveSystem;
using crosscap::EdgeRecord;
using crosscap::MarkedCurve;
using crosscap::SignedRibbonGraph;

CurveSystem torus() {
  SignedRibbonGraph g({{0, 1, 2, 3}}, {{2, 0, 1}, {3, 1, 1}});
  return CurveSystem(g, {{"a", true, 1, 1}, {"b", true, -1, -1}}, {2, 3});
}

CurveSystem klein_bottle() {
  SignedRibbonGraph g({{0, 1, 2, 3}}, {{2, 0, 1}, {3, 1, -1}});
  return CurveSystem(g, {{"a", true, 1, 1}, {"b", false, 1, 1}}, {2, 3});
}

SignedRibbonGraph projective_plane() { return SignedRibbonGraph({{0, 1}}, {{0, 1, -1}}); }

SignedRibbonGraph two_spheres() { return SignedRibbonGraph({{0, 1}, {2, 3}}, {{0, 1, 1}, {2, 3, 1}}); }

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

SignedRibbonGraph random_graph(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> vcount(1, max_vertices), val(1, 4), coin(0, 1);
  for (;;) {
    int V = vcount(rng);
    std::vector<int> valence(V);
    int H = 0;
    for (auto& d : valence) H += d = val(rng);
    if (H % 2) {
      ++valence[0];
      ++H;
    }
    auto order = random_permutation(rng, H);
    std::vector<std::vector<int>> rot(V);
    int next = 0;
    for (int v = 0; v < V; ++v)
      for (int i = 0; i < valence[v]; ++i) rot[v].push_back(order[next++]);
    auto pairing = random_permutation(rng, H);
    std::vector<EdgeRecord> edges;
    for (int i = 0; i + 1 < H; i += 2) edges.push_back({pairing[i], pairing[i + 1], coin(rng) ? 1 : -1});
    SignedRibbonGraph g(rot, edges);
    if (crosscap::is_connected(g)) return g;
  }
}

crosscap::IntMatrix random_irreducible(std::mt19937_64& rng, int n, int max_entry, double density) {
  std::uniform_real_distribution<double> u(0, 1);
  std::uniform_int_distribution<int> entry(1, max_entry);
  crosscap::IntMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (u(rng) < density) m(r, c) = entry(rng);
  auto cycle = random_permutation(rng, n);
  for (int i = 0; i < n; ++i) m(cycle[(i + 1) % n], cycle[i]) = entry(rng);
  return m;
}

}  // namespace fixtures
