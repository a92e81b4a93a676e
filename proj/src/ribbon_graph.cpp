#include "crosscap/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "crosscap/errors.hpp"

namespace crosscap {

SignedRibbonGraph::SignedRibbonGraph(std::vector<std::vector<int>> rotations,
                                     std::vector<EdgeRecord> edges, std::vector<FaceMark> marks,
                                     std::vector<Dart> boundary)
    : rotations_(std::move(rotations)),
      edges_(std::move(edges)),
      marks_(std::move(marks)),
      boundary_(std::move(boundary)) {
  int h_count = 0;
  for (const auto& r : rotations_) h_count += static_cast<int>(r.size());
  vertex_.assign(h_count, -1);
  slot_.assign(h_count, -1);
  partner_.assign(h_count, -1);
  sign_.assign(h_count, 0);
  edge_.assign(h_count, -1);
  for (int v = 0; v < vertex_count(); ++v) {
    if (rotations_[v].empty()) throw StructuralError("vertex " + std::to_string(v) + " has no half-edges");
    for (int s = 0; s < valence(v); ++s) {
      int h = rotations_[v][s];
      if (h < 0 || h >= h_count)
        throw StructuralError("half-edge " + std::to_string(h) + " out of range at vertex " + std::to_string(v));
      if (vertex_[h] != -1) throw StructuralError("half-edge " + std::to_string(h) + " appears in two rotations");
      vertex_[h] = v;
      slot_[h] = s;
    }
  }
  for (int e = 0; e < edge_count(); ++e) {
    const auto& rec = edges_[e];
    for (int h : {rec.a, rec.b}) {
      if (h < 0 || h >= h_count) throw StructuralError("edge " + std::to_string(e) + " names unknown half-edge " + std::to_string(h));
      if (edge_[h] != -1) throw StructuralError("half-edge " + std::to_string(h) + " paired twice");
      edge_[h] = e;
    }
    if (rec.a == rec.b) throw StructuralError("half-edge " + std::to_string(rec.a) + " paired with itself");
    if (rec.sign != 1 && rec.sign != -1) throw StructuralError("edge " + std::to_string(e) + " has sign other than +1/-1");
    partner_[rec.a] = rec.b;
    partner_[rec.b] = rec.a;
    sign_[rec.a] = sign_[rec.b] = rec.sign;
  }
  for (int h = 0; h < h_count; ++h)
    if (edge_[h] == -1) throw StructuralError("half-edge " + std::to_string(h) + " is unpaired");
  auto check = [&](const Dart& d, const char* what) {
    if (d.half_edge < 0 || d.half_edge >= h_count || (d.side != 1 && d.side != -1))
      throw StructuralError(std::string(what) + " anchor names invalid dart at half-edge " + std::to_string(d.half_edge));
  };
  for (const auto& m : marks_) {
    check(m.anchor, "mark");
    if (m.count < 0) throw StructuralError("negative mark count");
  }
  for (const auto& b : boundary_) check(b, "boundary");
}

int SignedRibbonGraph::step_around(int h, int dir) const {
  int v = vertex_[h];
  int d = valence(v);
  return rotations_[v][((slot_[h] + dir) % d + d) % d];
}

Dart SignedRibbonGraph::next_dart(Dart d) const {
  int hp = partner_[d.half_edge];
  int s = d.side * sign_[d.half_edge];
  return {step_around(hp, s), s};
}

Dart SignedRibbonGraph::reverse(Dart d) const {
  return {partner_[d.half_edge], -d.side * sign_[d.half_edge]};
}

SignedRibbonGraph SignedRibbonGraph::gauge_flip(int v) const {
  auto rot = rotations_;
  std::reverse(rot[v].begin(), rot[v].end());
  auto edges = edges_;
  for (auto& e : edges) {
    if (vertex_[e.a] == v) e.sign = -e.sign;
    if (vertex_[e.b] == v) e.sign = -e.sign;
  }
  // A reversed rotation turns side +1 into side -1 at v; anchors follow.
  auto flip = [&](Dart d) { return vertex_[d.half_edge] == v ? Dart{d.half_edge, -d.side} : d; };
  auto marks = marks_;
  for (auto& m : marks) m.anchor = flip(m.anchor);
  auto boundary = boundary_;
  for (auto& b : boundary) b = flip(b);
  return SignedRibbonGraph(std::move(rot), std::move(edges), std::move(marks), std::move(boundary));
}

SignedRibbonGraph SignedRibbonGraph::relabeled(const std::vector<int>& vertex_perm,
                                               const std::vector<int>& half_edge_perm, int shift) const {
  std::vector<std::vector<int>> rot(rotations_.size());
  for (int v = 0; v < vertex_count(); ++v) {
    const auto& old = rotations_[v];
    int d = static_cast<int>(old.size());
    auto& out = rot[vertex_perm[v]];
    out.resize(d);
    for (int s = 0; s < d; ++s) out[s] = half_edge_perm[old[((s + shift) % d + d) % d]];
  }
  auto edges = edges_;
  for (auto& e : edges) {
    e.a = half_edge_perm[e.a];
    e.b = half_edge_perm[e.b];
  }
  auto marks = marks_;
  for (auto& m : marks) m.anchor.half_edge = half_edge_perm[m.anchor.half_edge];
  auto boundary = boundary_;
  for (auto& b : boundary) b.half_edge = half_edge_perm[b.half_edge];
  return SignedRibbonGraph(std::move(rot), std::move(edges), std::move(marks), std::move(boundary));
}

std::vector<int> SignedRibbonGraph::components() const {
  std::vector<int> comp(vertex_count(), -1);
  int next = 0;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int h : rotations_[v]) {
        int w = vertex_[partner_[h]];
        if (comp[w] == -1) {
          comp[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<Face> trace_faces(const SignedRibbonGraph& g) {
  const int darts = 2 * g.half_edge_count();
  std::vector<int> orbit_of(darts, -1);
  std::vector<std::vector<Dart>> orbits;
  for (int i = 0; i < darts; ++i) {
    if (orbit_of[i] != -1) continue;
    Dart start{i / 2, (i % 2) ? -1 : 1};
    std::vector<Dart> orbit;
    Dart d = start;
    do {
      if (orbit_of[d.index()] != -1) throw StructuralError("face tracing revisits half-edge " + std::to_string(d.half_edge));
      orbit_of[d.index()] = static_cast<int>(orbits.size());
      orbit.push_back(d);
      d = g.next_dart(d);
    } while (!(d == start));
    orbits.push_back(std::move(orbit));
  }

  std::vector<int> mark_count(darts, 0), puncture_count(darts, 0);
  std::vector<char> is_boundary(darts, 0);
  for (const auto& m : g.marks()) (m.open ? puncture_count : mark_count)[m.anchor.index()] += m.count;
  for (const auto& b : g.boundary()) is_boundary[b.index()] = 1;

  // Orbits come in reverse pairs; orbits are discovered in order of their
  // lowest dart, so the first member of each pair is the one to report.
  std::vector<char> used(orbits.size(), 0);
  std::vector<Face> faces;
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    if (used[o]) continue;
    int partner = orbit_of[g.reverse(orbits[o].front()).index()];
    if (static_cast<std::size_t>(partner) == o)
      throw StructuralError("face through half-edge " + std::to_string(orbits[o].front().half_edge) + " is its own reverse");
    used[o] = used[partner] = 1;
    Face f;
    f.darts = orbits[o];
    for (int member : {static_cast<int>(o), partner})
      for (const Dart& d : orbits[member]) {
        f.marked_points += mark_count[d.index()];
        f.punctures += puncture_count[d.index()];
        f.boundary = f.boundary || is_boundary[d.index()];
      }
    faces.push_back(std::move(f));
  }
  return faces;
}

std::int64_t euler_characteristic(const SignedRibbonGraph& g) {
  std::int64_t interior = 0;
  for (const auto& f : trace_faces(g))
    if (!f.boundary) ++interior;
  return std::int64_t{g.vertex_count()} - g.edge_count() + interior;
}

bool orientability(const SignedRibbonGraph& g) {
  std::vector<int> gauge(g.vertex_count(), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (gauge[s] != 0) continue;
    gauge[s] = 1;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int h : g.rotation(v)) {
        int w = g.vertex_of(g.partner(h));
        int want = gauge[v] * g.sign_of(h);
        if (gauge[w] == 0) {
          gauge[w] = want;
          stack.push_back(w);
        } else if (gauge[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_connected(const SignedRibbonGraph& g) {
  auto comp = g.components();
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

SurfaceSignature surface_signature(const SignedRibbonGraph& g, bool punctured) {
  if (g.vertex_count() == 0 || !is_connected(g)) throw StructuralError("surface signature needs a connected graph");
  SurfaceSignature sig;
  std::int64_t interior = 0;
  for (const auto& f : trace_faces(g)) {
    if (f.boundary) {
      ++sig.boundary_components;
    } else {
      ++interior;
    }
    sig.marked_points += f.marked_points;
    sig.punctures += f.punctures;
  }
  const std::int64_t chi = std::int64_t{g.vertex_count()} - g.edge_count() + interior;
  sig.orientable = orientability(g);
  const std::int64_t deficit = 2 - chi - sig.boundary_components;
  if (sig.orientable) {
    if (deficit < 0 || deficit % 2 != 0)
      throw ConsistencyError("Euler characteristic " + std::to_string(chi) + " has the wrong parity for an orientable surface");
    sig.genus = static_cast<int>(deficit / 2);
  } else {
    if (deficit < 1) throw ConsistencyError("Euler characteristic " + std::to_string(chi) + " too large for a non-orientable surface");
    sig.genus = static_cast<int>(deficit);
  }
  sig.euler_characteristic = chi;
  if (punctured) {
    sig.euler_characteristic -= sig.punctures;
  } else {
    sig.marked_points += sig.punctures;
    sig.punctures = 0;
  }
  return sig;
}

}  // namespace crosscap
