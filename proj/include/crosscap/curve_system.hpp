#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crosscap/ribbon_graph.hpp"

namespace crosscap {

struct MarkedCurve {
  std::string id;
  bool two_sided = true;
  // Orientation of the annular neighbourhood relative to the local
  // orientation at the curve's first vertex: +1 or -1.
  int marking = 1;
  int twist_sign = 1;
  friend bool operator==(const MarkedCurve&, const MarkedCurve&) = default;
};

// One pass of a curve through a vertex.
struct CurveVisit {
  int vertex = 0;
  int in = 0;   // half-edge the curve arrives on
  int out = 0;  // half-edge it leaves on
  int orientation = 1;  // marking transported to this vertex
};

struct Crossing {
  int vertex = 0;
  int first = 0;   // curve index owning the lower incoming half-edge
  int second = 0;
};

// A named automorphism of the realization, stored as a half-edge map. It must
// preserve rotations, pairings and signs; its action on curves is derived.
struct Symmetry {
  std::vector<int> half_edges;
  std::vector<int> curves;
  bool preserves_markings = true;
};

struct MarkingReport {
  bool inconsistent = true;
  std::vector<int> consistent_crossings;  // vertices where markings agree
};

class CurveSystem {
 public:
  CurveSystem() = default;
  // Each curve is traced straight through its vertices starting from the
  // outgoing half-edge `starts[i]`. The curves must cover every edge exactly
  // once and meet only transversally at 4-valent vertices.
  CurveSystem(SignedRibbonGraph realization, std::vector<MarkedCurve> curves, std::vector<int> starts,
              std::map<std::string, std::vector<int>> symmetries = {});

  const SignedRibbonGraph& realization() const { return graph_; }
  const std::vector<MarkedCurve>& curves() const { return curves_; }
  const std::vector<int>& starts() const { return starts_; }
  int size() const { return static_cast<int>(curves_.size()); }
  std::vector<std::string> basis() const;
  int index_of(const std::string& id) const;
  std::optional<int> find(const std::string& id) const;

  int intersection(int a, int b) const { return intersections_[a][b]; }
  const std::vector<std::vector<int>>& intersections() const { return intersections_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<CurveVisit>& path(int c) const { return paths_[c]; }
  int curve_of_half_edge(int h) const { return curve_of_[h]; }
  // (curve, visit index) pairs passing through vertex v.
  const std::vector<std::pair<int, int>>& visits_at(int v) const { return vertex_visits_[v]; }
  // Product of edge signs around the curve.
  int holonomy(int c) const { return holonomy_[c]; }

  const std::map<std::string, Symmetry>& symmetries() const { return symmetries_; }
  const Symmetry& symmetry(const std::string& name) const;

 private:
  SignedRibbonGraph graph_;
  std::vector<MarkedCurve> curves_;
  std::vector<int> starts_;
  std::map<std::string, int> index_;
  std::vector<std::vector<CurveVisit>> paths_;
  std::vector<int> curve_of_, holonomy_;
  std::vector<std::vector<std::pair<int, int>>> vertex_visits_;
  std::vector<std::vector<int>> intersections_;
  std::vector<Crossing> crossings_;
  std::map<std::string, Symmetry> symmetries_;
};

bool is_filling(const CurveSystem& s);
MarkingReport marking_report(const CurveSystem& s);
bool markings_inconsistent(const CurveSystem& s);

}  // namespace crosscap
