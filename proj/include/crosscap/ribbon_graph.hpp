#pragma once

#include <cstdint>
#include <vector>

namespace crosscap {

// A half-edge side. Tracing a face along dart (h, side) leaves its vertex
// along h with local orientation `side` (+1 follows the rotation, -1 runs
// against it).
struct Dart {
  int half_edge = 0;
  int side = 1;

  int index() const { return 2 * half_edge + (side < 0 ? 1 : 0); }
  friend bool operator==(const Dart&, const Dart&) = default;
  friend bool operator<(const Dart& a, const Dart& b) { return a.index() < b.index(); }
};

struct EdgeRecord {
  int a = 0;
  int b = 0;
  int sign = 1;
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

// Marked points sit in the face containing `anchor`. Open marks are
// punctures and only affect the punctured signature.
struct FaceMark {
  Dart anchor;
  int count = 1;
  bool open = false;
  friend bool operator==(const FaceMark&, const FaceMark&) = default;
};

struct Face {
  std::vector<Dart> darts;
  int marked_points = 0;
  int punctures = 0;
  bool boundary = false;
};

struct SurfaceSignature {
  bool orientable = true;
  int genus = 0;
  int marked_points = 0;
  int boundary_components = 0;
  std::int64_t euler_characteristic = 2;
  int punctures = 0;
  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

// Rotation system with signed edges. Half-edges are 0..H-1; each appears in
// exactly one rotation and one edge. Boundary components are faces flagged
// through an anchor dart rather than deleted.
class SignedRibbonGraph {
 public:
  SignedRibbonGraph() = default;
  SignedRibbonGraph(std::vector<std::vector<int>> rotations, std::vector<EdgeRecord> edges,
                    std::vector<FaceMark> marks = {}, std::vector<Dart> boundary = {});

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int half_edge_count() const { return static_cast<int>(partner_.size()); }

  const std::vector<std::vector<int>>& rotations() const { return rotations_; }
  const std::vector<int>& rotation(int v) const { return rotations_[v]; }
  const std::vector<EdgeRecord>& edges() const { return edges_; }
  const std::vector<FaceMark>& marks() const { return marks_; }
  const std::vector<Dart>& boundary() const { return boundary_; }

  int vertex_of(int h) const { return vertex_[h]; }
  int slot_of(int h) const { return slot_[h]; }
  int partner(int h) const { return partner_[h]; }
  int sign_of(int h) const { return sign_[h]; }
  int edge_of(int h) const { return edge_[h]; }
  int valence(int v) const { return static_cast<int>(rotations_[v].size()); }

  // Neighbour of h in its vertex rotation, forward (dir = +1) or backward.
  int step_around(int h, int dir) const;
  Dart next_dart(Dart d) const;
  // The same side traversed in the opposite direction.
  Dart reverse(Dart d) const;

  // Negates the signs of all edges at v and reverses its rotation: a change
  // of local orientation that leaves the surface unchanged.
  SignedRibbonGraph gauge_flip(int v) const;
  // Renumbers vertices by `vertex_perm` and half-edges by `half_edge_perm`
  // (old id -> new id), rotating every rotation list by `shift`.
  SignedRibbonGraph relabeled(const std::vector<int>& vertex_perm,
                              const std::vector<int>& half_edge_perm, int shift) const;

  std::vector<int> components() const;

  friend bool operator==(const SignedRibbonGraph&, const SignedRibbonGraph&) = default;

 private:
  std::vector<std::vector<int>> rotations_;
  std::vector<EdgeRecord> edges_;
  std::vector<FaceMark> marks_;
  std::vector<Dart> boundary_;
  std::vector<int> vertex_, slot_, partner_, sign_, edge_;
};

// Faces ordered by their lowest dart; each face starts at that dart. Of the
// two traversal directions the one containing the lowest dart is reported.
std::vector<Face> trace_faces(const SignedRibbonGraph& g);
std::int64_t euler_characteristic(const SignedRibbonGraph& g);
bool orientability(const SignedRibbonGraph& g);
bool is_connected(const SignedRibbonGraph& g);
SurfaceSignature surface_signature(const SignedRibbonGraph& g, bool punctured = false);

}  // namespace crosscap
