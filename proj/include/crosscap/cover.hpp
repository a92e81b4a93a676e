#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "crosscap/curve_system.hpp"
#include "crosscap/penner.hpp"
#include "crosscap/ribbon_graph.hpp"

namespace crosscap {

// Orientation double cover. Sheet s of base vertex v is total vertex 2v + s,
// and sheet s of base half-edge h is total half-edge 2h + s. Sheet 1 carries
// the reversed rotation, and an edge of sign -1 joins opposite sheets, so
// every total edge has sign +1. Sheet 0 holds half-edge 0.
struct DoubleCover {
  SignedRibbonGraph total;
  std::vector<int> projection;  // total half-edge -> base half-edge
  std::vector<int> involution;  // total half-edge -> its other sheet

  int vertex_projection(int v) const { return v / 2; }
  int vertex_involution(int v) const { return v ^ 1; }
};

DoubleCover double_cover(const SignedRibbonGraph& g);

struct CurveLift {
  // Starting half-edges in the total graph: two for a two-sided curve, one
  // closed lift of doubled length otherwise.
  std::vector<int> starts;
  std::vector<int> lengths;  // edges per lift
  bool two_sided() const { return starts.size() == 2; }
};

CurveLift lift_curve(const DoubleCover& dc, const CurveSystem& s, int c);
CurveLift lift_curve(const DoubleCover& dc, const CurveSystem& s, const std::string& id);

// Name of sheet `sheet` of the lift of `id`: "<id>#0" or "<id>#1".
std::string lift_name(const std::string& id, int sheet);

// Curve system on the cover: each curve c is replaced by c#0, c#1 (markings
// pulled back, so c#1 carries the opposite marking relative to its sheet),
// or by a single c#0 when c is one-sided. Symmetries lift sheet-preserving.
CurveSystem lift_system(const DoubleCover& dc, const CurveSystem& s);

// A twist about c becomes twists about both of its lifts; rotations keep
// their names. Throws TwistForbidden for a curve with a connected lift.
PennerWord lift_word(const CurveSystem& base, const CurveSystem& lifted, const PennerWord& w);

struct CoverSignature {
  SurfaceSignature signature;  // of one component
  int components = 1;
  std::string note;
};

// Non-orientable genus g with m marked points covers to orientable genus
// g - 1 with 2m marked points. An orientable input covers by two copies.
CoverSignature cover_signature(const SurfaceSignature& sig);

// B1 / (g - 1): the transported lower bound, conditional on B1. Needs g >= 3.
mpq_class lower_bound_report(int g, int n, const mpq_class& b1);

// Total graph body followed by projection and involution lines.
std::string serialize_cover(const DoubleCover& dc);
DoubleCover parse_cover(const std::string& text);

}  // namespace crosscap
