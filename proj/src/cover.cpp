#include "crosscap/cover.hpp"

#include <sstream>

#include "crosscap/errors.hpp"
#include "crosscap/text_format.hpp"

namespace crosscap {

namespace {

// Continue straight through the vertex at the far end of out-going h.
int straight_next(const SignedRibbonGraph& g, int h) {
  int in = g.partner(h);
  int v = g.vertex_of(in);
  int d = g.valence(v);
  return g.rotation(v)[(g.slot_of(in) + d / 2) % d];
}

}  // namespace

DoubleCover double_cover(const SignedRibbonGraph& g) {
  if (!is_connected(g)) throw StructuralError("double cover needs a connected graph");
  const int H = g.half_edge_count();
  std::vector<std::vector<int>> rot;
  rot.reserve(2 * static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) {
    std::vector<int> r0, r1;
    for (int h : g.rotation(v)) r0.push_back(2 * h);
    for (auto it = g.rotation(v).rbegin(); it != g.rotation(v).rend(); ++it) r1.push_back(2 * *it + 1);
    rot.push_back(std::move(r0));
    rot.push_back(std::move(r1));
  }
  std::vector<EdgeRecord> edges;
  for (const auto& e : g.edges())
    for (int s = 0; s < 2; ++s) edges.push_back({2 * e.a + s, 2 * e.b + (e.sign > 0 ? s : 1 - s), 1});
  // Sheet 1 runs the opposite way, so a side flips there.
  std::vector<FaceMark> marks;
  for (const auto& m : g.marks()) {
    marks.push_back({{2 * m.anchor.half_edge, m.anchor.side}, m.count, m.open});
    marks.push_back({{2 * m.anchor.half_edge + 1, -m.anchor.side}, m.count, m.open});
  }
  std::vector<Dart> boundary;
  for (const auto& b : g.boundary()) {
    boundary.push_back({2 * b.half_edge, b.side});
    boundary.push_back({2 * b.half_edge + 1, -b.side});
  }
  DoubleCover dc;
  dc.total = SignedRibbonGraph(std::move(rot), std::move(edges), std::move(marks), std::move(boundary));
  dc.projection.resize(2 * static_cast<std::size_t>(H));
  dc.involution.resize(2 * static_cast<std::size_t>(H));
  for (int h = 0; h < 2 * H; ++h) {
    dc.projection[h] = h / 2;
    dc.involution[h] = h ^ 1;
  }
  return dc;
}

CurveLift lift_curve(const DoubleCover& dc, const CurveSystem& s, int c) {
  const int start = 2 * s.starts().at(c);
  const int base_length = static_cast<int>(s.path(c).size());
  int h = start, steps = 0;
  do {
    h = straight_next(dc.total, h);
    ++steps;
  } while (h != start);
  CurveLift lift;
  if (steps == base_length) {
    lift.starts = {start, start + 1};
    lift.lengths = {steps, steps};
  } else {
    if (steps != 2 * base_length) throw ConsistencyError("lift of " + s.curves()[c].id + " has unexpected length");
    lift.starts = {start};
    lift.lengths = {steps};
  }
  return lift;
}

CurveLift lift_curve(const DoubleCover& dc, const CurveSystem& s, const std::string& id) {
  return lift_curve(dc, s, s.index_of(id));
}

std::string lift_name(const std::string& id, int sheet) { return id + "#" + std::to_string(sheet); }

CurveSystem lift_system(const DoubleCover& dc, const CurveSystem& s) {
  std::vector<MarkedCurve> curves;
  std::vector<int> starts;
  for (int c = 0; c < s.size(); ++c) {
    const auto& base = s.curves()[c];
    auto lift = lift_curve(dc, s, c);
    if (lift.two_sided() != base.two_sided)
      throw ConsistencyError("curve " + base.id + " lifts against its declared sidedness");
    for (std::size_t k = 0; k < lift.starts.size(); ++k) {
      int marking = base.two_sided ? (k == 0 ? base.marking : -base.marking) : 1;
      curves.push_back({lift_name(base.id, static_cast<int>(k)), true, marking, base.twist_sign});
      starts.push_back(lift.starts[k]);
    }
  }
  std::map<std::string, std::vector<int>> syms;
  for (const auto& [name, sym] : s.symmetries()) {
    std::vector<int> map(dc.total.half_edge_count());
    for (int h = 0; h < dc.total.half_edge_count(); ++h) map[h] = 2 * sym.half_edges[h / 2] + (h & 1);
    syms.emplace(name, std::move(map));
  }
  return CurveSystem(dc.total, std::move(curves), std::move(starts), std::move(syms));
}

PennerWord lift_word(const CurveSystem& base, const CurveSystem& lifted, const PennerWord& w) {
  PennerWord out;
  out.basis = lifted.basis();
  for (const auto& mv : w.moves) {
    if (const auto* t = std::get_if<Twist>(&mv)) {
      auto c = base.find(t->curve);
      if (!c) throw ValidationError("twist about unknown curve " + t->curve);
      if (!base.curves()[*c].two_sided || !lifted.find(lift_name(t->curve, 1)))
        throw TwistForbidden("curve " + t->curve + " has a connected lift and cannot be twisted");
      out.moves.push_back(Twist{lift_name(t->curve, 0), t->power});
      out.moves.push_back(Twist{lift_name(t->curve, 1), t->power});
    } else {
      out.moves.push_back(mv);
    }
  }
  return out;
}

CoverSignature cover_signature(const SurfaceSignature& sig) {
  CoverSignature out;
  out.signature = sig;
  if (sig.orientable) {
    out.components = 2;
    out.note = "orientable base: the cover is two copies of the base";
    return out;
  }
  auto& c = out.signature;
  c.orientable = true;
  c.genus = sig.genus - 1;
  c.marked_points = 2 * sig.marked_points;
  c.punctures = 2 * sig.punctures;
  c.boundary_components = 2 * sig.boundary_components;
  c.euler_characteristic = 2 * sig.euler_characteristic;
  return out;
}

mpq_class lower_bound_report(int g, int n, const mpq_class& b1) {
  if (g < 3) throw ParameterError("lower bound transport needs g >= 3, got " + std::to_string(g));
  if (n < 0) throw ParameterError("n must be non-negative");
  mpq_class out = b1 / (g - 1);
  out.canonicalize();
  return out;
}

std::string serialize_cover(const DoubleCover& dc) {
  std::ostringstream os;
  os << "crosscap-cover 1\n" << serialize_graph_body(dc.total);
  os << "projection";
  for (int h : dc.projection) os << ' ' << h;
  os << "\ninvolution";
  for (int h : dc.involution) os << ' ' << h;
  os << "\nend\n";
  return os.str();
}

DoubleCover parse_cover(const std::string& text) {
  std::istringstream is(text);
  std::string raw, graph;
  DoubleCover dc;
  bool header = false, ended = false;
  auto read_map = [](std::istringstream& ls, std::vector<int>& out) {
    int h;
    while (ls >> h) out.push_back(h);
    if (!ls.eof()) throw ParseError("bad half-edge list in cover");
  };
  while (std::getline(is, raw)) {
    std::istringstream ls(raw);
    std::string key;
    if (!(ls >> key) || key[0] == '#') continue;
    if (ended) throw ParseError("content after 'end' in cover");
    if (!header) {
      int version = 0;
      if (key != "crosscap-cover" || !(ls >> version) || version != 1) throw ParseError("missing 'crosscap-cover 1' header");
      header = true;
    } else if (key == "projection") {
      read_map(ls, dc.projection);
    } else if (key == "involution") {
      read_map(ls, dc.involution);
    } else if (key == "end") {
      ended = true;
    } else {
      graph += raw + '\n';
    }
  }
  if (!header || !ended) throw ParseError("truncated cover");
  dc.total = parse_graph_body(graph);
  const int H = dc.total.half_edge_count();
  if (static_cast<int>(dc.projection.size()) != H || static_cast<int>(dc.involution.size()) != H)
    throw ValidationError("cover maps must list every half-edge");
  for (int h = 0; h < H; ++h) {
    int j = dc.involution[h];
    if (j < 0 || j >= H || j == h || dc.involution[j] != h || dc.projection[j] != dc.projection[h])
      throw ValidationError("cover involution is not a fixed-point-free deck swap at " + std::to_string(h));
  }
  return dc;
}

}  // namespace crosscap
