#include "crosscap/curve_system.hpp"

#include <algorithm>
#include <set>

#include "crosscap/errors.hpp"

namespace crosscap {

namespace {

std::string vname(int v) { return "v" + std::to_string(v); }

Symmetry derive_symmetry(const std::string& name, const std::vector<int>& map, const SignedRibbonGraph& g,
                         const CurveSystem& s) {
  const int H = g.half_edge_count();
  if (static_cast<int>(map.size()) != H)
    throw ValidationError("symmetry " + name + " has " + std::to_string(map.size()) + " images for " + std::to_string(H) +
                          " half-edges");
  std::vector<char> hit(H, 0);
  for (int h : map) {
    if (h < 0 || h >= H || hit[h]) throw ValidationError("symmetry " + name + " is not a bijection of half-edges");
    hit[h] = 1;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& rot = g.rotation(v);
    int d = g.valence(v);
    int w = g.vertex_of(map[rot[0]]);
    int base = g.slot_of(map[rot[0]]);
    if (g.valence(w) != d) throw ValidationError("symmetry " + name + " changes the valence at " + vname(v));
    for (int i = 0; i < d; ++i) {
      int img = map[rot[i]];
      if (g.vertex_of(img) != w || g.slot_of(img) != (base + i) % d)
        throw ValidationError("symmetry " + name + " breaks the rotation at " + vname(v));
    }
  }
  for (int h = 0; h < H; ++h) {
    if (map[g.partner(h)] != g.partner(map[h]) || g.sign_of(h) != g.sign_of(map[h]))
      throw ValidationError("symmetry " + name + " does not preserve the edge at half-edge " + std::to_string(h));
  }
  Symmetry sym;
  sym.half_edges = map;
  sym.curves.resize(s.size());
  std::vector<char> seen(s.size(), 0);
  for (int c = 0; c < s.size(); ++c) {
    int img = s.curve_of_half_edge(map[s.starts()[c]]);
    for (const auto& visit : s.path(c))
      if (s.curve_of_half_edge(map[visit.out]) != img)
        throw ValidationError("symmetry " + name + " splits curve " + s.curves()[c].id);
    if (seen[img]) throw ValidationError("symmetry " + name + " is not injective on curves");
    seen[img] = 1;
    sym.curves[c] = img;
    const auto& a = s.curves()[c];
    const auto& b = s.curves()[img];
    if (a.two_sided != b.two_sided || a.twist_sign != b.twist_sign) sym.preserves_markings = false;
    // Compare transported markings at the image of the first vertex.
    int w = g.vertex_of(map[s.path(c).front().out]);
    for (const auto& [curve, idx] : s.visits_at(w))
      if (curve == img && s.path(img)[idx].orientation != s.path(c).front().orientation) sym.preserves_markings = false;
  }
  return sym;
}

}  // namespace

CurveSystem::CurveSystem(SignedRibbonGraph realization, std::vector<MarkedCurve> curves, std::vector<int> starts,
                         std::map<std::string, std::vector<int>> symmetries)
    : graph_(std::move(realization)), curves_(std::move(curves)), starts_(std::move(starts)) {
  const auto& g = graph_;
  if (starts_.size() != curves_.size()) throw ValidationError("every curve needs exactly one start half-edge");
  for (int c = 0; c < size(); ++c) {
    const auto& cv = curves_[c];
    if (!index_.emplace(cv.id, c).second) throw ValidationError("duplicate curve id " + cv.id);
    if (cv.marking != 1 && cv.marking != -1) throw ValidationError("curve " + cv.id + " has an invalid marking token");
    if (cv.twist_sign != 1 && cv.twist_sign != -1) throw ValidationError("curve " + cv.id + " has an invalid twist sign");
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.valence(v) != 2 && g.valence(v) != 4)
      throw ValidationError("vertex " + vname(v) + " has valence " + std::to_string(g.valence(v)) + "; expected 2 or 4");

  curve_of_.assign(g.half_edge_count(), -1);
  vertex_visits_.assign(g.vertex_count(), {});
  paths_.resize(size());
  holonomy_.assign(size(), 1);
  for (int c = 0; c < size(); ++c) {
    int start = starts_[c];
    if (start < 0 || start >= g.half_edge_count())
      throw ValidationError("curve " + curves_[c].id + " starts at unknown half-edge " + std::to_string(start));
    std::vector<CurveVisit> visits;
    int out = start;
    do {
      int in = g.partner(out);
      int w = g.vertex_of(in);
      int d = g.valence(w);
      int next = g.rotation(w)[(g.slot_of(in) + d / 2) % d];
      visits.push_back({w, in, next, 1});
      out = next;
    } while (out != start);
    std::rotate(visits.begin(), visits.end() - 1, visits.end());
    int o = curves_[c].marking;
    std::set<int> vertices;
    for (std::size_t i = 0; i < visits.size(); ++i) {
      auto& vis = visits[i];
      if (!vertices.insert(vis.vertex).second)
        throw ValidationError("curve " + curves_[c].id + " is not simple at " + vname(vis.vertex));
      for (int h : {vis.in, vis.out}) {
        if (curve_of_[h] != -1)
          throw ValidationError("half-edge " + std::to_string(h) + " lies on curves " + curves_[curve_of_[h]].id + " and " +
                                curves_[c].id);
        curve_of_[h] = c;
      }
      vis.orientation = o;
      o *= g.sign_of(vis.out);
      vertex_visits_[vis.vertex].push_back({c, static_cast<int>(i)});
    }
    holonomy_[c] = o * curves_[c].marking;
    if ((holonomy_[c] == 1) != curves_[c].two_sided)
      throw ValidationError("curve " + curves_[c].id + " declared " + (curves_[c].two_sided ? "two-sided" : "one-sided") +
                            " but its sign holonomy disagrees");
    paths_[c] = std::move(visits);
  }
  for (int h = 0; h < g.half_edge_count(); ++h)
    if (curve_of_[h] == -1) throw ValidationError("half-edge " + std::to_string(h) + " is not on any curve");

  intersections_.assign(size(), std::vector<int>(size(), 0));
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto& here = vertex_visits_[v];
    if (g.valence(v) == 2) continue;
    int a = curve_of_[g.rotation(v)[0]];
    int b = here[0].first == a ? here[1].first : here[0].first;
    crossings_.push_back({v, a, b});
    ++intersections_[a][b];
    ++intersections_[b][a];
  }

  for (const auto& [name, map] : symmetries) symmetries_.emplace(name, derive_symmetry(name, map, graph_, *this));
}

std::vector<std::string> CurveSystem::basis() const {
  std::vector<std::string> out;
  out.reserve(curves_.size());
  for (const auto& c : curves_) out.push_back(c.id);
  return out;
}

int CurveSystem::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw ValidationError("unknown curve " + id);
  return it->second;
}

std::optional<int> CurveSystem::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Symmetry& CurveSystem::symmetry(const std::string& name) const {
  auto it = symmetries_.find(name);
  if (it == symmetries_.end()) throw ValidationError("unknown symmetry " + name);
  return it->second;
}

bool is_filling(const CurveSystem& s) {
  // Traced faces are disks, so only the marked points, boundary flags and
  // connectivity of the curve union need checking.
  const auto& g = s.realization();
  if (g.vertex_count() == 0 || !is_connected(g)) return false;
  for (const auto& f : trace_faces(g))
    if (f.boundary || f.marked_points + f.punctures > 1) return false;
  return true;
}

MarkingReport marking_report(const CurveSystem& s) {
  MarkingReport report;
  for (const auto& x : s.crossings()) {
    const auto& here = s.visits_at(x.vertex);
    for (const auto& [c, idx] : here)
      if (!s.curves()[c].two_sided)
        throw ValidationError("ambiguous comparison at " + vname(x.vertex) + ": curve " + s.curves()[c].id +
                              " is one-sided and carries no annular marking");
    int oa = s.path(here[0].first)[here[0].second].orientation;
    int ob = s.path(here[1].first)[here[1].second].orientation;
    if (oa == ob) report.consistent_crossings.push_back(x.vertex);
  }
  report.inconsistent = report.consistent_crossings.empty();
  return report;
}

bool markings_inconsistent(const CurveSystem& s) { return marking_report(s).inconsistent; }

}  // namespace crosscap
