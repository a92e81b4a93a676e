#include "crosscap/family.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "crosscap/errors.hpp"

namespace crosscap {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Global numbering for an n x k grid of template blocks.
struct Layout {
  int n, k, nv, nc;
  int block(int i, int j) const { return mod(i, n) * k + mod(j, k); }
  int vertex(int i, int j, int v) const { return block(i, j) * nv + v; }
  int half_edge(int i, int j, int v, int slot) const { return 4 * vertex(i, j, v) + slot; }
  int curve(int c, int i, int j) const { return mod(j, k) * (n * nc) + mod(i, n) * nc + c; }
};

std::string curve_name(const std::string& id, int i, int j) {
  return id + "_" + std::to_string(i) + "_" + std::to_string(j);
}

void check_params(int n, int k) {
  if (n < 1) throw ParameterError("n must be at least 1, got " + std::to_string(n));
  if (k < 3) throw ParameterError("k must be at least 3, got " + std::to_string(k));
}

struct Slots {
  int in, out;
};

Slots slots_of(const BlockTemplate& t, const std::string& id, int v) {
  bool first = t.vertices[v].first == id;
  return {first ? 0 : 1, first ? 2 : 3};
}

std::vector<std::vector<int>> grid_rotations(const Layout& L) {
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(L.n) * L.k * L.nv);
  for (std::size_t v = 0; v < rot.size(); ++v) {
    int b = static_cast<int>(4 * v);
    rot[v] = {b, b + 1, b + 2, b + 3};
  }
  return rot;
}

std::vector<int> translate(const Layout& L, int di, int dj) {
  std::vector<int> map(static_cast<std::size_t>(4) * L.n * L.k * L.nv);
  for (int i = 0; i < L.n; ++i)
    for (int j = 0; j < L.k; ++j)
      for (int v = 0; v < L.nv; ++v)
        for (int s = 0; s < 4; ++s) map[L.half_edge(i, j, v, s)] = L.half_edge(i + di, j + dj, v, s);
  return map;
}

// Face id for every dart, covering both traversal directions.
std::vector<int> face_ids(const SignedRibbonGraph& g, const std::vector<Face>& faces) {
  std::vector<int> id(2 * static_cast<std::size_t>(g.half_edge_count()), -1);
  for (std::size_t f = 0; f < faces.size(); ++f)
    for (const auto& d : faces[f].darts) {
      id[d.index()] = static_cast<int>(f);
      id[g.reverse(d).index()] = static_cast<int>(f);
    }
  return id;
}

}  // namespace

long genus_formula(int n, int k) {
  if (n < 1 || k < 1) throw ParameterError("genus formula needs n >= 1 and k >= 1");
  return (14L * k - 2) * n + 2;
}

int FamilyInstance::curve_index(int c, int i, int j) const {
  return Layout{n, k, static_cast<int>(tmpl.vertices.size()), curves_per_block()}.curve(c, i, j);
}

int FamilyInstance::curve_index(const std::string& id, int i, int j) const {
  int c = tmpl.curve_index(id);
  if (c < 0) throw ValidationError("unknown template curve " + id);
  return curve_index(c, i, j);
}

std::vector<int> FamilyInstance::row(int j) const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < curves_per_block(); ++c) out.push_back(curve_index(c, i, j));
  std::sort(out.begin(), out.end());
  return out;
}

CurveSystem build_surface(const BlockTemplate& t, int n, int k) {
  check_params(n, k);
  validate_block_template(t);
  const Layout L{n, k, static_cast<int>(t.vertices.size()), static_cast<int>(t.curves.size())};

  std::vector<EdgeRecord> edges;
  std::vector<MarkedCurve> curves(static_cast<std::size_t>(n) * k * L.nc);
  std::vector<int> starts(curves.size());
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i)
      for (int c = 0; c < L.nc; ++c) {
        const auto& tc = t.curves[c];
        const auto& p = tc.path;
        for (std::size_t e = 0; e < p.size(); ++e) {
          const auto& a = p[e];
          const auto& b = p[(e + 1) % p.size()];
          int ha = L.half_edge(i + a.di, j + a.dj, a.vertex, slots_of(t, tc.id, a.vertex).out);
          int hb = L.half_edge(i + b.di, j + b.dj, b.vertex, slots_of(t, tc.id, b.vertex).in);
          edges.push_back({ha, hb, a.sign});
        }
        int idx = L.curve(c, i, j);
        curves[idx] = {curve_name(tc.id, i, j), true, tc.marking, tc.twist_sign};
        starts[idx] = L.half_edge(i + p[0].di, j + p[0].dj, p[0].vertex, slots_of(t, tc.id, p[0].vertex).out);
      }
  std::vector<FaceMark> marks;
  for (int i = 0; i < n; ++i)
    for (const auto& m : t.marks) marks.push_back({{L.half_edge(i, 0, m.vertex, m.slot), m.side}, 1, false});

  SignedRibbonGraph g(grid_rotations(L), std::move(edges), std::move(marks));
  std::map<std::string, std::vector<int>> syms{{"rho1", translate(L, 1, 0)}, {"rho2", translate(L, 0, 1)}};
  CurveSystem s(std::move(g), std::move(curves), std::move(starts), std::move(syms));

  const auto& sg = s.realization();
  if (!is_filling(s)) throw ValidationError("block template: assembled curves do not fill the surface");
  auto report = marking_report(s);
  if (!report.inconsistent)
    throw ValidationError("block template: markings agree at crossing v" + std::to_string(report.consistent_crossings[0]));
  auto faces = trace_faces(sg);
  for (const auto& f : faces)
    if (f.darts.size() < 3 && f.marked_points == 0)
      throw ValidationError("block template: unmarked face of length " + std::to_string(f.darts.size()) +
                            " at half-edge " + std::to_string(f.darts[0].half_edge));
  // Each marked face must be carried to itself by rho2 so the word fixes it.
  auto ids = face_ids(sg, faces);
  const auto& r2 = s.symmetry("rho2").half_edges;
  for (const auto& m : sg.marks()) {
    Dart image{r2[m.anchor.half_edge], m.anchor.side};
    if (ids[image.index()] != ids[m.anchor.index()])
      throw ValidationError("block template: marked face at half-edge " + std::to_string(m.anchor.half_edge) +
                            " is not invariant under rho2");
  }
  return s;
}

FamilyInstance make_instance(int n, int k, int r, const BlockTemplate& t) {
  check_params(n, k);
  if (r < 0 || r > 14 * n)
    throw ParameterError("r must lie between 0 and 14n = " + std::to_string(14 * n) + ", got " + std::to_string(r));
  FamilyInstance inst;
  inst.n = n;
  inst.k = k;
  inst.r = r;
  inst.tmpl = t;
  inst.system = build_surface(t, n, k);
  inst.rho1 = inst.system.symmetry("rho1").curves;
  inst.rho2 = inst.system.symmetry("rho2").curves;
  return inst;
}

SignedRibbonGraph column_subsurface(const BlockTemplate& t, int k) {
  if (k < 1) throw ParameterError("k must be positive");
  validate_block_template(t);
  const Layout L{1, k, static_cast<int>(t.vertices.size()), static_cast<int>(t.curves.size())};
  auto rot = grid_rotations(L);
  int next = 4 * static_cast<int>(rot.size());
  std::vector<EdgeRecord> edges;
  std::vector<Dart> boundary;
  auto stub = [&](int h, int sign) {
    int s = next++;
    rot.push_back({s});
    edges.push_back({h, s, sign});
    boundary.push_back({s, 1});
  };
  for (int j = 0; j < k; ++j)
    for (const auto& tc : t.curves) {
      const auto& p = tc.path;
      for (std::size_t e = 0; e < p.size(); ++e) {
        const auto& a = p[e];
        const auto& b = p[(e + 1) % p.size()];
        int ha = L.half_edge(a.di, j + a.dj, a.vertex, slots_of(t, tc.id, a.vertex).out);
        int hb = L.half_edge(b.di, j + b.dj, b.vertex, slots_of(t, tc.id, b.vertex).in);
        if (a.di == b.di) {
          edges.push_back({ha, hb, a.sign});
        } else {
          stub(ha, a.sign);
          stub(hb, 1);
        }
      }
    }
  std::vector<FaceMark> marks;
  for (const auto& m : t.marks) marks.push_back({{L.half_edge(0, 0, m.vertex, m.slot), m.side}, 1, false});
  return SignedRibbonGraph(std::move(rot), std::move(edges), std::move(marks), std::move(boundary));
}

PennerWord build_f_word(const FamilyInstance& inst) {
  const auto& t = inst.tmpl;
  PennerWord w;
  w.basis = inst.system.basis();
  w.moves.push_back(Rotate{"rho2", 1});
  auto orbit = [&](const std::string& id) {
    const auto& tc = t.curves[t.curve_index(id)];
    for (int i = 0; i < inst.n; ++i) w.moves.push_back(Twist{curve_name(id, i, 0), tc.twist_sign});
  };
  orbit(t.phi_blue);
  orbit(t.phi_red);
  for (const auto& id : t.blue) orbit(id);
  for (const auto& id : t.red) orbit(id);
  return w;
}

PFCertificate stretch_factor(const FamilyInstance& inst, const mpq_class& gap) {
  return pf_eigenvalue(word_matrix(inst.system, build_f_word(inst)).entries, gap);
}

int d_prime(const FamilyInstance& inst) {
  auto bar = inst.row(0);
  int best = 0;
  for (int d = 0; d < inst.system.size(); ++d) {
    int total = 0;
    for (int c : bar) total += inst.system.intersection(d, c);
    best = std::max(best, total);
  }
  return best;
}

mpz_class lemma_degree(const FamilyInstance& inst) {
  mpz_class base = 1 + d_prime(inst);
  return base * base * base;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    default: return "indeterminate";
  }
}

namespace {

mpq_class qpow(const mpq_class& q, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), e);
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// Pass if x^e <= bound holds at the upper endpoint, Fail if it breaks at the
// lower endpoint.
Verdict compare_power(const PFCertificate& c, unsigned long e, const mpq_class& bound) {
  if (qpow(c.upper, e) <= bound) return Verdict::Pass;
  if (qpow(c.lower, e) > bound) return Verdict::Fail;
  return Verdict::Indeterminate;
}

}  // namespace

UpperBoundReport verify_upper_bound(const FamilyInstance& inst, const PFCertificate& cert) {
  check_params(inst.n, inst.k);
  UpperBoundReport rep;
  rep.d_prime = d_prime(inst);
  rep.D = lemma_degree(inst);
  rep.bound = 4 * rep.D * rep.D * rep.D * rep.D;
  rep.genus = genus_formula(inst.n, inst.k);
  rep.c_prime = 28.0 * std::log(rep.bound.get_d());
  rep.k_bound = compare_power(cert, static_cast<unsigned long>(inst.k - 1), mpq_class(rep.bound));
  mpz_class rhs;
  mpz_pow_ui(rhs.get_mpz_t(), rep.bound.get_mpz_t(), 28UL * static_cast<unsigned long>(inst.n));
  rep.g_bound = compare_power(cert, static_cast<unsigned long>(rep.genus), mpq_class(rhs));
  return rep;
}

AdjacencyPartition partition_family(const FamilyInstance& inst) {
  check_params(inst.n, inst.k);
  AdjacencyPartition p;
  p.k = inst.k;
  p.D = lemma_degree(inst);
  p.parts.push_back(inst.row(inst.k - 1));
  for (int j = 0; j + 1 < inst.k; ++j) p.parts.push_back(inst.row(j));
  return p;
}

ExceptionalSets exceptional_sets(const FamilyInstance& inst) {
  const auto& t = inst.tmpl;
  auto cut = std::find_if(t.crosscuts.begin(), t.crosscuts.end(), [](const CrossCut& c) { return c.generator == "rho2"; });
  if (cut == t.crosscuts.end()) throw ValidationError("template declares no rho2 crosscut");
  ExceptionalSets e;
  for (int i = 0; i < inst.n; ++i) {
    e.x.push_back(inst.curve_index(cut->own, i, inst.k - 1));
    e.y.push_back(inst.curve_index(cut->other, i, 1));
  }
  std::sort(e.x.begin(), e.x.end());
  std::sort(e.y.begin(), e.y.end());
  return e;
}

SurfaceSignature oriented_sum_bookkeeping(const FamilyInstance& inst, bool punctured) {
  if (inst.r < 0 || inst.r > 14 * inst.n)
    throw ParameterError("r must vary between 0 and 14n = " + std::to_string(14 * inst.n));
  SurfaceSignature sig = surface_signature(inst.system.realization());
  if (sig.orientable) throw ConsistencyError("family surface is orientable");
  // Each oriented sum with a non-orientable genus-3 summand lowers chi by one.
  sig.euler_characteristic += static_cast<std::int64_t>(inst.r) * kSummandEuler;
  sig.genus += inst.r;
  if (punctured) {
    int opened = inst.n;
    sig.marked_points -= opened;
    sig.punctures += opened;
    sig.euler_characteristic -= opened;
  }
  return sig;
}

TheoremConstants theorem_constants(int n, const UpperBoundReport& report) {
  if (n < 1) throw ParameterError("n must be at least 1");
  TheoremConstants c;
  c.c_prime = report.c_prime;
  c.two_c_prime_n = 2.0 * report.c_prime * n;
  c.partial = true;
  c.note = "small-genus minima terms unavailable; value is the 2C'n term only";
  return c;
}

}  // namespace crosscap
