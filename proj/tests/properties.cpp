// Seed-deterministic property checks. Each property runs a fixed number of
// cases from a fixed seed and reports the first failing case.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "fixtures.hpp"
#include "oracle.hpp"

#include "crosscap/cover.hpp"
#include "crosscap/family.hpp"
#include "crosscap/partition.hpp"
#include "crosscap/penner.hpp"
#include "crosscap/spectra.hpp"
#include "crosscap/text_format.hpp"

using namespace crosscap;

namespace {

constexpr int kCases = 500;
const mpq_class kGap(1, 1000000000);

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome require(bool cond, const std::string& what) { return cond ? Outcome{} : Outcome{false, what}; }

int failures = 0;

void property(const char* name, std::uint64_t seed, const std::function<Outcome(std::mt19937_64&, int)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  for (int i = 0; i < kCases; ++i) {
    Outcome o;
    try {
      o = body(rng, i);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) {
      std::printf("FAIL %s (seed %llu, case %d): %s\n", name, static_cast<unsigned long long>(seed), i, o.detail.c_str());
      ++failures;
      return;
    }
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::printf("ok   %s (%d cases, %.0f ms)\n", name, kCases, ms);
}

Outcome same_surface(const SignedRibbonGraph& a, const SignedRibbonGraph& b) {
  if (surface_signature(a) != surface_signature(b)) return {false, "signature changed"};
  if (oracle::face_lengths(a) != oracle::face_lengths(b)) return {false, "face lengths changed"};
  return {};
}

PennerWord random_word(std::mt19937_64& rng, const CurveSystem& s, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), pick(0, s.size() - 1), pow(1, 3), coin(0, 3);
  PennerWord w;
  w.basis = s.basis();
  int L = len(rng);
  for (int i = 0; i < L; ++i) {
    if (!s.symmetries().empty() && coin(rng) == 0) {
      w.moves.push_back(Rotate{s.symmetries().begin()->first, coin(rng) % 2 ? 1 : -1});
    } else {
      const auto& c = s.curves()[pick(rng)];
      w.moves.push_back(Twist{c.id, c.twist_sign * pow(rng)});
    }
  }
  return w;
}

}  // namespace

int main() {
  auto total_start = std::chrono::steady_clock::now();

  property("faces, euler characteristic and orientability agree with the flag model", 101,
           [](std::mt19937_64& rng, int) {
             auto g = fixtures::random_graph(rng, 6);
             auto o = oracle::flag_counts(g);
             auto sig = surface_signature(g);
             if (o.faces != static_cast<int>(trace_faces(g).size())) return Outcome{false, "face count"};
             if (o.orientable != sig.orientable) return Outcome{false, "orientability"};
             if (o.euler() != sig.euler_characteristic) return Outcome{false, "euler characteristic"};
             int expected_genus = sig.orientable ? (2 - static_cast<int>(o.euler())) / 2 : 2 - static_cast<int>(o.euler());
             return require(sig.genus == expected_genus, "genus");
           });

  property("relabeling vertices and half-edges preserves the surface", 102, [](std::mt19937_64& rng, int) {
    auto g = fixtures::random_graph(rng, 6);
    auto vp = fixtures::random_permutation(rng, g.vertex_count());
    auto hp = fixtures::random_permutation(rng, g.half_edge_count());
    int shift = std::uniform_int_distribution<int>(0, 3)(rng);
    return same_surface(g, g.relabeled(vp, hp, shift));
  });

  property("gauge flips preserve the surface and are involutions", 103, [](std::mt19937_64& rng, int) {
    auto g = fixtures::random_graph(rng, 6);
    int v = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
    auto f = g.gauge_flip(v);
    auto o = same_surface(g, f);
    if (!o.ok) return o;
    return require(f.gauge_flip(v) == g, "double flip differs");
  });

  property("graph text round trip is exact", 104, [](std::mt19937_64& rng, int) {
    auto g = fixtures::random_graph(rng, 6);
    auto body = serialize_graph_body(g);
    auto back = parse_graph_body(body);
    return require(back == g && serialize_graph_body(back) == body, "round trip");
  });

  property("orientation double cover is orientable with doubled euler characteristic", 105,
           [](std::mt19937_64& rng, int) {
             auto g = fixtures::random_graph(rng, 5);
             auto dc = double_cover(g);
             auto o = oracle::flag_counts(dc.total);
             auto base = oracle::flag_counts(g);
             if (!o.orientable) return Outcome{false, "cover not orientable"};
             if (o.euler() != 2 * base.euler()) return Outcome{false, "euler characteristic not doubled"};
             return require(is_connected(dc.total) == !base.orientable, "component count");
           });

  {
    auto inst = make_instance(1, 3);
    const auto& g = inst.system.realization();
    const auto sig = surface_signature(g);
    property("relabeling and gauge flips of the family surface keep its invariants", 110,
             [&](std::mt19937_64& rng, int) {
               auto vp = fixtures::random_permutation(rng, g.vertex_count());
               auto hp = fixtures::random_permutation(rng, g.half_edge_count());
               int shift = std::uniform_int_distribution<int>(0, 3)(rng);
               auto r = g.relabeled(vp, hp, shift);
               if (surface_signature(r) != sig) return Outcome{false, "signature changed"};
               std::vector<int> starts;
               for (int st : inst.system.starts()) starts.push_back(hp[st]);
               CurveSystem moved(r, inst.system.curves(), starts);
               if (moved.intersections() != inst.system.intersections()) return Outcome{false, "intersections changed"};
               int v = std::uniform_int_distribution<int>(0, g.vertex_count() - 1)(rng);
               return require(surface_signature(g.gauge_flip(v)) == sig, "gauge flip changed the signature");
             });
  }

  {
    auto torus = fixtures::torus();
    property("word matrices are multiplicative on the torus", 106, [&](std::mt19937_64& rng, int) {
      auto u = random_word(rng, torus, 6), v = random_word(rng, torus, 6);
      auto lhs = word_matrix(torus, concatenate(u, v)).entries;
      auto rhs = word_matrix(torus, u).entries * word_matrix(torus, v).entries;
      return require(lhs == rhs, "M(uv) != M(u) M(v)");
    });
  }

  {
    auto inst = make_instance(1, 3);
    property("word matrices are multiplicative on the family surface", 107, [&](std::mt19937_64& rng, int) {
      auto u = random_word(rng, inst.system, 2), v = random_word(rng, inst.system, 2);
      auto lhs = word_matrix(inst.system, concatenate(u, v)).entries;
      auto rhs = word_matrix(inst.system, u).entries * word_matrix(inst.system, v).entries;
      return require(lhs == rhs, "M(uv) != M(u) M(v)");
    });
  }

  property("certified intervals contain the dense spectral radius", 108, [](std::mt19937_64& rng, int) {
    int n = std::uniform_int_distribution<int>(1, 8)(rng);
    auto m = fixtures::random_irreducible(rng, n, 5, 0.35);
    // Zero out a random column block to exercise reducible inputs too.
    if (rng() % 4 == 0 && n > 2)
      for (int r = 0; r < n; ++r) m(r, 0) = r == 0 ? m(0, 0) : mpz_class(0);
    auto c = pf_eigenvalue(m, kGap);
    double rho = oracle::spectral_radius(m);
    double tol = 1e-9 * std::max(1.0, rho);
    if (c.lower > c.upper) return Outcome{false, "empty interval"};
    if (!c.degenerate && c.upper - c.lower > kGap) return Outcome{false, "interval wider than the gap"};
    return require(c.lower.get_d() <= rho + tol && c.upper.get_d() >= rho - tol, "interval misses the radius");
  });

  property("fuzzed partitions satisfy the routing conditions and the degree bound", 109,
           [](std::mt19937_64& rng, int i) {
             FuzzParams params{4 + i % 4, 1 + i % 3, 1, 3};
             PartitionFuzzer fz(rng(), params);
             auto [m, p] = fz.next();
             if (!check_partition_conditions(m, p).all()) return Outcome{false, "conditions fail"};
             auto power = m.power(static_cast<unsigned>(p.parts.size() - 1));
             double rho = oracle::spectral_radius(power);
             double bound = 4 * std::pow(p.D.get_d(), 4);
             return require(rho <= bound * (1 + 1e-9), "spectral radius of M^(l-1) exceeds 4 D^4");
           });

  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - total_start).count();
  std::printf("total %.2f s, %d failing properties\n", s, failures);
  return failures == 0 ? 0 : 1;
}
