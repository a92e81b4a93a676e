#include "crosscap/partition.hpp"

#include <algorithm>

#include "crosscap/errors.hpp"

namespace crosscap {

namespace {

std::vector<int> levels_of(const IntMatrix& m, const AdjacencyPartition& p) {
  if (m.rows() != m.cols()) throw ValidationError("partition check needs a square matrix");
  std::vector<int> level(m.rows(), -1);
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].empty()) throw ValidationError("part V_" + std::to_string(i + 1) + " is empty");
    for (int v : p.parts[i]) {
      if (v < 0 || v >= m.rows()) throw ValidationError("partition index " + std::to_string(v) + " out of range");
      if (level[v] != -1) throw ValidationError("index " + std::to_string(v) + " lies in two parts");
      level[v] = static_cast<int>(i) + 1;
    }
  }
  for (int v = 0; v < m.rows(); ++v)
    if (level[v] == -1) throw ValidationError("index " + std::to_string(v) + " lies in no part");
  return level;
}

}  // namespace

PartitionReport check_partition_conditions(const IntMatrix& m, const AdjacencyPartition& p) {
  const int l = static_cast<int>(p.parts.size());
  if (l < 3) throw ValidationError("partition needs at least three parts");
  const auto level = levels_of(m, p);
  const int n = m.rows();
  auto succ = [l](int i) { return i % l + 1; };
  auto support = [&](int v) {
    std::vector<int> out;
    for (int u = 0; u < n; ++u)
      if (m(u, v) > 0) out.push_back(u);
    return out;
  };
  PartitionReport rep;
  auto fail = [&](int cond, int v) {
    rep.conditions[cond].pass = false;
    rep.conditions[cond].counterexamples.push_back(v);
  };
  const int last_unit = std::min(p.k, l);
  for (int v = 0; v < n; ++v) {
    const int i = level[v];
    if (m.column_sum(v) > p.D) fail(0, v);
    const auto out = support(v);
    auto all_in = [&](std::initializer_list<int> allowed) {
      return std::all_of(out.begin(), out.end(), [&](int u) {
        return std::find(allowed.begin(), allowed.end(), level[u]) != allowed.end();
      });
    };
    if (i != 1 && i != 3 && !all_in({succ(i)})) fail(1, v);
    if (i == 1 && !all_in({2, 3})) fail(2, v);
    if (i == 3) {
      bool ok = all_in({3, succ(3)});
      for (int u : out)
        if (level[u] == 3) {
          auto second = support(u);
          ok = ok && std::all_of(second.begin(), second.end(), [&](int w) { return level[w] == succ(3); });
        }
      if (!ok) fail(3, v);
    }
    if (i > 3 && i <= last_unit && !(out.size() == 1 && m(out[0], v) == 1)) fail(4, v);
  }
  return rep;
}

LemmaBound lemma_bound_check(const IntMatrix& m, const AdjacencyPartition& p, const mpq_class& gap) {
  auto rep = check_partition_conditions(m, p);
  if (!rep.all()) throw ConditionsUnverified("routing conditions fail; the spectral bound does not apply");
  const unsigned power = static_cast<unsigned>(p.parts.size() - 1);
  const IntMatrix a = m.power(power);
  LemmaBound out;
  out.bound = 4 * p.D * p.D * p.D * p.D;
  mpq_class g = gap;
  for (int attempt = 0; attempt < 4; ++attempt) {
    out.certificate = pf_eigenvalue(a, g);
    if (out.certificate.upper <= out.bound) {
      out.holds = true;
      break;
    }
    if (out.certificate.lower > out.bound) break;
    g /= mpq_class(mpz_class(1) << 32);
  }
  out.decided = out.holds || out.certificate.lower > out.bound;
  out.margin = mpq_class(out.bound) - out.certificate.upper;
  return out;
}

PartitionFuzzer::PartitionFuzzer(std::uint64_t seed, FuzzParams params) : rng_(seed), params_(params) {
  if (params.parts < 4) throw ParameterError("fuzzing needs at least four parts");
  if (params.D < 1) throw ParameterError("out-degree bound must be at least 1");
  if (params.min_part < 1 || params.max_part < params.min_part) throw ParameterError("invalid part size range");
}

// Modulo reduction keeps the stream identical across standard libraries.
int PartitionFuzzer::uniform(int lo, int hi) {
  return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::pair<IntMatrix, AdjacencyPartition> PartitionFuzzer::next() {
  const int l = params_.parts;
  AdjacencyPartition p;
  p.D = params_.D;
  p.k = l;
  int n = 0;
  for (int i = 0; i < l; ++i) {
    int size = uniform(params_.min_part, params_.max_part);
    std::vector<int> part(size);
    for (auto& x : part) x = n++;
    p.parts.push_back(std::move(part));
  }
  IntMatrix m(n, n);
  auto pick = [&](const std::vector<int>& from) { return from[uniform(0, static_cast<int>(from.size()) - 1)]; };
  auto spread = [&](int v, const std::vector<int>& targets) {
    int units = uniform(1, params_.D);
    for (int t = 0; t < units; ++t) m(pick(targets), v) += 1;
  };
  const auto& v1 = p.parts[0];
  const auto& v2 = p.parts[1];
  const auto& v3 = p.parts[2];
  const auto& v4 = p.parts[3];
  std::vector<int> v23 = v2;
  v23.insert(v23.end(), v3.begin(), v3.end());
  for (int v : v1) spread(v, v23);
  for (int v : v2) spread(v, v3);
  // V_3 splits into vertices that may feed V_3 and vertices feeding only V_4.
  std::vector<int> feeders, sinks;
  for (int v : v3) (uniform(0, 1) ? feeders : sinks).push_back(v);
  std::vector<int> feeder_targets = sinks;
  feeder_targets.insert(feeder_targets.end(), v4.begin(), v4.end());
  for (int v : feeders) spread(v, feeder_targets);
  for (int v : sinks) spread(v, v4);
  for (int i = 3; i < l; ++i) {
    const auto& target = p.parts[(i + 1) % l];
    for (int v : p.parts[i]) m(pick(target), v) += 1;
  }
  return {std::move(m), std::move(p)};
}

std::vector<std::pair<IntMatrix, AdjacencyPartition>> fuzz_partition_instances(std::uint64_t seed, FuzzParams params,
                                                                               int count) {
  PartitionFuzzer f(seed, params);
  std::vector<std::pair<IntMatrix, AdjacencyPartition>> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(f.next());
  return out;
}

}  // namespace crosscap
