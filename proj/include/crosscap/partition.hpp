#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "crosscap/matrix.hpp"
#include "crosscap/spectra.hpp"

namespace crosscap {

// Levels V_1..V_l of the adjacency graph (edge v -> u iff m(u, v) > 0),
// stored 0-based: parts[0] is V_1. Out-degrees count multiplicity, so the
// out-degree of v is the column sum of m.
struct AdjacencyPartition {
  std::vector<std::vector<int>> parts;
  mpz_class D = 1;
  int k = 0;
};

struct ConditionVerdict {
  bool pass = true;
  std::vector<int> counterexamples;
};

struct PartitionReport {
  std::array<ConditionVerdict, 5> conditions;
  bool all() const {
    for (const auto& c : conditions)
      if (!c.pass) return false;
    return true;
  }
};

PartitionReport check_partition_conditions(const IntMatrix& m, const AdjacencyPartition& p);

struct LemmaBound {
  bool holds = false;
  bool decided = true;
  mpz_class bound;   // 4 D^4
  mpq_class margin;  // bound - certified upper endpoint
  PFCertificate certificate;  // of m^(l-1)
};

// Brute force: certifies the spectral radius of m^(l-1) and compares its
// upper endpoint with 4 D^4.
LemmaBound lemma_bound_check(const IntMatrix& m, const AdjacencyPartition& p, const mpq_class& gap);

struct FuzzParams {
  int parts = 5;
  int D = 2;
  int min_part = 1;
  int max_part = 3;
};

// Seed-deterministic generator of (matrix, partition) pairs satisfying all
// five routing conditions.
class PartitionFuzzer {
 public:
  PartitionFuzzer(std::uint64_t seed, FuzzParams params);
  std::pair<IntMatrix, AdjacencyPartition> next();

 private:
  std::mt19937_64 rng_;
  FuzzParams params_;
  int uniform(int lo, int hi);
};

std::vector<std::pair<IntMatrix, AdjacencyPartition>> fuzz_partition_instances(std::uint64_t seed, FuzzParams params,
                                                                               int count);

}  // namespace crosscap
