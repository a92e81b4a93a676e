#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "crosscap/block_template.hpp"
#include "crosscap/curve_system.hpp"
#include "crosscap/partition.hpp"
#include "crosscap/penner.hpp"
#include "crosscap/ribbon_graph.hpp"
#include "crosscap/spectra.hpp"

namespace crosscap {

// Closed non-orientable genus of the quotient surface: (14k - 2) n + 2.
long genus_formula(int n, int k);

// One member of the family: n columns (rho1 orbit) by k rows (rho2 orbit) of
// block copies. Block (i, j) holds the template curves with ids "<c>_i_j";
// basis index = j * (n * C) + i * C + c for C curves per block, so each row
// is a contiguous range.
struct FamilyInstance {
  int n = 1;
  int k = 3;
  int r = 0;
  BlockTemplate tmpl;
  CurveSystem system;
  std::vector<int> rho1;  // basis permutations
  std::vector<int> rho2;

  int curves_per_block() const { return static_cast<int>(tmpl.curves.size()); }
  int curve_index(int c, int i, int j) const;
  int curve_index(const std::string& id, int i, int j) const;
  // Basis indices of row j.
  std::vector<int> row(int j) const;
};

// Throws ParameterError unless n >= 1, k >= 3 and 0 <= r <= 14n.
FamilyInstance make_instance(int n, int k, int r = 0, const BlockTemplate& t = default_template());

// Assembles the closed surface with its curves, marks and rho symmetries.
// Rejects templates whose assembly is not filling, not inconsistently marked,
// has an unmarked face of length below 3, or misplaces the marked points.
CurveSystem build_surface(const BlockTemplate& t, int n, int k);

// The column subsurface: one column for n = 1 with the cross-column edges
// cut, leaving its boundary circles as flagged faces.
SignedRibbonGraph column_subsurface(const BlockTemplate& t, int k);

// Twists about the rho1 orbits (row 0 only) of the red set, then the blue
// set, then the single red curve and the single blue curve, then rho2.
// Moves compose right to left, so the list starts with rho2.
PennerWord build_f_word(const FamilyInstance& inst);

PFCertificate stretch_factor(const FamilyInstance& inst, const mpq_class& gap);

// Maximum total intersection of a curve with the row-0 curves.
int d_prime(const FamilyInstance& inst);
// (1 + D')^3.
mpz_class lemma_degree(const FamilyInstance& inst);

enum class Verdict { Pass, Fail, Indeterminate };
const char* verdict_name(Verdict v);

struct UpperBoundReport {
  int d_prime = 0;
  mpz_class D;
  mpz_class bound;  // 4 D^4
  long genus = 0;
  Verdict k_bound = Verdict::Indeterminate;  // lambda^(k-1) <= 4 D^4
  Verdict g_bound = Verdict::Indeterminate;  // log lambda <= C' n / g
  double c_prime = 0;                        // 28 log(4 D^4)
  bool passed() const { return k_bound == Verdict::Pass && g_bound == Verdict::Pass; }
};

// Both checks are exact: (b) is compared as lambda^g <= (4 D^4)^(28 n).
// A verdict is Pass if the upper endpoint satisfies the bound, Fail if the
// lower endpoint violates it, otherwise Indeterminate.
UpperBoundReport verify_upper_bound(const FamilyInstance& inst, const PFCertificate& cert);

// Row k-1 first, then rows 0, 1, ..., k-2.
AdjacencyPartition partition_family(const FamilyInstance& inst);

struct ExceptionalSets {
  std::vector<int> x;  // rho2^-1 translates of the rho2 crosscut's own curve
  std::vector<int> y;  // rho2 translates of the curve it meets
};
ExceptionalSets exceptional_sets(const FamilyInstance& inst);

// Euler characteristic of the genus-3 summand used in the oriented sum.
inline constexpr int kSummandEuler = -1;

// Signature after r oriented sums with the summand, starting from the built
// surface. Punctured: n of the 2n marked points become punctures.
SurfaceSignature oriented_sum_bookkeeping(const FamilyInstance& inst, bool punctured = false);

struct TheoremConstants {
  double c_prime = 0;
  double two_c_prime_n = 0;
  bool partial = true;
  std::string note;
};
TheoremConstants theorem_constants(int n, const UpperBoundReport& report);

}  // namespace crosscap
