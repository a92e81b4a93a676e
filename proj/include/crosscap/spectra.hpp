#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "crosscap/matrix.hpp"

namespace crosscap {

struct ComponentCertificate {
  std::vector<int> indices;
  mpq_class lower;
  mpq_class upper;
  std::vector<mpz_class> witness;  // positive vector on `indices`, empty for 1x1 blocks
  long iterations = 0;
};

// Certified interval for the spectral radius of a non-negative matrix.
// Bounds are Collatz-Wielandt ratios of an explicit positive witness on the
// dominant strongly connected block.
struct PFCertificate {
  mpq_class lower;
  mpq_class upper;
  long iterations = 0;
  bool primitive = false;
  int primitivity_exponent = 0;  // smallest m with M^m > 0, or 0
  bool reducible = false;
  bool degenerate = false;  // dominant block is nilpotent
  std::vector<int> dominant;
  std::vector<mpz_class> witness;
  std::vector<ComponentCertificate> components;
};

inline constexpr long kIterationCap = 1000000;

PFCertificate pf_eigenvalue(const IntMatrix& m, const mpq_class& gap);

// Strongly connected components of the graph with an edge v -> u whenever
// m(u, v) > 0, in order of their smallest index.
std::vector<std::vector<int>> strongly_connected_components(const IntMatrix& m);

struct Primitivity {
  bool irreducible = false;
  bool primitive = false;
  int exponent = 0;
};
Primitivity primitivity(const IntMatrix& m);

// Exact Collatz-Wielandt ratios min/max (m v)_i / v_i over the given rows.
std::pair<mpq_class, mpq_class> collatz_wielandt(const IntMatrix& m, const std::vector<mpz_class>& v);

// "p/q" (or "p" when q = 1).
std::string rational_string(const mpq_class& q);
// Truncated decimal with `digits` fractional digits.
std::string decimal_string(const mpq_class& q, int digits);
// Accepts "p/q", integers, decimals and scientific notation such as "1e-9".
mpq_class parse_rational(const std::string& text);

std::string write_certificate(const PFCertificate& c);

}  // namespace crosscap
