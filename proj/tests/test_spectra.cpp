#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "crosscap/errors.hpp"
#include "crosscap/spectra.hpp"

using namespace crosscap;

namespace {
IntMatrix from(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int r = 0;
  for (auto row : rows) {
    int c = 0;
    for (int x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}
const mpq_class kGap(1, 1000000000);
}  // namespace

TEST_CASE("primitive matrix certificate") {
  auto m = from({{2, 1}, {1, 1}});
  auto c = pf_eigenvalue(m, kGap);
  CHECK(c.primitive);
  CHECK_FALSE(c.reducible);
  CHECK(c.upper - c.lower <= kGap);
  CHECK(c.lower <= c.upper);
  auto [lo, hi] = collatz_wielandt(m, c.witness);
  CHECK(lo == c.lower);
  CHECK(hi == c.upper);
}

TEST_CASE("periodic matrix converges") {
  auto m = from({{0, 2}, {3, 0}});
  auto c = pf_eigenvalue(m, kGap);
  CHECK_FALSE(c.primitive);
  CHECK(c.lower.get_d() == doctest::Approx(std::sqrt(6.0)).epsilon(1e-9));
}

TEST_CASE("reducible matrix uses its dominant block") {
  auto m = from({{1, 0, 0}, {5, 3, 1}, {0, 1, 3}});
  auto c = pf_eigenvalue(m, kGap);
  CHECK(c.reducible);
  CHECK(c.dominant == std::vector<int>{1, 2});
  CHECK(c.lower.get_d() == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(strongly_connected_components(m).size() == 2);
}

TEST_CASE("nilpotent matrix is degenerate") {
  auto c = pf_eigenvalue(from({{0, 1}, {0, 0}}), kGap);
  CHECK(c.degenerate);
  CHECK(c.upper == 0);
}

TEST_CASE("bad inputs are rejected") {
  CHECK_THROWS_AS(pf_eigenvalue(from({{1, -1}, {0, 1}}), kGap), ParameterError);
  CHECK_THROWS_AS(pf_eigenvalue(from({{1, 1}}), kGap), ParameterError);
  CHECK_THROWS_AS(pf_eigenvalue(from({{1}}), mpq_class(0)), ParameterError);
  CHECK_THROWS_AS(collatz_wielandt(from({{1}}), {mpz_class(0)}), ValidationError);
}

TEST_CASE("primitivity exponent") {
  auto p = primitivity(from({{0, 1}, {1, 1}}));
  CHECK(p.irreducible);
  CHECK(p.primitive);
  CHECK(p.exponent == 2);
  CHECK_FALSE(primitivity(from({{0, 1}, {1, 0}})).primitive);
}

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("1e-9") == mpq_class(1, 1000000000));
  CHECK(parse_rational("3/6") == mpq_class(1, 2));
  CHECK(parse_rational("2.5") == mpq_class(5, 2));
  CHECK(parse_rational("-4") == mpq_class(-4));
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e"), ParseError);
  CHECK(rational_string(mpq_class(6, 4)) == "3/2");
  CHECK(rational_string(mpq_class(7)) == "7");
  CHECK(decimal_string(mpq_class(1, 3), 4) == "0.3333");
}

TEST_CASE("certificates agree with the dense oracle") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto m = fixtures::random_irreducible(rng, 6, 4, 0.3);
    auto c = pf_eigenvalue(m, kGap);
    double rho = oracle::spectral_radius(m);
    CHECK(c.lower.get_d() <= rho + 1e-9);
    CHECK(c.upper.get_d() >= rho - 1e-9);
  }
}
