#include "doctest.h"
#include "fixtures.hpp"
#include "oracle.hpp"

#include "crosscap/cover.hpp"
#include "crosscap/errors.hpp"
#include "crosscap/family.hpp"

using namespace crosscap;

TEST_CASE("klein bottle covers the torus") {
  auto s = fixtures::klein_bottle();
  auto dc = double_cover(s.realization());
  auto sig = surface_signature(dc.total);
  CHECK(sig.orientable);
  CHECK(sig.genus == 1);
  for (const auto& e : dc.total.edges()) CHECK(e.sign == 1);
  CHECK(lift_curve(dc, s, "a").two_sided());
  auto b = lift_curve(dc, s, "b");
  CHECK_FALSE(b.two_sided());
  CHECK(b.lengths == std::vector<int>{2});
}

TEST_CASE("projective plane covers the sphere") {
  auto dc = double_cover(fixtures::projective_plane());
  auto sig = surface_signature(dc.total);
  CHECK(sig.orientable);
  CHECK(sig.genus == 0);
}

TEST_CASE("orientable base covers by two copies") {
  auto dc = double_cover(fixtures::torus().realization());
  CHECK_FALSE(is_connected(dc.total));
  auto cs = cover_signature(surface_signature(fixtures::torus().realization()));
  CHECK(cs.components == 2);
  CHECK_THROWS_AS(double_cover(fixtures::two_spheres()), StructuralError);
}

TEST_CASE("cover maps are consistent") {
  auto g = fixtures::klein_bottle().realization();
  auto dc = double_cover(g);
  for (int h = 0; h < dc.total.half_edge_count(); ++h) {
    CHECK(dc.involution[dc.involution[h]] == h);
    CHECK(dc.involution[h] != h);
    CHECK(dc.projection[dc.involution[h]] == dc.projection[h]);
    CHECK(g.partner(dc.projection[h]) == dc.projection[dc.total.partner(h)]);
  }
  auto text = serialize_cover(dc);
  auto back = parse_cover(text);
  CHECK(back.total == dc.total);
  CHECK(serialize_cover(back) == text);
  CHECK_THROWS_AS(parse_cover("crosscap-cover 2\nend\n"), ParseError);
}

TEST_CASE("family cover signature") {
  auto inst = make_instance(1, 3);
  auto base = surface_signature(inst.system.realization());
  auto dc = double_cover(inst.system.realization());
  auto total = surface_signature(dc.total);
  auto predicted = cover_signature(base);
  CHECK(total.orientable);
  CHECK(total.genus == 41);
  CHECK(total.euler_characteristic == 2 * base.euler_characteristic);
  CHECK(total.marked_points == 2 * base.marked_points);
  CHECK(predicted.components == 1);
  CHECK(predicted.signature == total);
  auto o = oracle::flag_counts(dc.total);
  CHECK(o.orientable);
  CHECK(o.euler() == total.euler_characteristic);
}

TEST_CASE("lifted system and word") {
  auto inst = make_instance(1, 3);
  auto dc = double_cover(inst.system.realization());
  auto lifted = lift_system(dc, inst.system);
  CHECK(lifted.size() == 2 * inst.system.size());
  CHECK(lifted.find(lift_name("a1_0_0", 1)).has_value());
  auto w = lift_word(inst.system, lifted, build_f_word(inst));
  long twists = 0;
  for (const auto& m : w.moves) twists += std::holds_alternative<Twist>(m);
  CHECK(twists == 30);
  auto m = word_matrix(lifted, w).entries;
  auto base_m = word_matrix(inst.system, build_f_word(inst)).entries;
  CHECK(oracle::spectral_radius(m) == doctest::Approx(oracle::spectral_radius(base_m)).epsilon(1e-9));
}

TEST_CASE("one-sided curves cannot be lifted into twists") {
  auto s = fixtures::klein_bottle();
  auto dc = double_cover(s.realization());
  auto lifted = lift_system(dc, s);
  CHECK(lifted.size() == 3);
  CHECK_THROWS_AS(lift_word(s, lifted, PennerWord{{Twist{"b", 1}}, s.basis()}), TwistForbidden);
}

TEST_CASE("lower bound transport") {
  CHECK(lower_bound_report(3, 1, mpq_class(1)) == mpq_class(1, 2));
  CHECK(lower_bound_report(42, 1, mpq_class(41)) == 1);
  CHECK_THROWS_AS(lower_bound_report(2, 1, mpq_class(1)), ParameterError);
}
