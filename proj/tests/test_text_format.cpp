#include "doctest.h"
#include "fixtures.hpp"

#include "crosscap/errors.hpp"
#include "crosscap/family.hpp"
#include "crosscap/text_format.hpp"

using namespace crosscap;

TEST_CASE("torus document round trip") {
  auto s = fixtures::torus();
  PennerWord w{{Twist{"a", 1}, Twist{"b", -1}}, s.basis()};
  auto text = serialize(s, w);
  auto doc = parse_curve_document(text);
  REQUIRE(doc.word);
  CHECK(*doc.word == w);
  CHECK(doc.system.realization() == s.realization());
  CHECK(serialize(doc.system, doc.word) == text);
}

TEST_CASE("family document round trip is byte identical") {
  auto inst = make_instance(1, 3);
  auto w = build_f_word(inst);
  auto text = serialize(inst.system, w);
  auto doc = parse_curve_document(text);
  CHECK(serialize(doc.system, doc.word) == text);
  CHECK(doc.system.symmetries().size() == inst.system.symmetries().size());
}

TEST_CASE("comments and blank lines are ignored") {
  auto text = serialize(fixtures::torus());
  auto doc = parse_curve_document("# leading comment\n\n" + text);
  CHECK(serialize(doc.system) == text);
}

TEST_CASE("malformed documents are parse errors") {
  CHECK_THROWS_AS(parse_curve_document(""), ParseError);
  CHECK_THROWS_AS(parse_curve_document("crosscap-curves 2\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_curve_document("crosscap-curves 1\nvertex 0 0 1\nedge 0 1 x\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_curve_document("crosscap-curves 1\nvertex 1 0 1\nend\n"), ParseError);
  CHECK_THROWS_AS(parse_curve_document("crosscap-curves 1\nvertex 0 0 1\nedge 0 1 +\n"), ParseError);
  CHECK_THROWS_AS(parse_curve_document("crosscap-curves 1\nbogus 1\nend\n"), ParseError);
}

TEST_CASE("graph body round trip") {
  SignedRibbonGraph g({{0, 1, 2, 3}}, {{2, 0, 1}, {3, 1, -1}}, {FaceMark{{0, -1}, 2, true}}, {Dart{1, 1}});
  auto body = serialize_graph_body(g);
  CHECK(parse_graph_body(body) == g);
}
