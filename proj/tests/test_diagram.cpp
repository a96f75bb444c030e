#include <catch_amalgamated.hpp>

#include "diacat/diagram.hpp"
#include "diacat/dsl.hpp"
#include "diacat/presentation.hpp"

using namespace diacat;

TEST_CASE("interchange law holds structurally") {
  auto p = preset("AHDEG");
  auto x = p.diagram("x");
  auto s = p.diagram("s");
  auto one_up = Diagram::identity(ObjectWord("^"));
  auto one_2  = Diagram::identity(ObjectWord("^^"));
  auto a = compose(tensor(x, one_2), tensor(one_up, s));
  auto b = compose(tensor(one_up, s), tensor(x, one_2));
  CHECK(a == b);
  CHECK(a == tensor(x, s));
  CHECK(a.is_canonical());
}

TEST_CASE("distant crossings commute") {
  auto p = preset("S");
  CHECK(p.diagram("s * id(^^) ; id(^^) * s") == p.diagram("id(^^) * s ; s * id(^^)"));
  CHECK(p.diagram("s * id(^) ; id(^) * s") != p.diagram("id(^) * s ; s * id(^)"));
}

TEST_CASE("composition checks types") {
  auto p = preset("TL");
  auto cup = p.diagram("cup");
  auto cap = p.diagram("cap");
  auto circle = compose(cap, cup);
  CHECK(circle.dom().empty());
  CHECK(circle.cod().empty());
  CHECK_THROWS_AS(compose(cup, cup), Error);
  CHECK(compose(Diagram::identity(ObjectWord("^^")), cup) == cup);
}

TEST_CASE("linear combinations") {
  auto p = preset("HECKE");
  auto s = p.expr("s");
  auto one = p.expr("id(^^)");
  auto z = Scalar::monomial(p.params(), "z", 1, 1);
  auto lc = s + z * one;
  CHECK(lc.size() == 2);
  CHECK((lc - lc).is_zero());
  CHECK(lc.coefficient(p.diagram("id(^^)")) == z);
  auto sq = lc_compose(s, s);
  CHECK(sq.size() == 1);
  auto t = lc_tensor(s, p.expr("id(^)"));
  CHECK(t.dom() == ObjectWord("^^^"));
  CHECK(lc_substitute(lc, {{"z", 0}}) == s);
}

TEST_CASE("heights record every intermediate word") {
  auto p = preset("TL");
  auto d = p.diagram("cup ; cap");
  auto h = d.heights();
  REQUIRE(h.size() == 3);
  CHECK(h[1] == ObjectWord("^^"));
}
