#include <catch_amalgamated.hpp>

#include <random>

#include "diacat/dsl.hpp"
#include "diacat/presentation.hpp"
#include "diacat/rewrite.hpp"

using namespace diacat;

TEST_CASE("rendering round trips") {
  std::mt19937_64 rng(11);
  for (auto name : {"S", "AHDEG", "HECKE", "TL", "OB"}) {
    auto p = preset(name);
    for (int t = 0; t < 50; ++t) {
      ObjectWord dom(name == std::string("OB") ? "^v^" : "^^^");
      auto d    = random_diagram(p, dom, 6, rng);
      auto text = render(d);
      CHECK(parse_diagram(p.signature(), text) == d);
      CHECK(render(parse_diagram(p.signature(), text)) == text);
    }
  }
}

TEST_CASE("coefficients and sums") {
  auto p  = preset("HECKE");
  auto lc = p.expr("{z^2 - 1} s + {1/2} id(^^) + s");
  CHECK(lc.size() == 2);
  CHECK(p.expr(render(lc)) == lc);
  CHECK(render(p.expr("s - s")) == "0");
}

TEST_CASE("syntax errors report offsets") {
  auto p = preset("S");
  try {
    p.expr("s ;; s");
    FAIL("expected an error");
  } catch (ParseError const& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(p.expr("s ; (s"), ParseError);
  CHECK_THROWS_AS(p.expr("t"), Error);
}

TEST_CASE("type errors") {
  auto p = preset("S");
  try {
    p.expr("s ; id(^)");
    FAIL("expected an error");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::type_mismatch);
    CHECK(std::string(e.what()).find("height 1") != std::string::npos);
  }
  auto ob = preset("OB");
  CHECK(ob.diagram("lcup ; rcap") == ob.diagram("lcup ; cap"));
}

TEST_CASE("labelled generators") {
  auto w = preset("WREATH", 3);
  CHECK(render(w.diagram("tok[g1] ; tok[g2]")) == "tok[g1] ; tok[g2]");
  CHECK_THROWS_AS(w.diagram("tok[g7]"), Error);
}
