#include <catch_amalgamated.hpp>

#include "diacat/presentation.hpp"

using namespace diacat;

namespace {
bool has_code(auto&& f, ErrorCode c) {
  try {
    f();
  } catch (Error const& e) {
    return e.code() == c;
  }
  return false;
}
}  // namespace

TEST_CASE("every preset builds and relations type-check") {
  for (auto const& name : preset_names()) {
    std::optional<int> r;
    if (name == "WREATH" || name == "AWREATH") r = 3;
    auto p = preset(name, r);
    CHECK(p.id() == name);
    CHECK(!p.relations().empty());
    for (auto const& rel : p.relations()) {
      CHECK(rel.lhs.dom() == rel.rhs.dom());
      CHECK(rel.lhs.cod() == rel.rhs.cod());
    }
  }
}

TEST_CASE("catalog lookups") {
  CHECK(preset("daha").id() == "AHDEG");
  CHECK(preset("s").strategy() == Strategy::SYM);
  CHECK(preset("HECKE").params().names() == std::vector<std::string>{"z"});
  CHECK(preset("TL").params().names() == std::vector<std::string>{"delta"});
  CHECK(has_code([] { preset("nope"); }, ErrorCode::unknown_preset));
  CHECK(has_code([] { preset("WREATH"); }, ErrorCode::missing_parameter));
  CHECK(preset("AWREATH", 2).frobenius().has_value());
  CHECK(!preset("S").frobenius().has_value());
}

TEST_CASE("oriented Brauer has no dot") {
  auto p = preset("OB");
  CHECK(p.signature().find("x") == nullptr);
  CHECK(p.signature().find("lcup") != nullptr);
}

TEST_CASE("coupons extend a presentation") {
  auto p = preset("OB").with_coupon("f", ObjectWord("^"), ObjectWord("^"));
  auto d = p.diagram("box[f] ; box[f]");
  CHECK(d.dom() == ObjectWord("^"));
  CHECK(preset("OB").signature().find("box") == nullptr);
}

TEST_CASE("the defined crossings are well typed") {
  auto p = preset("OB");
  for (std::string pair : {"^^", "^v", "v^", "vv"}) {
    auto d = p.diagram(ob_crossing(pair));
    CHECK(d.dom() == ObjectWord(pair));
    CHECK(d.cod() == ObjectWord(std::string{pair[1], pair[0]}));
  }
}
