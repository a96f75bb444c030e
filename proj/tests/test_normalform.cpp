#include <catch_amalgamated.hpp>

#include <set>

#include "diacat/normalform.hpp"
#include "oracles.hpp"

using namespace diacat;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

Diagram tl_generator(Presentation const& p, std::string const& name, int i, int n) {
  return Diagram::generator(p.signature().instance(name), ObjectWord::repeat('^', i),
                            ObjectWord::repeat('^', n - i - 2));
}

// E_i = cup_i o cap_i on n strands.
Diagram tl_e(Presentation const& p, int i, int n) {
  return compose(tl_generator(p, "cup", i, n), tl_generator(p, "cap", i, n));
}

Scalar z_poly(ParamSet const& ps, oracle::ZPoly const& poly) {
  Scalar s = Scalar::zero(ps);
  for (auto const& [k, c] : poly) s += Scalar::monomial(ps, "z", k, c);
  return s;
}

}  // namespace

TEST_CASE("symmetric group: basis size and products") {
  auto p = preset("S");
  for (int n = 0; n <= 4; ++n) {
    auto b = basis(p, n);
    CHECK(b.size() == oracle::bijections(n).size());
    for (auto const& x : b) {
      for (auto const& y : b) {
        auto prod = multiply(p, x, y);
        auto const& px = std::get<Permutation>(x);
        auto const& py = std::get<Permutation>(y);
        Permutation expected(oracle::compose(px.images(), py.images()));
        CHECK(prod == LinearCombination::of(embed(p, expected), p.params()));
      }
    }
  }
}

TEST_CASE("basis diagrams are their own normal forms") {
  std::vector<std::pair<Presentation, std::optional<int>>> cases = {
      {preset("S"), std::nullopt},      {preset("AHDEG"), 2},
      {preset("HECKE"), std::nullopt},  {preset("WREATH", 2), std::nullopt},
      {preset("AWREATH", 2), 1},        {preset("TL"), std::nullopt},
      {preset("OB"), std::nullopt}};
  for (auto const& [p, d] : cases) {
    for (int n = 0; n <= 3; ++n) {
      auto b = basis(p, n, d);
      std::set<Diagram> distinct;
      for (auto const& e : b) {
        auto diag = embed(p, e);
        distinct.insert(diag);
        CHECK(normalize(p, diag) == LinearCombination::of(diag, p.params()));
        auto back = recognize(p, diag);
        REQUIRE(back);
        CHECK(*back == e);
      }
      CHECK(distinct.size() == b.size());
    }
  }
}

TEST_CASE("Temperley-Lieb dimensions against noncrossing matchings") {
  auto p = preset("TL");
  for (int n = 0; n <= 5; ++n) {
    long long count = 0;
    for (auto const& m : oracle::perfect_matchings(2 * n)) count += oracle::noncrossing(m, n);
    CHECK(count == oracle::catalan(n));
    CHECK(hom_dim(p, n) == std::size_t(count));
  }
}

TEST_CASE("Temperley-Lieb products follow matching composition") {
  auto p     = preset("TL");
  auto delta = Scalar::monomial(p.params(), "delta", 1, 1);
  for (int n = 1; n <= 4; ++n) {
    auto b = basis(p, n);
    for (auto const& x : b) {
      for (auto const& y : b) {
        auto const& mx = std::get<Matching>(x);
        auto const& my = std::get<Matching>(y);
        auto g = oracle::glue(my.partner, n, n, mx.partner, n);
        Matching expected{mx.dom, mx.cod, g.partner};
        Scalar c = Scalar::one(p.params());
        for (int k = 0; k < g.loops; ++k) c *= delta;
        CHECK(multiply(p, x, y) == LinearCombination::of(embed(p, expected), c));
      }
    }
  }
}

TEST_CASE("Temperley-Lieb relations") {
  auto p     = preset("TL");
  auto delta = Scalar::monomial(p.params(), "delta", 1, 1);
  CHECK(normalize(p, p.diagram("cup ; cap"))
        == LinearCombination::of(Diagram::identity(ObjectWord()), delta));
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i + 1 < n; ++i) {
      auto e = tl_e(p, i, n);
      CHECK(normalize(p, compose(e, e)) == LinearCombination::of(e, delta));
      for (int j : {i - 1, i + 1}) {
        if (j < 0 || j + 1 >= n) continue;
        auto f = tl_e(p, j, n);
        CHECK(normalize(p, compose(e, compose(f, e))) == LinearCombination::of(e, p.params()));
      }
    }
  }
}

TEST_CASE("wreath dimensions") {
  for (int r = 1; r <= 3; ++r) {
    auto p = preset("WREATH", r);
    for (int n = 0; n <= 3; ++n) {
      long long tuples = 1;
      for (int i = 0; i < n; ++i) tuples *= r;
      CHECK(hom_dim(p, n) == std::size_t(tuples * oracle::factorial(n)));
    }
  }
}

TEST_CASE("token products and slides in the wreath category") {
  auto p = preset("WREATH", 3);
  CHECK(normalize(p, p.diagram("tok[g1] ; tok[g2]")) == p.expr("id(^)"));
  CHECK(normalize(p, p.diagram("tok[g2] ; tok[g2]")) == p.expr("tok[g1]"));
  // a token on the left strand below the crossing ends on the right strand
  auto slid = normalize(p, p.diagram("s ; id(^) * tok[g1]"));
  CHECK(slid == p.expr("tok[g1] * id(^) ; s"));
}

TEST_CASE("dot and crossing in the degenerate affine Hecke category") {
  auto p = preset("AHDEG");
  CHECK(normalize(p, p.diagram("s ; x * id(^)")) == p.expr("id(^) * x ; s + id(^^)"));
  CHECK(normalize(p, p.diagram("s ; id(^) * x")) == p.expr("x * id(^) ; s - id(^^)"));
  for (int n = 1; n <= 3; ++n) {
    for (int d = 0; d <= 2; ++d) {
      CHECK(hom_dim(p, n, d)
            == std::size_t(oracle::factorial(n) * oracle::binomial(n + d, n)));
    }
  }
  CHECK(code_of([&] { basis(p, 2); }) == ErrorCode::missing_parameter);
}

TEST_CASE("affine wreath dot relation carries the canonical element") {
  auto p = preset("AWREATH", 2);
  CHECK(normalize(p, p.diagram("s ; x * id(^)"))
        == p.expr("id(^) * x ; s + id(^^) + tok[g1] * tok[g1]"));
  CHECK(normalize(p, p.diagram("s ; id(^) * x"))
        == p.expr("x * id(^) ; s - id(^^) - tok[g1] * tok[g1]"));
  CHECK(hom_dim(p, 2, 1) == 4 * 2 * 3);
}

TEST_CASE("Hecke products against a length-based oracle") {
  auto p = preset("HECKE");
  CHECK(normalize(p, p.diagram("s ; s")) == p.expr("{z} s + id(^^)"));
  CHECK(normalize(p, p.diagram("si")) == p.expr("s - {z} id(^^)"));
  CHECK(normalize(p, p.diagram("s ; si")) == p.expr("id(^^)"));
  for (int n = 1; n <= 3; ++n) {
    auto b = basis(p, n);
    for (auto const& x : b) {
      for (auto const& y : b) {
        auto expected = oracle::hecke_product(std::get<Permutation>(x).images(),
                                              std::get<Permutation>(y).images());
        LinearCombination lc(ObjectWord::repeat('^', n), ObjectWord::repeat('^', n),
                             p.params());
        for (auto const& [w, poly] : expected) {
          lc.add(embed(p, Permutation(w)), z_poly(p.params(), poly));
        }
        CHECK(multiply(p, x, y) == lc);
      }
    }
  }
}

TEST_CASE("Hecke at z = 0 is the symmetric group") {
  for (int n = 1; n <= 3; ++n) CHECK(specialize_hecke_to_sym(n).ok());
}

TEST_CASE("free braid reduction") {
  auto p = preset("BRAID");
  CHECK(normalize(p, p.diagram("s ; si")) == p.expr("id(^^)"));
  CHECK(normalize(p, p.diagram("s * id(^) ; id(^) * s ; si * id(^)")) != p.expr("id(^^^)"));
  auto d = p.diagram("s * id(^) ; id(^) * s ; id(^) * si ; s * id(^)");
  CHECK(normalize(p, d) == LinearCombination::of(p.diagram("s * id(^) ; s * id(^)"),
                                                 p.params()));
  CHECK(code_of([&] { basis(p, 2); }) == ErrorCode::unsupported_hom);
}

TEST_CASE("oriented Brauer: bubbles, zigzags and mixed hom spaces") {
  auto p     = preset("OB");
  auto delta = Scalar::monomial(p.params(), "delta", 1, 1);
  auto one   = Diagram::identity(ObjectWord());
  CHECK(normalize(p, p.diagram("lcup ; cap")) == LinearCombination::of(one, delta));
  CHECK(normalize(p, p.diagram("cup ; lcap")) == LinearCombination::of(one, delta));
  CHECK(normalize(p, p.diagram("cup * id(v) ; id(v) * cap")) == p.expr("id(v)"));
  CHECK(normalize(p, p.diagram("lcup * id(^) ; id(^) * lcap")) == p.expr("id(^)"));
  CHECK(hom_dim(p, 3) == 6);
  // a curl is a straight strand
  CHECK(normalize(p, p.diagram("id(^) * lcup ; s * id(v) ; id(^) * cap"))
        == p.expr("id(^)"));
  // End(^v) has dimension 2
  auto cc = p.diagram("cap ; lcup");
  auto nf = normalize(p, compose(cc, cc));
  CHECK(nf == LinearCombination::of(cc, delta));
}

TEST_CASE("structure tables") {
  auto p = preset("S");
  auto t = structure_table(p, 3);
  CHECK(t.basis.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      REQUIRE(t.table[i][j].size() == 1);
      auto const& [k, c] = t.table[i][j][0];
      CHECK(c == Scalar::one(p.params()));
      auto expected = oracle::compose(std::get<Permutation>(t.basis[i]).images(),
                                      std::get<Permutation>(t.basis[j]).images());
      CHECK(std::get<Permutation>(t.basis[k]).images() == expected);
    }
  }
  CHECK(code_of([] { structure_table(preset("AHDEG"), 2); }) == ErrorCode::unsupported_hom);
}

TEST_CASE("hom spaces between different words") {
  auto tl = preset("TL");
  auto nf = normalize(tl, tl.diagram("cup * cup ; id(^) * cap * id(^)"));
  CHECK(nf == tl.expr("cup"));
  auto ob = preset("OB");
  CHECK(normalize(ob, ob.diagram("cup ; id(v) * lcup * id(^) ; id(v) * cap * id(^)"))
        == ob.expr("{delta} cup"));
}
