#include <catch_amalgamated.hpp>

#include <random>

#include "diacat/frobenius.hpp"

using namespace diacat;

namespace {

ErrorCode code_of(FrobeniusData f) {
  try {
    validate_frobenius(f);
  } catch (Error const& e) {
    return e.code();
  }
  return ErrorCode::invalid_argument;
}

// tr(dual_a * b_c) computed directly from the tables.
Rational pairing(FrobeniusData const& f, std::size_t a, std::size_t c) {
  Rational t = 0;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    for (std::size_t k = 0; k < f.dim(); ++k) {
      t += f.dual_basis[a][i] * f.mult[i][c][k] * f.trace[k];
    }
  }
  return t;
}

}  // namespace

TEST_CASE("cyclic group algebras") {
  for (int r = 1; r <= 5; ++r) {
    auto f = FrobeniusData::cyclic_group(r);
    validate_frobenius(f);
    for (int i = 0; i < r; ++i) {
      // the dual of g^i is g^{-i}
      auto expected = f.basis_element(std::size_t((r - i) % r));
      CHECK(f.dual_basis[std::size_t(i)] == expected);
      CHECK(teleport_check(f, f.basis_element(std::size_t(i))));
      for (int j = 0; j < r; ++j) {
        CHECK(pairing(f, std::size_t(i), std::size_t(j)) == (i == j ? 1 : 0));
      }
    }
  }
}

TEST_CASE("axiom failures are reported") {
  auto f = FrobeniusData::cyclic_group(2);
  auto bad = f;
  bad.trace = {0, 0};
  CHECK(code_of(bad) == ErrorCode::frobenius_degenerate);
  bad = f;
  bad.unit = {0, 1};
  CHECK(code_of(bad) == ErrorCode::frobenius_not_unital);
  bad = f;
  bad.mult.pop_back();
  CHECK(code_of(bad) == ErrorCode::frobenius_incomplete);
  // x*x = 1 + x on basis {1, x}: associative and commutative (golden ratio
  // algebra); with tr(1) = 0, tr(x) = 1 it is nondegenerate.
  FrobeniusData g{{"1", "x"}, {{{1, 0}, {0, 1}}, {{0, 1}, {1, 1}}}, {1, 0}, {0, 1}, {}};
  validate_frobenius(g);
  CHECK(teleport_check(g, g.basis_element(1)));
  // a non-associative table
  FrobeniusData h{{"1", "x", "y"},
                  {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                   {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}},
                   {{0, 0, 1}, {0, 0, 1}, {0, 1, 0}}},
                  {1, 0, 0},
                  {1, 0, 0},
                  {}};
  CHECK(code_of(h) == ErrorCode::frobenius_not_associative);
}

TEST_CASE("the canonical element does not depend on the basis") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int r = 2; r <= 4; ++r) {
    auto f = FrobeniusData::cyclic_group(r);
    validate_frobenius(f);
    auto before = canonical_element(f);
    for (int t = 0; t < 5; ++t) {
      Matrix p(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
      do {
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < r; ++j) p(std::size_t(i), std::size_t(j)) = d(rng);
        }
      } while (!p.inverse());
      auto g = change_basis(f, p);
      validate_frobenius(g);
      // coordinates change by P^{-1} on both tensor factors
      auto q = *p.inverse();
      CHECK(q.transpose() * before * q == canonical_element(g));
    }
  }
}
