#include <catch_amalgamated.hpp>

#include <random>

#include "diacat/matrix.hpp"

using namespace diacat;

namespace {
Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> d(-4, 4);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  }
  return m;
}
}  // namespace

TEST_CASE("products, traces and transposes") {
  std::mt19937 rng(7);
  for (int t = 0; t < 20; ++t) {
    auto a = random_matrix(rng, 3, 3);
    auto b = random_matrix(rng, 3, 3);
    CHECK((a * b).trace() == (b * a).trace());
    CHECK((a * b).transpose() == b.transpose() * a.transpose());
  }
}

TEST_CASE("inverse by exact elimination") {
  auto m   = Matrix::parse("2, 1; 1, 1");
  auto inv = m.inverse();
  REQUIRE(inv);
  CHECK(*inv == Matrix::parse("1, -1; -1, 2"));
  CHECK(!Matrix::parse("1, 2; 2, 4").inverse());
  CHECK(Matrix::parse("1, 2; 2, 4").rank() == 1);
  CHECK(Matrix::parse("1/2, 0; 0, -3").to_text() == "1/2, 0; 0, -3");
}

TEST_CASE("kronecker and block diagonal") {
  auto a = Matrix::parse("1, 2; 3, 4");
  auto i = Matrix::identity(2);
  auto k = kronecker(a, i);
  CHECK(k.rows() == 4);
  CHECK(k(0, 2) == 2);
  CHECK(k(1, 3) == 2);
  CHECK(k(2, 0) == 3);
  auto bd = block_diagonal(a, Matrix::identity(1));
  CHECK(bd.trace() == 6);
  CHECK(bd(2, 0) == 0);
  CHECK_THROWS_AS(Matrix::parse("1, ; 2"), ParseError);
}
