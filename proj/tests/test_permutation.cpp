#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "diacat/permutation.hpp"

using namespace diacat;

TEST_CASE("composition applies the right factor first") {
  Permutation f({1, 2, 0});
  Permutation g({0, 2, 1});
  auto h = f * g;
  for (int i = 0; i < 3; ++i) CHECK(h(i) == f(g(i)));
  CHECK((f * f.inverse()).is_identity());
}

TEST_CASE("all permutations, lengths and signs") {
  for (int n = 0; n <= 5; ++n) {
    auto all = all_permutations(n);
    CHECK(std::is_sorted(all.begin(), all.end()));
    std::set<Permutation> distinct(all.begin(), all.end());
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    CHECK(static_cast<long long>(distinct.size()) == fact);
    for (auto const& p : all) {
      int inv = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) inv += p(i) > p(j);
      }
      CHECK(p.length() == inv);
      CHECK(p.sign() == (inv % 2 ? -1 : 1));
      auto w = p.reduced_word();
      CHECK(static_cast<int>(w.size()) == inv);
      CHECK(Permutation::from_word(n, w) == p);
    }
  }
}

TEST_CASE("cycle types") {
  CHECK(Permutation({1, 0, 2}).cycle_type() == std::vector<int>{2, 1});
  CHECK(Permutation({1, 2, 0}).cycle_type() == std::vector<int>{3});
  CHECK(Permutation::identity(3).cycle_type() == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(Permutation({0, 0}), Error);
}
