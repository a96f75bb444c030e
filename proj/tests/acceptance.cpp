// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "diacat.hpp"
#include "oracles.hpp"

using namespace diacat;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, std::string const& what) {
    if (!cond && ok) {
      ok     = false;
      detail = what;
    }
  }
};

LinearCombination placed(LinearCombination const& f, int left, int right,
                         ParamSet const& ps) {
  auto l = LinearCombination::of(Diagram::identity(ObjectWord::repeat('^', left)), ps);
  auto r = LinearCombination::of(Diagram::identity(ObjectWord::repeat('^', right)), ps);
  return lc_tensor(lc_tensor(l, f), r);
}

std::string perm_text(std::vector<int> const& v) { return Permutation(v).to_text(); }

// 1. structure constants of End_S(^n) against composition in kS_n
Outcome criterion1() {
  Outcome out;
  auto p = preset("S");
  for (int n = 2; n <= 5; ++n) {
    auto t = structure_table(p, n);
    out.expect(t.basis.size() == oracle::bijections(n).size(), "basis size");
    for (std::size_t i = 0; i < t.basis.size(); ++i) {
      for (std::size_t j = 0; j < t.basis.size(); ++j) {
        auto const& cell = t.table[i][j];
        auto expected = oracle::compose(std::get<Permutation>(t.basis[i]).images(),
                                        std::get<Permutation>(t.basis[j]).images());
        bool ok = cell.size() == 1 && cell[0].second == Scalar::one(p.params())
                  && std::get<Permutation>(t.basis[cell[0].first]).images() == expected;
        out.expect(ok, "n=" + std::to_string(n) + " product " + perm_text(expected));
      }
    }
  }
  return out;
}

// 2. dimension tables against brute-force enumeration
Outcome criterion2() {
  Outcome out;
  auto s = preset("S");
  for (int n = 0; n <= 6; ++n) {
    out.expect(hom_dim(s, n) == oracle::bijections(n).size(), "S n=" + std::to_string(n));
  }
  auto tl = preset("TL");
  std::vector<long long> catalan{1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) {
    long long count = 0;
    for (auto const& m : oracle::perfect_matchings(2 * n)) count += oracle::noncrossing(m, n);
    out.expect(count == catalan[n], "noncrossing count n=" + std::to_string(n));
    out.expect(hom_dim(tl, n) == std::size_t(count), "TL n=" + std::to_string(n));
  }
  for (int r = 1; r <= 3; ++r) {
    auto w = preset("WREATH", r);
    for (int n = 0; n <= 4; ++n) {
      // token assignments: all maps {strands} -> {0..r-1}
      long long tokens = 0;
      std::vector<int> f(n, 0);
      while (true) {
        ++tokens;
        int i = 0;
        while (i < n && ++f[i] == r) f[i++] = 0;
        if (i == n) break;
      }
      long long expected = tokens * static_cast<long long>(oracle::bijections(n).size());
      out.expect(hom_dim(w, n) == std::size_t(expected),
                 "WREATH r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
  }
  return out;
}

// 3. relations of the degenerate affine Hecke category in the gl_m model
Outcome criterion3() {
  Outcome out;
  auto p = preset("AHDEG");
  for (int m = 1; m <= 3; ++m) {
    for (int extra = 0; extra <= 1; ++extra) {
      auto model = model_daha(m, extra);
      for (int n = 1; n <= 3; ++n) {
        for (auto const& rel : p.relations()) {
          int w = int(rel.lhs.dom().size());
          for (int left = 0; left + w <= n; ++left) {
            auto lhs = placed(LinearCombination::of(rel.lhs, p.params()), left,
                              n - left - w, p.params());
            auto rhs = placed(rel.rhs, left, n - left - w, p.params());
            out.expect(eval(model, lhs) == eval(model, rhs),
                       rel.name + " m=" + std::to_string(m) + " n=" + std::to_string(n)
                           + " p=" + std::to_string(extra));
          }
        }
      }
    }
  }
  return out;
}

// 4. Hecke at z = 0 equals the symmetric group
Outcome criterion4() {
  Outcome out;
  for (int n = 1; n <= 4; ++n) {
    auto r = specialize_hecke_to_sym(n);
    out.expect(r.ok() && r.compared == std::size_t(oracle::factorial(n) * oracle::factorial(n)),
               "n=" + std::to_string(n));
  }
  return out;
}

Matrix random_square(std::mt19937_64& rng, std::size_t m) {
  Matrix f(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      f(i, j) = Rational(long(rng() % 11) - 5, long(1 + rng() % 3));
      f(i, j).canonicalize();
    }
  }
  return f;
}

// 5. zigzags, equal mates and contravariance in the duality model
Outcome criterion5() {
  Outcome out;
  std::mt19937_64 rng(505);
  auto p = preset("OB");
  for (int m = 1; m <= 4; ++m) {
    auto model = model_ob(m);
    for (auto const& rel : p.relations()) {
      out.expect(eval(model, LinearCombination::of(rel.lhs, p.params())) == eval(model, rel.rhs),
                 rel.name + " m=" + std::to_string(m));
    }
    for (int t = 0; t < 5; ++t) {
      auto f = random_square(rng, std::size_t(m));
      out.expect(left_mate(model, f) == right_mate(model, f), "equal mates");
    }
  }
  for (int t = 0; t < 20; ++t) {
    int m      = 1 + int(rng() % 4);
    auto model = model_ob(m);
    auto f     = random_square(rng, std::size_t(m));
    auto g     = random_square(rng, std::size_t(m));
    out.expect(right_mate(model, f * g) == right_mate(model, g) * right_mate(model, f),
               "contravariance");
  }
  return out;
}

// 6. closing up with a cup and a cap gives the trace
Outcome criterion6() {
  Outcome out;
  std::mt19937_64 rng(606);
  for (int t = 0; t < 50; ++t) {
    int m  = 1 + int(rng() % 4);
    auto f = random_square(rng, std::size_t(m));
    out.expect(bubble_trace(model_ob(m), f) == f.trace(), "bubble vs trace");
  }
  auto p = preset("OB");
  for (int m = 1; m <= 4; ++m) {
    out.expect(bubble_trace(model_ob(m), Matrix::identity(std::size_t(m))) == m, "identity");
    out.expect(eval(model_ob(m), p.diagram("lcup ; cap"))(0, 0) == m, "circle");
  }
  return out;
}

Diagram tl_e(Presentation const& p, int i, int n) {
  auto left  = ObjectWord::repeat('^', i);
  auto right = ObjectWord::repeat('^', n - i - 2);
  return compose(Diagram::generator(p.signature().instance("cup"), left, right),
                 Diagram::generator(p.signature().instance("cap"), left, right));
}

std::vector<int> e_matching(int i, int n) {
  std::vector<int> partner(2 * n);
  for (int k = 0; k < n; ++k) {
    partner[k]     = n + k;
    partner[n + k] = k;
  }
  partner[i]         = i + 1;
  partner[i + 1]     = i;
  partner[n + i]     = n + i + 1;
  partner[n + i + 1] = n + i;
  return partner;
}

// 7. Temperley-Lieb relations against matching composition
Outcome criterion7() {
  Outcome out;
  auto p     = preset("TL");
  auto delta = Scalar::monomial(p.params(), "delta", 1, 1);
  out.expect(normalize(p, p.diagram("cup ; cap"))
                 == LinearCombination::of(Diagram::identity(ObjectWord()), delta),
             "circle");
  auto word = [](int n) { return ObjectWord::repeat('^', n); };
  for (int n = 2; n <= 5; ++n) {
    auto check = [&](std::vector<int> const& seq) {
      // oracle: glue the matchings bottom to top
      std::vector<int> partner = e_matching(seq[0], n);
      int loops = 0;
      Diagram d = tl_e(p, seq[0], n);
      for (std::size_t k = 1; k < seq.size(); ++k) {
        auto g  = oracle::glue(partner, n, n, e_matching(seq[k], n), n);
        partner = g.partner;
        loops += g.loops;
        d = compose(tl_e(p, seq[k], n), d);
      }
      Scalar c = Scalar::one(p.params());
      for (int k = 0; k < loops; ++k) c *= delta;
      auto expected = embed(p, Matching{word(n), word(n), partner});
      return normalize(p, d) == LinearCombination::of(expected, c);
    };
    for (int i = 0; i + 1 < n; ++i) {
      auto e = tl_e(p, i, n);
      out.expect(check({i, i}), "E_i^2 oracle");
      out.expect(normalize(p, compose(e, e)) == LinearCombination::of(e, delta), "E_i^2");
      for (int j : {i - 1, i + 1}) {
        if (j < 0 || j + 1 >= n) continue;
        out.expect(check({i, j, i}), "E_i E_j E_i oracle");
        out.expect(normalize(p, compose(e, compose(tl_e(p, j, n), e)))
                       == LinearCombination::of(e, p.params()),
                   "E_i E_j E_i");
      }
    }
  }
  return out;
}

// k[x]/(f) with f monic of degree d, and a trace functional.
FrobeniusData quotient_algebra(std::vector<Rational> const& f, std::vector<Rational> const& tr) {
  std::size_t d = f.size();
  FrobeniusData a;
  for (std::size_t i = 0; i < d; ++i) a.basis.push_back("x" + std::to_string(i));
  // powers[k] = x^k reduced, for k < 2d
  std::vector<AlgebraElement> powers;
  for (std::size_t k = 0; k < 2 * d; ++k) {
    AlgebraElement v(d);
    if (k < d) {
      v[k] = 1;
    } else {
      auto const& prev = powers[k - 1];
      // x * prev, with x^d = -sum f_i x^i
      for (std::size_t i = 0; i + 1 < d; ++i) v[i + 1] += prev[i];
      for (std::size_t i = 0; i < d; ++i) v[i] -= prev[d - 1] * f[i];
    }
    powers.push_back(v);
  }
  a.mult.assign(d, std::vector<AlgebraElement>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) a.mult[i][j] = powers[i + j];
  }
  a.unit  = powers[0];
  a.trace = tr;
  return a;
}

// 8. teleport identity
Outcome criterion8() {
  Outcome out;
  for (int r = 1; r <= 5; ++r) {
    auto f = FrobeniusData::cyclic_group(r);
    validate_frobenius(f);
    for (std::size_t b = 0; b < f.dim(); ++b) {
      out.expect(teleport_check(f, f.basis_element(b)), "Z/" + std::to_string(r));
    }
  }
  std::mt19937_64 rng(808);
  int made = 0;
  while (made < 10) {
    std::size_t d = 1 + rng() % 3;
    std::vector<Rational> f(d), tr(d);
    for (auto& c : f) c = long(rng() % 7) - 3;
    for (auto& c : tr) c = long(rng() % 7) - 3;
    auto a = quotient_algebra(f, tr);
    Matrix change(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) change(i, j) = long(rng() % 5) - 2;
    }
    if (!change.inverse()) continue;
    try {
      validate_frobenius(a);
    } catch (Error const& e) {
      if (e.code() == ErrorCode::frobenius_degenerate) continue;
      throw;
    }
    auto scrambled = change_basis(a, change);
    ++made;
    for (auto const* alg : {&a, &scrambled}) {
      for (std::size_t b = 0; b < d; ++b) {
        out.expect(teleport_check(*alg, alg->basis_element(b)), "random algebra");
      }
      AlgebraElement x(d);
      for (auto& c : x) c = long(rng() % 9) - 4;
      out.expect(teleport_check(*alg, x), "random element");
    }
  }
  return out;
}

// 9. Young idempotents, ranks and induced products
Outcome criterion9() {
  Outcome out;
  for (int n = 1; n <= 4; ++n) {
    for (auto const& l : partitions(n)) {
      for (auto const& t : standard_tableaux(l)) {
        auto e = young_idempotent(l, t);
        out.expect(e * e == e, "idempotent " + partition_text(l));
        out.expect(ideal_rank(e) == std::size_t(hook_length_dim(l)), "rank " + partition_text(l));
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    long long sum = 0;
    for (auto const& l : partitions(n)) {
      auto e = young_idempotent(l);
      auto k = ideal_rank(e);
      sum += static_cast<long long>(k * k);
    }
    out.expect(sum == oracle::factorial(n), "sum of squares n=" + std::to_string(n));
  }
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; m + n <= 5; ++n) {
      for (auto const& l : partitions(m)) {
        for (auto const& mu : partitions(n)) {
          auto expected = oracle::binomial(m + n, m) * hook_length_dim(l) * hook_length_dim(mu);
          out.expect(induced_product_dim(l, mu) == std::size_t(expected),
                     "induced " + partition_text(l) + " x " + partition_text(mu));
        }
      }
    }
  }
  return out;
}

// 10. trace additivity and the Chern character
Outcome criterion10() {
  Outcome out;
  std::mt19937_64 rng(1010);
  for (int t = 0; t < 50; ++t) {
    auto f = random_square(rng, 1 + rng() % 4);
    auto g = random_square(rng, rng() % 4);
    out.expect(trace_sum_check(f, g), "block trace");
    out.expect(trace_vect(block_diagonal(f, g)) == f.trace() + g.trace(), "block trace value");
  }
  for (long long a = 0; a <= 6; ++a) {
    for (long long b = 0; b <= 6; ++b) {
      out.expect(chern_vect(a + b).reduced == chern_vect(a).reduced + chern_vect(b).reduced,
                 "chern");
      out.expect(chern_vect(a).reduced == Rational(long(k0_vect({{1, a}}))), "chern vs K0");
    }
  }
  return out;
}

std::optional<ModelAssignment> model_of(Presentation const& p, int m) {
  switch (p.strategy()) {
    case Strategy::SYM: return model_sym(m);
    case Strategy::DAHA: return model_daha(m, 1);
    case Strategy::TL: return model_tl(m);
    case Strategy::OB: return model_ob(m);
    default: return std::nullopt;
  }
}

// 11. random rewrite orders reach the deterministic normal form
Outcome criterion11() {
  Outcome out;
  std::mt19937_64 rng(1111);
  std::vector<Presentation> presets = {preset("S"),          preset("AHDEG"),
                                       preset("BRAID"),      preset("HECKE"),
                                       preset("WREATH", 2),  preset("AWREATH", 2),
                                       preset("TL"),         preset("OB")};
  for (auto const& p : presets) {
    bool endo  = p.strategy() != Strategy::TL && p.strategy() != Strategy::OB;
    auto model = model_of(p, 2);
    for (int t = 0; t < 1000; ++t) {
      int n      = 1 + int(rng() % 4);
      int length = 1 + int(rng() % 8);
      Diagram d  = endo ? random_endomorphism(p, n, length, rng, 3)
                        : random_diagram(p, ObjectWord::repeat('^', n), length, rng,
                                         std::size_t(n) + 2);
      auto f  = LinearCombination::of(d, p.params());
      auto nf = normalize(p, d);
      out.expect(normalize_randomized(p, f, rng) == nf, p.id() + ": " + render(d));
      if (model) out.expect(eval(*model, nf) == eval(*model, d), p.id() + " model");
    }
  }
  return out;
}

// 12. interchange canonical form
Outcome criterion12() {
  Outcome out;
  std::mt19937_64 rng(1212);
  std::vector<Presentation> presets = {preset("AHDEG"), preset("TL"), preset("OB"),
                                       preset("AWREATH", 2)};
  for (int t = 0; t < 1000; ++t) {
    auto const& p = presets[t % presets.size()];
    auto dom      = ObjectWord::repeat('^', 1 + int(rng() % 4));
    auto d        = random_diagram(p, dom, 1 + int(rng() % 10), rng, 6);
    out.expect(d.canonicalize() == d && d.is_canonical(), "idempotent");
    auto slices = d.slices();
    for (int k = 0; k < 20 && slices.size() > 1; ++k) {
      std::size_t i = rng() % (slices.size() - 1);
      bool leftward = rng() % 2;
      if (auto sw = interchange_swap(slices[i], slices[i + 1], leftward)) {
        slices[i]     = sw->first;
        slices[i + 1] = sw->second;
      }
    }
    auto moved = Diagram::raw(d.dom(), slices);
    out.expect(moved.cod() == d.cod(), "swap keeps the codomain");
    out.expect(moved.canonicalize() == d, "invariant under swaps");
  }
  auto s = preset("S");
  for (int n = 4; n <= 6; ++n) {
    for (int i = 0; i + 1 < n; ++i) {
      for (int j = i + 2; j + 1 < n; ++j) {
        auto si = Diagram::generator(s.signature().instance("s"), ObjectWord::repeat('^', i),
                                     ObjectWord::repeat('^', n - i - 2));
        auto sj = Diagram::generator(s.signature().instance("s"), ObjectWord::repeat('^', j),
                                     ObjectWord::repeat('^', n - j - 2));
        out.expect(compose(si, sj) == compose(sj, si), "distant braid");
      }
    }
  }
  return out;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symmetric group structure constants", criterion1},
      {"dimension tables", criterion2},
      {"dot-crossing relation in the gl model", criterion3},
      {"Hecke at z=0 equals S", criterion4},
      {"zigzags, equal mates, contravariance", criterion5},
      {"closed diagram trace", criterion6},
      {"Temperley-Lieb relations", criterion7},
      {"teleport identity", criterion8},
      {"Young idempotents", criterion9},
      {"trace additivity and Chern character", criterion10},
      {"confluence of random rewriting", criterion11},
      {"interchange canonicalization", criterion12}};
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (std::exception const& e) {
      o.ok     = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu: %s  %s (%.2fs)%s%s\n", k + 1, o.ok ? "PASS" : "FAIL",
                criteria[k].first.c_str(), secs, o.ok ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
