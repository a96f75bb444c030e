#ifndef DIACAT_TESTS_ORACLES_HPP_
#define DIACAT_TESTS_ORACLES_HPP_

// Independent reference computations for the test suites. Nothing here
// calls the normal-form code.

#include <algorithm>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "diacat/scalar.hpp"

namespace oracle {

using diacat::Rational;

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Bijections of {0..n-1}, found by filtering all n^n maps.
inline std::vector<std::vector<int>> bijections(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> f(n, 0);
  while (true) {
    std::vector<bool> hit(n, false);
    bool ok = true;
    for (int v : f) {
      if (hit[v]) ok = false;
      hit[v] = true;
    }
    if (ok) out.push_back(f);
    int i = 0;
    while (i < n && ++f[i] == n) f[i++] = 0;
    if (i == n) break;
  }
  return out;
}

// All perfect matchings of 2n points, as partner arrays.
inline std::vector<std::vector<int>> perfect_matchings(int points) {
  std::vector<std::vector<int>> out;
  std::vector<int> partner(points, -1);
  std::function<void()> rec = [&] {
    int first = -1;
    for (int i = 0; i < points; ++i) {
      if (partner[i] < 0) {
        first = i;
        break;
      }
    }
    if (first < 0) {
      out.push_back(partner);
      return;
    }
    for (int j = first + 1; j < points; ++j) {
      if (partner[j] >= 0) continue;
      partner[first] = j;
      partner[j]     = first;
      rec();
      partner[first] = partner[j] = -1;
    }
  };
  rec();
  return out;
}

// Points 0..n-1 along the bottom, n..2n-1 along the top (left to right).
// Crossing is tested in the boundary's circular order.
inline bool noncrossing(std::vector<int> const& partner, int n) {
  auto pos = [n](int p) { return p < n ? p : 3 * n - 1 - p; };
  for (int a = 0; a < 2 * n; ++a) {
    for (int c = 0; c < 2 * n; ++c) {
      int b = partner[a], d = partner[c];
      int pa = pos(a), pb = pos(b), pc = pos(c), pd = pos(d);
      if (pa > pb || pc > pd) continue;
      if (pa < pc && pc < pb && pb < pd) return false;
    }
  }
  return true;
}

inline long long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

// Glue `upper` (b -> c) on top of `lower` (a -> b); returns the matching
// a -> c and the number of closed loops.
struct Glued {
  std::vector<int> partner;
  int loops = 0;
};

inline Glued glue(std::vector<int> const& lower, int a, int b,
                  std::vector<int> const& upper, int c) {
  Glued g;
  g.partner.assign(a + c, -1);
  std::vector<bool> seen(b, false);
  // follow from an outer endpoint until the next outer endpoint
  auto walk = [&](bool in_lower, int point) {
    while (true) {
      if (in_lower) {
        int q = lower[point];
        if (q < a) return q;
        int mid = q - a;
        seen[mid] = true;
        in_lower = false;
        point    = mid;
      } else {
        int q = upper[point];
        if (q >= b) return a + (q - b);
        seen[q]  = true;
        in_lower = true;
        point    = a + q;
      }
    }
  };
  for (int p = 0; p < a; ++p) g.partner[p] = walk(true, p);
  for (int t = 0; t < c; ++t) g.partner[a + t] = walk(false, b + t);
  for (int m = 0; m < b; ++m) {
    if (seen[m]) continue;
    ++g.loops;
    int cur = m;
    while (!seen[cur]) {
      seen[cur] = true;
      int up = upper[cur];        // middle point -> middle point via upper
      seen[up] = true;
      int low = lower[a + up];    // -> via lower
      cur = low - a;
    }
  }
  return g;
}

// kS_n product on image vectors: (f g)(i) = f(g(i)).
inline std::vector<int> compose(std::vector<int> const& f, std::vector<int> const& g) {
  std::vector<int> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[g[i]];
  return r;
}

inline int inversions(std::vector<int> const& w) {
  int k = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) k += w[i] > w[j];
  }
  return k;
}

// Hecke algebra element with coefficients polynomial in z: map from
// permutation to (power of z -> rational).
using ZPoly = std::map<int, Rational>;
using HeckeVec = std::map<std::vector<int>, ZPoly>;

inline void add_to(HeckeVec& v, std::vector<int> const& w, int power, Rational const& c) {
  auto& slot = v[w][power];
  slot += c;
  if (slot == 0) v[w].erase(power);
  if (v[w].empty()) v.erase(w);
}

// T_{s_o} T_w, with the case split decided by comparing lengths.
inline HeckeVec left_multiply(int o, HeckeVec const& v) {
  HeckeVec out;
  for (auto const& [w, poly] : v) {
    std::vector<int> s(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) s[i] = int(i);
    std::swap(s[o], s[o + 1]);
    auto sw = compose(s, w);
    bool up = inversions(sw) > inversions(w);
    for (auto const& [pw, c] : poly) {
      add_to(out, sw, pw, c);
      if (!up) add_to(out, w, pw + 1, c);
    }
  }
  return out;
}

// T_w T_v, peeling simple reflections off w on the right.
inline HeckeVec hecke_product(std::vector<int> const& w, std::vector<int> const& v) {
  HeckeVec acc;
  acc[v][0] = 1;
  // reduced word of w by repeatedly removing left descents
  std::vector<int> word;
  auto cur = w;
  while (inversions(cur) > 0) {
    for (std::size_t o = 0; o + 1 < cur.size(); ++o) {
      // left descent: positions o, o+1 appear inverted in cur^{-1}
      std::vector<int> inv(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) inv[cur[i]] = int(i);
      if (inv[o] > inv[o + 1]) {
        word.push_back(int(o));
        std::vector<int> s(cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i) s[i] = int(i);
        std::swap(s[o], s[o + 1]);
        cur = compose(s, cur);
        break;
      }
    }
  }
  // w = s_{word[0]} s_{word[1]} ... ; apply the last factor first
  for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_multiply(*it, acc);
  return acc;
}

}  // namespace oracle

#endif  // DIACAT_TESTS_ORACLES_HPP_
