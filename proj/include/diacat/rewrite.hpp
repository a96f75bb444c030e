#ifndef DIACAT_REWRITE_HPP_
#define DIACAT_REWRITE_HPP_

// Local rewriting by the defining relations in a random order, and random
// well-typed diagrams. Used to test that the normal forms are confluent.

#include <cstdlib>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "normalform.hpp"
#include "presentation.hpp"

namespace diacat {

namespace detail {

inline std::optional<std::pair<Slice, Slice>> any_swap(Slice const& lo,
                                                       Slice const& up) {
  if (auto s = interchange_swap(lo, up, true)) return s;
  return interchange_swap(lo, up, false);
}

// Moves v[j] down to position i + 1 by interchange swaps.
inline bool gather(std::vector<Slice>& v, std::size_t i, std::size_t j) {
  for (std::size_t k = j; k > i + 1; --k) {
    auto sw = any_swap(v[k - 1], v[k]);
    if (!sw) return false;
    v[k - 1] = std::move(sw->first);
    v[k]     = std::move(sw->second);
  }
  return true;
}

using Replacement = std::vector<std::pair<std::vector<Slice>, Scalar>>;

// v[at .. at+len) may be replaced by any of `out` (a linear combination).
struct Rewrite {
  std::vector<Slice> base;
  std::size_t at  = 0;
  std::size_t len = 0;
  Replacement out;
};

class LocalRules {
 public:
  explicit LocalRules(Presentation const& p) : p_(p), ps_(p.params()) {}

  bool width_preserving() const {
    return p_.strategy() != Strategy::TL && p_.strategy() != Strategy::OB;
  }

  std::vector<Rewrite> candidates(std::vector<Slice> const& v) const {
    std::vector<Rewrite> out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (auto r = single_rule(v[i])) out.push_back({v, i, 1, std::move(*r)});
    }
    for (std::size_t j = 1; j < v.size(); ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (width_preserving() && !touches(v[i], v[j])) continue;
        auto copy = v;
        if (!gather(copy, i, j)) continue;
        if (auto r = pair_rule(copy[i], copy[i + 1])) {
          out.push_back({std::move(copy), i, 2, std::move(*r)});
        }
      }
    }
    if (has_braid()) add_braid_moves(v, out);
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      if (auto sw = any_swap(v[k], v[k + 1])) {
        out.push_back({v, k, 2, {{{sw->first, sw->second}, one()}}});
      }
    }
    return out;
  }

 private:
  Scalar one() const { return Scalar::one(ps_); }

  bool has_braid() const {
    return p_.strategy() != Strategy::BRAID_FREE && p_.strategy() != Strategy::TL;
  }

  Slice make(int offset, std::string const& name, std::string const& label = {}) const {
    return {offset, p_.signature().instance(name, label)};
  }

  std::optional<Replacement> single_rule(Slice const& s) const {
    if (s.gen.payload == Payload::token) {
      auto const& f = p_.frobenius_data();
      auto u        = f.unit_index();
      if (u && s.gen.label == f.basis[*u]) return Replacement{{{}, one()}};
    }
    if (p_.strategy() == Strategy::HECKE
        && s.gen.payload == Payload::inverse_crossing) {
      return Replacement{{{make(s.offset, "s")}, one()},
                         {{}, -Scalar::monomial(ps_, "z", 1)}};
    }
    return std::nullopt;
  }

  std::optional<Replacement> pair_rule(Slice const& lo, Slice const& up) const {
    auto const& lg = lo.gen;
    auto const& ug = up.gen;
    int a = lo.offset, b = up.offset;
    auto strat = p_.strategy();
    if (lg.is_crossing() && ug.is_crossing() && a == b) {
      if (lg.payload == Payload::crossing && ug.payload == Payload::crossing) {
        if (strat == Strategy::BRAID_FREE) return std::nullopt;
        if (strat == Strategy::HECKE) {
          return Replacement{{{make(a, "s")}, Scalar::monomial(ps_, "z", 1)},
                             {{}, one()}};
        }
        return Replacement{{{}, one()}};
      }
      if (lg.payload != ug.payload) return Replacement{{{}, one()}};
      return std::nullopt;
    }
    if (lg.payload == Payload::crossing && ug.is_decoration()
        && (b == a || b == a + 1)) {
      int moved = b == a ? a + 1 : a;
      Replacement r{{{Slice{moved, ug}, lo}, one()}};
      if (ug.payload == Payload::dot) add_dot_correction(r, a, b == a);
      return r;
    }
    if (lg.payload == Payload::token && ug.payload == Payload::token && a == b) {
      auto const& f = p_.frobenius_data();
      auto ia = *f.index_of(ug.label);
      auto ib = *f.index_of(lg.label);
      Replacement r;
      for (std::size_t c = 0; c < f.dim(); ++c) {
        if (f.mult[ia][ib][c] == 0) continue;
        r.push_back({{make(a, "tok", f.basis[c])}, Scalar(ps_, f.mult[ia][ib][c])});
      }
      if (r.empty()) r.push_back({{}, Scalar::zero(ps_)});
      return r;
    }
    if (lg.payload == Payload::dot && ug.payload == Payload::token && a == b) {
      return Replacement{{{up, lo}, one()}};
    }
    if (lg.payload == Payload::cup && ug.payload == Payload::cap) {
      return cup_cap(lg, ug, a, b);
    }
    return std::nullopt;
  }

  // Correction of x_a s = s x_{a+1} + sum_b b (x) b^vee (left) or
  // x_{a+1} s = s x_a - sum_b b^vee (x) b (right).
  void add_dot_correction(Replacement& r, int a, bool left) const {
    Rational sign = left ? 1 : -1;
    if (!p_.frobenius()) {
      r.push_back({{}, Scalar(ps_, sign)});
      return;
    }
    auto const& f = p_.frobenius_data();
    for (std::size_t b = 0; b < f.dim(); ++b) {
      for (std::size_t c = 0; c < f.dim(); ++c) {
        Rational d = f.dual_basis[b][c];
        if (d == 0) continue;
        auto const& l = f.basis[left ? b : c];
        auto const& rt = f.basis[left ? c : b];
        r.push_back({{make(a, "tok", l), make(a + 1, "tok", rt)},
                     Scalar(ps_, sign * d)});
      }
    }
  }

  std::optional<Replacement> cup_cap(Gen const& cup, Gen const& cap, int a,
                                     int b) const {
    bool straight = false;
    bool circle   = false;
    if (p_.strategy() == Strategy::TL) {
      straight = b == a + 1 || b == a - 1;
      circle   = b == a;
    } else {
      bool right = cup.name == "cup" && cap.name == "cap";
      bool left  = cup.name == "lcup" && cap.name == "lcap";
      straight   = (right || left) && (b == a + 1 || b == a - 1);
      circle     = b == a
               && ((cup.name == "lcup" && cap.name == "cap")
                   || (cup.name == "cup" && cap.name == "lcap"));
    }
    if (straight) return Replacement{{{}, one()}};
    if (circle) return Replacement{{{}, Scalar::monomial(ps_, "delta", 1)}};
    return std::nullopt;
  }

  void add_braid_moves(std::vector<Slice> const& v, std::vector<Rewrite>& out) const {
    auto is_s = [](Slice const& s) { return s.gen.payload == Payload::crossing; };
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!is_s(v[i])) continue;
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        if (!is_s(v[j])) continue;
        if (width_preserving() && std::abs(v[i].offset - v[j].offset) != 1) continue;
        for (std::size_t k = j + 1; k < v.size(); ++k) {
          if (!is_s(v[k])) continue;
          if (width_preserving() && v[k].offset != v[i].offset) continue;
          auto copy = v;
          if (!gather(copy, i, j) || !gather(copy, i + 1, k)) continue;
          int a = copy[i].offset, b = copy[i + 1].offset, c = copy[i + 2].offset;
          if (a != c || std::abs(a - b) != 1) continue;
          out.push_back({std::move(copy), i, 3,
                         {{{make(b, "s"), make(a, "s"), make(b, "s")}, one()}}});
        }
      }
    }
  }

  Presentation const& p_;
  ParamSet ps_;
};

inline bool is_normal(Presentation const& p, Diagram const& d) {
  auto nf = normalize(p, d);
  return nf.size() == 1 && nf.terms().begin()->first == d
         && nf.terms().begin()->second == Scalar::one(p.params());
}

}  // namespace detail

struct RewriteStats {
  std::size_t steps = 0;
};

// Applies randomly chosen relations (and interchange/braid moves) until
// every term is a basis diagram. OB stops after a random number of local
// steps and finishes by strand tracing, since crossings do not slide over
// cups by local rules alone.
inline LinearCombination normalize_randomized(Presentation const& p,
                                              LinearCombination const& f,
                                              std::mt19937_64& rng,
                                              RewriteStats* stats   = nullptr,
                                              std::size_t budget    = 200000) {
  detail::LocalRules rules(p);
  LinearCombination out(f.dom(), f.cod(), p.params());
  struct Term {
    std::vector<Slice> slices;
    Scalar coeff;
    int local_steps;
  };
  std::vector<Term> work;
  for (auto const& [d, c] : f.terms()) {
    int steps = p.strategy() == Strategy::OB ? int(rng() % 24) : -1;
    work.push_back({d.slices(), c, steps});
  }
  std::size_t steps = 0;
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    if (t.coeff.is_zero()) continue;
    auto d = Diagram::from_slices(f.dom(), t.slices);
    if (t.local_steps == 0) {
      out += t.coeff * normalize(p, d);
      continue;
    }
    if (t.local_steps < 0 && detail::is_normal(p, d)) {
      out.add(d, t.coeff);
      continue;
    }
    auto cands = rules.candidates(t.slices);
    if (cands.empty()) {
      if (t.local_steps > 0) {
        out += t.coeff * normalize(p, d);
        continue;
      }
      throw Error(ErrorCode::invalid_argument,
                  "no relation applies to non-normal diagram " + render(d));
    }
    if (++steps > budget) {
      throw Error(ErrorCode::invalid_argument, "rewrite budget exhausted");
    }
    auto const& rw = cands[rng() % cands.size()];
    for (auto const& [rep, c] : rw.out) {
      std::vector<Slice> next(rw.base.begin(), rw.base.begin() + long(rw.at));
      next.insert(next.end(), rep.begin(), rep.end());
      next.insert(next.end(), rw.base.begin() + long(rw.at + rw.len), rw.base.end());
      work.push_back({std::move(next), t.coeff * c,
                      t.local_steps > 0 ? t.local_steps - 1 : t.local_steps});
    }
  }
  if (stats) stats->steps += steps;
  return out;
}

// A random composite of `length` generator placements starting at `dom`.
// Placements never pass through more than `max_width` strands (the
// canonical order returned may), and at most `max_dots` dots are used.
// Coupons are never chosen.
inline Diagram random_diagram(Presentation const& p, ObjectWord const& dom,
                              int length, std::mt19937_64& rng,
                              std::size_t max_width = 8, int max_dots = 3) {
  auto const& sig = p.signature();
  ObjectWord word = dom;
  std::vector<Slice> slices;
  int dots = 0;
  for (int k = 0; k < length; ++k) {
    std::vector<Slice> options;
    for (auto const& decl : sig.generators()) {
      if (decl.payload == Payload::coupon) continue;
      if (decl.payload == Payload::dot && dots >= max_dots) continue;
      std::vector<std::string> labels{""};
      if (decl.labelled) labels = sig.labels(decl.name);
      for (auto const& l : labels) {
        Gen g = sig.instance(decl.name, l);
        if (word.size() - g.dom.size() + g.cod.size() > max_width) continue;
        if (g.dom.size() > word.size()) continue;
        for (std::size_t o = 0; o + g.dom.size() <= word.size(); ++o) {
          if (word.sub(o, g.dom.size()) == g.dom) options.push_back({int(o), g});
        }
      }
    }
    if (options.empty()) break;
    auto const& s = options[rng() % options.size()];
    if (s.gen.payload == Payload::dot) ++dots;
    word = Diagram::apply(word, s);
    slices.push_back(s);
  }
  return Diagram::from_slices(dom, std::move(slices));
}

// Random endomorphism of `dom` for strategies whose generators keep the width.
inline Diagram random_endomorphism(Presentation const& p, int n, int length,
                                   std::mt19937_64& rng, int max_dots = 3) {
  return random_diagram(p, ObjectWord::repeat('^', n), length, rng, n, max_dots);
}

}  // namespace diacat

#endif  // DIACAT_REWRITE_HPP_
