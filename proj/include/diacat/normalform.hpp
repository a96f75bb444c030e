#ifndef DIACAT_NORMALFORM_HPP_
#define DIACAT_NORMALFORM_HPP_

// Normal forms, bases and structure constants for the preset strategies.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "diagram.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "permutation.hpp"
#include "presentation.hpp"
#include "scalar.hpp"

namespace diacat {

// Dots at the bottom of each strand, permutation above.
struct DottedPerm {
  std::vector<int> exps;
  Permutation perm;

  friend bool operator==(DottedPerm const&, DottedPerm const&) = default;
  friend bool operator<(DottedPerm const& a, DottedPerm const& b) {
    return std::tie(a.perm, a.exps) < std::tie(b.perm, b.exps);
  }
};

// Per strand: token (bottom), then dots; permutation above.
struct TokenDottedPerm {
  std::vector<std::string> tokens;
  std::vector<int> exps;
  Permutation perm;

  friend bool operator==(TokenDottedPerm const&, TokenDottedPerm const&) = default;
  friend bool operator<(TokenDottedPerm const& a, TokenDottedPerm const& b) {
    return std::tie(a.perm, a.exps, a.tokens)
           < std::tie(b.perm, b.exps, b.tokens);
  }
};

// Perfect matching of dom.size() bottom points (0..) and cod.size() top
// points (numbered after the bottom ones).
struct Matching {
  ObjectWord dom;
  ObjectWord cod;
  std::vector<int> partner;

  friend bool operator==(Matching const&, Matching const&) = default;
  friend bool operator<(Matching const& a, Matching const& b) {
    return std::tie(a.dom, a.cod, a.partner)
           < std::tie(b.dom, b.cod, b.partner);
  }

  std::string point_name(int p) const {
    int a = static_cast<int>(dom.size());
    return p < a ? "b" + std::to_string(p) : "t" + std::to_string(p - a);
  }

  std::string to_text() const {
    std::string out = "{";
    bool first      = true;
    for (int p = 0; p < static_cast<int>(partner.size()); ++p) {
      if (partner[p] < p) continue;
      if (!first) out += " ";
      first = false;
      out += point_name(p) + "-" + point_name(partner[p]);
    }
    return out + "}";
  }
};

using BasisElement =
    std::variant<Permutation, DottedPerm, TokenDottedPerm, Matching>;

inline std::string vector_text(std::vector<int> const& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

inline std::string to_text(BasisElement const& b) {
  struct V {
    std::string operator()(Permutation const& p) const { return p.to_text(); }
    std::string operator()(DottedPerm const& d) const {
      return "x^" + vector_text(d.exps) + " " + d.perm.to_text();
    }
    std::string operator()(TokenDottedPerm const& t) const {
      std::string s = "tok[";
      for (std::size_t i = 0; i < t.tokens.size(); ++i) {
        if (i) s += ",";
        s += t.tokens[i];
      }
      return s + "] x^" + vector_text(t.exps) + " " + t.perm.to_text();
    }
    std::string operator()(Matching const& m) const { return m.to_text(); }
  };
  return std::visit(V{}, b);
}

// Default dot-degree bound for the infinite-dimensional families.
inline constexpr int kDefaultDegree = 4;

namespace detail {

inline bool all_up(ObjectWord const& w) {
  return std::all_of(w.letters().begin(), w.letters().end(),
                     [](char c) { return c == '^'; });
}

inline int up_strands(Presentation const& p, Diagram const& d) {
  if (d.dom() != d.cod() || !all_up(d.dom())) {
    throw Error(ErrorCode::unsupported_hom,
                std::string("strategy ") + to_string(p.strategy())
                    + " only handles endomorphisms of ^...^, got "
                    + d.dom().to_text() + " -> " + d.cod().to_text());
  }
  return static_cast<int>(d.dom().size());
}

[[noreturn]] inline void unsupported_generator(Presentation const& p,
                                               Gen const& g) {
  throw Error(ErrorCode::unsupported_hom,
              "generator " + g.to_text() + " is not handled by strategy "
                  + to_string(p.strategy()));
}

// ----- strands carrying dots and tokens: SYM, DAHA, WREATH, AWREATH -----

struct UpKey {
  Permutation perm;
  std::vector<int> exps;
  std::vector<int> tokens;

  friend auto operator<=>(UpKey const&, UpKey const&) = default;
  friend bool operator==(UpKey const&, UpKey const&) = default;
};

using UpElem = std::map<UpKey, Rational>;

inline void accumulate(UpElem& e, UpKey const& k, Rational const& c) {
  if (c == 0) return;
  auto [it, inserted] = e.emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) e.erase(it);
  }
}

// Elements of End(^n) as combinations of keys x^e T_w with tokens below
// the dots; generators are multiplied on top.
class UpEngine {
 public:
  UpEngine(Presentation const& p, int n) : p_(&p), n_(n) {
    if (p.frobenius()) frob_ = &*p.frobenius();
  }

  int n() const { return n_; }

  UpElem identity() const {
    UpKey k{Permutation::identity(n_), std::vector<int>(n_, 0),
            std::vector<int>(n_, 0)};
    UpElem e{{k, Rational(1)}};
    if (!frob_) return e;
    for (int i = 0; i < n_; ++i) {
      UpElem next;
      for (auto const& [key, c] : e) {
        for (std::size_t b = 0; b < frob_->dim(); ++b) {
          if (frob_->unit[b] == 0) continue;
          UpKey k2     = key;
          k2.tokens[i] = static_cast<int>(b);
          accumulate(next, k2, c * frob_->unit[b]);
        }
      }
      e = std::move(next);
    }
    return e;
  }

  UpElem apply(Slice const& s, UpElem const& e) const {
    UpElem out;
    switch (s.gen.payload) {
      case Payload::crossing:
        return cross(s.offset, e);
      case Payload::dot:
        if (!p_->signature().has_payload(Payload::dot)) break;
        for (auto const& [k, c] : e) {
          for (auto const& [k2, c2] : dot_on(s.offset, k)) {
            accumulate(out, k2, c * c2);
          }
        }
        return out;
      case Payload::token: {
        int a = token_index(s.gen.label);
        for (auto const& [k, c] : e) {
          for (auto const& [k2, c2] : token_on(s.offset, a, k)) {
            accumulate(out, k2, c * c2);
          }
        }
        return out;
      }
      default:
        break;
    }
    unsupported_generator(*p_, s.gen);
  }

  UpElem fold(Diagram const& d) const {
    UpElem e = identity();
    for (auto const& s : d.slices()) e = apply(s, e);
    return e;
  }

  Diagram embed(UpKey const& k) const {
    auto const& sig = p_->signature();
    std::vector<Slice> slices;
    if (frob_) {
      auto unit = frob_->unit_index();
      for (int i = 0; i < n_; ++i) {
        if (unit && k.tokens[i] == static_cast<int>(*unit)) continue;
        slices.push_back({i, sig.instance("tok", frob_->basis[k.tokens[i]])});
      }
    }
    for (int i = 0; i < n_; ++i) {
      for (int e = 0; e < k.exps[i]; ++e) slices.push_back({i, sig.instance("x")});
    }
    for (int o : k.perm.reduced_word()) slices.push_back({o, sig.instance("s")});
    return Diagram::from_slices(ObjectWord::repeat('^', n_), std::move(slices));
  }

  BasisElement to_basis(UpKey const& k) const {
    switch (p_->strategy()) {
      case Strategy::SYM: return k.perm;
      case Strategy::DAHA: return DottedPerm{k.exps, k.perm};
      default: {
        std::vector<std::string> labels;
        for (int t : k.tokens) labels.push_back(frob_->basis[t]);
        return TokenDottedPerm{labels, k.exps, k.perm};
      }
    }
  }

  UpKey from_basis(BasisElement const& b) const {
    UpKey k{Permutation::identity(n_), std::vector<int>(n_, 0),
            std::vector<int>(n_, 0)};
    if (frob_) {
      auto unit = frob_->unit_index();
      if (unit) std::fill(k.tokens.begin(), k.tokens.end(), int(*unit));
    }
    if (auto const* p = std::get_if<Permutation>(&b)) {
      k.perm = *p;
    } else if (auto const* d = std::get_if<DottedPerm>(&b)) {
      k.perm = d->perm;
      k.exps = d->exps;
    } else if (auto const* t = std::get_if<TokenDottedPerm>(&b)) {
      k.perm = t->perm;
      k.exps = t->exps;
      if (!frob_ || t->tokens.size() != std::size_t(n_)) {
        throw Error(ErrorCode::shape_mismatch, "token vector does not fit");
      }
      for (int i = 0; i < n_; ++i) k.tokens[i] = token_index(t->tokens[i]);
    } else {
      throw Error(ErrorCode::type_mismatch, "matching is not a strand basis element");
    }
    if (k.perm.size() != n_ || int(k.exps.size()) != n_) {
      throw Error(ErrorCode::shape_mismatch, "basis element has wrong strand count");
    }
    return k;
  }

 private:
  int token_index(std::string const& label) const {
    if (!frob_) {
      throw Error(ErrorCode::invalid_label, "no tokens in this presentation");
    }
    auto i = frob_->index_of(label);
    if (!i) {
      throw Error(ErrorCode::invalid_label,
                  "token label '" + label + "' not in the Frobenius basis");
    }
    return static_cast<int>(*i);
  }

  UpElem cross(int o, UpElem const& e) const {
    UpElem out;
    auto t = Permutation::transposition(n_, o);
    for (auto const& [k, c] : e) {
      UpKey k2 = k;
      k2.perm  = t * k.perm;
      accumulate(out, k2, c);
    }
    return out;
  }

  // Token a placed on top at position t slides down its strand and
  // multiplies the token already there (a above, old below).
  UpElem token_on(int t, int a, UpKey const& k) const {
    int i = k.perm.inverse()(t);
    int b = k.tokens[i];
    UpElem out;
    for (std::size_t c = 0; c < frob_->dim(); ++c) {
      Rational m = frob_->mult[a][b][c];
      if (m == 0) continue;
      UpKey k2     = k;
      k2.tokens[i] = static_cast<int>(c);
      accumulate(out, k2, m);
    }
    return out;
  }

  // A dot placed on top at position t, moved down through the crossings:
  // x_o s = s x_{o+1} + sum_b b (x) b^vee and x_{o+1} s = s x_o - sum_b b^vee (x) b.
  UpElem dot_on(int t, UpKey const& k) const {
    auto key = std::pair{t, k};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    UpElem out;
    if (k.perm.is_identity()) {
      UpKey k2 = k;
      ++k2.exps[t];
      accumulate(out, k2, 1);
    } else {
      auto inv = k.perm.inverse();
      int o    = 0;
      while (!(inv(o) > inv(o + 1))) ++o;
      UpKey kp = k;
      kp.perm  = Permutation::transposition(n_, o) * k.perm;
      int tp   = t == o ? o + 1 : (t == o + 1 ? o : t);
      out      = cross(o, dot_on(tp, kp));
      if (t == o || t == o + 1) {
        Rational sign = t == o ? 1 : -1;
        if (!frob_) {
          accumulate(out, kp, sign);
        } else {
          for (std::size_t b = 0; b < frob_->dim(); ++b) {
            for (std::size_t c = 0; c < frob_->dim(); ++c) {
              Rational d = frob_->dual_basis[b][c];
              if (d == 0) continue;
              int left  = static_cast<int>(t == o ? b : c);
              int right = static_cast<int>(t == o ? c : b);
              for (auto const& [k1, c1] : token_on(o, left, kp)) {
                for (auto const& [k2, c2] : token_on(o + 1, right, k1)) {
                  accumulate(out, k2, sign * d * c1 * c2);
                }
              }
            }
          }
        }
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  Presentation const* p_;
  int n_;
  FrobeniusData const* frob_ = nullptr;
  mutable std::map<std::pair<int, UpKey>, UpElem> memo_;
};

// ----- Hecke: T-basis -----

using HeckeElem = std::map<Permutation, Scalar>;

inline void accumulate(HeckeElem& e, Permutation const& w, Scalar const& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = e.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) e.erase(it);
  }
}

class HeckeEngine {
 public:
  HeckeEngine(Presentation const& p, int n)
      : p_(&p), n_(n), z_(Scalar::monomial(p.params(), "z", 1)) {}

  HeckeElem identity() const {
    return {{Permutation::identity(n_), Scalar::one(p_->params())}};
  }

  // T_s T_w = T_sw if l(sw) > l(w), else z T_w + T_sw.
  HeckeElem s_on(int o, HeckeElem const& e) const {
    HeckeElem out;
    auto t = Permutation::transposition(n_, o);
    for (auto const& [w, c] : e) {
      auto inv = w.inverse();
      if (inv(o) < inv(o + 1)) {
        accumulate(out, t * w, c);
      } else {
        accumulate(out, w, z_ * c);
        accumulate(out, t * w, c);
      }
    }
    return out;
  }

  HeckeElem apply(Slice const& s, HeckeElem const& e) const {
    if (s.gen.payload == Payload::crossing) return s_on(s.offset, e);
    if (s.gen.payload == Payload::inverse_crossing) {
      // T_s^{-1} = T_s - z
      HeckeElem out = s_on(s.offset, e);
      for (auto const& [w, c] : e) accumulate(out, w, -(z_ * c));
      return out;
    }
    unsupported_generator(*p_, s.gen);
  }

  HeckeElem fold(Diagram const& d) const {
    HeckeElem e = identity();
    for (auto const& s : d.slices()) e = apply(s, e);
    return e;
  }

  Diagram embed(Permutation const& w) const {
    std::vector<Slice> slices;
    for (int o : w.reduced_word()) {
      slices.push_back({o, p_->signature().instance("s")});
    }
    return Diagram::from_slices(ObjectWord::repeat('^', n_), std::move(slices));
  }

 private:
  Presentation const* p_;
  int n_;
  Scalar z_;
};

// ----- braid group: free cancellation of s si and si s -----

inline bool touches(Slice const& a, Slice const& b) {
  int a0 = a.offset, a1 = a.offset + int(a.gen.dom.size());
  int b0 = b.offset, b1 = b.offset + int(b.gen.dom.size());
  return a0 < b1 && b0 < a1;
}

inline bool inverse_pair(Gen const& a, Gen const& b) {
  return (a.payload == Payload::crossing && b.payload == Payload::inverse_crossing)
         || (a.payload == Payload::inverse_crossing && b.payload == Payload::crossing);
}

// Index pairs (i, j) where j's nearest touching predecessor is an inverse
// crossing at the same offset.
inline std::vector<std::pair<std::size_t, std::size_t>> free_cancellations(
    std::vector<Slice> const& v) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    for (std::size_t i = j; i-- > 0;) {
      if (!touches(v[i], v[j])) continue;
      if (v[i].offset == v[j].offset && inverse_pair(v[i].gen, v[j].gen)) {
        out.emplace_back(i, j);
      }
      break;
    }
  }
  return out;
}

inline Diagram free_reduce(Presentation const& p, Diagram const& d) {
  for (auto const& s : d.slices()) {
    if (!s.gen.is_crossing()) unsupported_generator(p, s.gen);
  }
  auto v = d.slices();
  while (true) {
    auto c = free_cancellations(v);
    if (c.empty()) break;
    auto [i, j] = c.front();
    v.erase(v.begin() + static_cast<long>(j));
    v.erase(v.begin() + static_cast<long>(i));
  }
  return Diagram::from_slices(d.dom(), std::move(v));
}

// ----- cups and caps: TL and OB, by tracing strands -----

struct Traced {
  Matching matching;
  int loops = 0;
};

inline Traced trace_strands(Presentation const& p, Diagram const& d) {
  int a = static_cast<int>(d.dom().size());
  int b = static_cast<int>(d.cod().size());
  std::vector<std::pair<int, int>> edges;
  std::vector<int> cur(a);
  std::iota(cur.begin(), cur.end(), 0);
  int nodes = a;
  for (auto const& s : d.slices()) {
    int o = s.offset;
    switch (s.gen.payload) {
      case Payload::cup:
        edges.emplace_back(nodes, nodes + 1);
        cur.insert(cur.begin() + o, {nodes, nodes + 1});
        nodes += 2;
        break;
      case Payload::cap:
        edges.emplace_back(cur[o], cur[o + 1]);
        cur.erase(cur.begin() + o, cur.begin() + o + 2);
        break;
      case Payload::crossing:
        if (p.strategy() != Strategy::OB) unsupported_generator(p, s.gen);
        std::swap(cur[o], cur[o + 1]);
        break;
      default:
        unsupported_generator(p, s.gen);
    }
  }
  // Every node has exactly two ends among edges and boundary tags.
  std::vector<std::vector<int>> tags(nodes), incident(nodes);
  for (int i = 0; i < a; ++i) tags[i].push_back(i);
  for (int j = 0; j < b; ++j) tags[cur[j]].push_back(a + j);
  for (int e = 0; e < int(edges.size()); ++e) {
    incident[edges[e].first].push_back(e);
    incident[edges[e].second].push_back(e);
  }
  Traced t;
  t.matching.dom = d.dom();
  t.matching.cod = d.cod();
  t.matching.partner.assign(a + b, -1);
  std::vector<bool> seen(nodes, false);
  auto tag_node = [&](int tag) { return tag < a ? tag : cur[tag - a]; };
  for (int tag = 0; tag < a + b; ++tag) {
    if (t.matching.partner[tag] >= 0) continue;
    int node = tag_node(tag);
    int from = -1;
    seen[node] = true;
    int other  = -1;
    // a node with two tags is a bare through strand
    if (tags[node].size() == 2) {
      other = tags[node][0] == tag ? tags[node][1] : tags[node][0];
    } else {
      while (true) {
        int e = -1;
        for (int cand : incident[node]) {
          if (cand != from) {
            e = cand;
            break;
          }
        }
        from = e;
        node = edges[e].first == node ? edges[e].second : edges[e].first;
        seen[node] = true;
        if (!tags[node].empty()) {
          other = tags[node][0];
          break;
        }
      }
    }
    t.matching.partner[tag]   = other;
    t.matching.partner[other] = tag;
  }
  // Remaining nodes lie on closed loops.
  for (int nd = 0; nd < nodes; ++nd) {
    if (seen[nd]) continue;
    ++t.loops;
    std::vector<int> stack{nd};
    seen[nd] = true;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int e : incident[x]) {
        int y = edges[e].first == x ? edges[e].second : edges[e].first;
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
      }
    }
  }
  return t;
}

// Planar embedding: caps innermost first at the bottom, then cups.
inline Diagram embed_planar(Presentation const& p, Matching const& m) {
  int a = static_cast<int>(m.dom.size());
  int b = static_cast<int>(m.cod.size());
  auto const& sig = p.signature();
  std::vector<Slice> slices;
  std::vector<int> bottom(a);
  std::iota(bottom.begin(), bottom.end(), 0);
  for (bool found = true; found;) {
    found = false;
    for (int o = 0; o + 1 < int(bottom.size()); ++o) {
      if (m.partner[bottom[o]] == bottom[o + 1]) {
        slices.push_back({o, sig.instance("cap")});
        bottom.erase(bottom.begin() + o, bottom.begin() + o + 2);
        found = true;
        break;
      }
    }
  }
  std::vector<int> top(b);
  std::iota(top.begin(), top.end(), a);
  std::vector<int> cups;
  for (bool found = true; found;) {
    found = false;
    for (int o = 0; o + 1 < int(top.size()); ++o) {
      if (m.partner[top[o]] == top[o + 1]) {
        cups.push_back(o);
        top.erase(top.begin() + o, top.begin() + o + 2);
        found = true;
        break;
      }
    }
  }
  if (bottom.size() != top.size()) {
    throw Error(ErrorCode::invalid_argument, "matching is not planar");
  }
  for (std::size_t i = 0; i < bottom.size(); ++i) {
    if (m.partner[bottom[i]] != top[i]) {
      throw Error(ErrorCode::invalid_argument, "matching is not planar");
    }
  }
  for (auto it = cups.rbegin(); it != cups.rend(); ++it) {
    slices.push_back({*it, sig.instance("cup")});
  }
  return Diagram::from_slices(m.dom, std::move(slices));
}

// Oriented embedding: sort bottom points so cap pairs come first, cap them
// at offset 0, append cups at the right, then sort into top order. Mixed
// crossings are the cup/cap composites of ob_crossing.
inline Diagram embed_oriented(Presentation const& p, Matching const& m) {
  int a = static_cast<int>(m.dom.size());
  int b = static_cast<int>(m.cod.size());
  auto const& sig = p.signature();
  std::vector<Slice> slices;
  std::string word = m.dom.letters();
  std::map<std::string, std::vector<Slice>> composites;
  auto crossing_at = [&](int o) {
    std::string pair = word.substr(o, 2);
    auto it          = composites.find(pair);
    if (it == composites.end()) {
      it = composites.emplace(pair, parse_diagram(sig, ob_crossing(pair)).slices())
               .first;
    }
    for (auto s : it->second) {
      s.offset += o;
      slices.push_back(std::move(s));
    }
    std::swap(word[o], word[o + 1]);
  };
  auto sort_by = [&](std::vector<int>& ids, std::vector<int> const& rank) {
    for (bool swapped = true; swapped;) {
      swapped = false;
      for (int o = 0; o + 1 < int(ids.size()); ++o) {
        if (rank[ids[o]] > rank[ids[o + 1]]) {
          crossing_at(o);
          std::swap(ids[o], ids[o + 1]);
          swapped = true;
        }
      }
    }
  };
  std::vector<int> rank(a + b, 0);
  int next = 0;
  for (int i = 0; i < a; ++i) {
    int j = m.partner[i];
    if (j < a && i < j) {
      rank[i] = next++;
      rank[j] = next++;
    }
  }
  int caps = next / 2;
  for (int i = 0; i < a; ++i) {
    if (m.partner[i] >= a) rank[i] = next++;
  }
  std::vector<int> ids(a);
  std::iota(ids.begin(), ids.end(), 0);
  sort_by(ids, rank);
  for (int c = 0; c < caps; ++c) {
    bool right = word[0] == '^';
    slices.push_back({0, sig.instance(right ? "cap" : "lcap")});
    word.erase(0, 2);
    ids.erase(ids.begin(), ids.begin() + 2);
  }
  for (auto& id : ids) id = m.partner[id];
  for (int q = a; q < a + b; ++q) {
    int r = m.partner[q];
    if (r < a || r < q) continue;
    char left = m.cod[q - a];
    slices.push_back({int(word.size()), sig.instance(left == 'v' ? "cup" : "lcup")});
    word += m.cod.letters().substr(q - a, 1);
    word += m.cod.letters().substr(r - a, 1);
    ids.push_back(q);
    ids.push_back(r);
  }
  std::vector<int> top_rank(a + b, 0);
  for (int q = a; q < a + b; ++q) top_rank[q] = q;
  sort_by(ids, top_rank);
  auto d = Diagram::from_slices(m.dom, std::move(slices));
  if (d.cod() != m.cod) {
    throw Error(ErrorCode::invalid_argument, "matching is not consistently oriented");
  }
  return d;
}

inline Diagram embed_matching(Presentation const& p, Matching const& m) {
  return p.strategy() == Strategy::TL ? embed_planar(p, m) : embed_oriented(p, m);
}

inline Scalar delta_power(Presentation const& p, int loops) {
  return loops == 0 ? Scalar::one(p.params())
                    : Scalar::monomial(p.params(), "delta", loops);
}

// Noncrossing perfect matchings of a + b boundary points.
inline std::vector<Matching> planar_matchings(ObjectWord dom, ObjectWord cod) {
  int a = static_cast<int>(dom.size());
  int b = static_cast<int>(cod.size());
  int total = a + b;
  std::vector<Matching> out;
  if (total % 2) return out;
  // boundary position k -> point id; top points run right to left
  std::vector<int> point(total);
  for (int k = 0; k < total; ++k) point[k] = k < a ? k : a + (b - 1 - (k - a));
  // pairings of boundary positions lo..hi, as lists of position pairs
  using Pairs = std::vector<std::pair<int, int>>;
  std::map<std::pair<int, int>, std::vector<Pairs>> memo;
  auto rec = [&](auto&& self, int lo, int hi) -> std::vector<Pairs> {
    if (lo > hi) return {Pairs{}};
    if (auto it = memo.find({lo, hi}); it != memo.end()) return it->second;
    std::vector<Pairs> res;
    for (int k = lo + 1; k <= hi; k += 2) {
      auto inner = self(self, lo + 1, k - 1);
      auto outer = self(self, k + 1, hi);
      for (auto const& x : inner) {
        for (auto const& y : outer) {
          Pairs z{{lo, k}};
          z.insert(z.end(), x.begin(), x.end());
          z.insert(z.end(), y.begin(), y.end());
          res.push_back(std::move(z));
        }
      }
    }
    memo[{lo, hi}] = res;
    return res;
  };
  std::vector<std::vector<int>> results;
  for (auto const& pairs : rec(rec, 0, total - 1)) {
    std::vector<int> partner(total, -1);
    for (auto [x, y] : pairs) {
      partner[point[x]] = point[y];
      partner[point[y]] = point[x];
    }
    results.push_back(std::move(partner));
  }
  for (auto& r : results) out.push_back({dom, cod, std::move(r)});
  std::sort(out.begin(), out.end());
  return out;
}

inline void check_degree(std::optional<int> degree) {
  if (degree && *degree < 0) {
    throw Error(ErrorCode::invalid_argument, "degree bound must be >= 0");
  }
}

// Exponent vectors of length n with total at most d, lexicographic.
inline std::vector<std::vector<int>> exponent_vectors(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
    cur[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace detail

// Normal form of a single diagram in the distinguished basis.
inline LinearCombination normalize(Presentation const& p, Diagram const& d) {
  ParamSet const& ps = p.params();
  LinearCombination out(d.dom(), d.cod(), ps);
  switch (p.strategy()) {
    case Strategy::SYM:
    case Strategy::DAHA:
    case Strategy::WREATH:
    case Strategy::AWREATH: {
      detail::UpEngine eng(p, detail::up_strands(p, d));
      for (auto const& [k, c] : eng.fold(d)) out.add(eng.embed(k), Scalar(ps, c));
      return out;
    }
    case Strategy::HECKE: {
      detail::HeckeEngine eng(p, detail::up_strands(p, d));
      for (auto const& [w, c] : eng.fold(d)) out.add(eng.embed(w), c);
      return out;
    }
    case Strategy::BRAID_FREE:
      detail::up_strands(p, d);
      out.add(detail::free_reduce(p, d), Scalar::one(ps));
      return out;
    case Strategy::TL:
    case Strategy::OB: {
      auto t = detail::trace_strands(p, d);
      out.add(detail::embed_matching(p, t.matching), detail::delta_power(p, t.loops));
      return out;
    }
  }
  return out;
}

inline LinearCombination normalize(Presentation const& p,
                                   LinearCombination const& f) {
  LinearCombination out(f.dom(), f.cod(), p.params());
  for (auto const& [d, c] : f.terms()) out += c * normalize(p, d);
  return out;
}

// Basis of End(^n), or of End(X^n) for TL. DAHA and AWREATH need a dot
// degree bound.
inline std::vector<BasisElement> basis(Presentation const& p, int n,
                                       std::optional<int> degree = std::nullopt) {
  if (n < 0) throw Error(ErrorCode::invalid_argument, "n must be >= 0");
  detail::check_degree(degree);
  std::vector<BasisElement> out;
  auto perms = all_permutations(n);
  switch (p.strategy()) {
    case Strategy::SYM:
    case Strategy::HECKE:
      for (auto& w : perms) out.emplace_back(w);
      break;
    case Strategy::BRAID_FREE:
      throw Error(ErrorCode::unsupported_hom,
                  "the braid group algebra has no finite basis");
    case Strategy::DAHA:
    case Strategy::AWREATH:
    case Strategy::WREATH: {
      bool dots = p.strategy() != Strategy::WREATH;
      if (dots && !degree) {
        throw Error(ErrorCode::missing_parameter,
                    "a dot degree bound D is required for "
                        + std::string(to_string(p.strategy())));
      }
      auto exps = dots ? detail::exponent_vectors(n, *degree)
                       : std::vector<std::vector<int>>{std::vector<int>(n, 0)};
      if (p.strategy() == Strategy::DAHA) {
        for (auto& w : perms) {
          for (auto& e : exps) out.emplace_back(DottedPerm{e, w});
        }
        break;
      }
      auto const& f = p.frobenius_data();
      std::vector<std::vector<std::string>> tokens{{}};
      for (int i = 0; i < n; ++i) {
        std::vector<std::vector<std::string>> next;
        for (auto const& t : tokens) {
          for (auto const& l : f.basis) {
            auto u = t;
            u.push_back(l);
            next.push_back(std::move(u));
          }
        }
        tokens = std::move(next);
      }
      for (auto& w : perms) {
        for (auto& e : exps) {
          for (auto& t : tokens) out.emplace_back(TokenDottedPerm{t, e, w});
        }
      }
      break;
    }
    case Strategy::TL:
      for (auto& m : detail::planar_matchings(ObjectWord::repeat('^', n),
                                              ObjectWord::repeat('^', n))) {
        out.emplace_back(std::move(m));
      }
      break;
    case Strategy::OB:
      for (auto& w : perms) {
        Matching m{ObjectWord::repeat('^', n), ObjectWord::repeat('^', n),
                   std::vector<int>(2 * n)};
        for (int i = 0; i < n; ++i) {
          m.partner[i]        = n + w(i);
          m.partner[n + w(i)] = i;
        }
        out.emplace_back(std::move(m));
      }
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::size_t hom_dim(Presentation const& p, int n,
                           std::optional<int> degree = std::nullopt) {
  return basis(p, n, degree).size();
}

inline int strand_count(BasisElement const& b) {
  struct V {
    int operator()(Permutation const& p) const { return p.size(); }
    int operator()(DottedPerm const& d) const { return d.perm.size(); }
    int operator()(TokenDottedPerm const& t) const { return t.perm.size(); }
    int operator()(Matching const& m) const { return int(m.dom.size()); }
  };
  return std::visit(V{}, b);
}

// The basis diagram of b.
inline Diagram embed(Presentation const& p, BasisElement const& b) {
  int n = strand_count(b);
  switch (p.strategy()) {
    case Strategy::SYM:
    case Strategy::DAHA:
    case Strategy::WREATH:
    case Strategy::AWREATH: {
      detail::UpEngine eng(p, n);
      return eng.embed(eng.from_basis(b));
    }
    case Strategy::HECKE:
      if (auto const* w = std::get_if<Permutation>(&b)) {
        return detail::HeckeEngine(p, n).embed(*w);
      }
      break;
    case Strategy::TL:
    case Strategy::OB:
      if (auto const* m = std::get_if<Matching>(&b)) {
        return detail::embed_matching(p, *m);
      }
      break;
    case Strategy::BRAID_FREE:
      break;
  }
  throw Error(ErrorCode::type_mismatch,
              "basis element kind does not match strategy "
                  + std::string(to_string(p.strategy())));
}

// Inverse of embed on basis diagrams.
inline std::optional<BasisElement> recognize(Presentation const& p,
                                             Diagram const& d) {
  auto nf = normalize(p, d);
  if (nf.size() != 1) return std::nullopt;
  auto const& [diag, c] = *nf.terms().begin();
  if (!(c == Scalar::one(p.params())) || !(diag == d)) return std::nullopt;
  switch (p.strategy()) {
    case Strategy::SYM:
    case Strategy::DAHA:
    case Strategy::WREATH:
    case Strategy::AWREATH: {
      detail::UpEngine eng(p, int(d.dom().size()));
      return eng.to_basis(eng.fold(d).begin()->first);
    }
    case Strategy::HECKE:
      return detail::HeckeEngine(p, int(d.dom().size())).fold(d).begin()->first;
    case Strategy::TL:
    case Strategy::OB:
      return detail::trace_strands(p, d).matching;
    case Strategy::BRAID_FREE:
      break;
  }
  return std::nullopt;
}

// a * b = a o b (b drawn below a), normalized.
inline LinearCombination multiply(Presentation const& p, BasisElement const& a,
                                  BasisElement const& b) {
  if (strand_count(a) != strand_count(b)) {
    throw Error(ErrorCode::shape_mismatch, "strand counts differ");
  }
  return normalize(p, compose(embed(p, a), embed(p, b)));
}

struct StructureTable {
  std::string preset;
  int n = 0;
  std::vector<BasisElement> basis;
  // table[i][j] = sparse list (k, coefficient) of basis[i] * basis[j]
  std::vector<std::vector<std::vector<std::pair<std::size_t, Scalar>>>> table;
};

// Structure constants of End(^n) in the finite bases (not DAHA/AWREATH).
inline StructureTable structure_table(Presentation const& p, int n) {
  if (p.strategy() == Strategy::DAHA || p.strategy() == Strategy::AWREATH) {
    throw Error(ErrorCode::unsupported_hom,
                "structure tables need a finite basis; dot degrees are unbounded");
  }
  StructureTable st;
  st.preset = p.id();
  st.n      = n;
  st.basis  = basis(p, n);
  std::map<Diagram, std::size_t> index;
  std::vector<Diagram> diagrams;
  for (std::size_t i = 0; i < st.basis.size(); ++i) {
    diagrams.push_back(embed(p, st.basis[i]));
    index.emplace(diagrams.back(), i);
  }
  st.table.assign(st.basis.size(), {});
  for (std::size_t i = 0; i < st.basis.size(); ++i) {
    st.table[i].resize(st.basis.size());
    for (std::size_t j = 0; j < st.basis.size(); ++j) {
      auto prod = normalize(p, compose(diagrams[i], diagrams[j]));
      for (auto const& [d, c] : prod.terms()) {
        st.table[i][j].emplace_back(index.at(d), c);
      }
      std::sort(st.table[i][j].begin(), st.table[i][j].end(),
                [](auto const& x, auto const& y) { return x.first < y.first; });
    }
  }
  return st;
}

struct SpecializationReport {
  int n = 0;
  std::size_t compared   = 0;
  std::size_t mismatches = 0;
  bool ok() const { return mismatches == 0; }
};

// Compares the HECKE structure constants at z = 0 with SYM's.
inline SpecializationReport specialize_hecke_to_sym(int n) {
  auto hecke = preset("HECKE");
  auto sym   = preset("S");
  auto th    = structure_table(hecke, n);
  auto ts    = structure_table(sym, n);
  SpecializationReport r;
  r.n = n;
  for (std::size_t i = 0; i < th.basis.size(); ++i) {
    for (std::size_t j = 0; j < th.basis.size(); ++j) {
      ++r.compared;
      std::map<std::size_t, Rational> h, s;
      for (auto const& [k, c] : th.table[i][j]) {
        Rational v = c.substitute({{"z", 0}}).constant_value();
        if (v != 0) h[k] = v;
      }
      for (auto const& [k, c] : ts.table[i][j]) s[k] = c.constant_value();
      if (h != s) ++r.mismatches;
    }
  }
  return r;
}

}  // namespace diacat

#endif  // DIACAT_NORMALFORM_HPP_
