#ifndef DIACAT_DIAGRAM_HPP_
#define DIACAT_DIAGRAM_HPP_

// Morphism terms of a free strict monoidal category, one generator per
// slice, kept in canonical form under the interchange law.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "interchange.hpp"
#include "scalar.hpp"
#include "signature.hpp"

namespace diacat {

class Diagram {
 public:
  Diagram() = default;

  static Diagram identity(ObjectWord w) {
    Diagram d;
    d.dom_ = std::move(w);
    d.cod_ = d.dom_;
    return d;
  }

  // 1_left (x) g (x) 1_right.
  static Diagram generator(Gen const& g, ObjectWord const& left = {},
                           ObjectWord const& right = {}) {
    return from_slices(left + g.dom + right,
                       {Slice{static_cast<int>(left.size()), g}});
  }

  // Type-checks the slices (bottom to top) and canonicalizes.
  static Diagram from_slices(ObjectWord dom, std::vector<Slice> slices) {
    Diagram d;
    d.dom_    = std::move(dom);
    d.cod_    = replay(d.dom_, slices);
    d.slices_ = std::move(slices);
    d.canonicalize_in_place();
    return d;
  }

  // As from_slices, but keeps the given order. Only for callers that need
  // to walk non-canonical interchange representatives.
  static Diagram raw(ObjectWord dom, std::vector<Slice> slices) {
    Diagram d;
    d.dom_    = std::move(dom);
    d.cod_    = replay(d.dom_, slices);
    d.slices_ = std::move(slices);
    return d;
  }

  ObjectWord const& dom() const { return dom_; }
  ObjectWord const& cod() const { return cod_; }
  std::vector<Slice> const& slices() const { return slices_; }
  std::size_t size() const { return slices_.size(); }
  bool is_identity() const { return slices_.empty(); }

  // Object word just below each slice, plus the codomain at the end.
  std::vector<ObjectWord> heights() const {
    std::vector<ObjectWord> out{dom_};
    ObjectWord w = dom_;
    for (auto const& s : slices_) {
      w = apply(w, s);
      out.push_back(w);
    }
    return out;
  }

  Diagram canonicalize() const {
    Diagram d = *this;
    d.canonicalize_in_place();
    return d;
  }

  bool is_canonical() const { return canonicalize().slices_ == slices_; }

  friend bool operator==(Diagram const& a, Diagram const& b) {
    return a.dom_ == b.dom_ && a.slices_ == b.slices_;
  }
  friend bool operator<(Diagram const& a, Diagram const& b) {
    return std::tie(a.dom_, a.slices_) < std::tie(b.dom_, b.slices_);
  }

  static ObjectWord apply(ObjectWord const& w, Slice const& s,
                          std::size_t height = 0) {
    auto const& g = s.gen;
    if (s.offset < 0 || s.offset + g.dom.size() > w.size()
        || w.sub(s.offset, g.dom.size()) != g.dom) {
      std::string actual = s.offset >= 0 && s.offset <= int(w.size())
                               ? w.sub(s.offset, g.dom.size()).to_text()
                               : "<out of range>";
      throw Error(ErrorCode::type_mismatch,
                  "slice " + std::to_string(height) + " (" + g.to_text()
                      + " at offset " + std::to_string(s.offset)
                      + "): expected " + g.dom.to_text() + ", found "
                      + actual + " in word " + w.to_text());
    }
    return w.sub(0, s.offset) + g.cod
           + w.sub(s.offset + g.dom.size(), std::string::npos);
  }

 private:
  static ObjectWord replay(ObjectWord w, std::vector<Slice> const& slices) {
    for (std::size_t h = 0; h < slices.size(); ++h) {
      w = apply(w, slices[h], h);
    }
    return w;
  }

  void canonicalize_in_place() { slices_ = canonical_slices(dom_.size(), slices_); }

  ObjectWord dom_;
  ObjectWord cod_;
  std::vector<Slice> slices_;
};

// g then f, i.e. f o g with g drawn below.
inline Diagram compose(Diagram const& f, Diagram const& g) {
  if (f.dom() != g.cod()) {
    throw Error(ErrorCode::type_mismatch,
                "cannot compose: lower codomain " + g.cod().to_text()
                    + " vs upper domain " + f.dom().to_text());
  }
  auto slices = g.slices();
  slices.insert(slices.end(), f.slices().begin(), f.slices().end());
  return Diagram::from_slices(g.dom(), std::move(slices));
}

// f to the left of g.
inline Diagram tensor(Diagram const& f, Diagram const& g) {
  auto slices = f.slices();
  int shift   = static_cast<int>(f.cod().size());
  for (auto s : g.slices()) {
    s.offset += shift;
    slices.push_back(std::move(s));
  }
  return Diagram::from_slices(f.dom() + g.dom(), std::move(slices));
}

// Finite formal sum of diagrams sharing dom and cod.
class LinearCombination {
 public:
  using Terms = std::map<Diagram, Scalar>;

  LinearCombination() = default;
  LinearCombination(ObjectWord dom, ObjectWord cod, ParamSet params)
      : dom_(std::move(dom)), cod_(std::move(cod)), params_(std::move(params)) {}

  static LinearCombination of(Diagram const& d, ParamSet const& ps) {
    return of(d, Scalar::one(ps));
  }
  static LinearCombination of(Diagram const& d, Scalar const& c) {
    LinearCombination lc(d.dom(), d.cod(), c.params());
    lc.add(d, c);
    return lc;
  }

  ObjectWord const& dom() const { return dom_; }
  ObjectWord const& cod() const { return cod_; }
  ParamSet const& params() const { return params_; }
  Terms const& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(Diagram const& d) const {
    auto it = terms_.find(d);
    return it == terms_.end() ? Scalar::zero(params_) : it->second;
  }

  void add(Diagram const& d, Scalar const& c) {
    if (d.dom() != dom_ || d.cod() != cod_) {
      throw Error(ErrorCode::type_mismatch,
                  "term " + d.dom().to_text() + " -> " + d.cod().to_text()
                      + " in combination " + dom_.to_text() + " -> "
                      + cod_.to_text());
    }
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  LinearCombination& operator+=(LinearCombination const& b) {
    check_type(b);
    for (auto const& [d, c] : b.terms_) add(d, c);
    return *this;
  }
  LinearCombination& operator-=(LinearCombination const& b) {
    check_type(b);
    for (auto const& [d, c] : b.terms_) add(d, -c);
    return *this;
  }
  LinearCombination& operator*=(Scalar const& s) {
    Terms out;
    for (auto const& [d, c] : terms_) {
      Scalar p = c * s;
      if (!p.is_zero()) out.emplace(d, std::move(p));
    }
    terms_ = std::move(out);
    return *this;
  }

  friend LinearCombination operator+(LinearCombination a,
                                     LinearCombination const& b) {
    return a += b;
  }
  friend LinearCombination operator-(LinearCombination a,
                                     LinearCombination const& b) {
    return a -= b;
  }
  friend LinearCombination operator*(Scalar const& s, LinearCombination a) {
    return a *= s;
  }

  friend bool operator==(LinearCombination const& a,
                         LinearCombination const& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.terms_ == b.terms_;
  }

 private:
  void check_type(LinearCombination const& b) const {
    if (b.dom_ != dom_ || b.cod_ != cod_) {
      throw Error(ErrorCode::type_mismatch,
                  "adding " + b.dom_.to_text() + " -> " + b.cod_.to_text()
                      + " to " + dom_.to_text() + " -> " + cod_.to_text());
    }
  }

  ObjectWord dom_;
  ObjectWord cod_;
  ParamSet params_;
  Terms terms_;
};

inline LinearCombination lc_scale(Scalar const& s, LinearCombination const& a) {
  return s * a;
}

inline LinearCombination lc_add(LinearCombination const& a,
                                LinearCombination const& b) {
  return a + b;
}

inline LinearCombination lc_compose(LinearCombination const& f,
                                    LinearCombination const& g) {
  if (f.dom() != g.cod()) {
    throw Error(ErrorCode::type_mismatch,
                "cannot compose: lower codomain " + g.cod().to_text()
                    + " vs upper domain " + f.dom().to_text());
  }
  LinearCombination r(g.dom(), f.cod(), f.params());
  for (auto const& [df, cf] : f.terms()) {
    for (auto const& [dg, cg] : g.terms()) r.add(compose(df, dg), cf * cg);
  }
  return r;
}

inline LinearCombination lc_tensor(LinearCombination const& f,
                                   LinearCombination const& g) {
  LinearCombination r(f.dom() + g.dom(), f.cod() + g.cod(), f.params());
  for (auto const& [df, cf] : f.terms()) {
    for (auto const& [dg, cg] : g.terms()) r.add(tensor(df, dg), cf * cg);
  }
  return r;
}

// Coefficients with the given parameters replaced by values.
inline LinearCombination lc_substitute(LinearCombination const& a,
                                       std::map<std::string, Rational> const& values) {
  LinearCombination r(a.dom(), a.cod(), a.params());
  for (auto const& [d, c] : a.terms()) r.add(d, c.substitute(values));
  return r;
}

}  // namespace diacat

#endif  // DIACAT_DIAGRAM_HPP_
