#ifndef DIACAT_PRESENTATION_HPP_
#define DIACAT_PRESENTATION_HPP_

// Presentations by generators and relations, and the preset catalog.

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "diagram.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "frobenius.hpp"
#include "signature.hpp"

namespace diacat {

enum class Strategy { SYM, DAHA, BRAID_FREE, HECKE, WREATH, AWREATH, TL, OB };

inline char const* to_string(Strategy s) {
  switch (s) {
    case Strategy::SYM: return "SYM";
    case Strategy::DAHA: return "DAHA";
    case Strategy::BRAID_FREE: return "BRAID_FREE";
    case Strategy::HECKE: return "HECKE";
    case Strategy::WREATH: return "WREATH";
    case Strategy::AWREATH: return "AWREATH";
    case Strategy::TL: return "TL";
    case Strategy::OB: return "OB";
  }
  return "?";
}

// lhs = rhs, both with the same dom and cod.
struct RelationRule {
  std::string name;
  Diagram lhs;
  LinearCombination rhs;
};

class Presentation {
 public:
  Presentation(std::string id, Signature sig, Strategy strategy)
      : id_(std::move(id)), sig_(std::move(sig)), strategy_(strategy) {}

  std::string const& id() const { return id_; }
  Signature const& signature() const { return sig_; }
  ParamSet const& params() const { return sig_.params(); }
  Strategy strategy() const { return strategy_; }
  std::vector<RelationRule> const& relations() const { return relations_; }
  std::optional<FrobeniusData> const& frobenius() const { return frobenius_; }

  FrobeniusData const& frobenius_data() const {
    if (!frobenius_) {
      throw Error(ErrorCode::invalid_argument,
                  "presentation " + id_ + " has no Frobenius data");
    }
    return *frobenius_;
  }

  void set_frobenius(FrobeniusData f) { frobenius_ = std::move(f); }

  void add_relation(std::string name, std::string const& lhs,
                    std::string const& rhs) {
    Diagram l           = parse_diagram(sig_, lhs);
    LinearCombination r = parse_expression(sig_, rhs);
    if (l.dom() != r.dom() || l.cod() != r.cod()) {
      throw Error(ErrorCode::type_mismatch,
                  "relation " + name + " does not type-check");
    }
    relations_.push_back({std::move(name), std::move(l), std::move(r)});
  }

  // Adds a generic coupon box[label] : dom -> cod, e.g. for mates and
  // traces of arbitrary endomorphisms in evaluation models.
  Presentation with_coupon(std::string const& label, ObjectWord dom,
                           ObjectWord cod) const {
    Presentation p = *this;
    if (!p.sig_.find("box")) {
      p.sig_.add_generator({"box", {}, {}, Payload::coupon, true});
    }
    p.sig_.add_label("box", label, std::pair{std::move(dom), std::move(cod)});
    return p;
  }

  Diagram diagram(std::string const& text) const {
    return parse_diagram(sig_, text);
  }
  LinearCombination expr(std::string const& text) const {
    return parse_expression(sig_, text);
  }

  Scalar scalar(Rational const& q) const { return Scalar(sig_.params(), q); }

 private:
  std::string id_;
  Signature sig_;
  Strategy strategy_;
  std::vector<RelationRule> relations_;
  std::optional<FrobeniusData> frobenius_;
};

namespace detail {

inline Signature up_signature(std::vector<std::string> params = {}) {
  Signature sig{ParamSet(std::move(params))};
  sig.add_object({'^', "up", std::nullopt});
  return sig;
}

inline void add_crossing(Signature& sig) {
  sig.add_generator({"s", ObjectWord("^^"), ObjectWord("^^"),
                     Payload::crossing});
}

inline void add_dot(Signature& sig) {
  sig.add_generator({"x", ObjectWord("^"), ObjectWord("^"), Payload::dot});
}

inline void add_symmetric_relations(Presentation& p) {
  p.add_relation("involution", "s ; s", "id(^^)");
  p.add_relation("braid", "s * id(^) ; id(^) * s ; s * id(^)",
                 "id(^) * s ; s * id(^) ; id(^) * s");
}

// dot(top-left) o crossing - crossing o dot(bottom-right) = correction.
inline void add_dot_relation(Presentation& p, std::string const& correction) {
  p.add_relation("dot-crossing", "s ; x * id(^)",
                 "id(^) * x ; s + " + correction);
}

inline std::string canonical_tokens(FrobeniusData const& f) {
  std::string out;
  bool first = true;
  for (std::size_t b = 0; b < f.dim(); ++b) {
    for (std::size_t c = 0; c < f.dim(); ++c) {
      if (f.dual_basis[b][c] == 0) continue;
      if (!first) out += " + ";
      first = false;
      out += "{" + f.dual_basis[b][c].get_str() + "} tok[" + f.basis[b]
             + "] * tok[" + f.basis[c] + "]";
    }
  }
  return out;
}

inline void add_wreath_part(Presentation& p, Signature& sig,
                            FrobeniusData const& f) {
  (void)sig;
  for (std::size_t a = 0; a < f.dim(); ++a) {
    for (std::size_t b = 0; b < f.dim(); ++b) {
      std::string rhs;
      for (std::size_t c = 0; c < f.dim(); ++c) {
        if (f.mult[a][b][c] == 0) continue;
        if (!rhs.empty()) rhs += " + ";
        rhs += "{" + f.mult[a][b][c].get_str() + "} tok[" + f.basis[c] + "]";
      }
      // token b below token a is the token ab
      p.add_relation("token-product", "tok[" + f.basis[b] + "] ; tok["
                                          + f.basis[a] + "]",
                     rhs);
    }
  }
  if (auto u = f.unit_index()) {
    p.add_relation("token-unit", "tok[" + f.basis[*u] + "]", "id(^)");
  }
  for (auto const& a : f.basis) {
    p.add_relation("token-slide", "tok[" + a + "] * id(^) ; s",
                   "s ; id(^) * tok[" + a + "]");
  }
}

inline std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace detail

// Preset catalog: S, AHDEG (alias DAHA), BRAID, HECKE, TL, WREATH, AWREATH,
// OB. WREATH and AWREATH need the order r of the cyclic group.
inline Presentation preset(std::string const& name,
                           std::optional<int> r = std::nullopt) {
  std::string id = detail::upper(name);
  if (id == "DAHA") id = "AHDEG";
  if (id == "S") {
    auto sig = detail::up_signature();
    detail::add_crossing(sig);
    Presentation p("S", sig, Strategy::SYM);
    detail::add_symmetric_relations(p);
    return p;
  }
  if (id == "AHDEG") {
    auto sig = detail::up_signature();
    detail::add_crossing(sig);
    detail::add_dot(sig);
    Presentation p("AHDEG", sig, Strategy::DAHA);
    detail::add_symmetric_relations(p);
    detail::add_dot_relation(p, "id(^^)");
    return p;
  }
  if (id == "BRAID" || id == "HECKE") {
    bool hecke = id == "HECKE";
    auto sig   = detail::up_signature(hecke ? std::vector<std::string>{"z"}
                                            : std::vector<std::string>{});
    detail::add_crossing(sig);
    sig.add_generator({"si", ObjectWord("^^"), ObjectWord("^^"),
                       Payload::inverse_crossing});
    Presentation p(id, sig, hecke ? Strategy::HECKE : Strategy::BRAID_FREE);
    p.add_relation("inverse-right", "si ; s", "id(^^)");
    p.add_relation("inverse-left", "s ; si", "id(^^)");
    p.add_relation("braid", "s * id(^) ; id(^) * s ; s * id(^)",
                   "id(^) * s ; s * id(^) ; id(^) * s");
    if (hecke) p.add_relation("skein", "s", "si + {z} id(^^)");
    return p;
  }
  if (id == "TL") {
    Signature sig{ParamSet({"delta"})};
    sig.add_object({'^', "X", '^'});
    sig.add_generator({"cup", ObjectWord(""), ObjectWord("^^"), Payload::cup});
    sig.add_generator({"cap", ObjectWord("^^"), ObjectWord(""), Payload::cap});
    Presentation p("TL", sig, Strategy::TL);
    p.add_relation("zigzag-right", "cup * id(^) ; id(^) * cap", "id(^)");
    p.add_relation("zigzag-left", "id(^) * cup ; cap * id(^)", "id(^)");
    p.add_relation("circle", "cup ; cap", "{delta} id(1)");
    return p;
  }
  if (id == "WREATH" || id == "AWREATH") {
    if (!r) {
      throw Error(ErrorCode::missing_parameter,
                  id + " needs the cyclic group order r");
    }
    auto f = FrobeniusData::cyclic_group(*r);
    validate_frobenius(f);
    auto sig = detail::up_signature();
    detail::add_crossing(sig);
    sig.add_generator({"tok", ObjectWord("^"), ObjectWord("^"),
                       Payload::token, true});
    for (auto const& b : f.basis) sig.add_label("tok", b);
    bool affine = id == "AWREATH";
    if (affine) detail::add_dot(sig);
    Presentation p(id, sig, affine ? Strategy::AWREATH : Strategy::WREATH);
    detail::add_symmetric_relations(p);
    detail::add_wreath_part(p, sig, f);
    if (affine) {
      detail::add_dot_relation(p, detail::canonical_tokens(f));
      for (auto const& a : f.basis) {
        p.add_relation("dot-token", "x ; tok[" + a + "]", "tok[" + a + "] ; x");
      }
    }
    p.set_frobenius(std::move(f));
    return p;
  }
  if (id == "OB") {
    Signature sig{ParamSet({"delta"})};
    sig.add_object({'^', "up", 'v'});
    sig.add_object({'v', "down", '^'});
    detail::add_crossing(sig);
    sig.add_generator({"cup", ObjectWord(""), ObjectWord("v^"), Payload::cup});
    sig.add_generator({"cap", ObjectWord("^v"), ObjectWord(""), Payload::cap});
    sig.add_generator({"lcup", ObjectWord(""), ObjectWord("^v"), Payload::cup});
    sig.add_generator({"lcap", ObjectWord("v^"), ObjectWord(""), Payload::cap});
    Presentation p("OB", sig, Strategy::OB);
    detail::add_symmetric_relations(p);
    p.add_relation("rzigzag-down", "cup * id(v) ; id(v) * cap", "id(v)");
    p.add_relation("rzigzag-up", "id(^) * cup ; cap * id(^)", "id(^)");
    p.add_relation("lzigzag-up", "lcup * id(^) ; id(^) * lcap", "id(^)");
    p.add_relation("lzigzag-down", "id(v) * lcup ; lcap * id(v)", "id(v)");
    p.add_relation("bubble-ccw", "lcup ; cap", "{delta} id(1)");
    p.add_relation("bubble-cw", "cup ; lcap", "{delta} id(1)");
    return p;
  }
  throw Error(ErrorCode::unknown_preset, "unknown preset '" + name + "'");
}

// Crossings of OB involving a down strand, as composites of the generators.
// Each is a DSL expression for the crossing of the two strands of `pair`.
inline std::string ob_crossing(std::string const& pair) {
  if (pair == "^^") return "s";
  if (pair == "^v") return "cup * id(^v) ; id(v) * s * id(v) ; id(v^) * cap";
  if (pair == "v^") return "id(v^) * lcup ; id(v) * s * id(v) ; lcap * id(^v)";
  if (pair == "vv") {
    return "cup * id(vv) ; id(v) * cup * id(^vv) ; id(vv) * s * id(vv)"
           " ; id(vv^) * cap * id(v) ; id(vv) * cap";
  }
  throw Error(ErrorCode::invalid_argument, "no crossing for '" + pair + "'");
}

inline std::vector<std::string> preset_names() {
  return {"S", "AHDEG", "BRAID", "HECKE", "TL", "WREATH", "AWREATH", "OB"};
}

}  // namespace diacat

#endif  // DIACAT_PRESENTATION_HPP_
