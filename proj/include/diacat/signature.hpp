#ifndef DIACAT_SIGNATURE_HPP_
#define DIACAT_SIGNATURE_HPP_

// Generating objects and generating morphisms of a presented strict
// monoidal category.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace diacat {

// Objects are single characters: '^' (up) and 'v' (down). The
// Temperley-Lieb object is '^' declared self-dual.
struct ObjectSymbol {
  char code;
  std::string name;
  std::optional<char> dual_of;
};

// A tensor product of generating objects; empty is the unit object.
class ObjectWord {
 public:
  ObjectWord() = default;
  explicit ObjectWord(std::string letters) : letters_(std::move(letters)) {}

  static ObjectWord repeat(char c, std::size_t n) {
    return ObjectWord(std::string(n, c));
  }

  std::string const& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }

  ObjectWord sub(std::size_t pos, std::size_t len) const {
    return ObjectWord(letters_.substr(pos, len));
  }

  friend ObjectWord operator+(ObjectWord const& a, ObjectWord const& b) {
    return ObjectWord(a.letters_ + b.letters_);
  }

  friend auto operator<=>(ObjectWord const&, ObjectWord const&) = default;
  friend bool operator==(ObjectWord const&, ObjectWord const&) = default;

  // DSL spelling; the unit object is "1".
  std::string to_text() const { return letters_.empty() ? "1" : letters_; }

 private:
  std::string letters_;
};

enum class Payload {
  coupon,
  dot,
  token,
  cup,
  cap,
  crossing,
  inverse_crossing,
};

inline char const* to_string(Payload p) {
  switch (p) {
    case Payload::coupon: return "coupon";
    case Payload::dot: return "dot";
    case Payload::token: return "token";
    case Payload::cup: return "cup";
    case Payload::cap: return "cap";
    case Payload::crossing: return "crossing";
    case Payload::inverse_crossing: return "inverse-crossing";
  }
  return "?";
}

struct GeneratorDecl {
  std::string name;
  ObjectWord dom;
  ObjectWord cod;
  Payload payload;
  // Generators with a label ("tok[g1]", "box[f]") are families indexed by
  // the label; dom/cod are shared unless overridden per label.
  bool labelled = false;
};

// A generator placed in a diagram: declaration name plus label.
struct Gen {
  std::string name;
  std::string label;
  ObjectWord dom;
  ObjectWord cod;
  Payload payload = Payload::coupon;

  bool is_crossing() const {
    return payload == Payload::crossing
           || payload == Payload::inverse_crossing;
  }
  bool is_decoration() const {
    return payload == Payload::dot || payload == Payload::token;
  }

  std::string to_text() const {
    return label.empty() ? name : name + "[" + label + "]";
  }

  // dom/cod are determined by (name, label) inside one signature.
  friend bool operator==(Gen const& a, Gen const& b) {
    return a.name == b.name && a.label == b.label;
  }
  friend bool operator<(Gen const& a, Gen const& b) {
    return std::tie(a.name, a.label) < std::tie(b.name, b.label);
  }
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(ParamSet params) : params_(std::move(params)) {}

  ParamSet const& params() const { return params_; }
  std::vector<ObjectSymbol> const& objects() const { return objects_; }
  std::vector<GeneratorDecl> const& generators() const { return gens_; }

  void add_object(ObjectSymbol o) { objects_.push_back(std::move(o)); }
  void add_generator(GeneratorDecl g) { gens_.push_back(std::move(g)); }

  // Valid labels for a labelled generator; for coupons each label carries
  // its own dom/cod.
  void add_label(std::string const& gen, std::string const& label,
                 std::optional<std::pair<ObjectWord, ObjectWord>> type = {}) {
    labels_[gen].push_back(label);
    if (type) label_types_[{gen, label}] = *type;
  }

  std::vector<std::string> labels(std::string const& gen) const {
    auto it = labels_.find(gen);
    return it == labels_.end() ? std::vector<std::string>{} : it->second;
  }

  bool has_object(char c) const {
    return std::any_of(objects_.begin(), objects_.end(),
                       [c](auto const& o) { return o.code == c; });
  }

  GeneratorDecl const* find(std::string_view name) const {
    for (auto const& g : gens_) {
      if (g.name == name) return &g;
    }
    return nullptr;
  }

  bool has_payload(Payload p) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [p](auto const& g) { return g.payload == p; });
  }

  // Builds a placed generator, validating the label.
  Gen instance(std::string_view name, std::string_view label = {}) const {
    auto const* decl = find(name);
    if (decl == nullptr) {
      throw Error(ErrorCode::invalid_label,
                  "unknown generator '" + std::string(name) + "'");
    }
    Gen g{decl->name, std::string(label), decl->dom, decl->cod,
          decl->payload};
    if (decl->labelled) {
      auto const& ls = labels_.count(decl->name)
                           ? labels_.at(decl->name)
                           : std::vector<std::string>{};
      if (std::find(ls.begin(), ls.end(), label) == ls.end()) {
        throw Error(ErrorCode::invalid_label,
                    "label '" + std::string(label) + "' not valid for '"
                        + decl->name + "'");
      }
      auto it = label_types_.find({decl->name, std::string(label)});
      if (it != label_types_.end()) {
        g.dom = it->second.first;
        g.cod = it->second.second;
      }
    } else if (!label.empty()) {
      throw Error(ErrorCode::invalid_label,
                  "generator '" + decl->name + "' takes no label");
    }
    return g;
  }

 private:
  ParamSet params_;
  std::vector<ObjectSymbol> objects_;
  std::vector<GeneratorDecl> gens_;
  std::map<std::string, std::vector<std::string>> labels_;
  std::map<std::pair<std::string, std::string>,
           std::pair<ObjectWord, ObjectWord>>
      label_types_;
};

}  // namespace diacat

#endif  // DIACAT_SIGNATURE_HPP_
