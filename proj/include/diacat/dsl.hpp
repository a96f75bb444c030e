#ifndef DIACAT_DSL_HPP_
#define DIACAT_DSL_HPP_

// Text syntax for diagrams and linear combinations.
//
//   lc    := ["-"] lterm (("+" | "-") lterm)*
//   lterm := ["{" scalar "}"] expr
//   expr  := term (";" term)*        left operand at the bottom
//   term  := atom ("*" atom)*        left operand leftmost
//   atom  := "id(" word ")" | name ["[" label "]"] | "(" lc ")"
//   word  := sequence of '^', 'v', '1' ("1" alone is the unit object)

#include <cctype>
#include <string>
#include <string_view>

#include "diagram.hpp"
#include "error.hpp"
#include "scalar.hpp"
#include "signature.hpp"

namespace diacat {

inline std::string render(Diagram const& d) {
  if (d.is_identity()) return "id(" + d.dom().to_text() + ")";
  auto hs = d.heights();
  std::string out;
  for (std::size_t h = 0; h < d.size(); ++h) {
    auto const& s = d.slices()[h];
    auto const& w = hs[h];
    std::string row;
    if (s.offset > 0) row += "id(" + w.sub(0, s.offset).to_text() + ") * ";
    row += s.gen.to_text();
    std::size_t rest = s.offset + s.gen.dom.size();
    if (rest < w.size()) row += " * id(" + w.sub(rest, w.size()).to_text() + ")";
    if (h) out += " ; ";
    out += row;
  }
  return out;
}

inline std::string render(LinearCombination const& lc) {
  if (lc.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto const& [d, c] : lc.terms()) {
    if (!first) out += " + ";
    first = false;
    if (!(c == Scalar::one(lc.params()))) out += "{" + c.to_text() + "} ";
    out += render(d);
  }
  return out;
}

namespace detail {

class Parser {
 public:
  Parser(Signature const& sig, std::string_view text)
      : sig_(sig), text_(text) {}

  LinearCombination parse() {
    auto lc = parse_lc();
    skip();
    if (pos_ != text_.size()) throw error("unexpected '" + peek_str() + "'");
    return lc;
  }

 private:
  ParseError error(std::string const& msg) const {
    return ParseError(pos_, msg);
  }

  void skip() {
    while (pos_ < text_.size()
           && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  std::string peek_str() const {
    return pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input";
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw error(std::string("expected '") + c + "', found '" + peek_str()
                  + "'");
    }
  }

  LinearCombination parse_lc() {
    bool neg = accept('-');
    auto acc = parse_lterm();
    if (neg) acc *= Scalar(sig_.params(), -1);
    while (true) {
      skip();
      std::size_t at = pos_;
      int sign = 0;
      if (accept('+')) {
        sign = 1;
      } else if (accept('-')) {
        sign = -1;
      } else {
        break;
      }
      auto t = parse_lterm();
      if (t.dom() != acc.dom() || t.cod() != acc.cod()) {
        throw ParseError(at, "summands have different types: "
                                 + acc.dom().to_text() + " -> "
                                 + acc.cod().to_text() + " vs "
                                 + t.dom().to_text() + " -> "
                                 + t.cod().to_text(),
                         ErrorCode::type_mismatch);
      }
      if (sign > 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  }

  LinearCombination parse_lterm() {
    skip();
    if (accept('{')) {
      std::size_t start = pos_;
      std::size_t close = text_.find('}', pos_);
      if (close == std::string_view::npos) throw error("unterminated '{'");
      Scalar c = Scalar::parse(sig_.params(),
                               text_.substr(start, close - start), start);
      pos_ = close + 1;
      auto e = parse_expr();
      e *= c;
      return e;
    }
    return parse_expr();
  }

  LinearCombination parse_expr() {
    auto acc   = parse_term();
    int height = 0;
    while (true) {
      skip();
      std::size_t at = pos_;
      if (!accept(';')) break;
      ++height;
      auto upper = parse_term();
      if (upper.dom() != acc.cod()) {
        throw ParseError(at, "type error at height " + std::to_string(height)
                                 + ": expected " + acc.cod().to_text()
                                 + ", got " + upper.dom().to_text(),
                         ErrorCode::type_mismatch);
      }
      acc = lc_compose(upper, acc);
    }
    return acc;
  }

  LinearCombination parse_term() {
    auto acc = parse_atom();
    while (accept('*')) acc = lc_tensor(acc, parse_atom());
    return acc;
  }

  LinearCombination parse_atom() {
    skip();
    if (accept('(')) {
      auto lc = parse_lc();
      expect(')');
      return lc;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size()
           && (std::isalnum(static_cast<unsigned char>(text_[pos_]))
               || text_[pos_] == '_')) {
      ++pos_;
    }
    if (pos_ == start) throw error("expected a generator, 'id(' or '('");
    std::string name(text_.substr(start, pos_ - start));
    if (name == "id") {
      expect('(');
      skip();
      std::string letters;
      bool any = false;
      while (pos_ < text_.size() && text_[pos_] != ')') {
        char c = text_[pos_];
        if (c == '1') {
          any = true;
        } else if (c == '^' || c == 'v') {
          if (!sig_.has_object(c)) {
            throw error(std::string("object '") + c
                        + "' not in this presentation");
          }
          letters += c;
          any = true;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          throw error(std::string("bad object letter '") + c + "'");
        }
        ++pos_;
      }
      if (!any) throw error("empty object word");
      expect(')');
      return LinearCombination::of(Diagram::identity(ObjectWord(letters)),
                                   sig_.params());
    }
    if (name == "rcup") name = "cup";
    if (name == "rcap") name = "cap";
    std::string label;
    skip();
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      std::size_t ls = pos_;
      std::size_t close = text_.find(']', pos_);
      if (close == std::string_view::npos) throw error("unterminated '['");
      label = std::string(text_.substr(ls, close - ls));
      pos_  = close + 1;
    }
    try {
      return LinearCombination::of(Diagram::generator(sig_.instance(name, label)),
                                   sig_.params());
    } catch (Error const& e) {
      if (e.code() == ErrorCode::parse_error) throw;
      throw ParseError(start, e.what(), e.code());
    }
  }

  Signature const& sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline LinearCombination parse_expression(Signature const& sig,
                                          std::string_view text) {
  return detail::Parser(sig, text).parse();
}

// Parses an expression that must be a single diagram with coefficient 1.
inline Diagram parse_diagram(Signature const& sig, std::string_view text) {
  auto lc = parse_expression(sig, text);
  if (lc.size() != 1 || !(lc.terms().begin()->second
                          == Scalar::one(sig.params()))) {
    throw ParseError(0, "expected a single diagram");
  }
  return lc.terms().begin()->first;
}

}  // namespace diacat

#endif  // DIACAT_DSL_HPP_
