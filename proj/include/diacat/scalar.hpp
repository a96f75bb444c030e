#ifndef DIACAT_SCALAR_HPP_
#define DIACAT_SCALAR_HPP_

// Exact coefficients: Laurent polynomials over Q in a fixed, ordered set of
// named parameters.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace diacat {

using Rational = mpq_class;

inline std::string to_string(Rational const& q) { return q.get_str(); }

// Parses "a", "-a", "a/b". Throws ParseError on malformed input.
inline Rational parse_rational(std::string_view text, std::size_t base = 0) {
  std::string s(text);
  auto bad = [&] { return ParseError(base, "malformed rational '" + s + "'"); };
  if (s.empty()) throw bad();
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false, digit_after_slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      seen_digit = true;
      if (seen_slash) digit_after_slash = true;
    } else if (s[i] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
    } else {
      throw bad();
    }
  }
  if (!seen_digit || (seen_slash && !digit_after_slash)) throw bad();
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  q.set_str(s, 10);
  if (q.get_den() == 0) throw ParseError(base, "zero denominator");
  q.canonicalize();
  return q;
}

class ParamSet {
 public:
  ParamSet() : names_(std::make_shared<std::vector<std::string>>()) {}

  explicit ParamSet(std::vector<std::string> names)
      : names_(std::make_shared<std::vector<std::string>>(std::move(names))) {
    auto sorted = *names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::invalid_argument, "duplicate parameter name");
    }
  }

  std::vector<std::string> const& names() const { return *names_; }
  std::size_t size() const { return names_->size(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i) {
      if ((*names_)[i] == name) return i;
    }
    return std::nullopt;
  }

  friend bool operator==(ParamSet const& a, ParamSet const& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<std::vector<std::string> const> names_;
};

class Scalar {
 public:
  using Exponents = std::vector<int>;
  using Terms     = std::map<Exponents, Rational>;

  Scalar() = default;

  explicit Scalar(ParamSet params) : params_(std::move(params)) {}

  Scalar(ParamSet params, Rational const& c) : params_(std::move(params)) {
    if (c != 0) terms_.emplace(Exponents(params_.size(), 0), c);
  }

  static Scalar zero(ParamSet const& ps) { return Scalar(ps); }
  static Scalar one(ParamSet const& ps) { return Scalar(ps, 1); }

  // c * p^e for a single named parameter.
  static Scalar monomial(ParamSet const& ps, std::string_view name, int e,
                         Rational const& c = 1) {
    auto idx = ps.index_of(name);
    if (!idx) {
      throw Error(ErrorCode::param_mismatch,
                  "unknown parameter '" + std::string(name) + "'");
    }
    Scalar s(ps);
    if (c != 0) {
      Exponents ex(ps.size(), 0);
      ex[*idx] = e;
      s.terms_.emplace(std::move(ex), c);
    }
    return s;
  }

  ParamSet const& params() const { return params_; }
  Terms const& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    auto const& ex = terms_.begin()->first;
    return std::all_of(ex.begin(), ex.end(), [](int e) { return e == 0; });
  }

  Rational constant_value() const {
    if (!is_constant()) {
      throw Error(ErrorCode::unassigned_parameter,
                  "scalar '" + to_text() + "' is not a constant");
    }
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
  }

  Scalar& operator+=(Scalar const& b) {
    check_same(b);
    for (auto const& [ex, c] : b.terms_) add_term(ex, c);
    return *this;
  }

  Scalar& operator-=(Scalar const& b) {
    check_same(b);
    for (auto const& [ex, c] : b.terms_) add_term(ex, -c);
    return *this;
  }

  Scalar& operator*=(Rational const& q) {
    if (q == 0) {
      terms_.clear();
    } else {
      for (auto& [ex, c] : terms_) c *= q;
    }
    return *this;
  }

  friend Scalar operator+(Scalar a, Scalar const& b) { return a += b; }
  friend Scalar operator-(Scalar a, Scalar const& b) { return a -= b; }
  friend Scalar operator-(Scalar a) {
    for (auto& [ex, c] : a.terms_) c = -c;
    return a;
  }
  friend Scalar operator*(Scalar a, Rational const& q) { return a *= q; }
  friend Scalar operator*(Rational const& q, Scalar a) { return a *= q; }

  friend Scalar operator*(Scalar const& a, Scalar const& b) {
    a.check_same(b);
    Scalar r(a.params_);
    Exponents ex(a.params_.size());
    for (auto const& [ea, ca] : a.terms_) {
      for (auto const& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = ea[i] + eb[i];
        r.add_term(ex, ca * cb);
      }
    }
    return r;
  }

  Scalar& operator*=(Scalar const& b) { return *this = *this * b; }

  friend bool operator==(Scalar const& a, Scalar const& b) {
    return a.params_ == b.params_ && a.terms_ == b.terms_;
  }

  friend bool operator<(Scalar const& a, Scalar const& b) {
    return a.terms_ < b.terms_;
  }

  // Replaces every assigned parameter by its value. Unassigned parameters
  // are kept. A parameter assigned 0 must not occur with a negative power.
  Scalar substitute(std::map<std::string, Rational> const& assignment) const {
    std::vector<std::optional<Rational>> value(params_.size());
    for (auto const& [name, v] : assignment) {
      if (auto i = params_.index_of(name)) value[*i] = v;
    }
    Scalar r(params_);
    for (auto const& [ex, c] : terms_) {
      Rational coeff = c;
      Exponents out  = ex;
      for (std::size_t i = 0; i < ex.size(); ++i) {
        if (!value[i] || ex[i] == 0) continue;
        if (*value[i] == 0) {
          if (ex[i] < 0) {
            throw Error(ErrorCode::division_by_zero,
                        "parameter '" + params_.names()[i]
                            + "' set to 0 occurs with negative exponent");
          }
          coeff = 0;
          break;
        }
        Rational p = 1;
        Rational base = ex[i] > 0 ? *value[i] : Rational(1 / *value[i]);
        for (int k = 0; k < std::abs(ex[i]); ++k) p *= base;
        coeff *= p;
        out[i] = 0;
      }
      if (coeff != 0) r.add_term(out, coeff);
    }
    return r;
  }

  // Renders "c * p1^e1 p2^e2 + ..." with terms in ascending exponent order;
  // zero renders as "0". Parameters with exponent 0 are omitted.
  std::string to_text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto const& [ex, c] : terms_) {
      if (!first) out += " + ";
      first = false;
      out += c.get_str();
      bool any = false;
      for (std::size_t i = 0; i < ex.size(); ++i) {
        if (ex[i] == 0) continue;
        out += any ? " " : " * ";
        any = true;
        out += params_.names()[i] + "^" + std::to_string(ex[i]);
      }
    }
    return out;
  }

  // Accepts the rendered form plus a looser hand-written form: terms joined
  // by '+' or '-', an optional rational coefficient, factors "p" or "p^e"
  // separated by spaces or '*'.
  static Scalar parse(ParamSet const& ps, std::string_view text,
                      std::size_t base = 0);

 private:
  void check_same(Scalar const& b) const {
    if (!(params_ == b.params_)) {
      throw Error(ErrorCode::param_mismatch,
                  "scalars over different parameter sets");
    }
  }

  void add_term(Exponents const& ex, Rational const& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(ex, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ParamSet params_;
  Terms terms_;
};

inline Scalar Scalar::parse(ParamSet const& ps, std::string_view text,
                            std::size_t base) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](std::string const& msg) {
    return ParseError(base + i, msg);
  };
  Scalar result(ps);
  skip();
  if (i == text.size()) throw fail("empty scalar");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (!first) {
      if (text[i] == '+') {
        ++i;
      } else if (text[i] == '-') {
        sign = -1;
        ++i;
      } else {
        throw fail("expected '+' or '-' between scalar terms");
      }
      skip();
    }
    first = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
      if (text[i] == '-') sign = -sign;
      ++i;
      skip();
    }
    Rational coeff = 1;
    std::size_t start = i;
    while (i < text.size()
           && (std::isdigit(static_cast<unsigned char>(text[i]))
               || text[i] == '/')) {
      ++i;
    }
    if (i > start) coeff = parse_rational(text.substr(start, i - start),
                                          base + start);
    Exponents ex(ps.size(), 0);
    bool factors = false;
    while (true) {
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
      if (i >= text.size()
          || !(std::isalpha(static_cast<unsigned char>(text[i]))
               || text[i] == '_')) {
        break;
      }
      std::size_t ns = i;
      while (i < text.size()
             && (std::isalnum(static_cast<unsigned char>(text[i]))
                 || text[i] == '_')) {
        ++i;
      }
      std::string name(text.substr(ns, i - ns));
      auto idx = ps.index_of(name);
      if (!idx) {
        throw ParseError(base + ns, "unknown parameter '" + name + "'");
      }
      int e = 1;
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip();
        std::size_t es = i;
        if (i < text.size() && text[i] == '-') ++i;
        while (i < text.size()
               && std::isdigit(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        if (i == es || (i == es + 1 && text[es] == '-')) {
          throw fail("expected exponent");
        }
        e = std::stoi(std::string(text.substr(es, i - es)));
      }
      ex[*idx] += e;
      factors = true;
    }
    if (i == start && !factors) throw fail("expected scalar term");
    result.add_term(ex, sign * coeff);
  }
  return result;
}

}  // namespace diacat

#endif  // DIACAT_SCALAR_HPP_
