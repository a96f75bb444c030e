#ifndef DIACAT_EVALMODEL_HPP_
#define DIACAT_EVALMODEL_HPP_

// Exact matrix models of presented categories: each object letter goes to
// a vector space of fixed dimension, each generator to a matrix.

#include <map>
#include <string>
#include <utility>

#include "diagram.hpp"
#include "dsl.hpp"
#include "error.hpp"
#include "matrix.hpp"
#include "presentation.hpp"
#include "scalar.hpp"

namespace diacat {

struct ModelAssignment {
  std::map<char, int> obj_dim;
  // keyed by (generator name, label)
  std::map<std::pair<std::string, std::string>, Matrix> gen_mat;
  // Number of extra copies of V on the right that every diagram also acts
  // on; used by the dot action.
  int context = 0;
  // Dots act on strand t as sum_{i,j} e_ij(t) Delta(e_ji) on factors t, t+1, ...
  bool gl_dot = false;
  // Values substituted for parameters before evaluation.
  std::map<std::string, Rational> param_values;

  std::size_t letter_dim(char c) const {
    auto it = obj_dim.find(c);
    if (it == obj_dim.end()) {
      throw Error(ErrorCode::unassigned_generator,
                  std::string("object '") + c + "' has no dimension");
    }
    return static_cast<std::size_t>(it->second);
  }

  std::size_t dim(ObjectWord const& w) const {
    std::size_t d = 1;
    for (char c : w.letters()) d *= letter_dim(c);
    return d;
  }

  std::size_t context_dim() const {
    std::size_t d = 1;
    for (int i = 0; i < context; ++i) d *= letter_dim('^');
    return d;
  }

  void set(std::string const& name, Matrix m, std::string const& label = {}) {
    gen_mat[{name, label}] = std::move(m);
  }
};

namespace detail {

// sum_i e_i (x) e_i as a column (m^2 x 1).
inline Matrix identity_pattern_column(int m) {
  Matrix c(std::size_t(m) * m, 1);
  for (int i = 0; i < m; ++i) c(std::size_t(i) * m + i, 0) = 1;
  return c;
}

inline Matrix flip(int m) {
  Matrix f(std::size_t(m) * m, std::size_t(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) f(std::size_t(j) * m + i, std::size_t(i) * m + j) = 1;
  }
  return f;
}

// (1_L (x) g (x) 1_R) * mat, without forming the Kronecker product.
inline Matrix apply_local(Matrix const& mat, std::size_t left, Matrix const& g,
                          std::size_t right) {
  std::size_t gd = g.cols(), gc = g.rows();
  if (mat.rows() != left * gd * right) {
    throw Error(ErrorCode::shape_mismatch, "model dimensions do not match");
  }
  Matrix out(left * gc * right, mat.cols());
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t a = 0; a < gc; ++a) {
      for (std::size_t b = 0; b < gd; ++b) {
        Rational const& w = g(a, b);
        if (w == 0) continue;
        for (std::size_t r = 0; r < right; ++r) {
          std::size_t dst = (l * gc + a) * right + r;
          std::size_t src = (l * gd + b) * right + r;
          for (std::size_t c = 0; c < mat.cols(); ++c) {
            if (mat(src, c) != 0) out(dst, c) += w * mat(src, c);
          }
        }
      }
    }
  }
  return out;
}

// m * mat + sum_{k > t} P_{t,k} mat on `factors` tensor factors of size m;
// P_{t,k} swaps factors t and k and equals sum_ij e_ij(t) e_ji(k).
inline Matrix apply_gl_dot(Matrix const& mat, int t, int factors, int m) {
  std::vector<std::size_t> weight(factors);
  std::size_t w = 1;
  for (int k = factors - 1; k >= 0; --k) {
    weight[k] = w;
    w *= std::size_t(m);
  }
  Matrix out = Rational(m) * mat;
  for (int k = t + 1; k < factors; ++k) {
    for (std::size_t row = 0; row < mat.rows(); ++row) {
      std::size_t dt = (row / weight[t]) % m;
      std::size_t dk = (row / weight[k]) % m;
      std::size_t src = row + (dk - dt) * weight[t] + (dt - dk) * weight[k];
      for (std::size_t c = 0; c < mat.cols(); ++c) {
        if (mat(src, c) != 0) out(row, c) += mat(src, c);
      }
    }
  }
  return out;
}

}  // namespace detail

// The duality model: ^ and v both go to k^m, cups and caps to the
// coevaluation and evaluation maps, s to the flip, delta to m.
inline ModelAssignment model_ob(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "m must be >= 1");
  ModelAssignment a;
  a.obj_dim['^'] = m;
  a.obj_dim['v'] = m;
  Matrix col     = detail::identity_pattern_column(m);
  a.set("cup", col);
  a.set("lcup", col);
  a.set("cap", col.transpose());
  a.set("lcap", col.transpose());
  a.set("s", detail::flip(m));
  a.param_values["delta"] = m;
  return a;
}

// The symmetric model: ^ goes to k^m and s to the flip.
inline ModelAssignment model_sym(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "m must be >= 1");
  ModelAssignment a;
  a.obj_dim['^'] = m;
  a.set("s", detail::flip(m));
  return a;
}

// Self-dual model of TL: the cup is sum_i e_i (x) e_i, the cap its
// transpose, delta = m.
inline ModelAssignment model_tl(int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "m must be >= 1");
  ModelAssignment a;
  a.obj_dim['^'] = m;
  Matrix col = detail::identity_pattern_column(m);
  a.set("cup", col);
  a.set("cap", col.transpose());
  a.param_values["delta"] = m;
  return a;
}

// The gl_m model on V^{(x)n} (x) V^{(x)p}: s is the flip, the dot is the
// shifted action m + sum_{k>t} P_{t,k}.
inline ModelAssignment model_daha(int m, int p) {
  if (m < 1 || p < 0) {
    throw Error(ErrorCode::invalid_argument, "need m >= 1 and p >= 0");
  }
  ModelAssignment a;
  a.obj_dim['^'] = m;
  a.set("s", detail::flip(m));
  a.context = p;
  a.gl_dot  = true;
  return a;
}

inline Matrix eval(ModelAssignment const& model, Diagram const& d) {
  std::size_t ctx = model.context_dim();
  Matrix mat      = Matrix::identity(model.dim(d.dom()) * ctx);
  ObjectWord word = d.dom();
  for (auto const& s : d.slices()) {
    auto const& g = s.gen;
    if (g.payload == Payload::dot && model.gl_dot) {
      for (char c : word.letters()) {
        if (c != '^') {
          throw Error(ErrorCode::unsupported_hom,
                      "dot action needs a word of up strands");
        }
      }
      mat = detail::apply_gl_dot(mat, s.offset, int(word.size()) + model.context,
                                 int(model.letter_dim('^')));
    } else {
      auto it = model.gen_mat.find({g.name, g.label});
      if (it == model.gen_mat.end()) {
        throw Error(ErrorCode::unassigned_generator,
                    "no matrix for generator " + g.to_text());
      }
      std::size_t left  = model.dim(word.sub(0, s.offset));
      std::size_t right = model.dim(word.sub(s.offset + g.dom.size(), std::string::npos))
                          * ctx;
      if (it->second.rows() != model.dim(g.cod)
          || it->second.cols() != model.dim(g.dom)) {
        throw Error(ErrorCode::shape_mismatch,
                    "matrix for " + g.to_text() + " has shape " + it->second.shape());
      }
      mat = detail::apply_local(mat, left, it->second, right);
    }
    word = Diagram::apply(word, s);
  }
  return mat;
}

inline Rational scalar_value(ModelAssignment const& model, Scalar const& c) {
  return c.substitute(model.param_values).constant_value();
}

inline Matrix eval(ModelAssignment const& model, LinearCombination const& f) {
  std::size_t ctx = model.context_dim();
  Matrix out(model.dim(f.cod()) * ctx, model.dim(f.dom()) * ctx);
  for (auto const& [d, c] : f.terms()) {
    out += scalar_value(model, c) * eval(model, d);
  }
  return out;
}

namespace detail {

inline std::pair<Presentation, ModelAssignment> with_box(
    Presentation const& p, ModelAssignment const& model, Matrix const& f) {
  if (f.rows() != f.cols() || f.rows() != model.letter_dim('^')) {
    throw Error(ErrorCode::shape_mismatch,
                "expected a square matrix on one up strand, got " + f.shape());
  }
  auto q = p.with_coupon("f", ObjectWord("^"), ObjectWord("^"));
  auto m = model;
  m.set("box", f, "f");
  return {std::move(q), std::move(m)};
}

}  // namespace detail

inline constexpr char const* kRightMate =
    "cup * id(v) ; id(v) * box[f] * id(v) ; id(v) * cap";
inline constexpr char const* kLeftMate =
    "id(v) * lcup ; id(v) * box[f] * id(v) ; lcap * id(v)";
inline constexpr char const* kBubble = "lcup ; box[f] * id(v) ; cap";

// Mates of an endomorphism f of ^ in an OB model, as matrices on v.
inline Matrix right_mate(ModelAssignment const& model, Matrix const& f) {
  auto [q, m] = detail::with_box(preset("OB"), model, f);
  return eval(m, q.expr(kRightMate));
}

inline Matrix left_mate(ModelAssignment const& model, Matrix const& f) {
  auto [q, m] = detail::with_box(preset("OB"), model, f);
  return eval(m, q.expr(kLeftMate));
}

// The closed diagram obtained by closing f up with a cup and a cap.
inline Rational bubble_trace(ModelAssignment const& model, Matrix const& f) {
  auto [q, m] = detail::with_box(preset("OB"), model, f);
  return eval(m, q.expr(kBubble))(0, 0);
}

}  // namespace diacat

#endif  // DIACAT_EVALMODEL_HPP_
