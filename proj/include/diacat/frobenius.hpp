#ifndef DIACAT_FROBENIUS_HPP_
#define DIACAT_FROBENIUS_HPP_

// Finite-dimensional symmetric Frobenius algebras given by structure
// constants in a fixed basis.

#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace diacat {

// Coefficients with respect to FrobeniusData::basis.
using AlgebraElement = std::vector<Rational>;

struct FrobeniusData {
  std::vector<std::string> basis;
  // mult[i][j] = b_i * b_j
  std::vector<std::vector<AlgebraElement>> mult;
  AlgebraElement unit;
  // trace[i] = tr(b_i)
  std::vector<Rational> trace;
  // Filled in by validate_frobenius: dual_basis[a] = the element b_a^vee.
  std::vector<AlgebraElement> dual_basis;

  std::size_t dim() const { return basis.size(); }

  AlgebraElement basis_element(std::size_t i) const {
    AlgebraElement e(dim());
    e[i] = 1;
    return e;
  }

  std::optional<std::size_t> index_of(std::string const& label) const {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == label) return i;
    }
    return std::nullopt;
  }

  // Index of the unit when it is itself a basis element.
  std::optional<std::size_t> unit_index() const {
    std::optional<std::size_t> found;
    for (std::size_t i = 0; i < unit.size(); ++i) {
      if (unit[i] == 0) continue;
      if (unit[i] != 1 || found) return std::nullopt;
      found = i;
    }
    return found;
  }

  AlgebraElement multiply(AlgebraElement const& a,
                          AlgebraElement const& b) const {
    AlgebraElement r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (b[j] == 0) continue;
        Rational c = a[i] * b[j];
        for (std::size_t k = 0; k < dim(); ++k) r[k] += c * mult[i][j][k];
      }
    }
    return r;
  }

  Rational tr(AlgebraElement const& a) const {
    Rational t = 0;
    for (std::size_t i = 0; i < dim(); ++i) t += a[i] * trace[i];
    return t;
  }

  // Group algebra of Z/r with basis g0 (unit), ..., g{r-1}; tr(g^i) = [i = 0].
  static FrobeniusData cyclic_group(int r) {
    if (r < 1) {
      throw Error(ErrorCode::invalid_argument, "cyclic group order must be >= 1");
    }
    FrobeniusData f;
    for (int i = 0; i < r; ++i) f.basis.push_back("g" + std::to_string(i));
    f.mult.assign(r, std::vector<AlgebraElement>(r, AlgebraElement(r)));
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) f.mult[i][j][(i + j) % r] = 1;
    }
    f.unit.assign(r, 0);
    f.unit[0] = 1;
    f.trace.assign(r, 0);
    f.trace[0] = 1;
    return f;
  }
};

// Gram matrix [tr(b_i b_j)].
inline Matrix gram_matrix(FrobeniusData const& f) {
  Matrix g(f.dim(), f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    for (std::size_t j = 0; j < f.dim(); ++j) g(i, j) = f.tr(f.mult[i][j]);
  }
  return g;
}

// Checks the axioms exhaustively on the basis and derives the dual basis
// with tr(a^vee b) = delta_{a,b}. Stores and returns it.
inline std::vector<AlgebraElement> validate_frobenius(FrobeniusData& f) {
  std::size_t n = f.dim();
  bool complete = n > 0 && f.mult.size() == n && f.unit.size() == n
                  && f.trace.size() == n;
  for (std::size_t i = 0; complete && i < n; ++i) {
    complete = f.mult[i].size() == n;
    for (std::size_t j = 0; complete && j < n; ++j) {
      complete = f.mult[i][j].size() == n;
    }
  }
  if (!complete) {
    throw Error(ErrorCode::frobenius_incomplete,
                "multiplication, unit or trace table incomplete");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto left  = f.multiply(f.mult[i][j], f.basis_element(k));
        auto right = f.multiply(f.basis_element(i), f.mult[j][k]);
        if (left != right) {
          throw Error(ErrorCode::frobenius_not_associative,
                      "(" + f.basis[i] + f.basis[j] + ")" + f.basis[k]
                          + " != " + f.basis[i] + "(" + f.basis[j]
                          + f.basis[k] + ")");
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto b = f.basis_element(i);
    if (f.multiply(f.unit, b) != b || f.multiply(b, f.unit) != b) {
      throw Error(ErrorCode::frobenius_not_unital,
                  "unit does not act as identity on " + f.basis[i]);
    }
  }
  Matrix g = gram_matrix(f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j) != g(j, i)) {
        throw Error(ErrorCode::frobenius_not_symmetric,
                    "tr(" + f.basis[i] + f.basis[j] + ") != tr(" + f.basis[j]
                        + f.basis[i] + ")");
      }
    }
  }
  auto inv = g.inverse();
  if (!inv) {
    throw Error(ErrorCode::frobenius_degenerate, "trace form is degenerate");
  }
  // a^vee = sum_c D[a][c] b_c with sum_c D[a][c] G[c][b] = delta_{ab}.
  f.dual_basis.assign(n, AlgebraElement(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t c = 0; c < n; ++c) f.dual_basis[a][c] = (*inv)(a, c);
  }
  return f.dual_basis;
}

// Element of A (x) A as an n x n coefficient matrix on basis pairs.
inline Matrix tensor_of(AlgebraElement const& a, AlgebraElement const& b) {
  Matrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
  }
  return m;
}

// sum_b b (x) b^vee.
inline Matrix canonical_element(FrobeniusData const& f) {
  Matrix m(f.dim(), f.dim());
  for (std::size_t b = 0; b < f.dim(); ++b) {
    m += tensor_of(f.basis_element(b), f.dual_basis[b]);
  }
  return m;
}

// sum_b (b x) (x) b^vee == sum_b b (x) (x b^vee), expanded in basis (x) basis.
inline bool teleport_check(FrobeniusData const& f, AlgebraElement const& x) {
  Matrix lhs(f.dim(), f.dim());
  Matrix rhs(f.dim(), f.dim());
  for (std::size_t b = 0; b < f.dim(); ++b) {
    auto bb = f.basis_element(b);
    lhs += tensor_of(f.multiply(bb, x), f.dual_basis[b]);
    rhs += tensor_of(bb, f.multiply(x, f.dual_basis[b]));
  }
  return lhs == rhs;
}

// Same algebra in the basis b'_i = sum_j p(i, j) b_j. The result is
// validated (dual basis filled in).
inline FrobeniusData change_basis(FrobeniusData const& f, Matrix const& p) {
  auto pinv = p.inverse();
  if (!pinv) {
    throw Error(ErrorCode::invalid_argument, "change of basis is singular");
  }
  std::size_t n = f.dim();
  auto row      = [&](std::size_t i) {
    AlgebraElement v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = p(i, j);
    return v;
  };
  auto to_new = [&](AlgebraElement const& v) {
    AlgebraElement c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) c[i] += v[j] * (*pinv)(j, i);
    }
    return c;
  };
  FrobeniusData g;
  for (std::size_t i = 0; i < n; ++i) g.basis.push_back("b" + std::to_string(i));
  g.mult.assign(n, std::vector<AlgebraElement>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g.mult[i][j] = to_new(f.multiply(row(i), row(j)));
    }
  }
  g.unit = to_new(f.unit);
  for (std::size_t i = 0; i < n; ++i) g.trace.push_back(f.tr(row(i)));
  validate_frobenius(g);
  return g;
}

}  // namespace diacat

#endif  // DIACAT_FROBENIUS_HPP_
