#ifndef DIACAT_MATRIX_HPP_
#define DIACAT_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "scalar.hpp"

namespace diacat {

// Dense matrix over Q, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // e_{i,j}: a single 1 at (i, j).
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = 1;
    return m;
  }

  static Matrix from_rows(std::vector<std::vector<Rational>> const& rows) {
    std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) {
        throw Error(ErrorCode::shape_mismatch, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  Rational const& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  friend bool operator==(Matrix const& a, Matrix const& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix& operator+=(Matrix const& b) {
    same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
    return *this;
  }
  Matrix& operator-=(Matrix const& b) {
    same_shape(b);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
    return *this;
  }
  Matrix& operator*=(Rational const& q) {
    for (auto& x : data_) x *= q;
    return *this;
  }
  friend Matrix operator+(Matrix a, Matrix const& b) { return a += b; }
  friend Matrix operator-(Matrix a, Matrix const& b) { return a -= b; }
  friend Matrix operator*(Rational const& q, Matrix a) { return a *= q; }

  // Skips zero entries of the left factor; slice operators are sparse.
  friend Matrix operator*(Matrix const& a, Matrix const& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::shape_mismatch,
                  "cannot multiply " + a.shape() + " by " + b.shape());
    }
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        Rational const& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (b(k, j) != 0) r(i, j) += x * b(k, j);
        }
      }
    }
    return r;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  Rational trace() const {
    if (!is_square()) {
      throw Error(ErrorCode::shape_mismatch, "trace of non-square " + shape());
    }
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  std::size_t rank() const {
    Matrix m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && m(piv, c) == 0) ++piv;
      if (piv == rows_) continue;
      m.swap_rows(piv, r);
      for (std::size_t i = r + 1; i < rows_; ++i) {
        if (m(i, c) == 0) continue;
        Rational f = m(i, c) / m(r, c);
        for (std::size_t j = c; j < cols_; ++j) {
          if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
      }
      ++r;
    }
    return r;
  }

  // Gauss-Jordan inverse; nullopt when singular.
  std::optional<Matrix> inverse() const {
    if (!is_square()) {
      throw Error(ErrorCode::shape_mismatch, "inverse of non-square " + shape());
    }
    std::size_t n = rows_;
    Matrix a = *this;
    Matrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a(piv, c) == 0) ++piv;
      if (piv == n) return std::nullopt;
      a.swap_rows(piv, c);
      inv.swap_rows(piv, c);
      Rational p = a(c, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(c, j) /= p;
        inv(c, j) /= p;
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (i == c || a(i, c) == 0) continue;
        Rational f = a(i, c);
        for (std::size_t j = 0; j < n; ++j) {
          a(i, j) -= f * a(c, j);
          inv(i, j) -= f * inv(c, j);
        }
      }
    }
    return inv;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

  // Rows separated by ';', entries by ','.
  std::string to_text() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += "; ";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).get_str();
      }
    }
    return s;
  }

  static Matrix parse(std::string const& text) {
    std::vector<std::vector<Rational>> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(';', start);
      if (end == std::string::npos) end = text.size();
      std::vector<Rational> row;
      std::size_t s = start;
      while (s <= end) {
        std::size_t e = text.find(',', s);
        if (e == std::string::npos || e > end) e = end;
        std::string cell = text.substr(s, e - s);
        auto b = cell.find_first_not_of(" \t");
        auto l = cell.find_last_not_of(" \t");
        if (b == std::string::npos) {
          throw ParseError(s, "empty matrix entry");
        }
        row.push_back(parse_rational(cell.substr(b, l - b + 1), s + b));
        s = e + 1;
      }
      rows.push_back(std::move(row));
      start = end + 1;
    }
    return from_rows(rows);
  }

 private:
  void same_shape(Matrix const& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw Error(ErrorCode::shape_mismatch,
                  "shape " + shape() + " vs " + b.shape());
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

inline Matrix kronecker(Matrix const& a, Matrix const& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l) != 0) {
            r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
          }
        }
      }
    }
  }
  return r;
}

inline Matrix block_diagonal(Matrix const& a, Matrix const& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      r(a.rows() + i, a.cols() + j) = b(i, j);
    }
  }
  return r;
}

}  // namespace diacat

#endif  // DIACAT_MATRIX_HPP_
