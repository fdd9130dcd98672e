#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "novikov/rational.hpp"

namespace novikov {

/// Dense rational matrix. Column j is the image of the j-th source basis vector.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  bool is_zero() const;
  /// Row-major entries, used for reporting matrix residuals.
  const std::vector<Rational>& flat() const { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using LinearOperator = Matrix;

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// Reduced row echelon form of a list of vectors.
struct RowEchelon {
  std::vector<Vector> rows;         ///< nonzero RREF rows, pivot entries equal 1
  std::vector<std::size_t> pivots;  ///< pivot column of each row
  std::size_t rank() const { return rows.size(); }
};

/// Fraction-free elimination on the integer-scaled rows. Pivot: first nonzero
/// column, then the smallest absolute entry, then the lowest row index.
RowEchelon row_echelon(std::span<const Vector> vectors, std::size_t width);

std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
/// Throws NotInvertible when singular.
Matrix inverse(const Matrix& m);
/// Basis of {v : m v = 0}.
std::vector<Vector> nullspace(const Matrix& m);

/// Subspace of k^width held as an RREF basis.
class Subspace {
public:
  Subspace() = default;
  Subspace(std::span<const Vector> spanning, std::size_t width);
  std::size_t dim() const { return echelon_.rank(); }
  std::size_t width() const { return width_; }
  const std::vector<Vector>& basis() const { return echelon_.rows; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.width_ == b.width_ && a.echelon_.rows == b.echelon_.rows;
  }

private:
  std::size_t width_ = 0;
  RowEchelon echelon_;
};

}  // namespace novikov
