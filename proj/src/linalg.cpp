#include "novikov/linalg.hpp"

#include <numeric>

#include "novikov/errors.hpp"

namespace novikov {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("matrix entry count");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionMismatch("column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::row(std::size_t i) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector product");
  Vector r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& a = (*this)(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const { return novikov::is_zero(data_); }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const auto& bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  return r;
}

namespace {

using IntRow = std::vector<mpz_class>;

IntRow primitive_integer_row(const Vector& v) {
  mpz_class lcm = 1;
  for (const auto& x : v)
    if (!x.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
  IntRow row(v.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    row[i] = v[i].numerator() * (lcm / v[i].denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return row;
}

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// target <- p * target - e * source, where p is the pivot of source and e the entry of target.
void eliminate(IntRow& target, const IntRow& source, std::size_t col) {
  if (target[col] == 0) return;
  const mpz_class p = source[col];
  const mpz_class e = target[col];
  for (std::size_t j = 0; j < target.size(); ++j) target[j] = p * target[j] - e * source[j];
  remove_content(target);
}

}  // namespace

RowEchelon row_echelon(std::span<const Vector> vectors, std::size_t width) {
  std::vector<IntRow> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != width) throw DimensionMismatch("row width");
    if (!is_zero(v)) rows.push_back(primitive_integer_row(v));
  }
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < width && top < rows.size(); ++col) {
    std::size_t best = rows.size();
    for (std::size_t r = top; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      if (best == rows.size() || mpz_cmpabs(rows[r][col].get_mpz_t(), rows[best][col].get_mpz_t()) < 0) best = r;
    }
    if (best == rows.size()) continue;
    std::swap(rows[top], rows[best]);
    for (std::size_t r = top + 1; r < rows.size(); ++r) eliminate(rows[r], rows[top], col);
    pivots.push_back(col);
    ++top;
  }
  rows.resize(top);
  // Back substitution keeps the integer form; normalize to pivot 1 at the end.
  for (std::size_t r = rows.size(); r-- > 0;)
    for (std::size_t above = 0; above < r; ++above) eliminate(rows[above], rows[r], pivots[r]);
  RowEchelon out;
  out.pivots = pivots;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vector v(width);
    const mpz_class& p = rows[r][pivots[r]];
    for (std::size_t j = 0; j < width; ++j) v[j] = Rational(mpq_class(rows[r][j], p));
    out.rows.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return row_echelon(rows, m.cols()).rank();
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  // Bareiss on the scaled integer matrix; scale factors are divided out at the end.
  std::vector<IntRow> a(n, IntRow(n));
  mpq_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < n; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).numerator() * (lcm / m(i, j).denominator());
    scale *= lcm;
  }
  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Rational(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  mpq_class det(a[n - 1][n - 1] * sign);
  det /= scale;
  return Rational(det);
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vector r = m.row(i);
    r.resize(2 * n);
    r[n + i] = 1;
    rows.push_back(std::move(r));
  }
  const RowEchelon e = row_echelon(rows, 2 * n);
  if (e.rank() < n || e.pivots[n - 1] != n - 1)
    throw NotInvertible("determinant " + determinant(m).str());
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

std::vector<Vector> nullspace(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  const RowEchelon e = row_echelon(rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Subspace::Subspace(std::span<const Vector> spanning, std::size_t width)
    : width_(width), echelon_(row_echelon(spanning, width)) {}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != width_) throw DimensionMismatch("subspace membership");
  Vector r = v;
  for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
    const Rational c = r[echelon_.pivots[i]];
    if (!c.is_zero()) axpy(r, -c, echelon_.rows[i]);
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis())
    if (!contains(v)) return false;
  return true;
}

}  // namespace novikov
