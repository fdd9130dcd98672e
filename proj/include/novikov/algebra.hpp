#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "novikov/linalg.hpp"
#include "novikov/rational.hpp"

namespace novikov {

/// Zero-based index triple (i, j, k): coefficient of x_k in x_i * x_j.
using Index3 = std::array<std::size_t, 3>;

/// Bilinear product on a based vector space given by structure constants.
///
/// Storage is sparse and canonically ordered by (i, j, k); a dense copy backs
/// constant-time lookup. Immutable once built.
class StructureTable {
public:
  StructureTable() = default;
  explicit StructureTable(std::size_t dim);
  /// Entries with equal indices are summed; zero results are dropped.
  StructureTable(std::size_t dim, const std::map<Index3, Rational>& entries);

  std::size_t dim() const { return dim_; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const {
    return dense_[(i * dim_ + j) * dim_ + k];
  }
  /// Sparse, sorted, zero-free entries.
  const std::map<Index3, Rational>& entries() const { return sparse_; }
  bool is_zero() const { return sparse_.empty(); }

  /// x_i * x_j as a coordinate vector.
  Vector basis_product(std::size_t i, std::size_t j) const;
  /// u * v for coordinate vectors.
  Vector multiply(const Vector& u, const Vector& v) const;
  /// Left multiplication L(x_i): column j is x_i * x_j.
  Matrix left_mult(std::size_t i) const;
  /// Right multiplication R(x_j): column i is x_i * x_j.
  Matrix right_mult(std::size_t j) const;
  Matrix left_mult(const Vector& x) const;
  Matrix right_mult(const Vector& x) const;

  StructureTable scaled(const Rational& s) const;

  friend bool operator==(const StructureTable& a, const StructureTable& b) {
    return a.dim_ == b.dim_ && a.sparse_ == b.sparse_;
  }

private:
  std::size_t dim_ = 0;
  std::map<Index3, Rational> sparse_;
  std::vector<Rational> dense_;
};

/// Incremental construction of a StructureTable.
class TableBuilder {
public:
  explicit TableBuilder(std::size_t dim) : dim_(dim) {}
  /// Adds c to the coefficient of x_k in x_i * x_j.
  TableBuilder& add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  /// Adds c * x_k to [x_i, x_j] and subtracts it from [x_j, x_i].
  TableBuilder& add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  /// Sets x_i * x_j to the vector v (accumulates).
  TableBuilder& add_product(std::size_t i, std::size_t j, const Vector& v);
  StructureTable build() const { return StructureTable(dim_, entries_); }

private:
  std::size_t dim_;
  std::map<Index3, Rational> entries_;
};

/// Lie bracket by structure constants. Antisymmetry and Jacobi are verified by
/// check_jacobi, not at construction.
class LieAlgebra {
public:
  LieAlgebra() = default;
  explicit LieAlgebra(StructureTable table, std::vector<std::string> labels = {});
  const StructureTable& table() const { return table_; }
  std::size_t dim() const { return table_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  Vector bracket(const Vector& u, const Vector& v) const { return table_.multiply(u, v); }
  Vector bracket(std::size_t i, std::size_t j) const { return table_.basis_product(i, j); }
  /// ad(x_i): column j is [x_i, x_j].
  Matrix ad(std::size_t i) const { return table_.left_mult(i); }
  Matrix ad(const Vector& x) const { return table_.left_mult(x); }
  bool is_abelian() const { return table_.is_zero(); }
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.table_ == b.table_ && a.labels_ == b.labels_;
  }

private:
  StructureTable table_;
  std::vector<std::string> labels_;
};

/// Arbitrary bilinear product (x, y) -> x.y; identities are checked, not assumed.
class AlgebraProduct {
public:
  AlgebraProduct() = default;
  explicit AlgebraProduct(StructureTable table, std::vector<std::string> labels = {});
  const StructureTable& table() const { return table_; }
  std::size_t dim() const { return table_.dim(); }
  const std::vector<std::string>& labels() const { return labels_; }
  Vector multiply(const Vector& u, const Vector& v) const { return table_.multiply(u, v); }
  Vector multiply(std::size_t i, std::size_t j) const { return table_.basis_product(i, j); }
  Matrix L(std::size_t i) const { return table_.left_mult(i); }
  Matrix R(std::size_t j) const { return table_.right_mult(j); }
  friend bool operator==(const AlgebraProduct& a, const AlgebraProduct& b) {
    return a.table_ == b.table_ && a.labels_ == b.labels_;
  }

private:
  StructureTable table_;
  std::vector<std::string> labels_;
};

/// One failed identity instance: which identity, on which basis tuple (zero-based),
/// and the full nonzero residual.
struct Violation {
  std::string identity;
  std::vector<std::size_t> indices;
  Vector residual;
};

struct CheckReport {
  bool passed = true;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  void add(std::string identity, std::vector<std::size_t> indices, Vector residual);
  /// Appends the violations and notes of another report.
  void merge(const CheckReport& other);
  bool failed(const std::string& identity) const;
};

}  // namespace novikov
