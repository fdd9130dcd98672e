#include "novikov/checks.hpp"

#include <vector>

namespace novikov {

namespace {

// Basis products cached as dense vectors.
class Products {
public:
  explicit Products(const StructureTable& t) : n_(t.dim()), p_(n_ * n_) {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) p_[i * n_ + j] = t.basis_product(i, j);
  }
  std::size_t dim() const { return n_; }
  const Vector& operator()(std::size_t i, std::size_t j) const { return p_[i * n_ + j]; }
  // v . x_k
  Vector right(const Vector& v, std::size_t k) const {
    Vector r(n_);
    for (std::size_t m = 0; m < n_; ++m)
      if (!v[m].is_zero()) axpy(r, v[m], (*this)(m, k));
    return r;
  }
  // x_i . v
  Vector left(std::size_t i, const Vector& v) const {
    Vector r(n_);
    for (std::size_t m = 0; m < n_; ++m)
      if (!v[m].is_zero()) axpy(r, v[m], (*this)(i, m));
    return r;
  }

private:
  std::size_t n_;
  std::vector<Vector> p_;
};

void left_symmetry(const Products& p, CheckReport& report) {
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // x(yz) - (xy)z - y(xz) + (yx)z
        Vector r = p.left(i, p(j, k)) - p.right(p(i, j), k) - p.left(j, p(i, k)) + p.right(p(j, i), k);
        if (!is_zero(r)) report.add("left_symmetry", {i, j, k}, std::move(r));
      }
}

}  // namespace

CheckReport check_jacobi(const LieAlgebra& lie) {
  CheckReport report;
  const Products p(lie.table());
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector r = p(i, j) + p(j, i);
      if (!is_zero(r)) report.add("antisymmetry", {i, j}, std::move(r));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = p.right(p(i, j), k) + p.right(p(j, k), i) + p.right(p(k, i), j);
        if (!is_zero(r)) report.add("jacobi", {i, j, k}, std::move(r));
      }
  return report;
}

CheckReport check_left_symmetric(const AlgebraProduct& product) {
  CheckReport report;
  left_symmetry(Products(product.table()), report);
  return report;
}

CheckReport check_novikov(const AlgebraProduct& product) {
  CheckReport report;
  const Products p(product.table());
  left_symmetry(p, report);
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = p.right(p(i, j), k) - p.right(p(i, k), j);
        if (!is_zero(r)) report.add("right_commutation", {i, j, k}, std::move(r));
      }
  return report;
}

CheckReport check_jacobi_like(const AlgebraProduct& product) {
  CheckReport report;
  const Products p(product.table());
  const std::size_t n = p.dim();
  auto br = [&](std::size_t a, std::size_t b) { return p(a, b) - p(b, a); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector first = p.right(br(i, j), k) + p.right(br(j, k), i) + p.right(br(k, i), j);
        if (!is_zero(first)) report.add("jacobi_like_left", {i, j, k}, std::move(first));
        Vector second = p.left(i, br(j, k)) + p.left(j, br(k, i)) + p.left(k, br(i, j));
        if (!is_zero(second)) report.add("jacobi_like_right", {i, j, k}, std::move(second));
      }
  return report;
}

CheckReport check_commutative_associative(const AlgebraProduct& product) {
  CheckReport report;
  const Products p(product.table());
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector r = p(i, j) - p(j, i);
      if (!is_zero(r)) report.add("commutativity", {i, j}, std::move(r));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector r = p.right(p(i, j), k) - p.left(i, p(j, k));
        if (!is_zero(r)) report.add("associativity", {i, j, k}, std::move(r));
      }
  return report;
}

CheckReport check_derivation(const AlgebraProduct& product, const LinearOperator& d) {
  const std::size_t n = product.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation must be dim x dim");
  CheckReport report;
  const Products p(product.table());
  std::vector<Vector> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(d.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector r = d.apply(p(i, j)) - p.right(images[i], j) - p.left(i, images[j]);
      if (!is_zero(r)) report.add("leibniz", {i, j}, std::move(r));
    }
  return report;
}

JacobiFailure::JacobiFailure(LieAlgebra algebra, CheckReport report)
    : Error("JacobiFailure", "commutator table violates the Jacobi identity"),
      algebra_(std::move(algebra)),
      report_(std::move(report)) {}

LieAlgebra commutator_unchecked(const AlgebraProduct& product) {
  const auto& t = product.table();
  std::map<Index3, Rational> e;
  for (const auto& [idx, c] : t.entries()) {
    e[idx] += c;
    e[Index3{idx[1], idx[0], idx[2]}] -= c;
  }
  return LieAlgebra(StructureTable(t.dim(), e), product.labels());
}

LieAlgebra commutator(const AlgebraProduct& product) {
  LieAlgebra lie = commutator_unchecked(product);
  CheckReport report = check_jacobi(lie);
  if (!report.passed) throw JacobiFailure(std::move(lie), std::move(report));
  return lie;
}

bool is_compatible(const AlgebraProduct& product, const LieAlgebra& lie) {
  if (product.dim() != lie.dim()) throw DimensionMismatch("product and Lie algebra dimensions differ");
  return commutator_unchecked(product).table() == lie.table();
}

}  // namespace novikov
