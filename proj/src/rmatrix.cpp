#include "novikov/rmatrix.hpp"

#include <string>

#include "novikov/checks.hpp"

namespace novikov {

Representation::Representation(LieAlgebra algebra, std::size_t module_dim, std::vector<Matrix> maps)
    : algebra_(std::move(algebra)), module_dim_(module_dim), maps_(std::move(maps)) {
  if (maps_.size() != algebra_.dim()) throw DimensionMismatch("one action matrix per algebra basis vector");
  for (const auto& m : maps_)
    if (m.rows() != module_dim_ || m.cols() != module_dim_)
      throw DimensionMismatch("action matrices must be module_dim x module_dim");
}

Matrix Representation::action(const Vector& x) const {
  if (x.size() != algebra_.dim()) throw DimensionMismatch("algebra element size");
  Matrix m(module_dim_, module_dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m += x[i] * maps_[i];
  return m;
}

Representation adjoint_representation(const LieAlgebra& lie) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < lie.dim(); ++i) maps.push_back(lie.ad(i));
  return Representation(lie, lie.dim(), std::move(maps));
}

Representation left_multiplication_representation(const AlgebraProduct& product) {
  std::vector<Matrix> maps;
  for (std::size_t i = 0; i < product.dim(); ++i) maps.push_back(product.L(i));
  return Representation(commutator_unchecked(product), product.dim(), std::move(maps));
}

CheckReport check_representation(const Representation& rep) {
  CheckReport report;
  const auto& maps = rep.maps();
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      Matrix r = rep.action(rep.algebra().bracket(i, j)) - commutator(maps[i], maps[j]);
      if (!r.is_zero()) report.add("homomorphism", {i, j}, r.flat());
    }
  return report;
}

RMatrix::RMatrix(Representation rep, Matrix t) : rep_(std::move(rep)), t_(std::move(t)) {
  if (t_.rows() != rep_.algebra().dim() || t_.cols() != rep_.module_dim())
    throw DimensionMismatch("T must be algebra_dim x module_dim");
}

Vector bracket_T(const RMatrix& t, const Vector& u, const Vector& v) {
  const auto& rep = t.rep();
  if (u.size() != rep.module_dim() || v.size() != rep.module_dim())
    throw DimensionMismatch("module vector size");
  return rep.act(t.apply(u), v) - rep.act(t.apply(v), u);
}

LieAlgebra bracket_T_algebra(const RMatrix& t) {
  const std::size_t m = t.rep().module_dim();
  TableBuilder builder(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      builder.add_product(i, j, bracket_T(t, unit_vector(m, i), unit_vector(m, j)));
  return LieAlgebra(builder.build());
}

CheckReport check_cybe(const RMatrix& t) {
  CheckReport report;
  const auto& lie = t.rep().algebra();
  const std::size_t m = t.rep().module_dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      const Vector u = unit_vector(m, i), v = unit_vector(m, j);
      Vector r = t.apply(bracket_T(t, u, v)) - lie.bracket(t.apply(u), t.apply(v));
      if (!is_zero(r)) report.add("cybe", {i, j}, std::move(r));
    }
  return report;
}

CheckReport check_novikov_condition(const RMatrix& t) {
  CheckReport report;
  const auto& rep = t.rep();
  const std::size_t m = rep.module_dim();
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix tu = rep.action(t.apply(unit_vector(m, i)));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = j + 1; r < m; ++r) {
        const Vector lhs = rep.act(t.apply(tu.column(j)), unit_vector(m, r));
        const Vector rhs = rep.act(t.apply(tu.column(r)), unit_vector(m, j));
        Vector res = lhs - rhs;
        if (!is_zero(res)) report.add("novikov_condition", {i, j, r}, std::move(res));
      }
  }
  return report;
}

AlgebraProduct induced_product(const RMatrix& t) {
  if (!check_cybe(t).passed) throw CybeFailed("T does not satisfy the classical Yang-Baxter equation");
  const auto& rep = t.rep();
  const std::size_t m = rep.module_dim();
  TableBuilder builder(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Matrix tu = rep.action(t.apply(unit_vector(m, i)));
    for (std::size_t j = 0; j < m; ++j) builder.add_product(i, j, tu.column(j));
  }
  return AlgebraProduct(builder.build());
}

CheckReport check_lie_homomorphism(const RMatrix& t, const LieAlgebra& source) {
  const std::size_t m = t.rep().module_dim();
  if (source.dim() != m) throw DimensionMismatch("source algebra must live on the module");
  CheckReport report;
  const auto& lie = t.rep().algebra();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      Vector r = t.apply(source.bracket(i, j)) - lie.bracket(t.matrix().column(i), t.matrix().column(j));
      if (!is_zero(r)) report.add("lie_homomorphism", {i, j}, std::move(r));
    }
  return report;
}

RMatrix projection_rmatrix(const Representation& rep, std::size_t ell, std::size_t k) {
  const std::size_t n = rep.algebra().dim(), m = rep.module_dim();
  if (ell >= m || k >= n) throw DimensionMismatch("projection indices out of range");
  const Matrix& xk = rep.maps()[k];
  for (std::size_t j = 0; j < m; ++j)
    if (!xk(ell, j).is_zero())
      throw HypothesisViolated("T(x_k.u_j) != 0 at j=" + std::to_string(j + 1) + ": coordinate " +
                               std::to_string(ell + 1) + " of x_k.u_j is " + xk(ell, j).str());
  Matrix t(n, m);
  t(k, ell) = 1;
  return RMatrix(rep, std::move(t));
}

CheckReport check_module_homomorphism(const Representation& source, const Representation& target,
                                      const Matrix& phi) {
  if (source.algebra().dim() != target.algebra().dim())
    throw DimensionMismatch("modules over different algebras");
  if (phi.rows() != target.module_dim() || phi.cols() != source.module_dim())
    throw DimensionMismatch("phi must be target_dim x source_dim");
  CheckReport report;
  for (std::size_t x = 0; x < source.maps().size(); ++x) {
    const Matrix r = phi * source.maps()[x] - target.maps()[x] * phi;
    for (std::size_t u = 0; u < source.module_dim(); ++u) {
      Vector col = r.column(u);
      if (!is_zero(col)) report.add("module_homomorphism", {x, u}, std::move(col));
    }
  }
  return report;
}

RMatrix transport_rmatrix(const RMatrix& t, const Representation& source, const Matrix& phi) {
  const auto report = check_module_homomorphism(source, t.rep(), phi);
  if (!report.passed) {
    const auto& v = report.violations.front();
    throw NotModuleHomomorphism("phi(x.u) != x.phi(u) at (x,u)=(" + std::to_string(v.indices[0] + 1) + "," +
                                std::to_string(v.indices[1] + 1) + ")");
  }
  return RMatrix(source, t.matrix() * phi);
}

RMatrix transport_rmatrix(const RMatrix& t, const Matrix& phi) { return transport_rmatrix(t, t.rep(), phi); }

}  // namespace novikov
