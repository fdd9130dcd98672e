#pragma once

#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

/// Action of a Lie algebra on a module: maps[i] is the m x m matrix of x_i.
class Representation {
public:
  Representation() = default;
  Representation(LieAlgebra algebra, std::size_t module_dim, std::vector<Matrix> maps);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t module_dim() const { return module_dim_; }
  const std::vector<Matrix>& maps() const { return maps_; }
  /// Matrix of an arbitrary algebra element.
  Matrix action(const Vector& x) const;
  /// x.u
  Vector act(const Vector& x, const Vector& u) const { return action(x).apply(u); }
  friend bool operator==(const Representation&, const Representation&) = default;

private:
  LieAlgebra algebra_;
  std::size_t module_dim_ = 0;
  std::vector<Matrix> maps_;
};

Representation adjoint_representation(const LieAlgebra& lie);
/// Module g_L given by the left multiplications of a product, acting for the
/// Lie algebra of its commutator.
Representation left_multiplication_representation(const AlgebraProduct& product);

/// Homomorphism law maps([x_i,x_j]) = [maps_i, maps_j]; identity "homomorphism".
CheckReport check_representation(const Representation& rep);

/// Linear map T from the module to the algebra (n x m, column j = T(u_j)).
class RMatrix {
public:
  RMatrix() = default;
  RMatrix(Representation rep, Matrix t);
  const Representation& rep() const { return rep_; }
  const Matrix& matrix() const { return t_; }
  Vector apply(const Vector& u) const { return t_.apply(u); }
  friend bool operator==(const RMatrix&, const RMatrix&) = default;

private:
  Representation rep_;
  Matrix t_;
};

/// [u,v]_T = T(u).v - T(v).u
Vector bracket_T(const RMatrix& t, const Vector& u, const Vector& v);
/// Structure constants of [,]_T on the module basis.
LieAlgebra bracket_T_algebra(const RMatrix& t);

/// T(T(u).v - T(v).u) = [T(u),T(v)] on module basis pairs; identity "cybe".
CheckReport check_cybe(const RMatrix& t);
/// T(T(u).v).w = T(T(u).w).v on module basis triples; identity "novikov_condition".
CheckReport check_novikov_condition(const RMatrix& t);
/// u o v = T(u).v. Throws CybeFailed when T does not satisfy the CYBE.
AlgebraProduct induced_product(const RMatrix& t);
/// T([u,v]) = [T(u),T(v)] where [,] on the module is given by `source`;
/// identity "lie_homomorphism".
CheckReport check_lie_homomorphism(const RMatrix& t, const LieAlgebra& source);

/// T(u_ell) = x_k, T(u_i) = 0 otherwise. Requires coordinate ell of x_k.u_j to
/// vanish for all j; raises HypothesisViolated with the first failing j.
RMatrix projection_rmatrix(const Representation& rep, std::size_t ell, std::size_t k);

/// phi(x.u) = x.phi(u) for all basis x, u; identity "module_homomorphism".
CheckReport check_module_homomorphism(const Representation& source, const Representation& target,
                                      const Matrix& phi);
/// T' = T phi on the source module. Raises NotModuleHomomorphism.
RMatrix transport_rmatrix(const RMatrix& t, const Representation& source, const Matrix& phi);
/// Endomorphism case: the source module is the module of T itself.
RMatrix transport_rmatrix(const RMatrix& t, const Matrix& phi);

}  // namespace novikov
