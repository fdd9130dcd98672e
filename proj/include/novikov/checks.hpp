#pragma once

#include "novikov/algebra.hpp"
#include "novikov/errors.hpp"

namespace novikov {

// Identity verifiers. Every check is exact; a reported residual is never zero.
// Identity names used in reports:
//   "antisymmetry", "jacobi", "left_symmetry", "right_commutation",
//   "jacobi_like_left" ([x,y].z cyclic), "jacobi_like_right" (x.[y,z] cyclic),
//   "commutativity", "associativity", "leibniz".

CheckReport check_jacobi(const LieAlgebra& lie);
CheckReport check_left_symmetric(const AlgebraProduct& product);
/// Left symmetry plus commuting right multiplications.
CheckReport check_novikov(const AlgebraProduct& product);
CheckReport check_jacobi_like(const AlgebraProduct& product);
CheckReport check_commutative_associative(const AlgebraProduct& product);
/// Leibniz rule D(x.y) = D(x).y + x.D(y) on basis pairs.
CheckReport check_derivation(const AlgebraProduct& product, const LinearOperator& d);

/// Raised by commutator() when the commutator table fails Jacobi; carries the
/// computed algebra and the failing report.
class JacobiFailure : public Error {
public:
  JacobiFailure(LieAlgebra algebra, CheckReport report);
  const LieAlgebra& algebra() const { return algebra_; }
  const CheckReport& report() const { return report_; }

private:
  LieAlgebra algebra_;
  CheckReport report_;
};

/// [x,y] = x.y - y.x. Throws JacobiFailure if the result is not a Lie algebra.
LieAlgebra commutator(const AlgebraProduct& product);
/// Same table without the Jacobi check.
LieAlgebra commutator_unchecked(const AlgebraProduct& product);
/// True iff x.y - y.x reproduces the bracket of `lie` exactly.
bool is_compatible(const AlgebraProduct& product, const LieAlgebra& lie);

}  // namespace novikov
