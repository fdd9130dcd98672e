#pragma once

#include <optional>
#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

/// x.y = 1/2 [x,y] on a Lie algebra of nilpotency class at most two.
/// Throws NotTwoStepNilpotent otherwise.
AlgebraProduct half_bracket(const LieAlgebra& lie);

/// Novikov product for a vector space splitting g = a + b, a spanned by the
/// basis vectors in `a_part`, b by those in `b_part`:
///   e.e' = 1/2[e,e'],  e.f = [e,f],  f.e = 0,  f.f' = 1/2[f,f'].
/// Requires [a,a] in a, [g,b] in b, [g,[a,a]] = 0 and [g,[b,b]] = 0; a failing
/// condition raises HypothesisViolated naming the condition and a witness.
AlgebraProduct block_product(const LieAlgebra& lie, const std::vector<std::size_t>& a_part,
                             const std::vector<std::size_t>& b_part);

/// x o y = x.D(y) for a commutative associative product and a derivation D.
/// Throws PreconditionFailed naming the failing check.
AlgebraProduct novikov_from_derivation(const AlgebraProduct& product, const LinearOperator& d);

struct RightNilpotency {
  bool nilpotent = false;
  std::optional<std::size_t> degree;  ///< minimal n with all n-fold products of R(x) zero
};

/// Powers of the span of right multiplications, bounded by dim^2 + 1 steps.
RightNilpotency right_nilpotency(const AlgebraProduct& product);

}  // namespace novikov
