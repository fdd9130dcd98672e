#pragma once

#include <optional>
#include <vector>

#include "novikov/algebra.hpp"

namespace novikov {

enum class SeriesKind { derived, lower_central };

/// Chain g = S_1 >= S_2 >= ... computed by exact row reduction. Stops after the
/// first step that is zero or equal to its predecessor.
struct SeriesReport {
  SeriesKind kind = SeriesKind::derived;
  std::vector<std::size_t> dims;
  std::vector<std::vector<Vector>> basis_witnesses;  ///< RREF spanning vectors per step
};

SeriesReport series(const LieAlgebra& lie, SeriesKind kind);

bool is_solvable(const LieAlgebra& lie);
bool is_nilpotent(const LieAlgebra& lie);
/// Smallest p with g^{p+1} = 0, if nilpotent.
std::optional<std::size_t> nilpotency_class(const LieAlgebra& lie);
bool is_filiform(const LieAlgebra& lie);

/// Span of all brackets [g, g].
Subspace derived_subalgebra(const LieAlgebra& lie);

}  // namespace novikov
