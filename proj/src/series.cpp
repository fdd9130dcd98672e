#include "novikov/series.hpp"

namespace novikov {

SeriesReport series(const LieAlgebra& lie, SeriesKind kind) {
  const std::size_t n = lie.dim();
  SeriesReport report;
  report.kind = kind;
  std::vector<Vector> full;
  for (std::size_t i = 0; i < n; ++i) full.push_back(unit_vector(n, i));
  Subspace current(full, n);
  report.dims.push_back(current.dim());
  report.basis_witnesses.push_back(current.basis());
  while (current.dim() > 0) {
    std::vector<Vector> spanning;
    const auto& basis = current.basis();
    if (kind == SeriesKind::derived) {
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = a + 1; b < basis.size(); ++b) spanning.push_back(lie.bracket(basis[a], basis[b]));
    } else {
      for (std::size_t a = 0; a < n; ++a)
        for (const auto& v : basis) spanning.push_back(lie.bracket(unit_vector(n, a), v));
    }
    Subspace next(spanning, n);
    const bool stable = next.dim() == current.dim();
    report.dims.push_back(next.dim());
    report.basis_witnesses.push_back(next.basis());
    current = std::move(next);
    if (stable) break;
  }
  return report;
}

bool is_solvable(const LieAlgebra& lie) { return series(lie, SeriesKind::derived).dims.back() == 0; }

bool is_nilpotent(const LieAlgebra& lie) { return series(lie, SeriesKind::lower_central).dims.back() == 0; }

std::optional<std::size_t> nilpotency_class(const LieAlgebra& lie) {
  const auto r = series(lie, SeriesKind::lower_central);
  if (r.dims.back() != 0) return std::nullopt;
  return r.dims.size() - 1;
}

bool is_filiform(const LieAlgebra& lie) {
  const auto c = nilpotency_class(lie);
  return c && lie.dim() > 0 && *c == lie.dim() - 1;
}

Subspace derived_subalgebra(const LieAlgebra& lie) {
  const std::size_t n = lie.dim();
  std::vector<Vector> spanning;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) spanning.push_back(lie.bracket(i, j));
  return Subspace(spanning, n);
}

}  // namespace novikov
