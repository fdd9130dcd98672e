#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "novikov/poly.hpp"

namespace novikov {

struct GroebnerOptions {
  /// S-polynomials whose lcm has larger total degree are deferred.
  std::size_t degree_cap = 6;
  /// Upper bound on processed S-pairs.
  std::size_t pair_cap = 50000;
  /// When nonempty, a block order is used: these variables (grevlex among
  /// themselves) dominate the rest (grevlex). The basis then contains
  /// generators of the elimination ideal.
  std::vector<Var> eliminate;
};

enum class GroebnerStatus { complete, cap_exceeded };

struct GroebnerResult {
  GroebnerStatus status = GroebnerStatus::complete;
  /// Reduced and monic when complete; the raw partial basis otherwise.
  std::vector<MultiPoly> basis;
  /// 1 is in the ideal. Reliable even when a cap was hit.
  bool unit = false;
  std::size_t pairs_processed = 0;
  std::size_t pairs_deferred = 0;
  std::string reason;
};

GroebnerResult groebner(const std::vector<MultiPoly>& polys, const GroebnerOptions& options = {});
GroebnerResult groebner(const PolySystem& system, const GroebnerOptions& options = {});

/// Remainder of p on division by basis under the same order groebner() would use.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis,
                      const std::vector<Var>& eliminate = {});

/// Basis elements free of the eliminated variables.
std::vector<MultiPoly> elimination_ideal(const GroebnerResult& result, const std::vector<Var>& eliminate);

}  // namespace novikov
