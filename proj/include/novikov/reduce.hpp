#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "novikov/poly.hpp"

namespace novikov {

/// var = value, where value is affine in variables that are still free.
struct Substitution {
  Var var;
  MultiPoly value;
};

/// Replayable proof that a system has no solution over any field extension of Q.
///
/// rounds[0] lists the input equations that are affine as given. rounds[r] lists
/// equations that became affine after substituting the reduced solution of
/// everything listed in rounds[0..r-1]. The combination, applied to those
/// affine forms, sums to the nonzero constant.
struct LinearCertificate {
  std::vector<std::vector<std::size_t>> rounds;
  std::vector<std::pair<std::size_t, Rational>> combination;
  Rational constant;
};

struct LinearReduceOptions {
  /// 0 means iterate to a fixpoint.
  std::size_t max_rounds = 0;
};

struct LinearReduction {
  /// Remaining equations rewritten in the free variables; provenance kept.
  PolySystem residual;
  /// One entry per eliminated variable, sorted by variable.
  std::vector<Substitution> substitutions;
  bool infeasible = false;
  std::optional<LinearCertificate> certificate;
  std::size_t rounds = 0;
  /// Affine equations fed to the elimination, counting those produced by substitution.
  std::size_t linear_rows = 0;
};

LinearReduction linear_reduce(const PolySystem& system, const LinearReduceOptions& options = {});

/// Independent replay of a certificate against the original system. Uses dense
/// reduced row echelon form rather than the incremental elimination.
bool verify_linear_certificate(const PolySystem& system, const LinearCertificate& certificate);

}  // namespace novikov
