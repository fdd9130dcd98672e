#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/groebner.hpp"
#include "novikov/poly.hpp"
#include "novikov/reduce.hpp"

namespace novikov {

enum class Mode { lsa, novikov };
enum class Strategy { ansatz_first, full };
enum class Verdict { exists, not_exists, unknown };

std::string to_string(Mode m);
std::string to_string(Strategy s);
std::string to_string(Verdict v);
Mode parse_mode(const std::string& s);
Strategy parse_strategy(const std::string& s);

/// Lie algebra whose structure constants are polynomials in named parameters.
/// bracket[(i * n + j) * n + k] is the coefficient of x_k in [x_i, x_j]; the
/// parameters are variables 0 .. parameters.size()-1 of those polynomials.
struct ParametricLie {
  std::size_t dim = 0;
  std::vector<std::string> parameters;
  std::vector<MultiPoly> bracket;

  static ParametricLie from(const LieAlgebra& lie);
  const MultiPoly& at(std::size_t i, std::size_t j, std::size_t k) const { return bracket[(i * dim + j) * dim + k]; }
};

/// A polynomial system together with the symbolic product it constrains.
/// product[(i * n + j) * n + k] is the coefficient of x_k in x_i . x_j as a
/// polynomial in the system variables.
struct BuiltSystem {
  std::string name;
  std::size_t dim = 0;
  PolySystem system;
  std::vector<MultiPoly> product;

  AlgebraProduct product_at(const std::vector<Rational>& values, const std::vector<std::string>& labels = {}) const;
};

/// Unknown x{k}_{i}_{j} is entry (i, j) of L(x_k), i.e. the coefficient of x_i
/// in x_k . x_j; variables are ordered by (k, i, j). Families:
///   compat(i,j)[k]     x_i.x_j - x_j.x_i - [x_i,x_j]
///   lsa(a,b)[r,c]      [L(a),L(b)] - L([a,b])
///   novikov(a,b)[r,c]  L([a,b]) + ad([a,b]) - [ad a, L(b)] - [L(a), ad b]   (linear)
/// Parameters of a ParametricLie are appended after the unknowns.
BuiltSystem build_full(const ParametricLie& lie, Mode mode, std::size_t threads = 1);

/// x_i.x_j = l{i}_{j} [x_i,x_j] and x_j.x_i = (1 - l{i}_{j}) [x_j,x_i] for i < j with
/// nonzero bracket, and x_i.x_i = sum_t d{i}_{t} w_t over a basis w of [g,g].
/// Compatibility holds by construction, so only the lsa and novikov families remain.
BuiltSystem build_ansatz(const ParametricLie& lie, Mode mode = Mode::novikov, std::size_t threads = 1);

PolySystem build_full_system(const LieAlgebra& lie, Mode mode, std::size_t threads = 1);
PolySystem build_ansatz_system(const LieAlgebra& lie, Mode mode = Mode::novikov, std::size_t threads = 1);

struct DecideOptions {
  Mode mode = Mode::novikov;
  Strategy strategy = Strategy::ansatz_first;
  std::size_t degree_cap = 6;
  std::size_t pair_cap = 50000;
  /// Search nodes per phase of witness extraction.
  std::size_t node_budget = 20000;
  /// Seeds the randomized phase, which only runs after the deterministic search fails.
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

struct Certificate {
  enum class Kind { linear_infeasible, groebner_unit };
  Kind kind = Kind::linear_infeasible;
  /// Present for linear_infeasible.
  std::optional<LinearCertificate> linear;
  /// Present for groebner_unit: the reduced system whose ideal contains 1.
  std::optional<PolySystem> residual;
};

std::string to_string(Certificate::Kind k);

struct StageStats {
  std::string system;  // "ansatz" or "full"
  std::size_t variables = 0;
  std::size_t equations = 0;
  std::size_t affine_equations = 0;
  std::size_t eliminated = 0;
  std::size_t residual_equations = 0;
  std::size_t rounds = 0;
  bool groebner_run = false;
  std::size_t groebner_pairs = 0;
  std::size_t search_nodes = 0;
  std::string outcome;
};

struct SolveOutcome {
  Verdict verdict = Verdict::unknown;
  std::optional<AlgebraProduct> witness;
  /// Values of the system variables at the witness.
  std::vector<Rational> witness_values;
  /// Which system the witness or certificate refers to.
  std::string system;
  std::optional<Certificate> certificate;
  std::optional<PolySystem> residual;
  std::string reason;
  std::vector<StageStats> stages;
};

/// Runs the pipeline on one built system. lie is used to re-verify witnesses.
SolveOutcome solve_built(const BuiltSystem& built, const LieAlgebra& lie, const DecideOptions& options);

SolveOutcome decide(const LieAlgebra& lie, const DecideOptions& options = {});

/// Replays a certificate against the system it was issued for.
bool verify_certificate(const PolySystem& system, const Certificate& certificate);

}  // namespace novikov
