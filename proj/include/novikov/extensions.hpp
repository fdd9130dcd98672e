#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/rmatrix.hpp"

namespace novikov {

/// Skew-symmetric bilinear map b x b -> a, stored on pairs i < j.
class Cocycle {
public:
  Cocycle() = default;
  Cocycle(std::size_t b_dim, std::size_t a_dim) : b_dim_(b_dim), a_dim_(a_dim) {}
  std::size_t b_dim() const { return b_dim_; }
  std::size_t a_dim() const { return a_dim_; }
  /// Sets Omega(x_i, x_j) = v (and Omega(x_j, x_i) = -v). Requires i != j.
  Cocycle& set(std::size_t i, std::size_t j, Vector v);
  Vector value(std::size_t i, std::size_t j) const;
  Vector eval(const Vector& x, const Vector& y) const;
  /// Nonzero values on pairs i < j.
  const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>>& values() const { return values_; }
  bool is_zero() const { return values_.empty(); }
  friend bool operator==(const Cocycle&, const Cocycle&) = default;

private:
  std::size_t b_dim_ = 0;
  std::size_t a_dim_ = 0;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>> values_;  // sorted by (i,j)
};

/// General bilinear map b x b -> a with no symmetry assumed.
class BilinearMap {
public:
  BilinearMap() = default;
  BilinearMap(std::size_t b_dim, std::size_t a_dim)
      : b_dim_(b_dim), a_dim_(a_dim), values_(b_dim * b_dim, Vector(a_dim)) {}
  std::size_t b_dim() const { return b_dim_; }
  std::size_t a_dim() const { return a_dim_; }
  BilinearMap& set(std::size_t i, std::size_t j, Vector v);
  const Vector& value(std::size_t i, std::size_t j) const { return values_[i * b_dim_ + j]; }
  Vector eval(const Vector& x, const Vector& y) const;
  bool is_zero() const;
  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

private:
  std::size_t b_dim_ = 0;
  std::size_t a_dim_ = 0;
  std::vector<Vector> values_;
};

/// Data lifting products on a (abelian kernel) and b to the extension g = a + b:
///   (a,x) o (b,y) = (a.b + phi1(y)a + phi2(x)b + omega(x,y), x.y).
/// The basis of g lists a first, then b.
struct LiftData {
  AlgebraProduct a_product;
  AlgebraProduct b_product;
  Representation phi;  ///< b acting on a; phi.algebra() is the Lie algebra b
  Cocycle Omega;
  BilinearMap omega;
  std::vector<Matrix> phi1;
  std::vector<Matrix> phi2;

  std::size_t a_dim() const { return phi.module_dim(); }
  std::size_t b_dim() const { return phi.algebra().dim(); }
  /// Throws DimensionMismatch when the parts disagree on dimensions.
  void validate() const;
  friend bool operator==(const LiftData&, const LiftData&) = default;
};

/// phi(x)Omega(y,z) - phi(y)Omega(x,z) + phi(z)Omega(x,y)
///   = Omega([x,y],z) - Omega([x,z],y) + Omega([y,z],x).
/// Vacuous (and noted) when dim b < 3.
CheckReport check_cocycle(const Representation& phi, const Cocycle& omega);

/// [(a,x),(b,y)] = (phi(x)b - phi(y)a + Omega(x,y), [x,y]).
LieAlgebra extension_lie(const Representation& phi, const Cocycle& omega);

AlgebraProduct lifted_product(const LiftData& data);

/// Standing assumptions behind the lifting conditions: a.b commutative and
/// associative, b.y left-symmetric and inducing the bracket of b, phi, phi1,
/// phi2 representations, Omega a cocycle.
CheckReport check_lift_hypotheses(const LiftData& data);

/// Conditions for the lifted product to be left-symmetric; identities "eq8" .. "eq14".
CheckReport check_lsa_conditions(const LiftData& data);
/// Additional conditions for Novikov; identities "eq15" .. "eq20".
CheckReport check_novikov_conditions(const LiftData& data);
/// Reduced conditions when both products vanish (b abelian). Throws ProductsNotTrivial.
CheckReport check_trivial_corollary(const LiftData& data);

struct SemidirectLift {
  LiftData data;
  bool novikov = false;
  /// Why the Novikov conclusion does not apply, when it does not.
  std::optional<std::string> obstruction;
};

/// Omega = 0, a.b = 0, phi1 = 0, omega = 0, phi2 = phi.
SemidirectLift semidirect_lift(const Representation& phi, const AlgebraProduct& b_product);

/// phi1 = 0, phi2 = phi, trivial products, omega(x,y) = phi(e)^-1 phi(x) Omega(e,y).
LiftData iso_lift(const Representation& phi, const Cocycle& omega, const Vector& e);

}  // namespace novikov
