#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "novikov/rational.hpp"

namespace novikov {

using Var = std::uint32_t;

/// Power product stored sparsely as (variable, exponent) pairs sorted by variable.
class Monomial {
public:
  Monomial() = default;
  static Monomial variable(Var v, std::uint32_t exponent = 1);

  const std::vector<std::pair<Var, std::uint32_t>>& factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(Var v) const;
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Dense exponent vector of length n.
  std::vector<std::uint32_t> dense(std::size_t n) const;
  static Monomial from_dense(const std::vector<std::uint32_t>& exps);

private:
  std::vector<std::pair<Var, std::uint32_t>> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic order with x_0 > x_1 > ... ; true when a < b.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(a, b); }
};

/// Sparse polynomial over Q. Terms are kept in grevlex order without zero coefficients.
class MultiPoly {
public:
  using Terms = std::map<Monomial, Rational, GrevlexLess>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(Var v);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Degree at most one.
  bool is_affine() const { return degree() <= 1; }
  /// Total degree; 0 for the zero polynomial.
  std::uint32_t degree() const;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  std::set<Var> variables() const;
  std::size_t size() const { return terms_.size(); }

  /// Leading term in grevlex. Requires a nonzero polynomial.
  const std::pair<const Monomial, Rational>& leading() const { return *terms_.rbegin(); }

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& s);
  /// this += c * m * p
  MultiPoly& add_scaled(const Rational& c, const Monomial& m, const MultiPoly& p);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= Rational(-1); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const Rational& s, MultiPoly p) { return p *= s; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  /// Scales so the leading coefficient is 1.
  MultiPoly monic() const;

  /// Replaces every variable v with lookup(v) when present; others stay.
  MultiPoly substitute(const std::function<const MultiPoly*(Var)>& lookup) const;
  MultiPoly substitute(const std::unordered_map<Var, MultiPoly>& values) const;
  /// Evaluates with values[v] for each variable.
  Rational evaluate(const std::vector<Rational>& values) const;

  std::string str(const std::vector<std::string>& names = {}) const;

private:
  Terms terms_;
};

/// Polynomial equations p = 0 over a shared, named variable list.
struct PolySystem {
  std::vector<std::string> variables;
  std::vector<MultiPoly> polys;
  std::vector<std::string> provenance;

  std::size_t size() const { return polys.size(); }
  bool empty() const { return polys.empty(); }
  /// Appends p unless it is zero.
  void add(MultiPoly p, std::string tag);
  std::size_t count_affine() const;
  /// True when every equation vanishes at the given point.
  bool satisfied_by(const std::vector<Rational>& values) const;
  std::optional<Var> find_variable(const std::string& name) const;
};

}  // namespace novikov
