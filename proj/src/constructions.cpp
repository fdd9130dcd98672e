#include "novikov/constructions.hpp"

#include <algorithm>
#include <string>

#include "novikov/checks.hpp"
#include "novikov/series.hpp"

namespace novikov {

AlgebraProduct half_bracket(const LieAlgebra& lie) {
  const auto cls = nilpotency_class(lie);
  if (!cls || *cls > 2)
    throw NotTwoStepNilpotent(cls ? "nilpotency class " + std::to_string(*cls) : "algebra is not nilpotent");
  return AlgebraProduct(lie.table().scaled(Rational(1, 2)), lie.labels());
}

namespace {

std::string witness(std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + ")";
}

}  // namespace

AlgebraProduct block_product(const LieAlgebra& lie, const std::vector<std::size_t>& a_part,
                             const std::vector<std::size_t>& b_part) {
  const std::size_t n = lie.dim();
  std::vector<int> side(n, -1);
  for (auto i : a_part) {
    if (i >= n || side[i] != -1) throw MalformedInput("split is not a partition of the basis");
    side[i] = 0;
  }
  for (auto i : b_part) {
    if (i >= n || side[i] != -1) throw MalformedInput("split is not a partition of the basis");
    side[i] = 1;
  }
  if (std::count(side.begin(), side.end(), -1) != 0) throw MalformedInput("split does not cover the basis");

  std::vector<Vector> a_vecs, b_vecs;
  for (auto i : a_part) a_vecs.push_back(unit_vector(n, i));
  for (auto i : b_part) b_vecs.push_back(unit_vector(n, i));
  const Subspace a_space(a_vecs, n), b_space(b_vecs, n);

  for (auto i : a_part)
    for (auto j : a_part)
      if (!a_space.contains(lie.bracket(i, j)))
        throw HypothesisViolated("[a,a] in a fails at " + witness({i, j}));
  for (std::size_t k = 0; k < n; ++k)
    for (auto j : b_part)
      if (!b_space.contains(lie.bracket(k, j)))
        throw HypothesisViolated("[g,b] in b fails at " + witness({k, j}));
  auto central_check = [&](const std::vector<std::size_t>& part, const char* name) {
    for (auto i : part)
      for (auto j : part) {
        const Vector inner = lie.bracket(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(lie.bracket(unit_vector(n, k), inner)))
            throw HypothesisViolated(std::string(name) + " fails at " + witness({k, i, j}));
      }
  };
  central_check(a_part, "[g,[a,a]] = 0");
  central_check(b_part, "[g,[b,b]] = 0");

  const Rational half(1, 2);
  TableBuilder builder(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector br = lie.bracket(i, j);
      if (side[i] == side[j]) builder.add_product(i, j, half * br);
      else if (side[i] == 0) builder.add_product(i, j, br);
    }
  return AlgebraProduct(builder.build(), lie.labels());
}

AlgebraProduct novikov_from_derivation(const AlgebraProduct& product, const LinearOperator& d) {
  if (!check_commutative_associative(product).passed)
    throw PreconditionFailed("check_commutative_associative failed");
  if (!check_derivation(product, d).passed) throw PreconditionFailed("check_derivation failed");
  const std::size_t n = product.dim();
  TableBuilder builder(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      builder.add_product(i, j, product.multiply(unit_vector(n, i), d.column(j)));
  return AlgebraProduct(builder.build(), product.labels());
}

RightNilpotency right_nilpotency(const AlgebraProduct& product) {
  const std::size_t n = product.dim();
  const std::size_t width = n * n;
  auto flatten = [](const Matrix& m) { return Vector(m.flat()); };
  auto unflatten = [n](const Vector& v) { return Matrix(n, n, v); };

  std::vector<Matrix> generators;
  std::vector<Vector> flat;
  for (std::size_t j = 0; j < n; ++j) {
    generators.push_back(product.R(j));
    flat.push_back(flatten(generators.back()));
  }
  Subspace power(flat, width);
  const std::size_t max_length = width + 1;
  for (std::size_t length = 1; length <= max_length; ++length) {
    if (power.dim() == 0) return {true, length};
    std::vector<Vector> next;
    for (const auto& b : power.basis())
      for (const auto& g : generators) next.push_back(flatten(unflatten(b) * g));
    Subspace following(next, width);
    if (following == power) return {false, std::nullopt};
    power = std::move(following);
  }
  return {false, std::nullopt};
}

}  // namespace novikov
