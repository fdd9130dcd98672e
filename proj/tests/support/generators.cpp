#include "generators.hpp"

#include "novikov/checks.hpp"
#include "novikov/errors.hpp"
#include "novikov/rmatrix.hpp"

namespace gen {

using novikov::Cocycle;
using novikov::Representation;
using novikov::StructureTable;
using novikov::TableBuilder;
using novikov::Vector;

Matrix Rng::matrix(std::size_t rows, std::size_t cols, double density, int lim) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(density)) m(r, c) = integer(-lim, lim);
  return m;
}

Matrix Rng::unimodular(std::size_t n) {
  Matrix m = Matrix::identity(n);
  if (n < 2) return coin() ? m : Rational(-1) * m;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const std::size_t a = integer(0, int(n) - 1);
    std::size_t b = integer(0, int(n) - 2);
    if (b >= a) ++b;
    const Rational f = integer(-2, 2);
    for (std::size_t c = 0; c < n; ++c) m(a, c) += f * m(b, c);
  }
  return m;
}

AlgebraProduct change_basis(const AlgebraProduct& product, const Matrix& p) {
  const std::size_t n = product.dim();
  const Matrix inv = novikov::inverse(p);
  TableBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add_product(i, j, inv.apply(product.multiply(p.column(i), p.column(j))));
  return AlgebraProduct(b.build());
}

AlgebraProduct truncated_polynomial(std::size_t n, bool unital) {
  TableBuilder b(n);
  // basis index i stands for t^(i + offset)
  const std::size_t offset = unital ? 0 : 1;
  const std::size_t top = unital ? n - 1 : n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t deg = i + j + 2 * offset;
      if (deg <= top) b.add(i, j, deg - offset, 1);
    }
  return AlgebraProduct(b.build());
}

AlgebraProduct twisted_polynomial(Rng& rng, std::size_t n, bool unital) {
  const AlgebraProduct a = truncated_polynomial(n, unital);
  const std::size_t offset = unital ? 0 : 1;
  const std::size_t top = unital ? n - 1 : n;
  // p(t) = sum_{m >= 1} p_m t^m
  std::vector<Rational> p(top + 1);
  for (std::size_t m = 1; m <= top; ++m) p[m] = rng.sparse(0.6);
  // D(t^k) = k t^(k-1) p(t)
  Matrix d(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t k = j + offset;
    if (k == 0) continue;
    for (std::size_t m = 1; m <= top; ++m) {
      const std::size_t deg = k - 1 + m;
      if (deg <= top && deg >= offset) d(deg - offset, j) += Rational(long(k)) * p[m];
    }
  }
  TableBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b.add_product(i, j, a.multiply(novikov::unit_vector(n, i), d.column(j)));
  return AlgebraProduct(b.build());
}

AlgebraProduct random_two_step_half_bracket(Rng& rng, std::size_t n) {
  if (n < 3) return AlgebraProduct(StructureTable(n));
  const std::size_t z = rng.integer(1, int(n) - 2);
  const std::size_t v = n - z;
  TableBuilder b(n);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      for (std::size_t k = v; k < n; ++k) {
        const Rational c = rng.sparse(0.5);
        if (!c.is_zero()) b.add_bracket(i, j, k, c / 2);
      }
  return AlgebraProduct(b.build());
}

namespace {

AlgebraProduct matrix_units(bool upper_only) {
  // basis E11, E12, (E21,) E22
  std::vector<std::pair<int, int>> units = {{0, 0}, {0, 1}};
  if (!upper_only) units.push_back({1, 0});
  units.push_back({1, 1});
  const std::size_t n = units.size();
  TableBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (units[i].second != units[j].first) continue;
      const std::pair<int, int> r{units[i].first, units[j].second};
      for (std::size_t k = 0; k < n; ++k)
        if (units[k] == r) b.add(i, j, k, 1);
    }
  return AlgebraProduct(b.build());
}

}  // namespace

AlgebraProduct random_associative(Rng& rng, std::size_t max_dim) {
  const int choice = rng.integer(0, 2);
  if (choice == 0 && max_dim >= 3) return matrix_units(true);
  if (choice == 1 && max_dim >= 4) return matrix_units(false);
  return truncated_polynomial(rng.integer(1, int(max_dim)), rng.coin());
}

AlgebraProduct random_novikov(Rng& rng, std::size_t max_dim) {
  const std::size_t n = rng.integer(1, int(max_dim));
  AlgebraProduct p;
  switch (rng.integer(0, 3)) {
    case 0: p = twisted_polynomial(rng, n, rng.coin()); break;
    case 1: p = truncated_polynomial(n, rng.coin()); break;
    case 2: p = random_two_step_half_bracket(rng, n); break;
    default: p = twisted_polynomial(rng, n, false); break;
  }
  return change_basis(p, rng.unimodular(p.dim()));
}

AlgebraProduct random_lsa(Rng& rng, std::size_t max_dim) {
  if (rng.coin()) return random_novikov(rng, max_dim);
  const AlgebraProduct p = random_associative(rng, max_dim);
  return change_basis(p, rng.unimodular(p.dim()));
}

namespace {

Matrix poly_in(Rng& rng, const Matrix& m, bool unit_term) {
  const std::size_t n = m.rows();
  Matrix out = Rational(unit_term ? rng.integer(1, 2) : rng.integer(-1, 1)) * Matrix::identity(n);
  out += Rational(rng.integer(-2, 2)) * m;
  out += Rational(rng.integer(-1, 1)) * (m * m);
  return out;
}

LiftData iso_family(Rng& rng, Matrix& generator) {
  for (;;) {
    const std::size_t db = rng.integer(1, 3), da = rng.integer(1, 3);
    generator = rng.matrix(da, da, 0.6, 2);
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < db; ++i) maps.push_back(poly_in(rng, generator, i == 0));
    const Representation phi(LieAlgebra(StructureTable(db)), da, maps);
    Cocycle omega(db, da);
    if (rng.coin()) {
      // coboundary phi(x)c(y) - phi(y)c(x), a cocycle for every dim b
      std::vector<Vector> c;
      for (std::size_t i = 0; i < db; ++i) c.push_back(rng.matrix(da, 1).column(0));
      for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = i + 1; j < db; ++j) omega.set(i, j, maps[i].apply(c[j]) - maps[j].apply(c[i]));
    } else if (db <= 2) {
      for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = i + 1; j < db; ++j) omega.set(i, j, rng.matrix(da, 1).column(0));
    }
    Vector e(db);
    e[0] = 1;
    for (std::size_t i = 1; i < db; ++i) e[i] = rng.integer(-1, 1);
    try {
      return novikov::iso_lift(phi, omega, e);
    } catch (const novikov::NotInvertible&) {
    }
  }
}

LiftData semidirect_family(Rng& rng) {
  const AlgebraProduct bp = rng.coin(0.7) ? random_novikov(rng, 3) : random_lsa(rng, 3);
  const LieAlgebra b = novikov::commutator(bp);
  Representation phi;
  switch (rng.integer(0, 2)) {
    case 0: phi = novikov::left_multiplication_representation(bp); break;
    case 1: phi = novikov::adjoint_representation(b); break;
    default: {
      const std::size_t da = rng.integer(1, 3);
      phi = Representation(b, da, std::vector<Matrix>(b.dim(), Matrix(da, da)));
    }
  }
  return novikov::semidirect_lift(phi, bp).data;
}

}  // namespace

LiftSample random_liftdata(Rng& rng) {
  LiftSample s;
  Matrix generator;
  const bool iso = rng.coin();
  s.data = iso ? iso_family(rng, generator) : semidirect_family(rng);
  s.family = iso ? "iso" : "semidirect";
  if (!rng.coin()) return s;

  LiftData& d = s.data;
  const std::size_t da = d.a_dim(), db = d.b_dim();
  switch (rng.integer(0, iso ? 2 : 1)) {
    case 0: {
      const std::size_t i = rng.integer(0, int(db) - 1), j = rng.integer(0, int(db) - 1);
      d.omega.set(i, j, d.omega.value(i, j) + rng.matrix(da, 1, 0.7, 2).column(0));
      s.family += "+omega";
      break;
    }
    case 1: {
      d.a_product = change_basis(truncated_polynomial(da, rng.coin()), rng.unimodular(da));
      s.family += "+a_product";
      break;
    }
    default: {
      // shift phi1 and phi2 by the same commuting family, keeping phi2 - phi1 = phi
      const Matrix power = rng.coin() ? generator : generator * generator;
      for (std::size_t i = 0; i < db; ++i) {
        const Matrix shift = Rational(rng.integer(-2, 2)) * power;
        d.phi1[i] += shift;
        d.phi2[i] += shift;
      }
      s.family += "+phi1";
    }
  }
  return s;
}

}  // namespace gen
