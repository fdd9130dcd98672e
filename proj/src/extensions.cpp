#include "novikov/extensions.hpp"

#include <algorithm>
#include <string>

#include "novikov/checks.hpp"

namespace novikov {

Cocycle& Cocycle::set(std::size_t i, std::size_t j, Vector v) {
  if (i >= b_dim_ || j >= b_dim_ || i == j) throw DimensionMismatch("cocycle index");
  if (v.size() != a_dim_) throw DimensionMismatch("cocycle value size");
  if (i > j) {
    std::swap(i, j);
    v = Rational(-1) * v;
  }
  auto it = std::lower_bound(values_.begin(), values_.end(), std::make_pair(i, j),
                             [](const auto& entry, const auto& key) { return entry.first < key; });
  if (it != values_.end() && it->first == std::make_pair(i, j)) {
    if (novikov::is_zero(v)) values_.erase(it);
    else it->second = std::move(v);
  } else if (!novikov::is_zero(v)) {
    values_.insert(it, {{i, j}, std::move(v)});
  }
  return *this;
}

Vector Cocycle::value(std::size_t i, std::size_t j) const {
  if (i == j) return Vector(a_dim_);
  const bool flip = i > j;
  const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
  for (const auto& [k, v] : values_)
    if (k == key) return flip ? Rational(-1) * v : v;
  return Vector(a_dim_);
}

Vector Cocycle::eval(const Vector& x, const Vector& y) const {
  Vector r(a_dim_);
  for (const auto& [k, v] : values_) {
    const Rational c = x[k.first] * y[k.second] - x[k.second] * y[k.first];
    if (!c.is_zero()) axpy(r, c, v);
  }
  return r;
}

BilinearMap& BilinearMap::set(std::size_t i, std::size_t j, Vector v) {
  if (i >= b_dim_ || j >= b_dim_) throw DimensionMismatch("bilinear map index");
  if (v.size() != a_dim_) throw DimensionMismatch("bilinear map value size");
  values_[i * b_dim_ + j] = std::move(v);
  return *this;
}

Vector BilinearMap::eval(const Vector& x, const Vector& y) const {
  Vector r(a_dim_);
  for (std::size_t i = 0; i < b_dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < b_dim_; ++j)
      if (!y[j].is_zero()) axpy(r, x[i] * y[j], value(i, j));
  }
  return r;
}

bool BilinearMap::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Vector& v) { return novikov::is_zero(v); });
}

void LiftData::validate() const {
  const std::size_t p = a_dim(), q = b_dim();
  if (a_product.dim() != p) throw DimensionMismatch("a_product dimension");
  if (b_product.dim() != q) throw DimensionMismatch("b_product dimension");
  if (Omega.a_dim() != p || Omega.b_dim() != q) throw DimensionMismatch("Omega dimensions");
  if (omega.a_dim() != p || omega.b_dim() != q) throw DimensionMismatch("omega dimensions");
  if (phi1.size() != q || phi2.size() != q) throw DimensionMismatch("phi1/phi2 need one matrix per b basis vector");
  for (const auto* maps : {&phi1, &phi2})
    for (const auto& m : *maps)
      if (m.rows() != p || m.cols() != p) throw DimensionMismatch("phi1/phi2 matrices must be a_dim x a_dim");
}

namespace {

Matrix combine(const std::vector<Matrix>& maps, const Vector& x, std::size_t size) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!x[i].is_zero()) m += x[i] * maps[i];
  return m;
}

void add_matrix_violation(CheckReport& report, const std::string& name, std::vector<std::size_t> idx,
                          const Matrix& r) {
  if (!r.is_zero()) report.add(name, std::move(idx), r.flat());
}

void add_vector_violation(CheckReport& report, const std::string& name, std::vector<std::size_t> idx,
                          Vector r) {
  if (!is_zero(r)) report.add(name, std::move(idx), std::move(r));
}

}  // namespace

CheckReport check_cocycle(const Representation& phi, const Cocycle& omega) {
  const std::size_t q = phi.algebra().dim();
  if (omega.b_dim() != q || omega.a_dim() != phi.module_dim()) throw DimensionMismatch("cocycle dimensions");
  CheckReport report;
  if (q < 3) report.notes.push_back("cocycle identity is vacuous for dim b < 3");
  const auto& lie = phi.algebra();
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y)
      for (std::size_t z = y + 1; z < q; ++z) {
        const Vector ex = unit_vector(q, x), ey = unit_vector(q, y), ez = unit_vector(q, z);
        Vector lhs = phi.maps()[x].apply(omega.value(y, z)) - phi.maps()[y].apply(omega.value(x, z)) +
                     phi.maps()[z].apply(omega.value(x, y));
        Vector rhs = omega.eval(lie.bracket(x, y), ez) - omega.eval(lie.bracket(x, z), ey) +
                     omega.eval(lie.bracket(y, z), ex);
        add_vector_violation(report, "cocycle", {x, y, z}, lhs - rhs);
      }
  return report;
}

LieAlgebra extension_lie(const Representation& phi, const Cocycle& omega) {
  if (!check_representation(phi).passed) throw PreconditionFailed("phi is not a representation");
  if (!check_jacobi(phi.algebra()).passed) throw PreconditionFailed("b fails the Jacobi identity");
  if (!check_cocycle(phi, omega).passed) throw PreconditionFailed("Omega is not a 2-cocycle");
  const std::size_t p = phi.module_dim(), q = phi.algebra().dim(), n = p + q;
  TableBuilder builder(n);
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t a = 0; a < p; ++a) {
      const Vector image = phi.maps()[x].column(a);
      for (std::size_t k = 0; k < p; ++k) builder.add_bracket(p + x, a, k, image[k]);
    }
    for (std::size_t y = x + 1; y < q; ++y) {
      const Vector om = omega.value(x, y);
      const Vector br = phi.algebra().bracket(x, y);
      for (std::size_t k = 0; k < p; ++k) builder.add_bracket(p + x, p + y, k, om[k]);
      for (std::size_t k = 0; k < q; ++k) builder.add_bracket(p + x, p + y, p + k, br[k]);
    }
  }
  return LieAlgebra(builder.build());
}

AlgebraProduct lifted_product(const LiftData& data) {
  data.validate();
  const std::size_t p = data.a_dim(), q = data.b_dim(), n = p + q;
  TableBuilder builder(n);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) builder.add_product(a, b, [&] {
        Vector v = data.a_product.multiply(a, b);
        v.resize(n);
        return v;
      }());
  auto embed_a = [&](const Vector& v) {
    Vector r(n);
    std::copy(v.begin(), v.end(), r.begin());
    return r;
  };
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t a = 0; a < p; ++a) {
      builder.add_product(a, p + x, embed_a(data.phi1[x].column(a)));  // a o x = phi1(x)a
      builder.add_product(p + x, a, embed_a(data.phi2[x].column(a)));  // x o a = phi2(x)a
    }
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) {
      Vector v = embed_a(data.omega.value(x, y));
      const Vector xy = data.b_product.multiply(x, y);
      for (std::size_t k = 0; k < q; ++k) v[p + k] = xy[k];
      builder.add_product(p + x, p + y, v);
    }
  return AlgebraProduct(builder.build());
}

CheckReport check_lift_hypotheses(const LiftData& data) {
  data.validate();
  CheckReport report;
  auto tagged = [&](const CheckReport& r, const std::string& prefix) {
    for (const auto& v : r.violations) report.add(prefix + "." + v.identity, v.indices, v.residual);
  };
  tagged(check_commutative_associative(data.a_product), "a_product");
  tagged(check_left_symmetric(data.b_product), "b_product");
  if (!is_compatible(data.b_product, data.phi.algebra())) report.add("b_product.compatibility", {}, {});
  tagged(check_representation(data.phi), "phi");
  tagged(check_representation(Representation(data.phi.algebra(), data.a_dim(), data.phi1)), "phi1");
  tagged(check_representation(Representation(data.phi.algebra(), data.a_dim(), data.phi2)), "phi2");
  tagged(check_cocycle(data.phi, data.Omega), "Omega");
  return report;
}

CheckReport check_lsa_conditions(const LiftData& data) {
  data.validate();
  CheckReport report;
  const std::size_t p = data.a_dim(), q = data.b_dim();
  const auto& lie = data.phi.algebra();
  const auto& phi = data.phi.maps();
  const auto& phi1 = data.phi1;
  const auto& phi2 = data.phi2;
  const auto& A = data.a_product;
  const auto& B = data.b_product;
  auto eb = [q](std::size_t i) { return unit_vector(q, i); };
  auto ea = [p](std::size_t i) { return unit_vector(p, i); };

  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y)
      add_vector_violation(report, "eq8", {x, y},
                           data.omega.value(x, y) - data.omega.value(y, x) - data.Omega.value(x, y));
  for (std::size_t x = 0; x < q; ++x) add_matrix_violation(report, "eq9", {x}, phi2[x] - phi1[x] - phi[x]);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y)
      for (std::size_t z = 0; z < q; ++z) {
        Vector lhs = phi2[x].apply(data.omega.value(y, z)) - phi2[y].apply(data.omega.value(x, z)) -
                     phi1[z].apply(data.Omega.value(x, y));
        Vector rhs = data.omega.eval(eb(y), B.multiply(x, z)) - data.omega.eval(eb(x), B.multiply(y, z)) +
                     data.omega.eval(lie.bracket(x, y), eb(z));
        add_vector_violation(report, "eq10", {x, y, z}, lhs - rhs);
      }
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t y = 0; y < q; ++y)
      for (std::size_t z = 0; z < q; ++z) {
        Vector lhs = A.multiply(ea(a), data.omega.value(y, z)) +
                     combine(phi1, B.multiply(y, z), p).apply(ea(a));
        Vector rhs = (phi2[y] * phi1[z]).apply(ea(a)) - (phi1[z] * phi[y]).apply(ea(a));
        add_vector_violation(report, "eq11", {a, y, z}, lhs - rhs);
      }
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b)
      for (std::size_t z = 0; z < q; ++z)
        add_vector_violation(report, "eq12", {a, b, z},
                             A.multiply(ea(a), phi1[z].column(b)) - A.multiply(ea(b), phi1[z].column(a)));
  for (std::size_t y = 0; y < q; ++y)
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t c = 0; c < p; ++c)
        add_vector_violation(report, "eq13", {y, a, c},
                             phi2[y].apply(A.multiply(a, c)) - A.multiply(ea(a), phi2[y].column(c)) -
                                 A.multiply(phi[y].column(a), ea(c)));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y)
      for (std::size_t c = 0; c < p; ++c)
        add_vector_violation(report, "eq14", {x, y, c}, A.multiply(data.Omega.value(x, y), ea(c)));
  return report;
}

CheckReport check_novikov_conditions(const LiftData& data) {
  data.validate();
  CheckReport report;
  const std::size_t p = data.a_dim(), q = data.b_dim();
  const auto& phi1 = data.phi1;
  const auto& phi2 = data.phi2;
  const auto& A = data.a_product;
  const auto& B = data.b_product;
  auto eb = [q](std::size_t i) { return unit_vector(q, i); };
  auto ea = [p](std::size_t i) { return unit_vector(p, i); };

  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      for (std::size_t z = y + 1; z < q; ++z) {
        Vector lhs = phi1[z].apply(data.omega.value(x, y)) - phi1[y].apply(data.omega.value(x, z));
        Vector rhs = data.omega.eval(B.multiply(x, z), eb(y)) - data.omega.eval(B.multiply(x, y), eb(z));
        add_vector_violation(report, "eq15", {x, y, z}, lhs - rhs);
      }
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      for (std::size_t c = 0; c < p; ++c) {
        Vector lhs = A.multiply(data.omega.value(x, y), ea(c)) + combine(phi2, B.multiply(x, y), p).column(c);
        add_vector_violation(report, "eq16", {x, y, c}, lhs - (phi1[y] * phi2[x]).column(c));
      }
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y) add_matrix_violation(report, "eq17", {x, y}, commutator(phi1[x], phi1[y]));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = b + 1; c < p; ++c)
        add_vector_violation(report, "eq18", {x, b, c},
                             A.multiply(phi2[x].column(b), ea(c)) - A.multiply(phi2[x].column(c), ea(b)));
  for (std::size_t z = 0; z < q; ++z)
    for (std::size_t a = 0; a < p; ++a)
      for (std::size_t b = 0; b < p; ++b)
        add_vector_violation(report, "eq19", {z, a, b},
                             phi1[z].apply(A.multiply(a, b)) - A.multiply(phi1[z].column(a), ea(b)));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      for (std::size_t z = y + 1; z < q; ++z)
        add_vector_violation(report, "eq20", {x, y, z},
                             B.multiply(B.multiply(x, y), eb(z)) - B.multiply(B.multiply(x, z), eb(y)));
  return report;
}

CheckReport check_trivial_corollary(const LiftData& data) {
  data.validate();
  if (!data.a_product.table().is_zero() || !data.b_product.table().is_zero())
    throw ProductsNotTrivial("the products on a and b must both vanish");
  if (!data.phi.algebra().is_abelian())
    throw ProductsNotTrivial("a trivial compatible product on b forces b abelian");
  CheckReport report;
  const std::size_t q = data.b_dim();
  const auto& phi = data.phi.maps();
  const auto& phi1 = data.phi1;
  const auto& phi2 = data.phi2;
  const auto& omega = data.omega;

  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y)
      add_vector_violation(report, "eq8", {x, y}, omega.value(x, y) - omega.value(y, x) - data.Omega.value(x, y));
  for (std::size_t x = 0; x < q; ++x) add_matrix_violation(report, "eq9", {x}, phi2[x] - phi1[x] - phi[x]);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y)
      for (std::size_t z = 0; z < q; ++z)
        add_vector_violation(report, "eq10", {x, y, z},
                             phi2[x].apply(omega.value(y, z)) - phi2[y].apply(omega.value(x, z)) -
                                 phi1[z].apply(data.Omega.value(x, y)));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      add_matrix_violation(report, "eq11", {x, y}, commutator(phi1[x], phi2[y]) - phi1[x] * phi1[y]);

  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      for (std::size_t z = y + 1; z < q; ++z)
        add_vector_violation(report, "eq15", {x, y, z},
                             phi1[z].apply(omega.value(x, y)) - phi1[y].apply(omega.value(x, z)));
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y) add_matrix_violation(report, "eq16", {x, y}, phi1[x] * phi2[y]);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = x + 1; y < q; ++y) add_matrix_violation(report, "eq17", {x, y}, commutator(phi1[x], phi1[y]));

  const bool phi1_zero = std::all_of(phi1.begin(), phi1.end(), [](const Matrix& m) { return m.is_zero(); });
  if (phi1_zero) report.notes.push_back("phi1 = 0: Novikov iff left-symmetric");
  return report;
}

SemidirectLift semidirect_lift(const Representation& phi, const AlgebraProduct& b_product) {
  if (!check_left_symmetric(b_product).passed) throw PreconditionFailed("b_product is not left-symmetric");
  if (!is_compatible(b_product, phi.algebra())) throw PreconditionFailed("b_product does not induce the bracket of b");
  const std::size_t p = phi.module_dim(), q = phi.algebra().dim();
  SemidirectLift out;
  out.data.a_product = AlgebraProduct(StructureTable(p));
  out.data.b_product = b_product;
  out.data.phi = phi;
  out.data.Omega = Cocycle(q, p);
  out.data.omega = BilinearMap(q, p);
  out.data.phi1.assign(q, Matrix(p, p));
  out.data.phi2 = phi.maps();
  if (!check_novikov(b_product).passed) {
    out.obstruction = "b_product is not Novikov";
  } else {
    for (std::size_t x = 0; x < q && !out.obstruction; ++x)
      for (std::size_t y = 0; y < q && !out.obstruction; ++y)
        if (!phi.action(b_product.multiply(x, y)).is_zero())
          out.obstruction = "phi(x.y) != 0 at (" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
  }
  out.novikov = !out.obstruction.has_value();
  return out;
}

LiftData iso_lift(const Representation& phi, const Cocycle& omega, const Vector& e) {
  const std::size_t p = phi.module_dim(), q = phi.algebra().dim();
  if (e.size() != q) throw DimensionMismatch("e must be a vector of b");
  if (!phi.algebra().is_abelian()) throw BNotAbelian("b must be abelian");
  const Matrix phi_e = phi.action(e);
  const Rational det = determinant(phi_e);
  if (det.is_zero()) throw NotInvertible("det phi(e) = " + det.str());
  if (!check_cocycle(phi, omega).passed) throw PreconditionFailed("Omega is not a 2-cocycle");
  const Matrix inv = inverse(phi_e);
  LiftData data;
  data.a_product = AlgebraProduct(StructureTable(p));
  data.b_product = AlgebraProduct(StructureTable(q));
  data.phi = phi;
  data.Omega = omega;
  data.omega = BilinearMap(q, p);
  for (std::size_t x = 0; x < q; ++x)
    for (std::size_t y = 0; y < q; ++y)
      data.omega.set(x, y, inv.apply(phi.maps()[x].apply(omega.eval(e, unit_vector(q, y)))));
  data.phi1.assign(q, Matrix(p, p));
  data.phi2 = phi.maps();
  return data;
}

}  // namespace novikov
