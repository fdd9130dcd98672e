#pragma once

// Brute-force reference implementations. Deliberately naive: dense n^3 tables,
// identities expanded term by term from their definitions, and a textbook
// Gaussian elimination. Reads library types only through their raw data.

#include <cstddef>
#include <vector>

#include "novikov/algebra.hpp"
#include "novikov/extensions.hpp"
#include "novikov/rational.hpp"

namespace oracle {

using novikov::Rational;
using Vec = std::vector<Rational>;

struct Tab {
  std::size_t n = 0;
  std::vector<Rational> c;  // c[(i*n+j)*n+k]: coefficient of e_k in e_i e_j

  explicit Tab(std::size_t dim = 0) : n(dim), c(dim * dim * dim) {}
  Rational& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; }
  const Rational& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
  bool operator==(const Tab& o) const { return n == o.n && c == o.c; }
};

inline Tab tab(const novikov::StructureTable& t) {
  Tab out(t.dim());
  for (const auto& [idx, v] : t.entries()) out.at(idx[0], idx[1], idx[2]) = v;
  return out;
}
inline Tab tab(const novikov::AlgebraProduct& p) { return tab(p.table()); }
inline Tab tab(const novikov::LieAlgebra& l) { return tab(l.table()); }

inline novikov::StructureTable table(const Tab& t) {
  std::map<novikov::Index3, Rational> e;
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k)
        if (!t.at(i, j, k).is_zero()) e[{i, j, k}] = t.at(i, j, k);
  return novikov::StructureTable(t.n, e);
}

inline Vec mul(const Tab& t, const Vec& u, const Vec& v) {
  Vec out(t.n);
  for (std::size_t i = 0; i < t.n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < t.n; ++j) {
      if (v[j].is_zero()) continue;
      const Rational s = u[i] * v[j];
      for (std::size_t k = 0; k < t.n; ++k) out[k] += s * t.at(i, j, k);
    }
  }
  return out;
}

inline Vec e(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

inline Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}
inline Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}
inline bool zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Tab commutator(const Tab& t) {
  Tab out(t.n);
  for (std::size_t i = 0; i < t.n; ++i)
    for (std::size_t j = 0; j < t.n; ++j)
      for (std::size_t k = 0; k < t.n; ++k) out.at(i, j, k) = t.at(i, j, k) - t.at(j, i, k);
  return out;
}

// (x y) z - x (y z) symmetric in x, y
inline bool left_symmetric(const Tab& t) {
  const std::size_t n = t.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Vec X = e(n, x), Y = e(n, y), Z = e(n, z);
        const Vec axyz = sub(mul(t, mul(t, X, Y), Z), mul(t, X, mul(t, Y, Z)));
        const Vec ayxz = sub(mul(t, mul(t, Y, X), Z), mul(t, Y, mul(t, X, Z)));
        if (axyz != ayxz) return false;
      }
  return true;
}

inline bool right_commuting(const Tab& t) {
  const std::size_t n = t.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        const Vec X = e(n, x), Y = e(n, y), Z = e(n, z);
        if (mul(t, mul(t, X, Y), Z) != mul(t, mul(t, X, Z), Y)) return false;
      }
  return true;
}

inline bool novikov(const Tab& t) { return left_symmetric(t) && right_commuting(t); }

inline bool jacobi(const Tab& b) {
  const std::size_t n = b.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        if (b.at(i, j, k) != -b.at(j, i, k)) return false;
      for (std::size_t k = 0; k < n; ++k) {
        const Vec X = e(n, i), Y = e(n, j), Z = e(n, k);
        Vec s = add(mul(b, mul(b, X, Y), Z), mul(b, mul(b, Y, Z), X));
        s = add(s, mul(b, mul(b, Z, X), Y));
        if (!zero(s)) return false;
      }
    }
  return true;
}

inline bool jacobi_like(const Tab& t) {
  const Tab b = commutator(t);
  const std::size_t n = t.n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Vec X = e(n, i), Y = e(n, j), Z = e(n, k);
        Vec l = add(mul(t, mul(b, X, Y), Z), mul(t, mul(b, Y, Z), X));
        l = add(l, mul(t, mul(b, Z, X), Y));
        Vec r = add(mul(t, X, mul(b, Y, Z)), mul(t, Y, mul(b, Z, X)));
        r = add(r, mul(t, Z, mul(b, X, Y)));
        if (!zero(l) || !zero(r)) return false;
      }
  return true;
}

// Independent rows of a list, by plain elimination with the first nonzero pivot.
inline std::vector<Vec> independent(std::vector<Vec> rows) {
  std::vector<Vec> basis;
  for (auto& r : rows) {
    for (const auto& b : basis) {
      std::size_t p = 0;
      while (b[p].is_zero()) ++p;
      if (!r[p].is_zero()) {
        const Rational f = r[p] / b[p];
        for (std::size_t i = 0; i < r.size(); ++i) r[i] -= f * b[i];
      }
    }
    if (zero(r)) continue;
    // keep pivots distinct: clear the new pivot from the old rows
    std::size_t p = 0;
    while (r[p].is_zero()) ++p;
    for (auto& b : basis)
      if (!b[p].is_zero()) {
        const Rational f = b[p] / r[p];
        for (std::size_t i = 0; i < r.size(); ++i) b[i] -= f * r[i];
      }
    basis.push_back(r);
  }
  return basis;
}

inline std::size_t rank(const std::vector<Vec>& rows) { return independent(rows).size(); }

// dims of g, [g,g], [[g,g],[g,g]], ... until zero or stable
inline std::vector<std::size_t> derived_dims(const Tab& b) {
  std::vector<Vec> cur;
  for (std::size_t i = 0; i < b.n; ++i) cur.push_back(e(b.n, i));
  std::vector<std::size_t> dims{cur.size()};
  while (!cur.empty()) {
    std::vector<Vec> next;
    for (const auto& u : cur)
      for (const auto& v : cur) next.push_back(mul(b, u, v));
    next = independent(next);
    if (next.size() == cur.size()) break;
    dims.push_back(next.size());
    cur = next;
  }
  return dims;
}

inline std::vector<std::size_t> lower_central_dims(const Tab& b) {
  std::vector<Vec> cur;
  for (std::size_t i = 0; i < b.n; ++i) cur.push_back(e(b.n, i));
  std::vector<std::size_t> dims{cur.size()};
  while (!cur.empty()) {
    std::vector<Vec> next;
    for (std::size_t i = 0; i < b.n; ++i)
      for (const auto& v : cur) next.push_back(mul(b, e(b.n, i), v));
    next = independent(next);
    if (next.size() == cur.size()) break;
    dims.push_back(next.size());
    cur = next;
  }
  return dims;
}

// Dense matrix helpers, row-major m[r][c].
using Mat = std::vector<Vec>;

inline Mat mat(const novikov::Matrix& m) {
  Mat out(m.rows(), Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline Vec apply(const Mat& m, const Vec& v) {
  Vec out(m.size());
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  const std::size_t inner = b.size();
  const std::size_t cols = inner ? b[0].size() : 0;
  Mat out(a.size(), Vec(cols));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t k = 0; k < inner; ++k)
      for (std::size_t c = 0; c < cols; ++c) out[r][c] += a[r][k] * b[k][c];
  return out;
}

// (a,x) o (b,y) = (a.b + phi1(y)a + phi2(x)b + omega(x,y), x.y), straight from the definition
inline Tab lift_oracle(const novikov::LiftData& d) {
  const std::size_t da = d.a_dim(), db = d.b_dim(), n = da + db;
  const Tab ap = tab(d.a_product), bp = tab(d.b_product);
  Tab t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec a(da), b(da), x(db), y(db);
      (i < da ? a[i] : x[i - da]) = 1;
      (j < da ? b[j] : y[j - da]) = 1;
      Vec out = mul(ap, a, b);
      for (std::size_t s = 0; s < db; ++s) {
        const Vec p1 = oracle::apply(mat(d.phi1[s]), a);
        const Vec p2 = oracle::apply(mat(d.phi2[s]), b);
        for (std::size_t r = 0; r < da; ++r) out[r] += y[s] * p1[r] + x[s] * p2[r];
        for (std::size_t u = 0; u < db; ++u)
          for (std::size_t r = 0; r < da; ++r) out[r] += x[s] * y[u] * d.omega.value(s, u)[r];
      }
      const Vec xy = mul(bp, x, y);
      for (std::size_t r = 0; r < da; ++r) t.at(i, j, r) = out[r];
      for (std::size_t r = 0; r < db; ++r) t.at(i, j, da + r) = xy[r];
    }
  return t;
}

// Values of the full-system unknowns for a given product: x{k}_{i}_{j} is the
// coefficient of x_i in x_k . x_j.
inline std::vector<Rational> full_values(const novikov::AlgebraProduct& p) {
  const std::size_t n = p.dim();
  std::vector<Rational> v(n * n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[(k * n + i) * n + j] = p.table().at(k, j, i);
  return v;
}

}  // namespace oracle
