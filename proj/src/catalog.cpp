#include "novikov/catalog.hpp"

#include <functional>
#include <set>
#include <stdexcept>

#include "novikov/checks.hpp"
#include "novikov/errors.hpp"

namespace novikov {

std::string payload_kind(const Payload& p) {
  static const char* names[] = {"lie", "product", "representation", "rmatrix", "liftdata", "operator"};
  return names[p.index()];
}

namespace {

using Builder = std::function<Payload(const Params&)>;

struct Definition {
  CatalogInfo info;
  Builder build;
};

std::vector<std::string> numbered(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

// Brackets given 1-based: {i, j, k, c} means [x_i, x_j] += c x_k.
struct Br {
  std::size_t i, j, k;
  Rational c;
};

LieAlgebra lie_from(std::size_t dim, const std::vector<Br>& brackets, std::vector<std::string> labels = {}) {
  TableBuilder b(dim);
  for (const auto& e : brackets)
    if (!e.c.is_zero()) b.add_bracket(e.i - 1, e.j - 1, e.k - 1, e.c);
  return LieAlgebra(b.build(), std::move(labels));
}

Matrix matrix_from(std::size_t rows, std::size_t cols, const std::vector<Rational>& row_major) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row_major[r * cols + c];
  return m;
}

std::size_t positive_integer(const Params& p, const std::string& key) {
  const Rational& v = p.at(key);
  if (!v.is_integer() || v.sign() <= 0 || v > Rational(64))
    throw MalformedInput("parameter " + key + " must be an integer in 1..64, got " + v.str());
  return v.numerator().get_ui();
}

LieAlgebra sl2() {
  return lie_from(3, {{1, 2, 3, 1}, {1, 3, 1, -2}, {2, 3, 2, 2}}, {"x", "y", "h"});
}

Representation sl2_natural() {
  std::vector<Matrix> maps = {matrix_from(2, 2, {0, 1, 0, 0}), matrix_from(2, 2, {0, 0, 1, 0}),
                              matrix_from(2, 2, {1, 0, 0, -1})};
  return Representation(sl2(), 2, std::move(maps));
}

LieAlgebra filiform6(const Rational& a1, const Rational& a2, const Rational& a3) {
  std::vector<Br> br;
  for (std::size_t i = 2; i <= 5; ++i) br.push_back({1, i, i + 1, 1});
  br.push_back({2, 3, 5, a1});
  br.push_back({2, 3, 6, a2});
  br.push_back({2, 4, 6, a1});
  br.push_back({2, 5, 6, -a3});
  br.push_back({3, 4, 6, a3});
  return lie_from(6, br);
}

AlgebraProduct filiform6_product(const Rational& a1, const Rational& a2, const Rational& a3) {
  TableBuilder b(6);
  auto put = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) { b.add(i - 1, j - 1, k - 1, c); };
  for (std::size_t i = 2; i <= 5; ++i) put(1, i, i + 1, 1);
  put(2, 2, 4, -a1 / 3);
  put(2, 3, 5, a1 / 3);
  put(2, 3, 6, a2 / 2);
  put(2, 4, 6, Rational(2) * a1 / 3);
  put(2, 5, 6, -a3 / 2);
  put(3, 2, 5, Rational(-2) * a1 / 3);
  put(3, 2, 6, -a2 / 2);
  put(3, 3, 6, -a1 / 3);
  put(3, 4, 6, a3 / 2);
  put(4, 2, 6, -a1 / 3);
  put(4, 3, 6, -a3 / 2);
  put(5, 2, 6, a3 / 2);
  return AlgebraProduct(b.build());
}

LieAlgebra filiform7(const Rational& a1, const Rational& a2, const Rational& a3, const Rational& a4) {
  std::vector<Br> br;
  for (std::size_t i = 2; i <= 6; ++i) br.push_back({1, i, i + 1, 1});
  br.push_back({2, 3, 5, a1});
  br.push_back({2, 3, 6, a2});
  br.push_back({2, 3, 7, a3});
  br.push_back({2, 4, 6, a1});
  br.push_back({2, 4, 7, a2});
  br.push_back({2, 5, 7, a1 - a4});
  br.push_back({3, 4, 7, a4});
  return lie_from(7, br);
}

AlgebraProduct ex311_comm_assoc() {
  const Rational h(1, 2);
  TableBuilder b(5);
  auto sym = [&](std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
    b.add(i - 1, j - 1, k - 1, c);
    if (i != j) b.add(j - 1, i - 1, k - 1, c);
  };
  sym(1, 1, 1, 1);
  sym(1, 1, 2, 1);
  sym(1, 2, 2, 1);
  sym(1, 3, 3, 1);
  sym(1, 4, 4, 1);
  sym(1, 4, 5, h);
  sym(1, 5, 5, 1);
  sym(2, 4, 5, h);
  sym(3, 3, 5, -h);
  return AlgebraProduct(b.build());
}

Matrix ex311_derivation() {
  return matrix_from(5, 5, {0, 0, 0, 0, 0,  //
                            0, 0, 0, 0, 0,  //
                            1, 1, 0, 0, 0,  //
                            0, 0, 1, 0, 0,  //
                            0, 0, -1, 0, 0});
}

LiftData ex35_liftdata() {
  const LieAlgebra b = lie_from(2, {}, {"X", "Y"});
  LiftData d;
  d.phi = Representation(b, 3, {matrix_from(3, 3, {0, 0, 0, 1, 0, 0, 0, 0, 0}),
                                matrix_from(3, 3, {0, 0, 0, 0, 0, 0, 1, 0, 0})});
  d.a_product = AlgebraProduct(StructureTable(3));
  d.b_product = AlgebraProduct(StructureTable(2));
  d.Omega = Cocycle(2, 3);
  d.Omega.set(0, 1, unit_vector(3, 0));
  d.omega = BilinearMap(2, 3);
  d.omega.set(1, 0, Vector{-1, 0, 0});
  d.phi1 = {matrix_from(3, 3, {0, 0, 0, Rational(-1, 2), 0, 0, 0, 0, 0}), Matrix(3, 3)};
  d.phi2 = {matrix_from(3, 3, {0, 0, 0, Rational(1, 2), 0, 0, 0, 0, 0}),
            matrix_from(3, 3, {0, 0, 0, 0, 0, 0, 1, 0, 0})};
  return d;
}

const std::vector<Definition>& definitions() {
  static const std::vector<Definition> defs = [] {
    std::vector<Definition> d;
    auto add = [&](std::string id, std::string kind, std::vector<std::string> params, std::string description,
                   Builder build) {
      d.push_back({{std::move(id), std::move(kind), std::move(params), std::move(description)}, std::move(build)});
    };
    add("sl2", "lie", {}, "sl(2) with [x,y]=h, [x,h]=-2x, [y,h]=2y", [](const Params&) { return sl2(); });
    add("sl2_adjoint", "representation", {}, "adjoint module of sl(2)",
        [](const Params&) { return adjoint_representation(sl2()); });
    add("sl2_natural", "representation", {}, "natural 2-dimensional sl(2)-module, basis (v0, v1)",
        [](const Params&) { return sl2_natural(); });
    add("r3_minus1", "lie", {}, "solvable r(3,-1): [x,h]=-2x, [y,h]=2y",
        [](const Params&) { return lie_from(3, {{1, 3, 1, -2}, {2, 3, 2, 2}}, {"x", "y", "h"}); });
    add("r2", "lie", {}, "non-abelian 2-dimensional: [x1,x2]=x2",
        [](const Params&) { return lie_from(2, {{1, 2, 2, 1}}); });
    add("abelian", "lie", {"n"}, "abelian Lie algebra of dimension n",
        [](const Params& p) { return lie_from(positive_integer(p, "n"), {}); });
    add("heisenberg", "lie", {"n"}, "Heisenberg algebra of dimension 2n+1: [x_i,y_i]=z", [](const Params& p) {
      const std::size_t n = positive_integer(p, "n");
      std::vector<Br> br;
      std::vector<std::string> labels = numbered("x", n);
      for (const auto& y : numbered("y", n)) labels.push_back(y);
      labels.push_back("z");
      for (std::size_t i = 1; i <= n; ++i) br.push_back({i, n + i, 2 * n + 1, 1});
      return lie_from(2 * n + 1, br, labels);
    });
    add("filiform4", "lie", {}, "4-dimensional filiform: [x1,x2]=x3, [x1,x3]=x4",
        [](const Params&) { return lie_from(4, {{1, 2, 3, 1}, {1, 3, 4, 1}}); });
    add("free_nilpotent_2gen_class3", "lie", {}, "free 3-step nilpotent on 2 generators, dimension 5",
        [](const Params&) { return lie_from(5, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 5, 1}}); });
    add("free_nilpotent_2gen_class4", "lie", {}, "free 4-step nilpotent on 2 generators, dimension 8",
        [](const Params&) {
          return lie_from(8, {{1, 2, 3, 1}, {1, 3, 4, 1}, {2, 3, 5, 1}, {1, 4, 6, 1}, {2, 4, 7, 1}, {1, 5, 7, 1},
                              {2, 5, 8, 1}});
        });
    add("filiform6", "lie", {"alpha1", "alpha2", "alpha3"}, "6-dimensional filiform family",
        [](const Params& p) { return filiform6(p.at("alpha1"), p.at("alpha2"), p.at("alpha3")); });
    add("filiform6_product", "product", {"alpha1", "alpha2", "alpha3"},
        "explicit Novikov product on the 6-dimensional filiform family",
        [](const Params& p) { return filiform6_product(p.at("alpha1"), p.at("alpha2"), p.at("alpha3")); });
    add("filiform7", "lie", {"alpha1", "alpha2", "alpha3", "alpha4"}, "7-dimensional filiform family",
        [](const Params& p) { return filiform7(p.at("alpha1"), p.at("alpha2"), p.at("alpha3"), p.at("alpha4")); });
    add("g_I", "lie", {"alpha"}, "filiform7 at (1, 0, 0, alpha)",
        [](const Params& p) { return filiform7(1, 0, 0, p.at("alpha")); });
    add("ex311_comm_assoc", "product", {}, "commutative associative product on 5 generators",
        [](const Params&) { return ex311_comm_assoc(); });
    add("ex311_derivation", "operator", {}, "derivation of ex311_comm_assoc (column j is D(x_j))",
        [](const Params&) { return ex311_derivation(); });
    add("ex35_liftdata", "liftdata", {}, "lift data on a = <A,B,C>, b = <X,Y> with trivial products",
        [](const Params&) { return ex35_liftdata(); });
    add("rmatrix_sl2_diag001", "rmatrix", {}, "T = diag(0,0,1) on the adjoint module of sl(2)", [](const Params&) {
      return RMatrix(adjoint_representation(sl2()), matrix_from(3, 3, {0, 0, 0, 0, 0, 0, 0, 0, 1}));
    });
    add("rmatrix_ex36", "rmatrix", {"c1", "c2"}, "T(v0) = c2 y + c1 h, T(v1) = c1 y on the natural module",
        [](const Params& p) {
          const Rational c1 = p.at("c1"), c2 = p.at("c2");
          return RMatrix(sl2_natural(), matrix_from(3, 2, {0, 0, c2, c1, c1, 0}));
        });
    add("rmatrix_natural_projection", "rmatrix", {}, "T(u1) = 0, T(u2) = x on the natural module",
        [](const Params&) { return projection_rmatrix(sl2_natural(), 1, 0); });
    return d;
  }();
  return defs;
}

void assert_structure(const Payload& payload, const std::string& id) {
  bool ok = true;
  if (auto* l = std::get_if<LieAlgebra>(&payload)) ok = check_jacobi(*l).passed;
  else if (auto* r = std::get_if<Representation>(&payload)) ok = check_representation(*r).passed;
  else if (auto* t = std::get_if<RMatrix>(&payload)) ok = check_representation(t->rep()).passed;
  else if (auto* d = std::get_if<LiftData>(&payload)) {
    d->validate();
    ok = check_representation(d->phi).passed;
  }
  if (!ok) throw std::logic_error("catalog entry " + id + " fails its structural check");
}

}  // namespace

const std::vector<CatalogInfo>& catalog_list() {
  static const std::vector<CatalogInfo> infos = [] {
    std::vector<CatalogInfo> out;
    for (const auto& d : definitions()) out.push_back(d.info);
    return out;
  }();
  return infos;
}

CatalogEntry catalog_get(const std::string& id, const Params& params) {
  for (const auto& d : definitions()) {
    if (d.info.id != id) continue;
    const std::set<std::string> expected(d.info.params.begin(), d.info.params.end());
    for (const auto& [key, value] : params)
      if (!expected.count(key)) throw MalformedInput("catalog entry '" + id + "' takes no parameter '" + key + "'");
    for (const auto& key : d.info.params)
      if (!params.count(key)) throw MissingParam("catalog entry '" + id + "' needs parameter '" + key + "'");
    CatalogEntry e{id, params, d.build(params), d.info.description};
    assert_structure(e.payload, id);
    return e;
  }
  throw UnknownId("no catalog entry '" + id + "'");
}

std::pair<std::string, Params> parse_catalog_ref(const std::string& ref) {
  const auto colon = ref.find(':');
  std::pair<std::string, Params> out;
  out.first = ref.substr(0, colon);
  if (colon == std::string::npos) return out;
  std::string rest = ref.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size() && !rest.empty()) {
    const auto comma = rest.find(',', pos);
    const std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw MalformedInput("catalog parameter '" + item + "' is not key=value");
    try {
      out.second[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
    } catch (const std::invalid_argument&) {
      throw MalformedInput("catalog parameter '" + item + "' has a malformed rational");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace novikov
