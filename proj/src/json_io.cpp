#include "novikov/json_io.hpp"

#include <cstdio>

#include "novikov/errors.hpp"

namespace novikov {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw SchemaError(where + ": " + what); }

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t count(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::size_t index1(const Json& j, std::size_t bound, const std::string& where) {
  const std::size_t v = count(j, where);
  if (v < 1 || v > bound) fail(where, "index " + std::to_string(v) + " outside 1.." + std::to_string(bound));
  return v - 1;
}

const Json& array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

void expect_kind(const Json& j, const char* kind, const std::string& where) {
  const Json& k = field(j, "kind", where);
  if (!k.is_string() || k.get<std::string>() != kind)
    fail(where + ".kind", std::string("expected \"") + kind + "\"");
}

Json vector_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

Vector vector_from(const Json& j, std::size_t size, const std::string& where) {
  array(j, where);
  if (j.size() != size) fail(where, "expected " + std::to_string(size) + " entries");
  Vector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

Json table_json(const char* kind, const StructureTable& t, const std::vector<std::string>& labels) {
  Json j;
  j["kind"] = kind;
  j["dim"] = t.dim();
  j["labels"] = labels;
  Json entries = Json::array();
  for (const auto& [idx, c] : t.entries())
    entries.push_back({{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"k", idx[2] + 1}, {"c", c.str()}});
  j["entries"] = std::move(entries);
  return j;
}

std::pair<StructureTable, std::vector<std::string>> table_from(const Json& j, const char* kind, const std::string& where) {
  expect_kind(j, kind, where);
  const std::size_t dim = count(field(j, "dim", where), where + ".dim");
  std::vector<std::string> labels;
  if (auto it = j.find("labels"); it != j.end()) {
    array(*it, where + ".labels");
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail(where + ".labels[" + std::to_string(i) + "]", "expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
    if (!labels.empty() && labels.size() != dim) fail(where + ".labels", "expected " + std::to_string(dim) + " labels");
  }
  const Json& entries = array(field(j, "entries", where), where + ".entries");
  std::map<Index3, Rational> table;
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const std::string at = where + ".entries[" + std::to_string(n) + "]";
    const Json& e = entries[n];
    const Index3 idx{index1(field(e, "i", at), dim, at + ".i"), index1(field(e, "j", at), dim, at + ".j"),
                     index1(field(e, "k", at), dim, at + ".k")};
    table[idx] += rational_from_json(field(e, "c", at), at + ".c");
  }
  return {StructureTable(dim, table), std::move(labels)};
}

void representation_fields(Json& j, const Representation& rep) {
  j["algebra"] = to_json(rep.algebra());
  j["module_dim"] = rep.module_dim();
  Json maps = Json::array();
  for (const auto& m : rep.maps()) maps.push_back(to_json(m));
  j["maps"] = std::move(maps);
}

Representation representation_fields_from(const Json& j, const std::string& where) {
  LieAlgebra algebra = lie_from_json(field(j, "algebra", where), where + ".algebra");
  const std::size_t m = count(field(j, "module_dim", where), where + ".module_dim");
  const Json& maps = array(field(j, "maps", where), where + ".maps");
  if (maps.size() != algebra.dim()) fail(where + ".maps", "expected one matrix per algebra basis vector");
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const std::string at = where + ".maps[" + std::to_string(i) + "]";
    Matrix mat = matrix_from_json(maps[i], at);
    if (mat.rows() != m || mat.cols() != m) fail(at, "expected a module_dim x module_dim matrix");
    mats.push_back(std::move(mat));
  }
  return Representation(std::move(algebra), m, std::move(mats));
}

Json pair_values_json(std::size_t b_dim, std::size_t a_dim, const char* kind,
                      const std::vector<std::tuple<std::size_t, std::size_t, Vector>>& values) {
  Json j;
  j["kind"] = kind;
  j["b_dim"] = b_dim;
  j["a_dim"] = a_dim;
  Json vals = Json::array();
  for (const auto& [i, k, v] : values) vals.push_back({{"i", i + 1}, {"j", k + 1}, {"value", vector_json(v)}});
  j["values"] = std::move(vals);
  return j;
}

Json matrices_json(const std::vector<Matrix>& ms) {
  Json a = Json::array();
  for (const auto& m : ms) a.push_back(to_json(m));
  return a;
}

std::vector<Matrix> matrices_from(const Json& j, std::size_t n, std::size_t size, const std::string& where) {
  array(j, where);
  if (j.size() != n) fail(where, "expected " + std::to_string(n) + " matrices");
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    Matrix m = matrix_from_json(j[i], at);
    if (m.rows() != size || m.cols() != size) fail(at, "expected a square matrix of size " + std::to_string(size));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Matrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_json(m.row(r)));
  j["entries"] = std::move(rows);
  return j;
}

Json to_json(const LieAlgebra& lie) { return table_json("lie", lie.table(), lie.labels()); }
Json to_json(const AlgebraProduct& product) { return table_json("product", product.table(), product.labels()); }

Json to_json(const Representation& rep) {
  Json j;
  j["kind"] = "representation";
  representation_fields(j, rep);
  return j;
}

Json to_json(const RMatrix& t) {
  Json j;
  j["kind"] = "rmatrix";
  representation_fields(j, t.rep());
  j["T"] = to_json(t.matrix());
  return j;
}

Json to_json(const Cocycle& omega) {
  std::vector<std::tuple<std::size_t, std::size_t, Vector>> values;
  for (const auto& [ij, v] : omega.values()) values.emplace_back(ij.first, ij.second, v);
  return pair_values_json(omega.b_dim(), omega.a_dim(), "cocycle", values);
}

namespace {
Json bilinear_json(const BilinearMap& w) {
  std::vector<std::tuple<std::size_t, std::size_t, Vector>> values;
  for (std::size_t i = 0; i < w.b_dim(); ++i)
    for (std::size_t k = 0; k < w.b_dim(); ++k)
      if (!is_zero(w.value(i, k))) values.emplace_back(i, k, w.value(i, k));
  return pair_values_json(w.b_dim(), w.a_dim(), "bilinear", values);
}
}  // namespace

Json to_json(const LiftData& data) {
  Json j;
  j["kind"] = "liftdata";
  j["a_product"] = to_json(data.a_product);
  j["b_product"] = to_json(data.b_product);
  j["phi"] = to_json(data.phi);
  j["Omega"] = to_json(data.Omega);
  j["omega"] = bilinear_json(data.omega);
  j["phi1"] = matrices_json(data.phi1);
  j["phi2"] = matrices_json(data.phi2);
  return j;
}

Json to_json(const Payload& payload) {
  return std::visit(
      [](const auto& p) -> Json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, Matrix>) {
          Json j;
          j["kind"] = "operator";
          const Json body = to_json(p);
          for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
          return j;
        } else {
          return to_json(p);
        }
      },
      payload);
}

Json to_json(const PolySystem& system) {
  Json j;
  j["variables"] = system.variables;
  Json polys = Json::array();
  for (std::size_t i = 0; i < system.size(); ++i) {
    Json terms = Json::array();
    const auto& t = system.polys[i].terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it)
      terms.push_back({{"exp", it->first.dense(system.variables.size())}, {"c", it->second.str()}});
    polys.push_back({{"provenance", i < system.provenance.size() ? system.provenance[i] : ""}, {"terms", terms}});
  }
  j["polys"] = std::move(polys);
  return j;
}

Json to_json(const LinearCertificate& cert) {
  Json j;
  j["kind"] = "LinearInfeasible";
  j["rounds"] = cert.rounds;
  Json combo = Json::array();
  for (const auto& [idx, c] : cert.combination) combo.push_back({{"equation", idx}, {"c", c.str()}});
  j["combination"] = std::move(combo);
  j["constant"] = cert.constant.str();
  return j;
}

Json to_json(const Certificate& cert) {
  if (cert.kind == Certificate::Kind::linear_infeasible && cert.linear) return to_json(*cert.linear);
  Json j;
  j["kind"] = to_string(cert.kind);
  if (cert.residual) j["residual"] = to_json(*cert.residual);
  return j;
}

Json to_json(const CheckReport& report) {
  Json j;
  j["passed"] = report.passed;
  Json v = Json::array();
  for (const auto& x : report.violations) {
    std::vector<std::size_t> idx;
    for (auto i : x.indices) idx.push_back(i + 1);
    v.push_back({{"identity", x.identity}, {"indices", idx}, {"residual", vector_json(x.residual)}});
  }
  j["violations"] = std::move(v);
  j["notes"] = report.notes;
  return j;
}

Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception&) {
    fail(where, "malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
  const std::size_t rows = count(field(j, "rows", where), where + ".rows");
  const std::size_t cols = count(field(j, "cols", where), where + ".cols");
  const Json& entries = array(field(j, "entries", where), where + ".entries");
  if (entries.size() != rows) fail(where + ".entries", "expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const Vector row = vector_from(entries[r], cols, where + ".entries[" + std::to_string(r) + "]");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

LieAlgebra lie_from_json(const Json& j, const std::string& where) {
  auto [table, labels] = table_from(j, "lie", where);
  return LieAlgebra(std::move(table), std::move(labels));
}

AlgebraProduct product_from_json(const Json& j, const std::string& where) {
  auto [table, labels] = table_from(j, "product", where);
  return AlgebraProduct(std::move(table), std::move(labels));
}

Representation representation_from_json(const Json& j, const std::string& where) {
  expect_kind(j, "representation", where);
  return representation_fields_from(j, where);
}

RMatrix rmatrix_from_json(const Json& j, const std::string& where) {
  expect_kind(j, "rmatrix", where);
  Representation rep = representation_fields_from(j, where);
  Matrix t = matrix_from_json(field(j, "T", where), where + ".T");
  if (t.rows() != rep.algebra().dim() || t.cols() != rep.module_dim())
    fail(where + ".T", "expected an algebra_dim x module_dim matrix");
  return RMatrix(std::move(rep), std::move(t));
}

namespace {
template <class Setter>
void pair_values_from(const Json& j, const char* kind, std::size_t& b_dim, std::size_t& a_dim, const std::string& where,
                      bool allow_diagonal, Setter set) {
  expect_kind(j, kind, where);
  b_dim = count(field(j, "b_dim", where), where + ".b_dim");
  a_dim = count(field(j, "a_dim", where), where + ".a_dim");
  const Json& values = array(field(j, "values", where), where + ".values");
  for (std::size_t n = 0; n < values.size(); ++n) {
    const std::string at = where + ".values[" + std::to_string(n) + "]";
    const std::size_t i = index1(field(values[n], "i", at), b_dim, at + ".i");
    const std::size_t k = index1(field(values[n], "j", at), b_dim, at + ".j");
    if (i == k && !allow_diagonal) fail(at, "a cocycle has no diagonal values");
    set(i, k, vector_from(field(values[n], "value", at), a_dim, at + ".value"));
  }
}
}  // namespace

Cocycle cocycle_from_json(const Json& j, const std::string& where) {
  std::size_t b = 0, a = 0;
  std::vector<std::tuple<std::size_t, std::size_t, Vector>> values;
  pair_values_from(j, "cocycle", b, a, where, false,
                   [&](std::size_t i, std::size_t k, Vector v) { values.emplace_back(i, k, std::move(v)); });
  Cocycle c(b, a);
  for (auto& [i, k, v] : values) c.set(i, k, std::move(v));
  return c;
}

LiftData liftdata_from_json(const Json& j, const std::string& where) {
  expect_kind(j, "liftdata", where);
  LiftData d;
  d.a_product = product_from_json(field(j, "a_product", where), where + ".a_product");
  d.b_product = product_from_json(field(j, "b_product", where), where + ".b_product");
  d.phi = representation_from_json(field(j, "phi", where), where + ".phi");
  d.Omega = cocycle_from_json(field(j, "Omega", where), where + ".Omega");
  std::size_t b = 0, a = 0;
  std::vector<std::tuple<std::size_t, std::size_t, Vector>> values;
  pair_values_from(field(j, "omega", where), "bilinear", b, a, where + ".omega", true,
                   [&](std::size_t i, std::size_t k, Vector v) { values.emplace_back(i, k, std::move(v)); });
  d.omega = BilinearMap(b, a);
  for (auto& [i, k, v] : values) d.omega.set(i, k, std::move(v));
  d.phi1 = matrices_from(field(j, "phi1", where), d.b_dim(), d.a_dim(), where + ".phi1");
  d.phi2 = matrices_from(field(j, "phi2", where), d.b_dim(), d.a_dim(), where + ".phi2");
  try {
    d.validate();
  } catch (const DimensionMismatch& e) {
    fail(where, e.what());
  }
  return d;
}

PolySystem system_from_json(const Json& j, const std::string& where) {
  PolySystem s;
  const Json& vars = array(field(j, "variables", where), where + ".variables");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) fail(where + ".variables[" + std::to_string(i) + "]", "expected a string");
    s.variables.push_back(vars[i].get<std::string>());
  }
  const Json& polys = array(field(j, "polys", where), where + ".polys");
  for (std::size_t n = 0; n < polys.size(); ++n) {
    const std::string at = where + ".polys[" + std::to_string(n) + "]";
    const Json& terms = array(field(polys[n], "terms", at), at + ".terms");
    MultiPoly p;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tat = at + ".terms[" + std::to_string(t) + "]";
      const Json& exp = array(field(terms[t], "exp", tat), tat + ".exp");
      if (exp.size() != s.variables.size()) fail(tat + ".exp", "length differs from the variable count");
      std::vector<std::uint32_t> e;
      for (std::size_t k = 0; k < exp.size(); ++k) e.push_back(static_cast<std::uint32_t>(count(exp[k], tat + ".exp")));
      p.add_term(Monomial::from_dense(e), rational_from_json(field(terms[t], "c", tat), tat + ".c"));
    }
    std::string prov;
    if (auto it = polys[n].find("provenance"); it != polys[n].end() && it->is_string()) prov = it->get<std::string>();
    s.polys.push_back(std::move(p));
    s.provenance.push_back(std::move(prov));
  }
  return s;
}

LinearCertificate linear_certificate_from_json(const Json& j, const std::string& where) {
  expect_kind(j, "LinearInfeasible", where);
  LinearCertificate c;
  const Json& rounds = array(field(j, "rounds", where), where + ".rounds");
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    std::vector<std::size_t> round;
    for (const auto& idx : array(rounds[r], where + ".rounds[" + std::to_string(r) + "]"))
      round.push_back(count(idx, where + ".rounds"));
    c.rounds.push_back(std::move(round));
  }
  const Json& combo = array(field(j, "combination", where), where + ".combination");
  for (std::size_t n = 0; n < combo.size(); ++n) {
    const std::string at = where + ".combination[" + std::to_string(n) + "]";
    c.combination.push_back(
        {count(field(combo[n], "equation", at), at + ".equation"), rational_from_json(field(combo[n], "c", at), at + ".c")});
  }
  c.constant = rational_from_json(field(j, "constant", where), where + ".constant");
  return c;
}

Payload payload_from_json(const Json& j, const std::string& where) {
  const Json& k = field(j, "kind", where);
  if (!k.is_string()) fail(where + ".kind", "expected a string");
  const std::string kind = k.get<std::string>();
  if (kind == "lie") return lie_from_json(j, where);
  if (kind == "product") return product_from_json(j, where);
  if (kind == "representation") return representation_from_json(j, where);
  if (kind == "rmatrix") return rmatrix_from_json(j, where);
  if (kind == "liftdata") return liftdata_from_json(j, where);
  if (kind == "operator") return matrix_from_json(j, where);
  fail(where + ".kind", "unknown kind \"" + kind + "\"");
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace novikov
