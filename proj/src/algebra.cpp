#include "novikov/algebra.hpp"

#include <algorithm>

#include "novikov/errors.hpp"

namespace novikov {

StructureTable::StructureTable(std::size_t dim) : dim_(dim), dense_(dim * dim * dim) {}

StructureTable::StructureTable(std::size_t dim, const std::map<Index3, Rational>& entries)
    : StructureTable(dim) {
  for (const auto& [idx, c] : entries) {
    if (idx[0] >= dim || idx[1] >= dim || idx[2] >= dim)
      throw MalformedInput("structure constant index out of range");
    dense_[(idx[0] * dim_ + idx[1]) * dim_ + idx[2]] += c;
  }
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!at(i, j, k).is_zero()) sparse_.emplace(Index3{i, j, k}, at(i, j, k));
}

Vector StructureTable::basis_product(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = at(i, j, k);
  return v;
}

Vector StructureTable::multiply(const Vector& u, const Vector& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("product operand size");
  Vector r(dim_);
  for (const auto& [idx, c] : sparse_) {
    const auto& a = u[idx[0]];
    const auto& b = v[idx[1]];
    if (a.is_zero() || b.is_zero()) continue;
    r[idx[2]] += a * b * c;
  }
  return r;
}

Matrix StructureTable::left_mult(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m(k, j) = at(i, j, k);
  return m;
}

Matrix StructureTable::right_mult(std::size_t j) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) m(k, i) = at(i, j, k);
  return m;
}

Matrix StructureTable::left_mult(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    if (!x[i].is_zero()) m += x[i] * left_mult(i);
  return m;
}

Matrix StructureTable::right_mult(const Vector& x) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    if (!x[j].is_zero()) m += x[j] * right_mult(j);
  return m;
}

StructureTable StructureTable::scaled(const Rational& s) const {
  std::map<Index3, Rational> e;
  for (const auto& [idx, c] : sparse_) e.emplace(idx, c * s);
  return StructureTable(dim_, e);
}

TableBuilder& TableBuilder::add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw MalformedInput("structure constant index out of range");
  if (!c.is_zero()) entries_[Index3{i, j, k}] += c;
  return *this;
}

TableBuilder& TableBuilder::add_bracket(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  add(i, j, k, c);
  return add(j, i, k, -c);
}

TableBuilder& TableBuilder::add_product(std::size_t i, std::size_t j, const Vector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) add(i, j, k, v[k]);
  return *this;
}

namespace {
void check_labels(const std::vector<std::string>& labels, std::size_t dim) {
  if (!labels.empty() && labels.size() != dim) throw MalformedInput("label count does not match dim");
}
}  // namespace

LieAlgebra::LieAlgebra(StructureTable table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  check_labels(labels_, table_.dim());
}

AlgebraProduct::AlgebraProduct(StructureTable table, std::vector<std::string> labels)
    : table_(std::move(table)), labels_(std::move(labels)) {
  check_labels(labels_, table_.dim());
}

void CheckReport::add(std::string identity, std::vector<std::size_t> indices, Vector residual) {
  passed = false;
  violations.push_back({std::move(identity), std::move(indices), std::move(residual)});
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& v : other.violations) add(v.identity, v.indices, v.residual);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

bool CheckReport::failed(const std::string& identity) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.identity == identity; });
}

}  // namespace novikov
