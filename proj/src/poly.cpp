#include "novikov/poly.hpp"

#include <algorithm>
#include <sstream>

#include "novikov/errors.hpp"

namespace novikov {

Monomial Monomial::variable(Var v, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) {
    m.factors_.push_back({v, exponent});
    m.degree_ = exponent;
  }
  return m;
}

std::uint32_t Monomial::exponent(Var v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const auto& f, Var key) { return f.first < key; });
  return it != factors_.end() && it->first == v ? it->second : 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin(), j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      r.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      r.factors_.push_back(*j++);
    } else {
      r.factors_.push_back({i->first, i->second + j->second});
      ++i;
      ++j;
    }
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::vector<std::uint32_t> Monomial::dense(std::size_t n) const {
  std::vector<std::uint32_t> e(n, 0);
  for (const auto& [v, p] : factors_) e.at(v) = p;
  return e;
}

Monomial Monomial::from_dense(const std::vector<std::uint32_t>& exps) {
  Monomial m;
  for (std::size_t v = 0; v < exps.size(); ++v)
    if (exps[v] > 0) {
      m.factors_.push_back({static_cast<Var>(v), exps[v]});
      m.degree_ += exps[v];
    }
  return m;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Equal degree: find the last variable where the exponents differ; the
  // monomial with the larger exponent there is the smaller one.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto i = fa.rbegin(), j = fb.rbegin();
  while (i != fa.rend() && j != fb.rend()) {
    if (i->first != j->first) return i->first > j->first;
    if (i->second != j->second) return i->second > j->second;
    ++i;
    ++j;
  }
  // One side ran out: equal degrees force both to run out together.
  return false;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  p.add_term(Monomial(), c);
  return p;
}

MultiPoly MultiPoly::variable(Var v) {
  MultiPoly p;
  p.add_term(Monomial::variable(v), 1);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::uint32_t MultiPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.degree(); }

Rational MultiPoly::constant_term() const { return coefficient(Monomial()); }

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational() : it->second;
}

std::set<Var> MultiPoly::variables() const {
  std::set<Var> vars;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m.factors()) vars.insert(v);
  return vars;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MultiPoly& MultiPoly::add_scaled(const Rational& c, const Monomial& m, const MultiPoly& p) {
  if (c.is_zero()) return *this;
  for (const auto& [pm, pc] : p.terms_) add_term(m * pm, c * pc);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [m, c] : a.terms_) r.add_scaled(c, m, b);
  return r;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero()) return *this;
  MultiPoly r = *this;
  r *= leading().second.inverse();
  return r;
}

MultiPoly MultiPoly::substitute(const std::function<const MultiPoly*(Var)>& lookup) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    MultiPoly term = MultiPoly::constant(c);
    Monomial kept;
    for (const auto& [v, e] : m.factors()) {
      const MultiPoly* value = lookup(v);
      if (!value) {
        kept = kept * Monomial::variable(v, e);
        continue;
      }
      for (std::uint32_t k = 0; k < e; ++k) term = term * *value;
    }
    r.add_scaled(1, kept, term);
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::unordered_map<Var, MultiPoly>& values) const {
  return substitute([&](Var v) -> const MultiPoly* {
    auto it = values.find(v);
    return it == values.end() ? nullptr : &it->second;
  });
}

Rational MultiPoly::evaluate(const std::vector<Rational>& values) const {
  Rational total;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      if (v >= values.size()) throw DimensionMismatch("evaluation point too short");
      for (std::uint32_t k = 0; k < e; ++k) t *= values[v];
    }
    total += t;
  }
  return total;
}

std::string MultiPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational a = c.abs();
    const bool show_coef = m.is_one() || a != Rational(1);
    if (show_coef) os << (a.is_integer() ? a.numerator().get_str() : a.str());
    bool first_factor = !show_coef;
    for (const auto& [v, e] : m.factors()) {
      if (!first_factor) os << "*";
      first_factor = false;
      if (v < names.size()) os << names[v];
      else os << "v" << v;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

void PolySystem::add(MultiPoly p, std::string tag) {
  if (p.is_zero()) return;
  polys.push_back(std::move(p));
  provenance.push_back(std::move(tag));
}

std::size_t PolySystem::count_affine() const {
  return static_cast<std::size_t>(
      std::count_if(polys.begin(), polys.end(), [](const MultiPoly& p) { return p.is_affine(); }));
}

bool PolySystem::satisfied_by(const std::vector<Rational>& values) const {
  return std::all_of(polys.begin(), polys.end(), [&](const MultiPoly& p) { return p.evaluate(values).is_zero(); });
}

std::optional<Var> PolySystem::find_variable(const std::string& name) const {
  auto it = std::find(variables.begin(), variables.end(), name);
  if (it == variables.end()) return std::nullopt;
  return static_cast<Var>(it - variables.begin());
}

}  // namespace novikov
