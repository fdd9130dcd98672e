#include "novikov/reduce.hpp"

#include <map>
#include <set>
#include <unordered_map>

#include "novikov/linalg.hpp"

namespace novikov {

namespace {

// pivot + sum coef[v] * v + constant = 0, equal to sum combo[i] * (input row i).
struct Row {
  std::map<Var, Rational> coef;
  Rational constant;
  std::map<std::size_t, Rational> combo;
};

void axpy_map(std::map<Var, Rational>& y, const Rational& a, const std::map<Var, Rational>& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

void axpy_combo(std::map<std::size_t, Rational>& y, const Rational& a, const std::map<std::size_t, Rational>& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

class Eliminator {
public:
  /// Returns false when the row reduces to a nonzero constant; the
  /// contradiction is left in failure().
  bool add(const MultiPoly& p, std::size_t source) {
    Row r;
    for (const auto& [m, c] : p.terms()) {
      if (m.is_one()) r.constant = c;
      else r.coef.emplace(m.factors().front().first, c);
    }
    r.combo.emplace(source, Rational(1));
    std::vector<Var> hits;
    for (const auto& [v, c] : r.coef)
      if (rows_.count(v)) hits.push_back(v);
    for (Var v : hits) {
      const Rational c = r.coef.at(v);
      const Row& pr = rows_.at(v);
      r.coef.erase(v);
      axpy_map(r.coef, -c, pr.coef);
      r.constant -= c * pr.constant;
      axpy_combo(r.combo, -c, pr.combo);
    }
    if (r.coef.empty()) {
      if (r.constant.is_zero()) return true;
      failure_ = std::move(r);
      return false;
    }
    const Var pivot = r.coef.begin()->first;
    const Rational inv = r.coef.begin()->second.inverse();
    r.coef.erase(r.coef.begin());
    for (auto& [v, c] : r.coef) c *= inv;
    r.constant *= inv;
    for (auto& [k, c] : r.combo) c *= inv;

    // Keep every stored row free of pivot variables.
    if (auto it = occurs_.find(pivot); it != occurs_.end()) {
      const std::set<Var> owners = std::move(it->second);
      occurs_.erase(it);
      for (Var owner : owners) {
        Row& other = rows_.at(owner);
        auto hit = other.coef.find(pivot);
        if (hit == other.coef.end()) continue;  // cancelled earlier
        const Rational c = hit->second;
        other.coef.erase(hit);
        for (const auto& [v, rc] : r.coef)
          if (!other.coef.count(v)) occurs_[v].insert(owner);
        axpy_map(other.coef, -c, r.coef);
        other.constant -= c * r.constant;
        axpy_combo(other.combo, -c, r.combo);
      }
    }
    for (const auto& [v, c] : r.coef) occurs_[v].insert(pivot);
    rows_.emplace(pivot, std::move(r));
    ++rank_changes_;
    return true;
  }

  std::size_t rank_changes() const { return rank_changes_; }
  const Row& failure() const { return failure_; }

  std::unordered_map<Var, MultiPoly> solution() const {
    std::unordered_map<Var, MultiPoly> s;
    for (const auto& [pivot, r] : rows_) s.emplace(pivot, value_of(r));
    return s;
  }

  std::vector<Substitution> substitutions() const {
    std::vector<Substitution> out;
    for (const auto& [pivot, r] : rows_) out.push_back({pivot, value_of(r)});
    return out;
  }

private:
  static MultiPoly value_of(const Row& r) {
    MultiPoly v = MultiPoly::constant(-r.constant);
    for (const auto& [var, c] : r.coef) v.add_term(Monomial::variable(var), -c);
    return v;
  }

  std::map<Var, Row> rows_;
  std::unordered_map<Var, std::set<Var>> occurs_;  // free variable -> pivots whose row mentions it
  std::size_t rank_changes_ = 0;
  Row failure_;
};

}  // namespace

LinearReduction linear_reduce(const PolySystem& system, const LinearReduceOptions& options) {
  LinearReduction out;
  out.residual.variables = system.variables;
  Eliminator elim;
  std::vector<std::vector<std::size_t>> rounds;

  struct Pending {
    std::size_t index;
    MultiPoly form;
  };
  std::vector<Pending> pending;
  std::vector<std::size_t> batch;
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (system.polys[i].is_affine()) batch.push_back(i);
    else pending.push_back({i, system.polys[i]});
  }
  std::unordered_map<std::size_t, MultiPoly> forms;
  for (std::size_t i : batch) forms.emplace(i, system.polys[i]);

  while (!batch.empty()) {
    rounds.push_back(batch);
    ++out.rounds;
    out.linear_rows += batch.size();
    const std::size_t before = elim.rank_changes();
    for (std::size_t i : batch) {
      if (!elim.add(forms.at(i), i)) {
        out.infeasible = true;
        LinearCertificate cert;
        cert.rounds = rounds;
        for (const auto& [k, c] : elim.failure().combo) cert.combination.push_back({k, c});
        cert.constant = elim.failure().constant;
        out.certificate = std::move(cert);
        out.substitutions = elim.substitutions();
        return out;
      }
    }
    batch.clear();
    if (elim.rank_changes() == before) break;
    const auto sigma = elim.solution();
    std::vector<Pending> still;
    for (auto& p : pending) {
      p.form = p.form.substitute(sigma);
      if (p.form.is_zero()) continue;
      if (p.form.is_affine() && (options.max_rounds == 0 || out.rounds < options.max_rounds)) {
        batch.push_back(p.index);
        forms[p.index] = std::move(p.form);
      } else {
        still.push_back(std::move(p));
      }
    }
    pending = std::move(still);
  }

  for (const auto& p : pending) out.residual.add(p.form, system.provenance.at(p.index));
  out.substitutions = elim.substitutions();
  return out;
}

bool verify_linear_certificate(const PolySystem& system, const LinearCertificate& certificate) {
  const std::size_t n = system.variables.size();
  std::vector<Vector> rows;
  std::unordered_map<std::size_t, MultiPoly> forms;
  auto dense_row = [n](const MultiPoly& p) {
    Vector row(n + 1);
    for (const auto& [m, c] : p.terms()) {
      if (m.is_one()) row[n] = c;
      else row[m.factors().front().first] = c;
    }
    return row;
  };
  for (std::size_t r = 0; r < certificate.rounds.size(); ++r) {
    std::unordered_map<Var, MultiPoly> sigma;
    if (r > 0) {
      const RowEchelon ech = row_echelon(rows, n + 1);
      for (std::size_t k = 0; k < ech.rank(); ++k) {
        const std::size_t pivot = ech.pivots[k];
        if (pivot == n) continue;
        MultiPoly value = MultiPoly::constant(-ech.rows[k][n]);
        for (std::size_t c = pivot + 1; c < n; ++c)
          value.add_term(Monomial::variable(static_cast<Var>(c)), -ech.rows[k][c]);
        sigma.emplace(static_cast<Var>(pivot), std::move(value));
      }
    }
    for (std::size_t idx : certificate.rounds[r]) {
      if (idx >= system.size()) return false;
      MultiPoly form = system.polys[idx].substitute(sigma);
      if (!form.is_affine()) return false;
      rows.push_back(dense_row(form));
      forms[idx] = std::move(form);
    }
  }
  MultiPoly total;
  for (const auto& [idx, c] : certificate.combination) {
    auto it = forms.find(idx);
    if (it == forms.end()) return false;
    total += c * it->second;
  }
  return total.is_constant() && !total.is_zero() && total.constant_term() == certificate.constant;
}

}  // namespace novikov
