#include "novikov/groebner.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <tuple>

namespace novikov {

namespace {

using Exp = std::vector<std::uint16_t>;

struct Term {
  Exp e;
  Rational c;
};
using Poly = std::vector<Term>;  // sorted by decreasing monomial

// Block order: the first `block` local variables form a grevlex block that
// dominates the grevlex block of the remaining ones. block == 0 is plain grevlex.
struct Order {
  std::size_t block = 0;
  std::size_t size = 0;

  static int grevlex(const Exp& a, const Exp& b, std::size_t lo, std::size_t hi) {
    unsigned da = 0, db = 0;
    for (std::size_t k = lo; k < hi; ++k) {
      da += a[k];
      db += b[k];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t k = hi; k-- > lo;)
      if (a[k] != b[k]) return a[k] < b[k] ? 1 : -1;
    return 0;
  }

  int compare(const Exp& a, const Exp& b) const {
    if (block > 0 && block < size) {
      if (int c = grevlex(a, b, 0, block)) return c;
      return grevlex(a, b, block, size);
    }
    return grevlex(a, b, 0, size);
  }
};

struct Descending {
  const Order* order;
  bool operator()(const Exp& a, const Exp& b) const { return order->compare(a, b) > 0; }
};

unsigned degree(const Exp& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

bool divides(const Exp& a, const Exp& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

Exp lcm(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

bool coprime(const Exp& a, const Exp& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] && b[k]) return false;
  return true;
}

Exp sub(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = static_cast<std::uint16_t>(a[k] - b[k]);
  return r;
}

Exp add(const Exp& a, const Exp& b) {
  Exp r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = static_cast<std::uint16_t>(a[k] + b[k]);
  return r;
}

bool is_constant(const Poly& p) { return p.size() == 1 && degree(p[0].e) == 0; }

void make_monic(Poly& p) {
  if (p.empty()) return;
  const Rational inv = p[0].c.inverse();
  for (auto& t : p) t.c *= inv;
}

class Engine {
public:
  Engine(const std::vector<MultiPoly>& polys, const std::vector<Var>& eliminate) {
    std::set<Var> all;
    for (const auto& p : polys)
      for (Var v : p.variables()) all.insert(v);
    for (Var v : eliminate)
      if (all.count(v) && !local_.count(v)) add_var(v);
    order_.block = globals_.size();
    for (Var v : all)
      if (!local_.count(v)) add_var(v);
    order_.size = globals_.size();
  }

  Poly to_local(const MultiPoly& p) const {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
      Exp e(order_.size, 0);
      for (const auto& [v, k] : m.factors()) e[local_.at(v)] = static_cast<std::uint16_t>(k);
      r.push_back({std::move(e), c});
    }
    sort(r);
    return r;
  }

  MultiPoly to_global(const Poly& p) const {
    MultiPoly r;
    for (const auto& t : p) {
      Monomial m;
      for (std::size_t k = 0; k < t.e.size(); ++k)
        if (t.e[k]) m = m * Monomial::variable(globals_[k], t.e[k]);
      r.add_term(m, t.c);
    }
    return r;
  }

  void sort(Poly& p) const {
    std::sort(p.begin(), p.end(), [this](const Term& a, const Term& b) { return order_.compare(a.e, b.e) > 0; });
  }

  /// Full remainder of p modulo the monic polynomials in g (entries with dead[k] skipped).
  Poly reduce(const Poly& p, const std::vector<Poly>& g, const std::vector<bool>* dead = nullptr) const {
    std::map<Exp, Rational, Descending> work(Descending{&order_});
    for (const auto& t : p) work.emplace(t.e, t.c);
    Poly rem;
    while (!work.empty()) {
      auto it = work.begin();
      const Poly* divisor = nullptr;
      for (std::size_t k = 0; k < g.size(); ++k) {
        if ((dead && (*dead)[k]) || g[k].empty()) continue;
        if (divides(g[k][0].e, it->first)) {
          divisor = &g[k];
          break;
        }
      }
      if (!divisor) {
        rem.push_back({it->first, it->second});
        work.erase(it);
        continue;
      }
      const Exp q = sub(it->first, (*divisor)[0].e);
      const Rational c = it->second;
      work.erase(it);
      for (std::size_t k = 1; k < divisor->size(); ++k) {
        const Exp e = add(q, (*divisor)[k].e);
        const Rational delta = -c * (*divisor)[k].c;
        auto [w, inserted] = work.try_emplace(e, delta);
        if (!inserted) {
          w->second += delta;
          if (w->second.is_zero()) work.erase(w);
        }
      }
    }
    return rem;
  }

  Poly spoly(const Poly& a, const Poly& b) const {
    const Exp l = lcm(a[0].e, b[0].e);
    std::map<Exp, Rational, Descending> work(Descending{&order_});
    auto accumulate = [&](const Poly& p, const Rational& s) {
      const Exp q = sub(l, p[0].e);
      for (std::size_t k = 1; k < p.size(); ++k) {
        auto [w, inserted] = work.try_emplace(add(q, p[k].e), s * p[k].c);
        if (!inserted) {
          w->second += s * p[k].c;
          if (w->second.is_zero()) work.erase(w);
        }
      }
    };
    accumulate(a, 1);
    accumulate(b, -1);
    Poly r;
    for (auto& [e, c] : work) r.push_back({e, c});
    return r;
  }

  const Order& order() const { return order_; }

private:
  void add_var(Var v) {
    local_[v] = globals_.size();
    globals_.push_back(v);
  }

  std::map<Var, std::size_t> local_;
  std::vector<Var> globals_;
  Order order_;
};

}  // namespace

GroebnerResult groebner(const std::vector<MultiPoly>& polys, const GroebnerOptions& options) {
  GroebnerResult result;
  Engine engine(polys, options.eliminate);
  std::vector<Poly> g;
  // (lcm degree, j, i) keeps pair selection deterministic.
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;

  auto unit_result = [&]() {
    result.unit = true;
    result.status = GroebnerStatus::complete;
    result.basis = {MultiPoly::constant(1)};
    return result;
  };

  auto insert = [&](Poly h) {
    const std::size_t j = g.size();
    for (std::size_t i = 0; i < j; ++i) {
      if (coprime(g[i][0].e, h[0].e)) continue;
      pending.insert({degree(lcm(g[i][0].e, h[0].e)), j, i});
      open.insert({i, j});
    }
    g.push_back(std::move(h));
  };

  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    Poly h = engine.reduce(engine.to_local(p), g);
    if (h.empty()) continue;
    make_monic(h);
    if (is_constant(h)) return unit_result();
    insert(std::move(h));
  }

  while (!pending.empty()) {
    const auto [deg, j, i] = *pending.begin();
    if (deg > options.degree_cap) {
      result.status = GroebnerStatus::cap_exceeded;
      result.pairs_deferred = pending.size();
      result.reason = "degree_cap " + std::to_string(options.degree_cap) + " reached with " +
                      std::to_string(pending.size()) + " deferred pairs";
      break;
    }
    pending.erase(pending.begin());
    open.erase({i, j});

    const Exp l = lcm(g[i][0].e, g[j][0].e);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !divides(g[k][0].e, l)) continue;
      chain = !open.count({std::min(i, k), std::max(i, k)}) && !open.count({std::min(j, k), std::max(j, k)});
    }
    if (chain) continue;

    if (result.pairs_processed >= options.pair_cap) {
      result.status = GroebnerStatus::cap_exceeded;
      result.pairs_deferred = pending.size() + 1;
      result.reason = "pair_cap " + std::to_string(options.pair_cap) + " reached";
      break;
    }
    ++result.pairs_processed;
    Poly h = engine.reduce(engine.spoly(g[i], g[j]), g);
    if (h.empty()) continue;
    make_monic(h);
    if (is_constant(h)) return unit_result();
    insert(std::move(h));
  }

  if (result.status == GroebnerStatus::cap_exceeded) {
    for (const auto& p : g) result.basis.push_back(engine.to_global(p));
    return result;
  }

  // Minimal basis, then tail-reduce each element by the others.
  std::vector<bool> dead(g.size(), false);
  for (std::size_t a = 0; a < g.size(); ++a)
    for (std::size_t b = 0; b < g.size() && !dead[a]; ++b) {
      if (a == b || dead[b] || !divides(g[b][0].e, g[a][0].e)) continue;
      if (g[b][0].e != g[a][0].e || b < a) dead[a] = true;
    }
  std::vector<Poly> reduced;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (dead[a]) continue;
    dead[a] = true;
    Poly tail(g[a].begin() + 1, g[a].end());
    Poly r = engine.reduce(tail, g, &dead);
    dead[a] = false;
    r.insert(r.begin(), g[a][0]);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Poly& a, const Poly& b) { return engine.order().compare(a[0].e, b[0].e) < 0; });
  for (const auto& p : reduced) result.basis.push_back(engine.to_global(p));
  return result;
}

GroebnerResult groebner(const PolySystem& system, const GroebnerOptions& options) {
  return groebner(system.polys, options);
}

MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& basis, const std::vector<Var>& eliminate) {
  std::vector<MultiPoly> all = basis;
  all.push_back(p);
  Engine engine(all, eliminate);
  std::vector<Poly> g;
  for (const auto& b : basis) {
    if (b.is_zero()) continue;
    Poly local = engine.to_local(b);
    make_monic(local);
    g.push_back(std::move(local));
  }
  return engine.to_global(engine.reduce(engine.to_local(p), g));
}

std::vector<MultiPoly> elimination_ideal(const GroebnerResult& result, const std::vector<Var>& eliminate) {
  std::vector<MultiPoly> out;
  for (const auto& p : result.basis) {
    const auto vars = p.variables();
    if (std::none_of(eliminate.begin(), eliminate.end(), [&](Var v) { return vars.count(v) > 0; }))
      out.push_back(p);
  }
  return out;
}

}  // namespace novikov
