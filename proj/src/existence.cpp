#include "novikov/existence.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "novikov/checks.hpp"
#include "novikov/errors.hpp"

namespace novikov {

std::string to_string(Mode m) { return m == Mode::lsa ? "lsa" : "novikov"; }
std::string to_string(Strategy s) { return s == Strategy::full ? "full" : "ansatz_first"; }
std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::exists: return "Exists";
    case Verdict::not_exists: return "NotExists";
    default: return "Unknown";
  }
}
std::string to_string(Certificate::Kind k) {
  return k == Certificate::Kind::linear_infeasible ? "LinearInfeasible" : "GroebnerUnit";
}

Mode parse_mode(const std::string& s) {
  if (s == "lsa") return Mode::lsa;
  if (s == "novikov") return Mode::novikov;
  throw MalformedInput("mode must be lsa or novikov, got '" + s + "'");
}

Strategy parse_strategy(const std::string& s) {
  if (s == "ansatz_first" || s == "ansatz-first") return Strategy::ansatz_first;
  if (s == "full") return Strategy::full;
  throw MalformedInput("strategy must be ansatz_first or full, got '" + s + "'");
}

ParametricLie ParametricLie::from(const LieAlgebra& lie) {
  ParametricLie p;
  p.dim = lie.dim();
  p.bracket.assign(p.dim * p.dim * p.dim, MultiPoly());
  for (const auto& [idx, c] : lie.table().entries())
    p.bracket[(idx[0] * p.dim + idx[1]) * p.dim + idx[2]] = MultiPoly::constant(c);
  return p;
}

AlgebraProduct BuiltSystem::product_at(const std::vector<Rational>& values, const std::vector<std::string>& labels) const {
  TableBuilder builder(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) {
        const MultiPoly& p = product[(i * dim + j) * dim + k];
        if (!p.is_zero()) builder.add(i, j, k, p.evaluate(values));
      }
  return AlgebraProduct(builder.build(), labels);
}

namespace {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

struct Emitted {
  MultiPoly poly;
  std::string tag;
};

std::string tag(const char* family, std::size_t a, std::size_t b, std::size_t r, std::size_t c) {
  return std::string(family) + "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")[" +
         std::to_string(r + 1) + "," + std::to_string(c + 1) + "]";
}

// Shifts parameter variables past the unknowns.
std::vector<MultiPoly> shifted_brackets(const ParametricLie& lie, Var offset) {
  std::unordered_map<Var, MultiPoly> shift;
  for (std::size_t p = 0; p < lie.parameters.size(); ++p)
    shift.emplace(static_cast<Var>(p), MultiPoly::variable(static_cast<Var>(p + offset)));
  std::vector<MultiPoly> out;
  out.reserve(lie.bracket.size());
  for (const auto& b : lie.bracket) out.push_back(shift.empty() || b.is_zero() ? b : b.substitute(shift));
  return out;
}

// Fills the compat, lsa and (for novikov mode) novikov families from the
// symbolic product and brackets.
void emit_families(BuiltSystem& built, const std::vector<MultiPoly>& br, Mode mode, std::size_t threads) {
  const std::size_t n = built.dim;
  auto P = [&](std::size_t i, std::size_t j, std::size_t k) -> const MultiPoly& {
    return built.product[(i * n + j) * n + k];
  };
  auto B = [&](std::size_t i, std::size_t j, std::size_t k) -> const MultiPoly& { return br[(i * n + j) * n + k]; };

  // L(x_k)[r][c] = coefficient of x_r in x_k . x_c; ad likewise for the bracket.
  std::vector<PolyMatrix> L(n, PolyMatrix(n, std::vector<MultiPoly>(n)));
  std::vector<PolyMatrix> ad(n, PolyMatrix(n, std::vector<MultiPoly>(n)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        L[k][r][c] = P(k, c, r);
        ad[k][r][c] = B(k, c, r);
      }

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        built.system.add(P(i, j, k) - P(j, i, k) - B(i, j, k),
                         "compat(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")[" + std::to_string(k + 1) + "]");

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) pairs.push_back({a, b});
  std::vector<std::vector<Emitted>> lsa_slots(pairs.size()), nov_slots(pairs.size());

  auto combine = [&](const std::vector<PolyMatrix>& ops, std::size_t a, std::size_t b) {
    PolyMatrix m(n, std::vector<MultiPoly>(n));
    for (std::size_t k = 0; k < n; ++k) {
      const MultiPoly& coef = B(a, b, k);
      if (coef.is_zero()) continue;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!ops[k][r][c].is_zero()) m[r][c] += coef * ops[k][r][c];
    }
    return m;
  };
  auto product_entry = [&](const PolyMatrix& x, const PolyMatrix& y, std::size_t r, std::size_t c) {
    MultiPoly s;
    for (std::size_t t = 0; t < n; ++t)
      if (!x[r][t].is_zero() && !y[t][c].is_zero()) s += x[r][t] * y[t][c];
    return s;
  };

  auto work = [&](std::size_t p) {
    const auto [a, b] = pairs[p];
    const PolyMatrix Lab = combine(L, a, b);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        MultiPoly e = product_entry(L[a], L[b], r, c) - product_entry(L[b], L[a], r, c) - Lab[r][c];
        if (!e.is_zero()) lsa_slots[p].push_back({std::move(e), tag("lsa", a, b, r, c)});
      }
    if (mode != Mode::novikov) return;
    const PolyMatrix adab = combine(ad, a, b);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        MultiPoly e = Lab[r][c] + adab[r][c];
        e -= product_entry(ad[a], L[b], r, c) - product_entry(L[b], ad[a], r, c);
        e -= product_entry(L[a], ad[b], r, c) - product_entry(ad[b], L[a], r, c);
        if (!e.is_zero()) nov_slots[p].push_back({std::move(e), tag("novikov", a, b, r, c)});
      }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, pairs.size()));
  if (workers <= 1) {
    for (std::size_t p = 0; p < pairs.size(); ++p) work(p);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t p = w; p < pairs.size(); p += workers) work(p);
      });
    for (auto& t : pool) t.join();
  }
  for (auto& slot : lsa_slots)
    for (auto& e : slot) built.system.add(std::move(e.poly), std::move(e.tag));
  for (auto& slot : nov_slots)
    for (auto& e : slot) built.system.add(std::move(e.poly), std::move(e.tag));
}

}  // namespace

BuiltSystem build_full(const ParametricLie& lie, Mode mode, std::size_t threads) {
  const std::size_t n = lie.dim;
  BuiltSystem built;
  built.name = "full";
  built.dim = n;
  const Var unknowns = static_cast<Var>(n * n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        built.system.variables.push_back("x" + std::to_string(k + 1) + "_" + std::to_string(i + 1) + "_" +
                                         std::to_string(j + 1));
  for (const auto& p : lie.parameters) built.system.variables.push_back(p);
  built.product.assign(n * n * n, MultiPoly());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        built.product[(k * n + j) * n + i] = MultiPoly::variable(static_cast<Var>((k * n + i) * n + j));
  emit_families(built, shifted_brackets(lie, unknowns), mode, threads);
  return built;
}

BuiltSystem build_ansatz(const ParametricLie& lie, Mode mode, std::size_t threads) {
  const std::size_t n = lie.dim;
  BuiltSystem built;
  built.name = "ansatz";
  built.dim = n;

  auto nonzero_bracket = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k)
      if (!lie.at(i, j, k).is_zero()) return true;
    return false;
  };

  // Basis of the span the diagonal products may take values in.
  std::vector<Vector> derived_basis;
  if (lie.parameters.empty()) {
    std::vector<Vector> spanning;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        Vector v(n);
        for (std::size_t k = 0; k < n; ++k) v[k] = lie.at(i, j, k).constant_term();
        if (!is_zero(v)) spanning.push_back(std::move(v));
      }
    derived_basis = Subspace(spanning, n).basis();
  } else {
    // Generic span is not available; use the coordinate support instead.
    for (std::size_t k = 0; k < n; ++k) {
      bool used = false;
      for (std::size_t i = 0; i < n && !used; ++i)
        for (std::size_t j = 0; j < n && !used; ++j) used = !lie.at(i, j, k).is_zero();
      if (used) derived_basis.push_back(unit_vector(n, k));
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nonzero_bracket(i, j)) {
        pairs.push_back({i, j});
        built.system.variables.push_back("l" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
      }
  const Var diag_start = static_cast<Var>(built.system.variables.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < derived_basis.size(); ++t)
      built.system.variables.push_back("d" + std::to_string(i + 1) + "_" + std::to_string(t + 1));
  const Var unknowns = static_cast<Var>(built.system.variables.size());
  for (const auto& p : lie.parameters) built.system.variables.push_back(p);

  const std::vector<MultiPoly> br = shifted_brackets(lie, unknowns);
  auto B = [&](std::size_t i, std::size_t j, std::size_t k) -> const MultiPoly& { return br[(i * n + j) * n + k]; };
  built.product.assign(n * n * n, MultiPoly());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    const MultiPoly lambda = MultiPoly::variable(static_cast<Var>(p));
    const MultiPoly rest = MultiPoly::constant(1) - lambda;
    for (std::size_t k = 0; k < n; ++k) {
      built.product[(i * n + j) * n + k] = lambda * B(i, j, k);
      built.product[(j * n + i) * n + k] = rest * B(j, i, k);
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < derived_basis.size(); ++t) {
      const Var d = static_cast<Var>(diag_start + i * derived_basis.size() + t);
      for (std::size_t k = 0; k < n; ++k)
        if (!derived_basis[t][k].is_zero())
          built.product[(i * n + i) * n + k].add_term(Monomial::variable(d), derived_basis[t][k]);
    }
  emit_families(built, br, mode, threads);
  return built;
}

PolySystem build_full_system(const LieAlgebra& lie, Mode mode, std::size_t threads) {
  return build_full(ParametricLie::from(lie), mode, threads).system;
}

PolySystem build_ansatz_system(const LieAlgebra& lie, Mode mode, std::size_t threads) {
  return build_ansatz(ParametricLie::from(lie), mode, threads).system;
}

namespace {

bool vanishes_at_zero(const PolySystem& s) {
  return std::all_of(s.polys.begin(), s.polys.end(), [](const MultiPoly& p) { return p.constant_term().is_zero(); });
}

// Depth-first search over the residual: fix the smallest remaining variable
// to a small value, linearly reduce, recurse.
class WitnessSearch {
public:
  WitnessSearch(std::vector<Rational> ladder, std::size_t budget, std::mt19937_64* rng = nullptr)
      : ladder_(std::move(ladder)), budget_(budget), rng_(rng) {}

  bool run(const PolySystem& residual) {
    if (vanishes_at_zero(residual)) return true;
    Var v = std::numeric_limits<Var>::max();
    for (const auto& p : residual.polys)
      for (Var x : p.variables()) v = std::min(v, x);
    std::vector<Rational> values = ladder_;
    if (rng_) std::shuffle(values.begin(), values.end(), *rng_);
    for (const auto& value : values) {
      if (nodes_ >= budget_) return false;
      ++nodes_;
      const MultiPoly fixed = MultiPoly::constant(value);
      PolySystem next;
      next.variables = residual.variables;
      for (std::size_t i = 0; i < residual.size(); ++i)
        next.add(residual.polys[i].substitute([&](Var x) { return x == v ? &fixed : nullptr; }),
                 residual.provenance[i]);
      LinearReduction red = linear_reduce(next);
      if (red.infeasible) continue;
      const std::size_t mark = stack_.size();
      stack_.push_back({v, fixed});
      for (auto& s : red.substitutions) stack_.push_back(std::move(s));
      if (run(red.residual)) return true;
      stack_.resize(mark);
    }
    return false;
  }

  const std::vector<Substitution>& stack() const { return stack_; }
  std::size_t nodes() const { return nodes_; }

private:
  std::vector<Rational> ladder_;
  std::size_t budget_;
  std::mt19937_64* rng_;
  std::size_t nodes_ = 0;
  std::vector<Substitution> stack_;
};

// Later records only mention variables that were free when they were made, so
// evaluating in reverse order resolves every dependency; untouched variables are 0.
std::vector<Rational> compose(std::size_t nvars, const std::vector<Substitution>& records) {
  std::vector<Rational> values(nvars);
  for (auto it = records.rbegin(); it != records.rend(); ++it) values[it->var] = it->value.evaluate(values);
  return values;
}

}  // namespace

SolveOutcome solve_built(const BuiltSystem& built, const LieAlgebra& lie, const DecideOptions& options) {
  SolveOutcome out;
  out.system = built.name;
  StageStats stats;
  stats.system = built.name;
  stats.variables = built.system.variables.size();
  stats.equations = built.system.size();
  stats.affine_equations = built.system.count_affine();

  const LinearReduction red = linear_reduce(built.system);
  stats.eliminated = red.substitutions.size();
  stats.rounds = red.rounds;
  stats.residual_equations = red.residual.size();

  auto finish = [&](std::string outcome) {
    stats.outcome = std::move(outcome);
    out.stages.push_back(stats);
    return out;
  };

  if (red.infeasible) {
    out.verdict = Verdict::not_exists;
    out.certificate = Certificate{Certificate::Kind::linear_infeasible, red.certificate, std::nullopt};
    out.reason = "linear part reduces to a nonzero constant";
    return finish("LinearInfeasible");
  }

  std::vector<Substitution> records = red.substitutions;
  std::optional<std::vector<Rational>> values;
  if (vanishes_at_zero(red.residual)) values = compose(stats.variables, records);

  std::string unknown_reason;
  if (!values) {
    GroebnerOptions gopts;
    gopts.degree_cap = options.degree_cap;
    gopts.pair_cap = options.pair_cap;
    const GroebnerResult gb = groebner(red.residual, gopts);
    stats.groebner_run = true;
    stats.groebner_pairs = gb.pairs_processed;
    if (gb.unit) {
      out.verdict = Verdict::not_exists;
      out.certificate = Certificate{Certificate::Kind::groebner_unit, std::nullopt, red.residual};
      out.reason = "1 lies in the ideal of the reduced system";
      return finish("GroebnerUnit");
    }
    if (gb.status == GroebnerStatus::cap_exceeded) unknown_reason = "groebner: " + gb.reason + "; ";

    WitnessSearch ladder({0, 1, -1, 2, -2, 3, -3}, options.node_budget);
    bool found = ladder.run(red.residual);
    stats.search_nodes = ladder.nodes();
    if (found) {
      records.insert(records.end(), ladder.stack().begin(), ladder.stack().end());
    } else {
      std::mt19937_64 rng(options.seed);
      std::vector<Rational> wide;
      for (int k = -5; k <= 5; ++k) wide.push_back(k);
      WitnessSearch random(wide, options.node_budget, &rng);
      found = random.run(red.residual);
      stats.search_nodes += random.nodes();
      if (found) records.insert(records.end(), random.stack().begin(), random.stack().end());
    }
    if (found) values = compose(stats.variables, records);
    else unknown_reason += "no rational witness found within the search budget";
  }

  if (!values) {
    out.verdict = Verdict::unknown;
    out.residual = red.residual;
    out.reason = unknown_reason;
    return finish("Unknown");
  }

  AlgebraProduct witness = built.product_at(*values, lie.labels());
  const bool identity_ok =
      options.mode == Mode::novikov ? check_novikov(witness).passed : check_left_symmetric(witness).passed;
  if (!identity_ok || !is_compatible(witness, lie) || !built.system.satisfied_by(*values)) {
    out.verdict = Verdict::unknown;
    out.residual = red.residual;
    out.reason = "candidate witness failed re-verification";
    return finish("Unknown");
  }
  out.verdict = Verdict::exists;
  out.witness = std::move(witness);
  out.witness_values = std::move(*values);
  out.reason = "witness verified";
  return finish("Exists");
}

SolveOutcome decide(const LieAlgebra& lie, const DecideOptions& options) {
  if (!check_jacobi(lie).passed) throw PreconditionFailed("input fails the Jacobi identity");
  const ParametricLie plie = ParametricLie::from(lie);
  std::vector<StageStats> stages;
  if (options.strategy == Strategy::ansatz_first) {
    SolveOutcome ansatz = solve_built(build_ansatz(plie, options.mode, options.threads), lie, options);
    if (ansatz.verdict == Verdict::exists) return ansatz;
    stages = ansatz.stages;
  }
  SolveOutcome full = solve_built(build_full(plie, options.mode, options.threads), lie, options);
  full.stages.insert(full.stages.begin(), stages.begin(), stages.end());
  return full;
}

bool verify_certificate(const PolySystem& system, const Certificate& certificate) {
  if (certificate.kind == Certificate::Kind::linear_infeasible)
    return certificate.linear && verify_linear_certificate(system, *certificate.linear);
  if (!certificate.residual) return false;
  const LinearReduction red = linear_reduce(system);
  if (red.infeasible || red.residual.polys != certificate.residual->polys) return false;
  GroebnerOptions unlimited;
  unlimited.degree_cap = std::numeric_limits<std::size_t>::max();
  unlimited.pair_cap = std::numeric_limits<std::size_t>::max();
  const GroebnerResult gb = groebner(red.residual, unlimited);
  return gb.unit && normal_form(MultiPoly::constant(1), gb.basis).is_zero();
}

}  // namespace novikov
