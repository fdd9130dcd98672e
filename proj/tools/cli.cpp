#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "novikov/catalog.hpp"
#include "novikov/checks.hpp"
#include "novikov/constructions.hpp"
#include "novikov/errors.hpp"
#include "novikov/existence.hpp"
#include "novikov/extensions.hpp"
#include "novikov/json_io.hpp"
#include "novikov/rmatrix.hpp"

namespace novikov::cli {

namespace {

enum class LogLevel { quiet, info, debug };

LogLevel log_level() {
  const char* v = std::getenv("NOVIKOV_LOG");
  if (!v) return LogLevel::info;
  const std::string s = v;
  if (s == "quiet") return LogLevel::quiet;
  if (s == "debug") return LogLevel::debug;
  return LogLevel::info;
}

class Log {
public:
  explicit Log(std::ostream& err) : err_(err), level_(log_level()) {}
  void info(const std::string& msg) const {
    if (level_ != LogLevel::quiet) err_ << "[info] " << msg << "\n";
  }
  void debug(const std::string& msg) const {
    if (level_ == LogLevel::debug) err_ << "[debug] " << msg << "\n";
  }
  void error(const std::string& msg) const { err_ << "error: " << msg << "\n"; }

private:
  std::ostream& err_;
  LogLevel level_;
};

/// Input error: exit 3.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string source;
  std::string digest;
  Json json;
};

Input load_input(const std::string& source) {
  Input in;
  in.source = source;
  std::string ref = source;
  const bool explicit_catalog = ref.rfind("catalog:", 0) == 0;
  if (explicit_catalog) ref = ref.substr(8);
  if (!explicit_catalog && std::filesystem::is_regular_file(source)) {
    std::ifstream f(source, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    const std::string bytes = buf.str();
    in.digest = digest(bytes);
    try {
      in.json = Json::parse(bytes);
    } catch (const Json::parse_error& e) {
      throw SchemaError(source + ": not valid JSON (" + e.what() + ")");
    }
    return in;
  }
  const std::string head = source.substr(0, source.find(':'));
  if (!explicit_catalog && (head.find('/') != std::string::npos || head.ends_with(".json")))
    throw InputError("no such file: " + source);
  auto [id, params] = parse_catalog_ref(ref);
  in.json = to_json(catalog_get(id, params).payload);
  in.digest = digest(in.json.dump());
  return in;
}

std::string kind_of(const Input& in) {
  auto it = in.json.find("kind");
  return it != in.json.end() && it->is_string() ? it->get<std::string>() : "";
}

const Input& find_kind(const std::vector<Input>& inputs, const std::string& kind, const std::string& purpose) {
  for (const auto& in : inputs)
    if (kind_of(in) == kind) return in;
  throw InputError(purpose + " needs an input of kind '" + kind + "'");
}

const Input* maybe_kind(const std::vector<Input>& inputs, const std::string& kind) {
  for (const auto& in : inputs)
    if (kind_of(in) == kind) return &in;
  return nullptr;
}

Json inputs_json(const std::vector<Input>& inputs) {
  Json a = Json::array();
  for (const auto& in : inputs) a.push_back({{"source", in.source}, {"digest", in.digest}});
  return a;
}

std::vector<std::size_t> parse_index_list(const std::string& s, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      const long v = std::stol(item);
      if (v < 1) throw std::invalid_argument("nonpositive");
      out.push_back(static_cast<std::size_t>(v - 1));
    } catch (const std::exception&) {
      throw InputError(what + ": '" + item + "' is not a positive index");
    }
  }
  return out;
}

Vector parse_rational_list(const std::string& s, const std::string& what) {
  Vector out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::exception&) {
      throw InputError(what + ": '" + item + "' is not a rational");
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

std::string payload_text(const Json& j) { return j.dump(2) + "\n"; }

struct Context {
  std::vector<std::string> args;
  std::ostream& out;
  std::ostream& err;
  Log log;
  bool json = false;
  std::string out_path;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Json report(const std::vector<Input>& inputs, int code, Json result) const {
    Json r;
    r["tool"] = "novikov";
    r["version"] = kVersion;
    r["command"] = args;
    r["inputs"] = inputs_json(inputs);
    r["exit_code"] = code;
    r["result"] = std::move(result);
    r["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  int emit(const Json& report, const std::string& summary) const {
    if (json) out << report.dump(2) << "\n";
    else out << summary << "\n";
    return report["exit_code"].get<int>();
  }
};

std::string summarize(const CheckReport& r) {
  if (r.passed) return "passed";
  std::ostringstream os;
  const auto& v = r.violations.front();
  os << "failed: " << r.violations.size() << " violation(s), first " << v.identity << " at (";
  for (std::size_t i = 0; i < v.indices.size(); ++i) os << (i ? "," : "") << v.indices[i] + 1;
  os << ")";
  return os.str();
}

// ---- verify -------------------------------------------------------------

int cmd_verify(Context& ctx, const std::string& what, const std::vector<std::string>& sources) {
  std::vector<Input> inputs;
  for (const auto& s : sources) inputs.push_back(load_input(s));
  Json checks = Json::array();
  bool passed = true;
  std::string summary;
  auto record = [&](const std::string& name, const CheckReport& r) {
    checks.push_back({{"check", name}, {"report", to_json(r)}});
    passed = passed && r.passed;
    summary += (summary.empty() ? "" : "; ") + name + ": " + summarize(r);
  };
  auto record_bool = [&](const std::string& name, bool ok) {
    checks.push_back({{"check", name}, {"report", {{"passed", ok}}}});
    passed = passed && ok;
    summary += (summary.empty() ? "" : "; ") + name + ": " + (ok ? "passed" : "failed");
  };

  if (what == "jacobi") {
    for (const auto& in : inputs) {
      if (kind_of(in) != "lie") throw InputError("verify jacobi expects Lie algebra inputs");
      record("jacobi " + in.source, check_jacobi(lie_from_json(in.json, in.source + ": $")));
    }
  } else if (what == "lsa" || what == "novikov") {
    const Input& p = find_kind(inputs, "product", "verify " + what);
    const AlgebraProduct product = product_from_json(p.json, p.source + ": $");
    record(what, what == "lsa" ? check_left_symmetric(product) : check_novikov(product));
    if (const Input* l = maybe_kind(inputs, "lie")) record_bool("compatible", is_compatible(product, lie_from_json(l->json, l->source + ": $")));
  } else if (what == "cybe") {
    const Input& t = find_kind(inputs, "rmatrix", "verify cybe");
    const RMatrix r = rmatrix_from_json(t.json, t.source + ": $");
    record("cybe", check_cybe(r));
  } else if (what == "cocycle") {
    if (const Input* d = maybe_kind(inputs, "liftdata")) {
      const LiftData data = liftdata_from_json(d->json, d->source + ": $");
      record("cocycle", check_cocycle(data.phi, data.Omega));
    } else {
      const Input& rep = find_kind(inputs, "representation", "verify cocycle");
      const Input& c = find_kind(inputs, "cocycle", "verify cocycle");
      record("cocycle", check_cocycle(representation_from_json(rep.json, rep.source + ": $"), cocycle_from_json(c.json, c.source + ": $")));
    }
  } else if (what == "lift-lsa" || what == "lift-novikov") {
    const Input& d = find_kind(inputs, "liftdata", "verify " + what);
    const LiftData data = liftdata_from_json(d.json, d.source + ": $");
    record("lsa_conditions", check_lsa_conditions(data));
    if (what == "lift-novikov") record("novikov_conditions", check_novikov_conditions(data));
  } else if (what == "derivation") {
    const Input& p = find_kind(inputs, "product", "verify derivation");
    const Input& d = find_kind(inputs, "operator", "verify derivation");
    record("derivation", check_derivation(product_from_json(p.json, p.source + ": $"), matrix_from_json(d.json, d.source + ": $")));
  } else {
    throw InputError("unknown verify target '" + what + "'");
  }
  const int code = passed ? kOk : kFailed;
  Json result{{"what", what}, {"passed", passed}, {"checks", checks}};
  const Json rep = ctx.report(inputs, code, result);
  if (!ctx.out_path.empty()) write_file(ctx.out_path, payload_text(rep));
  return ctx.emit(rep, "verify " + what + ": " + summary);
}

// ---- construct ----------------------------------------------------------

struct ConstructOptions {
  std::string a_part, b_part, e, projection;
};

int cmd_construct(Context& ctx, const std::string& kind, const std::vector<std::string>& sources,
                  const ConstructOptions& opt) {
  std::vector<Input> inputs;
  for (const auto& s : sources) inputs.push_back(load_input(s));
  Json result{{"kind", kind}};
  Json payload;
  std::string summary;
  int code = kOk;

  auto verify_product = [&](const AlgebraProduct& product, const LieAlgebra& lie, bool novikov) {
    const CheckReport identity = novikov ? check_novikov(product) : check_left_symmetric(product);
    const bool compatible = is_compatible(product, lie);
    result["verification"] = {{novikov ? "novikov" : "lsa", to_json(identity)}, {"compatible", compatible}};
    return identity.passed && compatible;
  };

  try {
    if (kind == "half-bracket") {
      const Input& l = find_kind(inputs, "lie", "construct half-bracket");
      const LieAlgebra lie = lie_from_json(l.json, l.source + ": $");
      const AlgebraProduct p = half_bracket(lie);
      if (!verify_product(p, lie, true)) code = kFailed;
      payload = to_json(p);
    } else if (kind == "block") {
      const Input& l = find_kind(inputs, "lie", "construct block");
      const LieAlgebra lie = lie_from_json(l.json, l.source + ": $");
      if (opt.a_part.empty() || opt.b_part.empty()) throw InputError("construct block needs --a-part and --b-part");
      const AlgebraProduct p =
          block_product(lie, parse_index_list(opt.a_part, "--a-part"), parse_index_list(opt.b_part, "--b-part"));
      if (!verify_product(p, lie, true)) code = kFailed;
      payload = to_json(p);
    } else if (kind == "derivation") {
      const Input& pin = find_kind(inputs, "product", "construct derivation");
      const Input& din = find_kind(inputs, "operator", "construct derivation");
      const AlgebraProduct p =
          novikov_from_derivation(product_from_json(pin.json, pin.source + ": $"), matrix_from_json(din.json, din.source + ": $"));
      if (!verify_product(p, commutator_unchecked(p), true)) code = kFailed;
      payload = to_json(p);
    } else if (kind == "rmatrix") {
      RMatrix t;
      if (const Input* r = maybe_kind(inputs, "rmatrix")) {
        t = rmatrix_from_json(r->json, r->source + ": $");
      } else {
        Representation rep;
        if (const Input* r = maybe_kind(inputs, "representation")) rep = representation_from_json(r->json, r->source + ": $");
        else if (const Input* l = maybe_kind(inputs, "lie")) rep = adjoint_representation(lie_from_json(l->json, l->source + ": $"));
        else throw InputError("construct rmatrix needs an rmatrix, representation, or Lie algebra input");
        if (!opt.projection.empty()) {
          const auto idx = parse_index_list(opt.projection, "--projection");
          if (idx.size() != 2) throw InputError("--projection expects ell,k");
          t = projection_rmatrix(rep, idx[0], idx[1]);
        } else {
          const Input& m = find_kind(inputs, "operator", "construct rmatrix");
          Matrix tm = matrix_from_json(m.json, m.source + ": $");
          if (tm.rows() != rep.algebra().dim() || tm.cols() != rep.module_dim())
            throw InputError("T must be algebra_dim x module_dim");
          t = RMatrix(rep, std::move(tm));
        }
      }
      const AlgebraProduct p = induced_product(t);
      const LieAlgebra target = bracket_T_algebra(t);
      const CheckReport nov = check_novikov_condition(t);
      result["bracket_T"] = to_json(target);
      result["novikov_condition"] = to_json(nov);
      if (!verify_product(p, target, false)) code = kFailed;
      payload = to_json(p);
    } else if (kind == "semidirect") {
      const Input& r = find_kind(inputs, "representation", "construct semidirect");
      const Input& b = find_kind(inputs, "product", "construct semidirect");
      const SemidirectLift lift =
          semidirect_lift(representation_from_json(r.json, r.source + ": $"), product_from_json(b.json, b.source + ": $"));
      const AlgebraProduct p = lifted_product(lift.data);
      result["novikov"] = lift.novikov;
      if (lift.obstruction) result["obstruction"] = *lift.obstruction;
      const LieAlgebra g = extension_lie(lift.data.phi, lift.data.Omega);
      if (!verify_product(p, g, lift.novikov)) code = kFailed;
      payload = to_json(lift.data);
      payload["lifted_product"] = to_json(p);
    } else if (kind == "iso-lift") {
      Representation rep;
      Cocycle omega;
      if (const Input* d = maybe_kind(inputs, "liftdata")) {
        const LiftData data = liftdata_from_json(d->json, d->source + ": $");
        rep = data.phi;
        omega = data.Omega;
      } else {
        const Input& r = find_kind(inputs, "representation", "construct iso-lift");
        rep = representation_from_json(r.json, r.source + ": $");
        const Input* c = maybe_kind(inputs, "cocycle");
        omega = c ? cocycle_from_json(c->json, c->source + ": $") : Cocycle(rep.algebra().dim(), rep.module_dim());
      }
      if (opt.e.empty()) throw InputError("construct iso-lift needs --e");
      const Vector e = parse_rational_list(opt.e, "--e");
      const LiftData data = iso_lift(rep, omega, e);
      const AlgebraProduct p = lifted_product(data);
      if (!verify_product(p, extension_lie(rep, omega), true)) code = kFailed;
      payload = to_json(data);
      payload["lifted_product"] = to_json(p);
    } else if (kind == "lift") {
      const Input& d = find_kind(inputs, "liftdata", "construct lift");
      const LiftData data = liftdata_from_json(d.json, d.source + ": $");
      const CheckReport lsa = check_lsa_conditions(data);
      const CheckReport nov = check_novikov_conditions(data);
      result["lsa_conditions"] = to_json(lsa);
      result["novikov_conditions"] = to_json(nov);
      const AlgebraProduct p = lifted_product(data);
      if (!lsa.passed) {
        code = kFailed;
        result["violated"] = "lsa_conditions";
      } else if (!verify_product(p, extension_lie(data.phi, data.Omega), nov.passed)) {
        code = kFailed;
      }
      payload = to_json(p);
    } else {
      throw InputError("unknown construct kind '" + kind + "'");
    }
  } catch (const JacobiFailure& e) {
    code = kFailed;
    result["violated"] = "JacobiFailure";
    result["message"] = e.what();
  } catch (const Error& e) {
    const std::string k = e.kind();
    if (k == "SchemaError" || k == "MalformedInput" || k == "DimensionMismatch" || k == "UnknownId" ||
        k == "MissingParam")
      throw;
    code = kFailed;
    result["violated"] = k;
    result["message"] = e.what();
  }

  if (code == kOk) {
    result["payload_digest"] = digest(payload_text(payload));
    if (!ctx.out_path.empty()) write_file(ctx.out_path, payload_text(payload));
    result["payload"] = payload;
    summary = "construct " + kind + ": verified" + (ctx.out_path.empty() ? "" : ", written to " + ctx.out_path);
  } else {
    summary = "construct " + kind + ": failed" +
              (result.contains("message") ? " (" + result["message"].get<std::string>() + ")" : "");
  }
  return ctx.emit(ctx.report(inputs, code, result), summary);
}

// ---- solve --------------------------------------------------------------

struct SolveFlags {
  std::string alpha;
  std::vector<std::string> params;
  std::string mode = "novikov";
  std::string strategy = "ansatz_first";
  std::size_t degree_cap = 6;
  std::size_t pair_cap = 50000;
  std::size_t node_budget = 20000;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
};

int cmd_solve(Context& ctx, const std::string& target, const SolveFlags& f) {
  std::string source = target;
  std::vector<std::string> extra = f.params;
  if (!f.alpha.empty()) extra.push_back("alpha=" + f.alpha);
  if (!extra.empty()) {
    if (std::filesystem::is_regular_file(target)) throw InputError("--alpha/--param apply to catalog ids only");
    std::string joined;
    for (const auto& p : extra) joined += (joined.empty() ? "" : ",") + p;
    const std::size_t id_start = target.rfind("catalog:", 0) == 0 ? 8 : 0;
    source += (target.find(':', id_start) == std::string::npos ? ":" : ",") + joined;
  }
  std::vector<Input> inputs{load_input(source)};
  if (kind_of(inputs[0]) != "lie") throw InputError("solve expects a Lie algebra");
  const LieAlgebra lie = lie_from_json(inputs[0].json, source + ": $");

  DecideOptions opt;
  opt.mode = parse_mode(f.mode);
  opt.strategy = parse_strategy(f.strategy);
  opt.degree_cap = f.degree_cap;
  opt.pair_cap = f.pair_cap;
  opt.node_budget = f.node_budget;
  opt.seed = f.seed;
  opt.threads = std::max<std::size_t>(1, f.threads);

  const CheckReport jac = check_jacobi(lie);
  if (!jac.passed) throw InputError("input fails the Jacobi identity: " + summarize(jac));

  ctx.log.info("solving " + source + " (dim " + std::to_string(lie.dim()) + ", mode " + f.mode + ")");
  const SolveOutcome outcome = decide(lie, opt);

  Json stages = Json::array();
  for (const auto& s : outcome.stages) {
    stages.push_back({{"system", s.system},
                      {"variables", s.variables},
                      {"equations", s.equations},
                      {"affine_equations", s.affine_equations},
                      {"eliminated", s.eliminated},
                      {"eliminated_fraction", s.variables ? double(s.eliminated) / double(s.variables) : 0.0},
                      {"residual_equations", s.residual_equations},
                      {"rounds", s.rounds},
                      {"groebner_run", s.groebner_run},
                      {"groebner_pairs", s.groebner_pairs},
                      {"search_nodes", s.search_nodes},
                      {"outcome", s.outcome}});
    ctx.log.debug(s.system + ": " + std::to_string(s.variables) + " unknowns, " + std::to_string(s.equations) +
                  " equations, " + std::to_string(s.eliminated) + " eliminated -> " + s.outcome);
  }

  Json payload;
  std::string payload_kind;
  int code = kUnknown;
  if (outcome.verdict == Verdict::exists) {
    code = kOk;
    payload_kind = "witness";
    payload = to_json(*outcome.witness);
  } else if (outcome.verdict == Verdict::not_exists) {
    code = kFailed;
    payload_kind = "certificate";
    payload = to_json(*outcome.certificate);
    payload["system"] = outcome.system;
    payload["scope"] = "no solution over any field extension of Q";
  } else {
    payload_kind = "residual";
    payload = outcome.residual ? to_json(*outcome.residual) : Json::object();
  }
  const std::string text = payload_text(payload);
  if (!ctx.out_path.empty()) write_file(ctx.out_path, text);

  Json result;
  result["verdict"] = to_string(outcome.verdict);
  result["system"] = outcome.system;
  result["reason"] = outcome.reason;
  result["mode"] = to_string(opt.mode);
  result["strategy"] = to_string(opt.strategy);
  result["caps"] = {{"degree_cap", opt.degree_cap}, {"pair_cap", opt.pair_cap}, {"node_budget", opt.node_budget}};
  result["seed"] = opt.seed;
  result["threads"] = opt.threads;
  result["stages"] = stages;
  result["payload_kind"] = payload_kind;
  result["payload_digest"] = digest(text);
  result[payload_kind] = payload;
  std::string summary = "solve " + source + ": " + to_string(outcome.verdict) + " (" + outcome.system + " system, " +
                        outcome.reason + ")";
  if (outcome.certificate) summary += ", certificate " + to_string(outcome.certificate->kind);
  return ctx.emit(ctx.report(inputs, code, result), summary);
}

// ---- catalog ------------------------------------------------------------

int cmd_catalog_list(Context& ctx) {
  Json entries = Json::array();
  std::ostringstream text;
  for (const auto& info : catalog_list()) {
    entries.push_back({{"id", info.id}, {"kind", info.kind}, {"params", info.params}, {"description", info.description}});
    text << info.id;
    if (!info.params.empty()) {
      text << "(";
      for (std::size_t i = 0; i < info.params.size(); ++i) text << (i ? "," : "") << info.params[i];
      text << ")";
    }
    text << "  [" << info.kind << "]  " << info.description << "\n";
  }
  if (ctx.json) ctx.out << Json{{"entries", entries}}.dump(2) << "\n";
  else ctx.out << text.str();
  return kOk;
}

int cmd_catalog_dump(Context& ctx, const std::string& id, const std::string& params) {
  const std::string ref = params.empty() ? id : id + ":" + params;
  auto [name, values] = parse_catalog_ref(ref);
  const CatalogEntry e = catalog_get(name, values);
  const std::string text = payload_text(to_json(e.payload));
  if (!ctx.out_path.empty()) write_file(ctx.out_path, text);
  else ctx.out << text;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{args, out, err, Log(err)};
  CLI::App app{"Novikov and left-symmetric structures on Lie algebras", "novikov"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string what, kind, solve_target, dump_id, dump_params;
  std::vector<std::string> sources;
  ConstructOptions copt;
  SolveFlags sflags;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", ctx.json, "Print the run report as JSON");
    sub->add_option("--out", ctx.out_path, "Write the payload to this path");
  };

  CLI::App* verify = app.add_subcommand("verify", "Check identities on JSON or catalog inputs");
  verify->add_option("what", what, "jacobi|lsa|novikov|cybe|cocycle|lift-lsa|lift-novikov|derivation")->required();
  verify->add_option("inputs", sources, "JSON files or catalog:ID[:k=v,...]")->required();
  add_common(verify);

  CLI::App* construct = app.add_subcommand("construct", "Build a product and re-verify it");
  construct->add_option("kind", kind, "half-bracket|block|derivation|rmatrix|semidirect|iso-lift|lift")->required();
  construct->add_option("inputs", sources, "JSON files or catalog:ID[:k=v,...]")->required();
  construct->add_option("--a-part", copt.a_part, "block: 1-based indices spanning a");
  construct->add_option("--b-part", copt.b_part, "block: 1-based indices spanning b");
  construct->add_option("--e", copt.e, "iso-lift: coordinates of e in b, comma separated");
  construct->add_option("--projection", copt.projection, "rmatrix: ell,k for T(u_ell) = x_k");
  add_common(construct);

  CLI::App* solve = app.add_subcommand("solve", "Decide existence of a structure");
  solve->add_option("lie", solve_target, "JSON file or catalog id")->required();
  solve->add_option("--alpha", sflags.alpha, "Shorthand for --param alpha=V");
  solve->add_option("--param", sflags.params, "Catalog parameter k=v (repeatable)");
  solve->add_option("--mode", sflags.mode, "lsa|novikov")->check(CLI::IsMember({"lsa", "novikov"}));
  solve->add_option("--strategy", sflags.strategy, "ansatz_first|full")
      ->check(CLI::IsMember({"ansatz_first", "ansatz-first", "full"}));
  solve->add_option("--degree-cap", sflags.degree_cap, "Gröbner degree cap");
  solve->add_option("--pair-cap", sflags.pair_cap, "Gröbner pair cap");
  solve->add_option("--node-budget", sflags.node_budget, "Witness search nodes per phase");
  solve->add_option("--seed", sflags.seed, "Seed for the randomized search phase");
  solve->add_option("--threads", sflags.threads, "Worker threads for system construction");
  add_common(solve);

  CLI::App* catalog = app.add_subcommand("catalog", "List or dump catalog fixtures");
  catalog->require_subcommand(1);
  CLI::App* list = catalog->add_subcommand("list", "List catalog ids");
  list->add_flag("--json", ctx.json, "JSON output");
  CLI::App* dump = catalog->add_subcommand("dump", "Dump one fixture as JSON");
  dump->add_option("--id", dump_id, "Catalog id")->required();
  dump->add_option("--params", dump_params, "k=v,k=v");
  dump->add_option("--out", ctx.out_path, "Write to this path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*verify) return cmd_verify(ctx, what, sources);
    if (*construct) return cmd_construct(ctx, kind, sources, copt);
    if (*solve) return cmd_solve(ctx, solve_target, sflags);
    if (*list) return cmd_catalog_list(ctx);
    if (*dump) return cmd_catalog_dump(ctx, dump_id, dump_params);
  } catch (const InputError& e) {
    ctx.log.error(e.what());
    return kInputError;
  } catch (const Error& e) {
    ctx.log.error(e.what());
    const std::string k = e.kind();
    if (k == "SchemaError" || k == "MalformedInput" || k == "DimensionMismatch" || k == "UnknownId" ||
        k == "MissingParam")
      return kInputError;
    return kFailed;
  }
  return kInputError;
}

}  // namespace novikov::cli
