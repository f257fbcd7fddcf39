#include "cli.hpp"

#include <CLI/CLI.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "maxdom/errors.hpp"
#include "maxdom/generators.hpp"
#include "maxdom/geometric_solver.hpp"
#include "maxdom/interval_solver.hpp"
#include "maxdom/io.hpp"
#include "maxdom/oracle.hpp"
#include "maxdom/reductions.hpp"

namespace maxdom::cli {

namespace {

enum class Engine { kAuto, kIntervalFast, kIntervalRef, kGeometric, kOracle };

const std::map<std::string, Engine> kEngines = {
    {"auto", Engine::kAuto},           {"interval-fast", Engine::kIntervalFast}, {"interval-ref", Engine::kIntervalRef},
    {"geometric", Engine::kGeometric}, {"oracle", Engine::kOracle},
};

std::string engine_name(Engine e) {
  for (const auto& [name, value] : kEngines) {
    if (value == e) return name;
  }
  return "auto";
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes to a sibling temp file first so a failed run never leaves half a file behind.
void deliver(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    out.flush();
    return;
  }
  const std::filesystem::path target(out_path);
  std::filesystem::path tmp = target;
  tmp += ".partial";
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw InvalidInput("cannot write " + out_path);
    file << text;
    file.close();
    if (!file) {
      std::filesystem::remove(tmp);
      throw InvalidInput("cannot write " + out_path);
    }
  }
  std::filesystem::rename(tmp, target);
}

Engine resolve(Engine e, const Instance& inst) {
  if (e != Engine::kAuto) return e;
  if (is_interval(inst.kind)) return Engine::kIntervalFast;
  if (is_geometric(inst.kind)) return Engine::kGeometric;
  return Engine::kOracle;
}

KSetSolver kset_solver_for(const Instance& inst, Engine e) {
  switch (e) {
    case Engine::kIntervalFast:
    case Engine::kIntervalRef: {
      if (!is_interval(inst.kind)) {
        throw InvalidInput("engine " + engine_name(e) + " needs an interval instance, got " +
                           std::string(to_string(inst.kind)));
      }
      const auto engine = e == Engine::kIntervalFast ? IntervalEngine::kRangeMaxTree : IntervalEngine::kDirectScan;
      auto layout = std::make_shared<IntervalLayout>(normalize_layout(inst.intervals));
      return [layout, engine](const Graph&, int k) { return solve_intervals(*layout, k, engine); };
    }
    case Engine::kGeometric: {
      if (!is_geometric(inst.kind)) {
        throw InvalidInput("engine geometric needs a geometric instance, got " + std::string(to_string(inst.kind)));
      }
      GeometricOptions options;
      options.decomposition = DecompositionConfig::from_env();
      const GeometricInstance geo = inst.geometric;
      return [geo, options](const Graph&, int k) { return solve_geometric(geo, k, options); };
    }
    case Engine::kOracle:
    case Engine::kAuto:
      break;
  }
  return oracle_kset_solver(OracleConfig::from_env());
}

struct Query {
  std::string in = "-";
  std::string out;
  std::optional<int> k;
  std::optional<double> alpha;
};

void add_query_options(CLI::App* sub, Query& q) {
  sub->add_option("--in", q.in, "instance file, - for stdin")->required();
  sub->add_option("--out", q.out, "result file (default stdout)");
  auto* query = sub->add_option_group("query", "exactly one of --k and --alpha");
  query->add_option("--k", q.k, "size of the chosen set")->check(CLI::NonNegativeNumber);
  query->add_option("--alpha", q.alpha, "coverage fraction in (0, 1]");
  query->require_option(1);
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

ResultFile answer(const Instance& inst, const Query& q, const KSetSolver& solver, const std::string& name) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = instance_graph(inst);
  ResultFile r;
  r.digest = instance_digest(inst);
  r.solver = name;
  if (q.k) {
    const SolveResult s = solver(g, *q.k);
    r.k = *q.k;
    r.nbd_size = s.nbd_size;
    r.chosen = s.chosen.members();
    r.per_k = s.per_k;
  } else {
    const SolveResult s = partial_via_kset(solver, g, *q.alpha);
    r.alpha = *q.alpha;
    r.gamma = static_cast<int>(s.chosen.size());
    r.chosen = s.chosen.members();
  }
  r.wall_ms = elapsed_ms(start);
  return r;
}

Cnf2 read_cnf(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Instance inst = parse_instance(text);
    if (inst.kind != InstanceKind::kCnf2) throw InvalidInput("expected a cnf2 instance");
    return *inst.cnf;
  }
  return parse_dimacs_cnf2(text);
}

Instance graph_instance(Graph g) {
  Instance inst;
  inst.kind = InstanceKind::kGraph;
  inst.graph = std::move(g);
  return inst;
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum dominating k-set and partial domination solvers"};
  app.name("maxdom");
  app.require_subcommand(1);

  Query solve_q;
  std::string engine_text = "auto";
  auto* solve = app.add_subcommand("solve", "solve a k-set or alpha query");
  add_query_options(solve, solve_q);
  solve->add_option("--engine", engine_text)->check(CLI::IsMember({"auto", "interval-fast", "interval-ref", "geometric", "oracle"}));

  Query oracle_q;
  auto* oracle = app.add_subcommand("oracle", "solve by exhaustive enumeration");
  add_query_options(oracle, oracle_q);

  std::string gen_kind;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  GenParams gp;
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"graph", "intervals", "unit_intervals", "unit_squares", "unit_disks", "rects_unit_height",
                             "disks", "cnf2"}));
  gen->add_option("--n", gen_n, "number of nodes, intervals or objects")->default_val(10);
  gen->add_option("--seed", gen_seed)->default_val(1);
  gen->add_option("--out", gen_out);
  gen->add_option("--p", gp.edge_probability)->capture_default_str();
  gen->add_option("--max-length", gp.max_length)->capture_default_str();
  gen->add_option("--theta", gp.theta_deg, "line angle in degrees")->capture_default_str();
  gen->add_option("--intercept", gp.intercept)->capture_default_str();
  gen->add_option("--spread", gp.spread)->capture_default_str();
  gen->add_option("--max-width", gp.max_width)->capture_default_str();
  gen->add_option("--D", gp.max_diameter)->capture_default_str();
  gen->add_option("--delta", gp.min_diameter)->capture_default_str();
  gen->add_option("--vars", gp.num_vars)->capture_default_str();
  gen->add_option("--clauses", gp.num_clauses)->capture_default_str();

  std::string red_mode;
  std::string red_in = "-";
  std::string red_out;
  std::optional<int> red_k;
  std::optional<double> red_alpha;
  std::optional<int> red_r;
  bool red_sat = false;
  bool red_max2sat = false;
  auto* reduce = app.add_subcommand("reduce", "apply a reduction");
  reduce->add_option("--mode", red_mode)
      ->required()
      ->check(CLI::IsMember({"pad", "gc", "kset-from-partial", "partial-from-kset", "defect"}));
  reduce->add_option("--in", red_in, "instance file (gc also takes DIMACS)")->required();
  reduce->add_option("--out", red_out);
  reduce->add_option("--k", red_k)->check(CLI::NonNegativeNumber);
  reduce->add_option("--alpha", red_alpha);
  reduce->add_option("--r", red_r)->check(CLI::NonNegativeNumber);
  auto* sat_flag = reduce->add_flag("--sat", red_sat, "gc: decide satisfiability");
  reduce->add_flag("--max2sat", red_max2sat, "gc: maximum satisfiable clauses")->excludes(sat_flag);

  std::string ver_in;
  std::string ver_result;
  auto* verify = app.add_subcommand("verify", "re-check a result file");
  verify->add_option("--in", ver_in)->required();
  verify->add_option("--result", ver_result)->required();

  std::string bench_suite = "unit-intervals";
  int bench_n = 100000;
  int bench_k = 50;
  std::uint64_t bench_seed = 1;
  std::string bench_engine = "interval-fast";
  auto* bench = app.add_subcommand("bench", "time one solve and print a single line");
  bench->add_option("--suite", bench_suite)->check(CLI::IsMember({"unit-intervals", "intervals"}))->capture_default_str();
  bench->add_option("--n", bench_n)->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--k", bench_k)->check(CLI::NonNegativeNumber)->capture_default_str();
  bench->add_option("--seed", bench_seed)->capture_default_str();
  bench->add_option("--engine", bench_engine)->check(CLI::IsMember({"interval-fast", "interval-ref"}))->capture_default_str();

  std::string dot_in = "-";
  std::string dot_out;
  auto* dot = app.add_subcommand("export-dot", "write the (intersection) graph as DOT");
  dot->add_option("--in", dot_in)->required();
  dot->add_option("--out", dot_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed() || oracle->parsed()) {
      const Query& q = solve->parsed() ? solve_q : oracle_q;
      const Instance inst = parse_instance(read_input(q.in));
      const Engine engine = oracle->parsed() ? Engine::kOracle : resolve(kEngines.at(engine_text), inst);
      const ResultFile r = answer(inst, q, kset_solver_for(inst, engine), engine_name(engine));
      deliver(emit_result(r), q.out, out);
      return kExitOk;
    }

    if (gen->parsed()) {
      deliver(emit_instance(generate(instance_kind_from_string(gen_kind), gen_n, gen_seed, gp)), gen_out, out);
      return kExitOk;
    }

    if (reduce->parsed()) {
      const std::string text = read_input(red_in);
      const auto need = [&](bool present, const char* flag) {
        if (!present) throw InvalidInput("reduce --mode " + red_mode + " needs " + flag);
      };
      if (red_mode == "gc") {
        const Cnf2 cnf = read_cnf(text);
        const KSetSolver oracle_solver = oracle_kset_solver(OracleConfig::from_env());
        std::ostringstream s;
        if (red_sat) {
          s << "satisfiable=" << (gc_sat_decision(cnf, oracle_solver) ? "true" : "false") << '\n';
        } else if (red_max2sat) {
          s << "max_satisfied=" << max2sat_via_kset(cnf, oracle_solver) << '\n';
        } else {
          s << emit_instance(graph_instance(build_gc(cnf).graph));
        }
        deliver(s.str(), red_out, out);
        return kExitOk;
      }
      const Instance inst = parse_instance(text);
      const Graph g = instance_graph(inst);
      const OracleConfig config = OracleConfig::from_env();
      if (red_mode == "pad") {
        need(red_alpha.has_value(), "--alpha");
        deliver(emit_instance(graph_instance(pad_for_partial(g, *red_alpha))), red_out, out);
      } else if (red_mode == "defect") {
        need(red_r.has_value(), "--r");
        deliver("defect=" + std::to_string(domination_defect(g, *red_r, config)) + "\n", red_out, out);
      } else if (red_mode == "kset-from-partial") {
        need(red_k.has_value(), "--k");
        const PartialSolver partial = oracle_partial_solver(config);
        const KSetSolver via = [partial](const Graph& graph, int k) { return kset_via_partial(partial, graph, k); };
        deliver(emit_result(answer(inst, Query{red_in, red_out, red_k, std::nullopt}, via, "kset-from-partial")),
                red_out, out);
      } else {
        need(red_alpha.has_value(), "--alpha");
        const ResultFile r =
            answer(inst, Query{red_in, red_out, std::nullopt, red_alpha}, oracle_kset_solver(config), "partial-from-kset");
        deliver(emit_result(r), red_out, out);
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const Instance inst = parse_instance(read_input(ver_in));
      const ResultFile r = parse_result(read_input(ver_result));
      const VerifyReport report = verify_result(inst, r);
      if (!report.ok) {
        for (const auto& p : report.problems) err << "verify: " << p << '\n';
        return kExitVerify;
      }
      out << "ok\n";
      return kExitOk;
    }

    if (bench->parsed()) {
      const auto kind = bench_suite == "unit-intervals" ? InstanceKind::kUnitIntervals : InstanceKind::kIntervals;
      const Instance inst = generate(kind, bench_n, bench_seed);
      const auto engine = bench_engine == "interval-fast" ? IntervalEngine::kRangeMaxTree : IntervalEngine::kDirectScan;
      const auto start = std::chrono::steady_clock::now();
      const SolveResult r = solve_intervals(normalize_layout(inst.intervals), bench_k, engine);
      const double ms = elapsed_ms(start);
      std::ostringstream s;
      s << "suite=" << bench_suite << " n=" << bench_n << " k=" << bench_k << " millis=" << std::fixed
        << std::setprecision(3) << ms << " nbd_size=" << r.nbd_size << '\n';
      deliver(s.str(), "", out);
      return kExitOk;
    }

    if (dot->parsed()) {
      deliver(to_dot(instance_graph(parse_instance(read_input(dot_in)))), dot_out, out);
      return kExitOk;
    }
  } catch (const SchemaError& e) {
    for (const auto& v : e.violations()) err << "schema: " << v << '\n';
    return kExitSchema;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitSchema;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace maxdom::cli
