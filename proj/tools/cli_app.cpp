#include "cli_app.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"

#include "cubeconf/complex.hpp"
#include "cubeconf/error.hpp"
#include "cubeconf/graph.hpp"
#include "cubeconf/planner.hpp"
#include "cubeconf/report.hpp"
#include "cubeconf/topology.hpp"

namespace cubeconf::cli {
namespace {

struct Options {
  bool json = false;
  std::string graph;
  int n = 0;
  bool labeled = false;
  bool unlabeled = false;
  std::string field;
  bool surface = false;
  bool npc = false;
  bool compress = false;
  std::size_t budget = kDefaultCellBudget;
  bool serial = false;
  bool no_timing = false;
  std::string start;
  std::string goal;
  std::string out_path;
};

struct LoadedGraph {
  std::shared_ptr<const Graph> graph;
  std::string label;
};

LoadedGraph load_graph(const std::string& source) {
  if (source.empty()) throw Error(ErrorKind::invalid_argument, "--graph is required");
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return {std::make_shared<const Graph>(parse_graph(buffer.str())), source};
  }
  return {std::make_shared<const Graph>(builtin_from_spec(source)), source};
}

Mode mode_of(const Options& o) {
  if (o.labeled && o.unlabeled) throw Error(ErrorKind::invalid_argument, "--labeled and --unlabeled are exclusive");
  return o.unlabeled ? Mode::unlabeled : Mode::labeled;
}

Field field_of(const Options& o, Mode mode) {
  if (o.field.empty()) return mode == Mode::labeled ? Field::rational : Field::f2;
  if (o.field == "q") return Field::rational;
  if (o.field == "f2") return Field::f2;
  throw Error(ErrorKind::invalid_argument, "--field must be q or f2");
}

Execution execution_of(const Options& o) { return o.serial ? Execution::serial : Execution::parallel; }

Configuration parse_config(const Graph& g, const std::string& text) {
  Configuration config;
  std::stringstream in(text);
  std::string name;
  while (std::getline(in, name, ',')) {
    auto v = g.find_vertex(name);
    if (!v) throw Error(ErrorKind::invalid_argument, "unknown vertex '" + name + "'");
    config.push_back(*v);
  }
  return config;
}

template <typename Seq>
std::string join(const Seq& values) {
  std::ostringstream s;
  s << '(';
  bool first = true;
  for (const auto& v : values) {
    if (!first) s << ", ";
    s << v;
    first = false;
  }
  s << ')';
  return s.str();
}

class Session {
 public:
  Session(const Options& o, std::ostream& out, std::ostream& err) : o_(o), out_(out), err_(err) {}

  int emit(const std::string& command, Json result, const std::function<void()>& text) {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started_);
    if (o_.json) {
      Json report;
      report["command"] = command;
      report["inputs"] = inputs();
      report["result"] = std::move(result);
      report["elapsed_ms"] = o_.no_timing ? 0 : elapsed.count();
      out_ << report.dump(2) << '\n';
    } else {
      text();
    }
    return kOk;
  }

  Json inputs() const {
    Json j;
    j["graph"] = o_.graph;
    j["n"] = o_.n;
    j["mode"] = o_.unlabeled ? "unlabeled" : "labeled";
    if (!o_.field.empty()) j["field"] = o_.field;
    if (o_.surface) j["surface"] = true;
    if (o_.npc) j["npc"] = true;
    if (o_.compress) j["compress"] = true;
    if (!o_.start.empty()) j["start"] = o_.start;
    if (!o_.goal.empty()) j["goal"] = o_.goal;
    if (o_.budget != kDefaultCellBudget) j["budget"] = o_.budget;
    return j;
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  const Options& o_;
  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point started_ = std::chrono::steady_clock::now();
};

BuildOptions build_options(const Options& o) {
  BuildOptions b;
  b.budget = o.budget;
  b.execution = execution_of(o);
  return b;
}

int cmd_build(const Options& o, Session& s) {
  const auto loaded = load_graph(o.graph);
  const auto c = build(loaded.graph, o.n, mode_of(o), build_options(o));
  return s.emit("build", complex_json(c), [&] {
    s.out() << "mode: " << mode_name(c.mode()) << "\n"
            << "n: " << c.robots() << "\n"
            << "f_vector: " << join(f_vector(c)) << "\n"
            << "chi: " << euler_characteristic(c) << "\n";
  });
}

int cmd_analyze(const Options& o, Session& s) {
  const auto loaded = load_graph(o.graph);
  const Mode mode = mode_of(o);
  AnalyzeOptions a;
  a.field = field_of(o, mode);
  a.surface = o.surface;
  a.npc = o.npc;
  a.execution = execution_of(o);
  const auto c = build(loaded.graph, o.n, mode, build_options(o));
  const auto report = analyze(c, a);
  return s.emit("analyze", topology_json(report), [&] {
    auto& out = s.out();
    out << "f_vector: " << join(report.f_vector) << "\n"
        << "chi: " << report.chi << "\n"
        << "components: " << report.components << "\n"
        << "betti (" << field_name(report.betti.field) << "): " << join(report.betti.values) << "\n";
    if (report.surface) {
      const auto& sf = *report.surface;
      out << "surface: " << (sf.is_closed_surface ? "closed" : "not a closed surface");
      if (sf.orientable) out << (*sf.orientable ? ", orientable" : ", non-orientable");
      out << (sf.connected ? ", connected" : ", disconnected") << "\n";
      if (sf.genus) out << "genus: " << *sf.genus << "\n";
      if (sf.crosscaps) out << "crosscaps: " << *sf.crosscaps << "\n";
      if (sf.failure_witness) {
        out << "surface witness: cell " << sf.failure_witness->dim << ":" << sf.failure_witness->cell
            << " " << sf.failure_witness->reason << "\n";
      }
    }
    if (report.npc) {
      out << "npc_flag: " << (report.npc->flag ? "true" : "false") << "\n";
      if (report.npc->witness) {
        out << "npc witness: base 0:" << report.npc->witness->base << " clique "
            << join(report.npc->witness->clique) << "\n";
      }
    }
  });
}

void print_sufficiency(std::ostream& out, const Graph& g, const SufficiencyReport& r) {
  out << "n: " << r.n << "\n"
      << "satisfied: " << (r.satisfied ? "true" : "false") << "\n"
      << "condition1_ok: " << (r.condition1_ok ? "true" : "false") << "\n"
      << "condition2_ok: " << (r.condition2_ok ? "true" : "false") << "\n"
      << "vertex_count_ok: " << (r.vertex_count_ok ? "true" : "false") << "\n";
  if (r.witness_path) {
    out << "witness_path: " << g.vertex(r.witness_path->a).name << " - "
        << g.vertex(r.witness_path->b).name << " (" << r.witness_path->edges << " edges)\n";
  }
  if (r.witness_cycle) {
    out << "witness_cycle:";
    for (EdgeId e : r.witness_cycle->edges) out << ' ' << g.edge(e).name;
    out << " (" << r.witness_cycle->length() << " edges)\n";
  }
}

int cmd_check(const Options& o, Session& s) {
  const auto loaded = load_graph(o.graph);
  const auto report = check_sufficiency(*loaded.graph, o.n);
  return s.emit("check", sufficiency_json(*loaded.graph, report),
                [&] { print_sufficiency(s.out(), *loaded.graph, report); });
}

int cmd_subdivide(const Options& o, Session& s) {
  const auto loaded = load_graph(o.graph);
  const int parts = uniform_parts_for(*loaded.graph, o.n);
  const auto text = serialize_graph(subdivide_uniform(*loaded.graph, parts));
  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path);
    if (!file) throw Error(ErrorKind::invalid_argument, "cannot write '" + o.out_path + "'");
    file << text;
  }
  Json result;
  result["parts"] = parts;
  result["out"] = o.out_path.empty() ? Json(nullptr) : Json(o.out_path);
  result["graph"] = text;
  return s.emit("subdivide", std::move(result), [&] {
    if (o.out_path.empty()) {
      s.out() << "# uniform subdivision into " << parts << " parts per edge\n" << text;
    } else {
      s.out() << "parts: " << parts << "\nwrote: " << o.out_path << "\n";
    }
  });
}

int cmd_plan(const Options& o, Session& s) {
  const auto loaded = load_graph(o.graph);
  const Graph& g = *loaded.graph;
  if (o.n >= 2 && !check_sufficiency(g, o.n).satisfied) {
    s.err() << "warning: graph is too coarse for " << o.n
            << " robots; discrete reachability may differ from continuous reachability\n";
  }
  PlanOptions po;
  po.budget = o.budget;
  Plan p = plan(g, o.n, parse_config(g, o.start), parse_config(g, o.goal), po);
  if (o.compress) p = compress(g, p);
  if (auto v = validate(g, o.n, p)) {
    throw std::logic_error("planner emitted an invalid plan at step " + std::to_string(v->step));
  }
  return s.emit("plan", plan_json(g, p, loaded.label), [&] {
    auto& out = s.out();
    out << "total_moves: " << p.total_moves() << "\n"
        << "makespan: " << p.makespan() << "\n";
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
      out << "step " << i + 1 << ":";
      for (const Move& m : p.steps[i]) {
        out << " robot " << m.robot << " " << g.vertex(m.from).name << "->" << g.vertex(m.to).name
            << " via " << g.edge(m.via).name << ";";
      }
      out << "\n";
    }
  });
}

int cmd_dual(const Options& o, Session& s) {
  const auto loaded = load_graph(o.graph);
  BuildOptions b = build_options(o);
  const auto report = duality_compare(*loaded.graph, o.n, b);
  return s.emit("dual", duality_json(report), [&] {
    s.out() << "n: " << report.n << " f_vector: " << join(report.f_vector) << " chi: " << report.chi << "\n"
            << "dual_n: " << report.dual_n << " f_vector: " << join(report.dual_f_vector)
            << " chi: " << report.dual_chi << "\n"
            << "equal_chi: " << (report.equal_chi ? "true" : "false") << "\n";
  });
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::invalid_argument: return kUsage;
    case ErrorKind::parse: return kParse;
    case ErrorKind::budget_exceeded: return kBudget;
    case ErrorKind::self_loop: return kSelfLoop;
    case ErrorKind::unreachable: return kUnreachable;
  }
  return kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Discretized configuration spaces of robots on graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit a JSON run report");
  app.add_option("--graph", o.graph, "Graph file or builtin (Y, Q, X, K5, K33, Upsilon:k, cycle:n, path:n)");
  app.add_option("-n", o.n, "Robot count");
  app.add_flag("--labeled", o.labeled, "Labeled robots (default)");
  app.add_flag("--unlabeled", o.unlabeled, "Unlabeled robots");
  app.add_option("--field", o.field, "Coefficient field for Betti numbers: q or f2");
  app.add_flag("--surface", o.surface, "Classify the complex as a surface");
  app.add_flag("--npc", o.npc, "Check the flag link condition");
  app.add_flag("--compress", o.compress, "Merge plan moves into parallel steps");
  app.add_option("--budget", o.budget, "Cell budget");
  app.add_flag("--serial", o.serial, "Use the serial reference kernels");
  app.add_flag("--no-timing", o.no_timing, "Report elapsed_ms as 0");

  auto* build_cmd = app.add_subcommand("build", "Dump the cube complex");
  auto* analyze_cmd = app.add_subcommand("analyze", "Topological invariants of the complex");
  auto* check_cmd = app.add_subcommand("check", "Check discretization faithfulness");
  auto* subdivide_cmd = app.add_subcommand("subdivide", "Subdivide until faithful");
  subdivide_cmd->add_option("--out", o.out_path, "Output graph file");
  auto* plan_cmd = app.add_subcommand("plan", "Plan collision-free motion");
  plan_cmd->add_option("--start", o.start, "Comma-separated start vertices")->required();
  plan_cmd->add_option("--goal", o.goal, "Comma-separated goal vertices")->required();
  auto* dual_cmd = app.add_subcommand("dual", "Compare tokens and holes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  Session session(o, out, err);
  try {
    if (o.n < 1) throw Error(ErrorKind::invalid_argument, "-n must be at least 1");
    if (*build_cmd) return cmd_build(o, session);
    if (*analyze_cmd) return cmd_analyze(o, session);
    if (*check_cmd) return cmd_check(o, session);
    if (*subdivide_cmd) return cmd_subdivide(o, session);
    if (*plan_cmd) return cmd_plan(o, session);
    if (*dual_cmd) return cmd_dual(o, session);
  } catch (const UnreachableError& e) {
    err << "error: " << e.what() << "\n";
    if (o.json) {
      Json result;
      result["error"] = "unreachable";
      result["start_component"] = e.start_component();
      result["goal_component"] = e.goal_component();
      Json report;
      report["command"] = "plan";
      report["inputs"] = session.inputs();
      report["result"] = std::move(result);
      report["elapsed_ms"] = 0;
      out << report.dump(2) << '\n';
    } else {
      out << "unreachable: start component " << e.start_component() << ", goal component "
          << e.goal_component() << "\n";
    }
    return kUnreachable;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace cubeconf::cli
