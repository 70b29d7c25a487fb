#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "spider/demos.hpp"
#include "spider/serialize.hpp"
#include "spider/solvers.hpp"

namespace {

// Exit code contract: 0 result found, 1 valid run with a negative result,
// 2 usage error, 3 input error.
constexpr int kFound = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInput = 3;

struct CommonOpts {
  std::string graph_file;
  std::string format = "auto";
  std::string mode = "bfs";
  std::string trace_path;
  std::uint64_t budget = 0;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_mode = true) {
  cmd->add_option("graph", opts.graph_file, "edge-list or DIMACS graph file")
      ->required();
  cmd->add_option("--format", opts.format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "dimacs"}));
  if (with_mode) {
    cmd->add_option("--mode", opts.mode, "overlay mode")
        ->check(CLI::IsMember({"bfs", "enumerate"}));
  }
  cmd->add_option("--budget", opts.budget, "step budget override");
  cmd->add_flag("--json", opts.json, "machine-readable output");
  cmd->add_option("--trace", opts.trace_path, "write a JSONL engine trace");
}

spider::Graph load(const CommonOpts& opts) {
  auto format = spider::GraphFormat::autodetect;
  if (opts.format == "edgelist") format = spider::GraphFormat::edgelist;
  if (opts.format == "dimacs") format = spider::GraphFormat::dimacs;
  return spider::load_graph(opts.graph_file, format);
}

spider::SolverOptions solver_options(const CommonOpts& opts) {
  spider::SolverOptions s;
  if (opts.budget > 0) s.budget = opts.budget;
  s.mode = opts.mode == "enumerate" ? spider::OverlayMode::enumerate_all
                                    : spider::OverlayMode::bfs;
  s.keep_engine = !opts.trace_path.empty();
  return s;
}

void write_trace(const CommonOpts& opts, const std::optional<spider::Engine>& e) {
  if (opts.trace_path.empty()) return;
  std::ofstream out(opts.trace_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + opts.trace_path);
  out << spider::trace_to_jsonl(*e);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

int run_shortest_path(const CommonOpts& opts, const std::string& source,
                      const std::string& destination) {
  spider::Graph g = load(opts);
  if (!g.has_vertex(source) || !g.has_vertex(destination)) {
    std::cerr << "error: unknown vertex\n";
    return kUsage;
  }
  auto out = spider::shortest_path(g, source, destination, solver_options(opts));
  write_trace(opts, out.engine);
  if (opts.json) {
    if (out.result) {
      std::cout << spider::to_json(*out.result, out.stats).dump() << '\n';
    } else {
      std::cout << nlohmann::json{{"found", false}}.dump() << '\n';
    }
  } else if (out.result) {
    std::cout << "distance " << out.result->distance << '\n'
              << "path " << join(out.result->vertices) << '\n'
              << "amplitude " << out.result->arrival_amplitude << '\n'
              << "steps " << out.result->arrival_step << '\n'
              << "signals " << out.stats.signals_created << '\n';
  } else {
    std::cout << "no path\n";
  }
  return out.result ? kFound : kNegative;
}

int run_ham_cycle(const CommonOpts& opts, const std::string& start) {
  spider::Graph g = load(opts);
  if (!g.has_vertex(start)) {
    std::cerr << "error: unknown vertex\n";
    return kUsage;
  }
  auto out = spider::hamiltonian_cycle(g, start, solver_options(opts));
  write_trace(opts, out.engine);
  if (opts.json) {
    if (out.result) {
      std::cout << spider::to_json(*out.result, out.stats).dump() << '\n';
    } else {
      std::cout << nlohmann::json{{"found", false}}.dump() << '\n';
    }
  } else if (out.result) {
    std::cout << "cycle " << join(out.result->vertices) << '\n'
              << "weight " << out.result->total_weight << '\n'
              << "steps " << out.result->arrival_step << '\n'
              << "signals " << out.stats.signals_created << '\n';
  } else {
    std::cout << "none\n";
  }
  return out.result ? kFound : kNegative;
}

int run_demo(const std::string& name, int length, const std::string& amplitude,
             std::uint64_t steps, const std::string& out_path) {
  auto frames = spider::run_demo(name, length, spider::BigInt(amplitude), steps);
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + out_path);
    out = &file;
  }
  for (const auto& frame : frames) *out << frame;
  return kFound;
}

int run_trace(const CommonOpts& opts, const std::string& solver,
              const std::string& source, const std::string& destination,
              const std::string& output) {
  CommonOpts with_trace = opts;
  with_trace.trace_path = output;
  if (solver == "shortest-path") {
    return run_shortest_path(with_trace, source, destination);
  }
  return run_ham_cycle(with_trace, source);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"signal-propagation network simulator and graph solvers"};
  app.require_subcommand(1);

  CommonOpts sp_opts, hc_opts, tr_opts;
  std::string source, destination, start;
  std::string tr_solver, tr_source, tr_destination, tr_output;
  std::string demo_name, demo_amplitude = "1", demo_out;
  int demo_length = 1;
  std::uint64_t demo_steps = 12;

  auto* sp = app.add_subcommand("shortest-path", "minimum-weight path query");
  add_common(sp, sp_opts);
  sp->add_option("source", source)->required();
  sp->add_option("destination", destination)->required();

  auto* hc = app.add_subcommand("ham-cycle", "Hamiltonian cycle search");
  add_common(hc, hc_opts, false);
  hc->add_option("start", start)->required();

  auto* demo = app.add_subcommand("demo", "built-in relay loop demos");
  demo->add_option("name", demo_name, "demo name")
      ->required()
      ->check(CLI::IsMember({"bounce-loop", "alternating-loop",
                             "degrading-loop", "dalembert-line"}));
  demo->add_option("--length", demo_length, "array length / line half-width");
  demo->add_option("--amplitude", demo_amplitude, "injected amplitude");
  demo->add_option("--steps", demo_steps, "steps to render");
  demo->add_option("--output", demo_out, "frame file (default stdout)");

  auto* tr = app.add_subcommand("trace", "run a solver, write a JSONL trace");
  add_common(tr, tr_opts);
  tr->add_option("solver", tr_solver)
      ->required()
      ->check(CLI::IsMember({"shortest-path", "ham-cycle"}));
  tr->add_option("source", tr_source, "source (or cycle start)")->required();
  tr->add_option("destination", tr_destination, "destination vertex");
  tr->add_option("output", tr_output, "trace file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kFound : kUsage;
  }

  try {
    if (sp->parsed()) return run_shortest_path(sp_opts, source, destination);
    if (hc->parsed()) return run_ham_cycle(hc_opts, start);
    if (demo->parsed()) {
      return run_demo(demo_name, demo_length, demo_amplitude, demo_steps,
                      demo_out);
    }
    if (tr->parsed()) {
      if (tr_solver == "shortest-path" && tr_destination.empty()) {
        std::cerr << "error: shortest-path trace needs a destination\n";
        return kUsage;
      }
      return run_trace(tr_opts, tr_solver, tr_source, tr_destination,
                       tr_output);
    }
  } catch (const spider::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}
