// tvgkit command-line front end.
//
// Exit codes: 0 success, 1 usage or parse error, 2 domain error,
// 3 not converged within the horizon.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tvgkit/domination.hpp"
#include "tvgkit/engine.hpp"
#include "tvgkit/errors.hpp"
#include "tvgkit/graph_io.hpp"
#include "tvgkit/journey.hpp"
#include "tvgkit/metrics.hpp"
#include "tvgkit/scenario_io.hpp"
#include "tvgkit/scenarios.hpp"

namespace {

using namespace tvgkit;

enum Exit : int { kOk = 0, kUsage = 1, kDomain = 2, kNotConverged = 3 };

// Thrown for bad command-line values that CLI11 cannot see (unknown vertex ids).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

VertexId vertex_arg(const Tvg& tvg, const std::string& name, const char* flag) {
  if (!VertexId::is_valid_name(name) || !tvg.graph().has_vertex(VertexId(name))) {
    throw UsageError(std::string(flag) + ": unknown vertex '" + name + "'");
  }
  return VertexId(name);
}

std::string edges_token(const EdgeSet& edges) {
  std::string out = "{";
  for (const auto& e : edges) {
    if (out.size() > 1) out += ',';
    out += e.low().str() + "-" + e.high().str();
  }
  return out + "}";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'", 0);
  out << text;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
  std::string graph;
  bool all_mds = false;
  bool smds = false;
};

int cmd_analyze(const AnalyzeArgs& a) {
  const StaticGraph g = load_graph(a.graph);
  std::cout << "vertices: " << g.vertex_count() << "\n"
            << "edges: " << g.edge_count() << "\n";
  const bool connected = is_connected(g);
  std::cout << "connected: " << (connected ? "yes" : "no") << "\n";
  if (connected) {
    std::cout << "diameter: " << diameter(g) << "\n";
  } else {
    std::cout << "notice: graph is disconnected; diameter and SMDS analysis skipped\n";
  }
  if (a.all_mds) {
    const auto all = enumerate_minimal_dominating_sets(g);
    std::cout << "minimal dominating sets: " << all.size() << "\n";
    for (const auto& m : all) std::cout << "  " << to_token(m) << "\n";
  }
  if (a.smds && connected) {
    std::optional<VertexSet> found;
    for_each_minimal_dominating_set(g, [&](const VertexSet& m) {
      if (const auto w = smds_witness(g, m)) {
        std::cout << "  candidate " << to_token(m) << ": witness " << *w << ", dominator edges "
                  << edges_token(dominator_edges(g, m, *w)) << " not a cut-set\n";
        return true;
      }
      std::cout << "  candidate " << to_token(m) << ": every dominator edge set is a cut-set\n";
      found = m;
      return false;
    });
    if (found) {
      std::cout << "SMDS: " << to_token(*found) << "\n";
    } else {
      std::cout << "no strong minimal dominating set\n";
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct SimulateArgs {
  std::string scenario;
  std::string protocol;
  Tick horizon = 100;
  std::string trace;
  bool metrics = false;
  std::string origin;
  Tick request = 0;
};

int cmd_simulate(const SimulateArgs& a) {
  const Tvg tvg = load_scenario(a.scenario);
  std::optional<VertexId> origin;
  if (!a.origin.empty()) origin = vertex_arg(tvg, a.origin, "--origin");
  const ProtocolConfig config = parse_protocol(a.protocol, origin, a.request);
  if (a.horizon <= 0) throw UsageError("--horizon must be positive");

  const Trace trace = run(tvg, config, a.horizon);
  if (!a.trace.empty()) emit(serialize(trace), a.trace);

  std::optional<ComplexityReport> report;
  try {
    report = measure(tvg, config, trace);
  } catch (const NotConvergedError& e) {
    if (!a.metrics) {
      for (const auto& [v, out] : trace.final_outputs) std::cout << v << " " << to_token(out) << "\n";
    }
    throw;
  }
  if (a.metrics) {
    std::cout << to_json(*report) << "\n";
    return kOk;
  }
  for (const auto& [v, out] : trace.final_outputs) std::cout << v << " " << to_token(out) << "\n";
  std::cout << "converged at tick " << report->convergence_tick << "\n";
  return kOk;
}

// ---------------------------------------------------------------------------

struct JourneyArgs {
  std::string scenario;
  std::string from;
  std::string to;
  Tick after = 0;
  bool deliverable = false;
};

int cmd_journey(const JourneyArgs& a) {
  const Tvg tvg = load_scenario(a.scenario);
  const VertexId from = vertex_arg(tvg, a.from, "--from");
  const VertexId to = vertex_arg(tvg, a.to, "--to");
  if (a.after < 0) throw UsageError("--after must be non-negative");
  const auto rule = a.deliverable ? HopRule::kDeliverable : HopRule::kPresentAtDeparture;
  const auto arrival = earliest_arrival(tvg, from, to, a.after, rule);
  if (arrival) {
    std::cout << *arrival << "\n";
  } else {
    std::cout << "none\n";
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct GenerateArgs {
  int k = 1;
  RandomCotParams random;
  std::string out;
};

struct AdversaryArgs {
  std::string graph;
  std::size_t rounds = 3;
  std::optional<Tick> quiet;
  Tick latency = 1;
};

int cmd_adversary(const AdversaryArgs& a) {
  const StaticGraph g = load_graph(a.graph);
  AdversaryOptions options;
  options.quiet_window = a.quiet;
  options.latency = a.latency;
  const auto report = adversary_destabilize(g, a.rounds, options);
  for (std::size_t i = 0; i < report.rounds.size(); ++i) {
    const auto& r = report.rounds[i];
    std::cout << "round " << i << ": stable " << to_token(r.stable_set) << " from " << r.stable_from
              << "; witness " << r.witness << "; suppress " << edges_token(r.suppressed)
              << "; restabilized " << to_token(r.restabilized_set) << " from "
              << r.restabilized_from << "; changed " << (r.changed ? "yes" : "no")
              << "; mds of eventual graph " << (r.restabilized_is_mdst ? "yes" : "no") << "\n";
  }
  std::cout << "changed rounds: " << report.changed_rounds() << "/" << report.rounds.size() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-varying graph analysis and protocol simulation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tvgkit 0.1.0");

  AnalyzeArgs analyze;
  auto* an = app.add_subcommand("analyze", "Connectivity, diameter and dominating sets of a graph");
  an->add_option("graph", analyze.graph, "Graph file")->required();
  an->add_flag("--all-mds", analyze.all_mds, "List all minimal dominating sets in canonical order");
  an->add_flag("--smds", analyze.smds, "Search for a strong minimal dominating set");

  SimulateArgs simulate;
  auto* sim = app.add_subcommand("simulate", "Run a protocol over a scenario");
  sim->add_option("scenario", simulate.scenario, "Scenario JSON file")->required();
  sim->add_option("--protocol", simulate.protocol, "ug, mdst or flood")->required();
  sim->add_option("--horizon", simulate.horizon, "Simulated ticks")->capture_default_str();
  sim->add_option("--trace", simulate.trace, "Write the trace here ('-' for stdout)");
  sim->add_flag("--metrics", simulate.metrics, "Print the complexity report as JSON");
  sim->add_option("--origin", simulate.origin, "Broadcast origin (flood)");
  sim->add_option("--request", simulate.request, "Broadcast request tick (flood)")
      ->capture_default_str();

  JourneyArgs journey;
  auto* jn = app.add_subcommand("journey", "Earliest arrival between two vertices");
  jn->add_option("scenario", journey.scenario, "Scenario JSON file")->required();
  jn->add_option("--from", journey.from)->required();
  jn->add_option("--to", journey.to)->required();
  jn->add_option("--after", journey.after, "Earliest departure tick")->capture_default_str();
  jn->add_flag("--deliverable", journey.deliverable,
               "Require each edge present for its whole latency");

  GenerateArgs generate;
  auto* gen = app.add_subcommand("generate", "Write a generated scenario");
  gen->require_subcommand(1);
  auto* gk = gen->add_subcommand("gk", "Lower-bound family g_k");
  gk->add_option("--k", generate.k)->required();
  gk->add_option("-o,--output", generate.out, "Output file (default stdout)");
  auto* rnd = gen->add_subcommand("random", "Random connected-over-time scenario");
  rnd->add_option("--nodes", generate.random.nodes)->capture_default_str();
  rnd->add_option("--extra", generate.random.extra_edge_probability)->capture_default_str();
  rnd->add_option("--missing", generate.random.missing_fraction)->capture_default_str();
  rnd->add_option("--seed", generate.random.seed)->capture_default_str();
  rnd->add_option("--horizon", generate.random.horizon)->capture_default_str();
  rnd->add_option("-o,--output", generate.out, "Output file (default stdout)");

  AdversaryArgs adversary;
  auto* adv = app.add_subcommand("adversary", "Destabilise the MDST protocol on a graph");
  adv->add_option("--graph", adversary.graph, "Graph file")->required();
  adv->add_option("--rounds", adversary.rounds)->capture_default_str();
  adv->add_option("--quiet", adversary.quiet, "Quiet window in ticks");
  adv->add_option("--latency", adversary.latency)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*an) return cmd_analyze(analyze);
    if (*sim) return cmd_simulate(simulate);
    if (*jn) return cmd_journey(journey);
    if (*gk) {
      emit(format_scenario(generate_gk(generate.k)), generate.out);
      return kOk;
    }
    if (*rnd) {
      emit(format_scenario(generate_random_cot(generate.random)), generate.out);
      return kOk;
    }
    if (*adv) return cmd_adversary(adversary);
  } catch (const NotConvergedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotConverged;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    // DomainError, CapacityError, GenerationError.
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
