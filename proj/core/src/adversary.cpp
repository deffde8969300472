#include <algorithm>

#include "tvgkit/domination.hpp"
#include "tvgkit/engine.hpp"
#include "tvgkit/errors.hpp"
#include "tvgkit/metrics.hpp"
#include "tvgkit/scenarios.hpp"

namespace tvgkit {
namespace {

struct Stable {
  VertexSet set;
  Tick from = 0;
};

// Tick of the last change of the true-set, 0 if it never changed.
Tick last_change(const Trace& trace) {
  auto outputs = trace.initial_outputs;
  VertexSet current = true_set(outputs);
  Tick last = 0;
  for (const auto& ev : trace.events) {
    if (ev.kind != EventKind::kOutputChanged) continue;
    const auto& out = std::get<OutputRef>(ev.subject);
    outputs.insert_or_assign(out.vertex, out.value);
    auto next = true_set(outputs);
    if (next != current) {
      current = std::move(next);
      last = ev.time;
    }
  }
  return last;
}

// Runs the MDST protocol until the true-set has been quiet for `quiet` ticks;
// `from` is the first tick after `after` of the final constant stretch.
Stable stabilize(const Tvg& tvg, Tick after, Tick quiet, int max_extensions) {
  const ProtocolConfig mdst{ProtocolKind::kMdst, std::nullopt, 0};
  Tick horizon = after + quiet + 1;
  for (int attempt = 0; attempt <= max_extensions; ++attempt) {
    const Trace trace = run(tvg, mdst, horizon);
    const Tick last = last_change(trace);
    if (horizon - last > quiet) return {true_set(trace.final_outputs), std::max(last, after + 1)};
    horizon = last + quiet + 1;
  }
  throw GenerationError("MDST output did not stay quiet for " + std::to_string(quiet) + " ticks");
}

}  // namespace

std::size_t AdversaryReport::changed_rounds() const {
  return static_cast<std::size_t>(
      std::count_if(rounds.begin(), rounds.end(), [](const auto& r) { return r.changed; }));
}

AdversaryReport adversary_destabilize(const StaticGraph& underlying, std::size_t max_rounds,
                                      const AdversaryOptions& options) {
  if (!is_connected(underlying)) throw DomainError("adversary needs a connected underlying graph");
  if (find_smds(underlying)) throw DomainError("graph admits SMDS; adversary inapplicable");
  if (options.latency < 1) throw DomainError("adversary latency must be >= 1");

  const Tick quiet = options.quiet_window.value_or(
      std::max<Tick>(2 * static_cast<Tick>(diameter(underlying)) * options.latency, 2));
  const Tvg base = static_tvg(underlying, options.latency);

  AdversaryReport report{{}, base};
  std::vector<EdgeMask> masks;
  // Every edge is present during the first communication step, which ends at
  // tick `latency`.
  Tick alpha = options.latency;
  for (std::size_t round = 0; round < max_rounds; ++round) {
    AdversaryRound r;
    const Tvg current = restrict(base, masks);
    const Stable before = stabilize(current, alpha, quiet, options.max_extensions);
    r.stable_set = before.set;
    r.stable_from = before.from;

    const auto witness = smds_witness(underlying, r.stable_set);
    if (!witness) {
      throw GenerationError("stabilised set " + to_token(r.stable_set) +
                            " leaves no witness; it is not a minimal dominating set");
    }
    r.witness = *witness;
    r.suppressed = dominator_edges(underlying, r.stable_set, r.witness);

    auto open_masks = masks;
    open_masks.push_back({r.suppressed, {r.stable_from + 1, kForever}});
    const Tvg suppressed = restrict(base, open_masks);
    const Stable after = stabilize(suppressed, r.stable_from, quiet, options.max_extensions);
    r.restabilized_set = after.set;
    r.restabilized_from = after.from;
    r.changed = r.restabilized_set != r.stable_set;
    r.restabilized_is_mdst =
        is_minimal_dominating(eventual_underlying_graph(suppressed), r.restabilized_set);

    // Suppression covers ]stable_from, restabilized_from], then the edges return.
    masks.push_back({r.suppressed, {r.stable_from + 1, r.restabilized_from + 1}});
    alpha = r.restabilized_from;
    report.rounds.push_back(std::move(r));
  }
  report.schedule = restrict(base, masks);
  return report;
}

}  // namespace tvgkit
