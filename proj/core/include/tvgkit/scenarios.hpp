#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tvgkit/static_graph.hpp"
#include "tvgkit/tvg.hpp"

namespace tvgkit {

/// Lower-bound family for underlying-graph computation: vertices p0..p3k, the
/// path p0-...-p3k plus chords {p0,p2k} and {p2k,p3k}. Chords are present
/// during [0,1) only, path edges from tick 1 on, all latencies 1.
///
/// For k = 1 the chord {p2,p3} is also a path edge; it is then present from
/// tick 0 on, which keeps g_1 connected over time.
Tvg generate_gk(int k);

struct RandomCotParams {
  std::size_t nodes = 6;
  double extra_edge_probability = 0.3;  ///< per non-tree vertex pair
  double missing_fraction = 0.3;        ///< of the non-bridge edges
  Tick horizon = 200;                   ///< every edge first appears before horizon/4
  std::uint64_t seed = 1;
};

/// Random connected-over-time scenario: random spanning tree plus extra edges;
/// a fraction of the non-bridge edges become eventually missing (finite
/// presence only) while the recurrent rest stays connected. Recurrent edges
/// get a periodic tail whose occurrences are at least one latency long.
/// Throws GenerationError when the constraints cannot be met.
Tvg generate_random_cot(const RandomCotParams& params);

/// "path", "cycle", "star" (centre p1), "complete" or "tree_random", with
/// vertices p1..pn. `seed` is only used by tree_random.
StaticGraph named_graph(std::string_view name, std::size_t n, std::uint64_t seed = 1);

/// Every edge of `g` present from tick 0 on with the given latency.
Tvg static_tvg(const StaticGraph& g, Tick latency = 1);

// ---------------------------------------------------------------------------
// Adaptive adversary against the MDST protocol.

struct AdversaryOptions {
  /// Output is considered stable after this many ticks without a change of
  /// the true-set. Default: 2 x diameter x latency.
  std::optional<Tick> quiet_window;
  Tick latency = 1;
  /// Horizon extensions allowed while waiting for a quiet window.
  int max_extensions = 64;
};

struct AdversaryRound {
  VertexSet stable_set;  ///< true-set after stabilising on the current schedule
  Tick stable_from = 0;  ///< first tick of that stable suffix
  VertexId witness;      ///< dominated process whose dominator edges are no cut-set
  EdgeSet suppressed;    ///< the witness's dominator edges
  VertexSet restabilized_set;  ///< true-set after suppressing from stable_from + 1 on
  Tick restabilized_from = 0;
  bool changed = false;  ///< restabilized_set != stable_set
  /// Whether restabilized_set is a minimal dominating set of the eventual
  /// underlying graph of the suppressed schedule.
  bool restabilized_is_mdst = false;
};

struct AdversaryReport {
  std::vector<AdversaryRound> rounds;
  Tvg schedule;  ///< base schedule with every closed suppression window applied

  std::size_t changed_rounds() const;
};

/// Starts from all edges always present. Each round stabilises the MDST
/// protocol, picks a witness against the stable set, suppresses its dominator
/// edges until the output settles again, then restores them.
///
/// Throws DomainError("graph admits SMDS; adversary inapplicable") when
/// `underlying` has a strong minimal dominating set.
AdversaryReport adversary_destabilize(const StaticGraph& underlying, std::size_t max_rounds,
                                      const AdversaryOptions& options = {});

}  // namespace tvgkit
