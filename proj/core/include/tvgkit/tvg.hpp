#pragma once

#include <map>
#include <span>
#include <vector>

#include "tvgkit/schedule.hpp"
#include "tvgkit/static_graph.hpp"

namespace tvgkit {

/// Presence and constant crossing latency of one edge.
struct EdgeTiming {
  PresenceSchedule schedule;
  Tick latency = 1;

  friend bool operator==(const EdgeTiming&, const EdgeTiming&) = default;
};

/// Time-varying graph over integer ticks. Every edge of `graph()` has a timing
/// with a non-empty schedule and latency >= 1; an edge that is never present
/// is simply not an edge.
class Tvg {
 public:
  Tvg(StaticGraph graph, std::map<Edge, EdgeTiming> timing, Tick process_latency = 0);

  const StaticGraph& graph() const noexcept { return graph_; }
  const std::map<Edge, EdgeTiming>& timings() const noexcept { return timing_; }
  /// Throws DomainError for an edge outside the graph.
  const EdgeTiming& timing(const Edge& e) const;
  Tick process_latency() const noexcept { return process_latency_; }

  friend bool operator==(const Tvg&, const Tvg&) = default;

 private:
  StaticGraph graph_;
  std::map<Edge, EdgeTiming> timing_;
  Tick process_latency_ = 0;
};

bool presence(const Tvg& tvg, const Edge& e, Tick t);

/// All edges that are present at least once.
StaticGraph underlying_graph(const Tvg& tvg);

/// Vertices with only the recurrent (infinitely often present) edges.
StaticGraph eventual_underlying_graph(const Tvg& tvg);

/// Decided through the eventual underlying graph: recurrent edges give
/// journeys between every pair after any tick exactly when it is connected.
bool is_connected_over_time(const Tvg& tvg);

/// Suppresses presence of `edges` over `window` (end may be kForever).
struct EdgeMask {
  EdgeSet edges;
  Interval window;
};

/// Copy of `tvg` with every mask applied. Presence is only ever removed; an
/// edge whose presence vanishes entirely leaves the graph.
Tvg restrict(const Tvg& tvg, std::span<const EdgeMask> masks);

struct Snapshot {
  Tick time = 0;
  StaticGraph graph;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

/// Topological event times in [0, horizon) with the snapshot holding from
/// each one to the next. Tick 0 is always included.
std::vector<Snapshot> snapshots(const Tvg& tvg, Tick horizon);

}  // namespace tvgkit
