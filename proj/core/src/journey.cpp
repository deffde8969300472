#include "tvgkit/journey.hpp"

#include <queue>

#include "indexed_graph.hpp"
#include "tvgkit/errors.hpp"

namespace tvgkit {

bool is_journey(const Tvg& tvg, const Journey& journey, const VertexId& from, const VertexId& to) {
  VertexId at = from;
  std::optional<Tick> ready;
  for (const auto& hop : journey.hops) {
    if (!tvg.graph().has_edge(hop.edge) || !hop.edge.touches(at)) return false;
    if (ready && hop.departure < *ready) return false;
    const auto& timing = tvg.timing(hop.edge);
    if (!timing.schedule.present(hop.departure)) return false;
    ready = hop.departure + timing.latency;
    at = hop.edge.other(at);
  }
  return at == to;
}

std::optional<Tick> earliest_arrival(const Tvg& tvg, const VertexId& from, const VertexId& to,
                                     Tick after, HopRule rule) {
  const detail::IndexedGraph ig(tvg.graph());
  const auto source = ig.index(from);
  const auto target = ig.index(to);

  // Earliest departure is monotone in the ready time, so a label-setting
  // search over arrival ticks is exact.
  std::vector<Tick> best(ig.size(), kForever);
  using Entry = std::pair<Tick, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  best[source] = after;
  open.emplace(after, source);
  while (!open.empty()) {
    const auto [arrival, u] = open.top();
    open.pop();
    if (arrival != best[u]) continue;
    if (u == target) return arrival;
    for (auto w : ig.adj[u]) {
      const auto& timing = tvg.timing(Edge(ig.ids[u], ig.ids[w]));
      const Tick window = rule == HopRule::kDeliverable ? timing.latency : 1;
      const auto departure = timing.schedule.earliest_window(arrival, window);
      if (!departure) continue;
      const Tick reached = *departure + timing.latency;
      if (reached < best[w]) {
        best[w] = reached;
        open.emplace(reached, w);
      }
    }
  }
  return std::nullopt;
}

}  // namespace tvgkit
