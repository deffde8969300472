#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "tvgkit/errors.hpp"
#include "tvgkit/static_graph.hpp"

namespace tvgkit::detail {

inline constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

/// Dense view of a StaticGraph: vertex i is the i-th id in the canonical order.
struct IndexedGraph {
  std::vector<VertexId> ids;
  std::vector<std::vector<std::size_t>> adj;

  explicit IndexedGraph(const StaticGraph& g) : ids(g.vertices().begin(), g.vertices().end()) {
    adj.resize(ids.size());
    for (const auto& e : g.edges()) {
      const auto a = index(e.low());
      const auto b = index(e.high());
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
  }

  std::size_t size() const noexcept { return ids.size(); }

  std::size_t index(const VertexId& v) const {
    auto it = std::lower_bound(ids.begin(), ids.end(), v);
    if (it == ids.end() || *it != v) throw DomainError("unknown vertex '" + v.str() + "'");
    return static_cast<std::size_t>(it - ids.begin());
  }

  std::vector<std::size_t> bfs(std::size_t source) const {
    std::vector<std::size_t> dist(size(), kUnreached);
    std::queue<std::size_t> frontier;
    dist[source] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
      const auto u = frontier.front();
      frontier.pop();
      for (auto w : adj[u]) {
        if (dist[w] == kUnreached) {
          dist[w] = dist[u] + 1;
          frontier.push(w);
        }
      }
    }
    return dist;
  }
};

using Mask = std::uint64_t;
inline constexpr std::size_t kMaxMaskVertices = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

inline Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : bit(n) - 1; }

/// Closed-neighbourhood bitmasks, one per vertex. Caps the graph at 64 vertices.
inline std::vector<Mask> closed_neighborhoods(const IndexedGraph& ig) {
  if (ig.size() > kMaxMaskVertices) {
    throw CapacityError("graph has " + std::to_string(ig.size()) +
                        " vertices; domination routines support at most 64");
  }
  std::vector<Mask> closed(ig.size());
  for (std::size_t i = 0; i < ig.size(); ++i) {
    closed[i] = bit(i);
    for (auto w : ig.adj[i]) closed[i] |= bit(w);
  }
  return closed;
}

}  // namespace tvgkit::detail
