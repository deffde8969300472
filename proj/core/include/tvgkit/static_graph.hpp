#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "tvgkit/vertex_id.hpp"

namespace tvgkit {

using VertexSet = std::set<VertexId>;

/// Undirected edge stored with its endpoints in increasing id order.
class Edge {
 public:
  Edge(VertexId a, VertexId b);

  const VertexId& low() const noexcept { return low_; }
  const VertexId& high() const noexcept { return high_; }

  bool touches(const VertexId& v) const noexcept { return v == low_ || v == high_; }
  /// The endpoint opposite `v`; `v` must be an endpoint.
  const VertexId& other(const VertexId& v) const;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend std::strong_ordering operator<=>(const Edge&, const Edge&) = default;

 private:
  VertexId low_;
  VertexId high_;
};

using EdgeSet = std::set<Edge>;

std::ostream& operator<<(std::ostream& os, const Edge& e);

/// Simple undirected graph over named vertices. Adding an edge adds its
/// endpoints, so both endpoints of every edge are always vertices.
class StaticGraph {
 public:
  StaticGraph() = default;
  StaticGraph(VertexSet vertices, EdgeSet edges);

  const VertexSet& vertices() const noexcept { return vertices_; }
  const EdgeSet& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool has_vertex(const VertexId& v) const { return vertices_.contains(v); }
  bool has_edge(const Edge& e) const { return edges_.contains(e); }

  void add_vertex(VertexId v) { vertices_.insert(std::move(v)); }
  /// Returns true if the edge was new.
  bool add_edge(const Edge& e);
  /// Union of vertex and edge sets. Returns true if anything was added.
  bool merge(const StaticGraph& other);

  VertexSet neighbors(const VertexId& v) const;
  StaticGraph without_edges(const EdgeSet& removed) const;
  bool is_subgraph_of(const StaticGraph& other) const;

  friend bool operator==(const StaticGraph&, const StaticGraph&) = default;

 private:
  VertexSet vertices_;
  EdgeSet edges_;
};

/// Compact single-token rendering used in traces: `V=a,b;E=a-b`.
std::string to_token(const StaticGraph& g);
std::string to_token(const VertexSet& s);

/// True iff every pair of vertices is joined by a path. Throws DomainError on
/// an empty graph.
bool is_connected(const StaticGraph& g);

/// Vertices reachable from `v` together with the edges among them.
StaticGraph connected_component(const StaticGraph& g, const VertexId& v);

/// Hop distances from `source` (unreachable vertices are absent).
std::vector<std::pair<VertexId, std::size_t>> hop_distances(const StaticGraph& g,
                                                             const VertexId& source);

/// Longest shortest-path hop count. Throws DomainError when disconnected.
std::size_t diameter(const StaticGraph& g);

/// True iff removing `cut` disconnects the connected graph `g`.
/// Throws DomainError if an edge of `cut` is not in `g` or `g` is disconnected.
bool is_cut_set(const StaticGraph& g, const EdgeSet& cut);

}  // namespace tvgkit
