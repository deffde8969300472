#include "tvgkit/static_graph.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "indexed_graph.hpp"
#include "tvgkit/errors.hpp"

namespace tvgkit {

Edge::Edge(VertexId a, VertexId b) {
  if (a == b) throw DomainError("self-loop on '" + a.str() + "'");
  if (b < a) std::swap(a, b);
  low_ = std::move(a);
  high_ = std::move(b);
}

const VertexId& Edge::other(const VertexId& v) const {
  if (v == low_) return high_;
  if (v == high_) return low_;
  throw DomainError("'" + v.str() + "' is not an endpoint of " + low_.str() + "-" + high_.str());
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << e.low() << '-' << e.high();
}

StaticGraph::StaticGraph(VertexSet vertices, EdgeSet edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (!vertices_.contains(e.low()) || !vertices_.contains(e.high())) {
      std::ostringstream msg;
      msg << "edge " << e << " has an endpoint outside the vertex set";
      throw DomainError(msg.str());
    }
  }
}

bool StaticGraph::add_edge(const Edge& e) {
  vertices_.insert(e.low());
  vertices_.insert(e.high());
  return edges_.insert(e).second;
}

bool StaticGraph::merge(const StaticGraph& other) {
  const auto before_v = vertices_.size();
  const auto before_e = edges_.size();
  vertices_.insert(other.vertices_.begin(), other.vertices_.end());
  edges_.insert(other.edges_.begin(), other.edges_.end());
  return vertices_.size() != before_v || edges_.size() != before_e;
}

VertexSet StaticGraph::neighbors(const VertexId& v) const {
  VertexSet out;
  for (const auto& e : edges_) {
    if (e.touches(v)) out.insert(e.other(v));
  }
  return out;
}

StaticGraph StaticGraph::without_edges(const EdgeSet& removed) const {
  StaticGraph out;
  out.vertices_ = vertices_;
  std::set_difference(edges_.begin(), edges_.end(), removed.begin(), removed.end(),
                      std::inserter(out.edges_, out.edges_.end()));
  return out;
}

bool StaticGraph::is_subgraph_of(const StaticGraph& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end()) &&
         std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
}

std::string to_token(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : s) {
    if (!first) out += ',';
    out += v.str();
    first = false;
  }
  return out + "}";
}

std::string to_token(const StaticGraph& g) {
  std::string out = "V=";
  bool first = true;
  for (const auto& v : g.vertices()) {
    if (!first) out += ',';
    out += v.str();
    first = false;
  }
  out += ";E=";
  first = true;
  for (const auto& e : g.edges()) {
    if (!first) out += ',';
    out += e.low().str() + "-" + e.high().str();
    first = false;
  }
  return out;
}

bool is_connected(const StaticGraph& g) {
  if (g.vertex_count() == 0) throw DomainError("connectivity of an empty graph is undefined");
  const detail::IndexedGraph ig(g);
  const auto dist = ig.bfs(0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == detail::kUnreached; });
}

StaticGraph connected_component(const StaticGraph& g, const VertexId& v) {
  const detail::IndexedGraph ig(g);
  const auto dist = ig.bfs(ig.index(v));
  StaticGraph out;
  for (std::size_t i = 0; i < ig.size(); ++i) {
    if (dist[i] != detail::kUnreached) out.add_vertex(ig.ids[i]);
  }
  for (const auto& e : g.edges()) {
    if (out.has_vertex(e.low())) out.add_edge(e);
  }
  return out;
}

std::vector<std::pair<VertexId, std::size_t>> hop_distances(const StaticGraph& g,
                                                             const VertexId& source) {
  const detail::IndexedGraph ig(g);
  const auto dist = ig.bfs(ig.index(source));
  std::vector<std::pair<VertexId, std::size_t>> out;
  for (std::size_t i = 0; i < ig.size(); ++i) {
    if (dist[i] != detail::kUnreached) out.emplace_back(ig.ids[i], dist[i]);
  }
  return out;
}

std::size_t diameter(const StaticGraph& g) {
  if (!is_connected(g)) throw DomainError("diameter of a disconnected graph is undefined");
  const detail::IndexedGraph ig(g);
  std::size_t best = 0;
  for (std::size_t s = 0; s < ig.size(); ++s) {
    const auto dist = ig.bfs(s);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

bool is_cut_set(const StaticGraph& g, const EdgeSet& cut) {
  for (const auto& e : cut) {
    if (!g.has_edge(e)) {
      std::ostringstream msg;
      msg << "edge " << e << " is not in the graph";
      throw DomainError(msg.str());
    }
  }
  if (!is_connected(g)) throw DomainError("cut-set test requires a connected graph");
  return !is_connected(g.without_edges(cut));
}

}  // namespace tvgkit
