#include "tvgkit/domination.hpp"

#include <bit>
#include <numeric>

#include "indexed_graph.hpp"
#include "tvgkit/errors.hpp"

namespace tvgkit {
namespace {

using detail::bit;
using detail::Mask;

Mask to_mask(const detail::IndexedGraph& ig, const VertexSet& m) {
  Mask out = 0;
  for (const auto& v : m) out |= bit(ig.index(v));
  return out;
}

VertexSet from_mask(const detail::IndexedGraph& ig, Mask m) {
  VertexSet out;
  for (std::size_t i = 0; i < ig.size(); ++i) {
    if (m & bit(i)) out.insert(ig.ids[i]);
  }
  return out;
}

bool dominates(const std::vector<Mask>& closed, Mask m, Mask all) {
  Mask covered = 0;
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    covered |= closed[static_cast<std::size_t>(std::countr_zero(rest))];
  }
  return covered == all;
}

bool minimally_dominates(const std::vector<Mask>& closed, Mask m, Mask all) {
  if (!dominates(closed, m, all)) return false;
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    const Mask lowest = rest & (~rest + 1);
    if (dominates(closed, m & ~lowest, all)) return false;
  }
  return true;
}

// Edges of `g` as index pairs, in EdgeSet order.
std::vector<std::pair<std::size_t, std::size_t>> indexed_edges(const detail::IndexedGraph& ig,
                                                               const StaticGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.emplace_back(ig.index(e.low()), ig.index(e.high()));
  return out;
}

// Connectivity of (V, chosen edges) by closure over vertex masks.
bool spans_connected(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                     std::uint32_t chosen, std::size_t n) {
  if (n <= 1) return true;
  Mask reached = bit(0);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(chosen & (std::uint32_t{1} << i))) continue;
      const auto [a, b] = edges[i];
      const bool ra = reached & bit(a);
      const bool rb = reached & bit(b);
      if (ra != rb) {
        reached |= bit(a) | bit(b);
        grew = true;
      }
    }
  }
  return reached == detail::full_mask(n);
}

void check_spanning_limits(const StaticGraph& g, const BruteForceLimits& limits) {
  if (g.edge_count() > limits.max_edges) {
    throw CapacityError("spanning-subgraph enumeration capped at " +
                        std::to_string(limits.max_edges) + " edges (graph has " +
                        std::to_string(g.edge_count()) + ")");
  }
  if (g.edge_count() > 31) throw CapacityError("spanning-subgraph enumeration supports at most 31 edges");
  if (g.vertex_count() > detail::kMaxMaskVertices) {
    throw CapacityError("spanning-subgraph enumeration supports at most 64 vertices");
  }
  if (!is_connected(g)) throw DomainError("spanning-subgraph enumeration requires a connected graph");
}

// Calls visit(mask) for every connected spanning edge subset.
template <class Visit>
void scan_spanning(const std::vector<std::pair<std::size_t, std::size_t>>& edges, std::size_t n,
                   Visit&& visit) {
  const std::uint32_t limit = edges.empty() ? 1u : (std::uint32_t{1} << edges.size());
  // Subsets with fewer than n-1 edges cannot span.
  for (std::uint32_t chosen = 0; chosen < limit; ++chosen) {
    if (static_cast<std::size_t>(std::popcount(chosen)) + 1 < n) continue;
    if (!spans_connected(edges, chosen, n)) continue;
    if (!visit(chosen)) return;
  }
}

}  // namespace

bool is_dominating(const StaticGraph& g, const VertexSet& m) {
  for (const auto& v : g.vertices()) {
    if (m.contains(v)) continue;
    bool dominated = false;
    for (const auto& w : g.neighbors(v)) {
      if (m.contains(w)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) return false;
  }
  return true;
}

bool is_minimal_dominating(const StaticGraph& g, const VertexSet& m) {
  for (const auto& v : m) {
    if (!g.has_vertex(v)) throw DomainError("'" + v.str() + "' is not a vertex of the graph");
  }
  if (!is_dominating(g, m)) return false;
  for (const auto& v : m) {
    VertexSet smaller = m;
    smaller.erase(v);
    if (is_dominating(g, smaller)) return false;
  }
  return true;
}

void for_each_minimal_dominating_set(const StaticGraph& g,
                                     const std::function<bool(const VertexSet&)>& visit) {
  if (g.vertex_count() == 0) throw DomainError("minimal dominating sets of an empty graph");
  const detail::IndexedGraph ig(g);
  const auto closed = detail::closed_neighborhoods(ig);
  const std::size_t n = ig.size();
  const Mask all = detail::full_mask(n);

  // k-combinations of indices in lexicographic order; ids are sorted, so this
  // is lexicographic on the sorted identifier lists.
  std::vector<std::size_t> pick;
  for (std::size_t k = 1; k <= n; ++k) {
    pick.resize(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
      Mask m = 0;
      for (auto i : pick) m |= bit(i);
      if (minimally_dominates(closed, m, all) && !visit(from_mask(ig, m))) return;

      std::size_t pos = k;
      while (pos > 0 && pick[pos - 1] == n - k + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t j = pos; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
}

std::vector<VertexSet> enumerate_minimal_dominating_sets(const StaticGraph& g) {
  std::vector<VertexSet> out;
  for_each_minimal_dominating_set(g, [&](const VertexSet& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

void for_each_connected_spanning_subgraph(const StaticGraph& g,
                                          const std::function<bool(const StaticGraph&)>& visit,
                                          const BruteForceLimits& limits) {
  check_spanning_limits(g, limits);
  const detail::IndexedGraph ig(g);
  const auto edges = indexed_edges(ig, g);
  const std::vector<Edge> edge_list(g.edges().begin(), g.edges().end());
  scan_spanning(edges, ig.size(), [&](std::uint32_t chosen) {
    EdgeSet kept;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
      if (chosen & (std::uint32_t{1} << i)) kept.insert(edge_list[i]);
    }
    return visit(StaticGraph(g.vertices(), std::move(kept)));
  });
}

std::size_t count_connected_spanning_subgraphs(const StaticGraph& g,
                                               const BruteForceLimits& limits) {
  check_spanning_limits(g, limits);
  const detail::IndexedGraph ig(g);
  const auto edges = indexed_edges(ig, g);
  std::size_t count = 0;
  scan_spanning(edges, ig.size(), [&](std::uint32_t) {
    ++count;
    return true;
  });
  return count;
}

bool is_smds_bruteforce(const StaticGraph& g, const VertexSet& m, const BruteForceLimits& limits) {
  check_spanning_limits(g, limits);
  const detail::IndexedGraph ig(g);
  const auto edges = indexed_edges(ig, g);
  const Mask target = to_mask(ig, m);
  const std::size_t n = ig.size();
  const Mask all = detail::full_mask(n);

  bool ok = true;
  scan_spanning(edges, n, [&](std::uint32_t chosen) {
    std::vector<Mask> closed(n);
    for (std::size_t i = 0; i < n; ++i) closed[i] = bit(i);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!(chosen & (std::uint32_t{1} << i))) continue;
      closed[edges[i].first] |= bit(edges[i].second);
      closed[edges[i].second] |= bit(edges[i].first);
    }
    ok = minimally_dominates(closed, target, all);
    return ok;
  });
  return ok;
}

EdgeSet dominator_edges(const StaticGraph& g, const VertexSet& m, const VertexId& p) {
  EdgeSet out;
  for (const auto& q : g.neighbors(p)) {
    if (m.contains(q)) out.insert(Edge(p, q));
  }
  return out;
}

std::optional<VertexId> smds_witness(const StaticGraph& g, const VertexSet& m) {
  for (const auto& p : g.vertices()) {
    if (m.contains(p)) continue;
    if (!is_cut_set(g, dominator_edges(g, m, p))) return p;
  }
  return std::nullopt;
}

bool is_smds_via_cutsets(const StaticGraph& g, const VertexSet& m) {
  if (!is_minimal_dominating(g, m)) {
    throw DomainError("cut-set characterisation requires a minimal dominating set, got " +
                      to_token(m));
  }
  return !smds_witness(g, m).has_value();
}

std::optional<VertexSet> find_smds(const StaticGraph& g) {
  if (!is_connected(g)) throw DomainError("strong minimal dominating sets require a connected graph");
  std::optional<VertexSet> found;
  for_each_minimal_dominating_set(g, [&](const VertexSet& m) {
    if (!smds_witness(g, m)) {
      found = m;
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace tvgkit
