#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "tvgkit/static_graph.hpp"

namespace tvgkit {

/// Caps for the exponential oracles. Exceeding one raises CapacityError.
struct BruteForceLimits {
  std::size_t max_edges = 16;     ///< spanning-subgraph enumeration
  std::size_t max_vertices = 12;  ///< exhaustive vertex-subset scans
};

/// Every vertex outside `m` has a neighbour in `m`.
bool is_dominating(const StaticGraph& g, const VertexSet& m);

/// Dominating, and dropping any single member breaks domination. Domination
/// is monotone under adding vertices, so this is the same as "no strict subset
/// dominates".
bool is_minimal_dominating(const StaticGraph& g, const VertexSet& m);

/// Visits the minimal dominating sets of `g` in canonical order (cardinality,
/// then lexicographic on the sorted id lists) until `visit` returns false.
void for_each_minimal_dominating_set(const StaticGraph& g,
                                     const std::function<bool(const VertexSet&)>& visit);

std::vector<VertexSet> enumerate_minimal_dominating_sets(const StaticGraph& g);

/// Visits every connected spanning subgraph (V, E' subset of E) exactly once
/// until `visit` returns false.
void for_each_connected_spanning_subgraph(const StaticGraph& g,
                                          const std::function<bool(const StaticGraph&)>& visit,
                                          const BruteForceLimits& limits = {});

std::size_t count_connected_spanning_subgraphs(const StaticGraph& g,
                                               const BruteForceLimits& limits = {});

/// Definition check: `m` is a minimal dominating set of every connected
/// spanning subgraph of `g`.
bool is_smds_bruteforce(const StaticGraph& g, const VertexSet& m,
                        const BruteForceLimits& limits = {});

/// Edges joining `p` to its dominators: {{p,q} | q in m and q adjacent to p}.
EdgeSet dominator_edges(const StaticGraph& g, const VertexSet& m, const VertexId& p);

/// First vertex of V \ m whose dominator edges are not a cut-set, if any.
std::optional<VertexId> smds_witness(const StaticGraph& g, const VertexSet& m);

/// Cut-set characterisation: for every p outside `m`, removing p's dominator
/// edges disconnects `g`. Requires `m` minimal dominating (DomainError otherwise).
bool is_smds_via_cutsets(const StaticGraph& g, const VertexSet& m);

/// First minimal dominating set in canonical order that passes the cut-set
/// test, or nullopt when `g` admits no strong minimal dominating set.
std::optional<VertexSet> find_smds(const StaticGraph& g);

}  // namespace tvgkit
