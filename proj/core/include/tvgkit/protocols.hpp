#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tvgkit/schedule.hpp"
#include "tvgkit/static_graph.hpp"

namespace tvgkit {

/// add(g): a process's whole local underlying graph.
struct AddGraph {
  StaticGraph graph;
  friend bool operator==(const AddGraph&, const AddGraph&) = default;
};

/// The broadcast payload of the flooding protocol.
struct FloodToken {
  friend bool operator==(const FloodToken&, const FloodToken&) = default;
};

using Payload = std::variant<AddGraph, FloodToken>;

/// A Send_retry invocation requested by a handler.
struct Outgoing {
  VertexId to;
  Payload payload;
  friend bool operator==(const Outgoing&, const Outgoing&) = default;
};

template <class State>
struct Transition {
  State state;
  std::vector<Outgoing> sends;
};

// ---------------------------------------------------------------------------
// Underlying graph computation.

struct UgState {
  StaticGraph local_graph;    ///< only grows
  VertexSet known_neighbors;  ///< every process ever seen across an edge

  friend bool operator==(const UgState&, const UgState&) = default;
};

/// Local graph ({self}, {}), no known neighbours.
UgState ug_initial(const VertexId& self);

/// First appearance of {self, other}: learn the edge and push the local graph
/// to every known neighbour. Repeat appearances are ignored.
Transition<UgState> ug_on_edge_appear(UgState state, const VertexId& self, const VertexId& other);

/// Merge add(payload) from `from`; if it taught anything new, forward the
/// merged graph to every known neighbour except `from`.
Transition<UgState> ug_on_receive(UgState state, const VertexId& self, const VertexId& from,
                                  const StaticGraph& payload);

inline const StaticGraph& ug_output(const UgState& state) { return state.local_graph; }

// ---------------------------------------------------------------------------
// Minimal dominating set over time, layered on the underlying graph protocol.

struct MdstState {
  UgState ug;
  bool in_mdst = true;

  friend bool operator==(const MdstState&, const MdstState&) = default;
};

MdstState mdst_initial(const VertexId& self);

/// in_mdst := self belongs to the set chosen for self's connected component of
/// the local graph: the first strong minimal dominating set in canonical
/// order, or else the first minimal dominating set.
MdstState mdst_recompute(MdstState state, const VertexId& self);

/// The set mdst_recompute would choose on `g` for a process in `component_of`.
VertexSet mdst_choice(const StaticGraph& g, const VertexId& component_of);

Transition<MdstState> mdst_on_edge_appear(MdstState state, const VertexId& self,
                                          const VertexId& other);
Transition<MdstState> mdst_on_receive(MdstState state, const VertexId& self, const VertexId& from,
                                      const StaticGraph& payload);

// ---------------------------------------------------------------------------
// Flooding broadcast.

struct BroadcastState {
  bool have_message = false;    ///< never reverts to false
  VertexSet informed_neighbors;  ///< sent to, or heard from
  VertexSet known_neighbors;

  friend bool operator==(const BroadcastState&, const BroadcastState&) = default;
};

BroadcastState flood_initial(bool is_origin);

/// Remember `other`; an informed process sends the token if `other` has not
/// been covered yet.
Transition<BroadcastState> flood_on_edge_appear(BroadcastState state, const VertexId& self,
                                                const VertexId& other);

/// Token from `from`. The first receipt informs and floods to every known
/// neighbour still uncovered; later ones only mark the sender.
Transition<BroadcastState> flood_on_receive(BroadcastState state, const VertexId& self,
                                            const VertexId& from);

/// Service request at the origin: become informed and flood.
Transition<BroadcastState> flood_on_request(BroadcastState state, const VertexId& self);

// ---------------------------------------------------------------------------
// Registry.

enum class ProtocolKind { kUnderlyingGraph, kMdst, kFlood };

struct ProtocolConfig {
  ProtocolKind kind = ProtocolKind::kUnderlyingGraph;
  std::optional<VertexId> origin;  ///< flood only
  Tick request_time = 0;           ///< flood only: when the origin is asked to broadcast
};

/// "ug", "mdst" or "flood". Throws ConfigError for other names and for
/// flood without an origin.
ProtocolConfig parse_protocol(std::string_view name, std::optional<VertexId> origin = {},
                              Tick request_time = 0);

std::string_view protocol_name(ProtocolKind kind);

using ProtocolState = std::variant<std::monostate, UgState, MdstState, BroadcastState>;

/// A process's output variable: a graph for ug, a boolean for mdst and flood.
using OutputValue = std::variant<bool, StaticGraph>;

std::string to_token(const OutputValue& value);

}  // namespace tvgkit
