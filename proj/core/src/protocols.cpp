#include "tvgkit/protocols.hpp"

#include <algorithm>

#include "tvgkit/domination.hpp"
#include "tvgkit/errors.hpp"

namespace tvgkit {

UgState ug_initial(const VertexId& self) {
  UgState s;
  s.local_graph.add_vertex(self);
  return s;
}

Transition<UgState> ug_on_edge_appear(UgState state, const VertexId& self, const VertexId& other) {
  Transition<UgState> out{std::move(state), {}};
  const Edge e(self, other);
  if (out.state.local_graph.has_edge(e)) return out;
  out.state.known_neighbors.insert(other);
  out.state.local_graph.add_edge(e);
  for (const auto& r : out.state.known_neighbors) {
    out.sends.push_back({r, AddGraph{out.state.local_graph}});
  }
  return out;
}

Transition<UgState> ug_on_receive(UgState state, const VertexId& /*self*/, const VertexId& from,
                                  const StaticGraph& payload) {
  Transition<UgState> out{std::move(state), {}};
  const auto& known = out.state.local_graph.edges();
  const bool learns = std::any_of(payload.edges().begin(), payload.edges().end(),
                                  [&](const Edge& e) { return !known.contains(e); });
  if (!learns) return out;
  out.state.local_graph.merge(payload);
  for (const auto& r : out.state.known_neighbors) {
    if (r != from) out.sends.push_back({r, AddGraph{out.state.local_graph}});
  }
  return out;
}

MdstState mdst_initial(const VertexId& self) {
  return mdst_recompute(MdstState{ug_initial(self), false}, self);
}

VertexSet mdst_choice(const StaticGraph& g, const VertexId& component_of) {
  const StaticGraph component = connected_component(g, component_of);
  if (auto smds = find_smds(component)) return *smds;
  VertexSet fallback;
  for_each_minimal_dominating_set(component, [&](const VertexSet& m) {
    fallback = m;
    return false;
  });
  return fallback;
}

MdstState mdst_recompute(MdstState state, const VertexId& self) {
  state.in_mdst = mdst_choice(state.ug.local_graph, self).contains(self);
  return state;
}

namespace {

Transition<MdstState> lift(Transition<UgState> ug, bool in_mdst, const VertexId& self,
                           bool changed) {
  MdstState next{std::move(ug.state), in_mdst};
  if (changed) next = mdst_recompute(std::move(next), self);
  return {std::move(next), std::move(ug.sends)};
}

}  // namespace

Transition<MdstState> mdst_on_edge_appear(MdstState state, const VertexId& self,
                                          const VertexId& other) {
  const auto before = state.ug.local_graph.edge_count();
  auto ug = ug_on_edge_appear(std::move(state.ug), self, other);
  const bool changed = ug.state.local_graph.edge_count() != before;
  return lift(std::move(ug), state.in_mdst, self, changed);
}

Transition<MdstState> mdst_on_receive(MdstState state, const VertexId& self, const VertexId& from,
                                      const StaticGraph& payload) {
  const auto before = state.ug.local_graph.edge_count();
  auto ug = ug_on_receive(std::move(state.ug), self, from, payload);
  const bool changed = ug.state.local_graph.edge_count() != before;
  return lift(std::move(ug), state.in_mdst, self, changed);
}

BroadcastState flood_initial(bool is_origin) {
  BroadcastState s;
  s.have_message = is_origin;
  return s;
}

Transition<BroadcastState> flood_on_edge_appear(BroadcastState state, const VertexId& /*self*/,
                                                const VertexId& other) {
  Transition<BroadcastState> out{std::move(state), {}};
  out.state.known_neighbors.insert(other);
  if (out.state.have_message && !out.state.informed_neighbors.contains(other)) {
    out.state.informed_neighbors.insert(other);
    out.sends.push_back({other, FloodToken{}});
  }
  return out;
}

namespace {

void flood_all(Transition<BroadcastState>& out) {
  for (const auto& r : out.state.known_neighbors) {
    if (out.state.informed_neighbors.insert(r).second) out.sends.push_back({r, FloodToken{}});
  }
}

}  // namespace

Transition<BroadcastState> flood_on_receive(BroadcastState state, const VertexId& /*self*/,
                                            const VertexId& from) {
  Transition<BroadcastState> out{std::move(state), {}};
  out.state.informed_neighbors.insert(from);
  if (out.state.have_message) return out;
  out.state.have_message = true;
  flood_all(out);
  return out;
}

Transition<BroadcastState> flood_on_request(BroadcastState state, const VertexId& /*self*/) {
  Transition<BroadcastState> out{std::move(state), {}};
  if (out.state.have_message) return out;
  out.state.have_message = true;
  flood_all(out);
  return out;
}

ProtocolConfig parse_protocol(std::string_view name, std::optional<VertexId> origin,
                              Tick request_time) {
  ProtocolConfig cfg;
  if (name == "ug") {
    cfg.kind = ProtocolKind::kUnderlyingGraph;
  } else if (name == "mdst") {
    cfg.kind = ProtocolKind::kMdst;
  } else if (name == "flood") {
    cfg.kind = ProtocolKind::kFlood;
    if (!origin) throw ConfigError("protocol 'flood' requires an origin vertex");
    if (request_time < 0) throw ConfigError("flood request time must be non-negative");
    cfg.origin = std::move(origin);
    cfg.request_time = request_time;
  } else {
    throw ConfigError("unknown protocol '" + std::string(name) + "' (expected ug, mdst or flood)");
  }
  return cfg;
}

std::string_view protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::kUnderlyingGraph: return "ug";
    case ProtocolKind::kMdst: return "mdst";
    case ProtocolKind::kFlood: return "flood";
  }
  return "?";
}

std::string to_token(const OutputValue& value) {
  if (const bool* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  return to_token(std::get<StaticGraph>(value));
}

}  // namespace tvgkit
