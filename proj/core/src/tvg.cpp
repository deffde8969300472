#include "tvgkit/tvg.hpp"

#include <sstream>

#include "tvgkit/errors.hpp"

namespace tvgkit {
namespace {

std::string edge_name(const Edge& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

}  // namespace

Tvg::Tvg(StaticGraph graph, std::map<Edge, EdgeTiming> timing, Tick process_latency)
    : graph_(std::move(graph)), timing_(std::move(timing)), process_latency_(process_latency) {
  if (process_latency_ < 0) throw DomainError("process latency must be non-negative");
  for (const auto& e : graph_.edges()) {
    if (!timing_.contains(e)) throw DomainError("edge " + edge_name(e) + " has no schedule");
  }
  for (const auto& [e, t] : timing_) {
    if (!graph_.has_edge(e)) throw DomainError("schedule given for unknown edge " + edge_name(e));
    if (t.latency < 1) throw DomainError("edge " + edge_name(e) + " needs latency >= 1");
    if (t.schedule.never_present()) {
      throw DomainError("edge " + edge_name(e) + " is never present");
    }
  }
}

const EdgeTiming& Tvg::timing(const Edge& e) const {
  auto it = timing_.find(e);
  if (it == timing_.end()) throw DomainError("unknown edge " + edge_name(e));
  return it->second;
}

bool presence(const Tvg& tvg, const Edge& e, Tick t) { return tvg.timing(e).schedule.present(t); }

StaticGraph underlying_graph(const Tvg& tvg) { return tvg.graph(); }

StaticGraph eventual_underlying_graph(const Tvg& tvg) {
  EdgeSet recurrent;
  for (const auto& [e, t] : tvg.timings()) {
    if (t.schedule.recurrent()) recurrent.insert(e);
  }
  return StaticGraph(tvg.graph().vertices(), std::move(recurrent));
}

bool is_connected_over_time(const Tvg& tvg) {
  if (tvg.graph().vertex_count() == 0) return true;
  return is_connected(eventual_underlying_graph(tvg));
}

Tvg restrict(const Tvg& tvg, std::span<const EdgeMask> masks) {
  std::map<Edge, EdgeTiming> timing = tvg.timings();
  for (const auto& mask : masks) {
    for (const auto& e : mask.edges) {
      auto it = timing.find(e);
      if (it == timing.end()) throw DomainError("mask names unknown edge " + edge_name(e));
      it->second.schedule = it->second.schedule.minus(mask.window);
    }
  }
  EdgeSet kept;
  for (auto it = timing.begin(); it != timing.end();) {
    if (it->second.schedule.never_present()) {
      it = timing.erase(it);
    } else {
      kept.insert(it->first);
      ++it;
    }
  }
  return Tvg(StaticGraph(tvg.graph().vertices(), std::move(kept)), std::move(timing),
             tvg.process_latency());
}

std::vector<Snapshot> snapshots(const Tvg& tvg, Tick horizon) {
  if (horizon <= 0) throw DomainError("snapshot horizon must be positive");
  std::set<Tick> events{0};
  for (const auto& [e, t] : tvg.timings()) {
    for (const auto& run : t.schedule.runs_overlapping(0, horizon)) {
      if (run.start > 0) events.insert(run.start);
      if (run.end < horizon) events.insert(run.end);
    }
  }
  std::vector<Snapshot> out;
  for (Tick at : events) {
    EdgeSet present_edges;
    for (const auto& [e, t] : tvg.timings()) {
      if (t.schedule.present(at)) present_edges.insert(e);
    }
    StaticGraph g(tvg.graph().vertices(), std::move(present_edges));
    if (out.empty() || out.back().graph != g) out.push_back({at, std::move(g)});
  }
  return out;
}

}  // namespace tvgkit
