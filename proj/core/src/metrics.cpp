#include "tvgkit/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "json.hpp"
#include "tvgkit/domination.hpp"
#include "tvgkit/errors.hpp"
#include "tvgkit/tvg.hpp"

namespace tvgkit {
namespace {

// Tick of the first change after which `pred` holds to the horizon.
Tick settling_tick(const Trace& trace, const OutputPredicate& pred) {
  OutputMap outputs = trace.initial_outputs;
  Tick since = 0;
  bool holds = pred(outputs);
  for (std::size_t i = 0; i < trace.events.size();) {
    const Tick t = trace.events[i].time;
    bool changed = false;
    for (; i < trace.events.size() && trace.events[i].time == t; ++i) {
      const auto& ev = trace.events[i];
      if (ev.kind != EventKind::kOutputChanged) continue;
      const auto& out = std::get<OutputRef>(ev.subject);
      outputs.insert_or_assign(out.vertex, out.value);
      changed = true;
    }
    if (!changed) continue;
    const bool now = pred(outputs);
    if (now && !holds) since = t;
    holds = now;
  }
  if (!holds) throw NotConvergedError("not converged within horizon");
  return since;
}

ComplexityReport report_from(const Trace& trace, Tick start, Tick settled) {
  ComplexityReport r;
  r.starting_time = start;
  r.convergence_tick = std::max(settled, start);
  const bool delivered = std::any_of(trace.events.begin(), trace.events.end(), [](const auto& ev) {
    return ev.kind == EventKind::kMessageDelivered;
  });
  r.step = delivered ? communication_step(trace) : 0;
  const Tick elapsed = r.convergence_tick - r.starting_time;
  if (elapsed == 0) {
    r.convergence_steps = Rational::of(0, 1);
  } else if (r.step == 0) {
    throw DomainError("convergence took time but no message was delivered; step is undefined");
  } else {
    r.convergence_steps = Rational::of(elapsed, r.step);
  }
  return r;
}

}  // namespace

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const auto g = std::gcd(num, den);
  return {num / g, den / g};
}

Tick communication_step(const Trace& trace) {
  std::optional<Tick> worst;
  for (const auto& ev : trace.events) {
    if (ev.kind != EventKind::kMessageDelivered) continue;
    const auto& m = std::get<MessageRef>(ev.subject);
    worst = std::max(worst.value_or(0), ev.time - m.invoked_at);
  }
  if (!worst) throw DomainError("no message was delivered; the communication step is undefined");
  return *worst;
}

NpsFamily nps_ug(const StaticGraph& g) {
  if (g.edge_count() == 0) throw DomainError("underlying-graph NPS needs at least one edge");
  return {{g.edges()}};
}

NpsFamily nps_broadcast(const StaticGraph& g, const VertexId& origin) {
  if (!g.has_vertex(origin)) throw DomainError("origin '" + origin.str() + "' is not a vertex");
  NpsFamily out;
  for (const auto& q : g.neighbors(origin)) out.elements.push_back({Edge(origin, q)});
  if (out.elements.empty()) throw DomainError("origin '" + origin.str() + "' has no incident edge");
  return out;
}

Tick starting_time(const Trace& trace, const NpsFamily& nps) {
  std::map<Edge, Tick> first_up;
  for (const auto& ev : trace.events) {
    if (ev.kind == EventKind::kEdgeUp) first_up.emplace(std::get<Edge>(ev.subject), ev.time);
  }
  std::optional<Tick> best;
  for (const auto& element : nps.elements) {
    Tick complete = 0;
    bool seen_all = true;
    for (const auto& e : element) {
      auto it = first_up.find(e);
      if (it == first_up.end()) {
        seen_all = false;
        break;
      }
      complete = std::max(complete, it->second);
    }
    if (seen_all) best = std::min(best.value_or(complete), complete);
  }
  if (!best) throw DomainError("starting time undefined within horizon");
  return *best;
}

ComplexityReport convergence_steps(const Trace& trace, const NpsFamily& nps,
                                   const OutputPredicate& converged) {
  const Tick start = starting_time(trace, nps);
  return report_from(trace, start, settling_tick(trace, converged));
}

ComplexityReport service_report(const Trace& trace, const NpsFamily& nps, Tick request_time,
                                const OutputPredicate& achieved) {
  const Tick start = std::max(starting_time(trace, nps), request_time);
  return report_from(trace, start, settling_tick(trace, achieved));
}

VertexSet true_set(const OutputMap& outputs) {
  VertexSet out;
  for (const auto& [v, value] : outputs) {
    if (const bool* b = std::get_if<bool>(&value); b && *b) out.insert(v);
  }
  return out;
}

ComplexityReport measure(const Tvg& tvg, const ProtocolConfig& config, const Trace& trace) {
  const StaticGraph ug = underlying_graph(tvg);
  switch (config.kind) {
    case ProtocolKind::kUnderlyingGraph:
      return convergence_steps(trace, nps_ug(ug), [&ug](const OutputMap& outputs) {
        return std::all_of(outputs.begin(), outputs.end(), [&ug](const auto& kv) {
          const auto* g = std::get_if<StaticGraph>(&kv.second);
          return g && *g == ug;
        });
      });
    case ProtocolKind::kMdst: {
      // A local graph short of U_g can still change the output after the horizon.
      for (const auto& [v, state] : trace.final_states) {
        const auto* s = std::get_if<MdstState>(&state);
        if (!s || s->ug.local_graph != ug) {
          throw NotConvergedError("not converged within horizon: " + v.str() +
                                  " has not learnt the underlying graph");
        }
      }
      if (const auto chosen = true_set(trace.final_outputs);
          !is_minimal_dominating(eventual_underlying_graph(tvg), chosen)) {
        throw NotConvergedError("not converged within horizon: " + to_token(chosen) +
                                " is not a minimal dominating set of the eventual underlying graph");
      }
      const OutputMap& final_outputs = trace.final_outputs;
      return convergence_steps(trace, nps_ug(ug), [&final_outputs](const OutputMap& outputs) {
        return outputs == final_outputs;
      });
    }
    case ProtocolKind::kFlood:
      if (!config.origin) throw ConfigError("flood requires an origin");
      return service_report(trace, nps_broadcast(ug, *config.origin), config.request_time,
                            [](const OutputMap& outputs) {
                              return std::all_of(outputs.begin(), outputs.end(), [](const auto& kv) {
                                const auto* b = std::get_if<bool>(&kv.second);
                                return b && *b;
                              });
                            });
  }
  throw ConfigError("unknown protocol");
}

std::string to_json(const ComplexityReport& r) {
  nlohmann::ordered_json j;
  j["step"] = r.step;
  j["starting_time"] = r.starting_time;
  j["convergence_tick"] = r.convergence_tick;
  j["convergence_steps_num"] = r.convergence_steps.num;
  j["convergence_steps_den"] = r.convergence_steps.den;
  return j.dump();
}

}  // namespace tvgkit
