#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tvgkit/protocols.hpp"
#include "tvgkit/static_graph.hpp"
#include "tvgkit/trace.hpp"
#include "tvgkit/tvg.hpp"

namespace tvgkit {

/// Necessary presence sets of a problem on one graph: solving can start once
/// every edge of some element has appeared.
struct NpsFamily {
  std::vector<EdgeSet> elements;

  friend bool operator==(const NpsFamily&, const NpsFamily&) = default;
};

/// Exact fraction in lowest terms, den > 0.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

struct ComplexityReport {
  Tick step = 0;  ///< worst delivered delay; 0 when nothing was delivered
  Tick starting_time = 0;
  Tick convergence_tick = 0;
  Rational convergence_steps;

  friend bool operator==(const ComplexityReport&, const ComplexityReport&) = default;
};

using OutputMap = std::map<VertexId, OutputValue>;
using OutputPredicate = std::function<bool(const OutputMap&)>;

/// Worst delay (delivery tick minus Send_retry invocation tick) over delivered
/// messages. Throws DomainError when nothing was delivered.
Tick communication_step(const Trace& trace);

/// {E}. Throws DomainError on an edgeless graph.
NpsFamily nps_ug(const StaticGraph& g);

/// One singleton per edge incident to `origin`.
NpsFamily nps_broadcast(const StaticGraph& g, const VertexId& origin);

/// First tick by which every edge of at least one element has appeared (an
/// appearance at tick t counts for t). Throws DomainError when no element
/// completes within the trace.
Tick starting_time(const Trace& trace, const NpsFamily& nps);

/// Smallest tick from which `converged` holds through the horizon, measured
/// from the starting time in communication steps. Throws NotConvergedError
/// when the predicate fails at the horizon.
ComplexityReport convergence_steps(const Trace& trace, const NpsFamily& nps,
                                   const OutputPredicate& converged);

/// Service-problem variant: starts at max(NPS starting time, request tick) and
/// ends when `achieved` first holds from then on.
ComplexityReport service_report(const Trace& trace, const NpsFamily& nps, Tick request_time,
                                const OutputPredicate& achieved);

VertexSet true_set(const OutputMap& outputs);

/// Measures a run of a registered protocol against its specification:
///   ug    - every output equals the underlying graph;
///   mdst  - outputs equal the final ones, every local graph has reached the
///           underlying graph, and the final true-set is a minimal dominating
///           set of the eventual underlying graph;
///   flood - every process informed, measured as a service from the request.
/// Throws NotConvergedError when the run ends unconverged.
ComplexityReport measure(const Tvg& tvg, const ProtocolConfig& config, const Trace& trace);

/// {"step":..,"starting_time":..,"convergence_tick":..,"convergence_steps_num":..,"convergence_steps_den":..}
std::string to_json(const ComplexityReport& report);

}  // namespace tvgkit
