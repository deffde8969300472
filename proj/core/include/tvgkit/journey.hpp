#pragma once

#include <optional>
#include <vector>

#include "tvgkit/tvg.hpp"

namespace tvgkit {

struct Hop {
  Edge edge;
  Tick departure = 0;
};

/// Temporal path: consecutive hops share endpoints, and hop i+1 departs no
/// earlier than hop i's departure plus its latency.
struct Journey {
  std::vector<Hop> hops;
};

/// What a hop needs from its edge.
enum class HopRule {
  kPresentAtDeparture,  ///< edge present at the departure tick (journey definition)
  kDeliverable,         ///< present throughout [departure, departure + latency)
};

bool is_journey(const Tvg& tvg, const Journey& journey, const VertexId& from, const VertexId& to);

/// Minimum arrival tick over journeys from `from` to `to` departing at or
/// after `after`. Throws DomainError for unknown vertices.
std::optional<Tick> earliest_arrival(const Tvg& tvg, const VertexId& from, const VertexId& to,
                                     Tick after, HopRule rule);

}  // namespace tvgkit
