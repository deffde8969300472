#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tvgkit/protocols.hpp"
#include "tvgkit/schedule.hpp"
#include "tvgkit/static_graph.hpp"

namespace tvgkit {

using MessageId = std::uint64_t;

enum class EventKind {
  kEdgeUp,
  kEdgeDown,
  kSendInvoked,
  kMessageDelivered,
  kMessageLost,
  kOutputChanged,
};

std::string_view to_string(EventKind kind);

struct MessageRef {
  MessageId id = 0;
  VertexId sender;
  VertexId receiver;
  Tick invoked_at = 0;  ///< when Send_retry was called

  friend bool operator==(const MessageRef&, const MessageRef&) = default;
};

struct OutputRef {
  VertexId vertex;
  OutputValue value;

  friend bool operator==(const OutputRef&, const OutputRef&) = default;
};

struct TraceEvent {
  Tick time = 0;
  EventKind kind = EventKind::kEdgeUp;
  std::variant<Edge, MessageRef, OutputRef> subject;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

/// Everything that happened in [0, horizon).
struct Trace {
  std::vector<TraceEvent> events;
  std::map<VertexId, OutputValue> initial_outputs;
  std::map<VertexId, ProtocolState> final_states;
  std::map<VertexId, OutputValue> final_outputs;
  Tick horizon = 0;

  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Outputs at tick `t`, changes at `t` included. Throws DomainError past the horizon.
std::map<VertexId, OutputValue> replay_outputs(const Trace& trace, Tick t);

/// One line per event, `<tick> <kind> <fields...>`, then `FINAL` and one
/// `<vertex> <output>` line per process.
void write_trace(std::ostream& os, const Trace& trace);
std::string serialize(const Trace& trace);

}  // namespace tvgkit
