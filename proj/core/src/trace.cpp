#include "tvgkit/trace.hpp"

#include <ostream>
#include <sstream>

#include "tvgkit/errors.hpp"

namespace tvgkit {

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kEdgeUp: return "EdgeUp";
    case EventKind::kEdgeDown: return "EdgeDown";
    case EventKind::kSendInvoked: return "SendInvoked";
    case EventKind::kMessageDelivered: return "MessageDelivered";
    case EventKind::kMessageLost: return "MessageLost";
    case EventKind::kOutputChanged: return "OutputChanged";
  }
  return "?";
}

std::map<VertexId, OutputValue> replay_outputs(const Trace& trace, Tick t) {
  if (t > trace.horizon) {
    throw DomainError("tick " + std::to_string(t) + " lies beyond the horizon " +
                      std::to_string(trace.horizon));
  }
  auto outputs = trace.initial_outputs;
  for (const auto& ev : trace.events) {
    if (ev.time > t) break;
    if (ev.kind != EventKind::kOutputChanged) continue;
    const auto& out = std::get<OutputRef>(ev.subject);
    outputs.insert_or_assign(out.vertex, out.value);
  }
  return outputs;
}

void write_trace(std::ostream& os, const Trace& trace) {
  for (const auto& ev : trace.events) {
    os << ev.time << ' ' << to_string(ev.kind);
    if (const auto* e = std::get_if<Edge>(&ev.subject)) {
      os << ' ' << e->low() << ' ' << e->high();
    } else if (const auto* m = std::get_if<MessageRef>(&ev.subject)) {
      os << ' ' << m->id << ' ' << m->sender << ' ' << m->receiver;
      if (ev.kind == EventKind::kMessageDelivered) os << ' ' << m->invoked_at;
    } else {
      const auto& o = std::get<OutputRef>(ev.subject);
      os << ' ' << o.vertex << ' ' << to_token(o.value);
    }
    os << '\n';
  }
  os << "FINAL\n";
  for (const auto& [v, value] : trace.final_outputs) os << v << ' ' << to_token(value) << '\n';
}

std::string serialize(const Trace& trace) {
  std::ostringstream os;
  write_trace(os, trace);
  return os.str();
}

}  // namespace tvgkit
