#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "tvgkit/protocols.hpp"
#include "tvgkit/trace.hpp"
#include "tvgkit/tvg.hpp"

namespace tvgkit {

/// Per-process behaviour driven by the engine. Handlers append Send_retry
/// requests to `sends`; they never see the clock or the topology directly.
class Process {
 public:
  virtual ~Process() = default;

  virtual void on_edge_appear(const VertexId& other, std::vector<Outgoing>& sends) = 0;
  virtual void on_edge_disappear(const VertexId& /*other*/, std::vector<Outgoing>& /*sends*/) {}
  virtual void on_receive(const VertexId& from, const Payload& payload,
                          std::vector<Outgoing>& sends) = 0;
  /// Service request (e.g. "broadcast now") addressed to this process.
  virtual void on_request(std::vector<Outgoing>& /*sends*/) {}

  virtual OutputValue output() const = 0;
  virtual ProtocolState state() const { return std::monostate{}; }
};

using ProcessFactory = std::function<std::unique_ptr<Process>(const VertexId& self)>;

struct ServiceRequest {
  VertexId vertex;
  Tick time = 0;
};

/// Processing order inside one tick. Within a phase: edge events in edge
/// order, deliveries in message-id order, requests and deferred callbacks in
/// vertex-id order. An edge's two endpoints are notified lower id first.
enum class Phase : int {
  kEdgeDown = 0,
  kEdgeUp = 1,
  kDelivery = 2,
  kRequest = 3,
  kDeferredCallback = 4,
};

/// Runs [0, horizon) deterministically.
///
/// - An appearance notifies both endpoints and re-attempts every pending send
///   on the edge; a send invoked while its edge is up is attempted at once.
/// - An attempt at t is delivered at t + latency unless the edge disappears
///   first; a message due exactly when its edge leaves is still delivered.
/// - A disappearance loses the in-flight attempts on that edge. Lost messages
///   stay pending and are retried at the next appearance.
/// - Callbacks take effect process_latency ticks after their trigger.
Trace simulate(const Tvg& tvg, const ProcessFactory& factory, Tick horizon,
               std::span<const ServiceRequest> requests = {});

/// Factory for a registered protocol.
ProcessFactory make_process_factory(const ProtocolConfig& config);

/// Runs a registered protocol. `seed` is accepted for interface stability;
/// the engine itself is seed-independent.
Trace run(const Tvg& tvg, const ProtocolConfig& config, Tick horizon, std::uint64_t seed = 0);

}  // namespace tvgkit
