#include "tvgkit/engine.hpp"

#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

#include "tvgkit/errors.hpp"

namespace tvgkit {
namespace {

struct Callback {
  enum class Kind { kAppear, kDisappear, kReceive, kRequest };
  Kind kind = Kind::kAppear;
  VertexId vertex;
  VertexId other;
  std::optional<Payload> payload;
};

struct Action {
  Tick time = 0;
  Phase phase = Phase::kEdgeUp;
  std::optional<Edge> edge{};
  MessageId message = 0;
  std::uint64_t seq = 0;
  std::optional<Callback> callback{};

  const VertexId* vertex_key() const { return callback ? &callback->vertex : nullptr; }
};

// Min-heap order implementing the Phase contract.
struct Later {
  bool operator()(const Action& a, const Action& b) const {
    if (a.time != b.time) return a.time > b.time;
    if (a.phase != b.phase) return a.phase > b.phase;
    if (a.edge && b.edge && *a.edge != *b.edge) return *a.edge > *b.edge;
    if (a.message != b.message) return a.message > b.message;
    const auto* va = a.vertex_key();
    const auto* vb = b.vertex_key();
    if (va && vb && *va != *vb) return *va > *vb;
    return a.seq > b.seq;
  }
};

class Engine {
 public:
  Engine(const Tvg& tvg, const ProcessFactory& factory, Tick horizon,
         std::span<const ServiceRequest> requests)
      : tvg_(tvg), horizon_(horizon) {
    for (const auto& v : tvg.graph().vertices()) {
      auto p = factory(v);
      if (!p) throw ConfigError("process factory returned no process for '" + v.str() + "'");
      trace_.initial_outputs.emplace(v, p->output());
      outputs_.emplace(v, p->output());
      processes_.emplace(v, std::move(p));
    }
    for (const auto& [e, timing] : tvg.timings()) {
      for (const auto& run : timing.schedule.runs_overlapping(0, horizon)) {
        push({.time = run.start, .phase = Phase::kEdgeUp, .edge = e});
        if (run.bounded() && run.end < horizon) {
          push({.time = run.end, .phase = Phase::kEdgeDown, .edge = e});
        }
      }
    }
    for (const auto& r : requests) {
      if (!processes_.contains(r.vertex)) {
        throw ConfigError("service request for unknown vertex '" + r.vertex.str() + "'");
      }
      if (r.time < 0) throw ConfigError("service request before tick 0");
      push({.time = r.time,
            .phase = Phase::kRequest,
            .callback = Callback{Callback::Kind::kRequest, r.vertex, r.vertex, std::nullopt}});
    }
  }

  Trace run() && {
    while (!queue_.empty() && queue_.top().time < horizon_) {
      Action a = queue_.top();
      queue_.pop();
      now_ = a.time;
      switch (a.phase) {
        case Phase::kEdgeDown: edge_down(*a.edge); break;
        case Phase::kEdgeUp: edge_up(*a.edge); break;
        case Phase::kDelivery: deliver(a.message); break;
        case Phase::kRequest:
        case Phase::kDeferredCallback: execute(*a.callback); break;
      }
    }
    trace_.horizon = horizon_;
    for (const auto& [v, p] : processes_) {
      trace_.final_states.emplace(v, p->state());
      trace_.final_outputs.emplace(v, p->output());
    }
    return std::move(trace_);
  }

 private:
  struct Pending {
    VertexId sender;
    VertexId receiver;
    Edge edge;
    Payload payload;
    Tick invoked_at;
    std::optional<Tick> due;  // set while an attempt is in flight
  };

  void push(Action a) {
    a.seq = next_seq_++;
    queue_.push(std::move(a));
  }

  void record(EventKind kind, std::variant<Edge, MessageRef, OutputRef> subject) {
    trace_.events.push_back({now_, kind, std::move(subject)});
  }

  MessageRef ref(MessageId id, const Pending& p) const {
    return {id, p.sender, p.receiver, p.invoked_at};
  }

  void notify(Callback cb) {
    if (tvg_.process_latency() == 0) {
      execute(cb);
    } else {
      push({.time = now_ + tvg_.process_latency(),
            .phase = Phase::kDeferredCallback,
            .callback = std::move(cb)});
    }
  }

  void edge_down(const Edge& e) {
    up_.erase(e);
    record(EventKind::kEdgeDown, e);
    for (auto& [id, p] : pending_) {
      if (p.edge == e && p.due && *p.due > now_) {
        p.due.reset();
        record(EventKind::kMessageLost, ref(id, p));
      }
    }
    notify({Callback::Kind::kDisappear, e.low(), e.high(), std::nullopt});
    notify({Callback::Kind::kDisappear, e.high(), e.low(), std::nullopt});
  }

  void edge_up(const Edge& e) {
    up_.insert(e);
    record(EventKind::kEdgeUp, e);
    for (auto& [id, p] : pending_) {
      if (p.edge == e && !p.due) attempt(id, p);
    }
    notify({Callback::Kind::kAppear, e.low(), e.high(), std::nullopt});
    notify({Callback::Kind::kAppear, e.high(), e.low(), std::nullopt});
  }

  void deliver(MessageId id) {
    auto it = pending_.find(id);
    if (it == pending_.end() || it->second.due != now_) return;  // lost meanwhile
    Pending p = std::move(it->second);
    pending_.erase(it);
    record(EventKind::kMessageDelivered, ref(id, p));
    notify({Callback::Kind::kReceive, p.receiver, p.sender, std::move(p.payload)});
  }

  void attempt(MessageId id, Pending& p) {
    p.due = now_ + tvg_.timing(p.edge).latency;
    push({.time = *p.due, .phase = Phase::kDelivery, .message = id});
  }

  void execute(const Callback& cb) {
    auto& process = *processes_.at(cb.vertex);
    std::vector<Outgoing> sends;
    switch (cb.kind) {
      case Callback::Kind::kAppear: process.on_edge_appear(cb.other, sends); break;
      case Callback::Kind::kDisappear: process.on_edge_disappear(cb.other, sends); break;
      case Callback::Kind::kReceive: process.on_receive(cb.other, *cb.payload, sends); break;
      case Callback::Kind::kRequest: process.on_request(sends); break;
    }
    auto current = process.output();
    auto& last = outputs_.at(cb.vertex);
    if (current != last) {
      last = current;
      record(EventKind::kOutputChanged, OutputRef{cb.vertex, std::move(current)});
    }
    for (auto& s : sends) send(cb.vertex, std::move(s));
  }

  void send(const VertexId& sender, Outgoing out) {
    if (out.to == sender) throw DomainError("process '" + sender.str() + "' sent to itself");
    Edge e(sender, out.to);
    if (!tvg_.graph().has_edge(e)) {
      std::ostringstream msg;
      msg << "process '" << sender << "' sent to '" << out.to << "' without an edge " << e;
      throw DomainError(msg.str());
    }
    const MessageId id = next_message_++;
    auto [it, inserted] = pending_.emplace(
        id, Pending{sender, out.to, e, std::move(out.payload), now_, std::nullopt});
    record(EventKind::kSendInvoked, ref(id, it->second));
    if (up_.contains(e)) attempt(id, it->second);
  }

  const Tvg& tvg_;
  Tick horizon_;
  Tick now_ = 0;
  std::map<VertexId, std::unique_ptr<Process>> processes_;
  std::map<VertexId, OutputValue> outputs_;
  std::map<MessageId, Pending> pending_;
  std::set<Edge> up_;
  std::priority_queue<Action, std::vector<Action>, Later> queue_;
  std::uint64_t next_seq_ = 0;
  MessageId next_message_ = 1;
  Trace trace_;
};

class UgProcess final : public Process {
 public:
  explicit UgProcess(VertexId self) : self_(std::move(self)), state_(ug_initial(self_)) {}

  void on_edge_appear(const VertexId& other, std::vector<Outgoing>& sends) override {
    apply(ug_on_edge_appear(std::move(state_), self_, other), sends);
  }
  void on_receive(const VertexId& from, const Payload& payload,
                  std::vector<Outgoing>& sends) override {
    if (const auto* add = std::get_if<AddGraph>(&payload)) {
      apply(ug_on_receive(std::move(state_), self_, from, add->graph), sends);
    }
  }
  OutputValue output() const override { return ug_output(state_); }
  ProtocolState state() const override { return state_; }

 private:
  void apply(Transition<UgState> t, std::vector<Outgoing>& sends) {
    state_ = std::move(t.state);
    sends = std::move(t.sends);
  }

  VertexId self_;
  UgState state_;
};

class MdstProcess final : public Process {
 public:
  explicit MdstProcess(VertexId self) : self_(std::move(self)), state_(mdst_initial(self_)) {}

  void on_edge_appear(const VertexId& other, std::vector<Outgoing>& sends) override {
    apply(mdst_on_edge_appear(std::move(state_), self_, other), sends);
  }
  void on_receive(const VertexId& from, const Payload& payload,
                  std::vector<Outgoing>& sends) override {
    if (const auto* add = std::get_if<AddGraph>(&payload)) {
      apply(mdst_on_receive(std::move(state_), self_, from, add->graph), sends);
    }
  }
  OutputValue output() const override { return state_.in_mdst; }
  ProtocolState state() const override { return state_; }

 private:
  void apply(Transition<MdstState> t, std::vector<Outgoing>& sends) {
    state_ = std::move(t.state);
    sends = std::move(t.sends);
  }

  VertexId self_;
  MdstState state_;
};

class FloodProcess final : public Process {
 public:
  FloodProcess(VertexId self, bool informed) : self_(std::move(self)), state_(flood_initial(informed)) {}

  void on_edge_appear(const VertexId& other, std::vector<Outgoing>& sends) override {
    apply(flood_on_edge_appear(std::move(state_), self_, other), sends);
  }
  void on_receive(const VertexId& from, const Payload& payload,
                  std::vector<Outgoing>& sends) override {
    if (std::holds_alternative<FloodToken>(payload)) {
      apply(flood_on_receive(std::move(state_), self_, from), sends);
    }
  }
  void on_request(std::vector<Outgoing>& sends) override {
    apply(flood_on_request(std::move(state_), self_), sends);
  }
  OutputValue output() const override { return state_.have_message; }
  ProtocolState state() const override { return state_; }

 private:
  void apply(Transition<BroadcastState> t, std::vector<Outgoing>& sends) {
    state_ = std::move(t.state);
    sends = std::move(t.sends);
  }

  VertexId self_;
  BroadcastState state_;
};

}  // namespace

Trace simulate(const Tvg& tvg, const ProcessFactory& factory, Tick horizon,
               std::span<const ServiceRequest> requests) {
  if (horizon <= 0) throw DomainError("simulation horizon must be positive");
  return Engine(tvg, factory, horizon, requests).run();
}

ProcessFactory make_process_factory(const ProtocolConfig& config) {
  switch (config.kind) {
    case ProtocolKind::kUnderlyingGraph:
      return [](const VertexId& v) { return std::make_unique<UgProcess>(v); };
    case ProtocolKind::kMdst:
      return [](const VertexId& v) { return std::make_unique<MdstProcess>(v); };
    case ProtocolKind::kFlood: {
      if (!config.origin) throw ConfigError("protocol 'flood' requires an origin vertex");
      // An origin asked at tick 0 simply starts out informed.
      const bool informed_at_start = config.request_time == 0;
      return [origin = *config.origin, informed_at_start](const VertexId& v) {
        return std::make_unique<FloodProcess>(v, informed_at_start && v == origin);
      };
    }
  }
  throw ConfigError("unregistered protocol");
}

Trace run(const Tvg& tvg, const ProtocolConfig& config, Tick horizon, std::uint64_t /*seed*/) {
  std::vector<ServiceRequest> requests;
  if (config.kind == ProtocolKind::kFlood) {
    if (!config.origin || !tvg.graph().has_vertex(*config.origin)) {
      throw ConfigError("flood origin is not a vertex of the scenario");
    }
    if (config.request_time > 0) requests.push_back({*config.origin, config.request_time});
  }
  return simulate(tvg, make_process_factory(config), horizon, requests);
}

}  // namespace tvgkit
