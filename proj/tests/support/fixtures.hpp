#pragma once

// Shared test inputs: compact graph literals, schedules and the scenario
// corpus that the trace-level properties run over.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tvgkit/domination.hpp"
#include "tvgkit/engine.hpp"
#include "tvgkit/errors.hpp"
#include "tvgkit/protocols.hpp"
#include "tvgkit/scenarios.hpp"
#include "tvgkit/tvg.hpp"

namespace fixtures {

using namespace tvgkit;

inline VertexId v(const std::string& name) { return VertexId(name); }
inline Edge e(const std::string& a, const std::string& b) { return Edge(v(a), v(b)); }

/// "p1-p2 p2-p3" plus optional isolated vertices.
inline StaticGraph graph(const std::string& edges, const std::vector<std::string>& extra = {}) {
  StaticGraph g;
  std::istringstream in(edges);
  std::string tok;
  while (in >> tok) {
    const auto dash = tok.find('-');
    g.add_edge(e(tok.substr(0, dash), tok.substr(dash + 1)));
  }
  for (const auto& x : extra) g.add_vertex(v(x));
  return g;
}

inline VertexSet set(std::initializer_list<const char*> names) {
  VertexSet s;
  for (const auto* n : names) s.insert(v(n));
  return s;
}

inline StaticGraph cycle(std::size_t n) { return named_graph("cycle", n); }
inline StaticGraph complete(std::size_t n) { return named_graph("complete", n); }
inline StaticGraph path(std::size_t n) { return named_graph("path", n); }
inline StaticGraph star(std::size_t leaves) { return named_graph("star", leaves + 1); }

/// Two vertices a, b joined by one edge with the given presence.
inline Tvg single_edge(PresenceSchedule s, Tick latency = 1) {
  StaticGraph g = graph("a-b");
  return Tvg(g, {{e("a", "b"), EdgeTiming{std::move(s), latency}}});
}

// Sends one token to `peer` on every service request; otherwise inert.
class Sender : public Process {
 public:
  explicit Sender(VertexId peer) : peer_(std::move(peer)) {}
  void on_edge_appear(const VertexId&, std::vector<Outgoing>&) override {}
  void on_receive(const VertexId&, const Payload&, std::vector<Outgoing>&) override { ++received_; }
  void on_request(std::vector<Outgoing>& sends) override { sends.push_back({peer_, FloodToken{}}); }
  OutputValue output() const override { return received_ > 0; }

 private:
  VertexId peer_;
  int received_ = 0;
};

/// Senders for single_edge(): a sends to b and b to a.
inline ProcessFactory senders() {
  return [](const VertexId& self) {
    return std::make_unique<Sender>(self == v("a") ? v("b") : v("a"));
  };
}

struct Run {
  std::string name;
  Tvg tvg;
  ProtocolConfig config;
  Tick horizon;
};

/// Every (scenario, protocol) pair the trace-level properties are checked on.
/// Random scenarios use a horizon large enough for the UG protocol to settle.
inline std::vector<Run> corpus() {
  std::vector<Run> out;
  auto add_all = [&](const std::string& name, const Tvg& tvg, Tick horizon) {
    out.push_back({name + "/ug", tvg, {ProtocolKind::kUnderlyingGraph, {}, 0}, horizon});
    out.push_back({name + "/mdst", tvg, {ProtocolKind::kMdst, {}, 0}, horizon});
    const VertexId origin = *tvg.graph().vertices().begin();
    out.push_back({name + "/flood", tvg, {ProtocolKind::kFlood, origin, 0}, horizon});
  };
  for (int k = 1; k <= 4; ++k) add_all("gk" + std::to_string(k), generate_gk(k), 40);
  for (const auto* fam : {"path", "cycle", "star", "complete"}) {
    for (std::size_t n : {3u, 5u, 7u}) {
      add_all(std::string(fam) + std::to_string(n), static_tvg(named_graph(fam, n), 2), 40);
    }
  }
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomCotParams p;
    p.nodes = 3 + seed % 8;
    p.extra_edge_probability = 0.15 + 0.05 * static_cast<double>(seed % 5);
    p.missing_fraction = 0.1 * static_cast<double>(seed % 4);
    p.horizon = 80;
    p.seed = seed;
    add_all("random" + std::to_string(seed), generate_random_cot(p), 400);
  }
  return out;
}

/// Small arbitrary TVG (not necessarily connected over time): `n` vertices,
/// each pair an edge with probability 1/2, presence drawn inside [0, span)
/// plus, for some edges, a periodic tail starting before `span`.
inline Tvg small_random_tvg(std::uint64_t seed, std::size_t n, Tick span) {
  std::mt19937_64 rng(seed);
  auto draw = [&](Tick lo, Tick hi) { return lo + static_cast<Tick>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  StaticGraph g;
  std::map<Edge, EdgeTiming> timing;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(v("p" + std::to_string(i)));
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      if (rng() % 2) continue;
      std::vector<Interval> iv;
      Tick at = draw(0, span / 2);
      const int count = static_cast<int>(draw(0, 3));
      for (int c = 0; c < count && at < span - 1; ++c) {
        const Tick len = draw(1, std::min<Tick>(5, span - 1 - at));
        iv.push_back({at, at + len});
        at += len + draw(1, 4);
      }
      std::optional<PeriodicTail> tail;
      if (iv.empty() || rng() % 3 == 0) {
        const Tick period = draw(1, 7);
        tail = PeriodicTail{std::max<Tick>(at, draw(0, span - 1)), period, draw(1, period)};
      }
      const Edge edge(v("p" + std::to_string(i)), v("p" + std::to_string(j)));
      g.add_edge(edge);
      timing.emplace(edge, EdgeTiming{PresenceSchedule(iv, tail), draw(1, 4)});
    }
  }
  return Tvg(g, std::move(timing));
}

/// Random connected-over-time scenarios whose underlying graph admits a strong
/// minimal dominating set (sparse graphs, so trees and near-trees dominate).
inline std::vector<Tvg> smds_scenarios(std::size_t count) {
  std::vector<Tvg> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    RandomCotParams p;
    p.nodes = 2 + seed % 9;
    p.extra_edge_probability = 0.05 * static_cast<double>(seed % 6);
    p.missing_fraction = 0.5 * static_cast<double>(seed % 3) / 2.0;
    p.horizon = 80;
    p.seed = 1000 + seed;
    try {
      Tvg t = generate_random_cot(p);
      if (find_smds(underlying_graph(t))) out.push_back(std::move(t));
    } catch (const GenerationError&) {
      // the fraction cannot be marked without disconnecting the recurrent edges
    }
  }
  return out;
}

/// The UG convergence corpus: seeded random COT scenarios on 2..10 nodes.
inline std::vector<Tvg> cot_scenarios(std::size_t count) {
  std::vector<Tvg> out;
  for (std::uint64_t seed = 1; out.size() < count; ++seed) {
    RandomCotParams p;
    p.nodes = 2 + seed % 9;
    p.extra_edge_probability = 0.1 * static_cast<double>(seed % 6);
    p.missing_fraction = 0.2 * static_cast<double>(seed % 4);
    p.horizon = 40 + 20 * static_cast<Tick>(seed % 4);
    p.seed = seed;
    try {
      out.push_back(generate_random_cot(p));
    } catch (const GenerationError&) {
      // the fraction cannot be marked without disconnecting the recurrent edges
    }
  }
  return out;
}

}  // namespace fixtures
