#include "tvgkit/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "tvgkit/errors.hpp"

namespace tvgkit {
namespace {

VertexId vertex(std::size_t i) { return VertexId("p" + std::to_string(i)); }

// Portable draws on top of mt19937_64 (the std distributions are
// implementation-defined, which would break cross-platform reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  Tick between(Tick lo, Tick hi) {
    if (hi <= lo) return lo;
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Tick>(engine_() % span);
  }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[static_cast<std::size_t>(between(0, static_cast<Tick>(i - 1)))]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

StaticGraph random_tree(std::size_t n, Rng& rng) {
  std::vector<VertexId> order;
  for (std::size_t i = 1; i <= n; ++i) order.push_back(vertex(i));
  rng.shuffle(order);
  StaticGraph g;
  g.add_vertex(order[0]);
  for (std::size_t i = 1; i < n; ++i) {
    const auto parent = static_cast<std::size_t>(rng.between(0, static_cast<Tick>(i - 1)));
    g.add_edge(Edge(order[i], order[parent]));
  }
  return g;
}

// A few short intervals, the first starting before `first_before`.
std::vector<Interval> random_intervals(Rng& rng, int count, Tick first_before) {
  std::vector<Interval> out;
  Tick at = rng.between(0, first_before - 1);
  for (int i = 0; i < count; ++i) {
    const Tick len = rng.between(1, 4);
    out.push_back({at, at + len});
    at += len + rng.between(1, 5);
  }
  return out;
}

}  // namespace

Tvg generate_gk(int k) {
  if (k < 1) throw DomainError("g_k needs k >= 1");
  const auto last = static_cast<std::size_t>(3 * k);
  const Edge chord_a(vertex(0), vertex(static_cast<std::size_t>(2 * k)));
  const Edge chord_b(vertex(static_cast<std::size_t>(2 * k)), vertex(last));

  StaticGraph g;
  std::map<Edge, EdgeTiming> timing;
  for (std::size_t i = 0; i < last; ++i) {
    const Edge e(vertex(i), vertex(i + 1));
    g.add_edge(e);
    // A path edge that is also a chord (only {p2,p3} when k = 1) is present
    // before tick 1 as a chord and from tick 1 on as a path edge.
    const bool also_chord = e == chord_a || e == chord_b;
    timing.emplace(e, EdgeTiming{PresenceSchedule::always(also_chord ? 0 : 1), 1});
  }
  for (const auto& chord : {chord_a, chord_b}) {
    if (g.add_edge(chord)) timing.emplace(chord, EdgeTiming{PresenceSchedule({{0, 1}}), 1});
  }
  return Tvg(std::move(g), std::move(timing), 0);
}

Tvg generate_random_cot(const RandomCotParams& params) {
  if (params.nodes < 2) throw GenerationError("random scenarios need at least 2 nodes");
  if (params.extra_edge_probability < 0 || params.extra_edge_probability > 1) {
    throw GenerationError("extra edge probability must lie in [0,1]");
  }
  if (params.missing_fraction < 0 || params.missing_fraction > 1) {
    throw GenerationError("missing fraction must lie in [0,1]");
  }
  if (params.horizon < 40) throw GenerationError("generation horizon must be at least 40 ticks");

  Rng rng(params.seed);
  StaticGraph g = random_tree(params.nodes, rng);
  for (std::size_t i = 1; i <= params.nodes; ++i) {
    for (std::size_t j = i + 1; j <= params.nodes; ++j) {
      const Edge e(vertex(i), vertex(j));
      if (!g.has_edge(e) && rng.chance(params.extra_edge_probability)) g.add_edge(e);
    }
  }

  // Bridges of the underlying graph stay recurrent; a share of the others
  // becomes eventually missing as long as the recurrent rest stays connected.
  std::vector<Edge> candidates;
  for (const auto& e : g.edges()) {
    if (!is_cut_set(g, {e})) candidates.push_back(e);
  }
  rng.shuffle(candidates);
  const auto target =
      static_cast<std::size_t>(std::llround(params.missing_fraction * static_cast<double>(candidates.size())));
  EdgeSet missing;
  StaticGraph recurrent = g;
  for (const auto& e : candidates) {
    if (missing.size() == target) break;
    StaticGraph trial = recurrent.without_edges({e});
    if (!is_connected(trial)) continue;
    recurrent = std::move(trial);
    missing.insert(e);
  }
  if (missing.size() < target) {
    throw GenerationError("cannot mark " + std::to_string(target) +
                          " eventual missing edges and keep the recurrent graph connected");
  }

  const Tick early = std::max<Tick>(params.horizon / 4, 1);
  std::map<Edge, EdgeTiming> timing;
  for (const auto& e : g.edges()) {
    EdgeTiming t;
    t.latency = rng.between(1, 3);
    if (missing.contains(e)) {
      t.schedule = PresenceSchedule(random_intervals(rng, static_cast<int>(rng.between(1, 3)), early));
    } else {
      auto intervals = random_intervals(rng, static_cast<int>(rng.between(0, 2)), early);
      const Tick period = rng.between(std::max<Tick>(t.latency, 2), 8);
      const Tick duration = rng.between(t.latency, period);
      const Tick offset = intervals.empty() ? rng.between(0, early - 1)
                                            : intervals.back().end + rng.between(0, 5);
      t.schedule = PresenceSchedule(std::move(intervals), PeriodicTail{offset, period, duration});
    }
    timing.emplace(e, std::move(t));
  }
  return Tvg(std::move(g), std::move(timing), 0);
}

StaticGraph named_graph(std::string_view name, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("named graphs need at least one vertex");
  StaticGraph g;
  for (std::size_t i = 1; i <= n; ++i) g.add_vertex(vertex(i));
  if (name == "path") {
    for (std::size_t i = 1; i < n; ++i) g.add_edge(Edge(vertex(i), vertex(i + 1)));
  } else if (name == "cycle") {
    if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
    for (std::size_t i = 1; i <= n; ++i) g.add_edge(Edge(vertex(i), vertex(i % n + 1)));
  } else if (name == "star") {
    for (std::size_t i = 2; i <= n; ++i) g.add_edge(Edge(vertex(1), vertex(i)));
  } else if (name == "complete") {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) g.add_edge(Edge(vertex(i), vertex(j)));
    }
  } else if (name == "tree_random") {
    Rng rng(seed);
    return random_tree(n, rng);
  } else {
    throw DomainError("unknown graph family '" + std::string(name) + "'");
  }
  return g;
}

Tvg static_tvg(const StaticGraph& g, Tick latency) {
  std::map<Edge, EdgeTiming> timing;
  for (const auto& e : g.edges()) timing.emplace(e, EdgeTiming{PresenceSchedule::always(0), latency});
  return Tvg(g, std::move(timing), 0);
}

}  // namespace tvgkit
