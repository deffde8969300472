#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"
#include "support/fixtures.hpp"
#include "tvgkit/errors.hpp"
#include "tvgkit/journey.hpp"

using namespace tvgkit;
using namespace fixtures;

namespace {

PresenceSchedule finite(std::vector<Interval> iv) { return PresenceSchedule(std::move(iv)); }

}  // namespace

TEST(ScheduleTest, HalfOpenBoundary) {
  const auto s = finite({{0, 5}});
  EXPECT_TRUE(s.present(0));
  EXPECT_TRUE(s.present(4));
  EXPECT_FALSE(s.present(5));
}

TEST(ScheduleTest, PeriodicTailOccurrences) {
  const PresenceSchedule s({}, PeriodicTail{10, 4, 1});
  EXPECT_FALSE(s.present(9));
  EXPECT_TRUE(s.present(10));
  EXPECT_FALSE(s.present(11));
  EXPECT_TRUE(s.present(14));
  EXPECT_TRUE(s.recurrent());
}

TEST(ScheduleTest, InvalidSchedulesRejected) {
  EXPECT_THROW(finite({{3, 3}}), DomainError);
  EXPECT_THROW(finite({{5, 8}, {0, 2}}), DomainError);
  EXPECT_THROW(finite({{0, 5}, {4, 8}}), DomainError);
  EXPECT_THROW(finite({{-1, 2}}), DomainError);
  EXPECT_THROW(PresenceSchedule({{0, 5}}, PeriodicTail{3, 4, 1}), DomainError);
  EXPECT_THROW(PresenceSchedule({}, PeriodicTail{0, 0, 0}), DomainError);
  EXPECT_THROW(PresenceSchedule({}, PeriodicTail{0, 3, 4}), DomainError);
  EXPECT_THROW(PresenceSchedule({}, PeriodicTail{0, 3, 0}), DomainError);
}

TEST(ScheduleTest, TouchingOccurrencesFormOneRun) {
  const PresenceSchedule s({{0, 5}}, PeriodicTail{5, 3, 3});
  EXPECT_EQ(s.run_containing(2), (Interval{0, kForever}));
  EXPECT_EQ(s.runs_overlapping(0, 100).size(), 1u);
}

TEST(ScheduleTest, EarliestWindow) {
  const PresenceSchedule s({{0, 2}, {5, 9}}, PeriodicTail{20, 10, 3});
  EXPECT_EQ(s.earliest_window(0, 2), 0);
  EXPECT_EQ(s.earliest_window(1, 2), 5);
  EXPECT_EQ(s.earliest_window(7, 3), 20);
  EXPECT_EQ(s.earliest_window(21, 3), 30);
  EXPECT_EQ(s.earliest_window(0, 4), 5);
  EXPECT_EQ(s.earliest_window(0, 5), std::nullopt);
}

TEST(ScheduleTest, PresenceMatchesOracleOnRandomSchedules) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Interval> iv;
    Tick at = static_cast<Tick>(rng() % 4);
    for (int i = 0; i < static_cast<int>(rng() % 4); ++i) {
      const Tick len = 1 + static_cast<Tick>(rng() % 4);
      iv.push_back({at, at + len});
      at += len + static_cast<Tick>(rng() % 3);
    }
    std::optional<PeriodicTail> tail;
    if (rng() % 2 || iv.empty()) {
      const Tick period = 1 + static_cast<Tick>(rng() % 6);
      tail = PeriodicTail{at + static_cast<Tick>(rng() % 3), period, 1 + static_cast<Tick>(rng() % period)};
    }
    const PresenceSchedule s(iv, tail);
    for (Tick t = 0; t < 60; ++t) ASSERT_EQ(s.present(t), oracle::present(s, t)) << trial << " t=" << t;
  }
}

TEST(TvgTest, InvariantsChecked) {
  const StaticGraph g = graph("a-b");
  EXPECT_THROW(Tvg(g, {}), DomainError);
  EXPECT_THROW(Tvg(g, {{e("a", "b"), EdgeTiming{PresenceSchedule{}, 1}}}), DomainError);
  EXPECT_THROW(Tvg(g, {{e("a", "b"), EdgeTiming{PresenceSchedule::always(), 0}}}), DomainError);
  EXPECT_THROW(Tvg(g, {{e("a", "c"), EdgeTiming{PresenceSchedule::always(), 1}}}), DomainError);
  EXPECT_THROW(Tvg(g, {{e("a", "b"), EdgeTiming{PresenceSchedule::always(), 1}}}, -1), DomainError);
}

TEST(TvgTest, PresenceExamples) {
  const Tvg t = single_edge(finite({{0, 5}}));
  EXPECT_TRUE(presence(t, e("a", "b"), 0));
  EXPECT_FALSE(presence(t, e("a", "b"), 5));
  EXPECT_THROW(presence(t, e("a", "c"), 0), DomainError);

  const Tvg g1 = generate_gk(1);
  EXPECT_TRUE(presence(g1, e("p0", "p2"), 0));
  EXPECT_FALSE(presence(g1, e("p0", "p2"), 1));
  EXPECT_FALSE(presence(g1, e("p0", "p1"), 0));
  EXPECT_TRUE(presence(g1, e("p0", "p1"), 1));
}

TEST(TvgTest, UnderlyingGraphs) {
  const Tvg one = single_edge(PresenceSchedule::always());
  EXPECT_EQ(underlying_graph(one), graph("a-b"));
  EXPECT_EQ(eventual_underlying_graph(one), graph("a-b"));

  const Tvg g1 = generate_gk(1);
  EXPECT_EQ(underlying_graph(g1), graph("p0-p1 p1-p2 p2-p3 p0-p2"));
  EXPECT_EQ(eventual_underlying_graph(g1), graph("p0-p1 p1-p2 p2-p3"));

  const Tvg gone = single_edge(finite({{0, 3}}));
  EXPECT_EQ(eventual_underlying_graph(gone), graph("", {"a", "b"}));
  EXPECT_TRUE(eventual_underlying_graph(gone).edges().empty());
}

TEST(TvgTest, ConnectedOverTime) {
  EXPECT_TRUE(is_connected_over_time(static_tvg(cycle(4))));
  for (int k = 1; k <= 4; ++k) EXPECT_TRUE(is_connected_over_time(generate_gk(k))) << k;
  EXPECT_FALSE(is_connected_over_time(single_edge(finite({{0, 3}}))));
}

TEST(JourneyTest, IsJourneyExamples) {
  const Tvg t = single_edge(finite({{3, 4}}));
  EXPECT_TRUE(is_journey(t, Journey{}, v("a"), v("a")));
  EXPECT_FALSE(is_journey(t, Journey{}, v("a"), v("b")));
  EXPECT_TRUE(is_journey(t, Journey{{{e("a", "b"), 3}}}, v("a"), v("b")));
  EXPECT_TRUE(is_journey(t, Journey{{{e("a", "b"), 3}}}, v("b"), v("a")));
  EXPECT_FALSE(is_journey(t, Journey{{{e("a", "b"), 2}}}, v("a"), v("b")));

  const Tvg p = static_tvg(path(3), 2);
  EXPECT_TRUE(is_journey(p, Journey{{{e("p1", "p2"), 0}, {e("p2", "p3"), 2}}}, v("p1"), v("p3")));
  EXPECT_FALSE(is_journey(p, Journey{{{e("p1", "p2"), 0}, {e("p2", "p3"), 1}}}, v("p1"), v("p3")));
  EXPECT_FALSE(is_journey(p, Journey{{{e("p1", "p2"), 0}, {e("p1", "p2"), 2}}}, v("p1"), v("p3")));
}

TEST(JourneyTest, EarliestArrivalExamples) {
  const Tvg t = single_edge(finite({{0, 5}}), 2);
  EXPECT_EQ(earliest_arrival(t, v("a"), v("a"), 7, HopRule::kDeliverable), 7);
  EXPECT_EQ(earliest_arrival(t, v("a"), v("b"), 0, HopRule::kDeliverable), 2);
  EXPECT_EQ(earliest_arrival(t, v("a"), v("b"), 4, HopRule::kDeliverable), std::nullopt);
  EXPECT_EQ(earliest_arrival(t, v("a"), v("b"), 4, HopRule::kPresentAtDeparture), 6);
  EXPECT_THROW(earliest_arrival(t, v("a"), v("zz"), 0, HopRule::kDeliverable), DomainError);

  const Tvg g1 = generate_gk(1);
  EXPECT_EQ(earliest_arrival(g1, v("p1"), v("p3"), 1, HopRule::kDeliverable), 3);
  EXPECT_EQ(oracle::time_expanded_arrival(g1, v("p1"), v("p3"), 1, true, 50), 3);
}

TEST(JourneyTest, StaticCaseIsHopDistanceTimesLatency) {
  for (const auto& g : {path(5), cycle(6), star(4), complete(4)}) {
    const Tvg t = static_tvg(g, 3);
    for (const auto& a : g.vertices()) {
      for (const auto& [b, d] : hop_distances(g, a)) {
        EXPECT_EQ(earliest_arrival(t, a, b, 0, HopRule::kDeliverable), static_cast<Tick>(d) * 3);
      }
    }
  }
}

TEST(RestrictTest, EmptyMaskIsIdentity) {
  const Tvg g = generate_gk(2);
  EXPECT_EQ(restrict(g, {}), g);
}

TEST(RestrictTest, FiniteMaskSplitsAlwaysPresentEdge) {
  const Tvg t = single_edge(PresenceSchedule::always());
  const EdgeMask m{{e("a", "b")}, {5, 10}};
  const Tvg r = restrict(t, std::span(&m, 1));
  const auto& s = r.timing(e("a", "b")).schedule;
  for (Tick x = 0; x < 30; ++x) EXPECT_EQ(s.present(x), x < 5 || x >= 10) << x;
  EXPECT_TRUE(s.recurrent());
  EXPECT_EQ(s.intervals(), (std::vector<Interval>{{0, 5}}));
}

TEST(RestrictTest, UnboundedMaskMakesEdgeNonRecurrent) {
  const Tvg t = single_edge(PresenceSchedule({{0, 2}}, PeriodicTail{4, 5, 2}));
  const EdgeMask m{{e("a", "b")}, {12, kForever}};
  const Tvg r = restrict(t, std::span(&m, 1));
  const auto& s = r.timing(e("a", "b")).schedule;
  EXPECT_FALSE(s.recurrent());
  for (Tick x = 0; x < 60; ++x) {
    const bool before = oracle::present(t.timing(e("a", "b")).schedule, x);
    EXPECT_EQ(s.present(x), before && x < 12) << x;
  }
  EXPECT_TRUE(eventual_underlying_graph(r).edges().empty());
}

TEST(RestrictTest, EdgeWithNoPresenceLeft) {
  const Tvg t = single_edge(finite({{3, 6}}));
  const EdgeMask m{{e("a", "b")}, {0, 10}};
  const Tvg r = restrict(t, std::span(&m, 1));
  EXPECT_TRUE(r.graph().edges().empty());
  EXPECT_EQ(r.graph().vertex_count(), 2u);
}

TEST(RestrictTest, UnknownEdgeIsDomainError) {
  const Tvg t = single_edge(PresenceSchedule::always());
  const EdgeMask m{{e("a", "c")}, {0, 10}};
  EXPECT_THROW(restrict(t, std::span(&m, 1)), DomainError);
}

TEST(SnapshotTest, Examples) {
  const auto one = snapshots(single_edge(PresenceSchedule::always()), 10);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0], (Snapshot{0, graph("a-b")}));

  const auto g1 = snapshots(generate_gk(1), 5);
  ASSERT_EQ(g1.size(), 2u);
  EXPECT_EQ(g1[0].time, 0);
  EXPECT_EQ(g1[0].graph.edges(), graph("p0-p2 p2-p3").edges());
  EXPECT_EQ(g1[1].time, 1);
  EXPECT_EQ(g1[1].graph.edges(), graph("p0-p1 p1-p2 p2-p3").edges());

  const auto blip = snapshots(single_edge(finite({{2, 3}})), 10);
  ASSERT_EQ(blip.size(), 3u);
  EXPECT_EQ(blip[0].time, 0);
  EXPECT_TRUE(blip[0].graph.edges().empty());
  EXPECT_EQ(blip[1].time, 2);
  EXPECT_EQ(blip[1].graph.edges().size(), 1u);
  EXPECT_EQ(blip[2].time, 3);
  EXPECT_TRUE(blip[2].graph.edges().empty());
}
