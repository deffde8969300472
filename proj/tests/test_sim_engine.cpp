#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "tvgkit/engine.hpp"
#include "tvgkit/errors.hpp"
#include "tvgkit/trace.hpp"

using namespace tvgkit;
using namespace fixtures;

namespace {

std::vector<TraceEvent> of_kind(const Trace& t, EventKind k) {
  std::vector<TraceEvent> out;
  for (const auto& ev : t.events) {
    if (ev.kind == k) out.push_back(ev);
  }
  return out;
}

const ProtocolConfig kUg{ProtocolKind::kUnderlyingGraph, {}, 0};

}  // namespace

TEST(EngineTest, TwoVertexUgDeliversAtTickOne) {
  const Trace t = run(single_edge(PresenceSchedule({{0, 10}})), kUg, 20);
  const auto delivered = of_kind(t, EventKind::kMessageDelivered);
  ASSERT_EQ(delivered.size(), 2u);
  for (const auto& ev : delivered) EXPECT_EQ(ev.time, 1);
  EXPECT_EQ(of_kind(t, EventKind::kSendInvoked).size(), 2u);
  for (const auto& [vx, out] : t.final_outputs) EXPECT_EQ(out, OutputValue(graph("a-b"))) << vx;
}

TEST(EngineTest, WindowShorterThanLatencyLosesMessage) {
  const Trace t = simulate(single_edge(PresenceSchedule({{0, 1}}), 2), senders(), 20,
                           std::vector<ServiceRequest>{{v("a"), 0}});
  EXPECT_TRUE(of_kind(t, EventKind::kMessageDelivered).empty());
  const auto lost = of_kind(t, EventKind::kMessageLost);
  ASSERT_EQ(lost.size(), 1u);
  EXPECT_EQ(lost[0].time, 1);
  EXPECT_EQ(of_kind(t, EventKind::kSendInvoked).size(), 1u);
}

TEST(EngineTest, LostMessageRetriedOnReappearance) {
  const Trace t = simulate(single_edge(PresenceSchedule({{0, 1}, {5, 8}}), 2), senders(), 20,
                           std::vector<ServiceRequest>{{v("a"), 0}});
  const auto delivered = of_kind(t, EventKind::kMessageDelivered);
  ASSERT_EQ(delivered.size(), 1u);
  EXPECT_EQ(delivered[0].time, 7);
  EXPECT_EQ(std::get<MessageRef>(delivered[0].subject).invoked_at, 0);
  EXPECT_EQ(of_kind(t, EventKind::kMessageLost).size(), 1u);
}

TEST(EngineTest, SendIntoGapWaitsForNextOccurrence) {
  const Trace t = simulate(single_edge(PresenceSchedule({{0, 2}, {6, 9}}), 1), senders(), 20,
                           std::vector<ServiceRequest>{{v("a"), 3}});
  const auto delivered = of_kind(t, EventKind::kMessageDelivered);
  ASSERT_EQ(delivered.size(), 1u);
  EXPECT_EQ(delivered[0].time, 7);
  EXPECT_TRUE(of_kind(t, EventKind::kMessageLost).empty());
}

TEST(EngineTest, DueExactlyAtDisappearanceIsDelivered) {
  const Trace t = simulate(single_edge(PresenceSchedule({{0, 3}}), 3), senders(), 20,
                           std::vector<ServiceRequest>{{v("a"), 0}});
  ASSERT_EQ(of_kind(t, EventKind::kMessageDelivered).size(), 1u);
  EXPECT_EQ(of_kind(t, EventKind::kMessageDelivered)[0].time, 3);
  EXPECT_TRUE(of_kind(t, EventKind::kMessageLost).empty());
}

TEST(EngineTest, EdgeEventsInEdgeOrder) {
  const StaticGraph g = graph("b-c a-b");
  const Tvg tvg(g, {{e("a", "b"), {PresenceSchedule({{2, 4}}), 1}},
                    {e("b", "c"), {PresenceSchedule({{2, 4}}), 1}}});
  const Trace t = run(tvg, kUg, 10);
  const auto ups = of_kind(t, EventKind::kEdgeUp);
  ASSERT_EQ(ups.size(), 2u);
  EXPECT_EQ(std::get<Edge>(ups[0].subject), e("a", "b"));
  EXPECT_EQ(std::get<Edge>(ups[1].subject), e("b", "c"));
  // endpoints notified lower id first, edges in order: a, b (for a-b), then b, c
  std::vector<VertexId> changed;
  for (const auto& ev : of_kind(t, EventKind::kOutputChanged)) {
    if (ev.time == 2) changed.push_back(std::get<OutputRef>(ev.subject).vertex);
  }
  EXPECT_EQ(changed, (std::vector<VertexId>{v("a"), v("b"), v("b"), v("c")}));
}

TEST(EngineTest, DownThenUpThenDeliveryAtSameTick) {
  // a-b carries a message due at 4; b-c leaves at 4 and c-d appears at 4.
  const StaticGraph g = graph("a-b b-c c-d");
  const Tvg tvg(g, {{e("a", "b"), {PresenceSchedule({{0, 10}}), 4}},
                    {e("b", "c"), {PresenceSchedule({{0, 4}}), 9}},
                    {e("c", "d"), {PresenceSchedule({{4, 6}}), 9}}});
  const Trace t = run(tvg, kUg, 5);
  std::vector<EventKind> at4;
  for (const auto& ev : t.events) {
    if (ev.time == 4 && ev.kind != EventKind::kOutputChanged && ev.kind != EventKind::kSendInvoked &&
        ev.kind != EventKind::kMessageLost) {
      at4.push_back(ev.kind);
    }
  }
  ASSERT_GE(at4.size(), 3u);
  EXPECT_EQ(at4[0], EventKind::kEdgeDown);
  EXPECT_EQ(at4[1], EventKind::kEdgeUp);
  EXPECT_EQ(at4[2], EventKind::kMessageDelivered);
}

TEST(EngineTest, EqualTickDeliveriesInMessageIdOrder) {
  const Trace t = run(static_tvg(star(3)), kUg, 10);
  Tick last_time = -1;
  MessageId last_id = 0;
  for (const auto& ev : of_kind(t, EventKind::kMessageDelivered)) {
    const auto id = std::get<MessageRef>(ev.subject).id;
    if (ev.time == last_time) EXPECT_GT(id, last_id);
    last_time = ev.time;
    last_id = id;
  }
}

TEST(EngineTest, ProcessLatencyDefersCallbacks) {
  StaticGraph g = graph("a-b");
  const Tvg tvg(g, {{e("a", "b"), {PresenceSchedule::always(), 1}}}, 3);
  const Trace t = run(tvg, kUg, 20);
  const auto changes = of_kind(t, EventKind::kOutputChanged);
  ASSERT_FALSE(changes.empty());
  EXPECT_EQ(changes.front().time, 3);
  EXPECT_EQ(of_kind(t, EventKind::kMessageDelivered).front().time, 4);
}

TEST(EngineTest, ReplayOutputs) {
  const Trace t = run(single_edge(PresenceSchedule({{0, 10}})), kUg, 20);
  EXPECT_EQ(replay_outputs(t, 0).at(v("a")), OutputValue(graph("a-b")));
  EXPECT_EQ(replay_outputs(t, 1).at(v("b")), OutputValue(graph("a-b")));
  EXPECT_EQ(replay_outputs(t, 20), t.final_outputs);
  EXPECT_THROW(replay_outputs(t, 21), DomainError);

  const Trace late = run(single_edge(PresenceSchedule({{5, 10}})), kUg, 20);
  EXPECT_EQ(replay_outputs(late, 2), late.initial_outputs);
  EXPECT_EQ(replay_outputs(late, 2).at(v("a")), OutputValue(graph("", {"a"})));
}

TEST(EngineTest, UnknownProtocolIsConfigError) {
  EXPECT_THROW(parse_protocol("gossip"), ConfigError);
  EXPECT_THROW(parse_protocol("flood"), ConfigError);
  EXPECT_NO_THROW(parse_protocol("flood", v("a")));
  EXPECT_EQ(parse_protocol("mdst").kind, ProtocolKind::kMdst);
  ProtocolConfig bad{ProtocolKind::kFlood, v("zz"), 0};
  EXPECT_THROW(run(single_edge(PresenceSchedule::always()), bad, 5), ConfigError);
}

TEST(EngineTest, RejectsBadHorizonAndRequests) {
  const Tvg t = single_edge(PresenceSchedule::always());
  EXPECT_THROW(run(t, kUg, 0), DomainError);
  EXPECT_THROW(simulate(t, senders(), 5, std::vector<ServiceRequest>{{v("q"), 0}}), ConfigError);
}

TEST(EngineTest, SeedDoesNotChangeTrace) {
  const Tvg g = generate_gk(2);
  EXPECT_EQ(serialize(run(g, kUg, 30, 1)), serialize(run(g, kUg, 30, 99)));
}

TEST(TraceTest, SerializationFormat) {
  const Trace t = simulate(single_edge(PresenceSchedule({{0, 1}, {5, 8}}), 2), senders(), 10,
                           std::vector<ServiceRequest>{{v("a"), 0}});
  EXPECT_EQ(serialize(t),
            "0 EdgeUp a b\n"
            "0 SendInvoked 1 a b\n"
            "1 EdgeDown a b\n"
            "1 MessageLost 1 a b\n"
            "5 EdgeUp a b\n"
            "7 MessageDelivered 1 a b 0\n"
            "7 OutputChanged b true\n"
            "8 EdgeDown a b\n"
            "FINAL\n"
            "a false\n"
            "b true\n");
}
