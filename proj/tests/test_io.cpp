#include <gtest/gtest.h>

#include <filesystem>

#include "support/fixtures.hpp"
#include "tvgkit/errors.hpp"
#include "tvgkit/graph_io.hpp"
#include "tvgkit/scenario_io.hpp"

using namespace tvgkit;
using namespace fixtures;

namespace {

std::size_t error_line(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& err) {
    return err.line();
  }
  return 0;
}

}  // namespace

TEST(GraphIoTest, ParsesWithComments) {
  const auto g = parse_graph(
      "# a comment\n"
      "vertices: p1, p2,p3\n"
      "\n"
      "edge: p1 p2\n"
      "# another\n"
      "edge: p3 p2\n");
  EXPECT_EQ(g, graph("p1-p2 p2-p3"));
}

TEST(GraphIoTest, IsolatedVerticesKept) {
  EXPECT_EQ(parse_graph("vertices: a,b,c\nedge: a b\n"), graph("a-b", {"c"}));
}

TEST(GraphIoTest, RoundTrip) {
  for (const auto& g : {cycle(5), star(3), graph("a-b", {"z"})}) {
    EXPECT_EQ(parse_graph(format_graph(g)), g);
  }
}

TEST(GraphIoTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line([] { parse_graph("edge: a b\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_graph("vertices: a,b\nedge: a c\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_graph("vertices: a,b\n\nedge: a a\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_graph("vertices: a,b\nedge: a b\nedge: b a\n"); }), 3u);
  EXPECT_EQ(error_line([] { parse_graph("vertices: a,a\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_graph("vertices: a,b-c\n"); }), 1u);
  EXPECT_EQ(error_line([] { parse_graph("vertices: a,b\nedge: a\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_graph("vertices: a,b\nlink: a b\n"); }), 2u);
  EXPECT_EQ(error_line([] { parse_graph("# only comments\n"); }), 1u);
}

TEST(GraphIoTest, MessagePrefixedWithLine) {
  try {
    parse_graph("vertices: a,b\nedge: a c\n");
    FAIL();
  } catch (const ParseError& err) {
    EXPECT_EQ(std::string(err.what()).rfind("line 2: ", 0), 0u) << err.what();
  }
}

TEST(ScenarioIoTest, ParsesFullExample) {
  const Tvg t = parse_scenario(R"({
  "vertices": ["p0", "p1", "p2"],
  "edges": [
    {"u": "p0", "v": "p1", "latency": 2, "intervals": [[0, 5]],
     "periodic": {"offset": 10, "period": 4, "duration": 1}},
    {"u": "p1", "v": "p2", "intervals": [[3, 4], [6, 9]]}
  ],
  "process_latency": 1
})");
  EXPECT_EQ(t.graph(), graph("p0-p1 p1-p2"));
  EXPECT_EQ(t.process_latency(), 1);
  const auto& a = t.timing(e("p0", "p1"));
  EXPECT_EQ(a.latency, 2);
  EXPECT_EQ(a.schedule, PresenceSchedule({{0, 5}}, PeriodicTail{10, 4, 1}));
  const auto& b = t.timing(e("p1", "p2"));
  EXPECT_EQ(b.latency, 1);
  EXPECT_FALSE(b.schedule.recurrent());
}

TEST(ScenarioIoTest, RoundTripIsByteStable) {
  for (int k = 1; k <= 3; ++k) {
    const Tvg g = generate_gk(k);
    const auto text = format_scenario(g);
    EXPECT_EQ(parse_scenario(text), g);
    EXPECT_EQ(format_scenario(parse_scenario(text)), text);
  }
  RandomCotParams p;
  p.seed = 5;
  const Tvg r = generate_random_cot(p);
  EXPECT_EQ(parse_scenario(format_scenario(r)), r);
}

TEST(ScenarioIoTest, InvariantViolationsReportEdgeLine) {
  const std::string head = "{\n\"vertices\": [\"a\", \"b\", \"c\"],\n\"edges\": [\n";
  // line 4 holds the first edge, line 5 the second
  auto with = [&](const std::string& second) {
    return head + R"({"u": "a", "v": "b", "latency": 1, "intervals": [[0, 2]]},)" + "\n" + second +
           "\n]\n}\n";
  };
  EXPECT_EQ(error_line([&] { parse_scenario(with(R"({"u": "b", "v": "c", "latency": 0, "intervals": [[0, 2]]})")); }), 5u);
  EXPECT_EQ(error_line([&] { parse_scenario(with(R"({"u": "b", "v": "c", "intervals": [[4, 2]]})")); }), 5u);
  EXPECT_EQ(error_line([&] { parse_scenario(with(R"({"u": "b", "v": "c", "intervals": [[0, 3], [2, 5]]})")); }), 5u);
  EXPECT_EQ(error_line([&] { parse_scenario(with(R"({"u": "b", "v": "x", "intervals": [[0, 2]]})")); }), 5u);
  EXPECT_EQ(error_line([&] { parse_scenario(with(R"({"u": "b", "v": "b", "intervals": [[0, 2]]})")); }), 5u);
  EXPECT_EQ(error_line([&] { parse_scenario(with(R"({"u": "b", "v": "a", "intervals": [[5, 6]]})")); }), 5u);
  EXPECT_EQ(error_line([&] { parse_scenario(with(R"({"u": "b", "v": "c", "intervals": []})")); }), 5u);
  EXPECT_EQ(error_line([&] { parse_scenario(with(R"({"u": "b", "v": "c", "intervals": [], "periodic": {"offset": 0, "period": 2, "duration": 3}})")); }), 5u);
  EXPECT_EQ(error_line([&] { parse_scenario(with(R"({"u": "b", "v": "c", "intervals": [[0, 1]], "colour": 3})")); }), 5u);
}

TEST(ScenarioIoTest, SyntaxErrorsReportLine) {
  EXPECT_EQ(error_line([] { parse_scenario("{\n\"vertices\": [\"a\",\n\"b\"\n\"edges\": []}"); }), 4u);
  EXPECT_EQ(error_line([] { parse_scenario("{\"vertices\": \"a\", \"edges\": []}"); }), 1u);
  EXPECT_GT(error_line([] { parse_scenario("{\"edges\": []}"); }), 0u);
  EXPECT_GT(error_line([] { parse_scenario("{\"vertices\": [\"a b\"], \"edges\": []}"); }), 0u);
  EXPECT_GT(error_line([] { parse_scenario("{\"vertices\": [\"a\"], \"edges\": [], \"process_latency\": -1}"); }), 0u);
}

TEST(ScenarioIoTest, MissingFile) {
  EXPECT_THROW(load_scenario("/nonexistent/x.json"), ParseError);
  EXPECT_THROW(load_graph("/nonexistent/x.txt"), ParseError);
}

TEST(ScenarioIoTest, SaveAndLoad) {
  const auto path = std::filesystem::temp_directory_path() / "tvgkit_io_test.json";
  save_scenario(path, generate_gk(2));
  EXPECT_EQ(load_scenario(path), generate_gk(2));
  std::filesystem::remove(path);
}

TEST(ScenarioIoTest, TopLevelErrorsPointAtTheirKey) {
  EXPECT_EQ(error_line([] { parse_scenario("{\n\"vertices\": [\"a\"],\n\"edges\": 3\n}"); }), 3u);
  EXPECT_EQ(error_line([] { parse_scenario("{\n\"vertices\": [\"a\",\n\"a\"],\n\"edges\": []\n}"); }), 3u);
  EXPECT_EQ(error_line([] {
              parse_scenario("{\n\"vertices\": [\"a\"],\n\"edges\": [],\n\"process_latency\": -2\n}");
            }), 4u);
}
