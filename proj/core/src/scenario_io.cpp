#include "tvgkit/scenario_io.hpp"

#include <cctype>
#include <set>

#include "io_util.hpp"
#include "json.hpp"
#include "tvgkit/errors.hpp"

namespace tvgkit {
namespace {

using nlohmann::json;

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

constexpr std::size_t kWholeValue = static_cast<std::size_t>(-1);

// Line on which element `index` of the top-level array `key` starts, or with
// kWholeValue the line of the key's value; 1 when the key is absent and 0 when
// the element cannot be located.
std::size_t element_line(std::string_view text, std::string_view key, std::size_t index) {
  int depth = 0;
  std::size_t i = 0;
  auto read_string = [&]() {
    std::string out;
    for (++i; i < text.size() && text[i] != '"'; ++i) {
      if (text[i] == '\\') ++i;
      if (i < text.size()) out += text[i];
    }
    ++i;
    return out;
  };
  auto skip_space = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '"') {
      const bool at_top = depth == 1;
      const auto s = read_string();
      skip_space();
      if (!(at_top && s == key && i < text.size() && text[i] == ':')) continue;
      ++i;
      skip_space();
      if (index == kWholeValue) return line_at(text, i);
      if (i >= text.size() || text[i] != '[') return 0;
      ++i;
      std::size_t element = 0;
      int inner = 0;
      bool expecting = true;
      while (i < text.size()) {
        skip_space();
        if (i >= text.size()) return 0;
        const char d = text[i];
        if (expecting && inner == 0 && d != ']') {
          if (element == index) return line_at(text, i);
          expecting = false;
        }
        if (d == '"') {
          read_string();
          continue;
        }
        if (d == '[' || d == '{') ++inner;
        if (d == ']' || d == '}') {
          if (inner == 0) return 0;
          --inner;
        }
        if (d == ',' && inner == 0) {
          ++element;
          expecting = true;
        }
        ++i;
      }
      return 0;
    }
    if (c == '{' || c == '[') ++depth;
    if (c == '}' || c == ']') --depth;
    ++i;
  }
  return 1;
}

Tick get_tick(const json& j, const char* what) {
  if (!j.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
  return j.get<Tick>();
}

VertexId get_vertex(const json& j, const char* what) {
  if (!j.is_string()) throw DomainError(std::string(what) + " must be a string");
  return VertexId(j.get<std::string>());
}

std::pair<Edge, EdgeTiming> parse_edge(const json& e, const VertexSet& vertices) {
  if (!e.is_object()) throw DomainError("edge entry must be an object");
  for (const auto& [key, value] : e.items()) {
    static const std::set<std::string> known{"u", "v", "latency", "intervals", "periodic"};
    if (!known.contains(key)) throw DomainError("unknown edge field '" + key + "'");
  }
  if (!e.contains("u") || !e.contains("v")) throw DomainError("edge needs 'u' and 'v'");
  const auto u = get_vertex(e["u"], "u");
  const auto v = get_vertex(e["v"], "v");
  for (const auto& w : {u, v}) {
    if (!vertices.contains(w)) throw DomainError("endpoint '" + w.str() + "' is not a listed vertex");
  }
  Edge edge(u, v);

  EdgeTiming timing;
  timing.latency = e.contains("latency") ? get_tick(e["latency"], "latency") : 1;
  if (timing.latency < 1) throw DomainError("latency must be >= 1");

  std::vector<Interval> intervals;
  if (e.contains("intervals")) {
    if (!e["intervals"].is_array()) throw DomainError("'intervals' must be an array");
    for (const auto& pair : e["intervals"]) {
      if (!pair.is_array() || pair.size() != 2) {
        throw DomainError("each interval must be a [start, end] pair");
      }
      intervals.push_back({get_tick(pair[0], "interval start"), get_tick(pair[1], "interval end")});
    }
  }
  std::optional<PeriodicTail> tail;
  if (e.contains("periodic")) {
    const auto& p = e["periodic"];
    if (!p.is_object() || !p.contains("offset") || !p.contains("period") || !p.contains("duration")) {
      throw DomainError("'periodic' needs offset, period and duration");
    }
    tail = PeriodicTail{get_tick(p["offset"], "offset"), get_tick(p["period"], "period"),
                        get_tick(p["duration"], "duration")};
  }
  timing.schedule = PresenceSchedule(std::move(intervals), tail);
  if (timing.schedule.never_present()) throw DomainError("edge is never present");
  return {std::move(edge), std::move(timing)};
}

}  // namespace

Tvg parse_scenario(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("malformed JSON: ") + err.what(), line_at(text, err.byte));
  }
  if (!doc.is_object()) throw ParseError("scenario must be a JSON object", 1);

  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError("'vertices' must be an array of identifiers",
                     element_line(text, "vertices", kWholeValue));
  }
  VertexSet vertices;
  const auto& names = doc["vertices"];
  for (std::size_t i = 0; i < names.size(); ++i) {
    try {
      auto id = get_vertex(names[i], "vertex");
      if (!vertices.insert(id).second) throw DomainError("duplicate vertex '" + id.str() + "'");
    } catch (const DomainError& err) {
      throw ParseError("vertices[" + std::to_string(i) + "]: " + err.what(),
                       element_line(text, "vertices", i));
    }
  }

  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("'edges' must be an array", element_line(text, "edges", kWholeValue));
  }
  StaticGraph graph(vertices, {});
  std::map<Edge, EdgeTiming> timing;
  const auto& edges = doc["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    try {
      auto [edge, t] = parse_edge(edges[i], vertices);
      if (!graph.add_edge(edge)) throw DomainError("duplicate edge");
      timing.emplace(std::move(edge), std::move(t));
    } catch (const DomainError& err) {
      throw ParseError("edges[" + std::to_string(i) + "]: " + err.what(),
                       element_line(text, "edges", i));
    }
  }

  Tick process_latency = 0;
  if (doc.contains("process_latency")) {
    try {
      process_latency = get_tick(doc["process_latency"], "process_latency");
      if (process_latency < 0) throw DomainError("process_latency must be non-negative");
    } catch (const DomainError& err) {
      throw ParseError(err.what(), element_line(text, "process_latency", kWholeValue));
    }
  }
  return Tvg(std::move(graph), std::move(timing), process_latency);
}

Tvg load_scenario(const std::filesystem::path& path) {
  return parse_scenario(detail::read_file(path));
}

std::string format_scenario(const Tvg& tvg) {
  nlohmann::ordered_json doc;
  doc["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : tvg.graph().vertices()) doc["vertices"].push_back(v.str());
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [e, t] : tvg.timings()) {
    nlohmann::ordered_json edge;
    edge["u"] = e.low().str();
    edge["v"] = e.high().str();
    edge["latency"] = t.latency;
    edge["intervals"] = nlohmann::ordered_json::array();
    for (const auto& iv : t.schedule.intervals()) edge["intervals"].push_back({iv.start, iv.end});
    if (const auto& tail = t.schedule.tail()) {
      edge["periodic"] = {{"offset", tail->offset}, {"period", tail->period}, {"duration", tail->duration}};
    }
    doc["edges"].push_back(std::move(edge));
  }
  doc["process_latency"] = tvg.process_latency();
  return doc.dump(2) + "\n";
}

void save_scenario(const std::filesystem::path& path, const Tvg& tvg) {
  detail::write_file(path, format_scenario(tvg));
}

}  // namespace tvgkit
