#include "tvgkit/graph_io.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "io_util.hpp"
#include "tvgkit/errors.hpp"

namespace tvgkit {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t begin = 0;
  while (true) {
    const auto pos = s.find(sep, begin);
    out.push_back(trim(s.substr(begin, pos == std::string_view::npos ? pos : pos - begin)));
    if (pos == std::string_view::npos) return out;
    begin = pos + 1;
  }
}

VertexId parse_id(std::string_view token, std::size_t line) {
  if (!VertexId::is_valid_name(token)) {
    throw ParseError("invalid vertex identifier '" + std::string(token) + "'", line);
  }
  return VertexId(std::string(token));
}

}  // namespace

StaticGraph parse_graph(std::string_view text) {
  StaticGraph g;
  bool have_vertices = false;
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const auto end = text.find('\n', begin);
    const auto raw = text.substr(begin, end == std::string_view::npos ? end : end - begin);
    begin = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'vertices:' or 'edge:'", line_no);
    const auto key = trim(line.substr(0, colon));
    const auto rest = trim(line.substr(colon + 1));

    if (key == "vertices") {
      if (have_vertices) throw ParseError("duplicate 'vertices:' line", line_no);
      have_vertices = true;
      if (rest.empty()) throw ParseError("empty vertex list", line_no);
      for (auto token : split(rest, ',')) {
        auto v = parse_id(token, line_no);
        if (g.has_vertex(v)) throw ParseError("duplicate vertex '" + v.str() + "'", line_no);
        g.add_vertex(std::move(v));
      }
    } else if (key == "edge") {
      if (!have_vertices) throw ParseError("'edge:' before the 'vertices:' line", line_no);
      std::istringstream fields{std::string(rest)};
      std::string a, b, extra;
      if (!(fields >> a >> b) || (fields >> extra)) {
        throw ParseError("expected 'edge: <id> <id>'", line_no);
      }
      const auto u = parse_id(a, line_no);
      const auto v = parse_id(b, line_no);
      for (const auto& w : {u, v}) {
        if (!g.has_vertex(w)) throw ParseError("edge endpoint '" + w.str() + "' is not listed", line_no);
      }
      if (u == v) throw ParseError("self-loop on '" + u.str() + "'", line_no);
      if (!g.add_edge(Edge(u, v))) throw ParseError("duplicate edge " + a + " " + b, line_no);
    } else {
      throw ParseError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  if (!have_vertices) {
    // point at the last line of the input
    const auto lines = static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) +
                       (text.ends_with('\n') ? 0 : 1);
    throw ParseError("missing 'vertices:' line", std::max<std::size_t>(lines, 1));
  }
  return g;
}

StaticGraph load_graph(const std::filesystem::path& path) {
  return parse_graph(detail::read_file(path));
}

std::string format_graph(const StaticGraph& g) {
  std::ostringstream os;
  os << "vertices: ";
  bool first = true;
  for (const auto& v : g.vertices()) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << '\n';
  for (const auto& e : g.edges()) os << "edge: " << e.low() << ' ' << e.high() << '\n';
  return os.str();
}

}  // namespace tvgkit
