#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tvgkit/static_graph.hpp"

namespace tvgkit {

/// Text graph format:
///
///     # comment
///     vertices: p1,p2,p3
///     edge: p1 p2
///     edge: p2 p3
///
/// Throws ParseError carrying the offending line number.
StaticGraph parse_graph(std::string_view text);
StaticGraph load_graph(const std::filesystem::path& path);

std::string format_graph(const StaticGraph& g);

}  // namespace tvgkit
