#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "tvgkit/tvg.hpp"

namespace tvgkit {

/// JSON scenario:
///
///     {"vertices": ["p0", "p1"],
///      "edges": [{"u": "p0", "v": "p1", "latency": 1,
///                 "intervals": [[0, 5]],
///                 "periodic": {"offset": 10, "period": 4, "duration": 1}}],
///      "process_latency": 0}
///
/// Intervals are half-open. `periodic` and `process_latency` are optional.
/// The first invariant violation is reported as a ParseError with the line of
/// the offending edge.
Tvg parse_scenario(std::string_view json_text);
Tvg load_scenario(const std::filesystem::path& path);

/// Pretty-printed with a fixed key order, so equal scenarios give equal bytes.
std::string format_scenario(const Tvg& tvg);
void save_scenario(const std::filesystem::path& path, const Tvg& tvg);

}  // namespace tvgkit
