#include "tvgkit/vertex_id.hpp"

#include <algorithm>
#include <ostream>

#include "tvgkit/errors.hpp"

namespace tvgkit {

VertexId::VertexId(std::string name) : name_(std::move(name)) {
  if (!is_valid_name(name_)) {
    throw DomainError("invalid vertex identifier '" + name_ + "' (expected [A-Za-z0-9_]+)");
  }
}

bool VertexId::is_valid_name(std::string_view name) noexcept {
  return !name.empty() && std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.str(); }

}  // namespace tvgkit
