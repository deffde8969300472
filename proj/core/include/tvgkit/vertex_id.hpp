#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tvgkit {

/// Process identifier. Names match [A-Za-z0-9_]+ and are ordered by length
/// first, then byte-wise, so that p2 < p10.
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::string name);

  const std::string& str() const noexcept { return name_; }

  static bool is_valid_name(std::string_view name) noexcept;

  friend bool operator==(const VertexId&, const VertexId&) = default;
  friend std::strong_ordering operator<=>(const VertexId& a, const VertexId& b) noexcept {
    if (auto c = a.name_.size() <=> b.name_.size(); c != 0) return c;
    return a.name_.compare(b.name_) <=> 0;
  }

 private:
  std::string name_;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

}  // namespace tvgkit
