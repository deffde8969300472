#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "tvgkit/errors.hpp"

namespace tvgkit::detail {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'", 0);
  out << text;
}

}  // namespace tvgkit::detail
