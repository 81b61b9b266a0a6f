#pragma once

#include "neardist/geometry.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace neardist {

// Point-set text format:
//   d n
//   x_1 ... x_d        (n rows, whitespace separated)
// Writers emit 17 significant digits so doubles round-trip exactly.

PointSet parse_pointset_text(std::string_view text);
PointSet parse_pointset(const std::filesystem::path& path);

std::string format_pointset(const PointSet& points);
void emit_pointset(const PointSet& points, const std::filesystem::path& path);

/// Writes via a sibling temp file and rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

} // namespace neardist
