#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "planeforge/plane.hpp"

namespace planeforge::io {

struct NamedPlane {
  std::string name;
  Plane plane;
};

/// Parses the plane text format:
///
///   plane <name>
///   points <id ...>
///   line <id> <id> <id> ...
///
/// `#` starts a comment. Record order is irrelevant. Throws ParseError with
/// the line/column of the offending token; structural errors from
/// Plane::validate are reported as ParseError, except ExchangeViolation,
/// which keeps its type.
NamedPlane parse_plane(std::string_view text);
NamedPlane read_plane_file(const std::string& path);

/// Canonical form: ids and lines sorted lexicographically.
std::string format_plane(const Plane& plane, std::string_view name);
void write_plane_file(const std::string& path, const Plane& plane, std::string_view name);

}  // namespace planeforge::io
