#include "planeforge/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace planeforge::io {
namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

}  // namespace

NamedPlane parse_plane(std::string_view text) {
  std::optional<std::string> name;
  std::optional<std::vector<std::string>> points;
  std::vector<std::vector<std::string>> lines;
  std::vector<std::size_t> line_rows;
  std::size_t points_row = 0;

  std::size_t row = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++row;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const auto& kw = toks[0];
    if (kw.text == "plane") {
      if (name) throw ParseError("duplicate 'plane' record", row, kw.column);
      if (toks.size() != 2) throw ParseError("'plane' takes exactly one name", row, kw.column);
      name = toks[1].text;
    } else if (kw.text == "points") {
      if (points) throw ParseError("duplicate 'points' record", row, kw.column);
      points.emplace();
      points_row = row;
      for (std::size_t k = 1; k < toks.size(); ++k) {
        for (const auto& seen : *points)
          if (seen == toks[k].text) throw ParseError("duplicate point id '" + seen + "'", row, toks[k].column);
        points->push_back(toks[k].text);
      }
    } else if (kw.text == "line") {
      if (toks.size() < 4) throw ParseError("'line' needs at least 3 point ids", row, kw.column);
      std::vector<std::string> ids;
      for (std::size_t k = 1; k < toks.size(); ++k) ids.push_back(toks[k].text);
      lines.push_back(std::move(ids));
      line_rows.push_back(row);
    } else {
      throw ParseError("unknown record '" + kw.text + "'", row, kw.column);
    }
  }
  if (!name) throw ParseError("missing 'plane' record", 1, 1);
  if (!points) throw ParseError("missing 'points' record", row == 0 ? 1 : row, 1);

  // Point-level problems first, with precise positions.
  std::vector<std::string> sorted = *points;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t li = 0; li < lines.size(); ++li) {
    for (const auto& id : lines[li])
      if (!std::binary_search(sorted.begin(), sorted.end(), id)) {
        // Recover the column of the offending id on its row.
        std::size_t r = 0, p = 0, col = 1;
        while (p <= text.size()) {
          auto e = text.find('\n', p);
          auto raw = text.substr(p, e == std::string_view::npos ? std::string_view::npos : e - p);
          if (++r == line_rows[li]) {
            for (const auto& t : tokenize(raw))
              if (t.text == id) {
                col = t.column;
                break;
              }
            break;
          }
          if (e == std::string_view::npos) break;
          p = e + 1;
        }
        throw ParseError("unknown point '" + id + "'", line_rows[li], col);
      }
  }
  try {
    return {*name, Plane::validate(*points, lines)};
  } catch (const ExchangeViolation&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), points_row, 1);
  }
}

NamedPlane read_plane_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_plane(buf.str());
}

std::string format_plane(const Plane& plane, std::string_view name) {
  std::string out = "plane " + std::string(name.empty() ? "unnamed" : name) + "\n";
  out += "points";
  for (const auto& id : plane.ids()) out += " " + id;
  out += "\n";
  for (const auto& l : plane.line_ids()) out += "line " + join_ids(l) + "\n";
  return out;
}

void write_plane_file(const std::string& path, const Plane& plane, std::string_view name) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << format_plane(plane, name);
}

}  // namespace planeforge::io
