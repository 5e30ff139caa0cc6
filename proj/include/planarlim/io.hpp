#pragma once

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "planar_map.hpp"

namespace planarlim {

/// Contents of a graph file. `rotation` is filled only when the file carries
/// `rot v: ...` lines for every vertex.
struct GraphFile {
  Graph graph;
  std::optional<int> root;
  std::optional<std::vector<std::vector<int>>> rotation;

  PlanarMap map() const {
    if (!rotation) throw InvalidInput("graph file has no rotation system");
    return PlanarMap::from_rotation(*rotation);
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

/// Writes `text` as `# ` comment lines.
inline void write_comment(std::ostream& out, const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) out << "# " << line << '\n';
}

}  // namespace detail

/// Text format: `n m`, then m lines `u v` with u < v, optional `root o`, and
/// optional `rot v: w1 w2 ...` lines (counterclockwise neighbor order). Lines
/// starting with '#' are comments.
inline GraphFile read_graph(std::istream& in) {
  GraphFile file;
  std::string line;
  int n = -1;
  long m = -1;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rot;
  std::vector<char> has_rot;
  int line_no = 0;
  auto fail = [&](const std::string& why) {
    throw InvalidInput("graph file line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0) fail("expected header `n m`");
      rot.assign(static_cast<std::size_t>(n), {});
      has_rot.assign(static_cast<std::size_t>(n), 0);
      continue;
    }
    if (line.rfind("root", 0) == 0) {
      std::string word;
      int o = -1;
      if (!(ls >> word >> o) || o < 0 || o >= n) fail("bad root line");
      file.root = o;
      continue;
    }
    if (line.rfind("rot", 0) == 0) {
      std::string word, vtok;
      ls >> word >> vtok;
      if (vtok.empty() || vtok.back() != ':') fail("expected `rot v: ...`");
      vtok.pop_back();
      int v = -1;
      if (std::from_chars(vtok.data(), vtok.data() + vtok.size(), v).ec != std::errc{} || v < 0 ||
          v >= n)
        fail("bad rotation vertex");
      int w = 0;
      while (ls >> w) rot[v].push_back(w);
      has_rot[v] = 1;
      continue;
    }
    Edge e;
    if (!(ls >> e.u >> e.v)) fail("expected edge `u v`");
    if (e.u > e.v) std::swap(e.u, e.v);
    edges.push_back(e);
  }
  if (n < 0) throw InvalidInput("graph file is empty");
  if (static_cast<long>(edges.size()) != m)
    throw InvalidInput("header declares " + std::to_string(m) + " edges, file has " +
                       std::to_string(edges.size()));
  file.graph = Graph::from_edges(n, edges);
  const auto rot_lines = std::count(has_rot.begin(), has_rot.end(), 1);
  if (rot_lines == n && n > 0) {
    if (!(Graph::from_adjacency(rot) == file.graph))
      throw InvalidInput("rotation lines disagree with the edge list");
    file.rotation = std::move(rot);
  } else if (rot_lines > 0) {
    throw InvalidInput("rotation lines present for only some vertices");
  }
  return file;
}

inline GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g, std::optional<int> root = {},
                        const PlanarMap* map = nullptr) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  if (root) out << "root " << *root << '\n';
  if (map) {
    for (int v = 0; v < map->num_vertices(); ++v) {
      out << "rot " << v << ':';
      for (int w : map->rotation(v)) out << ' ' << w;
      out << '\n';
    }
  }
}

inline void write_map(std::ostream& out, const PlanarMap& m, std::optional<int> root = {}) {
  write_graph(out, m.graph(), root, &m);
}

/// Formats a double with 17 significant digits (round-trips exactly).
inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

/// Splits a CSV line on commas.
inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ls(line);
  while (std::getline(ls, cell, ',')) out.push_back(detail::trim(cell));
  return out;
}

inline double parse_double(const std::string& s) {
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw InvalidInput("not a number: '" + s + "'");
  }
  if (used != s.size()) throw InvalidInput("not a number: '" + s + "'");
  return x;
}

}  // namespace planarlim
