#pragma once

// Edge-list text format:
//
//   # name <descriptor>          (optional)
//   # label <id> <text>          (optional, one per vertex)
//   n m
//   u v                          (m lines, 0-based ids)
//
// Any other text after '#' is a comment.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mvis/graph.hpp"

namespace mvis {

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::string name;
  std::vector<std::pair<long long, std::string>> label_lines;
  std::vector<Edge> edges;
  long long n = -1, m = -1;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& msg) {
    throw Error(ErrorCode::bad_spec, "edge list line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream meta(line.substr(hash + 1));
      std::string key;
      meta >> key;
      if (key == "name") {
        std::getline(meta >> std::ws, name);
      } else if (key == "label") {
        long long id;
        std::string text;
        if (meta >> id) {
          std::getline(meta >> std::ws, text);
          label_lines.emplace_back(id, text);
        }
      }
      line.resize(hash);
    }
    std::istringstream body(line);
    long long a, b;
    if (!(body >> a)) continue;
    if (!(body >> b)) fail("expected two integers");
    std::string extra;
    if (body >> extra) fail("trailing token '" + extra + "'");
    if (n < 0) {
      if (a <= 0 || b < 0) fail("bad header");
      n = a;
      m = b;
    } else {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw Error(ErrorCode::invalid_vertex_id, "line " + std::to_string(line_no) + ": vertex out of range");
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
  }
  if (n < 0) throw Error(ErrorCode::bad_spec, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error(ErrorCode::bad_spec,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

  std::vector<std::string> labels;
  if (!label_lines.empty()) {
    labels.resize(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (auto& [id, text] : label_lines) {
      if (id < 0 || id >= n) throw Error(ErrorCode::invalid_vertex_id, "label for vertex " + std::to_string(id));
      labels[static_cast<std::size_t>(id)] = text;
      seen[static_cast<std::size_t>(id)] = 1;
    }
    for (std::size_t v = 0; v < seen.size(); ++v)
      if (!seen[v]) throw Error(ErrorCode::bad_spec, "vertex " + std::to_string(v) + " has no label");
  }
  return build_graph(static_cast<std::size_t>(n), edges, std::move(labels), std::move(name));
}

inline Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "# name " << g.name() << '\n';
  if (g.has_labels())
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) out << "# label " << v << ' ' << g.label(v) << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot write " + path);
  write_edge_list(out, g);
  if (!out) throw Error(ErrorCode::io_error, "write failed for " + path);
}

}  // namespace mvis
