#include "cubeconf/graph.hpp"

#include <algorithm>
#include <sstream>

#include "cubeconf/error.hpp"

namespace cubeconf {

bool is_valid_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') ||
           (ch >= '0' && ch <= '9') || ch == '_' || ch == '.' || ch == '-';
  });
}

VertexId Graph::add_vertex(std::string name) {
  if (!is_valid_name(name)) {
    throw Error(ErrorKind::invalid_argument, "invalid vertex name '" + name + "'");
  }
  if (vertex_index_.contains(name)) {
    throw Error(ErrorKind::invalid_argument, "duplicate vertex name '" + name + "'");
  }
  const auto id = static_cast<VertexId>(vertices_.size());
  vertex_index_.emplace(name, id);
  vertices_.push_back(Vertex{id, std::move(name)});
  incidence_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(std::string name, VertexId a, VertexId b) {
  if (!is_valid_name(name)) {
    throw Error(ErrorKind::invalid_argument, "invalid edge name '" + name + "'");
  }
  if (edge_index_.contains(name)) {
    throw Error(ErrorKind::invalid_argument, "duplicate edge name '" + name + "'");
  }
  const auto n = static_cast<VertexId>(vertices_.size());
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw Error(ErrorKind::invalid_argument, "edge '" + name + "' references an unknown vertex");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edge_index_.emplace(name, id);
  edges_.push_back(Edge{id, std::move(name), a, b});
  incidence_[static_cast<std::size_t>(a)].push_back(id);
  if (b != a) incidence_[static_cast<std::size_t>(b)].push_back(id);
  return id;
}

std::optional<VertexId> Graph::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(std::string(name));
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view name) const {
  auto it = edge_index_.find(std::string(name));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

int Graph::valence(VertexId v) const {
  int count = 0;
  for (EdgeId e : incident_edges(v)) count += edge(e).is_loop() ? 2 : 1;
  return count;
}

bool Graph::has_self_loop() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_loop(); });
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  Graph g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto check_name = [&](std::string_view name) {
      if (!is_valid_name(name)) {
        throw ParseError(line_no, "invalid name '" + std::string(name) + "'");
      }
    };
    if (tokens[0] == "v") {
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'v <name>'");
      check_name(tokens[1]);
      if (g.find_vertex(tokens[1])) {
        throw ParseError(line_no, "duplicate vertex name '" + std::string(tokens[1]) + "'");
      }
      g.add_vertex(std::string(tokens[1]));
    } else if (tokens[0] == "e") {
      if (tokens.size() != 4) throw ParseError(line_no, "expected 'e <name> <vertex> <vertex>'");
      check_name(tokens[1]);
      if (g.find_edge(tokens[1])) {
        throw ParseError(line_no, "duplicate edge name '" + std::string(tokens[1]) + "'");
      }
      auto a = g.find_vertex(tokens[2]);
      auto b = g.find_vertex(tokens[3]);
      if (!a) throw ParseError(line_no, "unknown endpoint '" + std::string(tokens[2]) + "'");
      if (!b) throw ParseError(line_no, "unknown endpoint '" + std::string(tokens[3]) + "'");
      g.add_edge(std::string(tokens[1]), *a, *b);
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
    }
    if (end == text.size()) break;
  }
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  for (const Vertex& v : g.vertices()) out << "v " << v.name << '\n';
  for (const Edge& e : g.edges()) {
    out << "e " << e.name << ' ' << g.vertex(e.u).name << ' ' << g.vertex(e.v).name << '\n';
  }
  return out.str();
}

}  // namespace cubeconf
