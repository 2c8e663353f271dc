#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cubeconf {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Vertex {
  VertexId id;
  std::string name;

  bool operator==(const Vertex&) const = default;
};

/// Undirected edge. Endpoints are kept in declaration order; the canonical
/// orientation used for boundary signs runs from tail() to head().
struct Edge {
  EdgeId id;
  std::string name;
  VertexId u;
  VertexId v;

  bool is_loop() const { return u == v; }
  VertexId tail() const { return u < v ? u : v; }
  VertexId head() const { return u < v ? v : u; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool touches(VertexId x) const { return x == u || x == v; }

  bool operator==(const Edge&) const = default;
};

/// Finite multigraph with named vertices and edges. Ids are dense and follow
/// insertion order. Parallel edges and self-loops are representable.
class Graph {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId a, VertexId b);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Vertex& vertex(VertexId id) const { return vertices_.at(static_cast<std::size_t>(id)); }
  const Edge& edge(EdgeId id) const { return edges_.at(static_cast<std::size_t>(id)); }
  std::span<const Vertex> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// Incident edge ids in ascending order; a self-loop is listed once.
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }

  /// Number of edge ends at `v`; a self-loop contributes 2.
  int valence(VertexId v) const;

  bool has_self_loop() const;

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
  std::unordered_map<std::string, VertexId> vertex_index_;
  std::unordered_map<std::string, EdgeId> edge_index_;
};

/// True when `name` matches [A-Za-z0-9_.-]+.
bool is_valid_name(std::string_view name);

/// Line-oriented graph format:
///   # comment
///   v <name>
///   e <name> <vertex> <vertex>
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

/// Builtin zoo: Y, Q, X, K5, K33, Upsilon(k), cycle(n), path(n).
Graph builtin(std::string_view name, std::span<const int> params = {});

/// Accepts "K5", "Upsilon:5", "cycle:4", "Upsilon(5)".
Graph builtin_from_spec(std::string_view spec);

// ---- metric quantities ----------------------------------------------------

/// Vertices whose valence is not two, ascending.
std::vector<VertexId> essential_vertices(const Graph& g);

struct SeparationWitness {
  VertexId a;
  VertexId b;
  int edges;
};

/// Closest pair of distinct essential vertices joined by a path. Pairs in
/// different components impose nothing and are skipped.
std::optional<SeparationWitness> closest_essential_pair(const Graph& g);
std::optional<int> essential_separation(const Graph& g);

struct CycleWitness {
  std::vector<EdgeId> edges;
  int length() const { return static_cast<int>(edges.size()); }
};

/// A shortest cycle, edges listed in traversal order.
std::optional<CycleWitness> shortest_cycle(const Graph& g);
std::optional<int> girth(const Graph& g);

/// Graph distance in edges between two vertices, if connected.
std::optional<int> distance(const Graph& g, VertexId a, VertexId b);

/// True when `edges` is a closed trail through distinct vertices.
bool is_simple_cycle(const Graph& g, std::span<const EdgeId> edges);

struct SufficiencyReport {
  int n = 0;
  bool satisfied = false;
  bool condition1_ok = false;
  bool condition2_ok = false;
  bool vertex_count_ok = false;
  std::optional<SeparationWitness> witness_path;
  std::optional<CycleWitness> witness_cycle;
};

/// Faithfulness test for discretizing n robots on g: essential vertices at
/// least n-1 edges apart, every cycle at least n+1 edges, at least n
/// vertices.
SufficiencyReport check_sufficiency(const Graph& g, int n);

/// Replace edge `e` by a path of `parts` edges. The new vertices are
/// appended; the new edges take the old edge's slot in id order.
Graph subdivide(const Graph& g, EdgeId e, int parts);

/// Subdivide every edge into `parts` pieces (parts == 1 copies g).
Graph subdivide_uniform(const Graph& g, int parts);

/// Smallest uniform part count m for which subdivide_uniform(g, m) passes
/// check_sufficiency for n robots.
int uniform_parts_for(const Graph& g, int n);

Graph subdivide_for(const Graph& g, int n);

}  // namespace cubeconf
