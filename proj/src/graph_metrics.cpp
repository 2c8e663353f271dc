#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "cubeconf/error.hpp"
#include "cubeconf/graph.hpp"

namespace cubeconf {
namespace {

constexpr int kUnreached = -1;

struct BfsTree {
  std::vector<int> dist;
  std::vector<EdgeId> parent_edge;
};

BfsTree bfs(const Graph& g, VertexId root) {
  BfsTree tree{std::vector<int>(g.vertex_count(), kUnreached),
               std::vector<EdgeId>(g.vertex_count(), -1)};
  std::queue<VertexId> frontier;
  tree.dist[static_cast<std::size_t>(root)] = 0;
  frontier.push(root);
  while (!frontier.empty()) {
    const VertexId u = frontier.front();
    frontier.pop();
    for (EdgeId e : g.incident_edges(u)) {
      const VertexId w = g.edge(e).other(u);
      if (tree.dist[static_cast<std::size_t>(w)] != kUnreached) continue;
      tree.dist[static_cast<std::size_t>(w)] = tree.dist[static_cast<std::size_t>(u)] + 1;
      tree.parent_edge[static_cast<std::size_t>(w)] = e;
      frontier.push(w);
    }
  }
  return tree;
}

// Edges from `v` up to the BFS root, nearest-to-v first.
std::vector<EdgeId> path_to_root(const Graph& g, const BfsTree& tree, VertexId v) {
  std::vector<EdgeId> out;
  while (tree.parent_edge[static_cast<std::size_t>(v)] != -1) {
    const EdgeId e = tree.parent_edge[static_cast<std::size_t>(v)];
    out.push_back(e);
    v = g.edge(e).other(v);
  }
  return out;
}

Graph subdivide_edges(const Graph& g, std::span<const int> parts) {
  Graph out;
  for (const Vertex& v : g.vertices()) out.add_vertex(v.name);

  std::vector<std::vector<VertexId>> inner(g.edge_count());
  for (const Edge& e : g.edges()) {
    for (int i = 1; i < parts[static_cast<std::size_t>(e.id)]; ++i) {
      const std::string name = e.name + ".s" + std::to_string(i);
      if (out.find_vertex(name)) {
        throw Error(ErrorKind::invalid_argument, "subdivision vertex name '" + name + "' already in use");
      }
      inner[static_cast<std::size_t>(e.id)].push_back(out.add_vertex(name));
    }
  }

  for (const Edge& e : g.edges()) {
    const int m = parts[static_cast<std::size_t>(e.id)];
    if (m == 1) {
      out.add_edge(e.name, e.u, e.v);
      continue;
    }
    VertexId prev = e.tail();
    const auto& mids = inner[static_cast<std::size_t>(e.id)];
    for (int i = 0; i < m; ++i) {
      const VertexId next = i + 1 < m ? mids[static_cast<std::size_t>(i)] : e.head();
      const std::string name = e.name + ".p" + std::to_string(i + 1);
      if (out.find_edge(name) || g.find_edge(name)) {
        throw Error(ErrorKind::invalid_argument, "subdivision edge name '" + name + "' already in use");
      }
      out.add_edge(name, prev, next);
      prev = next;
    }
  }
  return out;
}

}  // namespace

std::vector<VertexId> essential_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (const Vertex& v : g.vertices()) {
    if (g.valence(v.id) != 2) out.push_back(v.id);
  }
  return out;
}

std::optional<int> distance(const Graph& g, VertexId a, VertexId b) {
  const int d = bfs(g, a).dist.at(static_cast<std::size_t>(b));
  if (d == kUnreached) return std::nullopt;
  return d;
}

std::optional<SeparationWitness> closest_essential_pair(const Graph& g) {
  const auto essential = essential_vertices(g);
  std::optional<SeparationWitness> best;
  for (std::size_t i = 0; i < essential.size(); ++i) {
    const auto tree = bfs(g, essential[i]);
    for (std::size_t j = i + 1; j < essential.size(); ++j) {
      const int d = tree.dist[static_cast<std::size_t>(essential[j])];
      if (d == kUnreached) continue;
      if (!best || d < best->edges) best = SeparationWitness{essential[i], essential[j], d};
    }
  }
  return best;
}

std::optional<int> essential_separation(const Graph& g) {
  if (auto w = closest_essential_pair(g)) return w->edges;
  return std::nullopt;
}

std::optional<CycleWitness> shortest_cycle(const Graph& g) {
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) return CycleWitness{{e.id}};
  }

  struct Candidate {
    int length;
    VertexId root, u, w;
    EdgeId closing;
  };
  std::optional<Candidate> best;
  std::optional<BfsTree> best_tree;

  for (const Vertex& root : g.vertices()) {
    auto tree = bfs(g, root.id);
    bool improved = false;
    for (const Edge& e : g.edges()) {
      const int du = tree.dist[static_cast<std::size_t>(e.u)];
      const int dw = tree.dist[static_cast<std::size_t>(e.v)];
      if (du == kUnreached) continue;
      if (tree.parent_edge[static_cast<std::size_t>(e.u)] == e.id ||
          tree.parent_edge[static_cast<std::size_t>(e.v)] == e.id) {
        continue;
      }
      const int length = du + dw + 1;
      if (!best || length < best->length) {
        best = Candidate{length, root.id, e.u, e.v, e.id};
        improved = true;
      }
    }
    if (improved) best_tree = std::move(tree);
  }
  if (!best) return std::nullopt;

  auto up_u = path_to_root(g, *best_tree, best->u);
  auto up_w = path_to_root(g, *best_tree, best->w);
  // Shared tail near the root is not part of the cycle.
  while (!up_u.empty() && !up_w.empty() && up_u.back() == up_w.back()) {
    up_u.pop_back();
    up_w.pop_back();
  }
  CycleWitness cycle;
  cycle.edges.assign(up_u.rbegin(), up_u.rend());
  cycle.edges.push_back(best->closing);
  cycle.edges.insert(cycle.edges.end(), up_w.begin(), up_w.end());
  return cycle;
}

std::optional<int> girth(const Graph& g) {
  if (auto c = shortest_cycle(g)) return c->length();
  return std::nullopt;
}

bool is_simple_cycle(const Graph& g, std::span<const EdgeId> edges) {
  if (edges.empty()) return false;
  for (EdgeId e : edges) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) return false;
  }
  std::vector<EdgeId> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (edges.size() == 1) return g.edge(edges[0]).is_loop();

  const Edge& first = g.edge(edges[0]);
  for (VertexId start : {first.u, first.v}) {
    std::vector<char> seen(g.vertex_count(), 0);
    VertexId cur = start;
    bool ok = true;
    for (EdgeId e : edges) {
      const Edge& edge = g.edge(e);
      if (edge.is_loop() || !edge.touches(cur) || seen[static_cast<std::size_t>(cur)]) {
        ok = false;
        break;
      }
      seen[static_cast<std::size_t>(cur)] = 1;
      cur = edge.other(cur);
    }
    if (ok && cur == start) return true;
  }
  return false;
}

SufficiencyReport check_sufficiency(const Graph& g, int n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "sufficiency check needs n >= 2");
  SufficiencyReport report;
  report.n = n;
  report.vertex_count_ok = g.vertex_count() >= static_cast<std::size_t>(n);

  const auto pair = closest_essential_pair(g);
  report.condition1_ok = !pair || pair->edges >= n - 1;
  if (!report.condition1_ok) report.witness_path = pair;

  auto cycle = shortest_cycle(g);
  report.condition2_ok = !cycle || cycle->length() >= n + 1;
  if (!report.condition2_ok) report.witness_cycle = std::move(cycle);

  report.satisfied = report.condition1_ok && report.condition2_ok && report.vertex_count_ok;
  return report;
}

Graph subdivide(const Graph& g, EdgeId e, int parts) {
  if (e < 0 || static_cast<std::size_t>(e) >= g.edge_count()) {
    throw Error(ErrorKind::invalid_argument, "unknown edge id " + std::to_string(e));
  }
  if (parts < 2) throw Error(ErrorKind::invalid_argument, "subdivision needs parts >= 2");
  std::vector<int> per_edge(g.edge_count(), 1);
  per_edge[static_cast<std::size_t>(e)] = parts;
  return subdivide_edges(g, per_edge);
}

Graph subdivide_uniform(const Graph& g, int parts) {
  if (parts < 1) throw Error(ErrorKind::invalid_argument, "subdivision needs parts >= 1");
  std::vector<int> per_edge(g.edge_count(), parts);
  return subdivide_edges(g, per_edge);
}

int uniform_parts_for(const Graph& g, int n) {
  if (n < 2) throw Error(ErrorKind::invalid_argument, "subdivide_for needs n >= 2");
  if (g.edge_count() == 0) throw Error(ErrorKind::invalid_argument, "graph has no edges to subdivide");
  // m = n + 1 already forces every condition, so the search is bounded.
  for (int m = 1; m <= n + 1; ++m) {
    if (check_sufficiency(subdivide_uniform(g, m), n).satisfied) return m;
  }
  throw Error(ErrorKind::invalid_argument, "no uniform subdivision satisfies the conditions");
}

Graph subdivide_for(const Graph& g, int n) {
  return subdivide_uniform(g, uniform_parts_for(g, n));
}

}  // namespace cubeconf
