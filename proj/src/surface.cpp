#include <array>
#include <queue>

#include "cubeconf/kernels.hpp"
#include "cubeconf/topology.hpp"

namespace cubeconf {
namespace {

struct Incidence {
  std::size_t square;
  int direction;  // +1 when the square's boundary runs tail -> head along the edge
};

// Boundary walk of a square: corners tt -> ht -> hh -> th, as the 1-cells
// traversed and the corner each side starts from.
std::array<std::pair<std::size_t, std::size_t>, 4> boundary_walk(const CubeComplex& c, std::size_t i) {
  const auto corner = corners(c, 2, i);
  const auto at_tt = corner_edges(c, 2, i, 0b00);
  const auto at_hh = corner_edges(c, 2, i, 0b11);
  return {{
      {at_tt[0], corner[0b00]},  // slot 0 moves, slot 1 at tail
      {at_hh[1], corner[0b01]},  // slot 1 moves, slot 0 at head
      {at_hh[0], corner[0b11]},  // slot 0 moves back, slot 1 at head
      {at_tt[1], corner[0b10]},  // slot 1 moves back, slot 0 at tail
  }};
}

}  // namespace

SurfaceReport surface_classify(const CubeComplex& c) {
  SurfaceReport report;
  report.chi = euler_characteristic(c);
  report.connected = connected_components(c).count == 1;

  const auto fail = [&](int dim, std::size_t cell, std::string reason) {
    report.failure_witness = SurfaceWitness{dim, cell, std::move(reason)};
    return report;
  };

  const int top = c.top_dimension();
  if (top < 0) return fail(0, 0, "complex is empty");
  if (top > 2) return fail(top, 0, "cell of dimension greater than 2");

  const std::size_t vertices = c.cell_count(0);
  const std::size_t edges = c.cell_count(1);
  const std::size_t squares = c.cell_count(2);

  std::vector<int> cofaces(edges, 0);
  for (std::size_t s = 0; s < squares; ++s) {
    for (const Face& f : c.faces(2, s)) ++cofaces[f.target];
  }
  std::vector<char> covered(vertices, 0);
  for (std::size_t e = 0; e < edges; ++e) {
    if (cofaces[e] == 0) continue;
    for (const Face& f : c.faces(1, e)) covered[f.target] = 1;
  }
  for (std::size_t v = 0; v < vertices; ++v) {
    if (!covered[v]) return fail(0, v, "0-cell is not a face of any 2-cell");
  }
  for (std::size_t e = 0; e < edges; ++e) {
    if (cofaces[e] == 0) return fail(1, e, "1-cell is not a face of any 2-cell");
  }
  report.is_pure_2d = true;

  for (std::size_t e = 0; e < edges; ++e) {
    if (cofaces[e] != 2) {
      return fail(1, e, "1-cell borders " + std::to_string(cofaces[e]) + " 2-cells, expected 2");
    }
  }

  // Every vertex link must be one cycle: all link vertices of degree 2 and
  // the link graph connected.
  const auto links = kernels::vertex_links(c, Execution::serial);
  for (const auto& link : links) {
    const std::size_t m = link.vertices.size();
    std::vector<std::vector<std::size_t>> adj(m);
    const auto local = [&](std::size_t cell) {
      return static_cast<std::size_t>(
          std::lower_bound(link.vertices.begin(), link.vertices.end(), cell) - link.vertices.begin());
    };
    for (const auto& s : link.simplices) {
      const auto a = local(s[0]);
      const auto b = local(s[1]);
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    bool cycle = m > 0;
    for (const auto& nbrs : adj) cycle = cycle && nbrs.size() == 2;
    if (cycle) {
      std::vector<char> seen(m, 0);
      std::vector<std::size_t> stack{0};
      seen[0] = 1;
      std::size_t reached = 1;
      while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (auto w : adj[u]) {
          if (!seen[w]) {
            seen[w] = 1;
            ++reached;
            stack.push_back(w);
          }
        }
      }
      cycle = reached == m;
    }
    if (!cycle) return fail(0, link.base, "link of 0-cell is not a single cycle");
  }
  report.is_closed_surface = true;

  // Propagate square orientations across shared 1-cells.
  std::vector<std::vector<Incidence>> along(edges);
  std::vector<std::array<std::pair<std::size_t, int>, 4>> sides(squares);
  for (std::size_t s = 0; s < squares; ++s) {
    const auto walk = boundary_walk(c, s);
    for (std::size_t k = 0; k < 4; ++k) {
      const auto [edge, from] = walk[k];
      const int direction = c.faces(1, edge)[0].target == from ? 1 : -1;
      along[edge].push_back(Incidence{s, direction});
      sides[s][k] = {edge, direction};
    }
  }
  std::vector<int> orientation(squares, 0);
  for (std::size_t seed = 0; seed < squares; ++seed) {
    if (orientation[seed] != 0) continue;
    orientation[seed] = 1;
    std::queue<std::size_t> frontier;
    frontier.push(seed);
    while (!frontier.empty()) {
      const std::size_t s = frontier.front();
      frontier.pop();
      for (const auto& [edge, direction] : sides[s]) {
        for (const Incidence& other : along[edge]) {
          if (other.square == s) continue;
          // The neighbour must run the shared edge the opposite way.
          const int wanted = -orientation[s] * direction * other.direction;
          if (orientation[other.square] == 0) {
            orientation[other.square] = wanted;
            frontier.push(other.square);
          } else if (orientation[other.square] != wanted) {
            report.orientable = false;
            if (report.connected) report.crosscaps = 2 - report.chi;
            return fail(1, edge, "orientation conflict across 1-cell");
          }
        }
      }
    }
  }
  report.orientable = true;

  if (report.connected && report.chi % 2 == 0) report.genus = 1 - report.chi / 2;
  return report;
}

}  // namespace cubeconf
