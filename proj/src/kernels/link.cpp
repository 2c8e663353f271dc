#include <algorithm>
#include <set>

#include "cubeconf/kernels.hpp"

namespace cubeconf {

namespace {

bool extend_clique(const std::vector<std::size_t>& vertices,
                   const std::vector<std::vector<char>>& adjacent,
                   const std::set<std::vector<std::size_t>>& simplices,
                   std::vector<std::size_t>& clique, std::vector<std::size_t>& members,
                   std::vector<std::size_t>& missing) {
  const std::size_t from = members.empty() ? 0 : members.back() + 1;
  for (std::size_t w = from; w < vertices.size(); ++w) {
    const bool compatible = std::all_of(members.begin(), members.end(),
                                        [&](std::size_t u) { return adjacent[u][w] != 0; });
    if (!compatible) continue;
    members.push_back(w);
    clique.push_back(vertices[w]);
    if (clique.size() >= 3 && !simplices.contains(clique)) {
      missing = clique;
      return true;
    }
    if (extend_clique(vertices, adjacent, simplices, clique, members, missing)) return true;
    members.pop_back();
    clique.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> non_flag_clique(const LinkComplex& link) {
  const auto& vertices = link.vertices;
  std::vector<std::vector<char>> adjacent(vertices.size(), std::vector<char>(vertices.size(), 0));
  std::set<std::vector<std::size_t>> simplices;
  for (const auto& s : link.simplices) {
    simplices.insert(s);
    if (s.size() != 2) continue;
    const auto a = std::lower_bound(vertices.begin(), vertices.end(), s[0]) - vertices.begin();
    const auto b = std::lower_bound(vertices.begin(), vertices.end(), s[1]) - vertices.begin();
    adjacent[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    adjacent[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  std::vector<std::size_t> clique;
  std::vector<std::size_t> members;
  std::vector<std::size_t> missing;
  if (extend_clique(vertices, adjacent, simplices, clique, members, missing)) return missing;
  return std::nullopt;
}

LinkComplex vertex_link(const CubeComplex& c, std::size_t vertex) {
  return kernels::vertex_links(c, Execution::serial).at(vertex);
}

FlagVerdict flag_link_check(const CubeComplex& c, Execution execution) {
  return execution == Execution::parallel ? kernels::flag_check_parallel(c)
                                          : kernels::flag_check_serial(c);
}

namespace kernels {

namespace {

struct CornerFrame {
  std::size_t corner;
  std::vector<std::size_t> edges;  // sorted 1-cells of the cube at that corner
};

std::vector<CornerFrame> frames_of(const CubeComplex& c, int d, std::size_t i) {
  const auto corner_ids = corners(c, d, i);
  std::vector<CornerFrame> frames;
  frames.reserve(corner_ids.size());
  for (unsigned mask = 0; mask < corner_ids.size(); ++mask) {
    auto edges = corner_edges(c, d, i, mask);
    std::sort(edges.begin(), edges.end());
    frames.push_back(CornerFrame{corner_ids[mask], std::move(edges)});
  }
  return frames;
}

}  // namespace

std::vector<LinkComplex> vertex_links(const CubeComplex& c, Execution execution) {
  std::vector<LinkComplex> links(c.cell_count(0));
  for (std::size_t v = 0; v < links.size(); ++v) links[v].base = v;

  for (std::size_t i = 0; i < c.cell_count(1); ++i) {
    for (const Face& f : c.faces(1, i)) links[f.target].vertices.push_back(i);
  }
  for (auto& link : links) {
    std::sort(link.vertices.begin(), link.vertices.end());
    link.vertices.erase(std::unique(link.vertices.begin(), link.vertices.end()), link.vertices.end());
  }

  const bool parallel = execution == Execution::parallel;
  for (int d = 2; d <= c.top_dimension(); ++d) {
    const std::size_t count = c.cell_count(d);
    std::vector<std::vector<CornerFrame>> frames(count);
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (std::size_t i = 0; i < count; ++i) frames[i] = frames_of(c, d, i);

    for (auto& per_cell : frames) {
      for (auto& frame : per_cell) links[frame.corner].simplices.push_back(std::move(frame.edges));
    }
  }
  return links;
}

FlagVerdict flag_check_serial(const CubeComplex& c) {
  const auto links = vertex_links(c, Execution::serial);
  for (const auto& link : links) {
    if (auto clique = non_flag_clique(link)) {
      return FlagVerdict{false, FlagWitness{link.base, std::move(*clique)}};
    }
  }
  return FlagVerdict{};
}

FlagVerdict flag_check_parallel(const CubeComplex& c) {
  const auto links = vertex_links(c, Execution::parallel);
  const std::size_t count = links.size();
  std::vector<std::optional<std::vector<std::size_t>>> found(count);

#pragma omp parallel for schedule(dynamic, 16)
  for (std::size_t v = 0; v < count; ++v) found[v] = non_flag_clique(links[v]);

  for (std::size_t v = 0; v < count; ++v) {
    if (found[v]) return FlagVerdict{false, FlagWitness{v, std::move(*found[v])}};
  }
  return FlagVerdict{};
}

}  // namespace kernels
}  // namespace cubeconf
