#include "cubeconf/complex.hpp"

#include <algorithm>
#include <numeric>

#include "cubeconf/error.hpp"
#include "cubeconf/kernels.hpp"

namespace cubeconf {

CubeComplex::CubeComplex(std::shared_ptr<const Graph> graph, int n, Mode mode,
                         std::vector<std::vector<FactorCode>> cells,
                         std::vector<std::vector<Face>> faces)
    : graph_(std::move(graph)),
      n_(n),
      mode_(mode),
      vertex_count_(static_cast<FactorCode>(graph_->vertex_count())),
      cells_(std::move(cells)),
      faces_(std::move(faces)) {
  faces_.resize(cells_.size());
}

int CubeComplex::top_dimension() const {
  for (int d = static_cast<int>(cells_.size()) - 1; d >= 0; --d) {
    if (!cells_[static_cast<std::size_t>(d)].empty()) return d;
  }
  return -1;
}

std::size_t CubeComplex::cell_count(int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= cells_.size() || n_ == 0) return 0;
  return cells_[static_cast<std::size_t>(d)].size() / static_cast<std::size_t>(n_);
}

std::size_t CubeComplex::total_cells() const {
  std::size_t total = 0;
  for (int d = 0; d < static_cast<int>(cells_.size()); ++d) total += cell_count(d);
  return total;
}

std::span<const FactorCode> CubeComplex::cell(int d, std::size_t i) const {
  const auto stride = static_cast<std::size_t>(n_);
  return std::span<const FactorCode>(cells_.at(static_cast<std::size_t>(d))).subspan(i * stride, stride);
}

std::span<const Face> CubeComplex::faces(int d, std::size_t i) const {
  if (d == 0) return {};
  const auto stride = 2 * static_cast<std::size_t>(d);
  return std::span<const Face>(faces_.at(static_cast<std::size_t>(d))).subspan(i * stride, stride);
}

std::optional<std::size_t> CubeComplex::find(int d, std::span<const FactorCode> codes) const {
  if (d < 0 || static_cast<std::size_t>(d) >= cells_.size()) return std::nullopt;
  return kernels::find_cell(cells_[static_cast<std::size_t>(d)], n_, codes);
}

void CubeComplex::canonicalize(std::span<FactorCode> codes) const {
  if (mode_ == Mode::unlabeled) std::sort(codes.begin(), codes.end());
}

CellFactor CubeComplex::factor(FactorCode code) const {
  if (is_edge(code)) return CellFactor{FactorKind::edge, code - vertex_count_};
  return CellFactor{FactorKind::vertex, code};
}

CubeComplex CubeComplex::skeleton(int max_dim) const {
  const auto keep = static_cast<std::size_t>(std::max(max_dim, -1) + 1);
  auto cells = cells_;
  auto faces = faces_;
  if (cells.size() > keep) cells.resize(keep);
  if (faces.size() > keep) faces.resize(keep);
  return CubeComplex(graph_, n_, mode_, std::move(cells), std::move(faces));
}

CubeComplex build(const Graph& g, int n, Mode mode, const BuildOptions& options) {
  return build(std::make_shared<const Graph>(g), n, mode, options);
}

CubeComplex build(std::shared_ptr<const Graph> g, int n, Mode mode, const BuildOptions& options) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "robot count must be >= 1");
  for (const Edge& e : g->edges()) {
    if (e.is_loop()) {
      throw Error(ErrorKind::self_loop,
                  "edge '" + e.name + "' is a self-loop; subdivide the graph first");
    }
  }
  const int vertices = static_cast<int>(g->vertex_count());
  if (n > vertices) return CubeComplex(std::move(g), n, mode, {}, {});

  auto cells = options.execution == Execution::parallel
                   ? kernels::enumerate_cells_parallel(*g, n, mode, options.budget)
                   : kernels::enumerate_cells_serial(*g, n, mode, options.budget);
  // A d-cell occupies n + d distinct vertices, so d <= min(n, |V| - n).
  cells.resize(static_cast<std::size_t>(std::min(n, vertices - n)) + 1);
  auto faces = kernels::compute_faces(*g, n, mode, cells, options.execution);
  return CubeComplex(std::move(g), n, mode, std::move(cells), std::move(faces));
}

std::vector<std::int64_t> f_vector(const CubeComplex& c) {
  std::vector<std::int64_t> out;
  for (int d = 0; d < c.dimension_slots(); ++d) {
    out.push_back(static_cast<std::int64_t>(c.cell_count(d)));
  }
  return out;
}

std::int64_t euler_characteristic(const CubeComplex& c) {
  std::int64_t chi = 0;
  for (int d = 0; d <= c.top_dimension(); ++d) {
    const auto f = static_cast<std::int64_t>(c.cell_count(d));
    chi += (d % 2 == 0) ? f : -f;
  }
  return chi;
}

std::vector<std::vector<std::size_t>> MoveGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(node_count);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    adj[edges[k].tail_node].push_back(k);
    adj[edges[k].head_node].push_back(k);
  }
  return adj;
}

MoveGraph one_skeleton(const CubeComplex& c) {
  MoveGraph g;
  g.node_count = c.cell_count(0);
  const std::size_t count = c.cell_count(1);
  g.edges.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto faces = c.faces(1, i);
    const auto codes = c.cell(1, i);
    const FactorCode code = codes[static_cast<std::size_t>(faces[0].position)];
    g.edges.push_back(MoveEdge{faces[0].target, faces[1].target, faces[0].position,
                               c.factor(code).ref, i});
  }
  return g;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Components connected_components(const CubeComplex& c) {
  const std::size_t nodes = c.cell_count(0);
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t i = 0; i < c.cell_count(1); ++i) {
    const auto faces = c.faces(1, i);
    std::size_t a = find_root(parent, faces[0].target);
    std::size_t b = find_root(parent, faces[1].target);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // root stays the smallest member
  }
  Components comps;
  comps.of_vertex.assign(nodes, 0);
  std::vector<std::size_t> label(nodes, static_cast<std::size_t>(-1));
  for (std::size_t v = 0; v < nodes; ++v) {
    const std::size_t root = find_root(parent, v);
    if (label[root] == static_cast<std::size_t>(-1)) label[root] = comps.count++;
    comps.of_vertex[v] = label[root];
  }
  return comps;
}

std::size_t component_of_cell(const CubeComplex& c, const Components& comps, int d, std::size_t i) {
  return comps.of_vertex.at(corners(c, d, i).front());
}

namespace {

SparseMatrix boundary_impl(const CubeComplex& c, int d, bool mod2) {
  if (d < 1 || d > c.top_dimension()) {
    throw Error(ErrorKind::invalid_argument,
                "boundary dimension " + std::to_string(d) + " out of range");
  }
  SparseMatrix m;
  m.rows = c.cell_count(d - 1);
  m.columns.resize(c.cell_count(d));
  for (std::size_t i = 0; i < m.columns.size(); ++i) {
    auto& col = m.columns[i];
    for (const Face& f : c.faces(d, i)) col.emplace_back(f.target, mod2 ? 1 : f.sign);
    std::sort(col.begin(), col.end());
    // Merge repeated rows.
    std::vector<std::pair<std::size_t, std::int64_t>> merged;
    for (const auto& [row, value] : col) {
      if (!merged.empty() && merged.back().first == row) {
        merged.back().second += value;
      } else {
        merged.emplace_back(row, value);
      }
    }
    std::erase_if(merged, [mod2](const auto& entry) {
      return mod2 ? entry.second % 2 == 0 : entry.second == 0;
    });
    if (mod2) {
      for (auto& entry : merged) entry.second = 1;
    }
    col = std::move(merged);
  }
  return m;
}

}  // namespace

SparseMatrix boundary_matrix(const CubeComplex& c, int d) {
  if (c.mode() != Mode::labeled) {
    throw Error(ErrorKind::invalid_argument,
                "integer boundary signs are only defined for labeled complexes");
  }
  return boundary_impl(c, d, false);
}

SparseMatrix boundary_matrix_f2(const CubeComplex& c, int d) { return boundary_impl(c, d, true); }

bool verify_dd_zero(const CubeComplex& c) {
  for (int d = 2; d <= c.top_dimension(); ++d) {
    if (!is_zero(multiply(boundary_matrix(c, d - 1), boundary_matrix(c, d)))) return false;
  }
  return true;
}

namespace {

// Collapse every edge slot except `keep`, highest first, following the face
// tables. Faces are stored per slot, tail then head, and removing a higher
// slot leaves the index of every lower slot unchanged.
std::size_t descend(const CubeComplex& c, int d, std::size_t i, unsigned mask, int keep) {
  int dim = d;
  for (int slot = d - 1; slot >= 0; --slot) {
    if (slot == keep) continue;
    const auto faces = c.faces(dim, i);
    i = faces[static_cast<std::size_t>(2 * slot) + ((mask >> slot) & 1U)].target;
    --dim;
  }
  return i;
}

}  // namespace

std::vector<std::size_t> corners(const CubeComplex& c, int d, std::size_t i) {
  std::vector<std::size_t> out(std::size_t{1} << d);
  for (unsigned mask = 0; mask < out.size(); ++mask) out[mask] = descend(c, d, i, mask, -1);
  return out;
}

std::vector<std::size_t> corner_edges(const CubeComplex& c, int d, std::size_t i, unsigned mask) {
  std::vector<std::size_t> out(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) out[static_cast<std::size_t>(k)] = descend(c, d, i, mask, k);
  return out;
}

}  // namespace cubeconf
