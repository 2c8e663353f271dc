#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cubeconf/graph.hpp"
#include "cubeconf/linalg.hpp"

namespace cubeconf {

enum class Mode { labeled, unlabeled };

/// Serial reference kernels or their OpenMP counterparts. Both produce
/// identical output.
enum class Execution { serial, parallel };

inline constexpr std::size_t kDefaultCellBudget = 10'000'000;

/// Cell factors are packed into one integer per slot: vertex v is v, edge e
/// is |V| + e. Lexicographic order on codes is lexicographic order on
/// (kind, ref) with vertices before edges.
using FactorCode = std::int32_t;

enum class FactorKind : std::uint8_t { vertex, edge };

struct CellFactor {
  FactorKind kind;
  std::int32_t ref;

  bool operator==(const CellFactor&) const = default;
};

enum class Endpoint : std::uint8_t { tail, head };

struct Face {
  std::int32_t position;  // factor slot whose edge was collapsed
  Endpoint endpoint;
  std::int8_t sign;       // +1 / -1, meaningful mod 2 only in unlabeled mode
  std::size_t target;     // index among cells of dimension d-1
};

struct BuildOptions {
  std::size_t budget = kDefaultCellBudget;
  Execution execution = Execution::parallel;
};

/// Discretized configuration space of n robots on a loopless graph: every
/// n-tuple of vertices/edges with pairwise disjoint closures. Labeled mode
/// keeps ordered tuples; unlabeled mode keeps the sorted representative.
class CubeComplex {
 public:
  CubeComplex(std::shared_ptr<const Graph> graph, int n, Mode mode,
              std::vector<std::vector<FactorCode>> cells,
              std::vector<std::vector<Face>> faces);

  Mode mode() const { return mode_; }
  int robots() const { return n_; }
  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }

  /// Highest dimension with at least one cell; -1 when empty.
  int top_dimension() const;
  bool empty() const { return top_dimension() < 0; }

  /// Dimensions a cell could occupy: min(n, |V| - n) + 1, or 0 when n > |V|.
  int dimension_slots() const { return static_cast<int>(cells_.size()); }

  std::size_t cell_count(int d) const;
  std::size_t total_cells() const;
  std::span<const FactorCode> cell(int d, std::size_t i) const;

  /// The 2d codimension-1 faces of a d-cell, ordered by edge slot, tail first.
  std::span<const Face> faces(int d, std::size_t i) const;

  /// Binary search for a canonical factor tuple among d-cells.
  std::optional<std::size_t> find(int d, std::span<const FactorCode> codes) const;

  /// Put a factor tuple into the canonical form for this complex's mode.
  void canonicalize(std::span<FactorCode> codes) const;

  bool is_edge(FactorCode code) const { return code >= vertex_count_; }
  CellFactor factor(FactorCode code) const;
  FactorCode vertex_code(VertexId v) const { return v; }
  FactorCode edge_code(EdgeId e) const { return vertex_count_ + e; }

  /// Copy with every cell of dimension > max_dim dropped.
  CubeComplex skeleton(int max_dim) const;

 private:
  std::shared_ptr<const Graph> graph_;
  int n_;
  Mode mode_;
  FactorCode vertex_count_;
  std::vector<std::vector<FactorCode>> cells_;  // per dim, stride n
  std::vector<std::vector<Face>> faces_;        // per dim, stride 2d
};

CubeComplex build(const Graph& g, int n, Mode mode, const BuildOptions& options = {});
CubeComplex build(std::shared_ptr<const Graph> g, int n, Mode mode, const BuildOptions& options = {});

std::vector<std::int64_t> f_vector(const CubeComplex& c);
std::int64_t euler_characteristic(const CubeComplex& c);

struct MoveEdge {
  std::size_t tail_node;  // configuration with the moving robot at the edge tail
  std::size_t head_node;
  std::int32_t robot;     // factor slot (robot index when labeled)
  EdgeId via;
  std::size_t cell;       // index among 1-cells
};

/// 1-skeleton: nodes are 0-cells, multi-edges are 1-cells.
struct MoveGraph {
  std::size_t node_count = 0;
  std::vector<MoveEdge> edges;

  std::vector<std::vector<std::size_t>> adjacency() const;  // edge indices per node
};

MoveGraph one_skeleton(const CubeComplex& c);

struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> of_vertex;  // numbered by smallest 0-cell index
};

Components connected_components(const CubeComplex& c);

/// Component of any cell, via its first corner.
std::size_t component_of_cell(const CubeComplex& c, const Components& comps, int d, std::size_t i);

/// Integer boundary d-cells -> (d-1)-cells. Labeled mode only.
SparseMatrix boundary_matrix(const CubeComplex& c, int d);

/// Boundary with every coefficient reduced mod 2; valid in both modes.
SparseMatrix boundary_matrix_f2(const CubeComplex& c, int d);

/// Checks the composite of consecutive integer boundaries vanishes.
bool verify_dd_zero(const CubeComplex& c);

/// 0-cell indices of the 2^d corners of a cell, indexed by the bitmask of
/// chosen endpoints (bit k set = head of the k-th edge slot).
std::vector<std::size_t> corners(const CubeComplex& c, int d, std::size_t i);

/// For corner `mask` of a d-cell, the d incident 1-cells of that cube.
std::vector<std::size_t> corner_edges(const CubeComplex& c, int d, std::size_t i, unsigned mask);

}  // namespace cubeconf
