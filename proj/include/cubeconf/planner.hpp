#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cubeconf/complex.hpp"
#include "cubeconf/graph.hpp"

namespace cubeconf {

/// Occupied vertex per robot.
using Configuration = std::vector<VertexId>;

struct Move {
  int robot;
  VertexId from;
  VertexId to;
  EdgeId via;

  bool operator==(const Move&) const = default;
};

/// Each step is a set of moves along pairwise disjoint edges, i.e. a cube
/// of the discretized configuration space.
struct Plan {
  Configuration start;
  Configuration goal;
  std::vector<std::vector<Move>> steps;

  std::size_t total_moves() const;
  std::size_t makespan() const { return steps.size(); }
};

struct PlanOptions {
  std::size_t budget = kDefaultCellBudget;  // cap on visited configurations
};

/// Throws unless `config` has n distinct known vertices.
void check_configuration(const Graph& g, int n, const Configuration& config);

/// Fewest single moves from start to goal by breadth-first search over
/// configurations generated on the fly. Ties break towards the
/// lexicographically smaller neighbour configuration, and among parallel
/// edges towards the lowest edge id. Throws UnreachableError when start and
/// goal lie in different components.
Plan plan(const Graph& g, int n, const Configuration& start, const Configuration& goal,
          const PlanOptions& options = {});

/// Greedy left-to-right merge of consecutive moves into parallel steps.
Plan compress(const Graph& g, const Plan& p);

struct Violation {
  std::size_t step;
  std::string reason;
};

/// Replays the plan; nullopt when every step is a legal cube move.
std::optional<Violation> validate(const Graph& g, int n, const Plan& p);

}  // namespace cubeconf
