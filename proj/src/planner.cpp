#include "cubeconf/planner.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "cubeconf/error.hpp"

namespace cubeconf {

std::size_t Plan::total_moves() const {
  std::size_t total = 0;
  for (const auto& step : steps) total += step.size();
  return total;
}

void check_configuration(const Graph& g, int n, const Configuration& config) {
  if (static_cast<int>(config.size()) != n) {
    throw Error(ErrorKind::invalid_argument,
                "configuration lists " + std::to_string(config.size()) + " robots, expected " +
                    std::to_string(n));
  }
  std::set<VertexId> seen;
  for (VertexId v : config) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) {
      throw Error(ErrorKind::invalid_argument, "configuration references unknown vertex");
    }
    if (!seen.insert(v).second) {
      throw Error(ErrorKind::invalid_argument,
                  "vertex '" + g.vertex(v).name + "' is occupied twice");
    }
  }
}

namespace {

struct Neighbour {
  Configuration config;
  Move move;
};

// Single-robot moves out of `config`, one per target configuration (lowest
// edge id among parallels), sorted by target configuration.
std::vector<Neighbour> neighbours(const Graph& g, const Configuration& config,
                                  std::vector<char>& occupied) {
  for (VertexId v : config) occupied[static_cast<std::size_t>(v)] = 1;
  std::vector<Neighbour> out;
  for (std::size_t r = 0; r < config.size(); ++r) {
    const VertexId from = config[r];
    for (EdgeId e : g.incident_edges(from)) {
      const VertexId to = g.edge(e).other(from);
      if (to == from || occupied[static_cast<std::size_t>(to)]) continue;
      const bool seen = std::any_of(out.begin(), out.end(), [&](const Neighbour& nb) {
        return nb.move.robot == static_cast<int>(r) && nb.move.to == to;
      });
      if (seen) continue;  // incident edges ascend, so the first is the lowest id
      Configuration next = config;
      next[r] = to;
      out.push_back(Neighbour{std::move(next), Move{static_cast<int>(r), from, to, e}});
    }
  }
  for (VertexId v : config) occupied[static_cast<std::size_t>(v)] = 0;
  std::sort(out.begin(), out.end(),
            [](const Neighbour& a, const Neighbour& b) { return a.config < b.config; });
  return out;
}

}  // namespace

Plan plan(const Graph& g, int n, const Configuration& start, const Configuration& goal,
          const PlanOptions& options) {
  if (g.has_self_loop()) {
    throw Error(ErrorKind::self_loop, "graph has a self-loop; subdivide the graph first");
  }
  check_configuration(g, n, start);
  check_configuration(g, n, goal);

  Plan result{start, goal, {}};
  if (start == goal) return result;

  std::map<Configuration, std::pair<Configuration, Move>> parent;
  std::queue<Configuration> frontier;
  std::vector<char> occupied(g.vertex_count(), 0);
  parent.emplace(start, std::pair{start, Move{-1, -1, -1, -1}});
  frontier.push(start);
  bool found = false;
  while (!frontier.empty() && !found) {
    Configuration current = std::move(frontier.front());
    frontier.pop();
    for (auto& nb : neighbours(g, current, occupied)) {
      if (parent.contains(nb.config)) continue;
      if (parent.size() >= options.budget) {
        throw Error(ErrorKind::budget_exceeded,
                    "search visited more than " + std::to_string(options.budget) + " configurations");
      }
      parent.emplace(nb.config, std::pair{current, nb.move});
      if (nb.config == goal) {
        found = true;
        break;
      }
      frontier.push(std::move(nb.config));
    }
  }

  if (!found) {
    BuildOptions build_options;
    build_options.budget = options.budget;
    const auto complex = build(g, n, Mode::labeled, build_options);
    const auto comps = connected_components(complex);
    const auto start_idx = complex.find(0, std::vector<FactorCode>(start.begin(), start.end()));
    const auto goal_idx = complex.find(0, std::vector<FactorCode>(goal.begin(), goal.end()));
    throw UnreachableError(comps.of_vertex.at(*start_idx), comps.of_vertex.at(*goal_idx));
  }

  std::vector<Move> moves;
  for (Configuration at = goal; at != start;) {
    const auto& [prev, move] = parent.at(at);
    moves.push_back(move);
    at = prev;
  }
  std::reverse(moves.begin(), moves.end());
  for (const Move& m : moves) result.steps.push_back({m});
  return result;
}

Plan compress(const Graph& g, const Plan& p) {
  if (auto violation = validate(g, static_cast<int>(p.start.size()), p)) {
    throw Error(ErrorKind::invalid_argument,
                "cannot compress an invalid plan: step " + std::to_string(violation->step) + ": " +
                    violation->reason);
  }
  Plan out{p.start, p.goal, {}};
  Configuration position = p.start;  // positions at the start of the open step
  std::vector<Move> open;

  const auto fits = [&](const Move& m) {
    if (open.empty()) return true;
    const Edge& edge = g.edge(m.via);
    for (const Move& other : open) {
      if (other.robot == m.robot) return false;
      const Edge& e = g.edge(other.via);
      if (edge.touches(e.u) || edge.touches(e.v)) return false;
    }
    for (std::size_t r = 0; r < position.size(); ++r) {
      if (static_cast<int>(r) == m.robot) continue;
      const bool moving = std::any_of(open.begin(), open.end(),
                                      [&](const Move& o) { return o.robot == static_cast<int>(r); });
      if (!moving && edge.touches(position[r])) return false;
    }
    return true;
  };

  const auto close_step = [&] {
    for (const Move& m : open) position[static_cast<std::size_t>(m.robot)] = m.to;
    out.steps.push_back(std::move(open));
    open.clear();
  };

  for (const auto& step : p.steps) {
    for (const Move& m : step) {
      if (!fits(m)) close_step();
      open.push_back(m);
    }
  }
  if (!open.empty()) close_step();
  return out;
}

std::optional<Violation> validate(const Graph& g, int n, const Plan& p) {
  const auto valid_config = [&](const Configuration& config) -> std::optional<std::string> {
    try {
      check_configuration(g, n, config);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::nullopt;
  };
  if (auto why = valid_config(p.start)) return Violation{0, "invalid start: " + *why};

  Configuration position = p.start;
  for (std::size_t s = 0; s < p.steps.size(); ++s) {
    const auto& step = p.steps[s];
    if (step.empty()) return Violation{s, "empty step"};
    std::vector<char> moving(static_cast<std::size_t>(n), 0);
    for (const Move& m : step) {
      if (m.robot < 0 || m.robot >= n) return Violation{s, "unknown robot index"};
      if (moving[static_cast<std::size_t>(m.robot)]) return Violation{s, "robot moves twice in one step"};
      moving[static_cast<std::size_t>(m.robot)] = 1;
      if (m.via < 0 || static_cast<std::size_t>(m.via) >= g.edge_count()) {
        return Violation{s, "unknown edge"};
      }
      const Edge& e = g.edge(m.via);
      if (e.is_loop() || !e.touches(m.from) || e.other(m.from) != m.to) {
        return Violation{s, "edge '" + e.name + "' does not join the move's endpoints"};
      }
      if (position[static_cast<std::size_t>(m.robot)] != m.from) {
        return Violation{s, "robot " + std::to_string(m.robot) + " is not at the move's origin"};
      }
    }
    for (std::size_t a = 0; a < step.size(); ++a) {
      const Edge& ea = g.edge(step[a].via);
      for (std::size_t b = a + 1; b < step.size(); ++b) {
        const Edge& eb = g.edge(step[b].via);
        if (ea.touches(eb.u) || ea.touches(eb.v)) {
          return Violation{s, "edges '" + ea.name + "' and '" + eb.name + "' have intersecting closures"};
        }
      }
      for (int r = 0; r < n; ++r) {
        if (moving[static_cast<std::size_t>(r)]) continue;
        if (ea.touches(position[static_cast<std::size_t>(r)])) {
          return Violation{s, "edge '" + ea.name + "' meets stationary robot " + std::to_string(r)};
        }
      }
    }
    for (const Move& m : step) position[static_cast<std::size_t>(m.robot)] = m.to;
    if (auto why = valid_config(position)) return Violation{s, "invalid configuration: " + *why};
  }
  if (position != p.goal) return Violation{p.steps.size(), "plan does not end at the goal"};
  return std::nullopt;
}

}  // namespace cubeconf
