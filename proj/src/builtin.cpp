#include <charconv>
#include <string>

#include "cubeconf/error.hpp"
#include "cubeconf/graph.hpp"

namespace cubeconf {
namespace {

Graph upsilon(int k) {
  Graph g;
  const VertexId center = g.add_vertex("c");
  for (int i = 1; i <= k; ++i) {
    const VertexId leaf = g.add_vertex("l" + std::to_string(i));
    g.add_edge("e" + std::to_string(i), center, leaf);
  }
  return g;
}

Graph cycle(int n) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    g.add_edge("e" + std::to_string(i + 1), i, (i + 1) % n);
  }
  return g;
}

Graph path(int n) {
  Graph g;
  for (int i = 0; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) g.add_edge("e" + std::to_string(i + 1), i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g;
  for (int i = 1; i <= n; ++i) g.add_vertex("v" + std::to_string(i));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      g.add_edge("e" + std::to_string(i + 1) + std::to_string(j + 1), i, j);
    }
  }
  return g;
}

Graph complete_bipartite_33() {
  Graph g;
  for (int i = 1; i <= 3; ++i) g.add_vertex("a" + std::to_string(i));
  for (int i = 1; i <= 3; ++i) g.add_vertex("b" + std::to_string(i));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      g.add_edge("a" + std::to_string(i + 1) + "b" + std::to_string(j + 1), i, 3 + j);
    }
  }
  return g;
}

// Y with leaves l2 and l3 glued into one vertex b.
Graph q_graph() {
  Graph g;
  const VertexId a = g.add_vertex("a");
  const VertexId b = g.add_vertex("b");
  const VertexId c = g.add_vertex("c");
  g.add_edge("ab1", a, b);
  g.add_edge("ab2", a, b);
  g.add_edge("ac", a, c);
  return g;
}

void expect_params(std::string_view name, std::span<const int> params, std::size_t count) {
  if (params.size() != count) {
    throw Error(ErrorKind::invalid_argument,
                "builtin '" + std::string(name) + "' takes " + std::to_string(count) +
                    " parameter(s), got " + std::to_string(params.size()));
  }
}

}  // namespace

Graph builtin(std::string_view name, std::span<const int> params) {
  if (name == "Y") return expect_params(name, params, 0), upsilon(3);
  if (name == "X") return expect_params(name, params, 0), upsilon(4);
  if (name == "Q") return expect_params(name, params, 0), q_graph();
  if (name == "K5") return expect_params(name, params, 0), complete(5);
  if (name == "K33") return expect_params(name, params, 0), complete_bipartite_33();
  if (name == "Upsilon") {
    expect_params(name, params, 1);
    if (params[0] < 3) throw Error(ErrorKind::invalid_argument, "Upsilon(k) needs k >= 3");
    return upsilon(params[0]);
  }
  if (name == "cycle") {
    expect_params(name, params, 1);
    if (params[0] < 1) throw Error(ErrorKind::invalid_argument, "cycle(n) needs n >= 1");
    return cycle(params[0]);
  }
  if (name == "path") {
    expect_params(name, params, 1);
    if (params[0] < 1) throw Error(ErrorKind::invalid_argument, "path(n) needs n >= 1");
    return path(params[0]);
  }
  throw Error(ErrorKind::invalid_argument, "unknown builtin graph '" + std::string(name) + "'");
}

Graph builtin_from_spec(std::string_view spec) {
  std::string_view name = spec;
  std::string_view args;
  if (auto colon = spec.find(':'); colon != std::string_view::npos) {
    name = spec.substr(0, colon);
    args = spec.substr(colon + 1);
  } else if (auto open = spec.find('('); open != std::string_view::npos && spec.back() == ')') {
    name = spec.substr(0, open);
    args = spec.substr(open + 1, spec.size() - open - 2);
  }
  std::vector<int> params;
  while (!args.empty()) {
    auto comma = args.find(',');
    std::string_view token = args.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorKind::invalid_argument, "bad builtin parameter '" + std::string(token) + "'");
    }
    params.push_back(value);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return builtin(name, params);
}

}  // namespace cubeconf
