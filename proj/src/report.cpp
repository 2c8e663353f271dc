#include "cubeconf/report.hpp"

#include "cubeconf/error.hpp"

namespace cubeconf {

std::string_view mode_name(Mode mode) { return mode == Mode::labeled ? "labeled" : "unlabeled"; }

std::string_view field_name(Field field) { return field == Field::rational ? "q" : "f2"; }

Json sufficiency_json(const Graph& g, const SufficiencyReport& report) {
  Json j;
  j["n"] = report.n;
  j["satisfied"] = report.satisfied;
  j["condition1_ok"] = report.condition1_ok;
  j["condition2_ok"] = report.condition2_ok;
  j["vertex_count_ok"] = report.vertex_count_ok;
  if (report.witness_path) {
    j["witness_path"] = {{"a", g.vertex(report.witness_path->a).name},
                         {"b", g.vertex(report.witness_path->b).name},
                         {"edges", report.witness_path->edges}};
  } else {
    j["witness_path"] = nullptr;
  }
  if (report.witness_cycle) {
    Json names = Json::array();
    for (EdgeId e : report.witness_cycle->edges) names.push_back(g.edge(e).name);
    j["witness_cycle"] = {{"edges", names}, {"length", report.witness_cycle->length()}};
  } else {
    j["witness_cycle"] = nullptr;
  }
  return j;
}

namespace {

std::string cell_id(int d, std::size_t i) { return std::to_string(d) + ":" + std::to_string(i); }

Json optional_bool(const std::optional<bool>& value) {
  return value ? Json(*value) : Json(nullptr);
}

}  // namespace

Json complex_json(const CubeComplex& c) {
  const Graph& g = c.graph();
  Json j;
  j["mode"] = mode_name(c.mode());
  j["n"] = c.robots();
  j["f_vector"] = f_vector(c);
  Json cells = Json::array();
  Json faces = Json::object();
  for (int d = 0; d < c.dimension_slots(); ++d) {
    Json level = Json::array();
    for (std::size_t i = 0; i < c.cell_count(d); ++i) {
      Json names = Json::array();
      for (FactorCode code : c.cell(d, i)) {
        const auto f = c.factor(code);
        names.push_back(f.kind == FactorKind::vertex ? g.vertex(f.ref).name : g.edge(f.ref).name);
      }
      level.push_back(std::move(names));
      if (d == 0) continue;
      Json list = Json::array();
      for (const Face& face : c.faces(d, i)) {
        list.push_back({{"face", cell_id(d - 1, face.target)}, {"sign", face.sign}});
      }
      faces[cell_id(d, i)] = std::move(list);
    }
    cells.push_back(std::move(level));
  }
  j["cells"] = std::move(cells);
  j["faces"] = std::move(faces);
  return j;
}

Json topology_json(const TopologyReport& report) {
  Json j;
  j["f_vector"] = report.f_vector;
  j["chi"] = report.chi;
  j["components"] = report.components;
  j["betti"] = {{"field", field_name(report.betti.field)}, {"values", report.betti.values}};

  Json witnesses = Json::object();
  if (report.surface) {
    const auto& s = *report.surface;
    Json surface;
    surface["is_pure_2d"] = s.is_pure_2d;
    surface["is_closed_surface"] = s.is_closed_surface;
    surface["orientable"] = optional_bool(s.orientable);
    surface["connected"] = s.connected;
    surface["genus"] = s.genus ? Json(*s.genus) : Json(nullptr);
    surface["crosscaps"] = s.crosscaps ? Json(*s.crosscaps) : Json(nullptr);
    surface["chi"] = s.chi;
    if (s.failure_witness) {
      witnesses["surface"] = {{"cell", cell_id(s.failure_witness->dim, s.failure_witness->cell)},
                              {"reason", s.failure_witness->reason}};
    }
    j["surface"] = std::move(surface);
  } else {
    j["surface"] = nullptr;
  }
  if (report.npc) {
    j["npc_flag"] = report.npc->flag;
    if (report.npc->witness) {
      witnesses["npc"] = {{"base", cell_id(0, report.npc->witness->base)},
                          {"clique", report.npc->witness->clique}};
    }
  } else {
    j["npc_flag"] = nullptr;
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

namespace {

Json config_names(const Graph& g, const Configuration& config) {
  Json names = Json::array();
  for (VertexId v : config) names.push_back(g.vertex(v).name);
  return names;
}

Configuration config_from(const Graph& g, const Json& names) {
  Configuration config;
  for (const auto& name : names) {
    auto v = g.find_vertex(name.get<std::string>());
    if (!v) throw Error(ErrorKind::invalid_argument, "unknown vertex '" + name.get<std::string>() + "'");
    config.push_back(*v);
  }
  return config;
}

}  // namespace

Json plan_json(const Graph& g, const Plan& p, std::string_view graph_label) {
  Json j;
  j["graph"] = graph_label;
  j["n"] = p.start.size();
  j["start"] = config_names(g, p.start);
  j["goal"] = config_names(g, p.goal);
  Json steps = Json::array();
  for (const auto& step : p.steps) {
    Json moves = Json::array();
    for (const Move& m : step) {
      moves.push_back({{"robot", m.robot},
                       {"from", g.vertex(m.from).name},
                       {"to", g.vertex(m.to).name},
                       {"via", g.edge(m.via).name}});
    }
    steps.push_back(std::move(moves));
  }
  j["steps"] = std::move(steps);
  j["total_moves"] = p.total_moves();
  j["makespan"] = p.makespan();
  return j;
}

Plan plan_from_json(const Graph& g, const Json& j) {
  Plan p;
  p.start = config_from(g, j.at("start"));
  p.goal = config_from(g, j.at("goal"));
  for (const auto& step : j.at("steps")) {
    std::vector<Move> moves;
    for (const auto& m : step) {
      auto from = g.find_vertex(m.at("from").get<std::string>());
      auto to = g.find_vertex(m.at("to").get<std::string>());
      auto via = g.find_edge(m.at("via").get<std::string>());
      if (!from || !to || !via) throw Error(ErrorKind::invalid_argument, "plan references unknown names");
      moves.push_back(Move{m.at("robot").get<int>(), *from, *to, *via});
    }
    p.steps.push_back(std::move(moves));
  }
  return p;
}

Json duality_json(const DualityReport& report) {
  Json j;
  j["n"] = report.n;
  j["dual_n"] = report.dual_n;
  j["f_vector"] = report.f_vector;
  j["dual_f_vector"] = report.dual_f_vector;
  j["chi"] = report.chi;
  j["dual_chi"] = report.dual_chi;
  j["equal_chi"] = report.equal_chi;
  return j;
}

}  // namespace cubeconf
