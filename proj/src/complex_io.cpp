#include "minorforge/complex_io.hpp"

#include "minorforge/graph_io.hpp"

namespace minorforge {

nlohmann::json to_json(const TwoComplex& x) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& cell : x.cells) {
    const auto& w = cell.boundary;
    nlohmann::json steps = nlohmann::json::array();
    if (w.steps.empty()) steps.push_back({"v", w.start});
    for (const auto& s : w.steps) steps.push_back({"e", s.edge, static_cast<int>(s.dir)});
    cells.push_back(std::move(steps));
  }
  return {{"skeleton", to_json(x.skeleton)}, {"cells", std::move(cells)}};
}

TwoComplex complex_from_json(const nlohmann::json& j) {
  try {
    TwoComplex x{graph_from_json(j.at("skeleton")), {}};
    for (const auto& jc : j.at("cells")) {
      if (!jc.is_array() || jc.empty()) throw std::invalid_argument("cell must be a nonempty array");
      ClosedWalk w;
      if (jc.size() == 1 && jc[0].at(0) == "v") {
        w.start = jc[0].at(1).get<VertexId>();
      } else {
        for (const auto& js : jc) {
          if (js.size() != 3 || js.at(0) != "e") throw std::invalid_argument("step must be [\"e\", id, dir]");
          int dir = js.at(2).get<int>();
          if (dir != 1 && dir != -1) throw std::invalid_argument("step direction must be 1 or -1");
          w.steps.push_back({js.at(1).get<EdgeId>(), static_cast<std::int8_t>(dir)});
        }
        const auto& first = w.steps.front();
        if (!x.skeleton.has_edge(first.edge)) throw std::invalid_argument("cell uses a missing edge");
        const auto& r = x.skeleton.edge(first.edge);
        w.start = first.dir == 1 ? r.u : r.v;
      }
      x.cells.push_back({std::move(w)});
    }
    if (auto v = validate(x)) {
      throw std::invalid_argument("cell " + std::to_string(v->cell.value_or(0)) + ": " + v->message);
    }
    return x;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed complex JSON: ") + e.what());
  }
}

}  // namespace minorforge
