#include "graphdep/json_io.hpp"

#include <fstream>
#include <sstream>

namespace graphdep {

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw ValidationError("graph JSON must be {\"n\": int, \"edges\": [[u,v],...]}");
  }
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw ValidationError("each edge must be a pair [u, v]");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return make_graph(n, edges);
}

json cover_to_json(const FractionalCover& cover, bool exact) {
  json parts = json::array();
  for (const auto& part : cover.parts) {
    parts.push_back({{"set", part.set}, {"weight", part.weight}});
  }
  return {{"parts", parts},
          {"total_weight", cover.total_weight()},
          {"exact", exact},
          {"n", cover.host_n}};
}

FractionalCover cover_from_json(const json& j) {
  if (!j.is_object() || !j.contains("parts")) {
    throw ValidationError("cover JSON must contain \"parts\"");
  }
  FractionalCover cover;
  cover.host_n = j.value("n", 0);
  for (const auto& p : j.at("parts")) {
    CoverPart part;
    part.set = p.at("set").get<VertexSet>();
    part.weight = p.at("weight").get<double>();
    cover.parts.push_back(std::move(part));
  }
  return cover;
}

json chif_to_json(const ChiF& result) {
  return {{"value", result.value},
          {"exact", result.exact},
          {"certificate", cover_to_json(result.certificate, result.exact)}};
}

json complexity_to_json(const ComplexityResult& result,
                        const std::optional<double>& weighted) {
  json bags = json::array();
  for (const auto& bag : result.partition.bags) bags.push_back(bag);
  json quotient_edges = json::array();
  for (auto [a, b] : result.partition.quotient.edges()) quotient_edges.push_back({a, b});
  json out{{"bags", bags},
           {"quotient_edges", quotient_edges},
           {"lambda", result.cost.lambda_value},
           {"width", result.cost.width},
           {"exact", result.exact},
           {"method", result.method}};
  if (weighted) {
    out["weighted"] = *weighted;
  } else {
    out["weighted"] = nullptr;
  }
  return out;
}

json bound_report_to_json(const BoundReport& report) {
  json tail = json::array();
  for (auto [t, p] : report.tail) tail.push_back({{"t", t}, {"bound", p}});
  return {{"family", report.family},
          {"parameters", report.parameters},
          {"tail", tail},
          {"degenerate", report.degenerate}};
}

std::string bound_reports_to_csv(const std::vector<BoundReport>& reports) {
  std::ostringstream out;
  out << "t,family,bound\n";
  for (const auto& report : reports) {
    for (auto [t, p] : report.tail) {
      out << t << "," << report.family << "," << p << "\n";
    }
  }
  return out.str();
}

json soundness_to_json(const SoundnessReport& report) {
  json curve = json::array();
  for (size_t i = 0; i < report.curve.t_grid.size(); ++i) {
    curve.push_back({{"t", report.curve.t_grid[i]},
                     {"empirical", report.curve.empirical[i]},
                     {"se", report.curve.standard_error[i]}});
  }
  json bounds = json::array();
  for (const auto& b : report.bounds) {
    bounds.push_back({{"family", b.family},
                      {"parameters", b.parameters},
                      {"bound", b.bound},
                      {"violation", b.violation}});
  }
  return {{"curve", curve},
          {"bounds", bounds},
          {"total_violations", report.total_violations}};
}

std::string soundness_to_csv(const SoundnessReport& report) {
  std::ostringstream out;
  out << "t,empirical,se,bound_family,bound\n";
  for (const auto& b : report.bounds) {
    for (size_t i = 0; i < report.curve.t_grid.size(); ++i) {
      out << report.curve.t_grid[i] << "," << report.curve.empirical[i] << ","
          << report.curve.standard_error[i] << "," << b.family << "," << b.bound[i]
          << "\n";
    }
  }
  return out.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

Graph load_graph_file(const std::string& path) {
  return graph_from_json(load_json_file(path));
}

void write_sample_archive(const DependentSample& sample, const std::string& prefix) {
  std::ofstream bin(prefix + ".bin", std::ios::binary);
  if (!bin) throw ValidationError("cannot write " + prefix + ".bin");
  for (const auto& row : sample.values) {
    bin.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size() * sizeof(double)));
  }

  json header{{"family", sample.generator.family},
              {"params", sample.generator.params},
              {"seed", sample.generator.seed},
              {"trials", sample.values.size()},
              {"n", sample.values.empty() ? 0 : sample.values.front().size()},
              {"dtype", "float64"},
              {"layout", "row-major"},
              {"graph", graph_to_json(sample.graph)},
              {"lipschitz", sample.lipschitz},
              {"clip_fraction", sample.clip_fraction}};
  std::ofstream meta(prefix + ".json");
  if (!meta) throw ValidationError("cannot write " + prefix + ".json");
  meta << header.dump(2) << "\n";
}

LipschitzVector lipschitz_from_json(const json& j) {
  const json* array = &j;
  if (j.is_object() && j.contains("c")) array = &j.at("c");
  if (!array->is_array()) {
    throw ValidationError("lipschitz JSON must be an array of coefficients");
  }
  LipschitzVector c;
  for (const auto& value : *array) c.push_back(value.get<double>());
  return c;
}

SimulationConfig simulation_config_from_json(const json& j) {
  SimulationConfig config;
  config.name = j.value("name", "custom");
  const json& gen = j.at("generator");
  config.generator.family = gen.at("family").get<std::string>();
  config.generator.n = gen.value("n", 0);
  config.generator.m = gen.value("m", 0);
  config.generator.kernel = gen.value("kernel", "mean");
  config.generator.rate = gen.value("rate", 1.0);
  if (gen.contains("clip")) config.generator.clip = gen.at("clip").get<double>();
  if (gen.contains("regions")) {
    for (const auto& r : gen.at("regions")) {
      config.generator.regions.push_back({r.at(0).get<double>(), r.at(1).get<double>()});
    }
  }
  for (const auto& b : j.at("bounds")) {
    BoundSpec spec;
    spec.family = b.at("family").get<std::string>();
    if (b.contains("chi_f")) spec.chi_f_override = b.at("chi_f").get<double>();
    if (b.contains("search")) {
      spec.search = b.at("search").get<std::string>() == "exact" ? SearchMode::exact
                                                                 : SearchMode::heuristic;
    }
    config.bounds.push_back(std::move(spec));
  }
  config.statistic = parse_statistic(j.value("statistic", "sum"));
  const json& grid = j.at("t_grid");
  if (grid.is_array()) {
    for (const auto& t : grid) config.t_grid.push_back(t.get<double>());
  } else {
    double lo = grid.at("lo").get<double>();
    double hi = grid.at("hi").get<double>();
    int count = grid.at("count").get<int>();
    if (count < 2) throw ValidationError("t_grid count must be >= 2");
    for (int i = 0; i < count; ++i) {
      config.t_grid.push_back(lo + (hi - lo) * i / (count - 1));
    }
  }
  return config;
}

}  // namespace graphdep
