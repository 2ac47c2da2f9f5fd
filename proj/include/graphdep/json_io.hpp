#pragma once

#include <string>

#include <json.hpp>

#include "graphdep/concentration.hpp"
#include "graphdep/fractional_cover.hpp"
#include "graphdep/graph.hpp"
#include "graphdep/simulate.hpp"
#include "graphdep/tree_partition.hpp"

namespace graphdep {

using nlohmann::json;

// Graph interchange: {"n": int, "edges": [[u, v], ...]} with u < v and the
// list sorted lexicographically. This is the unit every CLI subcommand
// exchanges.
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

json cover_to_json(const FractionalCover& cover, bool exact);
FractionalCover cover_from_json(const json& j);

json chif_to_json(const ChiF& result);

// {"bags": ..., "quotient_edges": ..., "lambda": x, "weighted": y|null,
//  "width": w, "exact": bool, "method": ...}
json complexity_to_json(const ComplexityResult& result,
                        const std::optional<double>& weighted);

json bound_report_to_json(const BoundReport& report);
std::string bound_reports_to_csv(const std::vector<BoundReport>& reports);

json soundness_to_json(const SoundnessReport& report);
std::string soundness_to_csv(const SoundnessReport& report);

json load_json_file(const std::string& path);
Graph load_graph_file(const std::string& path);

/// Writes <prefix>.bin (trials x n doubles, row-major, native endianness)
/// and <prefix>.json (generator descriptor, graph, coefficients, shape).
void write_sample_archive(const DependentSample& sample, const std::string& prefix);

/// Accepts a JSON array of coefficients or {"c": [...]}.
LipschitzVector lipschitz_from_json(const json& j);

SimulationConfig simulation_config_from_json(const json& j);

}  // namespace graphdep
