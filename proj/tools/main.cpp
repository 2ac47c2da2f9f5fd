#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphdep/concentration.hpp"
#include "graphdep/fractional_cover.hpp"
#include "graphdep/graph.hpp"
#include "graphdep/json_io.hpp"
#include "graphdep/learning_bounds.hpp"
#include "graphdep/simulate.hpp"
#include "graphdep/tree_partition.hpp"
#include "graphdep/version.hpp"

namespace {

using graphdep::json;

constexpr int kExitUsage = 2;
constexpr int kExitSizeLimit = 3;
constexpr int kExitValidation = 4;

void emit(json payload) {
  payload["version"] = graphdep::kVersion;
  std::cout << payload.dump(2) << "\n";
}

// Grid syntax: "1,2,3" or "lo:hi:count".
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    double lo, hi;
    int count;
    char c1, c2;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':' || count < 2) {
      throw graphdep::ValidationError("grid must be 'lo:hi:count' with count >= 2");
    }
    for (int i = 0; i < count; ++i) grid.push_back(lo + (hi - lo) * i / (count - 1));
  } else {
    std::istringstream in(spec);
    std::string token;
    while (std::getline(in, token, ',')) grid.push_back(std::stod(token));
  }
  if (grid.empty()) throw graphdep::ValidationError("empty deviation grid");
  return grid;
}

graphdep::LipschitzVector parse_lipschitz(const std::string& spec, int n) {
  const std::string prefix = "uniform:";
  if (spec.rfind(prefix, 0) == 0) {
    return graphdep::uniform_lipschitz(n, std::stod(spec.substr(prefix.size())));
  }
  graphdep::LipschitzVector c =
      graphdep::lipschitz_from_json(graphdep::load_json_file(spec));
  graphdep::check_lipschitz(c, n);
  return c;
}

// Closed-form construction values for recognized families, keyed by the
// heuristic's method tag.
std::optional<double> paper_lambda_value(const graphdep::ComplexityResult& result,
                                         const graphdep::Graph& g) {
  int n = g.vertex_count();
  if (result.method == "forest-identity") {
    int k = static_cast<int>(graphdep::connected_components(g).size());
    return 4.0 * n - 3.0 * k;
  }
  if (result.method == "cycle-pairing") {
    return n % 2 == 0 ? 8.0 * n - 13.0 : 8.0 * n - 14.0;
  }
  if (result.method == "grid-antidiagonal") {
    double m = std::round(std::sqrt(static_cast<double>(n)));
    return (2.0 * m * (2 * m + 1) * (2 * m - 1) - 3.0) / 3.0;
  }
  if (result.method == "mdependent-blocks") {
    auto it = result.family_params.find("m");
    if (it != result.family_params.end()) {
      double m = it->second;
      return (std::ceil(n / m) - 1.0) * 4.0 * m * m + m * m;
    }
  }
  return std::nullopt;
}

// Families with documented closed-form chi_f: independent variables (1),
// forests (2), disjoint unions of equal cliques (the clique size, as in the
// multiclass setting), and Rook's graphs (the larger side).
std::optional<double> paper_chif_value(const graphdep::Graph& g) {
  if (g.edge_count() == 0) return 1.0;
  if (graphdep::is_forest(g)) return 2.0;
  int n = g.vertex_count();

  auto comps = graphdep::connected_components(g);
  bool clique_union = true;
  size_t size = comps.front().size();
  for (const auto& comp : comps) {
    clique_union &= comp.size() == size;
    long long within = static_cast<long long>(comp.size()) * (comp.size() - 1) / 2;
    long long count = 0;
    for (size_t i = 0; i < comp.size() && clique_union; ++i) {
      for (size_t j = i + 1; j < comp.size(); ++j) {
        count += g.has_edge(comp[i], comp[j]) ? 1 : 0;
      }
    }
    clique_union &= count == within;
  }
  if (clique_union) return static_cast<double>(size);

  for (int a = 1; a * a <= n; ++a) {
    if (n % a != 0) continue;
    int b = n / a;
    graphdep::Graph rook =
        graphdep::line_graph(graphdep::complete_bipartite_graph(a, b));
    if (rook == g) return static_cast<double>(b);
  }
  return std::nullopt;
}

double beta_at(const std::string& profile, double beta, int n, int size) {
  if (profile == "const") return beta;
  if (profile == "inverse") return beta * n / size;  // beta(k) = (beta * n) / k
  throw graphdep::ValidationError("unknown beta profile '" + profile +
                                  "' (expected const or inverse)");
}

std::vector<std::pair<double, double>> read_labeled_scores(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw graphdep::ValidationError("cannot open file: " + path);
  std::vector<std::pair<double, double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string label, score;
    if (!std::getline(ls, label, ',') || !std::getline(ls, score, ',')) {
      throw graphdep::ValidationError("expected 'label,score' rows in " + path);
    }
    rows.emplace_back(std::stod(label), std::stod(score));
  }
  if (rows.empty()) throw graphdep::ValidationError("no rows in " + path);
  return rows;
}

int guarded(bool flags_only, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const graphdep::SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const graphdep::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return flags_only ? kExitUsage : kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph-dependence toolkit: fractional covers, tree-partitions, "
               "concentration and generalization bounds, Monte Carlo checks"};
  app.require_subcommand(1);
  int exit_code = 0;

  // graph gen <family>
  auto* graph_cmd = app.add_subcommand("graph", "graph utilities");
  graph_cmd->require_subcommand(1);
  auto* gen = graph_cmd->add_subcommand("gen", "generate a named graph family");
  std::string family;
  int gn = 0, gm = 0, ga = 0, gb = 0, gpos = 0, gneg = 0;
  gen->add_option("family", family,
                  "empty|path|cycle|grid|complete|bipartite|mchain|rook")
      ->required();
  gen->add_option("--n", gn, "vertex count (grid: side length)");
  gen->add_option("--m", gm, "dependence range (mchain)");
  gen->add_option("--a", ga, "first side (bipartite)");
  gen->add_option("--b", gb, "second side (bipartite)");
  gen->add_option("--pos", gpos, "positive count (rook)");
  gen->add_option("--neg", gneg, "negative count (rook)");
  gen->callback([&] {
    exit_code = guarded(true, [&] {
      graphdep::Graph g;
      if (family == "empty") {
        g = graphdep::empty_graph(gn);
      } else if (family == "path") {
        g = graphdep::path_graph(gn);
      } else if (family == "cycle") {
        g = graphdep::cycle_graph(gn);
      } else if (family == "grid") {
        g = graphdep::grid_graph(gn);
      } else if (family == "complete") {
        g = graphdep::complete_graph(gn);
      } else if (family == "bipartite") {
        g = graphdep::complete_bipartite_graph(ga, gb);
      } else if (family == "mchain") {
        g = graphdep::m_dependent_chain(gn, gm);
      } else if (family == "rook") {
        g = graphdep::line_graph(graphdep::complete_bipartite_graph(gpos, gneg));
      } else {
        throw graphdep::ValidationError("unknown family '" + family + "'");
      }
      emit(graphdep::graph_to_json(g));
    });
  });

  // chif <graph.json>
  auto* chif_cmd = app.add_subcommand("chif", "fractional chromatic number");
  std::string chif_path;
  bool chif_greedy = false, chif_exact_flag = false, chif_paper = false;
  chif_cmd->add_option("graph", chif_path, "graph JSON file")->required();
  chif_cmd->add_flag("--exact", chif_exact_flag,
                     "LP over maximal independent sets (default)");
  chif_cmd->add_flag("--greedy", chif_greedy, "greedy-coloring upper bound");
  chif_cmd->add_flag("--paper-values", chif_paper,
                     "include the closed-form value for recognized families");
  chif_cmd->callback([&] {
    exit_code = guarded(false, [&] {
      graphdep::Graph g = graphdep::load_graph_file(chif_path);
      graphdep::ChiF result =
          chif_greedy ? graphdep::chi_f_upper(g) : graphdep::chi_f_exact(g);
      json payload = graphdep::chif_to_json(result);
      if (chif_paper) {
        auto paper = paper_chif_value(g);
        payload["paper_value"] = paper ? json(*paper) : json(nullptr);
      }
      emit(payload);
    });
  });

  // lambda <graph.json>
  auto* lambda_cmd = app.add_subcommand("lambda", "forest complexity / weighted cost");
  std::string lambda_path, lambda_c;
  bool lambda_exact = false, lambda_heur = false, lambda_paper = false;
  lambda_cmd->add_option("graph", lambda_path, "graph JSON file")->required();
  lambda_cmd->add_flag("--exact", lambda_exact, "exhaustive tree-partition search");
  lambda_cmd->add_flag("--heuristic", lambda_heur, "constructive upper bound (default)");
  lambda_cmd->add_option("--c", lambda_c, "coefficients: JSON file or uniform:v");
  lambda_cmd->add_flag("--paper-values", lambda_paper,
                       "include the closed-form construction value when recognized");
  lambda_cmd->callback([&] {
    exit_code = guarded(false, [&] {
      graphdep::Graph g = graphdep::load_graph_file(lambda_path);
      std::optional<graphdep::LipschitzVector> c;
      if (!lambda_c.empty()) c = parse_lipschitz(lambda_c, g.vertex_count());
      graphdep::ComplexityResult result =
          lambda_exact ? graphdep::forest_complexity_exact(g, c)
                       : graphdep::forest_complexity_heuristic(g);
      std::optional<double> weighted;
      if (c) weighted = graphdep::partition_cost(result.partition, c).weighted_value;
      json payload = graphdep::complexity_to_json(result, weighted);
      if (lambda_paper) {
        auto paper = paper_lambda_value(result, g);
        payload["paper_value"] = paper ? json(*paper) : json(nullptr);
      }
      emit(payload);
    });
  });

  // bound <graph.json> --c ... --t ...
  auto* bound_cmd = app.add_subcommand("bound", "concentration tail bounds");
  std::string bound_path, bound_c, bound_grid, bound_family = "all",
              bound_format = "json", bound_search = "auto";
  bound_cmd->add_option("graph", bound_path, "graph JSON file")->required();
  bound_cmd->add_option("--c", bound_c, "coefficients: JSON file or uniform:v")
      ->required();
  bound_cmd->add_option("--t", bound_grid, "deviation grid: list or lo:hi:count")
      ->required();
  bound_cmd->add_option("--family", bound_family, "all|mcdiarmid|janson|forest|general");
  bound_cmd->add_option("--search", bound_search, "auto|exact|heuristic (general)");
  bound_cmd->add_option("--format", bound_format, "json|csv");
  bound_cmd->callback([&] {
    exit_code = guarded(false, [&] {
      graphdep::Graph g = graphdep::load_graph_file(bound_path);
      graphdep::LipschitzVector c = parse_lipschitz(bound_c, g.vertex_count());
      std::vector<double> grid = parse_grid(bound_grid);

      std::vector<graphdep::BoundReport> reports;
      size_t best = 0;
      if (bound_family == "all") {
        graphdep::TightestReport tight = graphdep::tightest_bound(g, c, grid);
        reports = std::move(tight.candidates);
        best = tight.best_index;
      } else {
        graphdep::BoundReport report;
        report.family = bound_family;
        double denominator = 0.0;
        if (bound_family == "mcdiarmid") {
          denominator = graphdep::sum_of_squares(c);
        } else if (bound_family == "janson") {
          double chi = g.vertex_count() <= graphdep::default_independent_set_limit()
                           ? graphdep::chi_f_exact(g).value
                           : graphdep::chi_f_upper(g).value;
          report.parameters["chi_f"] = chi;
          denominator = chi * graphdep::sum_of_squares(c);
        } else if (bound_family == "forest") {
          denominator = graphdep::forest_denominator(g, c);
        } else if (bound_family == "general") {
          graphdep::SearchMode mode =
              bound_search == "exact"       ? graphdep::SearchMode::exact
              : bound_search == "heuristic" ? graphdep::SearchMode::heuristic
              : (g.vertex_count() <= graphdep::default_partition_limit()
                     ? graphdep::SearchMode::exact
                     : graphdep::SearchMode::heuristic);
          denominator = graphdep::graph_general_bound(g, c, 1.0, mode).denominator;
        } else {
          throw graphdep::ValidationError("unknown bound family '" + bound_family +
                                          "'");
        }
        report.parameters["denominator"] = denominator;
        report.degenerate = denominator <= 0.0;
        for (double t : grid) {
          report.tail.emplace_back(
              t, graphdep::tail_bound_from_denominator(denominator, t));
        }
        reports.push_back(std::move(report));
      }

      if (bound_format == "csv") {
        std::cout << graphdep::bound_reports_to_csv(reports);
        std::cerr << "tightest family: " << reports[best].family << "\n";
      } else {
        json payload;
        payload["bounds"] = json::array();
        for (const auto& r : reports) {
          payload["bounds"].push_back(graphdep::bound_report_to_json(r));
        }
        payload["tightest_family"] = reports[best].family;
        emit(payload);
      }
    });
  });

  // learn-bound <family>
  auto* learn = app.add_subcommand("learn-bound", "generalization bounds and losses");
  learn->require_subcommand(1);
  double lb_B = 1.0, lb_Gamma = 1.0, lb_chif = 1.0, lb_delta = 0.05, lb_M = 1.0,
         lb_rhat = 0.0, lb_rterm = 0.0, lb_beta = 0.0, lb_lambda = 0.0;
  int lb_n = 1, lb_degree = 0, lb_pos = 1, lb_neg = 1, lb_m = 1, lb_K = 2;
  bool lb_empirical = false;
  std::string lb_profile = "const", lb_scores;

  auto* rad_lin = learn->add_subcommand("rademacher-linear",
                                        "B*Gamma*sqrt(chi_f/n) for linear classes");
  rad_lin->add_option("--B", lb_B)->required();
  rad_lin->add_option("--Gamma", lb_Gamma)->required();
  rad_lin->add_option("--chif", lb_chif)->required();
  rad_lin->add_option("--n", lb_n)->required();
  rad_lin->callback([&] {
    exit_code = guarded(true, [&] {
      emit({{"family", "rademacher-linear"},
            {"value", graphdep::linear_class_rademacher(lb_B, lb_Gamma, lb_chif, lb_n)}});
    });
  });

  auto* rad = learn->add_subcommand("rademacher",
                                    "risk bound from a fractional Rademacher term");
  rad->add_option("--rhat", lb_rhat);
  rad->add_option("--rterm", lb_rterm, "Rademacher complexity term");
  rad->add_option("--M", lb_M);
  rad->add_option("--chif", lb_chif)->required();
  rad->add_option("--n", lb_n)->required();
  rad->add_option("--delta", lb_delta)->required();
  rad->add_flag("--empirical", lb_empirical, "empirical-complexity variant");
  rad->callback([&] {
    exit_code = guarded(true, [&] {
      graphdep::GenBoundInputs inputs{lb_rhat, lb_delta, lb_n, lb_rterm, lb_chif};
      auto value = graphdep::frac_rademacher_gen_bound(inputs, lb_M, lb_empirical);
      emit({{"family", lb_empirical ? "rademacher-empirical" : "rademacher"},
            {"value", value.value},
            {"vacuous", value.vacuous}});
    });
  });

  auto* stab = learn->add_subcommand("stability", "uniform-stability risk bound");
  stab->add_option("--beta", lb_beta)->required();
  stab->add_option("--beta-profile", lb_profile, "const|inverse");
  stab->add_option("--n", lb_n)->required();
  stab->add_option("--delta", lb_delta)->required();
  stab->add_option("--M", lb_M)->required();
  stab->add_option("--lambda", lb_lambda, "forest complexity of the dependency graph")
      ->required();
  stab->add_option("--degree", lb_degree, "max degree of the dependency graph")
      ->required();
  stab->add_option("--rhat", lb_rhat);
  stab->callback([&] {
    exit_code = guarded(true, [&] {
      auto profile = graphdep::make_stability_profile(
          [&](int size) { return beta_at(lb_profile, lb_beta, lb_n, size); }, lb_n,
          lb_degree, lb_M);
      auto bound =
          graphdep::stability_gen_bound(lb_rhat, profile, lb_lambda, lb_n, lb_delta);
      emit({{"family", "stability"},
            {"value", bound.value},
            {"expectation_term", bound.expectation_term},
            {"deviation_term", bound.deviation_term},
            {"lipschitz_coefficient", bound.lipschitz_coefficient},
            {"vacuous", bound.vacuous}});
    });
  });

  auto* rank = learn->add_subcommand("ranking", "bipartite ranking risk bound");
  rank->add_option("--B", lb_B)->required();
  rank->add_option("--Gamma", lb_Gamma)->required();
  rank->add_option("--pos", lb_pos)->required();
  rank->add_option("--neg", lb_neg)->required();
  rank->add_option("--rhat", lb_rhat);
  rank->add_option("--delta", lb_delta)->required();
  rank->callback([&] {
    exit_code = guarded(true, [&] {
      auto value = graphdep::bipartite_ranking_bound(lb_B, lb_Gamma, lb_pos, lb_neg,
                                                     lb_rhat, lb_delta);
      emit({{"family", "ranking"}, {"value", value.value}, {"vacuous", value.vacuous}});
    });
  });

  auto* multi = learn->add_subcommand("multiclass", "multiclass risk bound");
  multi->add_option("--B", lb_B)->required();
  multi->add_option("--Gamma", lb_Gamma)->required();
  multi->add_option("--m", lb_m)->required();
  multi->add_option("--K", lb_K)->required();
  multi->add_option("--rhat", lb_rhat);
  multi->add_option("--delta", lb_delta)->required();
  multi->callback([&] {
    exit_code = guarded(true, [&] {
      auto value =
          graphdep::multiclass_bound(lb_B, lb_Gamma, lb_m, lb_K, lb_rhat, lb_delta);
      emit(
          {{"family", "multiclass"}, {"value", value.value}, {"vacuous", value.vacuous}});
    });
  });

  auto* mdep = learn->add_subcommand("mdep", "m-dependent stability bound");
  mdep->add_option("--beta", lb_beta)->required();
  mdep->add_option("--beta-profile", lb_profile, "const|inverse");
  mdep->add_option("--n", lb_n)->required();
  mdep->add_option("--m", lb_m)->required();
  mdep->add_option("--delta", lb_delta)->required();
  mdep->add_option("--M", lb_M)->required();
  mdep->add_option("--rhat", lb_rhat);
  mdep->callback([&] {
    exit_code = guarded(true, [&] {
      auto profile = graphdep::make_stability_profile(
          [&](int size) { return beta_at(lb_profile, lb_beta, lb_n, size); }, lb_n,
          2 * lb_m, lb_M);
      auto value =
          graphdep::m_dependent_stability_bound(lb_rhat, profile, lb_m, lb_n, lb_delta);
      emit({{"family", "mdep"}, {"value", value.value}, {"vacuous", value.vacuous}});
    });
  });

  auto* auc = learn->add_subcommand("auc-risk", "pairwise ranking error from scores");
  auc->add_option("--scores", lb_scores, "CSV rows: label(+1/-1),score")->required();
  auc->callback([&] {
    exit_code = guarded(false, [&] {
      std::vector<double> pos, neg;
      for (auto [label, score] : read_labeled_scores(lb_scores)) {
        (label > 0 ? pos : neg).push_back(score);
      }
      emit({{"family", "auc-risk"},
            {"value", graphdep::auc_empirical_risk(pos, neg)},
            {"positives", pos.size()},
            {"negatives", neg.size()}});
    });
  });

  auto* mrisk =
      learn->add_subcommand("multiclass-risk", "multiclass pairwise error from scores");
  mrisk->add_option("--scores", lb_scores, "CSV rows: label,score_0,...,score_{K-1}")
      ->required();
  mrisk->callback([&] {
    exit_code = guarded(false, [&] {
      std::ifstream in(lb_scores);
      if (!in) throw graphdep::ValidationError("cannot open file: " + lb_scores);
      std::vector<std::vector<double>> scores;
      std::vector<int> labels;
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string token;
        std::vector<double> row;
        while (std::getline(ls, token, ',')) row.push_back(std::stod(token));
        if (row.size() < 3) {
          throw graphdep::ValidationError("rows need a label and >= 2 scores");
        }
        labels.push_back(static_cast<int>(row.front()));
        scores.emplace_back(row.begin() + 1, row.end());
      }
      emit({{"family", "multiclass-risk"},
            {"value", graphdep::multiclass_empirical_risk(scores, labels)},
            {"examples", scores.size()}});
    });
  });

  // simulate <preset|config.json>
  auto* sim = app.add_subcommand("simulate", "Monte Carlo tail vs bound check");
  std::string sim_target, sim_format = "json", sim_dump;
  int sim_trials = 0;
  std::uint64_t sim_seed = 0;
  sim->add_option("target", sim_target, "preset name or config JSON file")->required();
  sim->add_option("--trials", sim_trials, "number of Monte Carlo trials")->required();
  sim->add_option("--seed", sim_seed, "master seed (required for reproducibility)")
      ->required();
  sim->add_option("--format", sim_format, "json|csv");
  sim->add_option("--dump-sample", sim_dump,
                  "also write <prefix>.bin / <prefix>.json with the raw sample");
  sim->callback([&] {
    if (sim_trials < 1) {
      std::cerr << "error: --trials must be >= 1\n";
      exit_code = kExitUsage;
      return;
    }
    exit_code = guarded(false, [&] {
      graphdep::SimulationConfig config;
      bool is_preset = false;
      for (const auto& name : graphdep::preset_names()) {
        if (name == sim_target) {
          is_preset = true;
          break;
        }
      }
      if (is_preset) {
        config = graphdep::preset_config(sim_target);
      } else {
        config =
            graphdep::simulation_config_from_json(graphdep::load_json_file(sim_target));
      }
      graphdep::DependentSample sample =
          graphdep::run_generator(config.generator, sim_trials, sim_seed);
      if (!sim_dump.empty()) graphdep::write_sample_archive(sample, sim_dump);
      graphdep::SoundnessReport report = graphdep::bound_vs_empirical_report(
          sample.graph, sample.lipschitz, sample, config.bounds, config.statistic,
          config.t_grid);
      if (sim_format == "csv") {
        std::cout << graphdep::soundness_to_csv(report);
        std::cerr << "total violations: " << report.total_violations << "\n";
      } else {
        json payload = graphdep::soundness_to_json(report);
        payload["preset"] = config.name;
        payload["trials"] = sim_trials;
        payload["seed"] = sim_seed;
        emit(payload);
      }
    });
  });

  // rank-cover / multi-cover
  auto* rank_cover_cmd =
      app.add_subcommand("rank-cover", "closed-form ranking cover of the Rook's graph");
  rank_cover_cmd->add_option("--pos", lb_pos)->required();
  rank_cover_cmd->add_option("--neg", lb_neg)->required();
  rank_cover_cmd->callback([&] {
    exit_code = guarded(true, [&] {
      graphdep::RankingCover rc = graphdep::ranking_cover(lb_pos, lb_neg);
      graphdep::Graph host =
          graphdep::line_graph(graphdep::complete_bipartite_graph(lb_pos, lb_neg));
      graphdep::CoverCheck check = graphdep::validate_cover(host, rc.cover);
      if (!check.ok) {
        throw std::logic_error("constructed ranking cover failed validation: " +
                               check.message);
      }
      json payload = graphdep::cover_to_json(rc.cover, true);
      payload["swapped"] = rc.swapped;
      emit(payload);
    });
  });

  auto* multi_cover_cmd = app.add_subcommand("multi-cover", "closed-form multiclass cover");
  multi_cover_cmd->add_option("--m", lb_m)->required();
  multi_cover_cmd->add_option("--K", lb_K)->required();
  multi_cover_cmd->callback([&] {
    exit_code = guarded(true, [&] {
      graphdep::FractionalCover cover = graphdep::multiclass_cover(lb_m, lb_K);
      graphdep::Graph host = graphdep::multiclass_dependency_graph(lb_m, lb_K);
      graphdep::CoverCheck check = graphdep::validate_cover(host, cover);
      if (!check.ok) {
        throw std::logic_error("constructed multiclass cover failed validation: " +
                               check.message);
      }
      emit(graphdep::cover_to_json(cover, true));
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return exit_code;
}
