#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "graphdep/tree_partition.hpp"
#include "test_util.hpp"

using namespace graphdep;

namespace {

Graph figure_graph() {
  return make_graph(6, {{0, 1}, {1, 3}, {3, 5}, {4, 5}, {3, 4}, {2, 4}, {1, 2}});
}

std::vector<VertexSet> singletons(int n) {
  std::vector<VertexSet> bags;
  for (int v = 0; v < n; ++v) bags.push_back({v});
  return bags;
}

}  // namespace

TEST_CASE("validate_tree_partition") {
  Graph forest = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  TreePartition tp = validate_tree_partition(forest, singletons(5));
  CHECK(tp.quotient.edges() == forest.edges());

  TreePartition fig = validate_tree_partition(figure_graph(), {{0, 1}, {2, 3}, {4, 5}});
  CHECK(fig.quotient.edge_count() == 2);
  CHECK(fig.quotient.has_edge(0, 1));
  CHECK(fig.quotient.has_edge(1, 2));

  CHECK_THROWS_AS(validate_tree_partition(cycle_graph(4), singletons(4)),
                  ValidationError);
  CHECK_THROWS_AS(validate_tree_partition(forest, {{0, 1}, {1, 2}, {3, 4}}),
                  ValidationError);  // overlap
  CHECK_THROWS_AS(validate_tree_partition(forest, {{0, 1}, {3, 4}}),
                  ValidationError);  // vertex 2 missing
  CHECK_THROWS_AS(validate_tree_partition(forest, {{0, 1, 2}, {}, {3, 4}}),
                  ValidationError);  // empty bag
}

TEST_CASE("partition_cost") {
  // C6 pairing from the cycle construction: bags {0},{1,5},{2,4},{3}
  TreePartition c6 = validate_tree_partition(cycle_graph(6),
                                             {{0}, {1, 5}, {2, 4}, {3}});
  CHECK(partition_cost(c6).lambda_value == doctest::Approx(35.0));

  Graph edge = make_graph(2, {{0, 1}});
  LipschitzVector c{1.0, 2.0};
  TreePartition split = validate_tree_partition(edge, {{0}, {1}});
  CHECK(partition_cost(split, c).weighted_value.value() == doctest::Approx(10.0));
  TreePartition merged = validate_tree_partition(edge, {{0, 1}});
  CHECK(partition_cost(merged, c).weighted_value.value() == doctest::Approx(9.0));

  CHECK(tree_partition_width(split) == 1);
  CHECK(tree_partition_width(merged) == 2);
  CHECK(tree_partition_width(c6) == 2);

  LipschitzVector wrong{1.0};
  CHECK_THROWS_AS(partition_cost(merged, wrong), ValidationError);
}

TEST_CASE("uniform weighted cost coincides with lambda at c = 1") {
  testutil::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = testutil::random_graph(7, 0.3, rng);
    ComplexityResult h = forest_complexity_heuristic(g);
    PartitionCost cost =
        partition_cost(h.partition, uniform_lipschitz(g.vertex_count(), 1.0));
    CHECK(cost.weighted_value.value() == doctest::Approx(cost.lambda_value));
  }
}

TEST_CASE("partition_cost is invariant under bag reordering") {
  Graph g = figure_graph();
  std::vector<VertexSet> bags{{0, 1}, {2, 3}, {4, 5}};
  double reference = partition_cost(validate_tree_partition(g, bags)).lambda_value;
  std::vector<VertexSet> shuffled{{4, 5}, {0, 1}, {2, 3}};
  CHECK(partition_cost(validate_tree_partition(g, shuffled)).lambda_value ==
        doctest::Approx(reference));
}

TEST_CASE("exact forest complexity on reference graphs") {
  CHECK(forest_complexity_exact(empty_graph(1)).cost.lambda_value == doctest::Approx(1));
  CHECK(forest_complexity_exact(empty_graph(4)).cost.lambda_value == doctest::Approx(4));
  CHECK(forest_complexity_exact(cycle_graph(4)).cost.lambda_value ==
        doctest::Approx(16.0));

  Graph edge = make_graph(2, {{0, 1}});
  LipschitzVector c{1.0, 2.0};
  ComplexityResult weighted = forest_complexity_exact(edge, c);
  CHECK(weighted.cost.weighted_value.value() == doctest::Approx(9.0));
  CHECK(weighted.partition.bags.size() == 1);  // one-bag partition wins

  CHECK_THROWS_AS(forest_complexity_exact(empty_graph(11)), SizeLimitError);
}

TEST_CASE("exact search agrees with the brute-force oracle") {
  testutil::Rng rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + rng.below(4);  // up to 6
    Graph g = testutil::random_graph(n, 0.45, rng);
    CHECK(forest_complexity_exact(g).cost.lambda_value ==
          doctest::Approx(testutil::oracle_forest_complexity(g)).epsilon(1e-9));
    LipschitzVector c = testutil::random_lipschitz(n, rng);
    CHECK(forest_complexity_exact(g, c).cost.weighted_value.value() ==
          doctest::Approx(testutil::oracle_forest_complexity(g, c)).epsilon(1e-9));
  }
}

TEST_CASE("heuristic reproduces the closed-form construction values") {
  for (int n = 2; n <= 12; ++n) {
    ComplexityResult path = forest_complexity_heuristic(path_graph(n));
    CHECK(path.cost.lambda_value == doctest::Approx(4.0 * n - 3.0));
    CHECK(path.method == "forest-identity");
  }
  CHECK(forest_complexity_heuristic(cycle_graph(5)).cost.lambda_value ==
        doctest::Approx(26.0));
  CHECK(forest_complexity_heuristic(cycle_graph(6)).cost.lambda_value ==
        doctest::Approx(35.0));
  CHECK(forest_complexity_heuristic(grid_graph(4)).cost.lambda_value ==
        doctest::Approx(167.0));

  ComplexityResult chain = forest_complexity_heuristic(m_dependent_chain(6, 2));
  CHECK(chain.cost.lambda_value == doctest::Approx(36.0));
  CHECK(chain.method == "mdependent-blocks");
  CHECK(chain.cost.lambda_value <= 4.0 * 2 * 6);  // <= 4 m n

  // forests: identity bags give 4n - 3k at unit coefficients
  testutil::Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Graph f = testutil::random_forest(3 + rng.below(8), 0.6, rng);
    int k = static_cast<int>(connected_components(f).size());
    CHECK(forest_complexity_heuristic(f).cost.lambda_value ==
          doctest::Approx(4.0 * f.vertex_count() - 3.0 * k));
  }
}

TEST_CASE("heuristic output is always a valid partition dominating the exact value") {
  testutil::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + rng.below(7);  // up to 8
    Graph g = testutil::random_graph(n, 0.35, rng);
    ComplexityResult h = forest_complexity_heuristic(g);
    ComplexityResult e = forest_complexity_exact(g);
    CHECK(e.cost.lambda_value <= h.cost.lambda_value + 1e-9);

    // remark bound: cost <= (|V(F)| + 3 |E(F)|) * width^2
    double width = h.cost.width;
    double vf = static_cast<double>(h.partition.quotient.vertex_count());
    double ef = static_cast<double>(h.partition.quotient.edge_count());
    CHECK(h.cost.lambda_value <= (vf + 3.0 * ef) * width * width + 1e-9);

    // the BFS fallback never loses to the one-bag partition
    if (h.method == "bfs-layers") {
      CHECK(h.cost.lambda_value <= double(n) * n + 1e-9);
    }
  }
}

TEST_CASE("exact ties break toward fewer bags then lexicographic bags") {
  // On the empty 3-vertex graph the unique optimum is singletons.
  ComplexityResult r = forest_complexity_exact(empty_graph(3));
  REQUIRE(r.partition.bags.size() == 3);
  CHECK(r.partition.bags[0] == VertexSet{0});

  // P3 ties at cost 9 between singletons and the single bag; fewer bags win.
  ComplexityResult p3 = forest_complexity_exact(path_graph(3));
  CHECK(p3.cost.lambda_value == doctest::Approx(9.0));
  REQUIRE(p3.partition.bags.size() == 1);
  CHECK(p3.partition.bags[0] == VertexSet{0, 1, 2});

  // Two runs produce identical certificates.
  Graph g = cycle_graph(6);
  ComplexityResult a = forest_complexity_exact(g);
  ComplexityResult b = forest_complexity_exact(g);
  CHECK(a.partition.bags == b.partition.bags);
}
