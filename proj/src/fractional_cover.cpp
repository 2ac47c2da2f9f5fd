#include "graphdep/fractional_cover.hpp"

#include <algorithm>
#include <cmath>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>

#include "graphdep/simplex.hpp"

namespace graphdep {

double FractionalCover::total_weight() const {
  double total = 0.0;
  for (const auto& part : parts) total += part.weight;
  return total;
}

int default_independent_set_limit() {
  if (const char* env = std::getenv("GRAPHDEP_CHIF_LIMIT")) {
    int value = std::atoi(env);
    if (value > 0) return value;
  }
  return 24;
}

CoverCheck validate_cover(const Graph& g, const FractionalCover& cover, double tol) {
  int n = g.vertex_count();
  if (cover.host_n != n) {
    return {false, "cover host size " + std::to_string(cover.host_n) +
                       " does not match graph size " + std::to_string(n),
            -1, -1};
  }
  std::vector<double> coverage(n, 0.0);
  for (size_t k = 0; k < cover.parts.size(); ++k) {
    const auto& part = cover.parts[k];
    if (part.weight < -tol) {
      return {false, "part " + std::to_string(k) + " has negative weight", -1,
              static_cast<int>(k)};
    }
    for (int v : part.set) {
      if (v < 0 || v >= n) {
        return {false, "part " + std::to_string(k) + " contains out-of-range vertex " +
                           std::to_string(v),
                v, static_cast<int>(k)};
      }
    }
    if (!is_independent(g, part.set)) {
      return {false, "part " + std::to_string(k) + " is not an independent set", -1,
              static_cast<int>(k)};
    }
    for (int v : part.set) coverage[v] += part.weight;
  }
  for (int v = 0; v < n; ++v) {
    if (std::abs(coverage[v] - 1.0) > tol) {
      return {false, "vertex " + std::to_string(v) + " has coverage " +
                         std::to_string(coverage[v]) + ", expected 1",
              v, -1};
    }
  }
  return {true, "ok", -1, -1};
}

namespace {

using Mask = std::uint32_t;

void check_enumeration_limit(int n, int exact_limit) {
  if (n > exact_limit || n > 32) {
    if (n > 32) {
      throw SizeLimitError("independent-set enumeration uses 32-bit masks; n <= 32 required (got " +
                           std::to_string(n) + ")");
    }
    throw SizeLimitError("independent-set enumeration limited to n <= " +
                         std::to_string(exact_limit) + " vertices (got " +
                         std::to_string(n) + ")");
  }
}

VertexSet mask_to_set(Mask mask) {
  VertexSet set;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1u) set.push_back(v);
  }
  return set;
}

// Tomita-style Bron-Kerbosch with pivoting over bitmasks.
void bron_kerbosch(Mask r, Mask p, Mask x, const std::vector<Mask>& nb,
                   std::vector<Mask>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  Mask px = p | x;
  int pivot = -1, best = -1;
  for (Mask m = px; m != 0; m &= m - 1) {
    int u = std::countr_zero(m);
    int covered = std::popcount(p & nb[u]);
    if (covered > best) {
      best = covered;
      pivot = u;
    }
  }
  Mask candidates = p & ~nb[pivot];
  for (Mask m = candidates; m != 0; m &= m - 1) {
    int v = std::countr_zero(m);
    Mask bit = Mask{1} << v;
    bron_kerbosch(r | bit, p & nb[v], x & nb[v], nb, out);
    p &= ~bit;
    x |= bit;
  }
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Mask> nb(n, 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= Mask{1} << v;
    nb[v] |= Mask{1} << u;
  }
  return nb;
}

}  // namespace

std::vector<VertexSet> enumerate_independent_sets(const Graph& g, bool maximal_only,
                                                  int exact_limit) {
  int n = g.vertex_count();
  check_enumeration_limit(n, exact_limit);
  std::vector<Mask> nb = neighbor_masks(g);

  std::vector<VertexSet> sets;
  if (maximal_only) {
    // Maximal independent sets of g = maximal cliques of the complement.
    std::vector<Mask> comp_nb(n, 0);
    Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
    for (int v = 0; v < n; ++v) {
      comp_nb[v] = all & ~nb[v] & ~(Mask{1} << v);
    }
    std::vector<Mask> found;
    bron_kerbosch(0, all, 0, comp_nb, found);
    for (Mask m : found) sets.push_back(mask_to_set(m));
  } else {
    // Depth-first in vertex order yields lexicographic output directly.
    std::vector<int> current;
    auto recurse = [&](auto&& self, int start, Mask blocked) -> void {
      for (int v = start; v < n; ++v) {
        if (blocked & (Mask{1} << v)) continue;
        current.push_back(v);
        sets.emplace_back(current);
        self(self, v + 1, blocked | nb[v]);
        current.pop_back();
      }
    };
    recurse(recurse, 0, 0);
    return sets;  // already lexicographic
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

namespace {

// Moves excess coverage from over-covered vertices into trimmed copies of the
// covering parts. Total weight is preserved: weight shifted off part I at
// vertex v lands on part I \ {v}. At an LP optimum every positive-weight part
// has at least one exactly-covered vertex, so the trimmed set is never empty
// unless its weight contribution is already zero.
FractionalCover settle_to_equality(const Graph& g, std::vector<VertexSet> sets,
                                   std::vector<double> weights) {
  int n = g.vertex_count();
  std::map<VertexSet, double> pool;
  for (size_t k = 0; k < sets.size(); ++k) {
    if (weights[k] > 1e-12) pool[sets[k]] += weights[k];
  }
  for (int v = 0; v < n; ++v) {
    double coverage = 0.0;
    for (const auto& [set, w] : pool) {
      if (std::binary_search(set.begin(), set.end(), v)) coverage += w;
    }
    double excess = coverage - 1.0;
    if (excess <= 1e-12) continue;
    // Deterministic part order: std::map iterates sets lexicographically.
    std::vector<VertexSet> containing;
    for (const auto& [set, w] : pool) {
      if (std::binary_search(set.begin(), set.end(), v)) containing.push_back(set);
    }
    for (const auto& set : containing) {
      if (excess <= 1e-12) break;
      double moved = std::min(excess, pool[set]);
      VertexSet trimmed = set;
      trimmed.erase(std::find(trimmed.begin(), trimmed.end(), v));
      pool[set] -= moved;
      if (!trimmed.empty()) pool[trimmed] += moved;
      excess -= moved;
    }
  }
  FractionalCover cover;
  cover.host_n = n;
  for (const auto& [set, w] : pool) {
    if (w > 1e-12) cover.parts.push_back({set, w});
  }
  return cover;
}

}  // namespace

ChiF chi_f_exact(const Graph& g, int exact_limit) {
  int n = g.vertex_count();
  check_enumeration_limit(n, exact_limit);
  if (n == 0) return {0.0, {{}, 0}, true};

  std::vector<VertexSet> sets = enumerate_independent_sets(g, true, exact_limit);
  int ns = static_cast<int>(sets.size());

  // min sum w_I  s.t.  for every vertex v: sum_{I containing v} w_I >= 1.
  std::vector<std::vector<double>> a(n, std::vector<double>(ns, 0.0));
  for (int k = 0; k < ns; ++k) {
    for (int v : sets[k]) a[v][k] = 1.0;
  }
  LpResult lp = solve_covering_lp(a, std::vector<double>(n, 1.0),
                                  std::vector<double>(ns, 1.0));
  if (!lp.optimal) throw std::runtime_error("chi_f LP unexpectedly infeasible");

  ChiF result;
  result.exact = true;
  result.certificate = settle_to_equality(g, std::move(sets), lp.solution);
  result.value = result.certificate.total_weight();
  return result;
}

ChiF chi_f_upper(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return {0.0, {{}, 0}, false};

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int u, int v) { return g.degree(u) > g.degree(v); });

  std::vector<int> color(n, -1);
  int colors_used = 0;
  for (int v : order) {
    std::vector<bool> taken(colors_used + 1, false);
    for (int w : g.neighbors(v)) {
      if (color[w] >= 0) taken[std::min(color[w], colors_used)] = true;
    }
    int c = 0;
    while (c < colors_used && taken[c]) ++c;
    color[v] = c;
    colors_used = std::max(colors_used, c + 1);
  }

  FractionalCover cover;
  cover.host_n = n;
  cover.parts.resize(colors_used);
  for (int c = 0; c < colors_used; ++c) cover.parts[c].weight = 1.0;
  for (int v = 0; v < n; ++v) cover.parts[color[v]].set.push_back(v);

  return {static_cast<double>(colors_used), std::move(cover), false};
}

namespace {

// Cyclic pairing permutation, 1-based as commonly written: sigma_{k,m}(i) is
// (k+i-1) mod m with remainder 0 standing for m.
int shift_permutation(int k, int i, int m) {
  int r = (k + i - 1) % m;
  return r == 0 ? m : r;
}

}  // namespace

RankingCover ranking_cover(int m_plus, int m_minus) {
  if (m_plus < 1 || m_minus < 1) {
    throw ValidationError("ranking cover needs at least one instance per class");
  }
  RankingCover result;
  result.swapped = m_plus > m_minus;
  int small = std::min(m_plus, m_minus);
  int large = std::max(m_plus, m_minus);

  FractionalCover cover;
  cover.host_n = m_plus * m_minus;
  for (int k = 1; k <= large; ++k) {
    CoverPart part;
    part.weight = 1.0;
    for (int i = 1; i <= small; ++i) {
      int j = shift_permutation(k, i, large);
      int pos = result.swapped ? j : i;  // positive-side index, 1-based
      int neg = result.swapped ? i : j;
      part.set.push_back((pos - 1) * m_minus + (neg - 1));
    }
    std::sort(part.set.begin(), part.set.end());
    cover.parts.push_back(std::move(part));
  }
  result.cover = std::move(cover);
  return result;
}

Graph multiclass_dependency_graph(int m, int k_classes) {
  if (m < 1) throw ValidationError("multiclass cover needs at least one example");
  if (k_classes < 2) throw ValidationError("multiclass cover needs at least 2 classes");
  int block = k_classes - 1;
  std::vector<std::pair<int, int>> edges;
  for (int e = 0; e < m; ++e) {
    for (int i = 0; i < block; ++i)
      for (int j = i + 1; j < block; ++j)
        edges.emplace_back(e * block + i, e * block + j);
  }
  return Graph(m * block, std::move(edges));
}

FractionalCover multiclass_cover(int m, int k_classes) {
  if (m < 1) throw ValidationError("multiclass cover needs at least one example");
  if (k_classes < 2) throw ValidationError("multiclass cover needs at least 2 classes");
  int block = k_classes - 1;
  FractionalCover cover;
  cover.host_n = m * block;
  for (int k = 0; k < block; ++k) {
    CoverPart part;
    part.weight = 1.0;
    for (int e = 0; e < m; ++e) part.set.push_back(e * block + k);
    cover.parts.push_back(std::move(part));
  }
  return cover;
}

SumDecomposition decompose_sum(const std::vector<double>& values, const Graph& g,
                               const FractionalCover& cover) {
  if (static_cast<int>(values.size()) != g.vertex_count()) {
    throw ValidationError("decompose_sum: one value per vertex required");
  }
  CoverCheck check = validate_cover(g, cover);
  if (!check.ok) throw ValidationError("decompose_sum: invalid cover: " + check.message);

  SumDecomposition out;
  out.direct = std::accumulate(values.begin(), values.end(), 0.0);
  for (const auto& part : cover.parts) {
    double inner = 0.0;
    for (int v : part.set) inner += values[v];
    out.part_sums.push_back(inner);
    out.recombined += part.weight * inner;
  }
  double scale = std::max(1.0, std::abs(out.direct));
  if (std::abs(out.recombined - out.direct) > 1e-9 * scale) {
    throw ValidationError("decompose_sum: recombination mismatch beyond tolerance");
  }
  return out;
}

}  // namespace graphdep
