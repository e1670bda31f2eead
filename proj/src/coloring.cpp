#include "albertson/coloring.hpp"

#include <algorithm>
#include <bit>

namespace albertson {

namespace {

struct Budget {
  std::uint64_t limit;
  std::uint64_t used = 0;
  void tick() {
    if (++used > limit) throw BudgetExceeded("coloring node budget exhausted");
  }
};

// Branch and bound over partial colorings. colors[v] in [0, k) or -1.
// color_mask[v] = colors already present in v's neighborhood.
struct Search {
  const Graph &g;
  int n;
  int k;
  Budget &budget;
  std::vector<int> colors;
  std::vector<std::uint64_t> neighbor_colors;
  int colored = 0;
  int max_used = 0;  // colors 0..max_used-1 are in use

  Search(const Graph &graph, int kk, Budget &b)
      : g(graph), n(graph.vertex_count()), k(kk), budget(b), colors(n, -1), neighbor_colors(n, 0) {}

  int pick_vertex() const {
    int best = -1, best_sat = -1;
    for (int v = 0; v < n; ++v) {
      if (colors[v] >= 0) continue;
      int sat = std::popcount(neighbor_colors[v]);
      if (sat > best_sat) best_sat = sat, best = v;
    }
    return best;
  }

  bool assign(int v, int c) {
    colors[v] = c;
    ++colored;
    std::uint64_t nb = g.row(v);
    while (nb) {
      int u = std::countr_zero(nb);
      neighbor_colors[u] |= std::uint64_t(1) << c;
      nb &= nb - 1;
    }
    return true;
  }

  void unassign(int v, int c) {
    colors[v] = -1;
    --colored;
    std::uint64_t nb = g.row(v);
    while (nb) {
      int u = std::countr_zero(nb);
      // Recompute bit: another neighbor of u may still carry color c.
      bool still = false;
      std::uint64_t un = g.row(u);
      while (un) {
        int w = std::countr_zero(un);
        if (colors[w] == c) {
          still = true;
          break;
        }
        un &= un - 1;
      }
      if (!still) neighbor_colors[u] &= ~(std::uint64_t(1) << c);
      nb &= nb - 1;
    }
  }

  bool solve() {
    if (colored == n) return true;
    budget.tick();
    const int v = pick_vertex();
    const int limit = std::min(k, max_used + 1);  // at most one brand-new color
    for (int c = 0; c < limit; ++c) {
      if ((neighbor_colors[v] >> c) & 1u) continue;
      const int prev_max = max_used;
      max_used = std::max(max_used, c + 1);
      assign(v, c);
      if (solve()) return true;
      unassign(v, c);
      max_used = prev_max;
    }
    return false;
  }
};

bool k_colorable_impl(const Graph &g, int k, std::vector<int> *witness, Budget &budget) {
  const int n = g.vertex_count();
  if (k < 0) throw std::invalid_argument("color count must be nonnegative");
  if (n == 0) {
    if (witness) witness->clear();
    return true;
  }
  if (k == 0) return false;
  if (greedy_clique_lower_bound(g) > k) return false;
  Search s(g, k, budget);
  // Seed: pre-color a greedy clique with distinct colors (sound symmetry
  // breaking: any proper coloring can be renamed to match).
  std::vector<int> clique;
  {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::uint64_t common = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
    for (int v : order) {
      if ((common >> v) & 1u) {
        clique.push_back(v);
        common &= g.row(v);
      }
    }
  }
  if (static_cast<int>(clique.size()) > k) return false;
  for (std::size_t i = 0; i < clique.size(); ++i) {
    s.assign(clique[i], static_cast<int>(i));
    s.max_used = static_cast<int>(i) + 1;
  }
  if (!s.solve()) return false;
  if (witness) *witness = s.colors;
  return true;
}

}  // namespace

bool is_k_colorable(const Graph &g, int k, std::vector<int> *witness, const SolverOptions &opts) {
  Budget budget{opts.node_budget};
  return k_colorable_impl(g, k, witness, budget);
}

int chromatic_number(const Graph &g, const SolverOptions &opts) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  Budget budget{opts.node_budget};
  int lo = greedy_clique_lower_bound(g);
  for (int k = lo; k <= n; ++k) {
    if (k_colorable_impl(g, k, nullptr, budget)) return k;
  }
  return n;  // unreachable: every graph is n-colorable
}

bool is_r_critical(const Graph &g, int r, const SolverOptions &opts) {
  if (r < 1) throw std::invalid_argument("criticality level must be >= 1");
  const int n = g.vertex_count();
  Budget budget{opts.node_budget};
  // Cheap necessary condition: every vertex of an r-critical graph has
  // degree >= r-1.
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < r - 1) return false;
  if (k_colorable_impl(g, r - 1, nullptr, budget)) return false;  // chi < r
  if (!k_colorable_impl(g, r, nullptr, budget)) return false;     // chi > r
  for (int v = 0; v < n; ++v)
    if (!k_colorable_impl(delete_vertex(g, v), r - 1, nullptr, budget)) return false;
  for (auto [u, v] : g.edges())
    if (!k_colorable_impl(delete_edge(g, u, v), r - 1, nullptr, budget)) return false;
  return true;
}

long long excess(const Graph &g, int r) {
  return 2 * g.edge_count() - static_cast<long long>(r - 1) * g.vertex_count();
}

GraphAudit audit(const Graph &g, int r, const SolverOptions &opts) {
  GraphAudit a;
  a.r = r;
  a.chi = chromatic_number(g, opts);
  a.critical = is_r_critical(g, r, opts);
  a.excess = excess(g, r);
  if (g.vertex_count() > 0) is_k_colorable(g, a.chi, &a.witness_coloring, opts);
  return a;
}

bool is_proper_coloring(const Graph &g, const std::vector<int> &colors) {
  if (static_cast<int>(colors.size()) != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (colors[u] == colors[v]) return false;
  return true;
}

int greedy_clique_lower_bound(const Graph &g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::uint64_t common = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  int size = 0;
  for (int v : order) {
    if ((common >> v) & 1u) {
      ++size;
      common &= g.row(v);
    }
  }
  return size;
}

namespace {

void bron_kerbosch(const Graph &g, std::uint64_t r, std::uint64_t p, std::uint64_t x, int &best) {
  if (p == 0 && x == 0) {
    best = std::max(best, std::popcount(r));
    return;
  }
  if (std::popcount(r) + std::popcount(p) <= best) return;
  // Pivot: vertex of p|x with most neighbors in p.
  int pivot = -1, pivot_deg = -1;
  std::uint64_t px = p | x;
  while (px) {
    int u = std::countr_zero(px);
    int d = std::popcount(p & g.row(u));
    if (d > pivot_deg) pivot_deg = d, pivot = u;
    px &= px - 1;
  }
  std::uint64_t candidates = p & ~g.row(pivot);
  while (candidates) {
    int v = std::countr_zero(candidates);
    const std::uint64_t bit = std::uint64_t(1) << v;
    bron_kerbosch(g, r | bit, p & g.row(v), x & g.row(v), best);
    p &= ~bit;
    x |= bit;
    candidates &= candidates - 1;
  }
}

}  // namespace

int clique_number(const Graph &g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int best = 0;
  std::uint64_t all = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  bron_kerbosch(g, 0, all, 0, best);
  return best;
}

}  // namespace albertson
