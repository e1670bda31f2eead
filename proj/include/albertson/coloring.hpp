#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "albertson/graph.hpp"

namespace albertson {

struct SolverOptions {
  // Branch-node budget for one top-level query. Exhausting it raises
  // BudgetExceeded; the solver never degrades to a heuristic answer.
  std::uint64_t node_budget = 100'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact k-colorability via DSATUR-style branch and bound with a greedy
/// clique seed. Deterministic: saturation-degree branching, ties by
/// lowest vertex label. Fills *witness with a proper coloring when true.
bool is_k_colorable(const Graph &g, int k, std::vector<int> *witness = nullptr,
                    const SolverOptions &opts = {});

/// Least k such that g is k-colorable (0 for the empty graph).
int chromatic_number(const Graph &g, const SolverOptions &opts = {});

/// chi(g) == r, and chi drops below r after deleting any single vertex or
/// any single edge. Both deletion families are checked: edge deletions
/// alone would accept K_r plus an isolated vertex.
bool is_r_critical(const Graph &g, int r, const SolverOptions &opts = {});

/// 2m - (r-1)n; may be negative for non-critical inputs.
long long excess(const Graph &g, int r);

struct GraphAudit {
  int chi = 0;
  int r = 0;
  bool critical = false;
  long long excess = 0;
  std::vector<int> witness_coloring;  // proper, uses exactly chi colors
};

GraphAudit audit(const Graph &g, int r, const SolverOptions &opts = {});

bool is_proper_coloring(const Graph &g, const std::vector<int> &colors);

/// Size of the clique found by greedy extension (a chi lower bound).
int greedy_clique_lower_bound(const Graph &g);

/// Exact clique number (Bron-Kerbosch with pivoting); fine for n <= 64
/// at the scales this library handles.
int clique_number(const Graph &g);

}  // namespace albertson
