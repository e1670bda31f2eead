#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "albertson/coloring.hpp"
#include "albertson/graph.hpp"

namespace albertson {

/// Canonical form of a graph on n <= 8 vertices: the minimum, over all n!
/// vertex permutations, of the row-major adjacency bit string. Two graphs
/// have equal forms iff they are isomorphic.
struct CanonicalForm {
  int n = 0;
  std::uint64_t key = 0;  // rows packed big-endian, row 0 most significant
  Graph canonical_graph;  // the relabeled representative realizing the key

  friend bool operator==(const CanonicalForm &a, const CanonicalForm &b) {
    return a.n == b.n && a.key == b.key;
  }
  friend bool operator<(const CanonicalForm &a, const CanonicalForm &b) {
    return a.n != b.n ? a.n < b.n : a.key < b.key;
  }
};

CanonicalForm canonical_form(const Graph &g);

/// Number of vertex permutations fixing g as a labeled graph.
long long automorphism_count(const Graph &g);

/// One representative per isomorphism class on exactly n vertices,
/// canonically labeled, sorted by canonical key. n <= 8.
const std::vector<Graph> &enumerate_nonisomorphic(int n, int workers = 0);

/// All isomorphism classes on exactly n vertices that are r-critical.
std::vector<Graph> census_critical(int n, int r, int workers = 0);

struct CensusReport {
  int r = 0;
  int n_max = 0;
  // found[i] holds the graph6 strings of the r-critical classes on i vertices.
  std::vector<std::vector<std::string>> found;
  std::vector<std::vector<std::string>> expected;
  bool pass = false;
};

/// Exhaustively verifies that the only r-critical graphs on at most r+2
/// vertices are K_r and K_{r+2} \ C5. Feasible for 3 <= r <= 6.
CensusReport verify_lemma1(int r, int workers = 0);

struct ExcessAuditRow {
  std::string graph6;
  int n = 0;
  long long m = 0;
  long long excess = 0;
  bool complete = false;
  std::vector<std::string> checked;     // rules checked, with slack
  std::vector<std::string> violations;  // empty on pass
};

struct ExcessAuditReport {
  int r = 0;
  int n_max = 0;
  std::vector<ExcessAuditRow> rows;
  long long violation_count = 0;
  bool pass = false;
};

/// Checks Dirac / Gallai / Kostochka-Stiebitz excess bounds on every
/// enumerated r-critical graph with n <= n_max, plus Dirac's
/// characterization: non-complete with excess exactly r-3 implies n = 2r-1
/// (r >= 4).
ExcessAuditReport audit_excess_bounds(int r, int n_max = 8, int workers = 0);

}  // namespace albertson
