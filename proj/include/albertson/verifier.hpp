#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "albertson/bounds.hpp"
#include "albertson/coloring.hpp"
#include "albertson/graph.hpp"

namespace albertson {

enum class NCondKind { Equals, Tail };

/// Which n a case covers: a single order, or everything from lo upward
/// minus an explicit exclusion list.
struct NCondition {
  NCondKind kind = NCondKind::Equals;
  long long lo = 0;
  std::vector<long long> excluded;

  bool contains(long long n) const;
  std::string describe() const;
};

struct TailCertificate {
  Rule edge_rule;
  Rule cr_rule;
  LinearForm form;      // composed lower bound valid for every tail n
  Rational slope;       // recorded; must be >= 0
  long long start = 0;  // first n past the exhaustive window
  Rational value_at_start;
  long long min_int = 0;  // ceil(value_at_start), clamped at 0
};

/// One case of the analysis: a set of admissible orders n, the edge bound
/// used across the whole case, and the best crossing bound per n.
struct CaseRecord {
  NCondition n_condition;
  BoundValue edge_bound;      // evaluated at binding_n
  LinearForm edge_form;       // the same rule as a linear form in n
  Rule cr_rule;               // binding crossing rule at binding_n
  LinearForm bound_as_linear; // binding composed form at binding_n
  long long binding_n = 0;
  Rational min_value_exact;   // composed bound at binding_n, before rounding
  long long min_over_case = 0;
  std::optional<TailCertificate> tail;
  std::vector<Rule> paper_edge_rules;  // the rules the original derivation used here
  std::vector<Rule> paper_cr_rules;
};

struct AlbertsonReport {
  int r = 0;
  long long window = 0;
  long long n_min = 0;
  bool borodin_enabled = false;
  std::vector<std::string> hypotheses;
  long long target = 0;  // cr(K_r)
  std::vector<CaseRecord> cases;
  long long certified_min = 0;
  bool pass = false;
  std::vector<std::string> diagnostics;  // non-empty only on failure
};

/// Re-derives the case analysis showing that every r-critical graph other
/// than K_r has crossing number at least cr(K_r), for 7 <= r <= 12.
/// Orders up to `window` are checked one by one; beyond it a
/// nonnegative-slope linear certificate covers the tail.
AlbertsonReport verify_albertson(int r, long long window = 0 /* 0 -> 10r */);

struct LargeNReport {
  int r = 0;
  long long n_start = 0;  // 4r
  CaseRecord tail_case;
  long long target = 0;  // f(r), an upper bound for cr(K_r)
  std::vector<std::pair<std::string, Rational>> chain;  // named intermediate values
  bool pass = false;
  std::vector<std::string> diagnostics;
};

/// For r >= 13: an r-critical graph on n >= 4r vertices has crossing number
/// at least f(r) >= cr(K_r). r = 13 goes through the linear inequality with
/// m >= 6n; r >= 14 through the Crossing Lemma chain, evaluated exactly.
LargeNReport verify_large_n(int r);

/// Certificate that a host graph contains a subdivision of K_r: an
/// injective branch map plus internally disjoint connecting paths.
struct SubdivisionCertificate {
  int r = 0;
  std::vector<int> branch_vertices;  // branch_vertices[i] hosts K_r vertex i
  // paths keyed by K_r edge (i, j), i < j; each path runs from
  // branch_vertices[i] to branch_vertices[j] through host vertices.
  std::map<std::pair<int, int>, std::vector<int>> paths;
};

/// Inside K_{r+2} \ C5: two adjacent degree-(r-1) vertices become internal
/// vertices of the single subdivided edge, everything else maps straight.
SubdivisionCertificate build_kr_subdivision(int r);

struct SubdivisionCheck {
  bool ok = false;
  std::string reason;  // empty when ok
};

SubdivisionCheck check_subdivision(const Graph &g, const SubdivisionCertificate &cert);

struct GraphAlbertsonAudit {
  int chi = 0;
  long long n = 0, m = 0;
  BoundValue cr_lower;
  long long target = 0;
  bool target_proven = false;  // true when chi <= 12 (cr(K_chi) known exactly)
  bool contains_k_chi = false;
  bool certified = false;  // cr(g) >= cr(K_chi) established
  std::string note;
};

/// End-to-end check of one concrete graph: computes chi = r exactly, then
/// asks whether the crossing lower bounds already certify cr(g) >= cr(K_r).
GraphAlbertsonAudit audit_graph_albertson(const Graph &g, const SolverOptions &opts = {});

}  // namespace albertson
