#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace albertson {

/// Simple undirected graph on labeled vertices 0..n-1.
///
/// Adjacency is one packed 64-bit row per vertex, so neighborhood
/// operations are single word ops. Values are immutable once built;
/// every operation below returns a fresh graph.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  static Graph empty(int n);
  static Graph from_edges(int n, const std::vector<std::pair<int, int>> &edges);
  static Graph from_rows(int n, const std::array<std::uint64_t, kMaxVertices> &rows);

  int vertex_count() const { return n_; }
  long long edge_count() const { return m_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (rows_[u] >> v) & 1u;
  }
  std::uint64_t row(int v) const {
    check_vertex(v);
    return rows_[v];
  }
  int degree(int v) const;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph &other) const {
    if (n_ != other.n_) return false;
    for (int i = 0; i < n_; ++i)
      if (rows_[i] != other.rows_[i]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  long long m_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

Graph make_complete(int n);
Graph make_cycle(int n);
Graph complement(const Graph &g);

/// K_{r+2} minus the edges of a 5-cycle on vertices 0..4.
/// The five cycle vertices end up with degree r-1, the rest with r+1.
Graph make_kr2_minus_c5(int r);

/// Vertex set is g x h ordered (u, x) -> u*|V(h)| + x; (u,x) ~ (v,y) iff
/// u ~ v in g, or u = v and x ~ y in h.
Graph lexicographic_product(const Graph &g, const Graph &h);

/// Deletes v and shifts higher labels down by one (order-preserving).
Graph delete_vertex(const Graph &g, int v);
Graph delete_edge(const Graph &g, int u, int v);

/// graph6 line format, single-byte header only (n <= 62).
Graph parse_graph6(std::string_view line);
std::string to_graph6(const Graph &g);

}  // namespace albertson
