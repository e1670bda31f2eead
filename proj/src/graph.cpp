#include "albertson/graph.hpp"

#include <bit>
#include <stdexcept>

namespace albertson {

namespace {

void check_order(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("vertex count " + std::to_string(n) + " exceeds cap " +
                                std::to_string(Graph::kMaxVertices));
}

}  // namespace

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(n_));
}

Graph Graph::empty(int n) {
  check_order(n);
  Graph g;
  g.n_ = n;
  return g;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>> &edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (!((g.rows_[u] >> v) & 1u)) {
      g.rows_[u] |= std::uint64_t(1) << v;
      g.rows_[v] |= std::uint64_t(1) << u;
      ++g.m_;
    }
  }
  return g;
}

Graph Graph::from_rows(int n, const std::array<std::uint64_t, kMaxVertices> &rows) {
  check_order(n);
  Graph g;
  g.n_ = n;
  const std::uint64_t mask = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  long long bits = 0;
  for (int i = 0; i < n; ++i) {
    if (rows[i] & ~mask) throw std::invalid_argument("adjacency row exceeds vertex range");
    if ((rows[i] >> i) & 1u) throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    g.rows_[i] = rows[i];
    bits += std::popcount(rows[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (((rows[i] >> j) & 1u) != ((rows[j] >> i) & 1u))
        throw std::invalid_argument("adjacency not symmetric");
  g.m_ = bits / 2;
  return g;
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(rows_[v]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = rows_[u] >> (u + 1);
    while (higher) {
      int v = u + 1 + std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph make_complete(int n) {
  check_order(n);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  check_order(n);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complement(const Graph &g) {
  const int n = g.vertex_count();
  std::array<std::uint64_t, Graph::kMaxVertices> rows{};
  const std::uint64_t mask = n == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << n) - 1);
  for (int i = 0; i < n; ++i)
    rows[i] = (~g.row(i) & mask) & ~(std::uint64_t(1) << i);
  return Graph::from_rows(n, rows);
}

Graph make_kr2_minus_c5(int r) {
  if (r < 3) throw std::invalid_argument("K_{r+2} \\ C5 needs r >= 3");
  Graph g = make_complete(r + 2);
  for (int i = 0; i < 5; ++i) g = delete_edge(g, i, (i + 1) % 5);
  return g;
}

Graph lexicographic_product(const Graph &g, const Graph &h) {
  const int ng = g.vertex_count(), nh = h.vertex_count();
  const long long n = static_cast<long long>(ng) * nh;
  if (n > Graph::kMaxVertices)
    throw std::invalid_argument("lexicographic product exceeds vertex cap");
  std::vector<std::pair<int, int>> edges;
  auto id = [nh](int u, int x) { return u * nh + x; };
  for (int u = 0; u < ng; ++u)
    for (int x = 0; x < nh; ++x)
      for (int v = u; v < ng; ++v)
        for (int y = (v == u ? x + 1 : 0); y < nh; ++y) {
          if (u != v ? g.adjacent(u, v) : h.adjacent(x, y))
            edges.emplace_back(id(u, x), id(v, y));
        }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph delete_vertex(const Graph &g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw std::out_of_range("delete_vertex: no such vertex");
  std::vector<std::pair<int, int>> edges;
  auto relabel = [v](int w) { return w > v ? w - 1 : w; };
  for (auto [a, b] : g.edges())
    if (a != v && b != v) edges.emplace_back(relabel(a), relabel(b));
  return Graph::from_edges(n - 1, edges);
}

Graph delete_edge(const Graph &g, int u, int v) {
  if (!g.adjacent(u, v)) throw std::invalid_argument("delete_edge: edge not present");
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges())
    if (!((a == u && b == v) || (a == v && b == u))) edges.emplace_back(a, b);
  return Graph::from_edges(g.vertex_count(), edges);
}

// graph6: header byte n+63 (n <= 62), then the upper triangle in column
// order, 6 bits per byte, each byte offset by 63.
Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw std::invalid_argument("graph6: empty line");
  const unsigned char header = static_cast<unsigned char>(line[0]);
  if (header == 126) throw std::invalid_argument("graph6: multi-byte headers (n > 62) not supported");
  if (header < 63 || header > 125) throw std::invalid_argument("graph6: header byte out of range");
  const int n = header - 63;
  const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  const long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(line.size()) != 1 + nbytes)
    throw std::invalid_argument("graph6: wrong body length for n=" + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (long long byte = 0; byte < nbytes; ++byte) {
    const unsigned char c = static_cast<unsigned char>(line[1 + byte]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: body byte out of range");
    const unsigned val = c - 63;
    for (int k = 5; k >= 0; --k, ++bit) {
      const bool set = (val >> k) & 1u;
      if (bit >= nbits) {
        if (set) throw std::invalid_argument("graph6: nonzero trailing bits");
        continue;
      }
      if (set) {
        // Column order: bit index runs over (0,1), (0,2), (1,2), (0,3), ...
        long long t = bit;
        int j = 1;
        while (t >= j) t -= j, ++j;
        edges.emplace_back(static_cast<int>(t), j);
      }
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph &g) {
  const int n = g.vertex_count();
  if (n > 62) throw std::invalid_argument("graph6: n > 62 not supported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  const long long nbits = static_cast<long long>(n) * (n - 1) / 2;
  unsigned acc = 0;
  int filled = 0;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) {
    acc <<= (6 - filled);
    out.push_back(static_cast<char>(acc + 63));
  }
  (void)nbits;
  return out;
}

}  // namespace albertson
