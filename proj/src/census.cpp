#include "albertson/census.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace albertson {

namespace {

constexpr int kEnumCap = 8;

using Rows8 = std::array<std::uint8_t, 8>;

Rows8 rows8_of(const Graph &g) {
  Rows8 rows{};
  for (int i = 0; i < g.vertex_count(); ++i) rows[i] = static_cast<std::uint8_t>(g.row(i));
  return rows;
}

Graph graph_of_rows8(int n, const Rows8 &rows) {
  std::array<std::uint64_t, Graph::kMaxVertices> wide{};
  for (int i = 0; i < n; ++i) wide[i] = rows[i];
  return Graph::from_rows(n, wide);
}

// All n! permutations plus, per permutation, a 256-entry table applying it
// to a packed neighborhood byte. ~10 MB at n = 8, built once.
struct PermTables {
  std::vector<Rows8> perms;
  std::vector<std::array<std::uint8_t, 256>> bytemap;
};

const PermTables &perm_tables(int n) {
  static std::array<PermTables, kEnumCap + 1> cache;
  static std::array<std::once_flag, kEnumCap + 1> flags;
  std::call_once(flags[n], [n] {
    PermTables &t = cache[n];
    Rows8 p{};
    for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(i);
    do {
      t.perms.push_back(p);
      std::array<std::uint8_t, 256> map{};
      for (int mask = 0; mask < 256; ++mask) {
        std::uint8_t out = 0;
        for (int j = 0; j < n; ++j)
          if ((mask >> p[j]) & 1) out |= std::uint8_t(1) << j;
        map[mask] = out;
      }
      t.bytemap.push_back(map);
    } while (std::next_permutation(p.begin(), p.begin() + n));
  });
  return cache[n];
}

Rows8 canonical_rows(int n, const Rows8 &rows) {
  if (n <= 1) return rows;
  const PermTables &t = perm_tables(n);
  Rows8 best = rows;  // identity is first in next_permutation order
  Rows8 cand{};
  for (std::size_t pi = 1; pi < t.perms.size(); ++pi) {
    const Rows8 &p = t.perms[pi];
    const auto &map = t.bytemap[pi];
    bool better = false;
    int i = 0;
    for (; i < n; ++i) {
      const std::uint8_t b = map[rows[p[i]]];
      cand[i] = b;
      if (!better) {
        if (b > best[i]) break;
        if (b < best[i]) better = true;
      }
    }
    if (i == n && better) best = cand;
  }
  return best;
}

std::uint64_t pack_key(const Rows8 &rows) {
  std::uint64_t key = 0;
  for (int i = 0; i < 8; ++i) key = (key << 8) | rows[i];
  return key;
}

void check_enum_order(int n) {
  if (n < 0 || n > kEnumCap)
    throw std::invalid_argument("census enumeration capped at n <= " + std::to_string(kEnumCap));
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

CanonicalForm canonical_form(const Graph &g) {
  check_enum_order(g.vertex_count());
  const int n = g.vertex_count();
  const Rows8 canon = canonical_rows(n, rows8_of(g));
  CanonicalForm form;
  form.n = n;
  form.key = pack_key(canon);
  form.canonical_graph = graph_of_rows8(n, canon);
  return form;
}

long long automorphism_count(const Graph &g) {
  check_enum_order(g.vertex_count());
  const int n = g.vertex_count();
  if (n <= 1) return 1;
  const Rows8 rows = rows8_of(g);
  const PermTables &t = perm_tables(n);
  long long count = 0;
  for (std::size_t pi = 0; pi < t.perms.size(); ++pi) {
    const Rows8 &p = t.perms[pi];
    const auto &map = t.bytemap[pi];
    bool fixes = true;
    for (int i = 0; i < n && fixes; ++i) fixes = map[rows[p[i]]] == rows[i];
    if (fixes) ++count;
  }
  return count;
}

const std::vector<Graph> &enumerate_nonisomorphic(int n, int workers) {
  check_enum_order(n);
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> memo;
  std::scoped_lock lock(mu);
  for (int k = 0; k <= n; ++k) {
    if (memo.count(k)) continue;
    if (k == 0) {
      memo[0] = {Graph::empty(0)};
      continue;
    }
    const std::vector<Graph> &parents = memo[k - 1];
    const int nthreads = std::min<int>(resolve_workers(workers), static_cast<int>(parents.size()) + 1);
    const std::uint32_t subsets = std::uint32_t(1) << (k - 1);

    auto run_chunk = [k, subsets, &parents](std::size_t begin, std::size_t end) {
      std::unordered_map<std::uint64_t, Rows8> local;
      for (std::size_t pi = begin; pi < end; ++pi) {
        Rows8 base = rows8_of(parents[pi]);
        for (std::uint32_t s = 0; s < subsets; ++s) {
          Rows8 rows = base;
          rows[k - 1] = static_cast<std::uint8_t>(s);
          for (int i = 0; i < k - 1; ++i)
            if ((s >> i) & 1) rows[i] |= std::uint8_t(1) << (k - 1);
          Rows8 canon = canonical_rows(k, rows);
          local.emplace(pack_key(canon), canon);
        }
      }
      return local;
    };

    std::map<std::uint64_t, Rows8> classes;
    if (nthreads <= 1 || parents.size() < 8) {
      for (auto &kv : run_chunk(0, parents.size())) classes.insert(kv);
    } else {
      std::vector<std::future<std::unordered_map<std::uint64_t, Rows8>>> futures;
      const std::size_t chunk = (parents.size() + nthreads - 1) / nthreads;
      for (std::size_t b = 0; b < parents.size(); b += chunk)
        futures.push_back(std::async(std::launch::async, run_chunk, b,
                                     std::min(parents.size(), b + chunk)));
      for (auto &f : futures)
        for (auto &kv : f.get()) classes.insert(kv);
    }

    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto &[key, rows] : classes) out.push_back(graph_of_rows8(k, rows));
    memo[k] = std::move(out);
  }
  return memo[n];
}

std::vector<Graph> census_critical(int n, int r, int workers) {
  check_enum_order(n);
  std::vector<Graph> out;
  for (const Graph &g : enumerate_nonisomorphic(n, workers)) {
    bool degree_ok = true;
    for (int v = 0; v < n && degree_ok; ++v) degree_ok = g.degree(v) >= r - 1;
    if (!degree_ok) continue;
    if (is_r_critical(g, r)) out.push_back(g);
  }
  return out;
}

CensusReport verify_lemma1(int r, int workers) {
  if (r < 3 || r > 6)
    throw std::invalid_argument("verify_lemma1: feasible range is 3 <= r <= 6 (n <= 8)");
  CensusReport report;
  report.r = r;
  report.n_max = r + 2;
  report.found.resize(report.n_max + 1);
  report.expected.resize(report.n_max + 1);
  report.expected[r] = {to_graph6(canonical_form(make_complete(r)).canonical_graph)};
  report.expected[r + 2] = {to_graph6(canonical_form(make_kr2_minus_c5(r)).canonical_graph)};
  report.pass = true;
  for (int n = 1; n <= report.n_max; ++n) {
    for (const Graph &g : census_critical(n, r, workers))
      report.found[n].push_back(to_graph6(g));
    if (report.found[n] != report.expected[n]) report.pass = false;
  }
  return report;
}

ExcessAuditReport audit_excess_bounds(int r, int n_max, int workers) {
  if (r > 6) throw std::invalid_argument("audit_excess_bounds: feasible for r <= 6");
  check_enum_order(n_max);
  ExcessAuditReport report;
  report.r = r;
  report.n_max = n_max;
  for (int n = 1; n <= n_max; ++n) {
    for (const Graph &g : census_critical(n, r, workers)) {
      ExcessAuditRow row;
      row.graph6 = to_graph6(g);
      row.n = n;
      row.m = g.edge_count();
      row.excess = excess(g, r);
      row.complete = row.m == static_cast<long long>(n) * (n - 1) / 2;
      auto check = [&row](const std::string &name, long long lower_bound) {
        const long long slack = row.excess - lower_bound;
        row.checked.push_back(name + " excess >= " + std::to_string(lower_bound) +
                              " (slack " + std::to_string(slack) + ")");
        if (slack < 0) row.violations.push_back(name + " violated");
      };
      if (!row.complete) {
        check("DIRAC", r - 3);
        const int p = n - r;
        if (p >= 2 && p <= r - 2)
          check("GALLAI", static_cast<long long>(p) * r - static_cast<long long>(p) * p - 2);
      }
      if (n >= r + 2 && n != 2 * r - 1) check("KOSTOCHKA_STIEBITZ", 2 * r - 6);
      if (r >= 4 && !row.complete && row.excess == r - 3 && n != 2 * r - 1)
        row.violations.push_back("excess r-3 characterization: expected n = 2r-1");
      report.violation_count += static_cast<long long>(row.violations.size());
      report.rows.push_back(std::move(row));
    }
  }
  report.pass = report.violation_count == 0;
  return report;
}

}  // namespace albertson
