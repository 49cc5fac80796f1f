#include "gca/wheel.hpp"

#include "gca/graph_complex.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <thread>

namespace gca::wheel {

Graph wheel(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("wheel needs an odd rim size >= 3");
  std::vector<graph::Edge> edges;
  for (int i = 1; i <= n; ++i) {
    edges.emplace_back(i, i % n + 1);
    edges.emplace_back(i, n + 1);
  }
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  return Graph(n + 1, edges);
}

int Orientation::tail(int e) const {
  const auto& [i, j] = graph.edges.at(e);
  return forward[e] ? i : j;
}

int Orientation::head(int e) const {
  const auto& [i, j] = graph.edges.at(e);
  return forward[e] ? j : i;
}

std::vector<int> Orientation::out_degrees() const {
  std::vector<int> out(graph.n, 0);
  for (int e = 0; e < graph.edge_count(); ++e) ++out[tail(e) - 1];
  return out;
}

namespace {

// Backtracking over edges; cap[v] bounds the out-degree of v, exact[v] requires equality.
void orient(const Graph& g, const std::vector<int>& cap, bool exact, int e, std::vector<int>& out,
            std::vector<bool>& dir, const std::function<void()>& emit) {
  if (e == g.edge_count()) {
    if (exact)
      for (int v = 0; v < g.n; ++v)
        if (out[v] != cap[v]) return;
    emit();
    return;
  }
  auto [i, j] = g.edges[e];
  if (i == j) {
    if (out[i - 1] >= cap[i - 1]) return;
    ++out[i - 1];
    dir[e] = true;
    orient(g, cap, exact, e + 1, out, dir, emit);
    --out[i - 1];
    return;
  }
  for (bool fwd : {true, false}) {
    int t = fwd ? i : j;
    if (out[t - 1] >= cap[t - 1]) continue;
    ++out[t - 1];
    dir[e] = fwd;
    orient(g, cap, exact, e + 1, out, dir, emit);
    --out[t - 1];
  }
}

std::vector<int> last_free_caps(const Graph& g) {
  std::vector<int> cap(g.n, 1);
  if (g.n > 0) cap[g.n - 1] = g.edge_count() + 1;
  return cap;
}

}  // namespace

std::vector<Orientation> valid_orientations(const Graph& g) {
  std::vector<Orientation> res;
  std::vector<int> out(g.n, 0);
  std::vector<bool> dir(g.edge_count(), true);
  orient(g, last_free_caps(g), false, 0, out, dir, [&] { res.push_back({g, dir}); });
  return res;
}

std::size_t count_valid_orientations(const Graph& g) {
  std::size_t count = 0;
  std::vector<int> out(g.n, 0);
  std::vector<bool> dir(g.edge_count(), true);
  orient(g, last_free_caps(g), false, 0, out, dir, [&] { ++count; });
  return count;
}

bool is_wheel(const Graph& g, int hub) {
  int rim = g.n - 1;
  if (rim < 3 || hub < 1 || hub > g.n || g.edge_count() != 2 * rim) return false;
  std::vector<int> spokes(g.n + 1, 0);
  std::vector<std::vector<int>> adj(g.n + 1);
  for (auto [i, j] : g.edges) {
    if (i == j) return false;
    if (i == hub || j == hub) {
      ++spokes[i == hub ? j : i];
      continue;
    }
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  for (int v = 1; v <= g.n; ++v) {
    if (v == hub) continue;
    if (spokes[v] != 1 || adj[v].size() != 2) return false;
  }
  // the rim is one cycle through all rim vertices
  int start = hub == 1 ? 2 : 1;
  int prev = 0, cur = start, seen = 0;
  do {
    int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = next;
    ++seen;
  } while (cur != start && seen <= rim);
  return seen == rim;
}

bool WheelReport::ok() const {
  for (const auto& e : entries) {
    if ((e.orientations > 0) != e.is_wheel) return false;
    if (e.is_wheel && e.orientations != 2) return false;
  }
  return true;
}

namespace {

std::vector<WheelEntry> examine(const Graph& g, std::size_t& pairs) {
  // one designated vertex per orbit of the automorphism group
  auto autos = graph::automorphisms(g);
  auto orbit_min = [&](int v) {
    int m = v;
    for (const auto& a : autos) m = std::min(m, a.first[v - 1]);
    return m;
  };
  std::vector<WheelEntry> res;
  for (int h = 1; h <= g.n; ++h) {
    if (orbit_min(h) != h) continue;
    ++pairs;
    graph::Permutation swap(g.n);
    for (int v = 1; v <= g.n; ++v) swap[v - 1] = v;
    std::swap(swap[h - 1], swap[g.n - 1]);
    Graph r = graph::canonicalize(graph::relabel_raw(g, swap)).graph;
    WheelEntry entry{r, count_valid_orientations(r), is_wheel(r, r.n)};
    if (entry.orientations > 0 || entry.is_wheel) res.push_back(entry);
  }
  return res;
}

}  // namespace

WheelReport check_wheels_only(int max_vertices) {
  if (max_vertices > 8) throw std::invalid_argument("max_vertices must be <= 8");
  WheelReport rep;
  rep.max_vertices = max_vertices;
  std::vector<const Graph*> work;
  for (int v = 1; v <= max_vertices; ++v)
    for (int e = (3 * v + 1) / 2; e <= v * (v - 1) / 2; ++e)
      for (const Graph& g : graph::iso_classes(v, e, false))
        if (graph::passes_gc_filter(g)) work.push_back(&g);
  rep.graphs_examined = work.size();

  std::vector<std::vector<WheelEntry>> found(work.size());
  std::vector<std::size_t> pairs(work.size(), 0);
  int threads = std::max(1, std::min<int>(gc::worker_threads(), static_cast<int>(work.size())));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t k = t; k < work.size(); k += threads) found[k] = examine(*work[k], pairs[k]);
    });
  for (auto& th : pool) th.join();
  for (std::size_t k = 0; k < work.size(); ++k) {
    rep.pairs_examined += pairs[k];
    for (auto& e : found[k]) rep.entries.push_back(std::move(e));
  }
  return rep;
}

bool one_out_edge_obstruction(const Graph& g) {
  for (int val : graph::valencies(g))
    if (val < 3) throw std::invalid_argument("every vertex needs valency >= 3");
  std::vector<int> cap(g.n, 1), out(g.n, 0);
  std::vector<bool> dir(g.edge_count(), true);
  bool found = false;
  orient(g, cap, true, 0, out, dir, [&] { found = true; });
  return !found;
}

}  // namespace gca::wheel
