#include "gca/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace gca::graph {

namespace {

Edge normalized(int i, int j) { return i <= j ? Edge{i, j} : Edge{j, i}; }

int inversion_parity(const std::vector<Edge>& v) {
  int inv = 0;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[b] < v[a]) ++inv;
  return inv & 1;
}

}  // namespace

Graph::Graph(int n_, std::vector<Edge> edges_) : n(n_) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  edges.reserve(edges_.size());
  std::set<Edge> seen;
  for (auto [i, j] : edges_) {
    if (i < 1 || j < 1 || i > n_ || j > n_)
      throw std::invalid_argument("edge endpoint out of range");
    Edge e = normalized(i, j);
    if (!seen.insert(e).second)
      throw std::invalid_argument("repeated edge " + std::to_string(e.first) + "-" +
                                  std::to_string(e.second));
    edges.push_back(e);
  }
}

SignedGraph canonicalize(const Graph& g) {
  SignedGraph s{g, 1};
  if (inversion_parity(g.edges)) s.sign = -1;
  std::sort(s.graph.edges.begin(), s.graph.edges.end());
  return s;
}

bool is_canonical(const Graph& g) { return std::is_sorted(g.edges.begin(), g.edges.end()); }

void check_permutation(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<bool> hit(n + 1, false);
  for (int x : p) {
    if (x < 1 || x > n || hit[x]) throw std::invalid_argument("not a permutation");
    hit[x] = true;
  }
}

Graph relabel_raw(const Graph& g, const Permutation& sigma) {
  Graph r;
  r.n = g.n;
  r.edges.reserve(g.edges.size());
  for (auto [i, j] : g.edges) r.edges.push_back(normalized(sigma[i - 1], sigma[j - 1]));
  return r;
}

SignedGraph relabel(const Graph& g, const Permutation& sigma) {
  check_permutation(sigma, g.n);
  return canonicalize(relabel_raw(g, sigma));
}

int permutation_sign(const Permutation& p) {
  int inv = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[b] < p[a]) ++inv;
  return (inv & 1) ? -1 : 1;
}

Permutation compose(const Permutation& tau, const Permutation& sigma) {
  Permutation r(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) r[i] = tau[sigma[i] - 1];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

GraVector GraVector::from_graph(const Graph& g, const Rational& c) {
  GraVector v(g.n);
  v.add(g, c);
  return v;
}

void GraVector::add(const Graph& g, const Rational& c) {
  SignedGraph s = canonicalize(g);
  add_canonical(s.graph, s.sign < 0 ? Rational(-c) : c);
}

void GraVector::add_canonical(const Graph& g, const Rational& c) {
  if (g.n != arity_) throw std::invalid_argument("arity mismatch in GraVector");
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(g, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational GraVector::coefficient(const Graph& canonical) const {
  auto it = terms_.find(canonical);
  return it == terms_.end() ? Rational(0) : it->second;
}

GraVector& GraVector::operator+=(const GraVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) arity_ = o.arity_;
  for (const auto& [g, c] : o.terms_) add_canonical(g, c);
  return *this;
}

GraVector& GraVector::operator-=(const GraVector& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) arity_ = o.arity_;
  for (const auto& [g, c] : o.terms_) add_canonical(g, -c);
  return *this;
}

GraVector& GraVector::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, x] : terms_) x *= c;
  return *this;
}

GraVector GraVector::relabel(const Permutation& sigma) const {
  check_permutation(sigma, arity_);
  GraVector r(arity_);
  for (const auto& [g, c] : terms_) r.add(relabel_raw(g, sigma), c);
  return r;
}

std::string GraVector::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    Rational a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << "[" << to_text(g) << "]";
  }
  return os.str();
}

GraVector operator+(GraVector a, const GraVector& b) { return a += b; }
GraVector operator-(GraVector a, const GraVector& b) { return a -= b; }
GraVector operator*(const Rational& c, GraVector a) { return a *= c; }

GraVector symmetrize(const Graph& g) {
  GraVector v(g.n);
  Permutation p(g.n);
  std::iota(p.begin(), p.end(), 1);
  do {
    v.add(relabel_raw(g, p), 1);
  } while (std::next_permutation(p.begin(), p.end()));
  return v;
}

GraVector symmetrize(const GraVector& x) {
  GraVector v(x.arity());
  for (const auto& [g, c] : x.terms()) {
    GraVector s = symmetrize(g);
    s *= c;
    v += s;
  }
  return v;
}

bool is_symmetric(const GraVector& v) {
  Permutation p(v.arity());
  std::iota(p.begin(), p.end(), 1);
  // adjacent transpositions generate S_n
  for (int i = 0; i + 1 < v.arity(); ++i) {
    Permutation t = p;
    std::swap(t[i], t[i + 1]);
    if (v.relabel(t) != v) return false;
  }
  return true;
}

std::vector<int> valencies(const Graph& g) {
  std::vector<int> val(g.n, 0);
  for (auto [i, j] : g.edges) {
    ++val[i - 1];
    ++val[j - 1];
  }
  return val;
}

namespace {

bool connected_without(const Graph& g, int removed) {
  int n = g.n;
  std::vector<std::vector<int>> adj(n + 1);
  for (auto [i, j] : g.edges) {
    if (i == j || i == removed || j == removed) continue;
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  int start = 0;
  for (int v = 1; v <= n; ++v)
    if (v != removed) {
      start = v;
      break;
    }
  if (start == 0) return true;
  std::vector<bool> seen(n + 1, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n - (removed ? 1 : 0);
}

}  // namespace

bool is_connected(const Graph& g) { return connected_without(g, 0); }

Predicates structural_predicates(const Graph& g) {
  Predicates p;
  p.connected = is_connected(g);
  p.one_vertex_irreducible = p.connected;
  for (int v = 1; v <= g.n && p.one_vertex_irreducible; ++v)
    if (!connected_without(g, v)) p.one_vertex_irreducible = false;
  auto val = valencies(g);
  p.min_valency = val.empty() ? 0 : *std::min_element(val.begin(), val.end());
  return p;
}

bool passes_gc_filter(const Graph& g) {
  Predicates p = structural_predicates(g);
  return p.connected && p.one_vertex_irreducible && p.min_valency >= 3;
}

bool has_loops(const Graph& g) {
  for (auto [i, j] : g.edges)
    if (i == j) return true;
  return false;
}

int degree_of(const Graph& g) { return 2 * g.n - 2 - g.edge_count(); }

namespace {

// Isomorphism-invariant vertex colouring by iterated neighbourhood refinement.
std::vector<int> refined_colors(const Graph& g) {
  int n = g.n;
  std::vector<std::vector<int>> adj(n);
  std::vector<int> loops(n, 0);
  for (auto [i, j] : g.edges) {
    if (i == j) {
      ++loops[i - 1];
      continue;
    }
    adj[i - 1].push_back(j - 1);
    adj[j - 1].push_back(i - 1);
  }
  std::vector<int> color(n);
  {
    std::vector<std::pair<int, int>> key(n);
    for (int v = 0; v < n; ++v) key[v] = {static_cast<int>(adj[v].size()), loops[v]};
    auto sorted = key;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), key[v]) - sorted.begin());
  }
  int classes = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (int w : adj[v]) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    int nc = static_cast<int>(sorted.size());
    color = std::move(next);
    if (nc == classes) break;
    classes = nc;
  }
  return color;
}

// Enumerate all maps vertex -> label that send the k-th colour cell onto the k-th label block.
void for_each_cell_labeling(const std::vector<int>& color,
                            const std::function<void(const Permutation&)>& fn) {
  int n = static_cast<int>(color.size());
  int nc = n ? *std::max_element(color.begin(), color.end()) + 1 : 0;
  std::vector<std::vector<int>> cells(nc);
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  std::vector<int> base(nc, 1);
  for (int c = 1; c < nc; ++c) base[c] = base[c - 1] + static_cast<int>(cells[c - 1].size());
  Permutation perm(n);
  std::function<void(int)> rec = [&](int c) {
    if (c == nc) {
      fn(perm);
      return;
    }
    std::vector<int> order = cells[c];
    do {
      for (std::size_t k = 0; k < order.size(); ++k) perm[order[k]] = base[c] + static_cast<int>(k);
      rec(c + 1);
    } while (std::next_permutation(order.begin(), order.end()));
  };
  rec(0);
}

}  // namespace

IsoForm iso_canonical(const Graph& g) {
  IsoForm best;
  bool have = false;
  std::vector<int> color = refined_colors(g);
  for_each_cell_labeling(color, [&](const Permutation& p) {
    Graph r = relabel_raw(g, p);
    int sign = inversion_parity(r.edges) ? -1 : 1;
    std::sort(r.edges.begin(), r.edges.end());
    if (!have || r.edges < best.graph.edges) {
      best.graph = std::move(r);
      best.sign = sign;
      best.perm = p;
      best.odd_automorphism = false;
      have = true;
    } else if (r.edges == best.graph.edges && sign != best.sign) {
      best.odd_automorphism = true;
    }
  });
  if (!have) best.graph.n = g.n;
  return best;
}

std::vector<std::pair<Permutation, int>> automorphisms(const Graph& g) {
  std::vector<std::pair<Permutation, int>> out;
  std::vector<int> color = refined_colors(g);
  int n = g.n;
  // labelings send cells to blocks; compose with the inverse of a fixed labeling
  Permutation first;
  for_each_cell_labeling(color, [&](const Permutation& p) {
    if (first.empty()) first = p;
  });
  if (n == 0) {
    out.push_back({{}, 1});
    return out;
  }
  Permutation finv = inverse(first);
  SignedGraph self = canonicalize(g);
  for_each_cell_labeling(color, [&](const Permutation& p) {
    Permutation sigma = compose(finv, p);
    SignedGraph r = relabel(g, sigma);
    if (r.graph == self.graph) out.push_back({sigma, r.sign * self.sign});
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool has_odd_automorphism(const Graph& g) { return iso_canonical(g).odd_automorphism; }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
  return iso_canonical(a).graph == iso_canonical(b).graph;
}

const std::vector<Graph>& iso_classes(int n, int e, bool allow_loops) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (n < 0 || e < 0) {
    static const std::vector<Graph> none;
    return none;
  }
  auto key = std::make_tuple(n, e, allow_loops);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  int k = e;
  while (k > 0 && !cache.count(std::make_tuple(n, k, allow_loops))) --k;
  if (k == 0 && !cache.count(std::make_tuple(n, 0, allow_loops)))
    cache[std::make_tuple(n, 0, allow_loops)] = {Graph(n, {})};
  for (; k < e; ++k) {
    const auto& prev = cache[std::make_tuple(n, k, allow_loops)];
    std::set<Graph> next;
    for (const Graph& g : prev) {
      std::set<Edge> present(g.edges.begin(), g.edges.end());
      for (int i = 1; i <= n; ++i)
        for (int j = allow_loops ? i : i + 1; j <= n; ++j) {
          if (present.count({i, j})) continue;
          Graph h = g;
          h.edges.emplace_back(i, j);
          next.insert(iso_canonical(h).graph);
        }
    }
    cache[std::make_tuple(n, k + 1, allow_loops)] = std::vector<Graph>(next.begin(), next.end());
  }
  return cache[key];
}

std::string to_text(const Graph& g) {
  std::ostringstream os;
  os << g.n << ":";
  for (std::size_t k = 0; k < g.edges.size(); ++k)
    os << (k ? ", " : " ") << g.edges[k].first << "-" << g.edges[k].second;
  return os.str();
}

Graph parse_text(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("graph text needs 'n:' prefix");
  int n;
  try {
    std::size_t used = 0;
    n = std::stoi(text.substr(0, colon), &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad vertex count in graph text");
  }
  std::vector<Edge> edges;
  std::string rest = text.substr(colon + 1);
  std::stringstream ss(rest);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) continue;
    auto e = item.find_last_not_of(" \t\r\n");
    item = item.substr(b, e - b + 1);
    auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad edge '" + item + "'");
    try {
      edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad edge '" + item + "'");
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  j["edges"] = nlohmann::json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({a, b});
  return j.dump();
}

Graph parse_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return Graph(j.at("n").get<int>(), std::move(edges));
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

Graph tetrahedron() { return complete_graph(4); }
Graph edge_graph() { return Graph(2, {{1, 2}}); }
Graph empty_graph(int n) { return Graph(n, {}); }

}  // namespace gca::graph
