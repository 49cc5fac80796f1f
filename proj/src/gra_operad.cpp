#include "gca/gra_operad.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gca::gra {

using graph::Edge;
using graph::Permutation;

GraVector insert(const Graph& outer, int i, const Graph& inner) {
  int n = outer.n, k = inner.n;
  if (i < 1 || i > n) throw std::out_of_range("insertion vertex out of range");
  GraVector out(n + k - 1);
  auto shift = [&](int v) { return v < i ? v : v + k - 1; };

  // endpoint slots at vertex i: (edge index, which end)
  std::vector<std::pair<int, int>> slots;
  for (int e = 0; e < outer.edge_count(); ++e) {
    if (outer.edges[e].first == i) slots.emplace_back(e, 0);
    if (outer.edges[e].second == i) slots.emplace_back(e, 1);
  }
  if (k == 0) {
    if (!slots.empty()) return out;
  }
  std::vector<int> choice(slots.size(), 1);
  std::vector<Edge> edges(outer.edge_count() + inner.edge_count());
  while (true) {
    for (int e = 0; e < outer.edge_count(); ++e)
      edges[e] = {shift(outer.edges[e].first), shift(outer.edges[e].second)};
    for (std::size_t s = 0; s < slots.size(); ++s) {
      auto [e, end] = slots[s];
      (end == 0 ? edges[e].first : edges[e].second) = i + choice[s] - 1;
    }
    for (int e = 0; e < inner.edge_count(); ++e)
      edges[outer.edge_count() + e] = {inner.edges[e].first + i - 1, inner.edges[e].second + i - 1};
    Graph g;
    g.n = n + k - 1;
    g.edges.reserve(edges.size());
    for (auto [a, b] : edges) g.edges.push_back(a <= b ? Edge{a, b} : Edge{b, a});
    std::vector<Edge> sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) out.add(g, 1);

    std::size_t s = 0;
    while (s < choice.size() && choice[s] == k) choice[s++] = 1;
    if (s == choice.size()) break;
    ++choice[s];
  }
  return out;
}

GraVector insert(const GraVector& outer, int i, const GraVector& inner) {
  GraVector out(outer.arity() + inner.arity() - 1);
  for (const auto& [g, a] : outer.terms())
    for (const auto& [h, b] : inner.terms()) {
      GraVector t = insert(g, i, h);
      t *= a * b;
      out += t;
    }
  return out;
}

namespace {

void for_each_shuffle(int k, int m, const std::function<void(const Permutation&)>& fn) {
  int total = k + m;
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  Permutation sigma(total);
  do {
    int a = 0, b = k;
    for (int p = 0; p < total; ++p) {
      if (pick[p])
        sigma[a++] = p + 1;
      else
        sigma[b++] = p + 1;
    }
    fn(sigma);
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

GraVector pre_lie(const GraVector& x, const GraVector& y) {
  int n = x.arity(), k = y.arity();
  GraVector comp = insert(x, 1, y);
  GraVector out(n + k - 1);
  if (comp.is_zero()) return out;
  for_each_shuffle(k, n - 1, [&](const Permutation& s) { out += comp.relabel(s); });
  return out;
}

GCCochain GCCochain::from_vector(const GraVector& v, int max_arity) {
  if (v.is_zero()) return GCCochain(0, max_arity);
  int deg = graph::degree_of(v.terms().begin()->first);
  GCCochain c(deg, max_arity);
  c.add(v);
  return c;
}

GCCochain GCCochain::from_graph(const Graph& g, int max_arity) {
  GCCochain c(graph::degree_of(g), max_arity);
  c.add(graph::symmetrize(g));
  return c;
}

GraVector GCCochain::at(int arity) const {
  auto it = terms_.find(arity);
  return it == terms_.end() ? GraVector(arity) : it->second;
}

void GCCochain::add(const GraVector& v) {
  if (v.is_zero()) return;
  if (max_arity_ != kNoArityCutoff && v.arity() > max_arity_) return;
  for (const auto& [g, c] : v.terms())
    if (graph::degree_of(g) != degree_)
      throw std::invalid_argument("graph degree does not match cochain degree");
  auto it = terms_.find(v.arity());
  if (it == terms_.end()) {
    terms_.emplace(v.arity(), v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) terms_.erase(it);
}

GCCochain& GCCochain::operator+=(const GCCochain& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (o.degree_ != degree_) throw std::invalid_argument("adding cochains of different degree");
  for (const auto& [n, v] : o.terms_) add(v);
  return *this;
}

GCCochain& GCCochain::operator-=(const GCCochain& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) degree_ = o.degree_;
  if (o.degree_ != degree_) throw std::invalid_argument("adding cochains of different degree");
  for (const auto& [n, v] : o.terms_) {
    GraVector w = v;
    w *= -1;
    add(w);
  }
  return *this;
}

GCCochain& GCCochain::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [n, v] : terms_) v *= c;
  return *this;
}

bool GCCochain::is_symmetric() const {
  for (const auto& [n, v] : terms_)
    if (!graph::is_symmetric(v)) return false;
  return true;
}

std::string GCCochain::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, v] : terms_) {
    os << (first ? "" : "\n") << "arity " << n << ": " << v.render();
    first = false;
  }
  return os.str();
}

GCCochain operator+(GCCochain a, const GCCochain& b) { return a += b; }
GCCochain operator-(GCCochain a, const GCCochain& b) { return a -= b; }

namespace {

int combined_cutoff(const GCCochain& x, const GCCochain& y) {
  if (x.max_arity() == kNoArityCutoff) return y.max_arity();
  if (y.max_arity() == kNoArityCutoff) return x.max_arity();
  return std::min(x.max_arity(), y.max_arity());
}

}  // namespace

GCCochain pre_lie(const GCCochain& x, const GCCochain& y) {
  int cut = combined_cutoff(x, y);
  GCCochain out(x.degree() + y.degree(), cut);
  for (const auto& [n, a] : x.terms())
    for (const auto& [k, b] : y.terms()) {
      if (cut != kNoArityCutoff && n + k - 1 > cut) continue;
      out.add(pre_lie(a, b));
    }
  return out;
}

GCCochain conv_bracket(const GCCochain& x, const GCCochain& y) {
  GCCochain r = pre_lie(x, y);
  GCCochain s = pre_lie(y, x);
  if (((x.degree() * y.degree()) & 1) == 0) s *= -1;
  r += s;
  return r;
}

GCCochain mc_element() {
  GCCochain mc(1);
  mc.add(GraVector::from_graph(graph::edge_graph()));
  return mc;
}

GCCochain differential(const GCCochain& x) {
  GCCochain mc = mc_element();
  mc.set_max_arity(x.max_arity());
  return conv_bracket(mc, x);
}

GraVector differential_seed(const Graph& g) {
  Graph e = graph::edge_graph();
  GraVector out = insert(e, 1, g);
  GraVector tail(g.n + 1);
  for (int i = 1; i <= g.n; ++i) tail += insert(g, i, e);
  tail *= Rational(1, 2);
  if (graph::degree_of(g) & 1)
    out += tail;
  else
    out -= tail;
  return out;
}

Graph iota(GerGenerator gen) {
  return gen == GerGenerator::Product ? graph::empty_graph(2) : graph::edge_graph();
}

GerGenerator parse_ger_generator(const std::string& name) {
  if (name == "product" || name == "wedge") return GerGenerator::Product;
  if (name == "bracket") return GerGenerator::Bracket;
  throw std::invalid_argument("unknown Ger generator: " + name);
}

}  // namespace gca::gra
