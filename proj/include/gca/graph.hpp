#pragma once

#include "gca/ratlin.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gca::graph {

using ratlin::Rational;
using Edge = std::pair<int, int>;
using Permutation = std::vector<int>;  // sigma[i-1] = image of vertex i, 1-based

// Labeled graph on vertices 1..n with a totally ordered edge list; loops allowed,
// repeated edges rejected.
struct Graph {
  int n = 0;
  std::vector<Edge> edges;

  Graph() = default;
  Graph(int n, std::vector<Edge> edges);

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool operator<(const Graph& o) const {
    return n != o.n ? n < o.n : edges < o.edges;
  }
  bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
  bool operator!=(const Graph& o) const { return !(*this == o); }
};

struct SignedGraph {
  Graph graph;
  int sign = 1;
};

SignedGraph canonicalize(const Graph& g);
bool is_canonical(const Graph& g);
// Image of the edge list under sigma with the edge order preserved (not canonicalized).
Graph relabel_raw(const Graph& g, const Permutation& sigma);
SignedGraph relabel(const Graph& g, const Permutation& sigma);
int permutation_sign(const Permutation& p);
void check_permutation(const Permutation& p, int n);
Permutation compose(const Permutation& tau, const Permutation& sigma);  // tau after sigma
Permutation inverse(const Permutation& p);

class GraVector {
 public:
  using Terms = std::map<Graph, Rational>;

  GraVector() = default;
  explicit GraVector(int arity) : arity_(arity) {}
  static GraVector from_graph(const Graph& g, const Rational& c = 1);

  int arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Graph& g, const Rational& c);  // canonicalizes g
  void add_canonical(const Graph& g, const Rational& c);
  Rational coefficient(const Graph& canonical) const;

  GraVector& operator+=(const GraVector& o);
  GraVector& operator-=(const GraVector& o);
  GraVector& operator*=(const Rational& c);
  bool operator==(const GraVector& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const GraVector& o) const { return !(*this == o); }

  GraVector relabel(const Permutation& sigma) const;
  std::string render() const;

 private:
  int arity_ = 0;
  Terms terms_;
};

GraVector operator+(GraVector a, const GraVector& b);
GraVector operator-(GraVector a, const GraVector& b);
GraVector operator*(const Rational& c, GraVector a);

GraVector symmetrize(const Graph& g);
GraVector symmetrize(const GraVector& v);
bool is_symmetric(const GraVector& v);

struct Predicates {
  bool connected = false;
  bool one_vertex_irreducible = false;
  int min_valency = 0;
};

std::vector<int> valencies(const Graph& g);  // loops count twice
bool is_connected(const Graph& g);
Predicates structural_predicates(const Graph& g);
bool passes_gc_filter(const Graph& g);
bool has_loops(const Graph& g);
int degree_of(const Graph& g);  // 2n - 2 - e

// Canonical representative of the isomorphism class: relabel(g, perm) = sign * graph.
struct IsoForm {
  Graph graph;
  int sign = 1;
  Permutation perm;
  bool odd_automorphism = false;
};

IsoForm iso_canonical(const Graph& g);
std::vector<std::pair<Permutation, int>> automorphisms(const Graph& g);  // (sigma, edge sign)
bool has_odd_automorphism(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

// All isomorphism classes (canonical representatives, sorted) with n vertices and e edges.
const std::vector<Graph>& iso_classes(int n, int e, bool allow_loops);

// Text format "n: i-j, i-j, ..."; edge list order is the total order.
std::string to_text(const Graph& g);
Graph parse_text(const std::string& text);
std::string to_json(const Graph& g);
Graph parse_json(const std::string& text);

Graph path_graph(int n);
Graph complete_graph(int n);
Graph tetrahedron();
Graph edge_graph();   // two vertices joined by an edge
Graph empty_graph(int n);

}  // namespace gca::graph
