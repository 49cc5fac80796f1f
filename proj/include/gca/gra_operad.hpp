#pragma once

#include "gca/graph.hpp"

#include <map>
#include <string>

namespace gca::gra {

using graph::Graph;
using graph::GraVector;
using ratlin::Rational;

// outer o_i inner: inner vertices take labels i..i+k-1, outer labels above i shift by k-1,
// edge order is outer edges then inner edges; summands with a repeated edge are dropped.
GraVector insert(const Graph& outer, int i, const Graph& inner);
GraVector insert(const GraVector& outer, int i, const GraVector& inner);

// x . y = sum over (k, n-1) shuffles sigma of sigma(x o_1 y), x of arity n, y of arity k.
GraVector pre_lie(const GraVector& x, const GraVector& y);

inline constexpr int kNoArityCutoff = 0;

// Finitely supported element of prod_n s^{2n-2} Gra(n)^{S_n}.
class GCCochain {
 public:
  GCCochain() = default;
  explicit GCCochain(int degree, int max_arity = kNoArityCutoff)
      : degree_(degree), max_arity_(max_arity) {}
  static GCCochain from_vector(const GraVector& v, int max_arity = kNoArityCutoff);
  static GCCochain from_graph(const Graph& g, int max_arity = kNoArityCutoff);  // symmetrized

  int degree() const { return degree_; }
  int max_arity() const { return max_arity_; }
  void set_max_arity(int m) { max_arity_ = m; }
  const std::map<int, GraVector>& terms() const { return terms_; }
  GraVector at(int arity) const;
  bool is_zero() const { return terms_.empty(); }

  void add(const GraVector& v);
  GCCochain& operator+=(const GCCochain& o);
  GCCochain& operator-=(const GCCochain& o);
  GCCochain& operator*=(const Rational& c);
  bool operator==(const GCCochain& o) const { return terms_ == o.terms_; }
  bool operator!=(const GCCochain& o) const { return !(*this == o); }

  bool is_symmetric() const;
  std::string render() const;

 private:
  int degree_ = 0;
  int max_arity_ = kNoArityCutoff;
  std::map<int, GraVector> terms_;
};

GCCochain operator+(GCCochain a, const GCCochain& b);
GCCochain operator-(GCCochain a, const GCCochain& b);

GCCochain pre_lie(const GCCochain& x, const GCCochain& y);
// [x,y] = x.y - (-1)^{|x||y|} y.x
GCCochain conv_bracket(const GCCochain& x, const GCCochain& y);
GCCochain mc_element();
GCCochain differential(const GCCochain& x);

// For g of degree |g|:  d Sym(g) = Sym(seed(g)) with
// seed(g) = MC o_1 g - (-1)^{|g|} (1/2) sum_i g o_i MC.
GraVector differential_seed(const Graph& g);

enum class GerGenerator { Product, Bracket };
Graph iota(GerGenerator gen);
GerGenerator parse_ger_generator(const std::string& name);

}  // namespace gca::gra
