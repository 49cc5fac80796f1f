#include <doctest.h>

#include "gca/gra_operad.hpp"
#include "gca/polyvector.hpp"

#include <random>

using namespace gca;
using namespace gca::poly;
using graph::Edge;

namespace {

SuperElement gen(const Frame& f, const std::string& name) { return SuperElement::generator(f.table, name); }

// random parity-homogeneous polyvector with t-degree <= 3
Polyvector random_poly(std::mt19937& rng, const Frame& f, bool odd, int terms = 3) {
  SuperElement r(f.table);
  for (int k = 0; k < terms; ++k) {
    SuperElement m = SuperElement::constant(f.table, static_cast<long>(rng() % 7) - 3);
    int deg = rng() % 4;
    for (int s = 0; s < deg; ++s) m = m * SuperElement::generator(f.table, f.t[rng() % f.d]);
    for (int a = 0; a < f.d; ++a)
      if (rng() & 1) m = m * SuperElement::generator(f.table, f.xi[a]);
    r += m;
  }
  r = r.parity_part(odd);
  if (r.is_zero()) {
    r = SuperElement::generator(f.table, f.t[0]) * SuperElement::generator(f.table, f.t[0]);
    if (odd) r = r * SuperElement::generator(f.table, f.xi[0]);
  }
  return r;
}

Polyvector naive_act(const Frame& f, const Graph& g, const std::vector<Polyvector>& args) {
  PolyTensor t{args};
  for (int e = g.edge_count() - 1; e >= 0; --e) t = delta_apply(f, g.edges[e].first, g.edges[e].second, t);
  SuperElement r = mult(t);
  return r.is_zero() ? SuperElement(f.table) : r;
}

Graph random_graph(std::mt19937& rng, int n, int max_edges) {
  std::vector<Edge> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) all.emplace_back(i, j);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<std::size_t>(rng() % (all.size() + 1), max_edges));
  return Graph(n, all);
}

int sgn(bool odd) { return odd ? -1 : 1; }

}  // namespace

TEST_CASE("bracket of vector fields is the commutator") {
  Frame f = make_frame(2, symalg::kNoCutoff);
  auto t1 = gen(f, "t1"), t2 = gen(f, "t2"), x1 = gen(f, "xi1"), x2 = gen(f, "xi2");
  SuperElement X = t2 * t2 * x1 + t1 * x2;
  SuperElement Y = t1 * t2 * x1;
  SuperElement expected(f.table);
  // X^a d_a Y^b - Y^a d_a X^b
  SuperElement Xa[2] = {t2 * t2, t1}, Ya[2] = {t1 * t2, SuperElement(f.table)};
  SuperElement xi[2] = {x1, x2};
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a) {
      expected += Xa[a] * symalg::derive(Ya[b], f.t[a]) * xi[b];
      expected -= Ya[a] * symalg::derive(Xa[b], f.t[a]) * xi[b];
    }
  CHECK(schouten(f, X, Y) == expected);
  SuperElement fn = t1 * t1 * t2;
  CHECK(schouten(f, X, fn) == Xa[0] * symalg::derive(fn, "t1") + Xa[1] * symalg::derive(fn, "t2"));
  CHECK(schouten(f, fn, X) == schouten(f, X, fn));
  CHECK(wedge(f, X, Y) == X * Y);
  CHECK(schouten(f, t1, t2).is_zero());
  CHECK(schouten(f, x1, t1) == SuperElement::constant(f.table, 1));
}

TEST_CASE("delta operator on simple tensors") {
  Frame f = make_frame(1, symalg::kNoCutoff);
  auto t = gen(f, "t1"), x = gen(f, "xi1");
  PolyTensor r = delta_op(f, 1, 2, {x, t});
  CHECK(mult(r) == SuperElement::constant(f.table, 1));
  r = delta_op(f, 1, 2, {t, x});
  CHECK(mult(r) == SuperElement::constant(f.table, 1));
  // loop on a single slot: divergence-type operator
  CHECK(mult(delta_op(f, 1, 1, {t * x})) == SuperElement::constant(f.table, 2));
  CHECK_THROWS(delta_op(f, 1, 3, {t, x}));
}

TEST_CASE("fast action agrees with composed delta operators") {
  std::mt19937 rng(101);
  for (int d : {1, 2, 3}) {
    Frame f = make_frame(d, symalg::kNoCutoff);
    for (int trial = 0; trial < 60; ++trial) {
      int n = 1 + rng() % 4;
      Graph g = random_graph(rng, n, 5);
      std::vector<Polyvector> args;
      for (int k = 0; k < n; ++k) args.push_back(random_poly(rng, f, rng() & 1) + random_poly(rng, f, rng() & 1));
      CHECK(act(f, g, args) == naive_act(f, g, args));
    }
  }
}

TEST_CASE("reordering edges changes the sign") {
  std::mt19937 rng(5);
  Frame f = make_frame(2, symalg::kNoCutoff);
  Graph g(3, {{1, 2}, {2, 3}, {1, 3}});
  Graph h(3, {{2, 3}, {1, 2}, {1, 3}});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polyvector> args{random_poly(rng, f, true), random_poly(rng, f, false), random_poly(rng, f, true)};
    CHECK(act(f, g, args) == -act(f, h, args));
  }
}

TEST_CASE("action is an operad map on small graphs") {
  std::mt19937 rng(17);
  Frame f = make_frame(2, symalg::kNoCutoff);
  int checked = 0, nonzero = 0;
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 3 - (n == 3 ? 1 : 0); ++k)
      for (int eg = 0; eg <= 2; ++eg)
        for (int eh = 0; eh <= 2; ++eh)
          for (const Graph& g : graph::iso_classes(n, eg, true))
            for (const Graph& h : graph::iso_classes(k, eh, true))
              for (int i = 1; i <= n; ++i) {
                std::vector<Polyvector> v;
                std::vector<bool> par;
                for (int s = 0; s < n + k - 1; ++s) {
                  bool p = rng() & 1;
                  par.push_back(p);
                  v.push_back(random_poly(rng, f, p, 4));
                }
                SuperElement lhs = act(f, gra::insert(g, i, h), v);
                std::vector<Polyvector> inner(v.begin() + (i - 1), v.begin() + (i - 1 + k));
                std::vector<Polyvector> outer(v.begin(), v.begin() + (i - 1));
                outer.push_back(act(f, h, inner));
                outer.insert(outer.end(), v.begin() + (i - 1 + k), v.end());
                SuperElement rhs = act(f, g, outer);
                int before = 0;
                for (int l = 0; l < i - 1; ++l) before += par[l];
                rhs *= sgn((h.edge_count() * before) & 1);
                CHECK(lhs == rhs);
                ++checked;
                nonzero += !lhs.is_zero();
              }
  CHECK(checked > 100);
  CHECK(nonzero > 20);
}

TEST_CASE("Schouten bracket: symmetry, Jacobi, Leibniz") {
  std::mt19937 rng(2718);
  Frame f = make_frame(3, symalg::kNoCutoff);
  for (int trial = 0; trial < 120; ++trial) {
    bool pa = rng() & 1, pb = rng() & 1, pc = rng() & 1;
    Polyvector a = random_poly(rng, f, pa), b = random_poly(rng, f, pb), c = random_poly(rng, f, pc);
    CHECK(schouten(f, a, b) == sgn(pa && pb) * schouten(f, b, a));
    // [x,y] = (-1)^{|x|}{x,y} is the usual Gerstenhaber bracket:
    // [a,[b,c]] = [[a,b],c] + (-1)^{(|a|-1)(|b|-1)} [b,[a,c]]
    auto br = [&](const Polyvector& x, const Polyvector& y) {
      SuperElement r = schouten(f, x, y);
      return parity_of(x) ? -r : r;
    };
    SuperElement lhs = br(a, br(b, c));
    SuperElement rhs = br(br(a, b), c) + sgn(!pa && !pb) * br(b, br(a, c));
    CHECK(lhs == rhs);
    // {a, bc} = {a,b}c + (-1)^{(|a|-1)|b|} b{a,c}
    SuperElement l2 = schouten(f, a, b * c);
    SuperElement r2 = schouten(f, a, b) * c + sgn(!pa && pb) * (b * schouten(f, a, c));
    CHECK(l2 == r2);
    CHECK(wedge(f, a, b) == a * b);
  }
}

TEST_CASE("argument validation") {
  Frame f = make_frame(2, 6);
  Frame other = make_frame(2, 6);
  CHECK_THROWS(act(f, graph::edge_graph(), {gen(f, "t1")}));
  CHECK_THROWS(act(f, graph::edge_graph(), {gen(f, "t1"), gen(other, "t1")}));
  CHECK(act(f, graph::edge_graph(), {gen(f, "t1"), SuperElement(f.table)}).is_zero());
  CHECK_THROWS(parity_of(gen(f, "t1") + gen(f, "xi1")));
  CHECK_THROWS(make_frame(0, 4));
}
