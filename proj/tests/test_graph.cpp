#include <doctest.h>

#include "gca/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace gca::graph;

namespace {

std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> out;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Independent sign: count transpositions while bubble-sorting a copy.
int bubble_sign(std::vector<Edge> e) {
  int s = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j + 1 < e.size() - i; ++j)
      if (e[j + 1] < e[j]) {
        std::swap(e[j], e[j + 1]);
        s = -s;
      }
  return s;
}

Graph random_graph(std::mt19937& rng, int n, bool loops) {
  std::vector<Edge> all;
  for (int i = 1; i <= n; ++i)
    for (int j = loops ? i : i + 1; j <= n; ++j) all.emplace_back(i, j);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(rng() % (all.size() + 1));
  return Graph(n, all);
}

}  // namespace

TEST_CASE("canonicalize") {
  SignedGraph a = canonicalize(Graph(3, {{1, 2}, {1, 3}}));
  CHECK(a.sign == 1);
  SignedGraph b = canonicalize(Graph(3, {{1, 3}, {1, 2}}));
  CHECK(b.sign == -1);
  CHECK(b.graph == a.graph);
  // loop at 1 with edges to 2 and 3, listed in the order (1,1) < (1,2) < (1,3)
  Graph fig(4, {{1, 1}, {1, 2}, {1, 3}});
  CHECK(canonicalize(fig).sign == 1);
  Graph rev(4, {{1, 3}, {1, 2}, {1, 1}});
  CHECK(canonicalize(rev).sign == bubble_sign(rev.edges));
  CHECK(canonicalize(rev).sign == -1);
  std::mt19937 rng(1);
  for (int k = 0; k < 50; ++k) {
    Graph g = random_graph(rng, 5, true);
    SignedGraph s = canonicalize(g);
    CHECK(s.sign == bubble_sign(g.edges));
    CHECK(canonicalize(s.graph).sign == 1);
    CHECK(canonicalize(s.graph).graph == s.graph);
  }
}

TEST_CASE("graph validation and formats") {
  CHECK_THROWS(Graph(2, {{1, 2}, {2, 1}}));
  CHECK_THROWS(Graph(2, {{1, 3}}));
  CHECK_THROWS(parse_text("3: 1-2, 2-1"));
  Graph g = parse_text("4: 1-1, 2-1, 1-3");
  CHECK(g.edges == std::vector<Edge>{{1, 1}, {1, 2}, {1, 3}});
  CHECK(to_text(g) == "4: 1-1, 1-2, 1-3");
  CHECK(parse_text(to_text(g)) == g);
  CHECK(parse_json(to_json(g)) == g);
  CHECK(to_json(g) == R"({"edges":[[1,1],[1,2],[1,3]],"n":4})");
  CHECK(parse_text("2:").edge_count() == 0);
}

TEST_CASE("relabel") {
  Graph path = path_graph(3);
  SignedGraph id = relabel(path, {1, 2, 3});
  CHECK(id.sign == 1);
  CHECK(id.graph == path);
  SignedGraph r = relabel(path, {3, 2, 1});
  CHECK(r.graph == path);
  CHECK(r.sign == -1);
  CHECK_THROWS(relabel(path, {1, 1, 2}));

  // tetrahedron: every relabeling fixes the graph; the sign is a homomorphism
  Graph t = tetrahedron();
  auto perms = all_perms(4);
  for (const auto& s : perms) {
    SignedGraph a = relabel(t, s);
    CHECK(a.graph == t);
    for (const auto& u : perms) {
      SignedGraph b = relabel(t, u);
      SignedGraph c = relabel(t, compose(u, s));
      CHECK(c.sign == a.sign * b.sign);
    }
  }
}

TEST_CASE("relabel is a group action with multiplicative signs") {
  std::mt19937 rng(17);
  for (int k = 0; k < 60; ++k) {
    int n = 1 + rng() % 5;
    Graph g = random_graph(rng, n, true);
    auto perms = all_perms(n);
    const auto& s = perms[rng() % perms.size()];
    const auto& t = perms[rng() % perms.size()];
    SignedGraph a = relabel(g, s);
    SignedGraph b = relabel(a.graph, t);
    SignedGraph c = relabel(g, compose(t, s));
    CHECK(b.graph == c.graph);
    CHECK(a.sign * b.sign == c.sign);
    SignedGraph back = relabel(a.graph, inverse(s));
    CHECK(back.graph == canonicalize(g).graph);
    CHECK(back.sign * a.sign == canonicalize(g).sign);
  }
}

TEST_CASE("symmetrize") {
  CHECK(symmetrize(path_graph(3)).is_zero());
  GraVector t = symmetrize(tetrahedron());
  REQUIRE(t.size() == 1);
  CHECK(abs(t.terms().begin()->second) == 24);
  GraVector loop = symmetrize(Graph(1, {{1, 1}}));
  CHECK_FALSE(loop.is_zero());
  std::mt19937 rng(4);
  for (int k = 0; k < 40; ++k) {
    Graph g = random_graph(rng, 1 + rng() % 4, true);
    GraVector v = symmetrize(g);
    CHECK(is_symmetric(v));
    for (const auto& s : all_perms(g.n)) CHECK(v.relabel(s) == v);
  }
}

TEST_CASE("odd automorphisms symmetrize to zero (n <= 6)") {
  for (int n = 1; n <= 6; ++n) {
    int max_e = std::min(n * (n - 1) / 2, 7);
    for (int e = 0; e <= max_e; ++e)
      for (const Graph& g : iso_classes(n, e, false)) {
        // brute-force odd automorphism search over all of S_n
        bool odd = false;
        SignedGraph self = canonicalize(g);
        for (const auto& s : all_perms(n)) {
          SignedGraph r = relabel(g, s);
          if (r.graph == self.graph && r.sign != self.sign) {
            odd = true;
            break;
          }
        }
        CHECK(odd == has_odd_automorphism(g));
        if (n <= 5) CHECK(symmetrize(g).is_zero() == odd);
      }
  }
}

TEST_CASE("structural predicates") {
  Predicates t = structural_predicates(tetrahedron());
  CHECK(t.connected);
  CHECK(t.one_vertex_irreducible);
  CHECK(t.min_valency == 3);
  Predicates p = structural_predicates(path_graph(3));
  CHECK(p.connected);
  CHECK_FALSE(p.one_vertex_irreducible);
  CHECK(p.min_valency == 1);
  Predicates d = structural_predicates(Graph(4, {{1, 2}, {3, 4}}));
  CHECK_FALSE(d.connected);
  CHECK(d.min_valency == 1);
  CHECK(valencies(Graph(1, {{1, 1}}))[0] == 2);
}

TEST_CASE("isomorphism classes") {
  // loopless graphs on 4 vertices by edge count: 1 1 2 3 2 1 1 (total 11)
  std::vector<std::size_t> expect4{1, 1, 2, 3, 2, 1, 1};
  for (int e = 0; e <= 6; ++e) CHECK(iso_classes(4, e, false).size() == expect4[e]);
  std::size_t total5 = 0;
  for (int e = 0; e <= 10; ++e) total5 += iso_classes(5, e, false).size();
  CHECK(total5 == 34);
  std::size_t total6 = 0;
  for (int e = 0; e <= 15; ++e) total6 += iso_classes(6, e, false).size();
  CHECK(total6 == 156);
  std::mt19937 rng(9);
  for (int k = 0; k < 40; ++k) {
    Graph g = random_graph(rng, 5, true);
    auto perms = all_perms(5);
    const auto& s = perms[rng() % perms.size()];
    Graph h = relabel(g, s).graph;
    IsoForm a = iso_canonical(g), b = iso_canonical(h);
    CHECK(a.graph == b.graph);
    SignedGraph check = relabel(g, a.perm);
    CHECK(check.graph == a.graph);
    CHECK(check.sign == a.sign);
  }
}

TEST_CASE("automorphism group of the tetrahedron") {
  auto aut = automorphisms(tetrahedron());
  CHECK(aut.size() == 24);
  auto aut_path = automorphisms(path_graph(3));
  CHECK(aut_path.size() == 2);
}
