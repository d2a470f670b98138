#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <random>

#include "doctest.h"
#include "lslab/graph.hpp"

using namespace lslab;

namespace {

PlumbingGraph chain(const std::vector<long long>& weights) {
  PlumbingGraph g;
  for (size_t i = 0; i < weights.size(); ++i) {
    g.add_vertex("v" + std::to_string(i + 1), weights[i]);
    if (i) g.add_edge(static_cast<int>(i) - 1, static_cast<int>(i));
  }
  return g;
}

PlumbingGraph a9() { return chain(std::vector<long long>(9, -2)); }

// the embedded resolution graph of the two transversal trefoils
PlumbingGraph two_trefoils() {
  PlumbingGraph g;
  int e2a = g.add_vertex("E2A", -2);
  int e3a = g.add_vertex("E3A", -1);
  int e1 = g.add_vertex("E1", -5);
  int e3b = g.add_vertex("E3B", -1);
  int e2b = g.add_vertex("E2B", -2);
  g.add_edge(e2a, e3a);
  g.add_edge(e3a, e1);
  g.add_edge(e1, e3b);
  g.add_edge(e3b, e2b);
  g.add_arrow("L1", e3a);
  g.add_arrow("L2", e3b);
  return g;
}

std::mt19937 rng(20260811);

PlumbingGraph random_nd_tree(int n, int wmin = -5, int wmax = -1) {
  while (true) {
    PlumbingGraph g;
    std::uniform_int_distribution<long long> w(wmin, wmax);
    for (int i = 0; i < n; ++i) {
      g.add_vertex("v" + std::to_string(i), w(rng));
      if (i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        g.add_edge(parent(rng), i);
      }
    }
    if (is_negative_definite(g)) return g;
  }
}

}  // namespace

TEST_CASE("determinant basics") {
  PlumbingGraph g;
  CHECK(graph_det(g) == 1);  // det(empty) = 1
  int v = g.add_vertex("a", -2);
  CHECK(graph_det(g) == 2);
  CHECK(graph_det(g, {}) == 1);
  CHECK(graph_det(g, {v}) == 2);
  CHECK(graph_det(a9()) == 10);  // lens space L(10,9)
}

TEST_CASE("negative definiteness") {
  PlumbingGraph g;
  g.add_vertex("a", -1);
  CHECK(is_negative_definite(g));
  PlumbingGraph h;
  h.add_vertex("a", 0);
  CHECK_FALSE(is_negative_definite(h));
  CHECK(is_negative_definite(a9()));
  CHECK_FALSE(is_negative_definite(chain({-2, 0, -2})));
}

TEST_CASE("multiplicity matrix") {
  auto g = two_trefoils();
  auto m = multiplicity_matrix(g);
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      CHECK(m[i][j] == m[j][i]);
      CHECK(m[i][j] >= 0);
    }
  // linking number of the trefoils
  CHECK(m[g.require_vertex("E3A")][g.require_vertex("E3B")] == 4);
  // det = 1, so entries are integers and match the path-deletion rule
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      Rat v = m[i][j];
      CHECK(v.get_den() == 1);
      CHECK(v.get_num() == multiplicity_tree(g, i, j));
    }
}

TEST_CASE("multiplicity path rule on random det-1 trees") {
  // blow up repeatedly from a point: always a det-1 negative definite tree
  for (int trial = 0; trial < 12; ++trial) {
    PlumbingGraph g;
    g.add_vertex("v0", -1);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int step = 1; step <= 6; ++step) {
      if (g.edges.empty() || coin(rng)) {  // vertex blow-up
        std::uniform_int_distribution<int> pick(0, g.n() - 1);
        int u = pick(rng);
        int nv = g.add_vertex("v" + std::to_string(step), -1);
        g.vertices[u].e -= 1;
        g.add_edge(u, nv);
      } else {  // edge blow-up
        std::uniform_int_distribution<int> pick(0, static_cast<int>(g.edges.size()) - 1);
        auto [a, b] = g.edges[pick(rng)];
        int nv = g.add_vertex("v" + std::to_string(step), -1);
        g.vertices[a].e -= 1;
        g.vertices[b].e -= 1;
        g.edges.erase(std::find(g.edges.begin(), g.edges.end(), std::make_pair(a, b)));
        g.add_edge(a, nv);
        g.add_edge(nv, b);
      }
    }
    REQUIRE(graph_det(g) == 1);
    REQUIRE(is_negative_definite(g));
    auto m = multiplicity_matrix(g);
    for (int u = 0; u < g.n(); ++u)
      for (int v = 0; v < g.n(); ++v) CHECK(m[u][v] == multiplicity_tree(g, u, v));
  }
}

TEST_CASE("subgraph determinants of negative definite graphs stay positive") {
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_nd_tree(6);
    std::uniform_int_distribution<int> pick(0, 1);
    std::vector<int> subset;
    for (int v = 0; v < g.n(); ++v)
      if (pick(rng)) subset.push_back(v);
    CHECK(graph_det(g, subset) > 0);
  }
}

TEST_CASE("fraction-free determinant equals cofactor expansion") {
  // brute-force cofactor determinant on small random graphs
  std::function<Int(const std::vector<std::vector<Int>>&)> cof =
      [&](const std::vector<std::vector<Int>>& m) -> Int {
    size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Int acc = 0;
    for (size_t j = 0; j < n; ++j) {
      if (m[0][j] == 0) continue;
      std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
      for (size_t r = 1; r < n; ++r) {
        size_t cc = 0;
        for (size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor[r - 1][cc++] = m[r][c];
        }
      }
      Int term = m[0][j] * cof(minor);
      if (j % 2) acc -= term;
      else acc += term;
    }
    return acc;
  };
  for (int trial = 0; trial < 25; ++trial) {
    auto g = random_nd_tree(7, -8, -1);
    std::vector<std::vector<Int>> m(g.n(), std::vector<Int>(g.n(), 0));
    for (int i = 0; i < g.n(); ++i) m[i][i] = -to_int(g.vertices[i].e);
    for (auto& e : g.edges) {
      m[e.first][e.second] = -1;
      m[e.second][e.first] = -1;
    }
    CHECK(graph_det(g) == cof(m));
  }
}

TEST_CASE("determinant decomposition identity") {
  // chain graphs with u,v adjacent interior vertices
  auto g = chain({-2, -3, -2, -4, -2});
  CHECK(determinant_decomposition_check(g, 1, 2));
  // A9 with the 4th and 6th vertices
  CHECK(determinant_decomposition_check(a9(), 3, 5));
  // two vertices joined by an edge, middle part empty
  auto h = chain({-3, -4});
  CHECK(determinant_decomposition_check(h, 0, 1));
  // random trees
  for (int trial = 0; trial < 200; ++trial) {
    auto g2 = random_nd_tree(7, -6, -1);
    std::uniform_int_distribution<int> pick(0, g2.n() - 1);
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    CHECK(determinant_decomposition_check(g2, u, v));
  }
  CHECK_THROWS_AS(determinant_decomposition_check(g, 2, 2), BadDecomposition);
}

TEST_CASE("reduce: blow downs reach the fixed point") {
  // graph with no applicable moves is unchanged
  auto fixed = chain({-2, -3, -2});
  auto rf = reduce(fixed);
  REQUIRE(rf.components.size() == 1);
  CHECK(rf.components[0].n() == 3);

  // the bare two-trefoil resolution graph represents S^3 and melts away
  auto g = two_trefoils();
  g.arrows.clear();
  auto r = reduce(g);
  CHECK(r.components.empty());

  // a (-1) chain blows down to nothing: S^3
  auto s3 = chain({-1});
  auto r2 = reduce(s3);
  CHECK(r2.components.empty());
  CHECK(r2.s3_count == 1);

  // 0-split produces a connected sum
  PlumbingGraph sp;
  int a = sp.add_vertex("a", -3);
  int b = sp.add_vertex("b", -2);
  int u = sp.add_vertex("u", -7);
  int w = sp.add_vertex("w", 0);
  sp.add_edge(a, u);
  sp.add_edge(b, u);
  sp.add_edge(u, w);
  auto r3 = reduce(sp);
  CHECK(r3.components.size() == 2);
}

TEST_CASE("reduce preserves |det| across components") {
  for (int trial = 0; trial < 60; ++trial) {
    PlumbingGraph g;
    std::uniform_int_distribution<long long> w(-4, 4);
    int n = 6;
    for (int i = 0; i < n; ++i) {
      g.add_vertex("v" + std::to_string(i), w(rng));
      if (i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        g.add_edge(parent(rng), i);
      }
    }
    Int before = graph_det(g);
    auto r = reduce(g);
    Int after = 1;
    for (auto& comp : r.components) after *= graph_det(comp);
    CHECK(abs(before) == abs(after));
    // idempotent
    for (auto& comp : r.components) {
      auto again = reduce(comp);
      Int det2 = 1;
      for (auto& c2 : again.components) det2 *= graph_det(c2);
      CHECK(abs(det2) == abs(graph_det(comp)));
    }
  }
}

TEST_CASE("json round trip is byte stable") {
  auto g = two_trefoils();
  auto s1 = graph_to_json_string(g);
  auto g2 = graph_from_json_string(s1);
  auto s2 = graph_to_json_string(g2);
  CHECK(s1 == s2);
  CHECK(g2.n() == g.n());
  CHECK(graph_det(g2) == graph_det(g));
  CHECK_THROWS_AS(graph_from_json_string("{"), ParseError);
  CHECK_THROWS_AS(graph_from_json_string("{\"vertices\":[{\"id\":\"a\",\"e\":-2}],"
                                         "\"edges\":[[\"a\",\"b\"]]}"),
                  UnknownVertex);
}

TEST_CASE("hj chains") {
  CHECK(hj_chain(Int(5), Int(4)) == std::vector<long long>({-2, -2, -2, -2}));
  CHECK(hj_chain(Int(11), Int(10)) == std::vector<long long>(10, -2));
  CHECK(hj_chain(Int(16), Int(3)) == std::vector<long long>({-6, -2, -2}));
  CHECK(hj_chain(Int(3), Int(1)) == std::vector<long long>({-3}));
}
