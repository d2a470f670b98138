#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "lslab/link.hpp"

using namespace lslab;

namespace {

AlgebraicLink two_trefoils() {
  return build_link({{{2, 3}}}, {{{2, 3}}}, SpliceFamily::II, 0);
}

AlgebraicLink l_family(long long s) {
  // trefoil companion and its (2,2s+1)-cable: branch1 is the cable
  BranchSpec cable{{{2, 3}, {2, 2 * s - 11}}};
  BranchSpec trefoil{{{2, 3}}};
  return build_link(cable, trefoil, SpliceFamily::I, 1);
}

}  // namespace

TEST_CASE("splice decorations and milnor numbers") {
  BranchSpec trefoil{{{2, 3}}};
  CHECK(splice_decorations(trefoil) == std::vector<long long>{3});
  CHECK(milnor_number(trefoil) == 2);
  BranchSpec cable{{{2, 3}, {3, 2}}};
  CHECK(splice_decorations(cable) == std::vector<long long>{3, 20});
  CHECK(milnor_number(cable) == 44);  // (3,20)-cable of the trefoil
  BranchSpec c6{{{2, 3}, {2, 1}}};
  CHECK(splice_decorations(c6) == std::vector<long long>{3, 13});
  CHECK(milnor_number(c6) == 16);
}

TEST_CASE("two transversal trefoils") {
  auto lk = two_trefoils();
  CHECK(lk.graph.n() == 5);
  CHECK(graph_det(lk.graph) == 1);
  CHECK(lk.m1 == 6);
  CHECK(lk.m2 == 6);
  CHECK(lk.l() == 4);
  CHECK(lk.mu1 == 2);
  CHECK(lk.mu2 == 2);
  CHECK(lk.c == Pt{6, 6});
  CHECK_FALSE(lk.parallel);
  CHECK(lk.support_is_minus_one_1);
  CHECK(lk.support_is_minus_one_2);
  // the graph is the known chain E2A - E3A - E1 - E3B - E2B
  CHECK(lk.graph.vertices[lk.v1].e == -1);
  std::multiset<long long> weights;
  for (auto& v : lk.graph.vertices) weights.insert(v.e);
  CHECK(weights == std::multiset<long long>({-5, -2, -2, -1, -1}));
  // trefoil semigroup {0,2,3,...}
  CHECK(lk.sg1.conductor == 2);
  CHECK(lk.sg1.below_conductor == std::vector<long long>{0});
  CHECK(lk.sg1.contains(0));
  CHECK_FALSE(lk.sg1.contains(1));
  CHECK(lk.sg1.contains(2));
  CHECK(lk.sg1.minimal_generators() == std::vector<long long>({2, 3}));
}

TEST_CASE("trefoil and its (3,20) cable") {
  auto lk = build_link({{{2, 3}}}, {{{2, 3}, {3, 2}}}, SpliceFamily::I, 1);
  CHECK(lk.m1 == 6);
  CHECK(lk.m2 == 60);
  CHECK(lk.mu1 == 2);
  CHECK(lk.mu2 == 44);
  CHECK_FALSE(lk.parallel);
  // linking of the generic companion with its (3,20)-cable: 2*3*3 = 18
  CHECK(lk.linking == 18);
}

TEST_CASE("L(s) family basics") {
  auto l6 = l_family(6);
  CHECK(l6.l() == 12);
  CHECK(l6.m1 == 26);  // cable branch: 2 * 13
  CHECK(l6.m2 == 6);   // trefoil branch
  CHECK(l6.mu1 == 16);
  CHECK(l6.mu2 == 2);
  CHECK(l6.c == Pt{28, 14});
}

TEST_CASE("unknot branches") {
  // Hopf link: two smooth transversal branches
  auto hopf = build_link({}, {}, SpliceFamily::II, 0);
  CHECK(hopf.graph.n() == 1);
  CHECK(hopf.parallel);
  CHECK(hopf.m1 == 1);
  CHECK(hopf.m2 == 1);
  CHECK(hopf.l() == 1);
  CHECK(hopf.mu1 == 0);
  CHECK(hopf.mu2 == 0);

  // trefoil with a smooth transversal branch
  auto lk = build_link({{{2, 3}}}, {}, SpliceFamily::II, 0);
  CHECK(lk.m1 == 6);
  CHECK(lk.m2 == 1);
  CHECK(lk.l() == 2);
  CHECK(lk.mu2 == 0);
  CHECK_FALSE(lk.parallel);
  CHECK(lk.graph.vertices[lk.v2].e == -3);
  CHECK(lk.sg2.conductor == 0);  // unknot: S = Z_{>=0}
  CHECK(lk.sg2.contains(0));
  CHECK(lk.sg2.contains(1));
}

TEST_CASE("parallel doubled trefoil") {
  auto lk = build_link({{{2, 3}}}, {{{2, 3}}}, SpliceFamily::I, 1);
  CHECK(lk.parallel);
  CHECK(lk.v1 == lk.v2);
  CHECK(lk.m1 == lk.m2);  // Lemma-style: parallel implies m1 = m2
  CHECK(lk.m1 == 6);
  CHECK(lk.l() == 6);     // T(4,6) components have linking 6
  // ... and via family II with equal stage-1 pairs
  auto lk2 = build_link({{{2, 3}}}, {{{2, 3}}}, SpliceFamily::II, 1);
  CHECK(lk2.parallel);
  CHECK(lk2.l() == 6);
}

TEST_CASE("family II tangential pair (trefoil, (2,5)-cusp)") {
  auto lk = build_link({{{2, 3}}}, {{{2, 5}}}, SpliceFamily::II, 1);
  CHECK_FALSE(lk.parallel);
  CHECK(lk.l() == 6);
  CHECK(lk.m1 == 6);
  CHECK(lk.m2 == 10);
  CHECK(lk.mu2 == 4);
  // the resolution is the chain [-3,-1,-4,-1,-2] from the joint cascade
  std::multiset<long long> weights;
  for (auto& v : lk.graph.vertices) weights.insert(v.e);
  CHECK(weights == std::multiset<long long>({-4, -3, -2, -1, -1}));
}

TEST_CASE("splice multiplicity matches the inverse intersection form") {
  for (auto lk : {two_trefoils(), l_family(6),
                  build_link({{{2, 3}}}, {{{2, 5}}}, SpliceFamily::II, 1)}) {
    auto m = multiplicity_matrix(lk.graph);
    for (int a : lk.splice.kept)
      for (int b : lk.splice.kept) {
        CHECK(splice_multiplicity(lk, a, b) == m[a][b]);
      }
  }
}

TEST_CASE("branch semigroup closed under addition") {
  auto lk = l_family(6);
  // cable semigroup: generated by 4, 6, 13
  auto& sg = lk.sg1;
  CHECK(sg.minimal_generators() == std::vector<long long>({4, 6, 13}));
  for (long long a = 0; a <= 2 * sg.conductor; ++a)
    for (long long b = 0; b <= 2 * sg.conductor; ++b)
      if (sg.contains(a) && sg.contains(b)) CHECK(sg.contains(a + b));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS(build_link({{{2, 4}}}, {}, SpliceFamily::II, 0), InvalidNewtonPairs);
  CHECK_THROWS_AS(build_link({{{1, 3}}}, {}, SpliceFamily::II, 0), InvalidNewtonPairs);
  CHECK_THROWS_AS(build_link({{{2, 3}}}, {}, SpliceFamily::I, 1), NonAlgebraicConfiguration);
  CHECK_THROWS_AS(build_link({{{2, 3}}}, {{{2, 5}}}, SpliceFamily::I, 1),
                  NonAlgebraicConfiguration);
}

TEST_CASE("json round trip") {
  auto lk = link_from_json_string(
      R"({"branch1":[[2,3]],"branch2":[[2,3],[3,2]],"family":"I","n":1})");
  CHECK(lk.m2 == 60);
  auto spec = link_spec_to_json_string(lk);
  auto lk2 = link_from_json_string(spec);
  CHECK(lk2.m2 == 60);
  CHECK(lk2.delta.terms == lk.delta.terms);
}

TEST_CASE("raw graph ingestion") {
  PlumbingGraph g;
  int e2a = g.add_vertex("a", -2);
  int e3a = g.add_vertex("b", -1);
  int e1 = g.add_vertex("c", -5);
  int e3b = g.add_vertex("d", -1);
  int e2b = g.add_vertex("e", -2);
  g.add_edge(e2a, e3a);
  g.add_edge(e3a, e1);
  g.add_edge(e1, e3b);
  g.add_edge(e3b, e2b);
  g.add_arrow("L1", e3a);
  g.add_arrow("L2", e3b);
  auto lk = link_from_graph(g);
  CHECK(lk.l() == 4);
  CHECK(lk.m1 == 6);
  // a graph with the wrong determinant is rejected
  PlumbingGraph bad;
  bad.add_vertex("a", -2);
  bad.add_arrow("L1", 0);
  bad.add_arrow("L2", 0);
  CHECK_THROWS_AS(link_from_graph(bad), NonAlgebraicConfiguration);
}
