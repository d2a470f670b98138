#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "lslab/graph.hpp"
#include "lslab/poly.hpp"

namespace lslab {

// An irreducible plane curve branch as an iterated torus knot: Newton pairs
// (p_i, q_i), gcd = 1, p_i >= 2, q_i >= 1, and q_1 > p_1 for the first pair
// (a first pair given as (q,p) with q < p is normalized by swapping).
// The empty list encodes a smooth branch (unknot).
struct BranchSpec {
  std::vector<std::pair<long long, long long>> newton_pairs;

  bool smooth() const { return newton_pairs.empty(); }
};

enum class SpliceFamily { I, II };

// Splice decorations a_i: a_1 = q_1, a_{i+1} = q_{i+1} + p_i p_{i+1} a_i.
std::vector<long long> splice_decorations(const BranchSpec& b);
// Milnor number through the same recursion.
long long milnor_number(const BranchSpec& b);

struct BranchSemigroup {
  long long conductor = 0;                 // = mu (degree of Delta)
  std::vector<long long> below_conductor;  // sorted elements < conductor
  bool contains(long long s) const;
  std::vector<long long> minimal_generators() const;
};

// Splice diagram derived from the resolution graph by erasing the
// arrowless two-valent vertices; near weights are subgraph determinants.
struct SpliceDiagram {
  std::vector<int> kept;  // resolution-graph vertex indices
  struct Edge {
    int a, b;    // indices into `kept`
    Int wa, wb;  // near weight at a toward b, and at b toward a
  };
  std::vector<Edge> edges;

  int kept_index_of(int graph_vertex) const;
  std::vector<std::vector<int>> adjacency() const;  // over kept indices
};

struct AlgebraicLink {
  BranchSpec branch1, branch2;
  SpliceFamily family = SpliceFamily::II;
  int shared_prefix = 0;

  PlumbingGraph graph;  // embedded resolution graph with arrows "L1", "L2"
  int v1 = -1, v2 = -1;
  bool parallel = false;
  bool support_is_minus_one_1 = false;
  bool support_is_minus_one_2 = false;

  SpliceDiagram splice;

  Int m1, m2;     // det(Gamma \ v_i); 1 for unknot branches
  Int linking;    // l
  long long mu1 = 0, mu2 = 0;  // 2 g_i
  Pt c{0, 0};     // (mu1 + l, mu2 + l)

  BivariatePolynomial delta;            // normalized multivariable Alexander
  BivariatePolynomial delta1, delta2;   // one-variable, in the t1 slot
  BranchSemigroup sg1, sg2;

  long long g1() const { return mu1 / 2; }
  long long g2() const { return mu2 / 2; }
  long long l() const { return linking.get_si(); }
};

// Build from Newton pairs. Family/prefix semantics:
//   - n = 0 (either family): branches meet transversally (distinct tangents).
//   - family I, prefix n >= 1: the first n Newton pairs coincide and the
//     branches separate transversally right after the n-th package.
//   - family II, prefix n >= 1: the first n-1 pairs coincide and the n-th
//     packages share the tangent direction, separating where their Puiseux
//     data diverges.
// Throws InvalidNewtonPairs / NonAlgebraicConfiguration.
AlgebraicLink build_link(const BranchSpec& b1, const BranchSpec& b2, SpliceFamily family, int n);

// Raw-graph ingestion: validates (tree, connected, det 1, two arrows,
// positive edge determinants) and derives the same invariants. Realizability
// as an actual curve is the caller's responsibility.
AlgebraicLink link_from_graph(const PlumbingGraph& g);

// m_uv between splice vertices via the path product of near weights.
Int splice_multiplicity(const AlgebraicLink& lk, int graph_u, int graph_v);

// {"branch1":[[2,3]],"branch2":[[2,3],[3,2]],"family":"II","n":0}
AlgebraicLink link_from_json_string(const std::string& text);
std::string link_spec_to_json_string(const AlgebraicLink& lk);

}  // namespace lslab
