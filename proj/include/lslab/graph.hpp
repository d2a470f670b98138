#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lslab/errors.hpp"

namespace lslab {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long constructor; all 64-bit literals go through here
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

// Plumbing graph: weighted simple graph (Euler numbers on vertices, all genera
// zero) plus optional arrowheads marking link components. The intersection
// form I has I_vv = e(v) and I_vw = 1 exactly when (v,w) is an edge. All
// determinants follow the det(G) := det(-I_G) convention, det(empty) = 1.
struct PlumbingGraph {
  struct Vertex {
    std::string id;
    long long e = 0;
  };
  struct Arrow {
    std::string label;
    int at = -1;  // vertex index
  };

  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // index pairs, stored with first < second
  std::vector<Arrow> arrows;

  int add_vertex(const std::string& id, long long e);
  void add_edge(int a, int b);
  void add_arrow(const std::string& label, int at);

  int n() const { return static_cast<int>(vertices.size()); }
  int index_of(const std::string& id) const;     // -1 if absent
  int require_vertex(const std::string& id) const;  // throws UnknownVertex
  bool adjacent(int a, int b) const;
  std::vector<std::vector<int>> adjacency() const;
  int valency(int v) const;  // graph edges only
  int arrow_count(int v) const;

  bool is_connected() const;
  bool is_tree() const;  // forest, actually: no cycles
  std::vector<std::vector<int>> components() const;

  // Induced subgraph on `keep` (indices into this graph). Arrows supported on
  // kept vertices are carried over.
  PlumbingGraph induced(const std::vector<int>& keep) const;
  PlumbingGraph without_vertex(int v) const;

  // Unique path between two vertices including both endpoints. Throws
  // BadDecomposition on non-tree graphs (paths would not be unique).
  std::vector<int> tree_path(int a, int b) const;
};

// Integer cycle Z = sum n_v E_v in the lattice spanned by the vertex classes.
struct Cycle {
  std::vector<Int> coeff;  // indexed like graph.vertices

  bool operator==(const Cycle& o) const { return coeff == o.coeff; }
};

// (Z, E_v) for every v: I acting on the coefficient vector.
std::vector<Int> pairing_with_basis(const PlumbingGraph& g, const Cycle& z);

// det(-I) restricted to a vertex subset (whole graph by default).
Int graph_det(const PlumbingGraph& g);
Int graph_det(const PlumbingGraph& g, const std::vector<int>& subset);

bool is_negative_definite(const PlumbingGraph& g);

// Exact -I^{-1}. Throws SingularForm when det(I) = 0.
std::vector<std::vector<Rat>> multiplicity_matrix(const PlumbingGraph& g);

// m_uv for trees with det = 1: det(Gamma - path(u,v)), the Lemma-style route.
Int multiplicity_tree(const PlumbingGraph& g, int u, int v);

// det(G)*det(G~) = a'p - a p' g^2 decomposition identity for a cut pair (u,v).
bool determinant_decomposition_check(const PlumbingGraph& g, int u, int v);

// Plumbing-calculus reduction. Moves applied to fixpoint:
//   - blow down (+-1)-framed vertices of valency <= 2,
//   - 0-chain absorption (0-framed valency-2 vertex merges its neighbors),
//   - 0-split (0-framed leaf deletes itself and its support vertex),
//   - slam-dunk absorption of a positively framed leaf into a host with
//     e <= -1 (leaf n >= 2 at host d becomes the Hirzebruch-Jung chain of
//     d - 1/n), which eliminates positive framings the three classic moves
//     cannot reach.
// Vertices carrying arrows are never touched. The result is a multiset of
// connected components representing the same 3-manifold as a connected sum;
// components that reduce away entirely are counted as S^3 summands.
struct ReduceResult {
  std::vector<PlumbingGraph> components;
  int s3_count = 0;
  std::vector<std::string> moves;
};
ReduceResult reduce(const PlumbingGraph& g);

// Negative continued fraction r = [b1, b2, ...] with all b_i >= 2, for a
// rational r = num/den < -1 given as |num|/den > 1. Returns the weights
// -b1, -b2, ... of the equivalent chain.
std::vector<long long> hj_chain(const Int& num, const Int& den);

// JSON interchange (canonical: vertices sorted by id, edges as sorted id
// pairs, arrows by label). Round-trips byte-stably.
PlumbingGraph graph_from_json_string(const std::string& text);
std::string graph_to_json_string(const PlumbingGraph& g);

}  // namespace lslab
