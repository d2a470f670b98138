#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lslab/graph.hpp"

namespace lslab {

// One step of Laufer's computation sequence: the cycle before the step, the
// vertex that was added and its testing number (z_i, E_{v(i)}).
struct LauferStep {
  Cycle cycle;
  int chosen_vertex = -1;
  Int testing_number;
};

struct LauferTrace {
  std::vector<LauferStep> steps;
  Cycle result;  // the minimal cycle Z_min
  bool all_testing_ones = true;
};

// Laufer's algorithm on a connected negative-definite arrowless graph.
// Deterministic vertex choice (lowest index with positive pairing); the
// result is policy-independent. Throws NotNegativeDefinite.
LauferTrace minimal_cycle(const PlumbingGraph& g);
LauferTrace minimal_cycle(const PlumbingGraph& g, int policy);  // 0,1,2: choice policies

// Laufer's rationality criterion: every testing number along the sequence is 1.
bool is_rational(const PlumbingGraph& g);

// Z_min coefficient of v equals 1.
bool is_simple_vertex(const PlumbingGraph& g, int v);

enum class Ls { LSpace, NotLSpace, Indeterminate };

const char* to_string(Ls v);

struct GraphLsVerdict {
  Ls verdict = Ls::Indeterminate;
  std::string certificate;  // human-readable evidence trail
};

// L-space test for an arbitrary plumbing graph: reduce, then per component
// decide by negative-definite rationality, lens-space recognition on chains,
// or Seifert normalization on star shapes (which also handles the reversed
// orientation). Components that stay undecidable yield Indeterminate.
GraphLsVerdict is_lspace_graph(const PlumbingGraph& g);

// Gamma_{d'}: new vertex with framing d' attached at v. Asserts the
// determinant identity det(Gamma_{d'}) = -d' det(Gamma) - det(Gamma \ v).
PlumbingGraph vertex_surgery_graph(const PlumbingGraph& g, int v, long long d_prime);

// Tjurina nesting depth k of (Gamma, v): length of the chain
// Gamma > Delta_1 > ... > Delta_k = empty of Tjurina components through v.
int tjurina_nesting_depth(const PlumbingGraph& g, int v);

struct NegativeSurgeryRange {
  bool simple = false;
  int threshold_k = 0;  // rational for all d' <= -k when simple
  // direct probe results for d' in [-k-1, -1] (empty when not simple)
  std::vector<std::pair<long long, Ls>> probes;
};

// Theorem-style description of the d' << 0 half of the vertex L-space range.
// Requires g connected, negative definite and rational (else NotRational).
NegativeSurgeryRange negative_surgery_lspace_range(const PlumbingGraph& g, int v);

}  // namespace lslab
