#pragma once

#include "lslab/graph.hpp"
#include "lslab/link.hpp"
#include "lslab/poly.hpp"

namespace lslab {

// Multivariable Alexander polynomial of the two-component link carried by a
// resolution graph, via the splice/resolution product formula: over vertices
// u of nonzero weight delta_u - 2 (valency counting arrowheads), multiply
// (1 - t1^{m_{u,v1}} t2^{m_{u,v2}})^{delta_u - 2}. All divisions are exact;
// the result is normalized to minimal support point (0,0).
BivariatePolynomial alexander_from_resolution(const PlumbingGraph& g, int v1, int v2);

// One-variable Alexander polynomial of the component whose arrowhead sits at
// v, from the same graph (only that arrow counts toward valency). Returned in
// the t1 slot.
BivariatePolynomial alexander_of_component(const PlumbingGraph& g, int v);

BivariatePolynomial alexander_from_graph(const AlgebraicLink& lk);

// Torres: Delta(t,1) = Delta_1(t)/(1-t) * (1-t^l), checked exactly after
// normalizing both sides to minimal degree 0. Also checked with the roles of
// the components swapped.
bool torres_check(const AlgebraicLink& lk);

// Delta_1 recovered from Delta by the Torres identity: Delta(t,1)(1-t)/(1-t^l).
BivariatePolynomial recover_delta1(const BivariatePolynomial& delta, long long l);

// Lemma-style witness: for 0 < v1 < l with v1 in the first branch semigroup
// there is some v2 > 0 with (v1,v2) in the support. Throws
// PreconditionViolated outside that range.
long long support_on_line(const AlgebraicLink& lk, long long v1);

}  // namespace lslab
