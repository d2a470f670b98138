#include "lslab/alexander.hpp"

#include <algorithm>

namespace lslab {

namespace {

long long as_ll(const Int& v) {
  if (!v.fits_slong_p()) throw NonAlgebraicConfiguration("multiplicity exponent too large");
  return v.get_si();
}

// product of (1 - t1^a t2^b) over `num`, divided exactly by the same over `den`
BivariatePolynomial binomial_product(const std::vector<Pt>& num, const std::vector<Pt>& den) {
  BivariatePolynomial acc = BivariatePolynomial::one();
  for (auto& [a, b] : num) {
    BivariatePolynomial f = BivariatePolynomial::one();
    f.add_term(a, b, -1);
    acc = acc * f;
  }
  for (auto& [a, b] : den) acc = acc.divide_by_one_minus_monomial(a, b);
  return acc;
}

}  // namespace

BivariatePolynomial alexander_from_resolution(const PlumbingGraph& g, int v1, int v2) {
  std::vector<Pt> num, den;
  for (int u = 0; u < g.n(); ++u) {
    int delta = g.valency(u) + g.arrow_count(u);
    if (delta == 2) continue;
    Pt m{as_ll(multiplicity_tree(g, u, v1)), as_ll(multiplicity_tree(g, u, v2))};
    for (int k = 0; k < std::abs(delta - 2); ++k) (delta > 2 ? num : den).push_back(m);
  }
  // the denominator (1-x) factors divide the expanded numerator exactly, but
  // the literal product may differ from Delta by a monomial unit and a sign
  auto p = binomial_product(num, den);
  p.normalize_min_to_origin();
  return p;
}

BivariatePolynomial alexander_of_component(const PlumbingGraph& g, int v) {
  std::vector<Pt> num{{1, 0}}, den;  // extra (1-t): the knot-case product is Delta/(1-t)
  for (int u = 0; u < g.n(); ++u) {
    int delta = g.valency(u) + (u == v ? 1 : 0);
    if (delta == 2) continue;
    Pt m{as_ll(multiplicity_tree(g, u, v)), 0};
    for (int k = 0; k < std::abs(delta - 2); ++k) (delta > 2 ? num : den).push_back(m);
  }
  auto p = binomial_product(num, den);
  p.normalize_min_to_origin();
  return p;
}

BivariatePolynomial alexander_from_graph(const AlgebraicLink& lk) {
  return alexander_from_resolution(lk.graph, lk.v1, lk.v2);
}

BivariatePolynomial recover_delta1(const BivariatePolynomial& delta, long long l) {
  BivariatePolynomial at1 = delta.substitute_t2_one();
  BivariatePolynomial one_minus_t = BivariatePolynomial::one();
  one_minus_t.add_term(1, 0, -1);
  auto num = at1 * one_minus_t;
  num.normalize_min_to_origin();
  auto d1 = num.divide_by_one_minus_monomial(l, 0);
  d1.normalize_min_to_origin();
  return d1;
}

namespace {

bool torres_side(const BivariatePolynomial& delta, const BivariatePolynomial& delta1,
                 long long l) {
  // Delta(t,1) =? Delta_1(t)/(1-t) * (1-t^l): compare Delta(t,1)*(1-t) with
  // Delta_1(t)*(1-t^l) exactly (both normalized to minimal degree 0).
  BivariatePolynomial one_minus_t = BivariatePolynomial::one();
  one_minus_t.add_term(1, 0, -1);
  BivariatePolynomial one_minus_tl = BivariatePolynomial::one();
  one_minus_tl.add_term(l, 0, -1);
  auto lhs = delta.substitute_t2_one() * one_minus_t;
  auto rhs = delta1 * one_minus_tl;
  lhs.normalize_min_to_origin();
  rhs.normalize_min_to_origin();
  return lhs == rhs;
}

}  // namespace

bool torres_check(const AlgebraicLink& lk) {
  long long l = lk.l();
  if (!torres_side(lk.delta, lk.delta1, l)) return false;
  return torres_side(lk.delta.swap_variables(), lk.delta2, l);
}

long long support_on_line(const AlgebraicLink& lk, long long v1) {
  if (!(v1 > 0 && v1 < lk.l() && lk.sg1.contains(v1)))
    throw PreconditionViolated("needs 0 < v1 < l with v1 in the first branch semigroup");
  for (auto& [e, cc] : lk.delta.terms)
    if (e.first == v1 && e.second > 0) return e.second;
  throw EquivalenceViolation("guaranteed support point missing on the line");
}

}  // namespace lslab
