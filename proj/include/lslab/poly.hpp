#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lslab/graph.hpp"  // Int

namespace lslab {

using Pt = std::pair<long long, long long>;  // lattice point / exponent pair

// Sparse exact-integer polynomial in t1, t2 with support in Z^2 (nonnegative
// after normalization). Terms map exponent pairs to coefficients.
class BivariatePolynomial {
 public:
  std::map<Pt, Int> terms;

  static BivariatePolynomial one() { return monomial(0, 0, 1); }
  static BivariatePolynomial monomial(long long a, long long b, Int c);

  bool is_zero() const { return terms.empty(); }
  Int coeff(long long a, long long b) const;
  void add_term(long long a, long long b, const Int& c);

  BivariatePolynomial operator+(const BivariatePolynomial& o) const;
  BivariatePolynomial operator-(const BivariatePolynomial& o) const;
  BivariatePolynomial operator*(const BivariatePolynomial& o) const;
  bool operator==(const BivariatePolynomial& o) const { return terms == o.terms; }

  // Exact division by (1 - t1^a t2^b), (a,b) != (0,0) nonnegative. Throws
  // InexactDivision when the remainder is nonzero.
  BivariatePolynomial divide_by_one_minus_monomial(long long a, long long b) const;

  // Shift so the support minimum is (0,0) and the minimal term is +1;
  // returns the applied shift.
  Pt normalize_min_to_origin();

  std::vector<Pt> support() const;
  Pt degree() const;  // componentwise max of the support (0,0 for 0)
  bool has_01_coefficients() const;

  BivariatePolynomial substitute_t2_one() const;       // p(t,1)
  BivariatePolynomial substitute_t1_one() const;       // p(1,t)
  BivariatePolynomial swap_variables() const;

  std::string to_string() const;  // human-readable, sorted terms

  size_t term_cap = 1000000;  // guardrail for intermediate blowup
};

// support chain test under the product order; when false, a witness
// incomparable pair (lexicographically earliest) is reported.
bool ordered_type(const BivariatePolynomial& p, std::pair<Pt, Pt>* witness = nullptr);

// symmetry v -> c - 1 - v on the support
bool symmetry_check(const BivariatePolynomial& p, Pt c);

// {"terms":[[a,b,c],...]} with sorted exponents
BivariatePolynomial poly_from_json_string(const std::string& text);
std::string poly_to_json_string(const BivariatePolynomial& p);

}  // namespace lslab
