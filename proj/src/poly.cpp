#include "lslab/poly.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace lslab {

BivariatePolynomial BivariatePolynomial::monomial(long long a, long long b, Int c) {
  BivariatePolynomial p;
  if (c != 0) p.terms[{a, b}] = std::move(c);
  return p;
}

Int BivariatePolynomial::coeff(long long a, long long b) const {
  auto it = terms.find({a, b});
  return it == terms.end() ? Int(0) : it->second;
}

void BivariatePolynomial::add_term(long long a, long long b, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace({a, b}, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

BivariatePolynomial BivariatePolynomial::operator+(const BivariatePolynomial& o) const {
  BivariatePolynomial r = *this;
  for (auto& [e, c] : o.terms) r.add_term(e.first, e.second, c);
  return r;
}

BivariatePolynomial BivariatePolynomial::operator-(const BivariatePolynomial& o) const {
  BivariatePolynomial r = *this;
  for (auto& [e, c] : o.terms) r.add_term(e.first, e.second, -c);
  return r;
}

BivariatePolynomial BivariatePolynomial::operator*(const BivariatePolynomial& o) const {
  BivariatePolynomial r;
  r.term_cap = term_cap;
  for (auto& [e1, c1] : terms)
    for (auto& [e2, c2] : o.terms) {
      r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
      if (r.terms.size() > r.term_cap)
        throw InexactDivision("polynomial support exceeded the configured cap");
    }
  return r;
}

namespace {
// graded-lex on exponent pairs
bool grlex_less(const Pt& a, const Pt& b) {
  long long da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a < b;
}
}  // namespace

BivariatePolynomial BivariatePolynomial::divide_by_one_minus_monomial(long long a,
                                                                      long long b) const {
  if (a < 0 || b < 0 || (a == 0 && b == 0))
    throw InexactDivision("divisor exponent must be nonnegative and nonzero");
  // q = f / (1 - X): peel minimal terms; r - tau (1 - X) replaces tau by tau X.
  BivariatePolynomial q, r = *this;
  long long maxdeg = 0;
  for (auto& [e, c] : terms) maxdeg = std::max(maxdeg, e.first + e.second);
  while (!r.is_zero()) {
    auto it = std::min_element(
        r.terms.begin(), r.terms.end(),
        [](const auto& x, const auto& y) { return grlex_less(x.first, y.first); });
    Pt e = it->first;
    Int c = it->second;
    if (e.first + e.second > maxdeg)
      throw InexactDivision("nonzero remainder dividing by (1 - t1^" + std::to_string(a) +
                            " t2^" + std::to_string(b) + ")");
    q.add_term(e.first, e.second, c);
    r.terms.erase(it);
    r.add_term(e.first + a, e.second + b, c);
    if (q.terms.size() > term_cap) throw InexactDivision("quotient support exceeded the cap");
  }
  return q;
}

Pt BivariatePolynomial::normalize_min_to_origin() {
  if (terms.empty()) return {0, 0};
  long long ma = terms.begin()->first.first, mb = terms.begin()->first.second;
  for (auto& [e, c] : terms) {
    ma = std::min(ma, e.first);
    mb = std::min(mb, e.second);
  }
  std::map<Pt, Int> shifted;
  for (auto& [e, c] : terms) shifted[{e.first - ma, e.second - mb}] = c;
  terms = std::move(shifted);
  auto lead = std::min_element(
      terms.begin(), terms.end(),
      [](const auto& x, const auto& y) { return grlex_less(x.first, y.first); });
  if (lead != terms.end() && lead->second < 0)
    for (auto& [e, c] : terms) c = -c;
  return {ma, mb};
}

std::vector<Pt> BivariatePolynomial::support() const {
  std::vector<Pt> s;
  for (auto& [e, c] : terms) s.push_back(e);
  return s;
}

Pt BivariatePolynomial::degree() const {
  Pt d{0, 0};
  for (auto& [e, c] : terms) {
    d.first = std::max(d.first, e.first);
    d.second = std::max(d.second, e.second);
  }
  return d;
}

bool BivariatePolynomial::has_01_coefficients() const {
  for (auto& [e, c] : terms)
    if (c != 1) return false;  // zero coefficients are not stored
  return true;
}

BivariatePolynomial BivariatePolynomial::substitute_t2_one() const {
  BivariatePolynomial r;
  for (auto& [e, c] : terms) r.add_term(e.first, 0, c);
  return r;
}

BivariatePolynomial BivariatePolynomial::substitute_t1_one() const {
  BivariatePolynomial r;
  for (auto& [e, c] : terms) r.add_term(e.second, 0, c);
  return r;
}

BivariatePolynomial BivariatePolynomial::swap_variables() const {
  BivariatePolynomial r;
  for (auto& [e, c] : terms) r.add_term(e.second, e.first, c);
  return r;
}

std::string BivariatePolynomial::to_string() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : terms) {
    Int cc = c;
    if (!first) os << (cc >= 0 ? " + " : " - ");
    else if (cc < 0) os << "-";
    first = false;
    if (cc < 0) cc = -cc;
    bool need_coeff = (cc != 1) || (e.first == 0 && e.second == 0);
    if (need_coeff) os << cc.get_str();
    if (e.first != 0) os << "t1" << (e.first == 1 ? "" : "^" + std::to_string(e.first));
    if (e.second != 0) os << "t2" << (e.second == 1 ? "" : "^" + std::to_string(e.second));
  }
  return os.str();
}

bool ordered_type(const BivariatePolynomial& p, std::pair<Pt, Pt>* witness) {
  // lex-sorted support is a chain iff consecutive points are comparable
  auto s = p.support();
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i + 1 < s.size(); ++i) {
    const Pt& u = s[i];
    const Pt& v = s[i + 1];
    bool cmp = (u.first <= v.first && u.second <= v.second) ||
               (v.first <= u.first && v.second <= u.second);
    if (!cmp) {
      if (witness) *witness = {u, v};
      return false;
    }
  }
  return true;
}

bool symmetry_check(const BivariatePolynomial& p, Pt c) {
  for (auto& [e, coeffv] : p.terms) {
    Pt dual{c.first - 1 - e.first, c.second - 1 - e.second};
    if (p.coeff(dual.first, dual.second) != coeffv) return false;
  }
  return true;
}

BivariatePolynomial poly_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  BivariatePolynomial p;
  for (auto& t : j.at("terms"))
    p.add_term(t.at(0).get<long long>(), t.at(1).get<long long>(),
               to_int(t.at(2).get<long long>()));
  return p;
}

std::string poly_to_json_string(const BivariatePolynomial& p) {
  nlohmann::json j;
  j["terms"] = nlohmann::json::array();
  for (auto& [e, c] : p.terms) {
    if (!c.fits_slong_p()) throw ParseError("coefficient too large for JSON export");
    j["terms"].push_back({e.first, e.second, c.get_si()});
  }
  return j.dump();
}

}  // namespace lslab
