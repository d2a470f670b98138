#include "lslab/rational.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace lslab {

const char* to_string(Ls v) {
  switch (v) {
    case Ls::LSpace: return "LSpace";
    case Ls::NotLSpace: return "NotLSpace";
    default: return "Indeterminate";
  }
}

LauferTrace minimal_cycle(const PlumbingGraph& g) { return minimal_cycle(g, 0); }

LauferTrace minimal_cycle(const PlumbingGraph& g, int policy) {
  if (g.n() == 0) throw NotNegativeDefinite("empty graph has no minimal cycle");
  if (!g.is_connected()) throw NotNegativeDefinite("minimal cycle needs a connected graph");
  if (!is_negative_definite(g)) throw NotNegativeDefinite("graph is not negative definite");

  LauferTrace tr;
  Cycle z;
  z.coeff.assign(g.n(), 0);
  z.coeff[0] = 1;
  auto pair = pairing_with_basis(g, z);
  auto adj = g.adjacency();

  while (true) {
    int chosen = -1;
    switch (policy) {
      case 1:  // highest index
        for (int v = g.n() - 1; v >= 0; --v)
          if (pair[v] > 0) {
            chosen = v;
            break;
          }
        break;
      case 2:  // largest testing number, ties to lowest index
        for (int v = 0; v < g.n(); ++v)
          if (pair[v] > 0 && (chosen < 0 || pair[v] > pair[chosen])) chosen = v;
        break;
      default:
        for (int v = 0; v < g.n(); ++v)
          if (pair[v] > 0) {
            chosen = v;
            break;
          }
    }
    if (chosen < 0) break;
    LauferStep step;
    step.cycle = z;
    step.chosen_vertex = chosen;
    step.testing_number = pair[chosen];
    if (pair[chosen] != 1) tr.all_testing_ones = false;
    tr.steps.push_back(std::move(step));
    z.coeff[chosen] += 1;
    pair[chosen] += to_int(g.vertices[chosen].e);
    for (int w : adj[chosen]) pair[w] += 1;
  }
  tr.result = z;
  return tr;
}

bool is_rational(const PlumbingGraph& g) { return minimal_cycle(g).all_testing_ones; }

bool is_simple_vertex(const PlumbingGraph& g, int v) {
  if (v < 0 || v >= g.n()) throw UnknownVertex("vertex index out of range");
  return minimal_cycle(g).result.coeff[v] == 1;
}

// ---------------------------------------------------------------------------
// L-space verdict for arbitrary graphs

namespace {

GraphLsVerdict combine(std::vector<GraphLsVerdict> parts) {
  GraphLsVerdict out;
  out.verdict = Ls::LSpace;
  for (auto& p : parts) {
    if (p.verdict == Ls::NotLSpace) return p;
    if (p.verdict == Ls::Indeterminate) out.verdict = Ls::Indeterminate;
    if (!out.certificate.empty()) out.certificate += "; ";
    out.certificate += p.certificate;
  }
  return out;
}

int max_valency(const PlumbingGraph& g) {
  int m = 0;
  for (int v = 0; v < g.n(); ++v) m = std::max(m, g.valency(v));
  return m;
}

PlumbingGraph negated(PlumbingGraph g) {
  for (auto& v : g.vertices) v.e = -v.e;
  return g;
}

GraphLsVerdict component_verdict(const PlumbingGraph& comp, bool allow_flip);

// Star-shaped component: read off Seifert data, renormalize to the canonical
// negative-definite star (reversing orientation when e > 0), test rationality.
GraphLsVerdict star_verdict(const PlumbingGraph& comp, int center) {
  auto adj = comp.adjacency();
  std::vector<int> rest;
  for (int i = 0; i < comp.n(); ++i)
    if (i != center) rest.push_back(i);
  PlumbingGraph cut = comp.induced(rest);

  Rat e(to_int(comp.vertices[center].e));
  std::vector<Rat> omegas;
  for (auto& legidx : cut.components()) {
    PlumbingGraph leg = cut.induced(legidx);
    if (max_valency(leg) > 2) return {Ls::Indeterminate, "branched leg"};
    // innermost = the leg vertex adjacent to the center in comp
    int inner = -1;
    for (int i = 0; i < leg.n(); ++i)
      if (comp.adjacent(center, comp.index_of(leg.vertices[i].id))) inner = i;
    if (inner < 0) return {Ls::Indeterminate, "leg detached"};
    Int alpha = graph_det(leg);
    if (alpha == 0) return {Ls::Indeterminate, "leg with vanishing determinant"};
    Int beta = graph_det(leg.without_vertex(inner));
    Rat omega(beta, alpha);
    omega.canonicalize();
    omegas.push_back(omega);
    e += omega;
  }
  if (e == 0) return {Ls::NotLSpace, "Seifert piece with e=0 (not a rational homology sphere)"};
  bool flipped = false;
  if (e > 0) {  // pass to the reversed orientation
    flipped = true;
    e = -e;
    for (auto& w : omegas) w = -w;
  }
  // normalize: omega in [0,1), center weight absorbs the integer parts
  PlumbingGraph canon;
  Rat center_w = e;
  std::vector<Rat> frac;
  for (auto& w : omegas) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), w.get_num_mpz_t(), w.get_den_mpz_t());
    Rat f = w - Rat(fl);
    f.canonicalize();
    if (f != 0) {
      frac.push_back(f);
      center_w -= f;
    }
  }
  center_w.canonicalize();
  if (center_w.get_den() != 1) return {Ls::Indeterminate, "non-integral normalized center"};
  int c = canon.add_vertex("c", center_w.get_num().get_si());
  for (size_t i = 0; i < frac.size(); ++i) {
    auto chain = hj_chain(frac[i].get_den(), frac[i].get_num());
    int prev = c;
    for (size_t k = 0; k < chain.size(); ++k) {
      int nv = canon.add_vertex("l" + std::to_string(i) + "_" + std::to_string(k), chain[k]);
      canon.add_edge(prev, nv);
      prev = nv;
    }
  }
  if (!is_negative_definite(canon)) return {Ls::Indeterminate, "normalized star not definite"};
  bool rat = is_rational(canon);
  std::string cert = std::string("Seifert normal form") + (flipped ? " (reversed orientation)" : "") +
                     (rat ? ": rational" : ": testing number >= 2");
  return {rat ? Ls::LSpace : Ls::NotLSpace, cert};
}

GraphLsVerdict component_verdict(const PlumbingGraph& comp, bool allow_flip) {
  if (comp.n() == 0) return {Ls::LSpace, "S^3"};
  Int det = graph_det(comp);
  if (det == 0) return {Ls::NotLSpace, "det 0: not a rational homology sphere"};
  if (is_negative_definite(comp)) {
    bool rat = is_rational(comp);
    return {rat ? Ls::LSpace : Ls::NotLSpace,
            rat ? "negative definite and rational" : "negative definite, not rational"};
  }
  if (max_valency(comp) <= 2) return {Ls::LSpace, "chain: lens space"};
  std::vector<int> nodes;
  for (int v = 0; v < comp.n(); ++v)
    if (comp.valency(v) >= 3) nodes.push_back(v);
  if (nodes.size() == 1) return star_verdict(comp, nodes[0]);
  if (allow_flip) {
    auto red = reduce(negated(comp));
    std::vector<GraphLsVerdict> parts;
    for (auto& sub : red.components) parts.push_back(component_verdict(sub, false));
    auto out = combine(std::move(parts));
    if (out.verdict != Ls::Indeterminate) {
      out.certificate = "after orientation reversal: " + out.certificate;
      return out;
    }
  }
  return {Ls::Indeterminate, "no definite presentation reached"};
}

}  // namespace

GraphLsVerdict is_lspace_graph(const PlumbingGraph& g) {
  auto red = reduce(g);
  std::vector<GraphLsVerdict> parts;
  for (auto& comp : red.components) parts.push_back(component_verdict(comp, true));
  if (parts.empty()) return {Ls::LSpace, "reduces to S^3"};
  return combine(std::move(parts));
}

// ---------------------------------------------------------------------------
// vertex surgeries

PlumbingGraph vertex_surgery_graph(const PlumbingGraph& g, int v, long long d_prime) {
  if (v < 0 || v >= g.n()) throw UnknownVertex("vertex index out of range");
  PlumbingGraph out = g;
  std::string id = "new";
  while (out.index_of(id) >= 0) id += "'";
  int nv = out.add_vertex(id, d_prime);
  out.add_edge(v, nv);
  Int lhs = graph_det(out);
  Int rhs = -to_int(d_prime) * graph_det(g) - graph_det(g.without_vertex(v));
  if (lhs != rhs) throw EquivalenceViolation("vertex surgery determinant identity failed");
  return out;
}

int tjurina_nesting_depth(const PlumbingGraph& g, int v) {
  PlumbingGraph cur = g;
  int vi = v, k = 0;
  while (cur.n() > 0) {
    auto tr = minimal_cycle(cur);
    auto pair = pairing_with_basis(cur, tr.result);
    ++k;
    if (pair[vi] != 0) break;  // v not Tjurina: the next Delta is empty
    std::vector<int> tjurina;
    for (int u = 0; u < cur.n(); ++u)
      if (pair[u] == 0) tjurina.push_back(u);
    PlumbingGraph sub = cur.induced(tjurina);
    int vsub = sub.index_of(cur.vertices[vi].id);
    assert(vsub >= 0);
    // connected component of the Tjurina set through v
    std::vector<int> comp_of_v;
    for (auto& comp : sub.components())
      if (std::find(comp.begin(), comp.end(), vsub) != comp.end()) comp_of_v = comp;
    cur = sub.induced(comp_of_v);
    vi = cur.index_of(g.vertices[v].id);
  }
  return k;
}

NegativeSurgeryRange negative_surgery_lspace_range(const PlumbingGraph& g, int v) {
  if (!is_rational(g)) throw NotRational("input graph is not rational");
  NegativeSurgeryRange out;
  out.simple = is_simple_vertex(g, v);
  if (!out.simple) return out;
  out.threshold_k = tjurina_nesting_depth(g, v);
  for (long long d = -out.threshold_k; d <= -1; ++d) {
    auto gd = vertex_surgery_graph(g, v, d);
    out.probes.emplace_back(d, is_lspace_graph(gd).verdict);
  }
  return out;
}

}  // namespace lslab
