#include "lslab/link.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lslab/alexander.hpp"

namespace lslab {

void finish_link_invariants(AlgebraicLink& lk, bool expect_newton_data);

std::vector<long long> splice_decorations(const BranchSpec& b) {
  std::vector<long long> a;
  long long prev_a = 0, prev_p = 0;
  for (size_t i = 0; i < b.newton_pairs.size(); ++i) {
    auto [p, q] = b.newton_pairs[i];
    long long ai = (i == 0) ? q : q + prev_p * p * prev_a;
    a.push_back(ai);
    prev_a = ai;
    prev_p = p;
  }
  return a;
}

long long milnor_number(const BranchSpec& b) {
  auto a = splice_decorations(b);
  long long mu = 0;
  for (size_t i = 0; i < b.newton_pairs.size(); ++i) {
    long long p = b.newton_pairs[i].first;
    mu = p * mu + (p - 1) * (a[i] - 1);
  }
  return mu;
}

bool BranchSemigroup::contains(long long s) const {
  if (s < 0) return false;
  if (s >= conductor) return true;
  return std::binary_search(below_conductor.begin(), below_conductor.end(), s);
}

std::vector<long long> BranchSemigroup::minimal_generators() const {
  // every element >= conductor + multiplicity is decomposable
  long long mult = conductor;
  for (long long s = 1; s <= conductor; ++s)
    if (contains(s)) {
      mult = s;
      break;
    }
  if (conductor == 0) mult = 1;
  std::vector<long long> gens;
  for (long long s = 1; s <= conductor + mult; ++s) {
    if (!contains(s)) continue;
    bool decomposable = false;
    for (long long t = 1; t < s && !decomposable; ++t)
      if (contains(t) && contains(s - t)) decomposable = true;
    if (!decomposable) gens.push_back(s);
  }
  return gens;
}

int SpliceDiagram::kept_index_of(int graph_vertex) const {
  for (size_t i = 0; i < kept.size(); ++i)
    if (kept[i] == graph_vertex) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> SpliceDiagram::adjacency() const {
  std::vector<std::vector<int>> adj(kept.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    adj[edges[e].a].push_back(static_cast<int>(e));
    adj[edges[e].b].push_back(static_cast<int>(e));
  }
  return adj;
}

// ---------------------------------------------------------------------------
// blowup cascade

namespace {

struct CascadeBranch {
  enum St { Free, Smooth, Corner, Done } st = Free;
  int hx = -1, hy = -1;  // host divisors (graph vertex indices)
  long long P = 1, Q = 1;
  std::deque<std::pair<long long, long long>> todo;
  int package = 0;  // current package number, 1-based; 0 for a smooth branch
  int point = -1;
  int arrow_at = -1;
};

enum SlotKind { SLOT_AXIS, SLOT_CORNER_X, SLOT_CORNER_Y, SLOT_GENERIC, SLOT_FREE };

struct Landing {
  CascadeBranch::St st;
  int hx, hy;
  long long P, Q;
  SlotKind slot;
  int completed_package = -1;  // for SLOT_GENERIC
};

Landing land(const CascadeBranch& b, int E) {
  using St = CascadeBranch::St;
  switch (b.st) {
    case St::Free:
      if (b.P < b.Q) return {St::Smooth, E, -1, b.P, b.Q - b.P, SLOT_FREE, -1};
      if (b.P > b.Q) return {St::Smooth, E, -1, b.Q, b.P - b.Q, SLOT_FREE, -1};
      return {St::Smooth, E, -1, 1, 1, SLOT_GENERIC, b.package};
    case St::Smooth:
      if (b.Q > b.P) return {St::Smooth, E, -1, b.P, b.Q - b.P, SLOT_AXIS, -1};
      if (b.Q < b.P) return {St::Corner, b.hx, E, b.P - b.Q, b.Q, SLOT_CORNER_X, -1};
      return {St::Smooth, E, -1, 1, 1, SLOT_GENERIC, b.package};
    case St::Corner:
      if (b.P > b.Q) return {St::Corner, b.hx, E, b.P - b.Q, b.Q, SLOT_CORNER_X, -1};
      if (b.Q > b.P) return {St::Corner, E, b.hy, b.P, b.Q - b.P, SLOT_CORNER_Y, -1};
      return {St::Smooth, E, -1, 1, 1, SLOT_GENERIC, b.package};
    default:
      throw std::logic_error("landing of a finished branch");
  }
}

void remove_edge_between(PlumbingGraph& g, int a, int b) {
  if (a > b) std::swap(a, b);
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (g.edges[i] == std::make_pair(a, b)) {
      g.edges.erase(g.edges.begin() + i);
      return;
    }
  throw std::logic_error("edge not present");
}

void validate_branch(BranchSpec& b) {
  for (size_t i = 0; i < b.newton_pairs.size(); ++i) {
    auto& [p, q] = b.newton_pairs[i];
    if (i == 0 && q >= 2 && p >= 2 && q < p) std::swap(p, q);  // canonical orientation
    if (p < 2) throw InvalidNewtonPairs("newton pair needs p >= 2");
    if (q < 1) throw InvalidNewtonPairs("newton pair needs q >= 1");
    if (std::gcd(p, q) != 1) throw InvalidNewtonPairs("newton pair must be coprime");
    if (p + q > 2000000) throw InvalidNewtonPairs("newton pair too large");
  }
}

}  // namespace

AlgebraicLink build_link(const BranchSpec& b1in, const BranchSpec& b2in, SpliceFamily family,
                         int n) {
  BranchSpec b1 = b1in, b2 = b2in;
  validate_branch(b1);
  validate_branch(b2);
  const int s = static_cast<int>(b1.newton_pairs.size());
  const int r = static_cast<int>(b2.newton_pairs.size());
  if (n < 0 || n > std::min(s, r))
    throw NonAlgebraicConfiguration("shared prefix exceeds a branch length");
  int shared_packages = 0, tangential_stage = -1;
  if (family == SpliceFamily::I) {
    shared_packages = n;
    for (int i = 0; i < n; ++i)
      if (b1.newton_pairs[i] != b2.newton_pairs[i])
        throw NonAlgebraicConfiguration("family I needs identical shared Newton pairs");
  } else {
    if (n >= 1) {
      shared_packages = n - 1;
      tangential_stage = n;
      for (int i = 0; i + 1 < n; ++i)
        if (b1.newton_pairs[i] != b2.newton_pairs[i])
          throw NonAlgebraicConfiguration("family II needs identical pairs before stage n");
    }
  }

  AlgebraicLink lk;
  lk.branch1 = b1;
  lk.branch2 = b2;
  lk.family = family;
  lk.shared_prefix = n;

  PlumbingGraph& G = lk.graph;
  int nextE = 0;

  std::vector<CascadeBranch> br(2);
  for (int i = 0; i < 2; ++i) {
    const BranchSpec& b = i == 0 ? b1 : b2;
    if (!b.smooth()) {
      br[i].P = b.newton_pairs[0].first;
      br[i].Q = b.newton_pairs[0].second;
      br[i].package = 1;
      for (size_t k = 1; k < b.newton_pairs.size(); ++k) br[i].todo.push_back(b.newton_pairs[k]);
    }
    br[i].point = 0;
  }
  std::map<int, std::vector<int>> points;
  points[0] = {0, 1};
  int next_point = 1;

  long long cap = 50;
  for (auto& b : {b1, b2})
    for (auto& [p, q] : b.newton_pairs) cap += 3 * (p + q);

  while (!points.empty()) {
    if (--cap < 0) throw std::logic_error("blowup cascade failed to terminate");
    int pt = points.begin()->first;
    std::vector<int> S = points.begin()->second;

    if (S.size() == 1) {
      CascadeBranch& b = br[S[0]];
      if (b.st == CascadeBranch::Smooth && b.P == 1 && b.todo.empty()) {
        b.st = CascadeBranch::Done;
        b.arrow_at = b.hx;
        points.erase(pt);
        continue;
      }
    }

    // blow up at this point
    CascadeBranch::St st = br[S[0]].st;
    for (int i : S)
      if (br[i].st != st || (st != CascadeBranch::Free && br[i].hx != br[S[0]].hx) ||
          (st == CascadeBranch::Corner && br[i].hy != br[S[0]].hy))
        throw std::logic_error("inconsistent point membership");
    int E = G.add_vertex("E" + std::to_string(++nextE), -1);
    if (st == CascadeBranch::Smooth) {
      G.vertices[br[S[0]].hx].e -= 1;
      G.add_edge(br[S[0]].hx, E);
    } else if (st == CascadeBranch::Corner) {
      int X = br[S[0]].hx, Y = br[S[0]].hy;
      G.vertices[X].e -= 1;
      G.vertices[Y].e -= 1;
      remove_edge_between(G, X, Y);
      G.add_edge(X, E);
      G.add_edge(E, Y);
    }

    std::vector<Landing> ls;
    for (int i : S) ls.push_back(land(br[i], E));

    bool share = false;
    if (S.size() == 2) {
      const Landing &la = ls[0], &lb = ls[1];
      if (la.st == lb.st && la.hx == lb.hx && la.hy == lb.hy && la.slot == lb.slot) {
        switch (la.slot) {
          case SLOT_AXIS:
          case SLOT_CORNER_X:
          case SLOT_CORNER_Y:
            share = true;
            break;
          case SLOT_FREE:
            share = (shared_packages >= 1 || tangential_stage == 1);
            break;
          case SLOT_GENERIC:
            share = la.completed_package == lb.completed_package &&
                    (la.completed_package + 1 <= shared_packages ||
                     la.completed_package + 1 == tangential_stage);
            break;
        }
      }
    }

    points.erase(pt);
    for (size_t k = 0; k < S.size(); ++k) {
      CascadeBranch& b = br[S[k]];
      b.st = ls[k].st;
      b.hx = ls[k].hx;
      b.hy = ls[k].hy;
      b.P = ls[k].P;
      b.Q = ls[k].Q;
      if (b.st == CascadeBranch::Smooth && b.P == 1 && !b.todo.empty()) {
        auto [pp, qq] = b.todo.front();
        b.todo.pop_front();
        b.P = pp;
        b.Q = qq;
        b.package += 1;
      }
      if (k == 0 || !share) b.point = next_point++;
      else b.point = br[S[0]].point;
      points[b.point].push_back(S[k]);
    }
    // keep shared points listed once with both members
    for (auto& [id, mem] : points) {
      std::sort(mem.begin(), mem.end());
      mem.erase(std::unique(mem.begin(), mem.end()), mem.end());
    }
  }

  G.add_arrow("L1", br[0].arrow_at);
  G.add_arrow("L2", br[1].arrow_at);
  lk.v1 = br[0].arrow_at;
  lk.v2 = br[1].arrow_at;

  finish_link_invariants(lk, /*expect_newton_data=*/true);
  return lk;
}

// ---------------------------------------------------------------------------
// derived invariants shared by both construction paths

namespace {

SpliceDiagram derive_splice(const PlumbingGraph& g) {
  SpliceDiagram sp;
  auto adj = g.adjacency();
  std::vector<int> keep_mark(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    if (g.arrow_count(v) > 0 || g.valency(v) != 2) keep_mark[v] = 1;
  for (int v = 0; v < g.n(); ++v)
    if (keep_mark[v]) sp.kept.push_back(v);

  std::set<std::pair<int, int>> seen;  // kept pairs
  for (int u : sp.kept) {
    for (int w0 : adj[u]) {
      // walk through erased two-valent vertices
      int prev = u, cur = w0;
      while (!keep_mark[cur]) {
        int nxt = -1;
        for (int x : adj[cur])
          if (x != prev) nxt = x;
        assert(nxt >= 0);
        prev = cur;
        cur = nxt;
      }
      int a = sp.kept_index_of(u), b = sp.kept_index_of(cur);
      auto key = std::minmax(sp.kept[a], sp.kept[b]);
      if (seen.count(key)) continue;
      seen.insert(key);
      // near weight at u toward w0: det of the component of g - u holding w0
      auto near_weight = [&](int at, int first_step) {
        PlumbingGraph cut = g.without_vertex(at);
        int fs = cut.index_of(g.vertices[first_step].id);
        for (auto& comp : cut.components())
          if (std::find(comp.begin(), comp.end(), fs) != comp.end())
            return graph_det(cut, comp);
        throw std::logic_error("direction not found");
      };
      SpliceDiagram::Edge e;
      e.a = a;
      e.b = b;
      e.wa = near_weight(u, w0);
      e.wb = near_weight(sp.kept[b], prev);
      sp.edges.push_back(e);
    }
  }
  return sp;
}

std::vector<long long> semigroup_below(const BivariatePolynomial& delta1, long long mu) {
  // coefficients of Delta(t)/(1-t) on [0, mu)
  BivariatePolynomial geo;
  for (long long j = 0; j < mu + 1; ++j) geo.add_term(j, 0, 1);
  auto series = delta1 * geo;
  std::vector<long long> out;
  for (long long sv = 0; sv < mu; ++sv) {
    Int cs = series.coeff(sv, 0);
    if (cs != 0 && cs != 1)
      throw NonAlgebraicConfiguration("semigroup series has a coefficient outside {0,1}");
    if (cs == 1) out.push_back(sv);
  }
  return out;
}

}  // namespace

void finish_link_invariants(AlgebraicLink& lk, bool expect_newton_data) {
  PlumbingGraph& G = lk.graph;
  if (!G.is_connected() || !G.is_tree())
    throw NonAlgebraicConfiguration("resolution graph must be a connected tree");
  if (graph_det(G) != 1)
    throw NonAlgebraicConfiguration("resolution graph must have determinant 1");
  if (!is_negative_definite(G))
    throw NonAlgebraicConfiguration("resolution graph must be negative definite");
  if (G.arrows.size() != 2) throw NonAlgebraicConfiguration("expected exactly two arrowheads");

  lk.parallel = (lk.v1 == lk.v2);
  lk.support_is_minus_one_1 = G.vertices[lk.v1].e == -1;
  lk.support_is_minus_one_2 = G.vertices[lk.v2].e == -1;

  lk.m1 = graph_det(G.without_vertex(lk.v1));
  lk.m2 = graph_det(G.without_vertex(lk.v2));
  lk.linking = multiplicity_tree(G, lk.v1, lk.v2);

  lk.splice = derive_splice(G);
  // edge inequalities (positive edge determinants)
  auto sadj = lk.splice.adjacency();
  for (auto& e : lk.splice.edges) {
    Int oa = 1, ob = 1;
    for (int ei : sadj[e.a]) {
      auto& f = lk.splice.edges[ei];
      if (&f == &e) continue;
      oa *= (f.a == e.a) ? f.wa : f.wb;
    }
    for (int ei : sadj[e.b]) {
      auto& f = lk.splice.edges[ei];
      if (&f == &e) continue;
      ob *= (f.a == e.b) ? f.wa : f.wb;
    }
    if (e.wa * e.wb - oa * ob <= 0)
      throw NonAlgebraicConfiguration("violated splice edge inequality");
  }
  // splice path product agrees with the determinant route
  if (splice_multiplicity(lk, lk.v1, lk.v2) != lk.linking)
    throw EquivalenceViolation("splice product disagrees with det(Gamma - path)");

  lk.delta = alexander_from_resolution(G, lk.v1, lk.v2);
  lk.delta1 = alexander_of_component(G, lk.v1);
  lk.delta2 = alexander_of_component(G, lk.v2);
  lk.mu1 = lk.delta1.degree().first;
  lk.mu2 = lk.delta2.degree().first;
  if (lk.mu1 % 2 || lk.mu2 % 2) throw NonAlgebraicConfiguration("odd Milnor number");
  if (expect_newton_data) {
    if (lk.mu1 != milnor_number(lk.branch1) || lk.mu2 != milnor_number(lk.branch2))
      throw EquivalenceViolation("Milnor number from the Alexander degree disagrees with "
                                 "the Newton pair recursion");
  }
  if (!lk.linking.fits_slong_p()) throw NonAlgebraicConfiguration("linking number too large");
  lk.c = {lk.mu1 + lk.l(), lk.mu2 + lk.l()};
  if (!lk.delta.has_01_coefficients())
    throw NonAlgebraicConfiguration("Alexander polynomial has a coefficient outside {0,1}");
  if (!symmetry_check(lk.delta, lk.c))
    throw EquivalenceViolation("Alexander support is not symmetric under v -> c-1-v");
  if (!torres_check(lk))
    throw EquivalenceViolation("Torres identity failed");
  lk.sg1.conductor = lk.mu1;
  lk.sg1.below_conductor = semigroup_below(lk.delta1, lk.mu1);
  lk.sg2.conductor = lk.mu2;
  lk.sg2.below_conductor = semigroup_below(lk.delta2, lk.mu2);
}

AlgebraicLink link_from_graph(const PlumbingGraph& g) {
  AlgebraicLink lk;
  lk.graph = g;
  if (g.arrows.size() != 2) throw NonAlgebraicConfiguration("expected exactly two arrowheads");
  for (auto& a : g.arrows) {
    if (a.label == "L1") lk.v1 = a.at;
    else if (a.label == "L2") lk.v2 = a.at;
  }
  if (lk.v1 < 0 || lk.v2 < 0) {
    lk.v1 = g.arrows[0].at;
    lk.v2 = g.arrows[1].at;
  }
  finish_link_invariants(lk, /*expect_newton_data=*/false);
  return lk;
}

Int splice_multiplicity(const AlgebraicLink& lk, int graph_u, int graph_v) {
  const SpliceDiagram& sp = lk.splice;
  int a = sp.kept_index_of(graph_u), b = sp.kept_index_of(graph_v);
  if (a < 0 || b < 0) throw UnknownVertex("splice multiplicity needs splice vertices");
  auto adj = sp.adjacency();
  // BFS path a -> b over splice edges
  std::vector<int> prev_edge(sp.kept.size(), -1), prev_vtx(sp.kept.size(), -1);
  std::vector<int> stack{a};
  std::vector<char> seen(sp.kept.size(), 0);
  seen[a] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int ei : adj[v]) {
      auto& e = sp.edges[ei];
      int w = (e.a == v) ? e.b : e.a;
      if (!seen[w]) {
        seen[w] = 1;
        prev_edge[w] = ei;
        prev_vtx[w] = v;
        stack.push_back(w);
      }
    }
  }
  if (!seen[b]) throw UnknownVertex("splice vertices in different components");
  std::set<int> path_vertices, path_edges;
  int cur = b;
  path_vertices.insert(b);
  while (cur != a) {
    path_edges.insert(prev_edge[cur]);
    cur = prev_vtx[cur];
    path_vertices.insert(cur);
  }
  Int prod = 1;
  for (int v : path_vertices)
    for (int ei : adj[v]) {
      if (path_edges.count(ei)) continue;
      auto& e = sp.edges[ei];
      prod *= (e.a == v) ? e.wa : e.wb;
    }
  return prod;
}

// ---------------------------------------------------------------------------
// JSON

AlgebraicLink link_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (j.contains("graph")) return link_from_graph(graph_from_json_string(j.at("graph").dump()));
  BranchSpec b1, b2;
  for (auto& p : j.at("branch1"))
    b1.newton_pairs.emplace_back(p.at(0).get<long long>(), p.at(1).get<long long>());
  for (auto& p : j.at("branch2"))
    b2.newton_pairs.emplace_back(p.at(0).get<long long>(), p.at(1).get<long long>());
  std::string fam = j.value("family", "II");
  if (fam != "I" && fam != "II") throw ParseError("family must be \"I\" or \"II\"");
  int n = j.value("n", 0);
  return build_link(b1, b2, fam == "I" ? SpliceFamily::I : SpliceFamily::II, n);
}

std::string link_spec_to_json_string(const AlgebraicLink& lk) {
  nlohmann::json j;
  j["branch1"] = nlohmann::json::array();
  for (auto& [p, q] : lk.branch1.newton_pairs) j["branch1"].push_back({p, q});
  j["branch2"] = nlohmann::json::array();
  for (auto& [p, q] : lk.branch2.newton_pairs) j["branch2"].push_back({p, q});
  j["family"] = lk.family == SpliceFamily::I ? "I" : "II";
  j["n"] = lk.shared_prefix;
  return j.dump();
}

}  // namespace lslab
