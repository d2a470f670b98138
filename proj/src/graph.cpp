#include "lslab/graph.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace lslab {

int PlumbingGraph::add_vertex(const std::string& id, long long e) {
  if (index_of(id) >= 0) throw ParseError("duplicate vertex id: " + id);
  vertices.push_back({id, e});
  return n() - 1;
}

void PlumbingGraph::add_edge(int a, int b) {
  if (a == b) throw ParseError("loop edge at " + vertices[a].id);
  if (a > b) std::swap(a, b);
  if (adjacent(a, b)) throw ParseError("multi-edge " + vertices[a].id + "-" + vertices[b].id);
  edges.emplace_back(a, b);
}

void PlumbingGraph::add_arrow(const std::string& label, int at) { arrows.push_back({label, at}); }

int PlumbingGraph::index_of(const std::string& id) const {
  for (int i = 0; i < n(); ++i)
    if (vertices[i].id == id) return i;
  return -1;
}

int PlumbingGraph::require_vertex(const std::string& id) const {
  int i = index_of(id);
  if (i < 0) throw UnknownVertex("unknown vertex id: " + id);
  return i;
}

bool PlumbingGraph::adjacent(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (auto& e : edges)
    if (e.first == a && e.second == b) return true;
  return false;
}

std::vector<std::vector<int>> PlumbingGraph::adjacency() const {
  std::vector<std::vector<int>> adj(n());
  for (auto& e : edges) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }
  return adj;
}

int PlumbingGraph::valency(int v) const {
  int d = 0;
  for (auto& e : edges) d += (e.first == v) + (e.second == v);
  return d;
}

int PlumbingGraph::arrow_count(int v) const {
  int d = 0;
  for (auto& a : arrows) d += (a.at == v);
  return d;
}

std::vector<std::vector<int>> PlumbingGraph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<int> seen(n(), 0);
  auto adj = adjacency();
  for (int s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> stack{s}, comp;
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  return comps;
}

bool PlumbingGraph::is_connected() const { return n() == 0 || components().size() == 1; }

bool PlumbingGraph::is_tree() const {
  // forest test: |E| = |V| - #components
  return static_cast<int>(edges.size()) == n() - static_cast<int>(components().size());
}

PlumbingGraph PlumbingGraph::induced(const std::vector<int>& keep) const {
  PlumbingGraph h;
  std::vector<int> remap(n(), -1);
  for (int v : keep) {
    remap[v] = h.n();
    h.vertices.push_back(vertices[v]);
  }
  for (auto& e : edges)
    if (remap[e.first] >= 0 && remap[e.second] >= 0)
      h.edges.emplace_back(remap[e.first], remap[e.second]);
  for (auto& a : arrows)
    if (remap[a.at] >= 0) h.arrows.push_back({a.label, remap[a.at]});
  return h;
}

PlumbingGraph PlumbingGraph::without_vertex(int v) const {
  std::vector<int> keep;
  for (int i = 0; i < n(); ++i)
    if (i != v) keep.push_back(i);
  return induced(keep);
}

std::vector<int> PlumbingGraph::tree_path(int a, int b) const {
  if (!is_tree()) throw BadDecomposition("tree_path requires an acyclic graph");
  std::vector<int> parent(n(), -2);
  auto adj = adjacency();
  std::vector<int> stack{a};
  parent[a] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == b) break;
    for (int w : adj[v])
      if (parent[w] == -2) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  if (parent[b] == -2) throw BadDecomposition("vertices lie in different components");
  std::vector<int> path;
  for (int v = b; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Int> pairing_with_basis(const PlumbingGraph& g, const Cycle& z) {
  std::vector<Int> p(g.n());
  for (int v = 0; v < g.n(); ++v) p[v] = z.coeff[v] * to_int(g.vertices[v].e);
  for (auto& e : g.edges) {
    p[e.first] += z.coeff[e.second];
    p[e.second] += z.coeff[e.first];
  }
  return p;
}

namespace {

// Fraction-free Bareiss elimination with row pivoting; exact determinant.
Int bareiss_det(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

std::vector<std::vector<Int>> minus_I(const PlumbingGraph& g, const std::vector<int>& subset) {
  const int n = static_cast<int>(subset.size());
  std::vector<int> remap(g.n(), -1);
  for (int i = 0; i < n; ++i) remap[subset[i]] = i;
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = -to_int(g.vertices[subset[i]].e);
  for (auto& e : g.edges) {
    int a = remap[e.first], b = remap[e.second];
    if (a >= 0 && b >= 0) {
      m[a][b] = -1;
      m[b][a] = -1;
    }
  }
  return m;
}

}  // namespace

Int graph_det(const PlumbingGraph& g) {
  std::vector<int> all(g.n());
  for (int i = 0; i < g.n(); ++i) all[i] = i;
  return graph_det(g, all);
}

Int graph_det(const PlumbingGraph& g, const std::vector<int>& subset) {
  return bareiss_det(minus_I(g, subset));
}

bool is_negative_definite(const PlumbingGraph& g) {
  // Sylvester on -I: all leading principal minors positive. Bareiss pivots
  // are exactly those minors, so a single fraction-free sweep decides it.
  if (g.n() == 0) return true;
  auto m = minus_I(g, [&] {
    std::vector<int> all(g.n());
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    return all;
  }());
  const int n = g.n();
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return true;
}

std::vector<std::vector<Rat>> multiplicity_matrix(const PlumbingGraph& g) {
  const int n = g.n();
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  auto a = minus_I(g, all);
  // plain exact Gauss-Jordan over Q on [ -I | Id ]
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(a[i][j]);
    m[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int r = c; r < n; ++r)
      if (m[r][c] != 0) {
        p = r;
        break;
      }
    if (p < 0) throw SingularForm("intersection form is degenerate");
    std::swap(m[c], m[p]);
    Rat piv = m[c][c];
    for (int j = 0; j < 2 * n; ++j) m[c][j] /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (int j = 0; j < 2 * n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      inv[i][j] = m[i][n + j];
      inv[i][j].canonicalize();
    }
  return inv;
}

Int multiplicity_tree(const PlumbingGraph& g, int u, int v) {
  auto path = g.tree_path(u, v);
  std::set<int> drop(path.begin(), path.end());
  std::vector<int> keep;
  for (int i = 0; i < g.n(); ++i)
    if (!drop.count(i)) keep.push_back(i);
  return graph_det(g, keep);
}

bool determinant_decomposition_check(const PlumbingGraph& g, int u, int v) {
  if (u == v) throw BadDecomposition("u and v must be distinct");
  if (!g.is_tree() || !g.is_connected())
    throw BadDecomposition("decomposition check requires a connected tree");
  auto path = g.tree_path(u, v);
  std::set<int> on_path(path.begin(), path.end());

  // Components of g - u - v sorted by which cut vertex they touch.
  std::vector<int> rest;
  for (int i = 0; i < g.n(); ++i)
    if (i != u && i != v) rest.push_back(i);
  PlumbingGraph cut = g.induced(rest);
  std::vector<int> gprime, gsecond, middle;  // indices into g
  for (auto& comp : cut.components()) {
    bool at_u = false, at_v = false;
    std::vector<int> orig;
    for (int ci : comp) {
      int oi = g.index_of(cut.vertices[ci].id);
      orig.push_back(oi);
      if (g.adjacent(oi, u)) at_u = true;
      if (g.adjacent(oi, v)) at_v = true;
    }
    if (at_u && at_v)
      middle.insert(middle.end(), orig.begin(), orig.end());
    else if (at_u)
      gprime.insert(gprime.end(), orig.begin(), orig.end());
    else if (at_v)
      gsecond.insert(gsecond.end(), orig.begin(), orig.end());
    else
      throw BadDecomposition("detached component");
  }
  if (middle.empty() && !g.adjacent(u, v))
    throw BadDecomposition("u,v neither adjacent nor joined through a middle part");

  auto det_of = [&](std::vector<int> s) {
    std::sort(s.begin(), s.end());
    return graph_det(g, s);
  };
  Int a = det_of(gprime);
  Int pd = det_of(gsecond);  // p'
  std::vector<int> pset = middle;
  pset.insert(pset.end(), gsecond.begin(), gsecond.end());
  pset.push_back(v);
  Int p = det_of(pset);
  std::vector<int> aset = middle;
  aset.insert(aset.end(), gprime.begin(), gprime.end());
  aset.push_back(u);
  Int ap = det_of(aset);  // a'
  std::vector<int> gminus;
  for (int i : middle)
    if (!on_path.count(i)) gminus.push_back(i);
  Int gg = det_of(gminus);
  Int lhs = det_of(middle) * graph_det(g);
  return lhs == ap * p - a * pd * gg * gg;
}

std::vector<long long> hj_chain(const Int& num, const Int& den) {
  // expands num/den (> 1) as b1 - 1/(b2 - ...) with b_i >= 2; returns -b_i
  Int p = num, q = den;
  if (p <= q || q <= 0) throw std::invalid_argument("hj_chain needs num/den > 1");
  std::vector<long long> out;
  while (q > 0) {
    Int b = (p + q - 1) / q;  // ceil(p/q)
    out.push_back(-b.get_si());
    Int np = b * q - p;  // p/q = b - np/q, recurse on q/np
    p = q;
    q = np;
    if (q == 0) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// reduce

namespace {

struct MutGraph {
  PlumbingGraph g;
  int fresh = 0;

  std::string fresh_id() {
    while (true) {
      std::string id = "r" + std::to_string(fresh++);
      if (g.index_of(id) < 0) return id;
    }
  }

  void remove_vertex(int v) {
    std::vector<std::pair<int, int>> ne;
    for (auto& e : g.edges)
      if (e.first != v && e.second != v) {
        ne.emplace_back(e.first - (e.first > v), e.second - (e.second > v));
      }
    g.edges = ne;
    std::vector<PlumbingGraph::Arrow> na;
    for (auto& a : g.arrows)
      if (a.at != v) na.push_back({a.label, a.at - (a.at > v)});
    g.arrows = na;
    g.vertices.erase(g.vertices.begin() + v);
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (auto& e : g.edges) {
      if (e.first == v) out.push_back(e.second);
      if (e.second == v) out.push_back(e.first);
    }
    return out;
  }
};

}  // namespace

ReduceResult reduce(const PlumbingGraph& input) {
  MutGraph m{input, 0};
  ReduceResult res;
  int s3 = 0;

  auto arrowed = [&](int v) { return m.g.arrow_count(v) > 0; };

  const int cap = 400 + 40 * input.n();
  for (int iter = 0; iter < cap; ++iter) {
    bool acted = false;
    // isolated +-1 vertices are S^3 summands; isolated handled first so the
    // later moves can assume valency >= 1
    for (int v = 0; v < m.g.n() && !acted; ++v) {
      long long e = m.g.vertices[v].e;
      if (arrowed(v)) continue;
      if (m.g.valency(v) == 0 && (e == 1 || e == -1)) {
        res.moves.push_back("drop isolated (" + std::to_string(e) + ") " + m.g.vertices[v].id);
        m.remove_vertex(v);
        ++s3;
        acted = true;
      }
    }
    // 0-split: 0-framed leaf deletes itself and its support vertex
    for (int v = 0; v < m.g.n() && !acted; ++v) {
      if (m.g.vertices[v].e != 0 || m.g.valency(v) != 1 || arrowed(v)) continue;
      int u = m.neighbors(v)[0];
      if (arrowed(u)) continue;
      res.moves.push_back("0-split at " + m.g.vertices[v].id + " deleting " + m.g.vertices[u].id);
      m.remove_vertex(std::max(u, v));
      m.remove_vertex(std::min(u, v));
      acted = true;
    }
    // 0-chain absorption
    for (int v = 0; v < m.g.n() && !acted; ++v) {
      if (m.g.vertices[v].e != 0 || m.g.valency(v) != 2 || arrowed(v)) continue;
      auto nb = m.neighbors(v);
      int a = nb[0], b = nb[1];
      if (a == b || m.g.adjacent(a, b)) continue;  // keep the graph simple
      {
        auto na = m.neighbors(a), nbb = m.neighbors(b);
        bool common = false;
        for (int x : na)
          if (x != v)
            for (int y : nbb)
              if (x == y) common = true;
        if (common) continue;
      }
      res.moves.push_back("0-absorb at " + m.g.vertices[v].id);
      // merge b into a
      m.g.vertices[a].e += m.g.vertices[b].e;
      for (auto& e : m.g.edges) {
        if (e.first == b) e.first = a;
        if (e.second == b) e.second = a;
        if (e.first > e.second) std::swap(e.first, e.second);
      }
      for (auto& ar : m.g.arrows)
        if (ar.at == b) ar.at = a;
      // drop the (now degenerate) a-v / v-b edges along with v and b
      std::vector<std::pair<int, int>> ne;
      for (auto& e : m.g.edges)
        if (e.first != e.second && !(e.first == std::min(a, v) && e.second == std::max(a, v)))
          ne.push_back(e);
      m.g.edges = ne;
      m.remove_vertex(std::max(v, b));
      m.remove_vertex(std::min(v, b));
      acted = true;
    }
    // blow down +-1 of valency <= 2
    for (int v = 0; v < m.g.n() && !acted; ++v) {
      long long e = m.g.vertices[v].e;
      if ((e != 1 && e != -1) || arrowed(v)) continue;
      auto nb = m.neighbors(v);
      if (nb.size() > 2) continue;
      if (nb.size() == 2 && (m.g.adjacent(nb[0], nb[1]) || nb[0] == nb[1])) continue;
      for (int u : nb) m.g.vertices[u].e -= e;
      if (nb.size() == 2) {
        int a = std::min(nb[0], nb[1]), b = std::max(nb[0], nb[1]);
        m.g.edges.emplace_back(a, b);
      }
      res.moves.push_back("blow down " + m.g.vertices[v].id);
      m.remove_vertex(v);
      acted = true;
    }
    // slam-dunk a positive leaf into a negative host
    for (int v = 0; v < m.g.n() && !acted; ++v) {
      long long nl = m.g.vertices[v].e;
      if (nl < 2 || m.g.valency(v) != 1 || arrowed(v)) continue;
      int host = m.neighbors(v)[0];
      long long d = m.g.vertices[host].e;
      if (d > -1 || arrowed(host)) continue;
      // host coefficient becomes d - 1/nl < -1; expand as a HJ chain
      auto chain = hj_chain(to_int(-d) * to_int(nl) + 1, to_int(nl));
      res.moves.push_back("absorb leaf " + m.g.vertices[v].id + " into " + m.g.vertices[host].id);
      m.remove_vertex(v);
      host -= (host > v);
      m.g.vertices[host].e = chain[0];
      int prev = host;
      for (size_t i = 1; i < chain.size(); ++i) {
        int nv = m.g.add_vertex(m.fresh_id(), chain[i]);
        m.g.add_edge(prev, nv);
        prev = nv;
      }
      acted = true;
    }
    if (!acted) break;
  }

  for (auto& comp : m.g.components()) res.components.push_back(m.g.induced(comp));
  res.s3_count = s3;
  return res;
}

// ---------------------------------------------------------------------------
// JSON

PlumbingGraph graph_from_json_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  PlumbingGraph g;
  if (!j.is_object() || !j.contains("vertices"))
    throw ParseError("graph JSON needs a \"vertices\" array");
  for (auto& v : j.at("vertices")) {
    if (!v.contains("id") || !v.contains("e")) throw ParseError("vertex needs id and e");
    g.add_vertex(v.at("id").get<std::string>(), v.at("e").get<long long>());
  }
  if (j.contains("edges"))
    for (auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair of ids");
      g.add_edge(g.require_vertex(e.at(0).get<std::string>()),
                 g.require_vertex(e.at(1).get<std::string>()));
    }
  if (j.contains("arrows"))
    for (auto& a : j.at("arrows"))
      g.add_arrow(a.at("label").get<std::string>(), g.require_vertex(a.at("at").get<std::string>()));
  return g;
}

std::string graph_to_json_string(const PlumbingGraph& g) {
  nlohmann::json j;
  std::vector<int> order(g.n());
  for (int i = 0; i < g.n(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.vertices[a].id < g.vertices[b].id; });
  j["vertices"] = nlohmann::json::array();
  for (int i : order) j["vertices"].push_back({{"e", g.vertices[i].e}, {"id", g.vertices[i].id}});
  std::vector<std::pair<std::string, std::string>> es;
  for (auto& e : g.edges) {
    std::string a = g.vertices[e.first].id, b = g.vertices[e.second].id;
    if (b < a) std::swap(a, b);
    es.emplace_back(a, b);
  }
  std::sort(es.begin(), es.end());
  j["edges"] = nlohmann::json::array();
  for (auto& e : es) j["edges"].push_back({e.first, e.second});
  std::vector<std::pair<std::string, std::string>> as;
  for (auto& a : g.arrows) as.emplace_back(a.label, g.vertices[a.at].id);
  std::sort(as.begin(), as.end());
  j["arrows"] = nlohmann::json::array();
  for (auto& a : as) j["arrows"].push_back({{"at", a.second}, {"label", a.first}});
  return j.dump();
}

}  // namespace lslab
