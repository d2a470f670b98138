#include "lslab/surgery.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "lslab/alexander.hpp"

namespace lslab {

PlumbingGraph surgery_plumbing(const AlgebraicLink& lk, long long d1, long long d2) {
  PlumbingGraph g = lk.graph;
  g.arrows.clear();
  long long m1 = lk.m1.get_si(), m2 = lk.m2.get_si();
  int s1 = g.add_vertex("S1", d1 - m1);
  g.add_edge(lk.v1, s1);
  int s2 = g.add_vertex("S2", d2 - m2);
  g.add_edge(lk.v2, s2);
  FramingMatrix lam{d1, d2, lk.l()};
  Int dg = graph_det(g), dl = lam.det();
  if (dg != dl && dg != -dl)
    throw EquivalenceViolation("surgery graph |det| disagrees with |det Lambda|");
  return g;
}

SurgeryTester::SurgeryTester(const AlgebraicLink& lk, LsTestOptions opts)
    : lk_(lk), opts_(opts) {
  h_ = make_link_h(lk);
  very_good_ = h_->find_very_good();
}

LsVerdict SurgeryTester::ls_test(long long d1, long long d2) const {
  const AlgebraicLink& lk = lk_;
  FramingMatrix lam{d1, d2, lk.l()};
  if (lam.det() == 0)
    return {Ls::NotLSpace, "det Lambda = 0: surgery is not a rational homology sphere"};

  std::vector<LsVerdict> opinions;

  PlumbingGraph sg = surgery_plumbing(lk, d1, d2);
  GraphLsVerdict gv = is_lspace_graph(sg);
  if (gv.verdict != Ls::Indeterminate)
    opinions.push_back({gv.verdict, "graph tester: " + gv.certificate});

  if (opts_.use_theorems) {
    long long m1 = lk.m1.get_si(), m2 = lk.m2.get_si();
    if (d1 > m1 && d2 > m2)
      opinions.push_back({Ls::LSpace, "large surgery: d_i > m_i"});
    else if (!lk.parallel && d1 >= m1 && d2 >= m2)
      opinions.push_back({Ls::LSpace, "large surgery: d_i >= m_i with distinct supports"});
    if (very_good_) {
      long long l = lk.l();
      bool in_region = d1 > 0 && d2 > 0 && to_int(d1) * to_int(d2) > to_int(l) * to_int(l);
      if (!in_region)
        opinions.push_back({Ls::NotLSpace,
                            "very good point (" + std::to_string(very_good_->first) + "," +
                                std::to_string(very_good_->second) +
                                "): L-space surgeries need d1>0, d2>0, d1 d2 > l^2"});
    }
  }

  bool want_complex = opts_.cross_check || (opts_.use_complex_fallback && opinions.empty());
  if (want_complex && lam.positive_definite()) {
    HfTestOptions ho;
    ho.N = opts_.trunc_N;
    ho.M = opts_.trunc_M;
    HfTestResult hr = hf_complex_ls_test(*h_, lam, ho);
    if (hr.verdict != Ls::Indeterminate)
      opinions.push_back({hr.verdict, "surgery complex (M=" + std::to_string(hr.M_used) +
                                          ", N=" + std::to_string(hr.N_used) + "): " + hr.detail});
  }

  LsVerdict out;
  for (auto& op : opinions) {
    if (out.verdict == Ls::Indeterminate) {
      out = op;
    } else if (op.verdict != out.verdict) {
      throw TesterDisagreement("at (" + std::to_string(d1) + "," + std::to_string(d2) +
                               "): [" + out.certificate + "] vs [" + op.certificate + "]");
    } else {
      out.certificate += "; " + op.certificate;
    }
  }
  return out;
}

LsVerdict ls_test(const AlgebraicLink& lk, long long d1, long long d2,
                  const LsTestOptions& opts) {
  return SurgeryTester(lk, opts).ls_test(d1, d2);
}

// ---------------------------------------------------------------------------
// scans

const LsVerdict& ScanResult::at(long long d1, long long d2) const {
  return grid[d1 - d1_range.first][d2 - d2_range.first];
}

std::string ScanResult::ascii() const {
  std::ostringstream os;
  os << "d2\\d1 in [" << d1_range.first << "," << d1_range.second << "], top row d2="
     << d2_range.second << "\n";
  for (long long d2 = d2_range.second; d2 >= d2_range.first; --d2) {
    for (long long d1 = d1_range.first; d1 <= d1_range.second; ++d1) {
      const auto& v = at(d1, d2);
      os << (v.verdict == Ls::LSpace ? "\u25cf" : v.verdict == Ls::NotLSpace ? "\u00b7" : "?");
    }
    os << "\n";
  }
  return os.str();
}

std::string ScanResult::csv() const {
  std::ostringstream os;
  os << "d1,d2,verdict\n";
  for (long long d1 = d1_range.first; d1 <= d1_range.second; ++d1)
    for (long long d2 = d2_range.first; d2 <= d2_range.second; ++d2)
      os << d1 << "," << d2 << "," << to_string(at(d1, d2).verdict) << "\n";
  return os.str();
}

std::string ScanResult::json() const {
  nlohmann::json j;
  j["d1"] = {d1_range.first, d1_range.second};
  j["d2"] = {d2_range.first, d2_range.second};
  j["cells"] = nlohmann::json::array();
  for (long long d1 = d1_range.first; d1 <= d1_range.second; ++d1)
    for (long long d2 = d2_range.first; d2 <= d2_range.second; ++d2)
      j["cells"].push_back({{"d1", d1}, {"d2", d2}, {"verdict", to_string(at(d1, d2).verdict)}});
  return j.dump();
}

ScanResult ls_scan(const AlgebraicLink& lk, Pt d1_range, Pt d2_range, int jobs,
                   const LsTestOptions& opts) {
  ScanResult res;
  res.d1_range = d1_range;
  res.d2_range = d2_range;
  long long n1 = d1_range.second - d1_range.first + 1;
  long long n2 = d2_range.second - d2_range.first + 1;
  if (n1 <= 0 || n2 <= 0) return res;
  res.grid.assign(n1, std::vector<LsVerdict>(n2));
  SurgeryTester tester(lk, opts);

  std::atomic<long long> next(0);
  const long long total = n1 * n2;
  auto worker = [&]() {
    while (true) {
      long long idx = next.fetch_add(1);
      if (idx >= total) break;
      long long i = idx / n2, j = idx % n2;
      res.grid[i][j] = tester.ls_test(d1_range.first + i, d2_range.first + j);
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return res;
}

bool positivity_bound_check(const AlgebraicLink& lk, const ScanResult& scan) {
  auto h = make_link_h(lk);
  auto vg = h->find_very_good();
  if (!vg) return true;  // precondition absent: check skipped
  long long l = lk.l();
  for (long long d1 = scan.d1_range.first; d1 <= scan.d1_range.second; ++d1)
    for (long long d2 = scan.d2_range.first; d2 <= scan.d2_range.second; ++d2)
      if (scan.at(d1, d2).verdict == Ls::LSpace) {
        if (!(d1 > 0 && d2 > 0 && to_int(d1) * to_int(d2) > to_int(l) * to_int(l)))
          throw BoundViolated("L-space point (" + std::to_string(d1) + "," + std::to_string(d2) +
                              ") outside the positive-definite region");
      }
  return true;
}

// ---------------------------------------------------------------------------
// boundedness

bool simple_in_complement(const AlgebraicLink& lk, int which) {
  int vi = which == 1 ? lk.v1 : lk.v2;
  int vj = which == 1 ? lk.v2 : lk.v1;
  if (vi == vj) throw NotParallel("simple_in_complement needs distinct supports");
  PlumbingGraph cut = lk.graph.without_vertex(vj);
  cut.arrows.clear();
  int vc = cut.index_of(lk.graph.vertices[vi].id);
  for (auto& comp : cut.components())
    if (std::find(comp.begin(), comp.end(), vc) != comp.end()) {
      PlumbingGraph sub = cut.induced(comp);
      return is_simple_vertex(sub, sub.index_of(lk.graph.vertices[vi].id));
    }
  throw UnknownVertex("support vertex vanished from the complement");
}

BoundednessResult classify_boundedness(const AlgebraicLink& lk) {
  BoundednessResult out;
  auto h = make_link_h(lk);
  out.very_good_point = h->find_very_good();
  out.cond_very_good = out.very_good_point.has_value();

  std::pair<Pt, Pt> witness;
  out.cond_unordered = !ordered_type(lk.delta, &witness);
  if (out.cond_unordered) out.unordered_witness = witness;

  if (lk.parallel) {
    out.cond_graph = false;
  } else {
    out.cond_graph = !simple_in_complement(lk, 1) && !simple_in_complement(lk, 2);
  }

  if (out.cond_very_good != out.cond_unordered || out.cond_unordered != out.cond_graph)
    throw EquivalenceViolation(
        "boundedness conditions disagree: very_good=" + std::to_string(out.cond_very_good) +
        " unordered=" + std::to_string(out.cond_unordered) +
        " graph=" + std::to_string(out.cond_graph));

  if (out.cond_very_good) {
    out.verdict = Boundedness::BoundedBelow;
    out.certificate = "very good point (" + std::to_string(out.very_good_point->first) + "," +
                      std::to_string(out.very_good_point->second) + "); unordered support pair (" +
                      std::to_string(witness.first.first) + "," +
                      std::to_string(witness.first.second) + ") / (" +
                      std::to_string(witness.second.first) + "," +
                      std::to_string(witness.second.second) + ")";
  } else {
    out.verdict = Boundedness::UnboundedBelow;
    if (lk.parallel)
      out.certificate = "parallel components (both arrows on one vertex)";
    else if (simple_in_complement(lk, 2))
      out.certificate = "v2 simple in Gamma minus v1: the line {m1} x Z is unbounded below";
    else
      out.certificate = "v1 simple in Gamma minus v2: the line Z x {m2} is unbounded below";
  }
  return out;
}

CornerResult corner_test(const AlgebraicLink& lk) {
  CornerResult out;
  out.unknot2 = (lk.mu2 == 0);
  out.simple2 = is_simple_vertex([&] {
    PlumbingGraph g = lk.graph;
    g.arrows.clear();
    return g;
  }(), lk.v2);
  if (out.unknot2 != out.simple2)
    throw EquivalenceViolation("L2-unknot and v2-simple disagree");
  SurgeryTester tester(lk);
  long long m1 = lk.m1.get_si();
  out.corner_present = true;
  for (long long d2 : {-1LL, -5LL, -20LL}) {
    auto v = tester.ls_test(m1, d2);
    out.probes.emplace_back(d2, v.verdict);
    if (v.verdict != Ls::LSpace) out.corner_present = false;
  }
  return out;
}

ParallelLinesResult parallel_lines(const AlgebraicLink& lk) {
  if (!lk.parallel) throw NotParallel("parallel_lines needs a parallel link");
  if (lk.m1 != lk.m2) throw EquivalenceViolation("parallel link with m1 != m2");
  ParallelLinesResult out;
  out.m = lk.m1;
  SurgeryTester tester(lk);
  long long m = lk.m1.get_si();
  for (long long off : {-10LL, -1LL, 1LL, 50LL}) {
    auto v1 = tester.ls_test(m, m + off);
    out.samples.push_back({{m, m + off}, v1.verdict});
    auto v2 = tester.ls_test(m + off, m);
    out.samples.push_back({{m + off, m}, v2.verdict});
  }
  return out;
}

}  // namespace lslab
