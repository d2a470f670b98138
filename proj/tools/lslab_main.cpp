// lslab: L-space surgery toolkit for two-component algebraic links.
//
// Subcommands: report, scan, classify, hgrid, alexander, graph.
// Exit codes: 0 success, 1 a scan cell stayed Indeterminate, 2 input error,
// 3 internal invariant violation (tester disagreement etc).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lslab/alexander.hpp"
#include "lslab/hfun.hpp"
#include "lslab/surgery.hpp"

using namespace lslab;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Box {
  long long a1, b1, a2, b2;
};

Box parse_box(const std::string& s) {
  // "a:b,c:d"
  Box box{};
  char c1, c2, c3;
  std::istringstream in(s);
  if (!(in >> box.a1 >> c1 >> box.b1 >> c2 >> box.a2 >> c3 >> box.b2) || c1 != ':' ||
      c2 != ',' || c3 != ':' || box.a1 > box.b1 || box.a2 > box.b2)
    throw ParseError("box must be a1:b1,a2:b2 with finite ranges");
  return box;
}

int default_jobs() {
  if (const char* env = std::getenv("LSLAB_JOBS")) {
    int j = std::atoi(env);
    if (j > 0) return j;
  }
  return 1;
}

std::string fmt_pt(Pt p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

int cmd_report(const std::string& link_path, bool explain) {
  auto lk = link_from_json_string(slurp(link_path));
  std::cout << "components: g1=" << lk.g1() << " g2=" << lk.g2() << "  l=" << lk.l() << "\n";
  std::cout << "m1=" << lk.m1.get_str() << " m2=" << lk.m2.get_str() << "  c=" << fmt_pt(lk.c)
            << (lk.parallel ? "  (parallel)" : "") << "\n";
  std::cout << "Delta = " << lk.delta.to_string() << "\n";
  std::pair<Pt, Pt> witness;
  bool ordered = ordered_type(lk.delta, &witness);
  std::cout << "ordered type: " << (ordered ? "yes" : "no");
  if (!ordered)
    std::cout << "  (witness " << fmt_pt(witness.first) << " / " << fmt_pt(witness.second) << ")";
  std::cout << "\n";
  auto h = make_link_h(lk);
  auto vg = h->find_very_good();
  std::cout << "very good point: " << (vg ? fmt_pt(*vg) : std::string("none")) << "\n";
  auto b = classify_boundedness(lk);
  std::cout << "LS(L) is "
            << (b.verdict == Boundedness::BoundedBelow ? "bounded" : "unbounded")
            << " from below  [" << b.certificate << "]\n";
  if (explain) {
    std::cout << "graph: " << graph_to_json_string(lk.graph) << "\n";
    std::cout << "branch semigroup 1 (below conductor " << lk.sg1.conductor << "):";
    for (auto s : lk.sg1.below_conductor) std::cout << " " << s;
    std::cout << "\nbranch semigroup 2 (below conductor " << lk.sg2.conductor << "):";
    for (auto s : lk.sg2.below_conductor) std::cout << " " << s;
    std::cout << "\n";
  }
  return 0;
}

int cmd_scan(const std::string& link_path, const std::string& box_s, const std::string& format,
             int jobs, int trunc_m, int trunc_n) {
  auto lk = link_from_json_string(slurp(link_path));
  Box box = parse_box(box_s);
  LsTestOptions opts;
  opts.trunc_M = trunc_m;
  opts.trunc_N = trunc_n;
  auto scan = ls_scan(lk, {box.a1, box.b1}, {box.a2, box.b2}, jobs, opts);
  if (format == "csv") std::cout << scan.csv();
  else if (format == "json") std::cout << scan.json() << "\n";
  else std::cout << scan.ascii();
  for (long long d1 = box.a1; d1 <= box.b1; ++d1)
    for (long long d2 = box.a2; d2 <= box.b2; ++d2)
      if (scan.at(d1, d2).verdict == Ls::Indeterminate) return 1;
  return 0;
}

int cmd_classify(const std::string& link_path, bool explain) {
  auto lk = link_from_json_string(slurp(link_path));
  auto b = classify_boundedness(lk);
  std::cout << (b.verdict == Boundedness::BoundedBelow ? "BoundedBelow" : "UnboundedBelow")
            << "\n";
  std::cout << "certificate: " << b.certificate << "\n";
  if (explain) {
    std::cout << "conditions: very_good=" << b.cond_very_good
              << " unordered=" << b.cond_unordered << " graph=" << b.cond_graph << "\n";
  }
  return 0;
}

int cmd_hgrid(const std::string& link_path, const std::string& box_s, const std::string& format) {
  auto lk = link_from_json_string(slurp(link_path));
  auto h = make_link_h(lk);
  Box box{0, lk.c.first + 1, 0, lk.c.second + 1};
  if (!box_s.empty()) box = parse_box(box_s);
  if (format == "csv" || format == "json") {
    std::cout << "v1,v2,h\n";
    for (long long a = box.a1; a <= box.b1; ++a)
      for (long long b = box.a2; b <= box.b2; ++b)
        std::cout << a << "," << b << "," << h->h(a, b) << "\n";
  } else {
    // rows v2 descending, columns v1 ascending; semigroup points bracketed
    auto sg = h->semigroup_from_h({box.a1, box.a2}, {box.b1, box.b2});
    std::set<Pt> sgs(sg.begin(), sg.end());
    for (long long b = box.b2; b >= box.a2; --b) {
      for (long long a = box.a1; a <= box.b1; ++a) {
        bool bold = sgs.count({a, b}) > 0;
        std::cout << (bold ? "[" : " ") << h->h(a, b) << (bold ? "]" : " ");
      }
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_alexander(const std::string& link_path, const std::string& format) {
  auto lk = link_from_json_string(slurp(link_path));
  if (format == "csv") {
    std::cout << "v1,v2\n";
    for (auto& p : lk.delta.support()) std::cout << p.first << "," << p.second << "\n";
  } else if (format == "json") {
    std::cout << poly_to_json_string(lk.delta) << "\n";
  } else {
    std::cout << lk.delta.to_string() << "\n";
  }
  return 0;
}

int cmd_graph(const std::string& what, const std::string& graph_path,
              const std::string& vertex, bool explain) {
  auto g = graph_from_json_string(slurp(graph_path));
  if (what == "det") {
    std::cout << graph_det(g).get_str() << "\n";
    return 0;
  }
  if (what == "zmin") {
    auto tr = minimal_cycle(g);
    nlohmann::json j;
    for (int v = 0; v < g.n(); ++v) j["cycle"][g.vertices[v].id] = tr.result.coeff[v].get_si();
    if (explain) {
      j["trace"] = nlohmann::json::array();
      for (auto& step : tr.steps)
        j["trace"].push_back({{"add", g.vertices[step.chosen_vertex].id},
                              {"testing_number", step.testing_number.get_si()}});
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (what == "rational") {
    auto tr = minimal_cycle(g);
    std::cout << (tr.all_testing_ones ? "rational" : "not rational") << "\n";
    if (explain && !tr.all_testing_ones) {
      for (auto& step : tr.steps)
        if (step.testing_number > 1)
          std::cout << "testing number " << step.testing_number.get_str() << " at "
                    << g.vertices[step.chosen_vertex].id << "\n";
    }
    return 0;
  }
  if (what == "simple") {
    if (vertex.empty()) throw ParseError("--vertex required for graph simple");
    std::cout << (is_simple_vertex(g, g.require_vertex(vertex)) ? "simple" : "not simple")
              << "\n";
    return 0;
  }
  if (what == "lspace") {
    auto v = is_lspace_graph(g);
    std::cout << to_string(v.verdict) << "  [" << v.certificate << "]\n";
    return v.verdict == Ls::Indeterminate ? 1 : 0;
  }
  throw ParseError("graph subcommand must be det|zmin|rational|simple|lspace");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"L-space surgeries on two-component algebraic links"};
  app.require_subcommand(1);

  std::string link_path, graph_path, box_s, format = "ascii", vertex, what;
  int jobs = default_jobs(), trunc_m = -1, trunc_n = 6;
  bool explain = false;

  auto add_common = [&](CLI::App* sub, bool needs_link) {
    if (needs_link) sub->add_option("--link", link_path, "link spec JSON file")->required();
    sub->add_flag("--explain", explain, "print certificates and traces");
  };

  auto* report = app.add_subcommand("report", "invariant report for a link");
  add_common(report, true);

  auto* scan = app.add_subcommand("scan", "L-space region scan");
  add_common(scan, true);
  scan->add_option("--box", box_s, "d1 and d2 ranges, a:b,c:d")->required();
  scan->add_option("--format", format, "ascii|csv|json");
  scan->add_option("--jobs", jobs, "parallel workers (or LSLAB_JOBS)");
  scan->add_option("--trunc-m", trunc_m, "surgery complex box override");
  scan->add_option("--trunc-n", trunc_n, "surgery complex U-power");

  auto* classify = app.add_subcommand("classify", "boundedness of LS(L)");
  add_common(classify, true);

  auto* hgrid = app.add_subcommand("hgrid", "h-function table");
  add_common(hgrid, true);
  hgrid->add_option("--box", box_s, "v1 and v2 ranges, a:b,c:d");
  hgrid->add_option("--format", format, "ascii|csv");

  auto* alex = app.add_subcommand("alexander", "Alexander polynomial and support");
  add_common(alex, true);
  alex->add_option("--format", format, "ascii|csv|json");

  auto* graph = app.add_subcommand("graph", "plumbing graph computations");
  graph->add_option("what", what, "det|zmin|rational|simple|lspace")->required();
  graph->add_option("--graph", graph_path, "graph JSON file")->required();
  graph->add_option("--vertex", vertex, "vertex id for simple");
  graph->add_flag("--explain", explain, "print traces");

  CLI11_PARSE(app, argc, argv);

  try {
    if (report->parsed()) return cmd_report(link_path, explain);
    if (scan->parsed()) return cmd_scan(link_path, box_s, format, jobs, trunc_m, trunc_n);
    if (classify->parsed()) return cmd_classify(link_path, explain);
    if (hgrid->parsed()) return cmd_hgrid(link_path, box_s, format);
    if (alex->parsed()) return cmd_alexander(link_path, format);
    if (graph->parsed()) return cmd_graph(what, graph_path, vertex, explain);
  } catch (const TesterDisagreement& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const EquivalenceViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const BoundViolated& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
