#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>

#include "doctest.h"
#include "lslab/surgery_complex.hpp"

using namespace lslab;

namespace {

AlgebraicLink two_trefoils() { return build_link({{{2, 3}}}, {{{2, 3}}}, SpliceFamily::II, 0); }

std::shared_ptr<HFunction> unlink_h() {
  std::vector<std::vector<long long>> lin(4, std::vector<long long>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) lin[i][j] = std::max(i - 1, 0) + std::max(j - 1, 0);
  return std::make_shared<TableHFunction>(Pt{-1, -1}, Pt{2, 2}, lin, Pt{0, 0});
}

}  // namespace

TEST_CASE("spin-c classes") {
  FramingMatrix lam{7, 7, 4};
  CHECK(lam.det() == 33);
  CHECK(spin_c_representatives(lam).size() == 33);
  FramingMatrix diag{1, 1, 0};
  CHECK(spin_c_representatives(diag).size() == 1);
  FramingMatrix deg{4, 4, 4};
  CHECK(deg.det() == 0);
  CHECK_THROWS_AS(spin_c_representatives(deg), PreconditionViolated);
  FramingMatrix mixed{3, 5, 4};
  CHECK(spin_c_representatives(mixed).size() == 1);
}

TEST_CASE("d squared is zero and gradings drop by one") {
  auto lk = two_trefoils();
  auto h = make_link_h(lk);
  for (auto [d1, d2] : std::vector<std::pair<long long, long long>>{{7, 7}, {3, 6}, {5, 4}}) {
    FramingMatrix lam{d1, d2, lk.l()};
    for (auto& v : spin_c_representatives(lam)) {
      SurgeryComplex cx(*h, lam, v, 3, 4);
      CHECK(cx.d_squared_is_zero());
      CHECK(cx.gradings_consistent());
    }
  }
  // also for a table provider
  auto uh = unlink_h();
  FramingMatrix lam{1, 1, 0};
  SurgeryComplex cx(*uh, lam, {0, 0}, 3, 4);
  CHECK(cx.d_squared_is_zero());
  CHECK(cx.gradings_consistent());
}

TEST_CASE("the exponent labels around a square") {
  // all twelve arrow labels of the surgery-complex square at v
  auto lk = two_trefoils();
  auto h = make_link_h(lk);
  long long d1 = 7, d2 = 6, l = lk.l();
  FramingMatrix lam{d1, d2, l};
  Pt v{1, 2};
  SurgeryComplex cx(*h, lam, v, 2, 3);
  Pt c = h->c();
  long long w1 = v.first, w2 = v.second;
  long long s1 = c.first - w1, s2 = c.second - w2;  // v*
  std::map<std::tuple<int, Pt, int, Pt>, long long> expect = {
      // from z_{12}(v)
      {{3, {0, 0}, 2, {0, 0}}, h->h(w1, w2) - h->h2(w2)},
      {{3, {0, 0}, 1, {0, 0}}, h->h(w1, w2) - h->h1(w1)},
      {{3, {0, 0}, 2, {-1, 0}}, h->h(s1, s2) - h->h2(s2)},
      {{3, {0, 0}, 1, {0, -1}}, h->h(s1, s2) - h->h1(s1)},
      // from z_1(v) and z_2(v)
      {{1, {0, 0}, 0, {0, 0}}, h->h1(w1)},
      {{1, {0, 0}, 0, {-1, 0}}, h->h1(s1 - l)},
      {{2, {0, 0}, 0, {0, 0}}, h->h2(w2)},
      {{2, {0, 0}, 0, {0, -1}}, h->h2(s2 - l)},
      // into the square from the shifted corners
      {{1, {0, -1}, 0, {0, -1}}, h->h1(w1 - l)},
      {{2, {-1, 0}, 0, {-1, 0}}, h->h2(w2 - l)},
  };
  int seen = 0;
  for (auto& a : cx.arrow_views()) {
    auto key = std::make_tuple(a.fromK, a.from_u, a.toK, a.to_u);
    auto it = expect.find(key);
    if (it != expect.end()) {
      CHECK(a.exp == it->second);
      ++seen;
    }
  }
  CHECK(seen == static_cast<int>(expect.size()));
}

TEST_CASE("unknot pair with diagonal framing has minimal rank") {
  auto uh = unlink_h();
  FramingMatrix lam{1, 1, 0};
  for (int N : {3, 5}) {
    SurgeryComplex cx(*uh, lam, {0, 0}, 6, N);
    CHECK(cx.homology_dim_below_cut() == N);  // S^3: one tower
  }
  auto res = hf_complex_ls_test(*uh, lam, {});
  CHECK(res.verdict == Ls::LSpace);
}

TEST_CASE("two trefoils: dimension per class at (7,7)") {
  auto lk = two_trefoils();
  auto h = make_link_h(lk);
  FramingMatrix lam{7, 7, lk.l()};
  auto reps = spin_c_representatives(lam);
  REQUIRE(reps.size() == 33);
  int N = 4;
  for (auto& v : reps) {
    SurgeryComplex cx(*h, lam, v, 6, N);
    CHECK(cx.homology_dim_below_cut() == N);
  }
}

TEST_CASE("hf tester on selected two-trefoil surgeries") {
  auto lk = two_trefoils();
  auto h = make_link_h(lk);
  HfTestOptions opts;
  opts.N = 4;
  // bullets of the published region
  for (auto [d1, d2] : std::vector<std::pair<long long, long long>>{{3, 6}, {5, 4}, {6, 3}}) {
    auto r = hf_complex_ls_test(*h, {d1, d2, lk.l()}, opts);
    CHECK(r.verdict == Ls::LSpace);
  }
  // positive definite but not an L-space: the complex sees torsion
  for (auto [d1, d2] : std::vector<std::pair<long long, long long>>{{17, 1}, {2, 16}}) {
    auto r = hf_complex_ls_test(*h, {d1, d2, lk.l()}, opts);
    CHECK(r.verdict == Ls::NotLSpace);
  }
  // outside the supported regime
  auto r = hf_complex_ls_test(*h, {3, 5, lk.l()}, opts);
  CHECK(r.verdict == Ls::Indeterminate);
  auto r0 = hf_complex_ls_test(*h, {-2, 5, lk.l()}, opts);
  CHECK(r0.verdict == Ls::Indeterminate);
}

TEST_CASE("whitehead surgeries stay in the positive quadrant") {
  auto h = whitehead_h();
  HfTestOptions opts;
  opts.N = 4;
  // sampled positive surgeries: verdicts must be stable and definite
  std::map<std::pair<long long, long long>, Ls> got;
  for (auto [d1, d2] : std::vector<std::pair<long long, long long>>{
           {1, 1}, {1, 2}, {2, 2}, {3, 5}, {5, 5}}) {
    auto r = hf_complex_ls_test(*h, {d1, d2, 0}, opts);
    CHECK(r.verdict != Ls::Indeterminate);
    got[{d1, d2}] = r.verdict;
  }
  // large surgeries on an L-space link are L-spaces
  CHECK(got[{5, 5}] == Ls::LSpace);
  CHECK(got[{3, 5}] == Ls::LSpace);
}

TEST_CASE("json dump") {
  auto uh = unlink_h();
  SurgeryComplex cx(*uh, {1, 1, 0}, {0, 0}, 2, 2);
  auto s = cx.to_json();
  CHECK(s.find("arrows") != std::string::npos);
}
