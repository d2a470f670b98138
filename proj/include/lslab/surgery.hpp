#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lslab/hfun.hpp"
#include "lslab/link.hpp"
#include "lslab/rational.hpp"
#include "lslab/surgery_complex.hpp"

namespace lslab {

struct LsVerdict {
  Ls verdict = Ls::Indeterminate;
  std::string certificate;
};

// Surgery graph: arrowheads replaced by vertices framed d_i - m_i attached at
// the supports. Asserts |det| = |det Lambda|.
PlumbingGraph surgery_plumbing(const AlgebraicLink& lk, long long d1, long long d2);

struct LsTestOptions {
  bool use_complex_fallback = true;  // consult the surgery-complex tester
  bool cross_check = false;          // always run both testers and compare
  int trunc_N = 6;
  int trunc_M = -1;
  bool use_theorems = true;          // theorem-backed verdicts with certificates
};

// Combined L-space tester: plumbing-calculus route first, the theorem layer
// (large-surgery and very-good-point bounds) and the surgery-complex tester
// as independent opinions. Definite verdicts must agree or
// TesterDisagreement is thrown.
class SurgeryTester {
 public:
  explicit SurgeryTester(const AlgebraicLink& lk, LsTestOptions opts = {});

  LsVerdict ls_test(long long d1, long long d2) const;
  const AlgebraicLink& link() const { return lk_; }
  const HFunction& h() const { return *h_; }
  std::optional<Pt> very_good() const { return very_good_; }

 private:
  AlgebraicLink lk_;
  LsTestOptions opts_;
  std::shared_ptr<HFunction> h_;
  std::optional<Pt> very_good_;
};

LsVerdict ls_test(const AlgebraicLink& lk, long long d1, long long d2,
                  const LsTestOptions& opts = {});

struct ScanResult {
  Pt d1_range, d2_range;  // inclusive
  std::vector<std::vector<LsVerdict>> grid;  // grid[i][j]: d1 = lo1+i, d2 = lo2+j
  const LsVerdict& at(long long d1, long long d2) const;
  std::string ascii() const;  // rows d2 descending; legend as in the figures
  std::string csv() const;
  std::string json() const;
};

ScanResult ls_scan(const AlgebraicLink& lk, Pt d1_range, Pt d2_range, int jobs = 1,
                   const LsTestOptions& opts = {});

// Theorem-bound audit: with a very good point present, every LSpace point of
// the scan must satisfy d1 > 0, d2 > 0, d1 d2 > l^2. Throws BoundViolated.
bool positivity_bound_check(const AlgebraicLink& lk, const ScanResult& scan);

enum class Boundedness { BoundedBelow, UnboundedBelow };

struct BoundednessResult {
  Boundedness verdict = Boundedness::UnboundedBelow;
  bool cond_very_good = false;      // (3)
  bool cond_unordered = false;      // (4)
  bool cond_graph = false;          // (5)
  std::optional<Pt> very_good_point;
  std::optional<std::pair<Pt, Pt>> unordered_witness;
  std::string certificate;
};

// Five-way-equivalence classifier; evaluates (3), (4), (5) independently and
// throws EquivalenceViolation if they disagree.
BoundednessResult classify_boundedness(const AlgebraicLink& lk);

struct CornerResult {
  bool unknot2 = false;           // Delta_2 = 1
  bool simple2 = false;           // v2 simple in the resolution graph
  std::vector<std::pair<long long, Ls>> probes;  // ls_test(m1, d2)
  bool corner_present = false;
};

// (L2 unknot) <=> (v2 simple) <=> deep-negative d2 corner along d1 = m1.
CornerResult corner_test(const AlgebraicLink& lk);

struct ParallelLinesResult {
  Int m;  // m1 = m2
  std::vector<std::pair<Pt, Ls>> samples;  // all expected LSpace
};

// Lemma-style test lines through (m1, m2) for parallel links. Throws
// NotParallel on non-parallel input.
ParallelLinesResult parallel_lines(const AlgebraicLink& lk);

// v_i simple in the component of Gamma - v_j containing v_i (the lemma (b)
// hypothesis); meaningful for non-parallel links.
bool simple_in_complement(const AlgebraicLink& lk, int which);

}  // namespace lslab
