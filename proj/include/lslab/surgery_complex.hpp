#pragma once

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "lslab/hfun.hpp"
#include "lslab/rational.hpp"  // Ls

namespace lslab {

// Integer framing matrix [[d1, l], [l, d2]] of a 2-component surgery.
struct FramingMatrix {
  long long d1 = 0, d2 = 0, l = 0;

  Int det() const { return to_int(d1) * to_int(d2) - to_int(l) * to_int(l); }
  bool positive_definite() const { return d1 > 0 && det() > 0; }
};

// Residue classes of Z^2 / Lambda Z^2, with small representatives.
std::vector<Pt> spin_c_representatives(const FramingMatrix& lam);

// Truncated Manolescu-Ozsvath style complex for one spin-c class: generators
// z_K(v + Lambda u), K subset of {1,2}, |u|_inf <= M, over F[U]/U^N unrolled
// to F_2. Short and long differentials carry the h-function exponents; arrows
// leaving the box are dropped and counted.
class SurgeryComplex {
 public:
  SurgeryComplex(const HFunction& h, const FramingMatrix& lam, Pt v, int M, int N);

  long long homology_dim() const;  // total F-dimension (includes junk towers)
  // F-dimension of the homology in gradings at or below the junk cut; for a
  // large enough box this is the genuine part, N exactly per L-space class
  long long homology_dim_below_cut() const;
  long long junk_cut() const { return junk_cut_; }
  std::map<long long, long long> graded_homology() const;
  bool d_squared_is_zero() const;
  // every arrow drops the absolute grading by exactly 1
  bool gradings_consistent() const;
  long long truncated_arrows() const { return truncated_; }
  int generator_count() const { return static_cast<int>(gens_); }

  // decoded arrow list for inspection: (K, u) -> (K', u') with U-exponent
  struct ArrowView {
    int fromK;
    Pt from_u;
    int toK;
    Pt to_u;
    long long exp;
  };
  std::vector<ArrowView> arrow_views() const;

  std::string to_json() const;  // sparse triples (from, to, exponent)

 private:
  struct Arrow {
    int from, to;
    long long exp;
  };
  int M_, N_;
  long long gens_ = 0;
  long long junk_cut_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<long long> degree_;  // grading per generator (doubled not needed)
  long long truncated_ = 0;
};

struct HfTestOptions {
  int N = 6;
  int M = -1;         // -1: derive from the stabilization radius
  int max_M = 14;
  bool check_gradings = true;
};

struct HfTestResult {
  Ls verdict = Ls::Indeterminate;
  int M_used = 0, N_used = 0;
  std::string detail;
};

// L-space test from the surgery complex. Positive-definite framings only;
// the verdict additionally requires stability under (M,N) -> (M+2,N+1).
HfTestResult hf_complex_ls_test(const HFunction& h, const FramingMatrix& lam,
                                const HfTestOptions& opts = {});

}  // namespace lslab
