#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "lslab/link.hpp"

namespace lslab {

// h-function of a 2-component L-space link: h : Z^2 -> Z_{>=0}, weakly
// increasing, h(v) = h(sup(v,0)) for the algebraic providers, together with
// the one-variable h-functions of the components and c(L).
class HFunction {
 public:
  virtual ~HFunction() = default;
  virtual long long h(long long v1, long long v2) const = 0;
  virtual long long h1(long long v) const = 0;
  virtual long long h2(long long v) const = 0;
  virtual Pt c() const = 0;
  // beyond this radius both first differences are fully stabilized
  virtual long long stabilization_radius() const = 0;

  bool is_good(Pt v) const;
  bool is_very_good(Pt v) const;
  // scan of [0,c1] x [0,c2]; symmetry makes the box sufficient
  std::optional<Pt> find_very_good() const;
  // fact-style double increment test on a box (inclusive corners)
  std::vector<Pt> semigroup_from_h(Pt lo, Pt hi) const;
  // Alexander coefficient a_v recovered from second differences
  long long alexander_coefficient(Pt v) const;
};

// Provider built from a 2D semigroup membership oracle by the increment rule
// h(v1+1,v2) = h(v1,v2) + [exists u in S, u1 = v1, u2 >= v2] (and its
// transpose), from h(0,0) = 0. Membership queries are clamped by `search_cap`:
// beyond it the oracle is assumed column/row-stable. Path independence across
// the box is verified; failure throws InconsistentSemigroup.
class SemigroupHFunction : public HFunction {
 public:
  SemigroupHFunction(std::function<bool(long long, long long)> member, Pt c, long long search_cap);

  long long h(long long v1, long long v2) const override;
  long long h1(long long v) const override;
  long long h2(long long v) const override;
  Pt c() const override { return c_; }
  long long stabilization_radius() const override;

  bool member(long long a, long long b) const { return member_(a, b); }
  // Lemma-style rectangle witness for goodness: semigroup points in
  // [v1,inf) x [0,v2-1] and [0,v1-1] x [v2,inf).
  bool good_by_witness(Pt v) const;

 private:
  std::function<bool(long long, long long)> member_;
  Pt c_;
  long long cap_;
  int box_;  // table extent
  std::vector<std::vector<long long>> table_;  // h on [0,box] x [0,box]
  bool exists_ge_col(long long v1, long long v2) const;
  bool exists_ge_row(long long v1, long long v2) const;
};

// Provider from the Alexander data of an algebraic link:
// h(v) = h1(v1+) + h2(v2+) - #(Supp(Delta) cap [0,v1) x [0,v2)), where the
// one-variable h's count branch semigroup elements. Validated at construction
// against the semigroup provider on a box around [0,c]; a mismatch throws.
class AlexanderHFunction : public HFunction {
 public:
  explicit AlexanderHFunction(const AlgebraicLink& lk);

  long long h(long long v1, long long v2) const override;
  long long h1(long long v) const override;
  long long h2(long long v) const override;
  Pt c() const override { return c_; }
  long long stabilization_radius() const override;

  bool semigroup_member(long long a, long long b) const;  // via double increments

 private:
  std::vector<Pt> support_;
  BranchSemigroup sg1_, sg2_;
  Pt c_;
};

// Explicit table provider for non-algebraic links. The grid covers
// [lo1,hi1] x [lo2,hi2]; the lo-row and lo-column must already be stabilized
// (they serve as the one-variable h's), and the two outermost rows/columns
// must differ by exactly one entrywise so queries beyond hi extend linearly.
class TableHFunction : public HFunction {
 public:
  TableHFunction(Pt lo, Pt hi, std::vector<std::vector<long long>> grid, Pt c);

  long long h(long long v1, long long v2) const override;
  long long h1(long long v) const override;
  long long h2(long long v) const override;
  Pt c() const override { return c_; }
  long long stabilization_radius() const override;

 private:
  Pt lo_, hi_, c_;
  std::vector<std::vector<long long>> grid_;  // grid[i][j] = h(lo1+i, lo2+j)
};

// The providers for a built algebraic link; `validated` cross-checks the
// closed-form h against the increment construction before returning.
std::shared_ptr<HFunction> make_link_h(const AlgebraicLink& lk);

// h-table of the Whitehead link (the standard normalized grid with c = (0,0)).
std::shared_ptr<HFunction> whitehead_h();

}  // namespace lslab
