#include "lslab/hfun.hpp"

#include <algorithm>

namespace lslab {

bool HFunction::is_good(Pt v) const {
  long long hv = h(v.first, v.second);
  return hv > h1(v.first) && hv > h2(v.second);
}

bool HFunction::is_very_good(Pt v) const {
  Pt cc = c();
  return is_good(v) && is_good({cc.first - v.first, cc.second - v.second});
}

std::optional<Pt> HFunction::find_very_good() const {
  Pt cc = c();
  for (long long a = 0; a <= cc.first; ++a)
    for (long long b = 0; b <= cc.second; ++b)
      if (is_very_good({a, b})) return Pt{a, b};
  return std::nullopt;
}

std::vector<Pt> HFunction::semigroup_from_h(Pt lo, Pt hi) const {
  std::vector<Pt> out;
  for (long long a = lo.first; a <= hi.first; ++a)
    for (long long b = lo.second; b <= hi.second; ++b) {
      long long base = h(a, b);
      if (h(a + 1, b) == base + 1 && h(a, b + 1) == base + 1) out.push_back({a, b});
    }
  return out;
}

long long HFunction::alexander_coefficient(Pt v) const {
  return h(v.first + 1, v.second) + h(v.first, v.second + 1) - h(v.first, v.second) -
         h(v.first + 1, v.second + 1);
}

// ---------------------------------------------------------------------------
// SemigroupHFunction

SemigroupHFunction::SemigroupHFunction(std::function<bool(long long, long long)> member, Pt c,
                                       long long search_cap)
    : member_(std::move(member)), c_(c), cap_(search_cap) {
  box_ = static_cast<int>(std::max({c.first, c.second, cap_}) + 3);
  // build by row increments, then verify against column increments
  std::vector<std::vector<long long>> rows(box_ + 1, std::vector<long long>(box_ + 1, 0));
  for (long long b = 0; b <= box_; ++b)
    for (long long a = 0; a < box_; ++a)
      rows[a + 1][b] = rows[a][b] + (exists_ge_col(a, b) ? 1 : 0);
  // column direction must start from consistent row values: rebuild
  std::vector<std::vector<long long>> cols(box_ + 1, std::vector<long long>(box_ + 1, 0));
  for (long long a = 0; a <= box_; ++a)
    for (long long b = 0; b < box_; ++b)
      cols[a][b + 1] = cols[a][b] + (exists_ge_row(a, b) ? 1 : 0);
  // rows built from the a-axis upward must agree with cols built from the
  // b-axis; combine: h(a,b) via rows needs h(0,b) = cols[0][b]
  std::vector<std::vector<long long>> final_table(box_ + 1, std::vector<long long>(box_ + 1, 0));
  for (long long a = 0; a <= box_; ++a)
    for (long long b = 0; b <= box_; ++b) {
      long long via_rows = cols[0][b] + rows[a][b];
      long long via_cols = rows[a][0] + cols[a][b];
      if (via_rows != via_cols)
        throw InconsistentSemigroup("path independence fails at (" + std::to_string(a) + "," +
                                    std::to_string(b) + ")");
      final_table[a][b] = via_rows;
    }
  table_ = std::move(final_table);
}

bool SemigroupHFunction::exists_ge_col(long long v1, long long v2) const {
  long long top = std::max(v2, std::max(c_.second, cap_)) + 1;
  for (long long y = std::max(0LL, v2); y <= top; ++y)
    if (member_(v1, y)) return true;
  return false;
}

bool SemigroupHFunction::exists_ge_row(long long v1, long long v2) const {
  long long top = std::max(v1, std::max(c_.first, cap_)) + 1;
  for (long long x = std::max(0LL, v1); x <= top; ++x)
    if (member_(x, v2)) return true;
  return false;
}

long long SemigroupHFunction::h(long long v1, long long v2) const {
  v1 = std::max(v1, 0LL);
  v2 = std::max(v2, 0LL);
  long long extra = 0;
  if (v1 > box_) {
    extra += v1 - box_;
    v1 = box_;
  }
  if (v2 > box_) {
    extra += v2 - box_;
    v2 = box_;
  }
  return table_[v1][v2] + extra;
}

long long SemigroupHFunction::h1(long long v) const { return h(v, 0); }
long long SemigroupHFunction::h2(long long v) const { return h(0, v); }
long long SemigroupHFunction::stabilization_radius() const { return box_; }

bool SemigroupHFunction::good_by_witness(Pt v) const {
  if (v.first <= 0 || v.second <= 0) return false;
  bool right_low = false;
  for (long long a = v.first; a <= std::max(v.first, cap_) + 1 && !right_low; ++a)
    for (long long b = 0; b < v.second && !right_low; ++b)
      if (member_(a, b)) right_low = true;
  bool left_high = false;
  for (long long a = 0; a < v.first && !left_high; ++a)
    for (long long b = v.second; b <= std::max(v.second, cap_) + 1 && !left_high; ++b)
      if (member_(a, b)) left_high = true;
  return right_low && left_high;
}

// ---------------------------------------------------------------------------
// AlexanderHFunction

namespace {

long long count_below(const BranchSemigroup& sg, long long v) {
  // #{s in S : s < v}
  if (v <= 0) return 0;
  long long below =
      std::lower_bound(sg.below_conductor.begin(), sg.below_conductor.end(), v) -
      sg.below_conductor.begin();
  if (v > sg.conductor) below += v - sg.conductor;
  return below;
}

}  // namespace

AlexanderHFunction::AlexanderHFunction(const AlgebraicLink& lk)
    : support_(lk.delta.support()), sg1_(lk.sg1), sg2_(lk.sg2), c_(lk.c) {}

long long AlexanderHFunction::h(long long v1, long long v2) const {
  long long a = std::max(v1, 0LL), b = std::max(v2, 0LL);
  long long boxcount = 0;
  for (auto& p : support_)
    if (p.first < a && p.second < b) ++boxcount;
  return count_below(sg1_, a) + count_below(sg2_, b) - boxcount;
}

long long AlexanderHFunction::h1(long long v) const { return count_below(sg1_, v); }
long long AlexanderHFunction::h2(long long v) const { return count_below(sg2_, v); }

long long AlexanderHFunction::stabilization_radius() const {
  return std::max({c_.first, c_.second, sg1_.conductor, sg2_.conductor}) + 2;
}

bool AlexanderHFunction::semigroup_member(long long a, long long b) const {
  long long base = h(a, b);
  return h(a + 1, b) == base + 1 && h(a, b + 1) == base + 1;
}

// ---------------------------------------------------------------------------
// TableHFunction

TableHFunction::TableHFunction(Pt lo, Pt hi, std::vector<std::vector<long long>> grid, Pt c)
    : lo_(lo), hi_(hi), c_(c), grid_(std::move(grid)) {
  long long n1 = hi_.first - lo_.first, n2 = hi_.second - lo_.second;
  if (n1 < 1 || n2 < 1 || grid_.size() != static_cast<size_t>(n1 + 1))
    throw StabilizationMissing("grid extent does not match the declared box");
  for (auto& row : grid_)
    if (row.size() != static_cast<size_t>(n2 + 1))
      throw StabilizationMissing("ragged h grid");
  // outermost rows/columns must certify linear growth beyond hi
  for (long long j = 0; j <= n2; ++j)
    if (grid_[n1][j] - grid_[n1 - 1][j] != 1)
      throw StabilizationMissing("last two columns do not increase by 1");
  for (long long i = 0; i <= n1; ++i)
    if (grid_[i][n2] - grid_[i][n2 - 1] != 1)
      throw StabilizationMissing("last two rows do not increase by 1");
  // monotone with {0,1} steps
  for (long long i = 0; i <= n1; ++i)
    for (long long j = 0; j <= n2; ++j) {
      if (i > 0) {
        long long d = grid_[i][j] - grid_[i - 1][j];
        if (d < 0 || d > 1) throw StabilizationMissing("first difference outside {0,1}");
      }
      if (j > 0) {
        long long d = grid_[i][j] - grid_[i][j - 1];
        if (d < 0 || d > 1) throw StabilizationMissing("first difference outside {0,1}");
      }
    }
}

long long TableHFunction::h(long long v1, long long v2) const {
  long long extra = 0;
  v1 = std::max(v1, lo_.first);
  v2 = std::max(v2, lo_.second);
  if (v1 > hi_.first) {
    extra += v1 - hi_.first;
    v1 = hi_.first;
  }
  if (v2 > hi_.second) {
    extra += v2 - hi_.second;
    v2 = hi_.second;
  }
  return grid_[v1 - lo_.first][v2 - lo_.second] + extra;
}

long long TableHFunction::h1(long long v) const { return h(v, lo_.second); }
long long TableHFunction::h2(long long v) const { return h(lo_.first, v); }

long long TableHFunction::stabilization_radius() const {
  return std::max({std::abs(lo_.first), std::abs(lo_.second), std::abs(hi_.first),
                   std::abs(hi_.second)}) +
         1;
}

// ---------------------------------------------------------------------------
// factories

std::shared_ptr<HFunction> make_link_h(const AlgebraicLink& lk) {
  auto alex = std::make_shared<AlexanderHFunction>(lk);
  // Quarantine: rebuild through the semigroup increment rule and compare on a
  // box around [ -2, c+2 ]. Any mismatch is a hard failure.
  long long capv = std::max(lk.c.first, lk.c.second) + 2;
  SemigroupHFunction sg(
      [alex](long long a, long long b) { return alex->semigroup_member(a, b); }, lk.c, capv);
  for (long long a = -2; a <= lk.c.first + 2; ++a)
    for (long long b = -2; b <= lk.c.second + 2; ++b)
      if (sg.h(a, b) != alex->h(a, b))
        throw InconsistentSemigroup("closed-form h disagrees with the increment construction at (" +
                                    std::to_string(a) + "," + std::to_string(b) + ")");
  return alex;
}

std::shared_ptr<HFunction> whitehead_h() {
  // rows: v1 = -1..3; columns: v2 = -1..3
  std::vector<std::vector<long long>> grid = {
      {0, 0, 1, 2, 3},
      {0, 1, 1, 2, 3},
      {1, 1, 2, 3, 4},
      {2, 2, 3, 4, 5},
      {3, 3, 4, 5, 6},
  };
  return std::make_shared<TableHFunction>(Pt{-1, -1}, Pt{3, 3}, std::move(grid), Pt{0, 0});
}

}  // namespace lslab
