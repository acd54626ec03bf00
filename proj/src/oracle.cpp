#include "eggdrop/oracle.hpp"

#include <algorithm>
#include <limits>

namespace eggdrop {

namespace {

// More eggs than ceil(log2(N+1)) never help.
int useful_eggs(Int floors, int eggs) {
  int bits = 0;
  while ((Int{1} << bits) < floors + 1) ++bits;
  return std::max(1, std::min(eggs, bits));
}

}  // namespace

DpTable::DpTable(Int max_floors, int max_eggs) : max_floors_(max_floors), max_eggs_(max_eggs) {
  if (max_floors < 0 || max_eggs < 1) throw DomainError("need floors >= 0 and eggs >= 1");
  if (max_floors > kMaxFloors) throw DomainError("floor count above the DP limit of 100000");
  const int eggs = useful_eggs(max_floors, max_eggs);
  const auto width = static_cast<std::size_t>(max_floors + 1);
  table_.assign(static_cast<std::size_t>(eggs) + 1, std::vector<Int>(width, 0));
  for (Int f = 0; f <= max_floors; ++f) table_[1][static_cast<std::size_t>(f)] = f;
  for (int k = 2; k <= eggs; ++k) {
    const auto& below = table_[static_cast<std::size_t>(k - 1)];
    auto& row = table_[static_cast<std::size_t>(k)];
    for (Int f = 1; f <= max_floors; ++f) {
      // max(below[x-1], row[f-x]) is unimodal in x; binary search the crossing.
      Int lo = 1, hi = f;
      while (lo < hi) {
        Int mid = (lo + hi) / 2;
        if (below[static_cast<std::size_t>(mid - 1)] < row[static_cast<std::size_t>(f - mid)])
          lo = mid + 1;
        else
          hi = mid;
      }
      Int best = std::numeric_limits<Int>::max();
      for (Int x = std::max<Int>(1, lo - 1); x <= std::min(f, lo + 1); ++x)
        best = std::min(best, 1 + std::max(below[static_cast<std::size_t>(x - 1)], row[static_cast<std::size_t>(f - x)]));
      row[static_cast<std::size_t>(f)] = best;
    }
  }
}

Int DpTable::get(Int floors, int eggs) const {
  if (floors < 0 || floors > max_floors_ || eggs < 1) throw DomainError("query outside the DP table");
  const int k = std::min(eggs, static_cast<int>(table_.size()) - 1);
  return table_[static_cast<std::size_t>(k)][static_cast<std::size_t>(floors)];
}

Int dp_min_drops(Int floors, int eggs) {
  if (floors < 0 || eggs < 1) throw DomainError("need floors >= 0 and eggs >= 1");
  return DpTable(floors, eggs).get(floors, eggs);
}

Int boardman_capacity(Int drops, int eggs) {
  if (drops < 0 || eggs < 1) throw DomainError("need drops >= 0 and eggs >= 1");
  using Wide = __int128;
  const Wide limit = std::numeric_limits<Int>::max();
  Wide total = 0, term = 1;
  for (int j = 1; j <= eggs && j <= drops; ++j) {
    term = term * (drops - j + 1) / j;  // C(n, j), exact at each step
    total += term;
    if (term > limit || total > limit) throw OverflowError("capacity exceeds 64-bit range");
  }
  return static_cast<Int>(total);
}

LinePartition brute_force_line_partition(Int m, Int n, const HiddenTruth& truth) {
  if (std::holds_alternative<CriticalPoint>(truth)) throw DomainError("partition oracle needs a line truth");
  LinePartition p;
  p.m = m;
  p.n = n;
  p.breaking.resize(static_cast<std::size_t>((m + 1) * (n + 1)));
  // Lattice sums are integers, so x + y >= V is x + y >= ceil(V).
  const auto* sum = std::get_if<SumLine>(&truth);
  const Int t = sum ? ceil_int(sum->v) : 0;
  const auto* line = std::get_if<GeneralLine>(&truth);
  for (Int x = 0; x <= m; ++x)
    for (Int y = 0; y <= n; ++y)
      p.breaking[static_cast<std::size_t>(x * (n + 1) + y)] = sum ? x + y >= t : line->breaks_lattice(x, y);
  return p;
}

}  // namespace eggdrop
