#pragma once

#include "eggdrop/core.hpp"

#include <vector>

namespace eggdrop {

// Minimal worst-case drops for `floors` floors and `eggs` eggs.
class DpTable {
 public:
  static constexpr Int kMaxFloors = 100000;

  DpTable(Int max_floors, int max_eggs);
  Int get(Int floors, int eggs) const;
  Int max_floors() const { return max_floors_; }
  int max_eggs() const { return max_eggs_; }

 private:
  Int max_floors_;
  int max_eggs_;
  std::vector<std::vector<Int>> table_;  // [eggs][floors]
};

Int dp_min_drops(Int floors, int eggs);

// sum_{j=1..k} C(n, j); throws OverflowError past 64-bit range.
Int boardman_capacity(Int drops, int eggs);

LinePartition brute_force_line_partition(Int m, Int n, const HiddenTruth& truth);

}  // namespace eggdrop
