#pragma once

#include "eggdrop/core.hpp"

namespace eggdrop {

// Answers drop queries against a hidden truth and enforces the egg budget.
class Environment {
 public:
  Environment(Region region, HiddenTruth truth, int budget);

  Outcome query(const DropPoint& p);

  const Region& region() const { return region_; }
  const HiddenTruth& truth() const { return truth_; }
  int budget() const { return budget_; }
  Int drops() const { return drops_; }
  int eggs_broken() const { return broken_; }
  int eggs_left() const { return budget_ - broken_; }
  const Trace& trace() const { return trace_; }

 private:
  Region region_;
  HiddenTruth truth_;
  int budget_;
  Int drops_ = 0;
  int broken_ = 0;
  Trace trace_;
};

}  // namespace eggdrop
