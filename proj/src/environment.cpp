#include "eggdrop/environment.hpp"

namespace eggdrop {

Environment::Environment(Region region, HiddenTruth truth, int budget)
    : region_(std::move(region)), truth_(std::move(truth)), budget_(budget) {
  if (budget_ < 1) throw DomainError("egg budget must be positive");
  validate_truth(region_, truth_);
}

Outcome Environment::query(const DropPoint& p) {
  if (broken_ >= budget_) throw OutOfEggs("no intact egg left");
  check_in_region(region_, p);
  Outcome o = breaks(truth_, p) ? Outcome::Broke : Outcome::Survived;
  ++drops_;
  if (o == Outcome::Broke) ++broken_;
  trace_.push(p, o);
  return o;
}

}  // namespace eggdrop
