#pragma once

#include "eggdrop/environment.hpp"
#include "eggdrop/knowledge.hpp"

namespace eggdrop::detail {

// Sends drops to the environment and keeps the trace and knowledge in step.
class Recorder {
 public:
  Recorder(Environment& env, KnowledgeState ks) : env_(env), ks_(std::move(ks)) {}

  Outcome drop(const DropPoint& p) {
    const Outcome o = env_.query(p);
    std::visit([&](auto& k) { k.observe(p, o); }, ks_);
    trace_.push(p, o);
    return o;
  }

  const KnowledgeState& knowledge() const { return ks_; }
  template <class K>
  const K& as() const { return std::get<K>(ks_); }

  StrategyReport finish(ProblemKind kind, const Region& r, int eggs, Mode mode, Int bound) {
    auto answer = ks_resolved(ks_);
    if (!answer) throw AmbiguousResult("drops do not determine a unique answer");
    StrategyReport rep;
    rep.kind = kind;
    rep.region = r;
    rep.eggs = eggs;
    rep.mode = mode;
    rep.answer = std::move(*answer);
    rep.drops = static_cast<Int>(trace_.size());
    rep.trace = std::move(trace_);
    rep.bound_value = bound;
    rep.bound_met = rep.drops <= bound;
    return rep;
  }

 private:
  Environment& env_;
  KnowledgeState ks_;
  Trace trace_;
};

inline void check_setup(const Environment& env, const Region& r, int eggs, int minimum) {
  if (!(env.region() == r)) throw DomainError("environment region does not match the problem");
  if (eggs < minimum) throw InsufficientEggs("not enough eggs for this strategy");
  if (eggs > env.budget()) throw DomainError("strategy egg count exceeds the environment budget");
}

}  // namespace eggdrop::detail
