#pragma once

#include "eggdrop/core.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

namespace eggdrop {

// Consistent critical points: lower_i < c_i <= upper_i, plus "some c_i <= a_i" per break.
class PointKnowledge {
 public:
  explicit PointKnowledge(const Region& r);

  void observe(const DropPoint& p, Outcome o);

  std::size_t dimension() const { return lower_.size(); }
  Int lower(std::size_t i) const { return lower_[i]; }
  Int upper(std::size_t i) const { return upper_[i]; }
  // True once a break has forced c_i <= upper(i) on its own.
  bool upper_forced(std::size_t i) const { return forced_[i]; }
  const std::vector<std::vector<Int>>& disjunctions() const { return open_; }

  bool admits(const std::vector<Int>& c) const;
  std::size_t count(std::size_t cap = std::numeric_limits<std::size_t>::max()) const;
  std::optional<std::vector<Int>> resolved() const;

  bool operator==(const PointKnowledge&) const = default;

 private:
  void propagate();

  std::vector<Int> lower_;
  std::vector<Int> upper_;
  std::vector<bool> forced_;
  std::vector<std::vector<Int>> open_;
  std::vector<std::vector<Int>> all_;
};

// V lies in (lo, hi].
class SumLineKnowledge {
 public:
  SumLineKnowledge(Int m, Int n);

  void observe(const DropPoint& p, Outcome o);
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  // Number of distinct lattice splits still possible.
  std::size_t count() const;
  std::optional<Int> resolved_threshold() const;
  Int m() const { return m_; }
  Int n() const { return n_; }

  bool operator==(const SumLineKnowledge&) const = default;

 private:
  Int m_, n_;
  Rational lo_, hi_;
};

class LineSetKnowledge {
 public:
  LineSetKnowledge(Int m, Int n);
  LineSetKnowledge(Int m, Int n, std::vector<GeneralLine> candidates);

  void observe(const DropPoint& p, Outcome o);
  const std::vector<GeneralLine>& candidates() const { return lines_; }
  std::size_t count() const { return lines_.size(); }
  // Present when every remaining line induces the same lattice split.
  std::optional<LinePartition> resolved() const;
  Int m() const { return m_; }
  Int n() const { return n_; }

  bool operator==(const LineSetKnowledge&) const = default;

 private:
  Int m_, n_;
  std::vector<GeneralLine> lines_;
};

using KnowledgeState = std::variant<PointKnowledge, SumLineKnowledge, LineSetKnowledge>;

KnowledgeState initial_knowledge(const Region& r, const HiddenTruth& shape);
KnowledgeState ks_update(KnowledgeState s, const DropPoint& p, Outcome o);
std::optional<Answer> ks_resolved(const KnowledgeState& s);
bool ks_contains(const KnowledgeState& s, const HiddenTruth& t);
std::size_t ks_size(const KnowledgeState& s);

// Lines alpha*x + beta*y = V with alpha, beta >= 0, V > 0, through two lattice
// points of [0,m]x[0,n]; sorted and deduplicated.
std::vector<GeneralLine> enumerate_general_lines(Int m, Int n);

LinePartition partition_of(Int m, Int n, const GeneralLine& g);

}  // namespace eggdrop
