#pragma once

#include "eggdrop/errors.hpp"
#include "eggdrop/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace eggdrop {

enum class Mode { Lattice, Abstract };
enum class Outcome { Survived, Broke };

enum class ProblemKind {
  OneD,
  Triangular,
  Point2D,
  Point3D,
  PointDD,
  LineM1,
  LineM2,
  LineGeneral,
};

std::string to_string(Mode m);
std::string to_string(Outcome o);
std::string to_string(ProblemKind k);
Mode parse_mode(std::string_view s);
Outcome parse_outcome(std::string_view s);
ProblemKind parse_kind(std::string_view s);

// Axis lengths, sorted non-increasing, each >= 1.
class Region {
 public:
  Region() = default;
  // Throws DomainError unless dims are non-empty, positive and non-increasing.
  explicit Region(std::vector<Int> dims);

  std::size_t dimension() const { return dims_.size(); }
  const std::vector<Int>& dims() const { return dims_; }
  Int operator[](std::size_t i) const { return dims_[i]; }
  Int total() const;  // sum of the sides
  // Number of lattice points of the closed box, saturating at `cap`.
  std::size_t lattice_points(std::size_t cap) const;

  bool operator==(const Region&) const = default;

 private:
  std::vector<Int> dims_;
};

struct DropPoint {
  std::vector<Rational> coords;

  static DropPoint lattice(std::vector<Int> c);
  std::size_t dimension() const { return coords.size(); }
  bool is_lattice() const;
  Rational sum() const;
  bool operator==(const DropPoint&) const = default;
};

// Throws OutOfRegion if the point has the wrong arity or leaves [0, N_i].
void check_in_region(const Region& r, const DropPoint& p);

struct CriticalPoint {
  std::vector<Int> coords;
  bool operator==(const CriticalPoint&) const = default;
};

// Breaks iff x + y + ... >= v.
struct SumLine {
  Rational v;
  bool operator==(const SumLine&) const = default;
};

// Breaks iff alpha*x + beta*y >= v. Stored gcd-normalized with alpha, beta >= 0.
struct GeneralLine {
  Int alpha = 0;
  Int beta = 0;
  Int v = 0;

  static GeneralLine through(Int x1, Int y1, Int x2, Int y2);
  bool breaks(const Rational& x, const Rational& y) const;
  bool breaks_lattice(Int x, Int y) const { return alpha * x + beta * y >= v; }
  bool operator==(const GeneralLine&) const = default;
  auto operator<=>(const GeneralLine&) const = default;
};

using HiddenTruth = std::variant<CriticalPoint, SumLine, GeneralLine>;

void validate_truth(const Region& r, const HiddenTruth& t);
bool breaks(const HiddenTruth& t, const DropPoint& p);
std::string describe(const HiddenTruth& t);

struct TraceEntry {
  DropPoint point;
  Outcome outcome;
  bool operator==(const TraceEntry&) const = default;
};

struct Trace {
  std::vector<TraceEntry> entries;

  void push(DropPoint p, Outcome o) { entries.push_back({std::move(p), o}); }
  std::size_t size() const { return entries.size(); }
  int eggs_used() const;
  bool operator==(const Trace&) const = default;
};

struct PointAnswer {
  std::vector<Int> coords;
  bool operator==(const PointAnswer&) const = default;
};

// Safe/breaking classification of the (M+1)(N+1) lattice points.
struct LinePartition {
  Int m = 0;
  Int n = 0;
  std::vector<bool> breaking;              // index x * (n + 1) + y
  std::optional<Int> threshold;            // set when the split is x + y >= threshold
  std::optional<GeneralLine> line;         // set when a unique line was identified

  static LinePartition from_threshold(Int m, Int n, Int threshold);
  bool breaks(Int x, Int y) const { return breaking[static_cast<std::size_t>(x * (n + 1) + y)]; }
  std::size_t breaking_count() const;
  // Partitions compare by classification only.
  bool same_split(const LinePartition& o) const { return m == o.m && n == o.n && breaking == o.breaking; }
  bool operator==(const LinePartition&) const = default;
};

using Answer = std::variant<PointAnswer, LinePartition>;

struct StrategyReport {
  ProblemKind kind = ProblemKind::OneD;
  Region region;
  int eggs = 0;
  Mode mode = Mode::Lattice;
  Answer answer;
  Int drops = 0;
  Trace trace;
  Int bound_value = 0;
  bool bound_met = false;

  bool operator==(const StrategyReport&) const = default;
};

}  // namespace eggdrop
