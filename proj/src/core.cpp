#include "eggdrop/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eggdrop {

std::string to_string(Mode m) { return m == Mode::Lattice ? "lattice" : "abstract"; }
std::string to_string(Outcome o) { return o == Outcome::Broke ? "Broke" : "Survived"; }

std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::OneD: return "solve1d";
    case ProblemKind::Triangular: return "triangular";
    case ProblemKind::Point2D: return "solve2d";
    case ProblemKind::Point3D: return "solve3d";
    case ProblemKind::PointDD: return "solvedd";
    case ProblemKind::LineM1: return "line-m1";
    case ProblemKind::LineM2: return "line-m2";
    case ProblemKind::LineGeneral: return "line-slope";
  }
  return "?";
}

Mode parse_mode(std::string_view s) {
  if (s == "lattice") return Mode::Lattice;
  if (s == "abstract") return Mode::Abstract;
  throw DomainError("unknown mode: " + std::string(s));
}

Outcome parse_outcome(std::string_view s) {
  if (s == "Broke") return Outcome::Broke;
  if (s == "Survived") return Outcome::Survived;
  throw DomainError("unknown outcome: " + std::string(s));
}

ProblemKind parse_kind(std::string_view s) {
  for (auto k : {ProblemKind::OneD, ProblemKind::Triangular, ProblemKind::Point2D, ProblemKind::Point3D,
                 ProblemKind::PointDD, ProblemKind::LineM1, ProblemKind::LineM2, ProblemKind::LineGeneral})
    if (to_string(k) == s) return k;
  throw DomainError("unknown problem kind: " + std::string(s));
}

Region::Region(std::vector<Int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DomainError("region needs at least one axis");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 1) throw DomainError("region sides must be >= 1");
    if (i > 0 && dims_[i] > dims_[i - 1]) throw DomainError("region sides must be non-increasing");
  }
}

Int Region::total() const { return std::accumulate(dims_.begin(), dims_.end(), Int{0}); }

std::size_t Region::lattice_points(std::size_t cap) const {
  std::size_t n = 1;
  for (Int d : dims_) {
    auto side = static_cast<std::size_t>(d);
    if (n > cap / side) return cap;
    n *= side;
  }
  return std::min(n, cap);
}

DropPoint DropPoint::lattice(std::vector<Int> c) {
  DropPoint p;
  p.coords.reserve(c.size());
  for (Int v : c) p.coords.emplace_back(v);
  return p;
}

bool DropPoint::is_lattice() const {
  return std::all_of(coords.begin(), coords.end(), [](const Rational& r) { return is_integral(r); });
}

Rational DropPoint::sum() const {
  Rational s = 0;
  for (const auto& c : coords) s += c;
  return s;
}

void check_in_region(const Region& r, const DropPoint& p) {
  if (p.dimension() != r.dimension()) throw OutOfRegion("drop point has wrong dimension");
  for (std::size_t i = 0; i < p.dimension(); ++i)
    if (p.coords[i] < 0 || p.coords[i] > r[i]) throw OutOfRegion("drop point outside the region");
}

GeneralLine GeneralLine::through(Int x1, Int y1, Int x2, Int y2) {
  if (x1 == x2 && y1 == y2) throw DomainError("line needs two distinct points");
  Int a = y2 - y1, b = x1 - x2;
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
  }
  if (b < 0) throw DomainError("line has positive slope");
  Int v = a * x1 + b * y1;
  Int g = std::gcd(std::gcd(a, b), v);
  return {a / g, b / g, v / g};
}

bool GeneralLine::breaks(const Rational& x, const Rational& y) const { return alpha * x + beta * y >= v; }

void validate_truth(const Region& r, const HiddenTruth& t) {
  if (auto cp = std::get_if<CriticalPoint>(&t)) {
    if (cp->coords.size() != r.dimension()) throw DomainError("critical point has wrong dimension");
    for (std::size_t i = 0; i < r.dimension(); ++i)
      if (cp->coords[i] < 1 || cp->coords[i] > r[i]) throw DomainError("critical point outside [1, N_i]");
  } else if (auto sl = std::get_if<SumLine>(&t)) {
    if (sl->v <= 0 || sl->v > r.total()) throw DomainError("line value must satisfy 0 < V <= sum of sides");
  } else {
    const auto& gl = std::get<GeneralLine>(t);
    if (r.dimension() != 2) throw DomainError("general lines need a 2D region");
    if (gl.alpha < 0 || gl.beta < 0 || (gl.alpha == 0 && gl.beta == 0))
      throw DomainError("line must have non-positive or undefined slope");
    if (gl.v <= 0) throw DomainError("line must have a positive intercept");
    if (std::gcd(std::gcd(gl.alpha, gl.beta), gl.v) != 1) throw DomainError("line coefficients not normalized");
    int hits = 0;
    for (Int x = 0; x <= r[0] && hits < 2; ++x)
      for (Int y = 0; y <= r[1] && hits < 2; ++y)
        if (gl.alpha * x + gl.beta * y == gl.v) ++hits;
    if (hits < 2) throw DomainError("line must pass through two lattice points of the region");
  }
}

bool breaks(const HiddenTruth& t, const DropPoint& p) {
  if (auto cp = std::get_if<CriticalPoint>(&t)) {
    for (std::size_t i = 0; i < cp->coords.size(); ++i)
      if (p.coords[i] >= cp->coords[i]) return true;
    return false;
  }
  if (auto sl = std::get_if<SumLine>(&t)) return p.sum() >= sl->v;
  return std::get<GeneralLine>(t).breaks(p.coords[0], p.coords[1]);
}

std::string describe(const HiddenTruth& t) {
  std::ostringstream os;
  if (auto cp = std::get_if<CriticalPoint>(&t)) {
    os << "(";
    for (std::size_t i = 0; i < cp->coords.size(); ++i) os << (i ? "," : "") << cp->coords[i];
    os << ")";
  } else if (auto sl = std::get_if<SumLine>(&t)) {
    os << "V=" << to_fraction(sl->v);
  } else {
    const auto& g = std::get<GeneralLine>(t);
    os << g.alpha << "x+" << g.beta << "y=" << g.v;
  }
  return os.str();
}

int Trace::eggs_used() const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [](const TraceEntry& e) { return e.outcome == Outcome::Broke; }));
}

LinePartition LinePartition::from_threshold(Int m, Int n, Int threshold) {
  LinePartition p;
  p.m = m;
  p.n = n;
  p.threshold = threshold;
  p.breaking.resize(static_cast<std::size_t>((m + 1) * (n + 1)));
  for (Int x = 0; x <= m; ++x)
    for (Int y = 0; y <= n; ++y) p.breaking[static_cast<std::size_t>(x * (n + 1) + y)] = x + y >= threshold;
  return p;
}

std::size_t LinePartition::breaking_count() const {
  return static_cast<std::size_t>(std::count(breaking.begin(), breaking.end(), true));
}

}  // namespace eggdrop
