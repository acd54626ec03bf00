#include "eggdrop/strategies.hpp"

#include "geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "eggdrop/optimizer.hpp"

namespace eggdrop {

namespace {

Int ceil_root_form(double factor, double base, double factor_root) {
  return snapped_ceil(factor * std::pow(base, 1.0 / factor_root));
}

Int triangular_length(Int floors) {
  Int t = 1;
  while (t * (t + 1) / 2 < floors) ++t;
  return t;
}

// B(k, n) for the 1D jump search, and its running maximum over sizes <= n.
class JumpBound {
 public:
  explicit JumpBound(Mode mode) : mode_(mode) {}

  Int envelope(int k, Int n) {
    if (n <= 0) return 0;
    if (k <= 1) return n;
    auto& row = env_[k];
    if (row.empty()) row.push_back(0);
    while (static_cast<Int>(row.size()) <= n) {
      const Int g = static_cast<Int>(row.size());
      row.push_back(std::max(row.back(), exact(k, g)));
    }
    return row[static_cast<std::size_t>(n)];
  }

  Int exact(int k, Int n) {
    if (n <= 0) return 0;
    if (k <= 1) return n;
    const Rational step = n > 1 ? detail::lemma_step(k - 1, 0, static_cast<double>(n), mode_) : Rational(1);
    const Int jumps = ceil_int(Rational(n) / step);
    const Int gap = std::min<Int>(ceil_int(step) - 1, n - 1);
    return jumps + envelope(k - 1, gap);
  }

 private:
  Mode mode_;
  std::map<int, std::vector<Int>> env_;
};

Rational sum_of(const std::vector<Rational>& v) {
  Rational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

// Worst case over which jump probe breaks, mirroring the point strategy.
Int point_tree(const Region& r, const std::vector<Rational>& lo, const std::vector<Rational>& hi, bool hi_known,
               int levels, Mode mode) {
  const std::size_t d = lo.size();
  const Rational w0 = hi[0] - lo[0];
  if (levels <= 0 || w0 <= 1) {
    Int scans = 0;
    for (std::size_t i = 0; i < d; ++i) scans += r[i] - floor_int(lo[i]);
    return scans;
  }
  double rest = 0;
  for (std::size_t j = 1; j < d; ++j) rest += to_double(hi[j] - lo[j]);
  const Rational step = detail::lemma_step(levels, rest, to_double(w0), mode);
  const auto probes = detail::diagonal_probes(lo, hi, step, mode, !hi_known);
  Int best = 0;
  std::vector<Rational> prev = lo;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    best = std::max(best, static_cast<Int>(i + 1) + point_tree(r, prev, probes[i].coords, true, levels - 1, mode));
    prev = probes[i].coords;
  }
  if (hi_known)
    best = std::max(best, static_cast<Int>(probes.size()) + point_tree(r, prev, hi, true, levels - 1, mode));
  return best;
}

Int m1_base(const Rational& lo_sum, const Rational& hi_sum, bool hi_known) {
  Int count = 0;
  for (Int s = floor_int(lo_sum) + 1; Rational(s) < hi_sum || (Rational(s) == hi_sum && !hi_known); ++s) ++count;
  return count;
}

Int m1_tree(const std::vector<Rational>& lo, const std::vector<Rational>& hi, bool hi_known, int levels,
            Mode mode) {
  const Rational w = hi[0] - lo[0];
  if (levels <= 0 || w <= 1) return m1_base(sum_of(lo), sum_of(hi), hi_known);
  const Rational step = detail::lemma_step(levels, to_double(hi[1] - lo[1]), to_double(w), mode);
  const auto probes = detail::diagonal_probes(lo, hi, step, mode, !hi_known);
  Int best = 0;
  std::vector<Rational> prev = lo;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    best = std::max(best, static_cast<Int>(i + 1) + m1_tree(prev, probes[i].coords, true, levels - 1, mode));
    prev = probes[i].coords;
  }
  if (hi_known) best = std::max(best, static_cast<Int>(probes.size()) + m1_tree(prev, hi, true, levels - 1, mode));
  return best;
}

Int m2_bound(Int m, Int n, int eggs, Mode mode) {
  auto diag_sum = [&](Int i) {
    Rational y = Rational(i * n, m);
    if (mode == Mode::Lattice) y = round_half_up(y);
    return Rational(i) + y;
  };
  Int best = 0;
  for (Int t = 1; t <= m; ++t) {
    Int drops = 0;
    detail::jump_search(0, m, eggs - 1, Mode::Lattice, [&](const Rational& i) {
      ++drops;
      return i >= t ? Outcome::Broke : Outcome::Survived;
    });
    const Rational lo = diag_sum(t - 1), hi = diag_sum(t);
    Int rows = 0;
    for (Int s = floor_int(lo) + 1; Rational(s) < hi; ++s) ++rows;
    best = std::max(best, drops + rows);
  }
  return best;
}

Int slope_procedure_bound(Int m, Int n) {
  const auto walk = detail::boundary_walk(m, n);
  Int best = static_cast<Int>(walk.size());
  for (std::size_t i = 0; i < walk.size(); ++i) {
    auto [x, y] = walk[i];
    best = std::max(best, static_cast<Int>(i + 1 + detail::slope_candidates(m, n, x, y).size()));
  }
  return best;
}

}  // namespace

Mode default_mode(ProblemKind kind) {
  return kind == ProblemKind::OneD || kind == ProblemKind::Triangular || kind == ProblemKind::LineGeneral
             ? Mode::Lattice
             : Mode::Abstract;
}

int min_eggs(ProblemKind kind, const Region& r) {
  switch (kind) {
    case ProblemKind::OneD:
    case ProblemKind::LineM1: return 1;
    case ProblemKind::Triangular:
    case ProblemKind::LineM2:
    case ProblemKind::LineGeneral: return 2;
    default: return static_cast<int>(r.dimension());
  }
}

StrategyReport run_strategy(ProblemKind kind, int eggs, Environment& env, Mode mode) {
  const Region& r = env.region();
  auto need = [&](std::size_t d) {
    if (r.dimension() != d) throw DomainError(to_string(kind) + " needs a " + std::to_string(d) + "D region");
  };
  switch (kind) {
    case ProblemKind::OneD: need(1); return solve_1d(r[0], eggs, env, mode);
    case ProblemKind::Triangular: need(1); return solve_triangular(r[0], env);
    case ProblemKind::Point2D: need(2); return solve_point_2d(r[0], r[1], eggs, env, mode);
    case ProblemKind::Point3D: need(3); return solve_point_3d(r[0], r[1], r[2], eggs, env, mode);
    case ProblemKind::PointDD: return solve_point_dd(r.dims(), eggs, env, mode);
    case ProblemKind::LineM1: need(2); return classify_line_m1(r[0], r[1], eggs, env, mode);
    case ProblemKind::LineM2: need(2); return classify_line_m2(r[0], r[1], eggs, env, mode);
    case ProblemKind::LineGeneral: need(2); return classify_line_general(r[0], r[1], eggs, env);
  }
  throw DomainError("unknown problem kind");
}

Int closed_form_bound(ProblemKind kind, const Region& r, int k) {
  switch (kind) {
    case ProblemKind::OneD: return ceil_root_form(k, static_cast<double>(r[0]), k);
    case ProblemKind::Triangular: return triangular_length(r[0]);
    case ProblemKind::Point2D:
    case ProblemKind::Point3D:
    case ProblemKind::PointDD: {
      const int e = k - static_cast<int>(r.dimension()) + 1;
      if (e < 1) throw InsufficientEggs("fewer eggs than dimensions");
      return ceil_root_form(e, static_cast<double>(r.total()), e);
    }
    case ProblemKind::LineM1: return ceil_root_form(k, static_cast<double>(r.total()), k);
    case ProblemKind::LineM2:
      if (k < 2) throw InsufficientEggs("method two needs two eggs");
      return ceil_root_form(k - 1, static_cast<double>(r[0]), k - 1) + 1;
    case ProblemKind::LineGeneral: return slope_procedure_bound(r[0], r[1]);
  }
  throw DomainError("unknown problem kind");
}

Int recursive_bound(ProblemKind kind, const Region& r, int k, Mode mode) {
  if (k < min_eggs(kind, r)) throw InsufficientEggs("not enough eggs for this strategy");
  switch (kind) {
    case ProblemKind::OneD: return JumpBound(mode).exact(k, r[0]);
    case ProblemKind::Triangular: return triangular_length(r[0]);
    case ProblemKind::Point2D:
    case ProblemKind::Point3D:
    case ProblemKind::PointDD: {
      if (r.dimension() == 1) return JumpBound(mode).exact(k, r[0]);
      std::vector<Rational> lo(r.dimension(), Rational(0)), hi;
      for (Int s : r.dims()) hi.emplace_back(s);
      return point_tree(r, lo, hi, false, k - static_cast<int>(r.dimension()), mode);
    }
    case ProblemKind::LineM1:
      return m1_tree({Rational(0), Rational(0)}, {Rational(r[0]), Rational(r[1])}, false, k - 1, mode);
    case ProblemKind::LineM2: return m2_bound(r[0], r[1], k, mode);
    case ProblemKind::LineGeneral: return slope_procedure_bound(r[0], r[1]);
  }
  throw DomainError("unknown problem kind");
}

}  // namespace eggdrop
