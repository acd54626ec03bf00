#include "eggdrop/strategies.hpp"

#include "geometry.hpp"
#include "recorder.hpp"

#include <set>

namespace eggdrop {

namespace {

StrategyReport diagonal_point_search(ProblemKind kind, const Region& r, int eggs, Environment& env, Mode mode) {
  const std::size_t d = r.dimension();
  detail::check_setup(env, r, eggs, static_cast<int>(d));
  detail::Recorder rec(env, PointKnowledge(r));

  // Integer coordinate values at which some egg broke, per axis.
  std::vector<std::set<Int>> broke_at(d);
  auto drop = [&](const DropPoint& p) {
    const Outcome o = rec.drop(p);
    if (o == Outcome::Broke)
      for (std::size_t i = 0; i < d; ++i)
        if (is_integral(p.coords[i])) broke_at[i].insert(floor_int(p.coords[i]));
    return o;
  };

  std::vector<Rational> lo(d, Rational(0)), hi;
  for (Int side : r.dims()) hi.emplace_back(side);
  bool hi_known = false;

  for (int levels = eggs - static_cast<int>(d); levels > 0; --levels) {
    const Rational w0 = hi[0] - lo[0];
    if (w0 <= 1) break;
    double rest = 0;
    for (std::size_t j = 1; j < d; ++j) rest += to_double(hi[j] - lo[j]);
    const Rational step = detail::lemma_step(levels, rest, to_double(w0), mode);
    std::vector<Rational> prev = lo;
    bool broke = false;
    for (auto& p : detail::diagonal_probes(lo, hi, step, mode, !hi_known)) {
      if (drop(p) == Outcome::Broke) {
        lo = prev;
        hi = p.coords;
        hi_known = true;
        broke = true;
        break;
      }
      prev = p.coords;
    }
    if (!broke) lo = prev;
  }

  // One egg per axis; companion coordinates stay at 0, which is always safe.
  const auto& ks = rec.as<PointKnowledge>();
  for (std::size_t axis = 0; axis < d; ++axis) {
    for (Int x = ks.lower(axis) + 1; x <= ks.upper(axis); ++x) {
      const bool settled = ks.upper_forced(axis) || broke_at[axis].count(x) > 0;
      if (x == ks.upper(axis) && settled) break;
      std::vector<Int> c(d, 0);
      c[axis] = x;
      if (drop(DropPoint::lattice(c)) == Outcome::Broke) break;
    }
  }
  return rec.finish(kind, r, eggs, mode, closed_form_bound(kind, r, eggs));
}

}  // namespace

StrategyReport solve_point_2d(Int m, Int n, int eggs, Environment& env, Mode mode) {
  return diagonal_point_search(ProblemKind::Point2D, Region({m, n}), eggs, env, mode);
}

StrategyReport solve_point_3d(Int l, Int m, Int n, int eggs, Environment& env, Mode mode) {
  return diagonal_point_search(ProblemKind::Point3D, Region({l, m, n}), eggs, env, mode);
}

StrategyReport solve_point_dd(const std::vector<Int>& dims, int eggs, Environment& env, Mode mode) {
  switch (dims.size()) {
    case 1: return solve_1d(dims[0], eggs, env, mode);
    case 2: return solve_point_2d(dims[0], dims[1], eggs, env, mode);
    case 3: return solve_point_3d(dims[0], dims[1], dims[2], eggs, env, mode);
    default: return diagonal_point_search(ProblemKind::PointDD, Region(dims), eggs, env, mode);
  }
}

}  // namespace eggdrop
