#include "eggdrop/strategies.hpp"

#include "geometry.hpp"
#include "recorder.hpp"

#include <algorithm>
#include <optional>

namespace eggdrop {

using detail::Recorder;

StrategyReport classify_line_m1(Int m, Int n, int eggs, Environment& env, Mode mode) {
  const Region r({m, n});
  detail::check_setup(env, r, eggs, 1);
  Recorder rec(env, SumLineKnowledge(m, n));

  std::vector<Rational> lo{Rational(0), Rational(0)}, hi{Rational(m), Rational(n)};
  bool hi_known = false;
  for (int levels = eggs - 1; levels > 0; --levels) {
    const Rational w = hi[0] - lo[0];
    if (w <= 1) break;
    const Rational step = detail::lemma_step(levels, to_double(hi[1] - lo[1]), to_double(w), mode);
    std::vector<Rational> prev = lo;
    bool broke = false;
    for (auto& p : detail::diagonal_probes(lo, hi, step, mode, !hi_known)) {
      if (rec.drop(p) == Outcome::Broke) {
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

  // Last egg: one drop per integer sum left open, along the bottom then right side.
  const auto& ks = rec.as<SumLineKnowledge>();
  for (Int s = floor_int(ks.lo()) + 1;; ++s) {
    const Rational sum(s);
    if (sum > ks.hi() || (sum == ks.hi() && hi_known)) break;
    DropPoint p;
    if (sum - lo[1] <= hi[0])
      p.coords = {sum - lo[1], lo[1]};
    else
      p.coords = {hi[0], sum - hi[0]};
    if (rec.drop(p) == Outcome::Broke) break;
  }
  return rec.finish(ProblemKind::LineM1, r, eggs, mode, closed_form_bound(ProblemKind::LineM1, r, eggs));
}

StrategyReport classify_line_m2(Int m, Int n, int eggs, Environment& env, Mode mode) {
  const Region r({m, n});
  detail::check_setup(env, r, eggs, 2);
  Recorder rec(env, SumLineKnowledge(m, n));

  // Diagonal points indexed by x = 1..m form a 1D search; one egg stays in reserve.
  detail::jump_search(0, m, eggs - 1, Mode::Lattice, [&](const Rational& i) {
    Rational y = i * n / m;
    if (mode == Mode::Lattice) y = round_half_up(y);
    return rec.drop(DropPoint{{i, y}});
  });

  const auto& ks = rec.as<SumLineKnowledge>();
  for (Int s = floor_int(ks.lo()) + 1; Rational(s) < ks.hi(); ++s) {
    const Int x = std::min(s, m);
    if (rec.drop(DropPoint::lattice({x, s - x})) == Outcome::Broke) break;
  }
  return rec.finish(ProblemKind::LineM2, r, eggs, mode, closed_form_bound(ProblemKind::LineM2, r, eggs));
}

namespace detail {

// Egg-1 path: up the left side, then along the top.
std::vector<std::pair<Int, Int>> boundary_walk(Int m, Int n) {
  std::vector<std::pair<Int, Int>> out;
  for (Int y = 1; y <= n; ++y) out.emplace_back(0, y);
  for (Int x = 1; x <= m; ++x) out.emplace_back(x, n);
  return out;
}

// Second-egg test points after a first break at (bx, by): one per slope, ascending,
// nearest member of each equal-slope group.
std::vector<std::pair<Int, Int>> slope_candidates(Int m, Int n, Int bx, Int by) {
  struct Cand {
    std::optional<Rational> slope;  // empty = vertical below the break
    Int dist;
    Int x, y;
  };
  std::vector<Cand> cands;
  auto add = [&](Int x, Int y) {
    const Int dx = x - bx, dy = y - by;
    std::optional<Rational> s;
    if (dx != 0) s = Rational(dy, dx);
    cands.push_back({s, dx * dx + dy * dy, x, y});
  };
  if (bx == 0) {
    for (Int x = 1; x <= m; ++x)
      for (Int y = 0; y <= by; ++y) add(x, y);
  } else {
    for (Int x = bx + 1; x <= m; ++x)
      for (Int y = 0; y <= n; ++y) add(x, y);
    for (Int y = 0; y < n; ++y) add(bx, y);
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
    if (a.slope.has_value() != b.slope.has_value()) return !a.slope.has_value();
    if (a.slope && *a.slope != *b.slope) return *a.slope < *b.slope;
    return a.dist < b.dist;
  });
  std::vector<std::pair<Int, Int>> out;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (i == 0 || cands[i].slope != cands[i - 1].slope) out.emplace_back(cands[i].x, cands[i].y);
  return out;
}

}  // namespace detail

StrategyReport classify_line_general(Int m, Int n, int eggs, Environment& env) {
  const Region r({m, n});
  if (eggs < 2) throw InsufficientEggs("one egg cannot classify a line of unknown slope");
  detail::check_setup(env, r, eggs, 2);
  Recorder rec(env, LineSetKnowledge(m, n));

  std::optional<std::pair<Int, Int>> first;
  for (auto [x, y] : detail::boundary_walk(m, n)) {
    if (rec.drop(DropPoint::lattice({x, y})) == Outcome::Broke) {
      first = {x, y};
      break;
    }
  }
  if (first) {
    for (auto [x, y] : detail::slope_candidates(m, n, first->first, first->second))
      if (rec.drop(DropPoint::lattice({x, y})) == Outcome::Broke) break;
  }
  return rec.finish(ProblemKind::LineGeneral, r, eggs, Mode::Lattice,
                    closed_form_bound(ProblemKind::LineGeneral, r, eggs));
}

}  // namespace eggdrop
