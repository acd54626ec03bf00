#include "eggdrop/strategies.hpp"

#include "geometry.hpp"
#include "recorder.hpp"

namespace eggdrop {

using detail::Recorder;

StrategyReport solve_1d(Int floors, int eggs, Environment& env, Mode mode) {
  const Region r({floors});
  detail::check_setup(env, r, eggs, 1);
  Recorder rec(env, PointKnowledge(r));
  const Int found = detail::jump_search(0, floors, eggs, mode, [&](const Rational& pos) {
    return rec.drop(DropPoint{{pos}});
  });
  auto rep = rec.finish(ProblemKind::OneD, r, eggs, mode, closed_form_bound(ProblemKind::OneD, r, eggs));
  if (std::get<PointAnswer>(rep.answer).coords.front() != found)
    throw ContradictionError("jump search and knowledge disagree");
  return rep;
}

std::vector<Int> schedule_triangular(Int floors) {
  if (floors < 1) throw DomainError("floors must be >= 1");
  Int t = 1;
  while (t * (t + 1) / 2 < floors) ++t;
  std::vector<Int> out;
  Int f = 0;
  for (Int gap = t; f < floors; gap = std::max<Int>(gap - 1, 1)) {
    f = std::min(floors, f + gap);
    out.push_back(f);
  }
  return out;
}

StrategyReport solve_triangular(Int floors, Environment& env) {
  const Region r({floors});
  detail::check_setup(env, r, 2, 2);
  Recorder rec(env, PointKnowledge(r));
  Int prev = 0;
  for (Int f : schedule_triangular(floors)) {
    if (rec.drop(DropPoint::lattice({f})) == Outcome::Broke) {
      for (Int x = prev + 1; x < f; ++x)
        if (rec.drop(DropPoint::lattice({x})) == Outcome::Broke) break;
      break;
    }
    prev = f;
  }
  return rec.finish(ProblemKind::Triangular, r, 2, Mode::Lattice,
                    closed_form_bound(ProblemKind::Triangular, r, 2));
}

}  // namespace eggdrop
