#pragma once

#include "eggdrop/core.hpp"
#include "eggdrop/environment.hpp"

#include <vector>

namespace eggdrop {

// Jump search: step from Lemma 1, recursing with one egg fewer after each break.
StrategyReport solve_1d(Int floors, int eggs, Environment& env, Mode mode = Mode::Lattice);

// First-egg floors of the two-egg decreasing-gap schedule.
std::vector<Int> schedule_triangular(Int floors);
StrategyReport solve_triangular(Int floors, Environment& env);

// Diagonal jump search for a critical point; default mode is abstract.
StrategyReport solve_point_2d(Int m, Int n, int eggs, Environment& env, Mode mode = Mode::Abstract);
StrategyReport solve_point_3d(Int l, Int m, Int n, int eggs, Environment& env, Mode mode = Mode::Abstract);
StrategyReport solve_point_dd(const std::vector<Int>& dims, int eggs, Environment& env, Mode mode = Mode::Abstract);

// Critical line x + y = V.
StrategyReport classify_line_m1(Int m, Int n, int eggs, Environment& env, Mode mode = Mode::Abstract);
StrategyReport classify_line_m2(Int m, Int n, int eggs, Environment& env, Mode mode = Mode::Abstract);

// Critical line of unknown slope, two eggs.
StrategyReport classify_line_general(Int m, Int n, int eggs, Environment& env);

Mode default_mode(ProblemKind kind);
int min_eggs(ProblemKind kind, const Region& r);

// Runs the strategy of `kind` on env's region.
StrategyReport run_strategy(ProblemKind kind, int eggs, Environment& env, Mode mode);

// Closed-form bound for the instance.
Int closed_form_bound(ProblemKind kind, const Region& r, int eggs);
// Worst-case drop count guaranteed by the executed recursion.
Int recursive_bound(ProblemKind kind, const Region& r, int eggs, Mode mode);

}  // namespace eggdrop
