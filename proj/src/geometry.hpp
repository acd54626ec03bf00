#pragma once

#include "eggdrop/core.hpp"

#include <functional>
#include <vector>

namespace eggdrop::detail {

// Step for Lemma parameters (a, b, n), rounded per mode.
Rational lemma_step(double a, double b, double n, Mode mode);

// Jump probes along the diagonal of the box from lo to hi, spaced by `step` on
// axis 0. The far corner closes the list when include_corner is set.
std::vector<DropPoint> diagonal_probes(const std::vector<Rational>& lo, const std::vector<Rational>& hi,
                                       const Rational& step, Mode mode, bool include_corner);

using Probe1D = std::function<Outcome(const Rational&)>;

// Finds the critical value among lo+1..lo+n given `eggs` eggs; returns lo+n+1
// when nothing breaks. Probes at rational positions test their floor.
Int jump_search(Int lo, Int n, int eggs, Mode mode, const Probe1D& probe);

// Unknown-slope procedure: first-egg path and second-egg test order.
std::vector<std::pair<Int, Int>> boundary_walk(Int m, Int n);
std::vector<std::pair<Int, Int>> slope_candidates(Int m, Int n, Int bx, Int by);

}  // namespace eggdrop::detail
