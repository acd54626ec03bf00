#include "eggdrop/optimizer.hpp"

#include <algorithm>
#include <cmath>

namespace eggdrop {

void validate(const LemmaParams& p) {
  if (!(p.a > 0) || !(p.b >= 0) || !(p.n > 1) || !std::isfinite(p.a) || !std::isfinite(p.b) || !std::isfinite(p.n))
    throw DomainError("lemma parameters need a > 0, b >= 0, n > 1");
}

namespace {
double coefficient(const LemmaParams& p) { return std::pow((p.n + p.b) / p.n, 1.0 / p.a); }
}  // namespace

double lemma_value(const LemmaParams& p, double s) {
  return p.n / s + p.a * coefficient(p) * std::pow(s, 1.0 / p.a);
}

double lemma_derivative(const LemmaParams& p, double s) {
  return -p.n / (s * s) + coefficient(p) * std::pow(s, (1.0 - p.a) / p.a);
}

double lemma_second_derivative(const LemmaParams& p, double s) {
  return 2.0 * p.n / (s * s * s) + ((1.0 - p.a) / p.a) * coefficient(p) * std::pow(s, (1.0 - 2.0 * p.a) / p.a);
}

MinimizerResult lemma_minimize(const LemmaParams& p) {
  validate(p);
  MinimizerResult r;
  r.s_star = p.n * std::pow(p.n + p.b, -1.0 / (p.a + 1.0));
  r.f_star = (p.a + 1.0) * std::pow(p.n + p.b, 1.0 / (p.a + 1.0));
  auto& d = r.diagnostics;
  d.first_derivative = lemma_derivative(p, r.s_star);
  d.second_derivative = lemma_second_derivative(p, r.s_star);
  d.second_derivative_simplified = p.n * (1.0 + p.a) / p.a * std::pow(r.s_star, -3.0);
  d.derivative_at_n = lemma_derivative(p, p.n);
  d.derivative_at_n_closed = (std::pow(p.n + p.b, 1.0 / p.a) - 1.0) / p.n;
  return r;
}

bool lemma_grid_verify(const LemmaParams& p, double resolution) {
  if (!(resolution > 0)) throw DomainError("grid resolution must be positive");
  const MinimizerResult r = lemma_minimize(p);
  const double slack = 1e-9 * std::max(1.0, std::fabs(r.f_star));
  const auto samples = static_cast<long long>(std::floor(p.n / resolution));
  for (long long i = 1; i <= samples; ++i)
    if (r.f_star > lemma_value(p, static_cast<double>(i) * resolution) + slack) return false;
  // f blows up toward S -> 0.
  return samples >= 1 && lemma_value(p, resolution) > r.f_star;
}

Int snapped_ceil(double x) {
  double r = std::round(x);
  if (std::fabs(x - r) <= 1e-9 * std::max(1.0, std::fabs(x))) return static_cast<Int>(r);
  return static_cast<Int>(std::ceil(x));
}

Rational integer_step(double s_star, Mode mode) {
  if (!(s_star > 0)) throw DomainError("step must be positive");
  if (mode == Mode::Lattice) return Rational(std::max<Int>(1, snapped_ceil(s_star)));
  return approximate(s_star, 1e-12);
}

}  // namespace eggdrop
