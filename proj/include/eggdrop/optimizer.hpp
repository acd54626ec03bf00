#pragma once

#include "eggdrop/core.hpp"

namespace eggdrop {

// f(S) = n/S + a((n+b)/n)^{1/a} S^{1/a}, with a > 0, b >= 0, n > 1.
struct LemmaParams {
  double a = 1;
  double b = 0;
  double n = 2;
};

struct MinimizerDiagnostics {
  double first_derivative = 0;          // f'(S*)
  double second_derivative = 0;         // f''(S*) from the full expression
  double second_derivative_simplified = 0;  // n(1+a)/a * S*^-3
  double derivative_at_n = 0;           // f'(n)
  double derivative_at_n_closed = 0;    // ((n+b)^{1/a} - 1)/n
};

struct MinimizerResult {
  double s_star = 0;
  double f_star = 0;
  MinimizerDiagnostics diagnostics;
};

void validate(const LemmaParams& p);  // throws DomainError
double lemma_value(const LemmaParams& p, double s);
double lemma_derivative(const LemmaParams& p, double s);
double lemma_second_derivative(const LemmaParams& p, double s);

MinimizerResult lemma_minimize(const LemmaParams& p);

// Samples S = res, 2res, ... <= n and checks no sample beats the closed form.
bool lemma_grid_verify(const LemmaParams& p, double resolution);

// Lattice: snapped ceiling, at least 1. Abstract: exact rational approximation of s.
Rational integer_step(double s_star, Mode mode);

// ceil(x), treating values within 1e-9 of an integer as that integer.
Int snapped_ceil(double x);

}  // namespace eggdrop
