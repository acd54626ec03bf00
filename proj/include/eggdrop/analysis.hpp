#pragma once

#include "eggdrop/core.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace eggdrop {

enum class Sign { MethodOneBetter, MethodTwoBetter, Tie };
std::string to_string(Sign s);

// Method One bound minus Method Two bound, both without ceilings.
double l_exact(int k, double m, double n);

// Order-n truncation of the exponential series behind l(k).
double taylor_T(int order, int k, double m, double n);

// Printed second-order form: ln(1+N/M) + ln(M+N)^2/(2k) - ln(M)^2/(2(k-1)).
double taylor_T2_closed(int k, double m, double n);

std::optional<int> crossover_k(double m, double n, int k_max);

struct ComparisonRow {
  int k = 0;
  double l_exact = 0;
  double t[4] = {0, 0, 0, 0};
  Sign sign = Sign::Tie;
};

Sign classify(double l);
std::vector<ComparisonRow> comparison_rows(double m, double n, int k_min, int k_max);
void emit_comparison_csv(std::ostream& out, double m, double n, int k_min, int k_max);
void write_comparison_csv(const std::string& path, double m, double n, int k_min, int k_max);

inline constexpr const char* kComparisonHeader = "k,l_exact,T1,T2,T3,T4,sign";

}  // namespace eggdrop
