#include "eggdrop/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace eggdrop {

namespace {

void check_k(int k) {
  if (k < 2) throw DomainError("comparison needs k >= 2");
}

void check_sides(double m, double n) {
  if (!(n >= 1) || !(m >= n)) throw DomainError("comparison needs M >= N >= 1");
}

// sum_{j=0..order} x^j / (s^j j!)
double exp_partial(double x, double s, int order) {
  double term = 1, total = 1;
  for (int j = 1; j <= order; ++j) {
    term *= x / (s * j);
    total += term;
  }
  return total;
}

}  // namespace

std::string to_string(Sign s) {
  switch (s) {
    case Sign::MethodOneBetter: return "MethodOneBetter";
    case Sign::MethodTwoBetter: return "MethodTwoBetter";
    case Sign::Tie: return "Tie";
  }
  return "?";
}

double l_exact(int k, double m, double n) {
  check_k(k);
  check_sides(m, n);
  return k * std::pow(m + n, 1.0 / k) - ((k - 1) * std::pow(m, 1.0 / (k - 1)) + 1);
}

double taylor_T(int order, int k, double m, double n) {
  if (order < 1 || order > 4) throw DomainError("Taylor order must be 1..4");
  check_k(k);
  check_sides(m, n);
  const double big = std::log(m + n), small = std::log(m);
  return k * exp_partial(big, k, order) - (k - 1) * exp_partial(small, k - 1, order) - 1;
}

double taylor_T2_closed(int k, double m, double n) {
  check_k(k);
  check_sides(m, n);
  const double big = std::log(m + n), small = std::log(m);
  return std::log(1 + n / m) + big * big / (2.0 * k) - small * small / (2.0 * (k - 1));
}

std::optional<int> crossover_k(double m, double n, int k_max) {
  if (k_max < 2) throw DomainError("kMax must be >= 2");
  for (int k = 2; k <= k_max; ++k)
    if (l_exact(k, m, n) > 0) return k;
  return std::nullopt;
}

Sign classify(double l) {
  if (std::fabs(l) <= 1e-12) return Sign::Tie;
  return l < 0 ? Sign::MethodOneBetter : Sign::MethodTwoBetter;
}

std::vector<ComparisonRow> comparison_rows(double m, double n, int k_min, int k_max) {
  if (k_min < 2 || k_max > 200 || k_min > k_max) throw DomainError("k range must lie within [2, 200]");
  std::vector<ComparisonRow> rows;
  for (int k = k_min; k <= k_max; ++k) {
    ComparisonRow row;
    row.k = k;
    row.l_exact = l_exact(k, m, n);
    for (int o = 1; o <= 4; ++o) row.t[o - 1] = taylor_T(o, k, m, n);
    row.sign = classify(row.l_exact);
    rows.push_back(row);
  }
  return rows;
}

void emit_comparison_csv(std::ostream& out, double m, double n, int k_min, int k_max) {
  const auto rows = comparison_rows(m, n, k_min, k_max);
  out << kComparisonHeader << '\n';
  char buf[64];
  for (const auto& row : rows) {
    out << row.k;
    for (double v : {row.l_exact, row.t[0], row.t[1], row.t[2], row.t[3]}) {
      std::snprintf(buf, sizeof buf, ",%.17g", v);
      out << buf;
    }
    out << ',' << to_string(row.sign) << '\n';
  }
}

void write_comparison_csv(const std::string& path, double m, double n, int k_min, int k_max) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  emit_comparison_csv(f, m, n, k_min, k_max);
  f.flush();
  if (!f) throw IoError("failed writing " + path);
}

}  // namespace eggdrop
