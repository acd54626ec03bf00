#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eggdrop/analysis.hpp"

#include <cmath>
#include <random>
#include <sstream>

using namespace eggdrop;

TEST_CASE("l(k) values") {
  CHECK(l_exact(2, 100, 50) == doctest::Approx(2 * std::sqrt(150.0) - 101).epsilon(1e-12));
  CHECK(l_exact(2, 100, 50) == doctest::Approx(-76.50510).epsilon(1e-7));
  CHECK(l_exact(5, 100, 50) == doctest::Approx(-0.0288).epsilon(1e-2));
  CHECK(l_exact(6, 100, 50) == doctest::Approx(0.2709).epsilon(1e-3));
  CHECK(l_exact(20, 100, 50) == doctest::Approx(0.4829).epsilon(1e-3));
  CHECK_THROWS_AS(l_exact(1, 100, 50), DomainError);
  CHECK_THROWS_AS(l_exact(3, 5, 6), DomainError);
}

TEST_CASE("sign of l(2)") {
  // l(2) = 2 sqrt(M+N) - M - 1 is negative exactly when 4(M+N) < (M+1)^2.
  for (int m = 1; m <= 1000; ++m)
    for (int n = 1; n <= m; n += (m > 50 ? 7 : 1)) {
      const bool negative = 4 * (m + n) < (m + 1) * (m + 1);
      CHECK((l_exact(2, m, n) < 0) == negative);
      if (m >= 6) CHECK(l_exact(2, m, n) < 0);
    }
  CHECK(l_exact(2, 2, 1) > 0);
  CHECK(l_exact(2, 5, 5) > 0);
}

TEST_CASE("Taylor polynomials") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dk(2, 200);
  std::uniform_real_distribution<double> dm(1, 10000), frac(0, 1);
  for (int i = 0; i < 100; ++i) {
    const int k = dk(rng);
    const double m = std::floor(dm(rng)), n = std::max(1.0, std::floor(m * frac(rng)));
    const double closed = taylor_T2_closed(k, m, n);
    CHECK(std::fabs(taylor_T(2, k, m, n) - closed) <= 1e-12 * std::max(1.0, std::fabs(closed)));
    CHECK(taylor_T(1, k, m, n) == doctest::Approx(std::log(1 + n / m)).epsilon(1e-12));
  }
  const double t2 = std::log(1.5) + std::pow(std::log(150.0), 2) / 12 - std::pow(std::log(100.0), 2) / 10;
  CHECK(taylor_T(2, 6, 100, 50) == doctest::Approx(t2).epsilon(1e-12));
  // Large k with M = N: T2 tends to ln 2.
  CHECK(taylor_T(2, 1000000, 100, 100) == doctest::Approx(std::log(2.0)).epsilon(1e-4));
  CHECK_THROWS_AS(taylor_T(5, 6, 100, 50), DomainError);
  CHECK_THROWS_AS(taylor_T(0, 6, 100, 50), DomainError);
}

TEST_CASE("higher-order polynomials track l(k) better at large k") {
  for (auto [m, n] : {std::pair{100.0, 50.0}, {100.0, 100.0}, {1000.0, 100.0}, {300.0, 7.0}})
    for (int k : {10, 12, 20, 50, 100, 200}) {
      const double l = l_exact(k, m, n);
      for (int o = 1; o < 4; ++o) CHECK(std::fabs(taylor_T(o + 1, k, m, n) - l) <= std::fabs(taylor_T(o, k, m, n) - l));
    }
}

TEST_CASE("sign structure across k") {
  for (auto [m, n] : {std::pair{100.0, 50.0}, {100.0, 100.0}, {1000.0, 100.0}}) {
    CHECK(l_exact(2, m, n) < 0);
    const double limit = std::log(1 + n / m);
    // Gap to the limit at k = 200 is the second-order term of T2.
    const double predicted = (std::pow(std::log(m + n), 2) - std::pow(std::log(m), 2)) / 400;
    CHECK(std::fabs(l_exact(200, m, n) - limit - predicted) < 1e-3);
    CHECK(l_exact(200, m, n) > 0);
  }
  CHECK(std::fabs(l_exact(200, 100, 50) - std::log(1.5)) < 1e-2);
  CHECK(std::fabs(l_exact(200, 1000, 100) - std::log(1.1)) < 1e-2);
}

TEST_CASE("crossover") {
  CHECK(crossover_k(100, 50, 64) == 6);
  CHECK(crossover_k(100, 100, 64) == 4);
  CHECK(crossover_k(1000, 100, 64) == 16);
  CHECK(*crossover_k(100, 100, 64) < *crossover_k(100, 1, 64));
  CHECK(crossover_k(2, 1, 2) == 2);  // l(2) = 2 sqrt 3 - 3 > 0
  CHECK_FALSE(crossover_k(100, 50, 5));
  CHECK_THROWS_AS(crossover_k(100, 50, 1), DomainError);
}

TEST_CASE("comparison CSV") {
  std::ostringstream os;
  emit_comparison_csv(os, 100, 50, 2, 20);
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == "k,l_exact,T1,T2,T3,T4,sign");
  std::vector<std::string> signs;
  while (std::getline(is, line)) signs.push_back(line.substr(line.rfind(',') + 1));
  REQUIRE(signs.size() == 19);
  int flips = 0;
  for (std::size_t i = 1; i < signs.size(); ++i) flips += signs[i] != signs[i - 1];
  CHECK(flips == 1);
  CHECK(signs[3] == "MethodOneBetter");  // k = 5
  CHECK(signs[4] == "MethodTwoBetter");  // k = 6

  std::ostringstream one;
  emit_comparison_csv(one, 100, 50, 2, 2);
  CHECK(one.str().rfind("k,l_exact,T1,T2,T3,T4,sign\n2,", 0) == 0);
  CHECK(one.str().find("MethodOneBetter") != std::string::npos);
  CHECK_THROWS_AS(comparison_rows(100, 50, 2, 201), DomainError);
  CHECK_THROWS_AS(write_comparison_csv("/nonexistent-dir/x.csv", 100, 50, 2, 3), IoError);
  CHECK(classify(0.0) == Sign::Tie);
  CHECK(classify(-1e-13) == Sign::Tie);
}
