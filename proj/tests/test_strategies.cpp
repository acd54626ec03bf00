#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eggdrop/audit.hpp"
#include "eggdrop/oracle.hpp"
#include "eggdrop/strategies.hpp"

#include <cmath>

using namespace eggdrop;

namespace {

std::vector<std::pair<std::vector<Int>, Outcome>> points(const StrategyReport& r) {
  std::vector<std::pair<std::vector<Int>, Outcome>> out;
  for (const auto& e : r.trace.entries) {
    std::vector<Int> c;
    for (const auto& v : e.point.coords) {
      REQUIRE(is_integral(v));
      c.push_back(floor_int(v));
    }
    out.emplace_back(c, e.outcome);
  }
  return out;
}

constexpr Outcome S = Outcome::Survived;
constexpr Outcome B = Outcome::Broke;

StrategyReport run(ProblemKind kind, const Region& r, int k, const HiddenTruth& t,
                   std::optional<Mode> mode = std::nullopt) {
  Environment env(r, t, k);
  return run_strategy(kind, k, env, mode.value_or(default_mode(kind)));
}

}  // namespace

TEST_CASE("1D: one egg walks every floor") {
  const auto r = run(ProblemKind::OneD, Region({36}), 1, CriticalPoint{{36}});
  CHECK(std::get<PointAnswer>(r.answer).coords == std::vector<Int>{36});
  CHECK(r.drops == 36);
  CHECK(r.bound_value == 36);
  CHECK(r.bound_met);
}

TEST_CASE("1D: two eggs jump by six") {
  const auto r = run(ProblemKind::OneD, Region({36}), 2, CriticalPoint{{25}});
  using P = std::vector<Int>;
  const std::vector<std::pair<P, Outcome>> want{{{6}, S}, {{12}, S}, {{18}, S}, {{24}, S}, {{30}, B}, {{25}, B}};
  CHECK(points(r) == want);
  CHECK(r.drops == 6);
  CHECK(r.bound_value == 12);
}

TEST_CASE("1D: two-egg drops match a hand-derived count") {
  // Step 6: j jumps to the first multiple of 6 at or above n, then floors lo+1.. one at a time.
  for (Int n = 1; n <= 36; ++n) {
    const Int j = (n + 5) / 6, lo = 6 * (j - 1);
    const Int expected = n < 6 * j ? j + (n - lo) : j + 5;
    CHECK(run(ProblemKind::OneD, Region({36}), 2, CriticalPoint{{n}}).drops == expected);
  }
}

TEST_CASE("1D: abstract mode stays correct") {
  for (int k = 1; k <= 4; ++k)
    for (Int n : {1, 2, 17, 50, 99}) {
      const auto a = audit_exhaustive(ProblemKind::OneD, Region({n}), k, {.mode = Mode::Abstract});
      CHECK(a.correct());
      CHECK(a.max_drops <= a.recursive_bound);
    }
}

TEST_CASE("1D: recursive bound") {
  CHECK(recursive_bound(ProblemKind::OneD, Region({36}), 1, Mode::Lattice) == 36);
  CHECK(recursive_bound(ProblemKind::OneD, Region({36}), 2, Mode::Lattice) == 11);
  CHECK(recursive_bound(ProblemKind::OneD, Region({100}), 3, Mode::Lattice) == 14);
  CHECK(closed_form_bound(ProblemKind::OneD, Region({100}), 3) == 14);
  CHECK(closed_form_bound(ProblemKind::OneD, Region({100}), 4) == 13);
}

TEST_CASE("triangular schedule") {
  CHECK(schedule_triangular(36) == std::vector<Int>{8, 15, 21, 26, 30, 33, 35, 36});
  CHECK(schedule_triangular(1) == std::vector<Int>{1});
  CHECK(schedule_triangular(10) == std::vector<Int>{4, 7, 9, 10});
  CHECK(audit_exhaustive(ProblemKind::Triangular, Region({10}), 2).max_drops == 4);
  CHECK_THROWS_AS(schedule_triangular(0), DomainError);
  for (Int n = 1; n <= 150; ++n) {
    const auto s = schedule_triangular(n);
    CHECK(s.back() == n);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] > s[i - 1]);
    const auto a = audit_exhaustive(ProblemKind::Triangular, Region({n}), 2);
    CHECK(a.correct());
    CHECK(a.max_drops == dp_min_drops(n, 2));
  }
}

TEST_CASE("2D: smallest region") {
  const auto r = run(ProblemKind::Point2D, Region({1, 1}), 2, CriticalPoint{{1, 1}});
  using P = std::vector<Int>;
  const std::vector<std::pair<P, Outcome>> want{{{1, 0}, B}, {{0, 1}, B}};
  CHECK(points(r) == want);
  CHECK(std::get<PointAnswer>(r.answer).coords == P{1, 1});
}

TEST_CASE("2D: two-egg base case on 8x5") {
  const auto r = run(ProblemKind::Point2D, Region({8, 5}), 2, CriticalPoint{{3, 4}});
  using P = std::vector<Int>;
  const std::vector<std::pair<P, Outcome>> want{{{1, 0}, S}, {{2, 0}, S}, {{3, 0}, B}, {{0, 1}, S},
                                                {{0, 2}, S}, {{0, 3}, S}, {{0, 4}, B}};
  CHECK(points(r) == want);
  CHECK(r.drops == 7);
}

TEST_CASE("2D: three eggs on 8x5") {
  const auto a = audit_exhaustive(ProblemKind::Point2D, Region({8, 5}), 3);
  CHECK(a.truths_checked == 40);
  CHECK(a.correct());
  CHECK(a.bound_value == 8);
  CHECK(a.max_drops <= a.recursive_bound);
  MESSAGE("8x5 k=3: maxDrops " << a.max_drops << ", exceedances " << a.exceedances.size());
}

TEST_CASE("3D examples") {
  CHECK(run(ProblemKind::Point3D, Region({1, 1, 1}), 3, CriticalPoint{{1, 1, 1}}).drops == 3);
  CHECK(run(ProblemKind::Point3D, Region({6, 4, 2}), 3, CriticalPoint{{6, 4, 2}}).drops == 12);
  const auto a = audit_exhaustive(ProblemKind::Point3D, Region({6, 4, 2}), 4);
  CHECK(a.truths_checked == 48);
  CHECK(a.correct());
  CHECK(a.bound_value == 7);
  CHECK(a.max_drops <= a.recursive_bound);
}

TEST_CASE("dD reduces to the lower-dimensional solvers") {
  for (Int t = 1; t <= 20; ++t) {
    Environment e1(Region({20}), CriticalPoint{{t}}, 3), e2(Region({20}), CriticalPoint{{t}}, 3);
    CHECK(solve_point_dd({20}, 3, e1, Mode::Lattice) == solve_1d(20, 3, e2, Mode::Lattice));
  }
  for (Int x = 1; x <= 7; ++x)
    for (Int y = 1; y <= 4; ++y) {
      Environment e1(Region({7, 4}), CriticalPoint{{x, y}}, 3), e2(Region({7, 4}), CriticalPoint{{x, y}}, 3);
      CHECK(solve_point_dd({7, 4}, 3, e1) == solve_point_2d(7, 4, 3, e2));
    }
  const auto a = audit_exhaustive(ProblemKind::PointDD, Region({2, 2, 2, 2}), 5);
  CHECK(a.truths_checked == 16);
  CHECK(a.correct());
  CHECK(a.bound_value == 6);
  Environment env(Region({3, 3, 3, 3}), CriticalPoint{{1, 2, 3, 1}}, 3);
  CHECK_THROWS_AS(solve_point_dd({3, 3, 3, 3}, 3, env), InsufficientEggs);
}

TEST_CASE("point search in lattice mode stays correct") {
  for (int k = 2; k <= 4; ++k)
    for (auto dims : {std::vector<Int>{9, 4}, {12, 12}, {15, 2}}) {
      const auto a = audit_exhaustive(ProblemKind::Point2D, Region(dims), k, {.mode = Mode::Lattice});
      CHECK(a.correct());
      CHECK(a.max_drops <= a.recursive_bound);
    }
  const auto a = audit_exhaustive(ProblemKind::Point3D, Region({7, 5, 3}), 4, {.mode = Mode::Lattice});
  CHECK(a.correct());
}

TEST_CASE("far-corner truth meets the closed form") {
  for (int k = 2; k <= 5; ++k)
    for (Int m = 1; m <= 25; ++m)
      for (Int n = 1; n <= m; n += 3) {
        const auto r = run(ProblemKind::Point2D, Region({m, n}), k, CriticalPoint{{m, n}});
        CHECK_MESSAGE(r.bound_met, m << "x" << n << " k=" << k << " drops " << r.drops);
      }
}

TEST_CASE("Method One examples") {
  const auto tiny = run(ProblemKind::LineM1, Region({2, 2}), 1, SumLine{Rational(1, 2)});
  CHECK(tiny.drops == 1);
  CHECK(tiny.trace.entries[0].point == DropPoint::lattice({1, 0}));
  const auto& p = std::get<LinePartition>(tiny.answer);
  CHECK(p.breaking_count() == 8);
  CHECK_FALSE(p.breaks(0, 0));

  CHECK(run(ProblemKind::LineM1, Region({4, 4}), 1, SumLine{Rational(8)}).drops == 8);
  CHECK(run(ProblemKind::LineM1, Region({4, 4}), 1, SumLine{Rational(15, 2)}).drops == 8);

  const auto a = audit_exhaustive(ProblemKind::LineM1, Region({20, 10}), 2);
  CHECK(a.correct());
  CHECK(a.bound_value == 11);
  CHECK(a.max_drops <= 11);
  CHECK(a.max_drops <= a.recursive_bound);
}

TEST_CASE("Method Two examples") {
  const auto a = audit_exhaustive(ProblemKind::LineM2, Region({6, 4}), 2);
  CHECK(a.correct());
  CHECK(a.max_drops == 7);
  CHECK(audit_exhaustive(ProblemKind::LineM2, Region({1, 1}), 2).max_drops <= 2);
  CHECK(closed_form_bound(ProblemKind::LineM2, Region({27, 9}), 3) == 12);
  const auto b = audit_exhaustive(ProblemKind::LineM2, Region({27, 9}), 3);
  CHECK(b.correct());
  CHECK(b.max_drops <= 12);
  CHECK(b.max_drops <= b.recursive_bound);
  Environment env(Region({6, 4}), SumLine{Rational(3)}, 1);
  CHECK_THROWS_AS(classify_line_m2(6, 4, 1, env), InsufficientEggs);
}

TEST_CASE("line methods in lattice mode stay correct") {
  for (int k = 1; k <= 3; ++k) {
    CHECK(audit_exhaustive(ProblemKind::LineM1, Region({17, 6}), k, {.mode = Mode::Lattice}).correct());
    if (k >= 2) CHECK(audit_exhaustive(ProblemKind::LineM2, Region({17, 6}), k, {.mode = Mode::Lattice}).correct());
  }
}

TEST_CASE("unknown slope: one egg refuses") {
  Environment env(Region({3, 2}), GeneralLine::through(0, 1, 3, 0), 1);
  CHECK_THROWS_AS(classify_line_general(3, 2, 1, env), InsufficientEggs);
}

TEST_CASE("unknown slope: worked examples on 3x2") {
  using P = std::vector<Int>;
  const auto r = run(ProblemKind::LineGeneral, Region({3, 2}), 2, GeneralLine::through(0, 1, 3, 0));
  const std::vector<std::pair<P, Outcome>> want{{{0, 1}, B}, {{1, 0}, S}, {{2, 0}, S}, {{3, 0}, B}};
  CHECK(points(r) == want);
  const auto& p = std::get<LinePartition>(r.answer);
  REQUIRE(p.line);
  CHECK(*p.line == GeneralLine{1, 3, 3});

  const auto h = run(ProblemKind::LineGeneral, Region({3, 2}), 2, GeneralLine::through(0, 1, 3, 1));
  const auto& hp = std::get<LinePartition>(h.answer);
  for (Int x = 0; x <= 3; ++x)
    for (Int y = 0; y <= 2; ++y) CHECK(hp.breaks(x, y) == (y >= 1));
  CHECK(h.drops == 5);
}

TEST_CASE("unknown slope: answers are never wrong") {
  for (auto [m, n] : {std::pair<Int, Int>{3, 2}, {4, 3}, {6, 4}}) {
    const auto a = audit_exhaustive(ProblemKind::LineGeneral, Region({m, n}), 2);
    for (const auto& f : a.correctness_failures)
      CHECK_MESSAGE(f.message == "drops do not determine a unique answer", describe(f.truth));
    MESSAGE(m << "x" << n << ": " << a.correctness_failures.size() << " of " << a.truths_checked << " ambiguous");
    const auto b = audit_exhaustive(ProblemKind::LineGeneral, Region({m, n}), 3);
    CHECK(b.per_truth == a.per_truth);
  }
}
