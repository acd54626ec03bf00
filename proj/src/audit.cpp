#include "eggdrop/audit.hpp"

#include "eggdrop/environment.hpp"
#include "eggdrop/knowledge.hpp"
#include "eggdrop/oracle.hpp"
#include "eggdrop/strategies.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace eggdrop {

namespace {

bool is_point_kind(ProblemKind k) {
  return k != ProblemKind::LineM1 && k != ProblemKind::LineM2 && k != ProblemKind::LineGeneral;
}

bool is_sum_kind(ProblemKind k) { return k == ProblemKind::LineM1 || k == ProblemKind::LineM2; }

template <class F>
std::vector<RunResult> run_all(const std::vector<HiddenTruth>& truths, unsigned jobs, F&& one) {
  std::vector<RunResult> out(truths.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(truths.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < truths.size(); ++i) out[i] = one(truths[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < truths.size(); i = next++) out[i] = one(truths[i]);
    });
  for (auto& t : pool) t.join();
  return out;
}

std::size_t truth_space_size(ProblemKind kind, const Region& r, std::size_t cap) {
  if (is_point_kind(kind)) return r.lattice_points(cap + 1);
  if (is_sum_kind(kind)) return static_cast<std::size_t>(2 * r.total());
  const auto pts = static_cast<std::size_t>((r[0] + 1) * (r[1] + 1));
  return pts * (pts - 1) / 2;
}

void check_region(ProblemKind kind, const Region& r) {
  const bool one_d = kind == ProblemKind::OneD || kind == ProblemKind::Triangular;
  if (one_d && r.dimension() != 1) throw DomainError(to_string(kind) + " needs a 1D region");
  if (kind == ProblemKind::Point2D && r.dimension() != 2) throw DomainError("solve2d needs a 2D region");
  if (kind == ProblemKind::Point3D && r.dimension() != 3) throw DomainError("solve3d needs a 3D region");
  if (!is_point_kind(kind) && r.dimension() != 2) throw DomainError("line problems need a 2D region");
}

}  // namespace

std::size_t default_truth_cap() {
  if (const char* env = std::getenv("EGGDROP_MAX_TRUTHS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

std::vector<HiddenTruth> enumerate_truths(ProblemKind kind, const Region& r) {
  check_region(kind, r);
  std::vector<HiddenTruth> out;
  if (is_point_kind(kind)) {
    std::vector<Int> c(r.dimension(), 1);
    while (true) {
      out.push_back(CriticalPoint{c});
      std::size_t i = 0;
      for (; i < c.size(); ++i) {
        if (++c[i] <= r[i]) break;
        c[i] = 1;
      }
      if (i == c.size()) break;
    }
  } else if (is_sum_kind(kind)) {
    for (Int t = 1; t <= r.total(); ++t) {
      out.push_back(SumLine{Rational(2 * t - 1, 2)});
      out.push_back(SumLine{Rational(t)});
    }
  } else {
    for (const auto& g : enumerate_general_lines(r[0], r[1])) out.push_back(g);
  }
  return out;
}

RunResult run_and_check(ProblemKind kind, const Region& r, int eggs, Mode mode, const HiddenTruth& truth) {
  RunResult res;
  Environment env(r, truth, eggs);
  try {
    const StrategyReport rep = run_strategy(kind, eggs, env, mode);
    res.drops = rep.drops;
    if (rep.drops != static_cast<Int>(rep.trace.size()) || !(rep.trace == env.trace()))
      res.failure = "trace does not match the environment log";
    else if (rep.trace.eggs_used() > eggs)
      res.failure = "used more eggs than the budget";
    else if (auto cp = std::get_if<CriticalPoint>(&truth)) {
      const auto* got = std::get_if<PointAnswer>(&rep.answer);
      if (!got || got->coords != cp->coords) res.failure = "identified the wrong critical point";
    } else {
      const auto* got = std::get_if<LinePartition>(&rep.answer);
      if (!got || !got->same_split(brute_force_line_partition(r[0], r[1], truth)))
        res.failure = "partition differs from ground truth";
    }
  } catch (const Error& e) {
    res.drops = env.drops();
    res.failure = e.what();
  }
  for (const auto& e : env.trace().entries) res.probe_sums.push_back(e.point.sum());
  return res;
}

AuditReport audit_exhaustive(ProblemKind kind, const Region& r, int eggs, const AuditOptions& opts) {
  check_region(kind, r);
  if (eggs < min_eggs(kind, r)) throw InsufficientEggs("not enough eggs for " + to_string(kind));
  const std::size_t cap = opts.max_truths.value_or(default_truth_cap());
  if (!opts.force && truth_space_size(kind, r, cap) > cap)
    throw AuditTooLarge("truth space exceeds " + std::to_string(cap) + " candidates; pass --force to run anyway");

  AuditReport rep;
  rep.kind = kind;
  rep.region = r;
  rep.eggs = eggs;
  rep.mode = opts.mode.value_or(default_mode(kind));
  rep.bound_value = closed_form_bound(kind, r, eggs);
  rep.recursive_bound = recursive_bound(kind, r, eggs, rep.mode);

  auto one = [&](const HiddenTruth& t) { return run_and_check(kind, r, eggs, rep.mode, t); };
  std::vector<HiddenTruth> truths = enumerate_truths(kind, r);
  std::vector<RunResult> results = run_all(truths, opts.jobs, one);

  if (is_sum_kind(kind)) {
    // Refine the V grid into behavior cells: every interval between consecutive
    // probe sums gets a representative (its right end).
    std::map<Rational, RunResult> by_v;
    for (std::size_t i = 0; i < truths.size(); ++i) by_v.emplace(std::get<SumLine>(truths[i]).v, results[i]);
    std::vector<std::pair<Rational, Rational>> work{{Rational(0), Rational(r.total())}};
    std::size_t guard = 0;
    while (!work.empty()) {
      if (++guard > 4 * cap) throw AuditTooLarge("behavior-cell refinement did not converge");
      auto [lo, hi] = work.back();
      work.pop_back();
      auto it = by_v.find(hi);
      if (it == by_v.end()) it = by_v.emplace(hi, one(SumLine{hi})).first;
      std::set<Rational> inside;
      for (const auto& s : it->second.probe_sums)
        if (s > lo && s < hi) inside.insert(s);
      Rational left = lo;
      for (const auto& s : inside) {
        work.emplace_back(left, s);
        left = s;
      }
      if (!inside.empty()) work.emplace_back(left, hi);
    }
    truths.clear();
    results.clear();
    for (auto& [v, res] : by_v) {
      truths.push_back(SumLine{v});
      results.push_back(std::move(res));
    }
  }

  rep.truths_checked = truths.size();
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const Int d = results[i].drops;
    rep.per_truth.push_back({truths[i], d});
    if (!rep.worst_truth || d > rep.max_drops) {
      rep.max_drops = d;
      rep.worst_truth = truths[i];
    }
    if (d > rep.bound_value) rep.exceedances.push_back({truths[i], d});
    if (results[i].failure) rep.correctness_failures.push_back({truths[i], *results[i].failure});
  }
  rep.bound_compliant = rep.exceedances.empty();
  rep.recursive_bound_respected = rep.max_drops <= rep.recursive_bound;
  return rep;
}

}  // namespace eggdrop
