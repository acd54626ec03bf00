#include "eggdrop/cli.hpp"

#include "eggdrop/analysis.hpp"
#include "eggdrop/audit.hpp"
#include "eggdrop/environment.hpp"
#include "eggdrop/oracle.hpp"
#include "eggdrop/serialize.hpp"
#include "eggdrop/strategies.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

namespace eggdrop {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Int> parse_ints(const std::string& s) {
  std::vector<Int> out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw DomainError("expected a comma-separated list of integers, got '" + s + "'");
    }
  }
  if (out.empty()) throw DomainError("expected at least one integer");
  return out;
}

std::string pretty(const Rational& r) {
  return is_integral(r) ? numerator(r).str() : to_fraction(r);
}

std::string pretty(const DropPoint& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.coords.size(); ++i) s += (i ? "," : "") + pretty(p.coords[i]);
  return s + ")";
}

std::string pretty(const Region& r) {
  std::string s;
  for (std::size_t i = 0; i < r.dimension(); ++i) s += (i ? "x" : "") + std::to_string(r[i]);
  return s;
}

std::string pretty(const Answer& a) {
  if (auto pa = std::get_if<PointAnswer>(&a)) {
    std::string s = "(";
    for (std::size_t i = 0; i < pa->coords.size(); ++i) s += (i ? "," : "") + std::to_string(pa->coords[i]);
    return s + ")";
  }
  const auto& p = std::get<LinePartition>(a);
  std::string s = std::to_string(p.breaking_count()) + " of " + std::to_string(p.breaking.size()) +
                  " lattice points break";
  if (p.threshold) s += " (x+y >= " + std::to_string(*p.threshold) + ")";
  if (p.line) s += " (line " + describe(*p.line) + ")";
  return s;
}

// Sorts sides non-increasing; perm[i] is the user axis that became axis i.
struct Sorted {
  Region region;
  std::vector<std::size_t> perm;
};

Sorted sort_sides(const std::vector<Int>& raw, std::ostream& err) {
  std::vector<std::size_t> perm(raw.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return raw[a] > raw[b]; });
  std::vector<Int> dims;
  for (auto i : perm) dims.push_back(raw[i]);
  for (Int d : dims)
    if (d < 1) throw DomainError("region sides must be >= 1");
  if (!std::is_sorted(perm.begin(), perm.end())) err << "warning: sides reordered to non-increasing order\n";
  return {Region(dims), perm};
}

HiddenTruth parse_truth(ProblemKind kind, const std::string& text, const Sorted& s) {
  switch (kind) {
    case ProblemKind::LineM1:
    case ProblemKind::LineM2: return SumLine{parse_rational(text)};
    case ProblemKind::LineGeneral: {
      auto v = parse_ints(text);
      if (v.size() != 4) throw DomainError("line truth needs four integers x1,y1,x2,y2");
      if (s.perm[0] == 1) {
        std::swap(v[0], v[1]);
        std::swap(v[2], v[3]);
      }
      return GeneralLine::through(v[0], v[1], v[2], v[3]);
    }
    default: {
      const auto raw = parse_ints(text);
      if (raw.size() != s.perm.size()) throw DomainError("truth has the wrong number of coordinates");
      std::vector<Int> c;
      for (auto i : s.perm) c.push_back(raw[i]);
      return CriticalPoint{c};
    }
  }
}

std::vector<Int> raw_sides(ProblemKind kind, const RunConfig& cfg) {
  auto need = [](const std::optional<Int>& v, const char* flag) {
    if (!v) throw UsageError(std::string("missing ") + flag);
    return *v;
  };
  switch (kind) {
    case ProblemKind::OneD:
    case ProblemKind::Triangular: return {need(cfg.floors, "--floors")};
    case ProblemKind::Point3D: return {need(cfg.l, "--l"), need(cfg.m, "--m"), need(cfg.n, "--n")};
    case ProblemKind::PointDD:
      if (cfg.dims.empty()) throw UsageError("missing --dims");
      return cfg.dims;
    default: return {need(cfg.m, "--m"), need(cfg.n, "--n")};
  }
}

class Sink {
 public:
  Sink(const RunConfig& cfg, std::ostream& out) : path_(cfg.output), out_(out) {}
  void write(const std::string& text) {
    if (!path_) {
      out_ << text;
      return;
    }
    std::ofstream f(*path_);
    if (!f) throw IoError("cannot open " + *path_ + " for writing");
    f << text;
    f.flush();
    if (!f) throw IoError("failed writing " + *path_);
  }

 private:
  std::optional<std::string> path_;
  std::ostream& out_;
};

std::string render_report(const StrategyReport& r, const HiddenTruth& truth, Format fmt) {
  if (fmt == Format::Json) return dump(to_json(r));
  std::ostringstream os;
  if (fmt == Format::Csv) {
    os << "step,outcome";
    for (std::size_t i = 0; i < r.region.dimension(); ++i) os << ",x" << i + 1;
    os << '\n';
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
      os << i + 1 << ',' << to_string(r.trace.entries[i].outcome);
      for (const auto& c : r.trace.entries[i].point.coords) os << ',' << to_fraction(c);
      os << '\n';
    }
    return os.str();
  }
  os << "kind:   " << to_string(r.kind) << "\n"
     << "region: " << pretty(r.region) << "\n"
     << "eggs:   " << r.eggs << "  (" << r.trace.eggs_used() << " broken)\n"
     << "mode:   " << to_string(r.mode) << "\n"
     << "truth:  " << describe(truth) << "\n"
     << "answer: " << pretty(r.answer) << "\n"
     << "drops:  " << r.drops << "\n"
     << "bound:  " << r.bound_value << (r.bound_met ? " (met)" : " (exceeded)") << "\n"
     << "trace:\n";
  for (std::size_t i = 0; i < r.trace.size(); ++i)
    os << "  " << i + 1 << ". " << pretty(r.trace.entries[i].point) << ' ' << to_string(r.trace.entries[i].outcome)
       << '\n';
  return os.str();
}

std::string render_audit(const AuditReport& a, Format fmt) {
  if (fmt == Format::Json) return dump(to_json(a));
  std::ostringstream os;
  if (fmt == Format::Csv) {
    os << "truth,drops\n";
    for (const auto& t : a.per_truth) os << describe(t.truth) << ',' << t.drops << '\n';
    return os.str();
  }
  os << "kind:            " << to_string(a.kind) << "\n"
     << "region:          " << pretty(a.region) << "\n"
     << "eggs:            " << a.eggs << "\n"
     << "mode:            " << to_string(a.mode) << "\n"
     << "truths checked:  " << a.truths_checked << "\n"
     << "max drops:       " << a.max_drops << "\n"
     << "worst truth:     " << (a.worst_truth ? describe(*a.worst_truth) : "-") << "\n"
     << "closed form:     " << a.bound_value << (a.bound_compliant ? " (compliant)" : " (exceeded)") << "\n"
     << "recursive bound: " << a.recursive_bound << (a.recursive_bound_respected ? " (respected)" : " (VIOLATED)")
     << "\n"
     << "exceedances:     " << a.exceedances.size() << "\n"
     << "failures:        " << a.correctness_failures.size() << "\n";
  for (const auto& f : a.correctness_failures) os << "  " << describe(f.truth) << ": " << f.message << '\n';
  return os.str();
}

ProblemKind command_kind(const std::string& cmd) {
  if (cmd == "solve1d") return ProblemKind::OneD;
  return parse_kind(cmd);
}

AuditOptions audit_options(const RunConfig& cfg, Mode mode) {
  AuditOptions o;
  o.mode = mode;
  o.jobs = cfg.jobs;
  o.force = cfg.force;
  return o;
}

int run_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ProblemKind kind = command_kind(cfg.command);
  const Sorted s = sort_sides(raw_sides(kind, cfg), err);
  if (!cfg.eggs) throw UsageError("missing --eggs");
  const int eggs = *cfg.eggs;
  if (kind == ProblemKind::LineGeneral && eggs < 2)
    throw InsufficientEggs("one egg cannot classify a line of unknown slope");
  const Mode mode = cfg.mode.value_or(default_mode(kind));

  HiddenTruth truth;
  if (cfg.truth) {
    truth = parse_truth(kind, *cfg.truth, s);
  } else {
    const AuditReport a = audit_exhaustive(kind, s.region, eggs, audit_options(cfg, mode));
    truth = *a.worst_truth;
    err << "note: no --truth given; using the worst case " << describe(truth) << "\n";
  }
  Environment env(s.region, truth, eggs);
  const StrategyReport r = run_strategy(kind, eggs, env, mode);
  Sink(cfg, out).write(render_report(r, truth, cfg.format));
  return exit_code::ok;
}

int run_schedule(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.floors) throw UsageError("missing --floors");
  const auto sched = schedule_triangular(*cfg.floors);
  std::ostringstream os;
  if (cfg.format == Format::Json) {
    os << dump(Json{{"floors", *cfg.floors}, {"schedule", sched}, {"worstCase", sched.size()}});
  } else if (cfg.format == Format::Csv) {
    os << "drop,floor\n";
    for (std::size_t i = 0; i < sched.size(); ++i) os << i + 1 << ',' << sched[i] << '\n';
  } else {
    for (std::size_t i = 0; i < sched.size(); ++i) os << (i ? "," : "") << sched[i];
    os << '\n';
  }
  Sink(cfg, out).write(os.str());
  return exit_code::ok;
}

int run_audit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.kind) throw UsageError("missing --kind");
  if (!cfg.eggs) throw UsageError("missing --eggs");
  const Sorted s = sort_sides(raw_sides(*cfg.kind, cfg), err);
  const Mode mode = cfg.mode.value_or(default_mode(*cfg.kind));
  const AuditReport a = audit_exhaustive(*cfg.kind, s.region, *cfg.eggs, audit_options(cfg, mode));
  Sink(cfg, out).write(render_audit(a, cfg.format));
  return a.correct() ? exit_code::ok : exit_code::correctness;
}

int run_oracle(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.eggs) throw UsageError("missing --eggs");
  if (!cfg.floors && !cfg.drops) throw UsageError("oracle needs --floors or --drops");
  Json j{{"eggs", *cfg.eggs}};
  std::ostringstream os;
  std::optional<Int> min_drops, capacity;
  if (cfg.floors) {
    min_drops = dp_min_drops(*cfg.floors, *cfg.eggs);
    j["floors"] = *cfg.floors;
    j["minDrops"] = *min_drops;
  }
  if (cfg.drops) {
    capacity = boardman_capacity(*cfg.drops, *cfg.eggs);
    j["drops"] = *cfg.drops;
    j["capacity"] = *capacity;
  }
  if (cfg.format == Format::Json) {
    os << dump(j);
  } else if (cfg.format == Format::Csv) {
    os << "eggs,floors,min_drops,drops,capacity\n" << *cfg.eggs << ',';
    os << (cfg.floors ? std::to_string(*cfg.floors) : "") << ',' << (min_drops ? std::to_string(*min_drops) : "")
       << ',' << (cfg.drops ? std::to_string(*cfg.drops) : "") << ',' << (capacity ? std::to_string(*capacity) : "")
       << '\n';
  } else {
    if (min_drops) os << *min_drops << '\n';
    if (capacity) os << *capacity << '\n';
  }
  Sink(cfg, out).write(os.str());
  return exit_code::ok;
}

std::string comparison_table(double m, double n, int k_min, int k_max) {
  std::ostringstream os;
  os << "M=" << m << " N=" << n;
  if (auto c = crossover_k(m, n, k_max); c && *c >= k_min)
    os << "  crossover k=" << *c;
  os << "\n  k      l_exact           T1           T2           T3           T4  sign\n";
  for (const auto& row : comparison_rows(m, n, k_min, k_max)) {
    char line[160];
    std::snprintf(line, sizeof line, "%3d %12.6f %12.6f %12.6f %12.6f %12.6f  ", row.k, row.l_exact, row.t[0],
                  row.t[1], row.t[2], row.t[3]);
    os << line << to_string(row.sign) << '\n';
  }
  return os.str();
}

Json comparison_json(double m, double n, int k_min, int k_max) {
  Json rows = Json::array();
  for (const auto& row : comparison_rows(m, n, k_min, k_max))
    rows.push_back(Json{{"k", row.k},
                        {"l_exact", row.l_exact},
                        {"T1", row.t[0]},
                        {"T2", row.t[1]},
                        {"T3", row.t[2]},
                        {"T4", row.t[3]},
                        {"sign", to_string(row.sign)}});
  auto c = crossover_k(m, n, k_max);
  return Json{{"m", m}, {"n", n}, {"crossover", c ? Json(*c) : Json(nullptr)}, {"rows", std::move(rows)}};
}

int run_compare(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::pair<Int, Int>> pairs;
  if (cfg.m || cfg.n) {
    if (!cfg.m || !cfg.n) throw UsageError("compare needs both --m and --n");
    pairs.emplace_back(std::max(*cfg.m, *cfg.n), std::min(*cfg.m, *cfg.n));
  } else {
    pairs = {{100, 50}, {100, 100}, {1000, 100}};
  }
  auto dm = [](Int v) { return static_cast<double>(v); };
  if (cfg.format == Format::Csv && pairs.size() > 1) {
    if (!cfg.output) throw UsageError("the default sweep in csv format needs --output DIR");
    std::error_code ec;
    std::filesystem::create_directories(*cfg.output, ec);
    if (ec) throw IoError("cannot create directory " + *cfg.output);
    for (auto [m, n] : pairs) {
      const auto path = std::filesystem::path(*cfg.output) / ("compare_" + std::to_string(m) + "_" + std::to_string(n) + ".csv");
      write_comparison_csv(path.string(), dm(m), dm(n), cfg.k_min, cfg.k_max);
      out << path.string() << '\n';
    }
    return exit_code::ok;
  }
  std::ostringstream os;
  if (cfg.format == Format::Csv) {
    emit_comparison_csv(os, dm(pairs[0].first), dm(pairs[0].second), cfg.k_min, cfg.k_max);
  } else if (cfg.format == Format::Json) {
    Json all = Json::array();
    for (auto [m, n] : pairs) all.push_back(comparison_json(dm(m), dm(n), cfg.k_min, cfg.k_max));
    os << dump(pairs.size() == 1 ? all[0] : all);
  } else {
    for (std::size_t i = 0; i < pairs.size(); ++i)
      os << (i ? "\n" : "") << comparison_table(dm(pairs[i].first), dm(pairs[i].second), cfg.k_min, cfg.k_max);
  }
  Sink(cfg, out).write(os.str());
  return exit_code::ok;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args, std::string* help) {
  CLI::App app{"Egg-drop search strategies, exhaustive audits and bound analysis", "eggdrop"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "table", mode, kind, dims;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table, csv or json")->check(CLI::IsMember({"table", "csv", "json"}));
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  };
  auto with_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "lattice or abstract")->check(CLI::IsMember({"lattice", "abstract"}));
  };
  auto with_run = [&](CLI::App* sub) {
    sub->add_option("--truth", cfg.truth, "hidden truth; defaults to the audited worst case");
    sub->add_option("-j,--jobs", cfg.jobs, "worker threads for the worst-case search")->check(CLI::PositiveNumber);
    sub->add_flag("--force", cfg.force, "allow truth spaces above the cap");
  };
  auto eggs = [&](CLI::App* sub) { sub->add_option("-k,--eggs", cfg.eggs, "egg budget")->check(CLI::PositiveNumber); };
  auto side = [](CLI::App* sub, const char* name, std::optional<Int>& v, const char* what) {
    sub->add_option(name, v, what)->check(CLI::PositiveNumber);
  };

  auto* s1 = app.add_subcommand("solve1d", "jump search on N floors");
  side(s1, "--floors", cfg.floors, "number of floors N");
  eggs(s1), with_mode(s1), with_run(s1), common(s1);

  auto* sch = app.add_subcommand("schedule", "two-egg decreasing-gap schedule");
  side(sch, "--floors", cfg.floors, "number of floors N");
  common(sch);

  auto* s2 = app.add_subcommand("solve2d", "critical point in an M x N rectangle");
  side(s2, "--m", cfg.m, "side M"), side(s2, "--n", cfg.n, "side N");
  eggs(s2), with_mode(s2), with_run(s2), common(s2);

  auto* s3 = app.add_subcommand("solve3d", "critical point in an L x M x N box");
  side(s3, "--l", cfg.l, "side L"), side(s3, "--m", cfg.m, "side M"), side(s3, "--n", cfg.n, "side N");
  eggs(s3), with_mode(s3), with_run(s3), common(s3);

  auto* sd = app.add_subcommand("solvedd", "critical point in a d-dimensional box");
  sd->add_option("--dims", dims, "comma-separated sides");
  eggs(sd), with_mode(sd), with_run(sd), common(sd);

  for (const char* name : {"line-m1", "line-m2", "line-slope"}) {
    auto* sl = app.add_subcommand(name, std::string(name) == "line-slope"
                                            ? "classify lattice points by a line of unknown slope"
                                            : "classify lattice points by a line x + y = V");
    side(sl, "--m", cfg.m, "side M"), side(sl, "--n", cfg.n, "side N");
    eggs(sl), with_run(sl), common(sl);
    if (std::string(name) != "line-slope") with_mode(sl);
  }

  auto* au = app.add_subcommand("audit", "run a strategy against every hidden truth");
  au->add_option("--kind", kind, "solve1d, triangular, solve2d, solve3d, solvedd, line-m1, line-m2, line-slope")
      ->required();
  side(au, "--floors", cfg.floors, "floors (1D kinds)");
  side(au, "--l", cfg.l, "side L"), side(au, "--m", cfg.m, "side M"), side(au, "--n", cfg.n, "side N");
  au->add_option("--dims", dims, "comma-separated sides (solvedd)");
  au->add_option("-j,--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  au->add_flag("--force", cfg.force, "allow truth spaces above the cap");
  eggs(au), with_mode(au), common(au);

  auto* orc = app.add_subcommand("oracle", "exact minimum drops and capacity");
  side(orc, "--floors", cfg.floors, "floors N");
  orc->add_option("--drops", cfg.drops, "drops n for the capacity sum")->check(CLI::NonNegativeNumber);
  eggs(orc), common(orc);

  auto* cmp = app.add_subcommand("compare", "Method One vs Method Two bound comparison");
  side(cmp, "--m", cfg.m, "side M"), side(cmp, "--n", cfg.n, "side N");
  cmp->add_option("--kmin", cfg.k_min, "smallest k")->check(CLI::Range(2, 200));
  cmp->add_option("--kmax", cfg.k_max, "largest k")->check(CLI::Range(2, 200));
  common(cmp);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::ostringstream os, es;
      app.exit(e, os, es);
      if (help) *help = os.str() + es.str();
      cfg.command = "help";
      return cfg;
    }
    throw UsageError(e.what());
  }

  cfg.command = app.get_subcommands().front()->get_name();
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  try {
    if (!mode.empty()) cfg.mode = parse_mode(mode);
    if (!kind.empty()) cfg.kind = parse_kind(kind);
    if (!dims.empty()) cfg.dims = parse_ints(dims);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (cfg.k_min > cfg.k_max) throw UsageError("--kmin must not exceed --kmax");
  return cfg;
}

int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "schedule") return run_schedule(cfg, out);
  if (cfg.command == "audit") return run_audit(cfg, out, err);
  if (cfg.command == "oracle") return run_oracle(cfg, out);
  if (cfg.command == "compare") return run_compare(cfg, out);
  return run_solve(cfg, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    std::string help;
    const RunConfig cfg = parse_args(args, &help);
    if (cfg.command == "help") {
      out << help;
      return exit_code::ok;
    }
    return dispatch(cfg, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return exit_code::io;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::domain;
  }
}

}  // namespace eggdrop
