#include "eggdrop/serialize.hpp"

namespace eggdrop {

namespace {

Json region_json(const Region& r) { return Json(r.dims()); }

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed ") + what + ": " + e.what());
  }
}

}  // namespace

Json to_json(const DropPoint& p) {
  Json out = Json::array();
  for (const auto& c : p.coords) out.push_back(to_fraction(c));
  return out;
}

Json to_json(const HiddenTruth& t) {
  if (auto cp = std::get_if<CriticalPoint>(&t)) return Json{{"type", "point"}, {"coords", cp->coords}};
  if (auto sl = std::get_if<SumLine>(&t)) return Json{{"type", "sumline"}, {"v", to_fraction(sl->v)}};
  const auto& g = std::get<GeneralLine>(t);
  return Json{{"type", "line"}, {"alpha", g.alpha}, {"beta", g.beta}, {"v", g.v}};
}

Json to_json(const Answer& a) {
  if (auto pa = std::get_if<PointAnswer>(&a)) return Json{{"type", "point"}, {"coords", pa->coords}};
  const auto& p = std::get<LinePartition>(a);
  Json out{{"type", "partition"}, {"m", p.m}, {"n", p.n}};
  if (p.threshold) out["threshold"] = *p.threshold;
  if (p.line) out["line"] = Json{{"alpha", p.line->alpha}, {"beta", p.line->beta}, {"v", p.line->v}};
  Json breaking = Json::array();
  for (Int x = 0; x <= p.m; ++x)
    for (Int y = 0; y <= p.n; ++y)
      if (p.breaks(x, y)) breaking.push_back(Json::array({x, y}));
  out["breaking"] = std::move(breaking);
  return out;
}

Json to_json(const StrategyReport& r) {
  Json trace = Json::array();
  for (const auto& e : r.trace.entries) trace.push_back(Json{{"point", to_json(e.point)}, {"outcome", to_string(e.outcome)}});
  return Json{{"kind", to_string(r.kind)},
              {"region", region_json(r.region)},
              {"k", r.eggs},
              {"mode", to_string(r.mode)},
              {"trace", std::move(trace)},
              {"answer", to_json(r.answer)},
              {"drops", r.drops},
              {"bound", r.bound_value},
              {"boundMet", r.bound_met}};
}

Json to_json(const AuditReport& r) {
  Json exceed = Json::array();
  for (const auto& e : r.exceedances) exceed.push_back(Json{{"truth", to_json(e.truth)}, {"drops", e.drops}});
  Json failures = Json::array();
  for (const auto& f : r.correctness_failures)
    failures.push_back(Json{{"truth", to_json(f.truth)}, {"message", f.message}});
  return Json{{"kind", to_string(r.kind)},
              {"region", region_json(r.region)},
              {"k", r.eggs},
              {"mode", to_string(r.mode)},
              {"truthsChecked", r.truths_checked},
              {"maxDrops", r.max_drops},
              {"worstTruth", r.worst_truth ? to_json(*r.worst_truth) : Json(nullptr)},
              {"boundValue", r.bound_value},
              {"boundCompliant", r.bound_compliant},
              {"recursiveBound", r.recursive_bound},
              {"recursiveBoundRespected", r.recursive_bound_respected},
              {"exceedances", std::move(exceed)},
              {"correctnessFailures", std::move(failures)}};
}

DropPoint drop_point_from_json(const Json& j) {
  return guarded("drop point", [&] {
    DropPoint p;
    for (const auto& c : j) p.coords.push_back(parse_rational(c.get<std::string>()));
    return p;
  });
}

HiddenTruth truth_from_json(const Json& j) {
  return guarded("truth", [&]() -> HiddenTruth {
    const auto type = j.at("type").get<std::string>();
    if (type == "point") return CriticalPoint{j.at("coords").get<std::vector<Int>>()};
    if (type == "sumline") return SumLine{parse_rational(j.at("v").get<std::string>())};
    if (type == "line") return GeneralLine{j.at("alpha").get<Int>(), j.at("beta").get<Int>(), j.at("v").get<Int>()};
    throw DomainError("unknown truth type: " + type);
  });
}

Answer answer_from_json(const Json& j) {
  return guarded("answer", [&]() -> Answer {
    const auto type = j.at("type").get<std::string>();
    if (type == "point") return PointAnswer{j.at("coords").get<std::vector<Int>>()};
    if (type != "partition") throw DomainError("unknown answer type: " + type);
    LinePartition p;
    p.m = j.at("m").get<Int>();
    p.n = j.at("n").get<Int>();
    if (p.m < 0 || p.n < 0) throw DomainError("negative partition size");
    p.breaking.assign(static_cast<std::size_t>((p.m + 1) * (p.n + 1)), false);
    if (j.contains("threshold")) p.threshold = j.at("threshold").get<Int>();
    if (j.contains("line")) {
      const auto& l = j.at("line");
      p.line = GeneralLine{l.at("alpha").get<Int>(), l.at("beta").get<Int>(), l.at("v").get<Int>()};
    }
    for (const auto& xy : j.at("breaking")) {
      const Int x = xy.at(0).get<Int>(), y = xy.at(1).get<Int>();
      if (x < 0 || x > p.m || y < 0 || y > p.n) throw DomainError("partition point outside the region");
      p.breaking[static_cast<std::size_t>(x * (p.n + 1) + y)] = true;
    }
    return p;
  });
}

StrategyReport report_from_json(const Json& j) {
  return guarded("report", [&] {
    StrategyReport r;
    r.kind = parse_kind(j.at("kind").get<std::string>());
    r.region = Region(j.at("region").get<std::vector<Int>>());
    r.eggs = j.at("k").get<int>();
    r.mode = parse_mode(j.at("mode").get<std::string>());
    for (const auto& e : j.at("trace"))
      r.trace.push(drop_point_from_json(e.at("point")), parse_outcome(e.at("outcome").get<std::string>()));
    r.answer = answer_from_json(j.at("answer"));
    r.drops = j.at("drops").get<Int>();
    r.bound_value = j.at("bound").get<Int>();
    r.bound_met = j.at("boundMet").get<bool>();
    return r;
  });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace eggdrop
