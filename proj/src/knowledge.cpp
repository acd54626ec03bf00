#include "eggdrop/knowledge.hpp"

#include <algorithm>
#include <set>

namespace eggdrop {

PointKnowledge::PointKnowledge(const Region& r)
    : lower_(r.dimension(), 0), upper_(r.dims()), forced_(r.dimension(), false) {}

void PointKnowledge::observe(const DropPoint& p, Outcome o) {
  if (p.dimension() != dimension()) throw OutOfRegion("drop point has wrong dimension");
  if (o == Outcome::Survived) {
    for (std::size_t i = 0; i < dimension(); ++i) lower_[i] = std::max(lower_[i], floor_int(p.coords[i]));
  } else {
    std::vector<Int> clause(dimension());
    for (std::size_t i = 0; i < dimension(); ++i) clause[i] = floor_int(p.coords[i]);
    open_.push_back(clause);
    all_.push_back(std::move(clause));
  }
  propagate();
}

void PointKnowledge::propagate() {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < dimension(); ++i)
      if (lower_[i] >= upper_[i]) throw ContradictionError("no critical point is consistent with the drops");
    std::vector<std::vector<Int>> keep;
    for (auto& clause : open_) {
      std::size_t live = 0, which = 0;
      bool satisfied = false;
      for (std::size_t i = 0; i < dimension(); ++i) {
        if (clause[i] <= lower_[i]) continue;
        ++live;
        which = i;
        if (upper_[i] <= clause[i]) satisfied = true;
      }
      if (satisfied) continue;
      if (live == 0) throw ContradictionError("break cannot be explained by any axis");
      if (live == 1) {
        upper_[which] = clause[which];
        forced_[which] = true;
        changed = true;
        continue;
      }
      keep.push_back(std::move(clause));
    }
    open_ = std::move(keep);
  }
}

bool PointKnowledge::admits(const std::vector<Int>& c) const {
  if (c.size() != dimension()) return false;
  for (std::size_t i = 0; i < dimension(); ++i)
    if (c[i] <= lower_[i] || c[i] > upper_[i]) return false;
  for (const auto& clause : all_) {
    bool ok = false;
    for (std::size_t i = 0; i < dimension() && !ok; ++i) ok = c[i] <= clause[i];
    if (!ok) return false;
  }
  return true;
}

std::size_t PointKnowledge::count(std::size_t cap) const {
  std::vector<Int> c(dimension());
  for (std::size_t i = 0; i < dimension(); ++i) c[i] = lower_[i] + 1;
  std::size_t n = 0;
  while (true) {
    if (admits(c) && ++n >= cap) return n;
    std::size_t i = 0;
    for (; i < dimension(); ++i) {
      if (++c[i] <= upper_[i]) break;
      c[i] = lower_[i] + 1;
    }
    if (i == dimension()) return n;
  }
}

std::optional<std::vector<Int>> PointKnowledge::resolved() const {
  // After propagation a box of width one on every axis is the only way to a single point.
  for (std::size_t i = 0; i < dimension(); ++i)
    if (upper_[i] != lower_[i] + 1) return std::nullopt;
  return upper_;
}

SumLineKnowledge::SumLineKnowledge(Int m, Int n) : m_(m), n_(n), lo_(0), hi_(m + n) {}

void SumLineKnowledge::observe(const DropPoint& p, Outcome o) {
  Rational s = p.sum();
  if (o == Outcome::Survived)
    lo_ = std::max(lo_, s);
  else
    hi_ = std::min(hi_, s);
  if (lo_ >= hi_) throw ContradictionError("no line value is consistent with the drops");
}

std::size_t SumLineKnowledge::count() const {
  // Integers strictly inside (lo, hi), each one a possible extra split.
  Int first = floor_int(lo_) + 1;
  Int last = ceil_int(hi_) - 1;
  return static_cast<std::size_t>(std::max<Int>(0, last - first + 1)) + 1;
}

std::optional<Int> SumLineKnowledge::resolved_threshold() const {
  if (count() != 1) return std::nullopt;
  return ceil_int(hi_);
}

LineSetKnowledge::LineSetKnowledge(Int m, Int n) : LineSetKnowledge(m, n, enumerate_general_lines(m, n)) {}

LineSetKnowledge::LineSetKnowledge(Int m, Int n, std::vector<GeneralLine> candidates)
    : m_(m), n_(n), lines_(std::move(candidates)) {}

void LineSetKnowledge::observe(const DropPoint& p, Outcome o) {
  const bool broke = o == Outcome::Broke;
  std::erase_if(lines_, [&](const GeneralLine& g) { return g.breaks(p.coords[0], p.coords[1]) != broke; });
  if (lines_.empty()) throw ContradictionError("no line is consistent with the drops");
}

std::optional<LinePartition> LineSetKnowledge::resolved() const {
  if (lines_.empty()) return std::nullopt;
  LinePartition first = partition_of(m_, n_, lines_.front());
  for (std::size_t i = 1; i < lines_.size(); ++i)
    if (!partition_of(m_, n_, lines_[i]).same_split(first)) return std::nullopt;
  if (lines_.size() > 1) first.line.reset();
  return first;
}

KnowledgeState initial_knowledge(const Region& r, const HiddenTruth& shape) {
  if (std::holds_alternative<CriticalPoint>(shape)) return PointKnowledge(r);
  if (r.dimension() != 2) throw DomainError("line problems need a 2D region");
  if (std::holds_alternative<SumLine>(shape)) return SumLineKnowledge(r[0], r[1]);
  return LineSetKnowledge(r[0], r[1]);
}

KnowledgeState ks_update(KnowledgeState s, const DropPoint& p, Outcome o) {
  std::visit([&](auto& k) { k.observe(p, o); }, s);
  return s;
}

std::optional<Answer> ks_resolved(const KnowledgeState& s) {
  if (auto pk = std::get_if<PointKnowledge>(&s)) {
    if (auto c = pk->resolved()) return Answer{PointAnswer{*c}};
    return std::nullopt;
  }
  if (auto sk = std::get_if<SumLineKnowledge>(&s)) {
    if (auto t = sk->resolved_threshold()) return Answer{LinePartition::from_threshold(sk->m(), sk->n(), *t)};
    return std::nullopt;
  }
  if (auto part = std::get<LineSetKnowledge>(s).resolved()) return Answer{*part};
  return std::nullopt;
}

bool ks_contains(const KnowledgeState& s, const HiddenTruth& t) {
  if (auto pk = std::get_if<PointKnowledge>(&s)) {
    auto cp = std::get_if<CriticalPoint>(&t);
    return cp && pk->admits(cp->coords);
  }
  if (auto sk = std::get_if<SumLineKnowledge>(&s)) {
    auto sl = std::get_if<SumLine>(&t);
    return sl && sl->v > sk->lo() && sl->v <= sk->hi();
  }
  auto gl = std::get_if<GeneralLine>(&t);
  const auto& c = std::get<LineSetKnowledge>(s).candidates();
  return gl && std::find(c.begin(), c.end(), *gl) != c.end();
}

std::size_t ks_size(const KnowledgeState& s) {
  if (auto pk = std::get_if<PointKnowledge>(&s)) return pk->count();
  if (auto sk = std::get_if<SumLineKnowledge>(&s)) return sk->count();
  return std::get<LineSetKnowledge>(s).count();
}

std::vector<GeneralLine> enumerate_general_lines(Int m, Int n) {
  std::vector<std::pair<Int, Int>> pts;
  for (Int x = 0; x <= m; ++x)
    for (Int y = 0; y <= n; ++y) pts.emplace_back(x, y);
  std::set<GeneralLine> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto [x1, y1] = pts[i];
      auto [x2, y2] = pts[j];
      // Skip positive slopes.
      if ((x2 - x1) * (y2 - y1) > 0) continue;
      GeneralLine g = GeneralLine::through(x1, y1, x2, y2);
      if (g.v > 0) out.insert(g);
    }
  }
  return {out.begin(), out.end()};
}

LinePartition partition_of(Int m, Int n, const GeneralLine& g) {
  LinePartition p;
  p.m = m;
  p.n = n;
  p.line = g;
  p.breaking.resize(static_cast<std::size_t>((m + 1) * (n + 1)));
  for (Int x = 0; x <= m; ++x)
    for (Int y = 0; y <= n; ++y) p.breaking[static_cast<std::size_t>(x * (n + 1) + y)] = g.breaks_lattice(x, y);
  return p;
}

}  // namespace eggdrop
