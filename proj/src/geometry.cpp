#include "geometry.hpp"

#include "eggdrop/optimizer.hpp"

namespace eggdrop::detail {

Rational lemma_step(double a, double b, double n, Mode mode) {
  return integer_step(lemma_minimize({a, b, n}).s_star, mode);
}

std::vector<DropPoint> diagonal_probes(const std::vector<Rational>& lo, const std::vector<Rational>& hi,
                                       const Rational& step, Mode mode, bool include_corner) {
  const std::size_t d = lo.size();
  const Rational w0 = hi[0] - lo[0];
  std::vector<DropPoint> out;
  for (Int i = 1;; ++i) {
    Rational along = step * i;
    if (along >= w0) {
      if (include_corner) out.push_back({hi});
      break;
    }
    DropPoint p;
    p.coords.resize(d);
    p.coords[0] = lo[0] + along;
    for (std::size_t j = 1; j < d; ++j) {
      Rational c = lo[j] + along * (hi[j] - lo[j]) / w0;
      p.coords[j] = mode == Mode::Lattice ? Rational(round_half_up(c)) : c;
    }
    out.push_back(std::move(p));
  }
  return out;
}

Int jump_search(Int lo, Int n, int eggs, Mode mode, const Probe1D& probe) {
  int e = eggs;
  while (e >= 2 && n >= 1) {
    const Rational step = n > 1 ? lemma_step(e - 1, 0, static_cast<double>(n), mode) : Rational(1);
    const Int end = lo + n;
    Rational prev = lo;
    bool broke = false;
    for (Int i = 1;; ++i) {
      Rational pos = lo + step * i;
      if (pos >= end) pos = end;
      if (probe(pos) == Outcome::Broke) {
        const Int top = floor_int(pos);
        lo = floor_int(prev);
        n = top - lo - 1;
        --e;
        broke = true;
        break;
      }
      prev = pos;
      if (pos == end) break;
    }
    if (!broke) return end + 1;
  }
  if (e < 1) throw OutOfEggs("jump search ran out of eggs");
  for (Int x = lo + 1; x <= lo + n; ++x)
    if (probe(Rational(x)) == Outcome::Broke) return x;
  return lo + n + 1;
}

}  // namespace eggdrop::detail
