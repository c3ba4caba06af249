#include "dyckal/heyting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dyckal {

int Composition::total() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

CrossingSet crossing_set(const DyckPath& p, const DyckPath& q) {
  if (p.semilength() != q.semilength())
    throw std::invalid_argument("paths have different semilengths");
  auto hp = p.heights(), hq = q.heights();
  CrossingSet cs;
  cs.abscissas.push_back(0);
  for (int x = 1; x < p.steps(); ++x) {
    if (hp[static_cast<size_t>(x)] != hq[static_cast<size_t>(x)]) continue;
    // leaving x: p rises while q falls / arriving at x: p fell while q rose.
    // Exactly one of the two marks a crossing; both together is a touch.
    bool leaving = p.step(x) == 'u' && q.step(x) == 'd';
    bool arriving = p.step(x - 1) == 'd' && q.step(x - 1) == 'u';
    if (leaving != arriving) cs.abscissas.push_back(x);
  }
  cs.abscissas.push_back(p.steps());
  return cs;
}

DyckPath rel_pseudocomplement(const DyckPath& p, const DyckPath& q) {
  auto cs = crossing_set(p, q).abscissas;
  auto hq = q.heights();
  std::string w;
  w.reserve(static_cast<size_t>(p.steps()));
  for (size_t i = 0; i + 1 < cs.size(); ++i) {
    int a = cs[i], b = cs[i + 1];
    if (i % 2 == 0) {
      // p weakly below q here: replace with the staircase u^alpha d^beta
      // joining the crossing heights (both are common points of p and q).
      int dx = b - a, dh = hq[static_cast<size_t>(b)] - hq[static_cast<size_t>(a)];
      int alpha = (dx + dh) / 2, beta = (dx - dh) / 2;
      w.append(static_cast<size_t>(alpha), 'u');
      w.append(static_cast<size_t>(beta), 'd');
    } else {
      // p strictly above q here: copy q
      w.append(q.word(), static_cast<size_t>(a), static_cast<size_t>(b - a));
    }
  }
  return DyckPath::from_word(w);
}

DyckPath pseudocomplement(const DyckPath& p) {
  const int n2 = p.steps();
  auto f = features(p);

  // Maximal runs of consecutive hills, as abscissa spans [a, b].
  std::vector<std::pair<int, int>> runs;
  for (size_t i = 0; i < f.hills.size();) {
    size_t j = i;
    while (j + 1 < f.hills.size() && f.hills[j + 1].x == f.hills[j].x + 2) ++j;
    runs.emplace_back(f.hills[i].x - 1, f.hills[j].x + 1);
    i = j + 1;
  }
  // Empty runs: a return pinched between two non-hill factors.
  for (size_t i = 0; i + 1 < f.factors.size(); ++i) {
    auto [a1, b1] = f.factors[i];
    auto [a2, b2] = f.factors[i + 1];
    if (b1 - a1 > 2 && b2 - a2 > 2) runs.emplace_back(b1, b1);
  }
  std::sort(runs.begin(), runs.end());

  // Each run widens by one step each side (clamped) and becomes a pyramid;
  // the rest fills with hills.  Non-hill factors span >= 4 abscissas, so the
  // widened spans never overlap.
  std::string w;
  w.reserve(static_cast<size_t>(n2));
  int cur = 0;
  auto fill_hills = [&w](int span) {
    for (int k = 0; k < span / 2; ++k) w += "ud";
  };
  for (auto [a, b] : runs) {
    int lo = std::max(0, a - 2), hi = std::min(b + 2, n2);
    fill_hills(lo - cur);
    int k = (hi - lo) / 2;
    w.append(static_cast<size_t>(k), 'u');
    w.append(static_cast<size_t>(k), 'd');
    cur = hi;
  }
  fill_hills(n2 - cur);
  return DyckPath::from_word(w);
}

DyckPath closure(const DyckPath& p) {
  std::string w;
  w.reserve(static_cast<size_t>(p.steps()));
  for (auto [a, b] : features(p).factors) {
    int k = (b - a) / 2;
    w.append(static_cast<size_t>(k), 'u');
    w.append(static_cast<size_t>(k), 'd');
  }
  return DyckPath::from_word(w);
}

bool is_regular(const DyckPath& p) {
  for (auto [a, b] : features(p).factors) {
    int k = (b - a) / 2;
    for (int i = 0; i < k; ++i)
      if (p.step(a + i) != 'u') return false;
  }
  return true;
}

Composition regular_to_composition(const DyckPath& p) {
  if (!is_regular(p))
    throw std::invalid_argument("path " + p.word() + " is not regular");
  Composition c;
  for (auto [a, b] : features(p).factors) c.parts.push_back((b - a) / 2);
  return c;
}

DyckPath composition_to_regular(const Composition& c) {
  if (c.parts.empty()) throw std::invalid_argument("empty composition");
  std::string w;
  for (int part : c.parts) {
    if (part < 1) throw std::invalid_argument("composition part < 1");
    w.append(static_cast<size_t>(part), 'u');
    w.append(static_cast<size_t>(part), 'd');
  }
  return DyckPath::from_word(w);
}

bool refinement_covers(const Composition& finer, const Composition& coarser) {
  const auto& f = finer.parts;
  const auto& c = coarser.parts;
  if (f.size() != c.size() + 1) return false;
  for (size_t j = 0; j + 1 < f.size(); ++j) {
    bool match = true;
    for (size_t i = 0; i < j && match; ++i) match = f[i] == c[i];
    if (match && c[j] == f[j] + f[j + 1]) {
      for (size_t i = j + 2; i < f.size() && match; ++i) match = f[i] == c[i - 1];
      if (match) return true;
    }
  }
  return false;
}

}  // namespace dyckal
