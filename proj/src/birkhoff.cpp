#include "dyckal/birkhoff.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyckal {

namespace {

std::string iv_str(const Interval& iv) {
  return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
}

}  // namespace

IntervalAntichain IntervalAntichain::make(int n,
                                          std::vector<Interval> intervals) {
  if (n < 1) throw std::invalid_argument("semilength must be >= 1");
  std::sort(intervals.begin(), intervals.end());
  for (size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    if (iv.lo < 1 || iv.hi < iv.lo || iv.hi > n - 1)
      throw std::invalid_argument("interval " + iv_str(iv) +
                                  " outside [1," + std::to_string(n - 1) + "]");
    // sorted by (lo, hi): an antichain needs both endpoints strictly rising
    if (i > 0 && (intervals[i - 1].lo == iv.lo || intervals[i - 1].hi >= iv.hi))
      throw std::invalid_argument("intervals " + iv_str(intervals[i - 1]) +
                                  " and " + iv_str(iv) + " are comparable");
  }
  return IntervalAntichain{n, std::move(intervals)};
}

DyckPath join_irreducible(int n, Interval iv) {
  if (iv.lo < 1 || iv.hi < iv.lo || iv.hi > n - 1)
    throw std::invalid_argument("interval " + iv_str(iv) + " outside [1," +
                                std::to_string(n - 1) + "]");
  std::string w;
  for (int i = 1; i < iv.lo; ++i) w += "ud";
  int k = iv.hi - iv.lo + 2;
  w.append(static_cast<size_t>(k), 'u');
  w.append(static_cast<size_t>(k), 'd');
  for (int i = iv.hi + 1; i < n; ++i) w += "ud";
  return DyckPath::from_word(w);
}

DyckPath atom(int n, int i) { return join_irreducible(n, {i, i}); }

IntervalAntichain to_antichain(const DyckPath& p) {
  std::vector<Interval> ivs;
  for (const auto& pk : features(p).peaks)
    if (pk.height >= 2)
      ivs.push_back({(pk.x - pk.height) / 2 + 1, (pk.x + pk.height) / 2 - 1});
  return IntervalAntichain::make(p.semilength(), std::move(ivs));
}

DyckPath from_antichain(const IntervalAntichain& f) {
  auto checked = IntervalAntichain::make(f.n, f.intervals);
  DyckPath acc = DyckPath::bottom(checked.n);
  for (const auto& iv : checked.intervals)
    acc = join(acc, join_irreducible(checked.n, iv));
  return acc;
}

namespace {

IntervalAntichain maximal(int n, std::vector<Interval> ivs) {
  std::vector<Interval> keep;
  for (const auto& a : ivs) {
    bool dominated = false;
    for (const auto& b : ivs)
      if (b != a && b.contains(a)) { dominated = true; break; }
    if (!dominated && std::find(keep.begin(), keep.end(), a) == keep.end())
      keep.push_back(a);
  }
  return IntervalAntichain::make(n, std::move(keep));
}

void check_same_n(const IntervalAntichain& f, const IntervalAntichain& g) {
  if (f.n != g.n)
    throw std::invalid_argument("antichains over different semilengths");
}

}  // namespace

IntervalAntichain antichain_join(const IntervalAntichain& f,
                                 const IntervalAntichain& g) {
  check_same_n(f, g);
  auto ivs = f.intervals;
  ivs.insert(ivs.end(), g.intervals.begin(), g.intervals.end());
  return maximal(f.n, std::move(ivs));
}

IntervalAntichain antichain_meet(const IntervalAntichain& f,
                                 const IntervalAntichain& g) {
  check_same_n(f, g);
  std::vector<Interval> ivs;
  for (const auto& a : f.intervals)
    for (const auto& b : g.intervals) {
      int lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
      if (lo <= hi) ivs.push_back({lo, hi});
    }
  return maximal(f.n, std::move(ivs));
}

IntervalAntichain antichain_neg(const IntervalAntichain& f) {
  std::vector<bool> covered(static_cast<size_t>(f.n), false);
  for (const auto& iv : f.intervals)
    for (int v = iv.lo; v <= iv.hi; ++v) covered[static_cast<size_t>(v)] = true;
  std::vector<Interval> ivs;
  for (int v = 1; v <= f.n - 1; ++v) {
    if (covered[static_cast<size_t>(v)]) continue;
    int end = v;
    while (end + 1 <= f.n - 1 && !covered[static_cast<size_t>(end + 1)]) ++end;
    ivs.push_back({v, end});
    v = end;
  }
  return IntervalAntichain::make(f.n, std::move(ivs));
}

StatsRecord stats_geometric(const DyckPath& p) {
  auto f = features(p);
  StatsRecord s;
  s.peak_count = static_cast<int>(f.peaks.size());
  s.hill_count = static_cast<int>(f.hills.size());
  for (const auto& pk : f.peaks) s.peak_height_sum += pk.height;
  s.return_count = static_cast<int>(f.returns.size());
  s.first_peak_height = f.peaks.front().height;
  int first_return = f.returns.front();
  for (const auto& pk : f.peaks)
    if (pk.x < first_return) ++s.peaks_before_first_return;
  for (int i = 0; i + 2 < p.steps(); ++i)
    if (p.step(i) == 'd' && p.step(i + 1) == 'u' && p.step(i + 2) == 'u')
      ++s.duu_count;
  return s;
}

FormulaStatsRecord stats_formula(const IntervalAntichain& f) {
  const auto& ivs = f.intervals;
  const int n = f.n;
  auto g = antichain_neg(f);

  auto weight = [](const IntervalAntichain& a) {
    int w = 0;
    for (const auto& iv : a.intervals) w += iv.size();  // disjoint by neg
    return w;
  };
  auto internal_count = [n](const IntervalAntichain& a) {
    int c = 0;
    for (const auto& iv : a.intervals)
      if (!iv.contains(1) && !iv.contains(n - 1)) ++c;
    return c;
  };

  const int card = static_cast<int>(ivs.size());
  const int w_g = weight(g);
  const int int_g = internal_count(g);
  int size_sum = 0;
  for (const auto& iv : ivs) size_sum += iv.size();

  // consecutive intervals are "distanced" when a gap separates them
  auto distanced = [&ivs](size_t i) {  // between ivs[i-1] and ivs[i]
    return ivs[i - 1].hi < ivs[i].lo - 1;
  };

  FormulaStatsRecord out;
  StatsRecord& s = out.stats;
  s.peak_count = card + w_g - int_g;
  s.hill_count = w_g - int_g;
  // every height->=2 peak contributes its interval size plus one, every hill
  // contributes one; the true hill count of the bottom path (empty antichain)
  // is one more than hill_count reports, hence the correction term
  s.peak_height_sum = size_sum + card + s.hill_count + (ivs.empty() ? 1 : 0);
  out.peak_height_sum_union = (n - 1) + card - int_g;
  s.return_count = w_g + 1;

  if (!ivs.empty() && ivs.front().lo == 1) {
    s.first_peak_height = ivs.front().size() + 1;
    size_t k = 1;
    while (k + 1 <= ivs.size() && !distanced(k)) ++k;
    s.peaks_before_first_return = static_cast<int>(k);
  } else {
    s.first_peak_height = 1;
    s.peaks_before_first_return = 1;
  }

  if (!ivs.empty() && ivs.front().lo >= 2) s.duu_count = 1;
  for (size_t i = 1; i < ivs.size(); ++i) {
    // |I_i \ I_{i-1}|: the part of ivs[i] above ivs[i-1] (lo's rise)
    int above = ivs[i].hi - std::max(ivs[i].lo - 1, ivs[i - 1].hi);
    if (distanced(i) || above > 1) ++s.duu_count;
  }
  return out;
}

}  // namespace dyckal
