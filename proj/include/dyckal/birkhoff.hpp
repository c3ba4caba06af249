#pragma once

#include <vector>

#include "dyckal/dyck.hpp"

// Antichain-of-intervals representation: a path of semilength n corresponds
// to the antichain (under inclusion) of integer intervals inside [1, n-1]
// carried by its peaks of height >= 2.  Join, meet and pseudocomplement have
// direct combinatorial forms on antichains, and seven path statistics can be
// read off the antichain alone.
namespace dyckal {

struct Interval {
  int lo = 0;
  int hi = 0;
  int size() const { return hi - lo + 1; }
  bool contains(int v) const { return lo <= v && v <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool operator==(const Interval&) const = default;
  auto operator<=>(const Interval&) const = default;
};

struct IntervalAntichain {
  int n = 0;                        // semilength of the represented path
  std::vector<Interval> intervals;  // sorted by lo; pairwise incomparable

  // Validates bounds (1 <= lo <= hi <= n-1), sorts, and rejects comparable
  // pairs.  An antichain sorted by lo has strictly increasing lo and hi.
  static IntervalAntichain make(int n, std::vector<Interval> intervals);

  bool operator==(const IntervalAntichain&) const = default;
};

// Path with a single pyramid spanning abscissas [2(lo-1), 2(hi+1)] (height
// hi-lo+2) and hills elsewhere.  These are exactly the join-irreducible
// paths; atom(n, i) is the smallest kind, a 4-step pyramid.
DyckPath join_irreducible(int n, Interval iv);
DyckPath atom(int n, int i);

// Peaks of height h >= 2 at abscissa x map to intervals
// [(x-h)/2 + 1, (x+h)/2 - 1]; inverse of from_antichain.
IntervalAntichain to_antichain(const DyckPath& p);

// Join of the corresponding join-irreducibles (bottom for the empty
// antichain).
DyckPath from_antichain(const IntervalAntichain& f);

// Maximal intervals of the union of both families.
IntervalAntichain antichain_join(const IntervalAntichain& f,
                                 const IntervalAntichain& g);

// Maximal intervals among the nonempty pairwise intersections.
IntervalAntichain antichain_meet(const IntervalAntichain& f,
                                 const IntervalAntichain& g);

// Maximal intervals of [1, n-1] minus the union of f.
IntervalAntichain antichain_neg(const IntervalAntichain& f);

struct StatsRecord {
  int peak_count = 0;
  int hill_count = 0;
  int peak_height_sum = 0;
  int return_count = 0;
  int first_peak_height = 0;
  int peaks_before_first_return = 0;
  int duu_count = 0;  // occurrences of the factor "duu"
  bool operator==(const StatsRecord&) const = default;
};

// Statistics read off the path itself (ground truth).
StatsRecord stats_geometric(const DyckPath& p);

// The same statistics computed from the antichain alone.  peak_height_sum is
// exact on every path: sum(|I|) + |F| + the true hill count (each tall peak
// contributes |I|+1, each hill contributes 1).  peak_height_sum_union is the
// variant (n-1) + |F| - |G*|, which misses shared endpoints of overlapping
// intervals (one less than geometric on the semilength-10 example path).
// peak_count, hill_count and peak_height_sum_union undercount the bottom
// path (empty antichain) by 1.
struct FormulaStatsRecord {
  StatsRecord stats;
  int peak_height_sum_union = 0;
  bool operator==(const FormulaStatsRecord&) const = default;
};

FormulaStatsRecord stats_formula(const IntervalAntichain& f);

}  // namespace dyckal
