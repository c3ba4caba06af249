#include "dyckal/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

#include "dyckal/heyting.hpp"
#include "json.hpp"

namespace dyckal {

FinitePoset FinitePoset::from_generators(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  FinitePoset p;
  p.labels_ = std::move(elements);
  const int m = p.size();
  if (m == 0) throw std::invalid_argument("poset needs at least one element");
  {
    std::set<std::string> seen;
    for (const auto& l : p.labels_)
      if (!seen.insert(l).second)
        throw std::invalid_argument("duplicate element \"" + l + "\"");
  }
  p.leq_.assign(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
  for (int i = 0; i < m; ++i) p.leq_[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
  for (const auto& [a, b] : leq_pairs) {
    int ia = p.index(a), ib = p.index(b);
    p.leq_[static_cast<size_t>(ia)][static_cast<size_t>(ib)] = true;
  }
  // transitive closure
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      if (p.leq_[static_cast<size_t>(i)][static_cast<size_t>(k)])
        for (int j = 0; j < m; ++j)
          if (p.leq_[static_cast<size_t>(k)][static_cast<size_t>(j)])
            p.leq_[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (p.leq(i, j) && p.leq(j, i))
        throw std::invalid_argument("order cycle between \"" + p.labels_[static_cast<size_t>(i)] +
                                    "\" and \"" + p.labels_[static_cast<size_t>(j)] + "\"");
  return p;
}

FinitePoset FinitePoset::chain(int m) {
  if (m < 1) throw std::invalid_argument("chain needs at least one element");
  std::vector<std::string> els;
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 1; i <= m; ++i) els.push_back("c" + std::to_string(i));
  for (int i = 1; i < m; ++i)
    rel.emplace_back("c" + std::to_string(i), "c" + std::to_string(i + 1));
  return from_generators(std::move(els), rel);
}

FinitePoset FinitePoset::antichain(int m) {
  if (m < 1) throw std::invalid_argument("antichain needs at least one element");
  std::vector<std::string> els;
  for (int i = 1; i <= m; ++i) els.push_back("a" + std::to_string(i));
  return from_generators(std::move(els), {});
}

FinitePoset FinitePoset::diamond() {
  return from_generators({"bot", "x", "y", "top"},
                         {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
}

int FinitePoset::index(std::string_view label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[static_cast<size_t>(i)] == label) return i;
  throw std::invalid_argument("unknown element \"" + std::string(label) + "\"");
}

bool FinitePoset::leq(int a, int b) const {
  return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

std::vector<int> FinitePoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < size() && minimal; ++j)
      if (j != i && leq(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < size() && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

FinitePoset parse_poset(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("bad poset JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw std::invalid_argument("poset JSON needs an \"elements\" array");
  std::vector<std::string> els;
  for (const auto& e : j["elements"]) {
    if (!e.is_string())
      throw std::invalid_argument("poset elements must be strings");
    els.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> rel;
  if (j.contains("leq")) {
    if (!j["leq"].is_array())
      throw std::invalid_argument("poset \"leq\" must be an array of pairs");
    for (const auto& pr : j["leq"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
        throw std::invalid_argument("poset \"leq\" entries must be [\"a\",\"b\"] pairs");
      rel.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }
  return FinitePoset::from_generators(std::move(els), rel);
}

IntervalPoset intervals_poset(const FinitePoset& p) {
  IntervalPoset out;
  std::vector<std::vector<int>> members;  // denoted set of each interval
  for (int lo = 0; lo < p.size(); ++lo)
    for (int hi = 0; hi < p.size(); ++hi) {
      if (!p.leq(lo, hi)) continue;
      out.elements.push_back({lo, hi});
      std::vector<int> m;
      for (int z = 0; z < p.size(); ++z)
        if (p.leq(lo, z) && p.leq(z, hi)) m.push_back(z);
      members.push_back(std::move(m));
    }
  std::vector<std::string> labels;
  for (const auto& e : out.elements)
    labels.push_back("[" + p.label(e.lo) + "," + p.label(e.hi) + "]");
  const int m = static_cast<int>(out.elements.size());
  std::vector<std::pair<std::string, std::string>> rel;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j &&
          std::includes(members[static_cast<size_t>(j)].begin(), members[static_cast<size_t>(j)].end(),
                        members[static_cast<size_t>(i)].begin(), members[static_cast<size_t>(i)].end()))
        rel.emplace_back(labels[static_cast<size_t>(i)], labels[static_cast<size_t>(j)]);
  out.poset = FinitePoset::from_generators(std::move(labels), rel);
  return out;
}

int DownSet::size() const { return std::popcount(bits); }

std::vector<DownSet> downset_lattice(const FinitePoset& q) {
  const int m = q.size();
  if (m > kDownSetElementCap)
    throw std::invalid_argument("poset has " + std::to_string(m) +
                                " elements; down-set cap is " +
                                std::to_string(kDownSetElementCap));
  // linear extension: sort indices by number of elements below
  std::vector<int> order(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
  auto below_count = [&q, m](int i) {
    int c = 0;
    for (int j = 0; j < m; ++j)
      if (q.leq(j, i)) ++c;
    return c;
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return below_count(a) < below_count(b); });

  // grow ideals one element at a time along the extension
  std::vector<std::uint64_t> cur = {0};
  for (int idx : order) {
    std::uint64_t pred = 0;  // strictly-below mask of idx
    for (int j = 0; j < m; ++j)
      if (j != idx && q.leq(j, idx)) pred |= std::uint64_t{1} << j;
    std::vector<std::uint64_t> next;
    next.reserve(cur.size() * 2);
    for (auto d : cur) {
      next.push_back(d);
      if ((pred & ~d) == 0) next.push_back(d | (std::uint64_t{1} << idx));
      if (static_cast<long long>(next.size()) > kDownSetCountCap)
        throw std::invalid_argument("down-set lattice exceeds cap of " +
                                    std::to_string(kDownSetCountCap));
    }
    cur = std::move(next);
  }
  std::sort(cur.begin(), cur.end(), [](std::uint64_t a, std::uint64_t b) {
    if (std::popcount(a) != std::popcount(b))
      return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  std::vector<DownSet> out;
  out.reserve(cur.size());
  for (auto d : cur) out.push_back(DownSet{d});
  return out;
}

DownSet ds_implies(const FinitePoset& q, const DownSet& u, const DownSet& v) {
  DownSet out;
  for (int a = 0; a < q.size(); ++a) {
    bool ok = true;
    for (int b = 0; b < q.size() && ok; ++b)
      if (q.leq(b, a) && u.contains(b) && !v.contains(b)) ok = false;
    if (ok) out.bits |= std::uint64_t{1} << a;
  }
  return out;
}

DownSet ds_pseudo(const FinitePoset& q, const DownSet& u) {
  return ds_implies(q, u, DownSet{0});
}

std::vector<DownSet> lattice_atoms(const FinitePoset& q) {
  std::vector<DownSet> out;
  for (int mel : q.minimal_elements())
    out.push_back(DownSet{std::uint64_t{1} << mel});
  return out;
}

// ---------------------------------------------------------- FiniteLattice

FiniteLattice::FiniteLattice(std::vector<std::string> labels,
                             std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  if (labels_.size() != leq_.size())
    throw std::invalid_argument("lattice label/order size mismatch");
  if (static_cast<int>(labels_.size()) > kIsoSizeCap)
    throw std::invalid_argument("lattice exceeds size cap of " +
                                std::to_string(kIsoSizeCap));
}

bool FiniteLattice::leq(int a, int b) const {
  return leq_[static_cast<size_t>(a)][static_cast<size_t>(b)];
}

FiniteLattice FiniteLattice::from_downsets(const FinitePoset& q,
                                           const std::vector<DownSet>& ds) {
  std::vector<std::string> labels;
  for (const auto& d : ds) {
    std::string l = "{";
    bool first = true;
    for (int i = 0; i < q.size(); ++i)
      if (d.contains(i)) {
        if (!first) l += ",";
        l += q.label(i);
        first = false;
      }
    labels.push_back(l + "}");
  }
  std::vector<std::vector<bool>> leq(ds.size(), std::vector<bool>(ds.size(), false));
  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = 0; j < ds.size(); ++j)
      leq[i][j] = ds[i].subset_of(ds[j]);
  return FiniteLattice(std::move(labels), std::move(leq));
}

FiniteLattice FiniteLattice::from_dyck(int n) {
  auto paths = enumerate(n);
  std::vector<std::string> labels;
  for (const auto& p : paths) labels.push_back(p.word());
  std::vector<std::vector<bool>> m(paths.size(), std::vector<bool>(paths.size(), false));
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = 0; j < paths.size(); ++j)
      m[i][j] = dyckal::leq(paths[i], paths[j]);
  return FiniteLattice(std::move(labels), std::move(m));
}

FiniteLattice FiniteLattice::boolean(int k) {
  if (k < 0 || k > 20) throw std::invalid_argument("boolean rank outside [0,20]");
  const size_t count = size_t{1} << k;
  std::vector<std::string> labels;
  for (size_t s = 0; s < count; ++s) {
    std::string l = "{";
    bool first = true;
    for (int i = 0; i < k; ++i)
      if ((s >> i) & 1) {
        if (!first) l += ",";
        l += std::to_string(i + 1);
        first = false;
      }
    labels.push_back(l + "}");
  }
  std::vector<std::vector<bool>> m(count, std::vector<bool>(count, false));
  for (size_t a = 0; a < count; ++a)
    for (size_t b = 0; b < count; ++b) m[a][b] = (a & ~b) == 0;
  return FiniteLattice(std::move(labels), std::move(m));
}

int FiniteLattice::join(int a, int b) const {
  int best = -1;
  for (int c = 0; c < size(); ++c) {
    if (!leq(a, c) || !leq(b, c)) continue;
    if (best == -1 || leq(c, best)) best = c;
  }
  if (best == -1) throw std::invalid_argument("no upper bound: not a lattice");
  for (int c = 0; c < size(); ++c)
    if (leq(a, c) && leq(b, c) && !leq(best, c))
      throw std::invalid_argument("no least upper bound: not a lattice");
  return best;
}

int FiniteLattice::meet(int a, int b) const {
  int best = -1;
  for (int c = 0; c < size(); ++c) {
    if (!leq(c, a) || !leq(c, b)) continue;
    if (best == -1 || leq(best, c)) best = c;
  }
  if (best == -1) throw std::invalid_argument("no lower bound: not a lattice");
  for (int c = 0; c < size(); ++c)
    if (leq(c, a) && leq(c, b) && !leq(c, best))
      throw std::invalid_argument("no greatest lower bound: not a lattice");
  return best;
}

std::vector<int> FiniteLattice::join_irreducibles() const {
  std::vector<int> out;
  for (int x = 0; x < size(); ++x) {
    int lower_covers = 0;
    for (int y = 0; y < size(); ++y) {
      if (y == x || !leq(y, x)) continue;
      bool cover = true;
      for (int z = 0; z < size() && cover; ++z)
        if (z != x && z != y && leq(y, z) && leq(z, x)) cover = false;
      if (cover) ++lower_covers;
    }
    if (lower_covers == 1) out.push_back(x);
  }
  return out;
}

bool FiniteLattice::distributive() const {
  const int m = size();
  std::vector<std::vector<int>> jt(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  std::vector<std::vector<int>> mt(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      jt[static_cast<size_t>(x)][static_cast<size_t>(y)] = join(x, y);
      mt[static_cast<size_t>(x)][static_cast<size_t>(y)] = meet(x, y);
    }
  auto J = [&](int x, int y) { return jt[static_cast<size_t>(x)][static_cast<size_t>(y)]; };
  auto M = [&](int x, int y) { return mt[static_cast<size_t>(x)][static_cast<size_t>(y)]; };
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (M(x, J(y, z)) != J(M(x, y), M(x, z))) return false;
  return true;
}

// ------------------------------------------------------------ isomorphism

namespace {

// backtracking poset isomorphism on index sets with degree invariants
std::optional<std::vector<int>> poset_iso(
    const std::vector<std::vector<bool>>& a,
    const std::vector<std::vector<bool>>& b) {
  const int m = static_cast<int>(a.size());
  if (m != static_cast<int>(b.size())) return std::nullopt;
  auto degrees = [m](const std::vector<std::vector<bool>>& r, int i) {
    int down = 0, up = 0;
    for (int j = 0; j < m; ++j) {
      if (r[static_cast<size_t>(j)][static_cast<size_t>(i)]) ++down;
      if (r[static_cast<size_t>(i)][static_cast<size_t>(j)]) ++up;
    }
    return std::pair{down, up};
  };
  std::vector<int> map(static_cast<size_t>(m), -1), used(static_cast<size_t>(m), 0);
  auto compatible = [&](int i, int j) {
    if (degrees(a, i) != degrees(b, j)) return false;
    for (int k = 0; k < m; ++k) {
      if (map[static_cast<size_t>(k)] < 0) continue;
      if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] !=
          b[static_cast<size_t>(j)][static_cast<size_t>(map[static_cast<size_t>(k)])])
        return false;
      if (a[static_cast<size_t>(k)][static_cast<size_t>(i)] !=
          b[static_cast<size_t>(map[static_cast<size_t>(k)])][static_cast<size_t>(j)])
        return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == m) return true;
    for (int j = 0; j < m; ++j) {
      if (used[static_cast<size_t>(j)] || !compatible(i, j)) continue;
      map[static_cast<size_t>(i)] = j;
      used[static_cast<size_t>(j)] = 1;
      if (self(self, i + 1)) return true;
      map[static_cast<size_t>(i)] = -1;
      used[static_cast<size_t>(j)] = 0;
    }
    return false;
  };
  if (rec(rec, 0)) return map;
  return std::nullopt;
}

std::vector<std::vector<bool>> restrict_order(const FiniteLattice& l,
                                              const std::vector<int>& idx) {
  std::vector<std::vector<bool>> r(idx.size(), std::vector<bool>(idx.size(), false));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j)
      r[i][j] = l.leq(idx[i], idx[j]);
  return r;
}

std::vector<std::vector<bool>> full_order(const FiniteLattice& l) {
  std::vector<int> idx(static_cast<size_t>(l.size()));
  for (int i = 0; i < l.size(); ++i) idx[static_cast<size_t>(i)] = i;
  return restrict_order(l, idx);
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteLattice& l1,
                                              const FiniteLattice& l2) {
  if (l1.size() != l2.size()) return std::nullopt;
  auto ji1 = l1.join_irreducibles();
  auto ji2 = l2.join_irreducibles();
  if (ji1.size() == ji2.size()) {
    auto sigma = poset_iso(restrict_order(l1, ji1), restrict_order(l2, ji2));
    if (sigma) {
      // extend: x -> join of the images of the irreducibles below x
      std::vector<int> map(static_cast<size_t>(l1.size()), -1);
      bool ok = true;
      for (int x = 0; x < l1.size() && ok; ++x) {
        int img = -1;
        for (size_t k = 0; k < ji1.size(); ++k) {
          if (!l1.leq(ji1[k], x)) continue;
          int y = ji2[static_cast<size_t>((*sigma)[k])];
          img = img < 0 ? y : l2.join(img, y);
        }
        if (img < 0) {
          // no irreducible below x: x is the bottom; find l2's bottom
          img = 0;
          for (int y = 0; y < l2.size(); ++y)
            if (l2.leq(y, img)) img = y;
        }
        map[static_cast<size_t>(x)] = img;
      }
      // verify bijection and order preservation both ways
      std::vector<char> hit(static_cast<size_t>(l2.size()), 0);
      for (int x = 0; x < l1.size() && ok; ++x) {
        size_t img = static_cast<size_t>(map[static_cast<size_t>(x)]);
        if (hit[img]) ok = false;
        else hit[img] = 1;
      }
      for (int x = 0; x < l1.size() && ok; ++x)
        for (int y = 0; y < l1.size() && ok; ++y)
          if (l1.leq(x, y) != l2.leq(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
            ok = false;
      if (ok) return map;
    } else if (l1.distributive() && l2.distributive()) {
      // irreducible posets determine distributive lattices
      return std::nullopt;
    }
  }
  // general fallback
  return poset_iso(full_order(l1), full_order(l2));
}

}  // namespace dyckal
