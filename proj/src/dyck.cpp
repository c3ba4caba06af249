#include "dyckal/dyck.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dyckal {

namespace {

[[noreturn]] void bad_word(std::string_view word, size_t pos,
                           const std::string& why) {
  throw std::invalid_argument("bad path word \"" + std::string(word) +
                              "\": " + why + " at position " +
                              std::to_string(pos + 1));
}

}  // namespace

DyckPath DyckPath::from_word(std::string_view word) {
  if (word.empty()) throw std::invalid_argument("bad path word: empty");
  if (word.size() % 2 != 0)
    throw std::invalid_argument("bad path word \"" + std::string(word) +
                                "\": odd length");
  int h = 0;
  for (size_t i = 0; i < word.size(); ++i) {
    char c = word[i];
    if (c == 'u') {
      ++h;
    } else if (c == 'd') {
      if (--h < 0) bad_word(word, i, "drops below zero");
    } else {
      bad_word(word, i, std::string("letter '") + c + "' is not u or d");
    }
  }
  if (h != 0) bad_word(word, word.size() - 1, "does not return to zero");
  return DyckPath(std::string(word));
}

DyckPath DyckPath::bottom(int n) {
  if (n < 1) throw std::invalid_argument("semilength must be >= 1");
  std::string w;
  for (int i = 0; i < n; ++i) w += "ud";
  return DyckPath(std::move(w));
}

DyckPath DyckPath::top(int n) {
  if (n < 1) throw std::invalid_argument("semilength must be >= 1");
  return DyckPath(std::string(static_cast<size_t>(n), 'u') +
                  std::string(static_cast<size_t>(n), 'd'));
}

std::vector<int> DyckPath::heights() const {
  std::vector<int> h(word_.size() + 1, 0);
  for (size_t i = 0; i < word_.size(); ++i)
    h[i + 1] = h[i] + (word_[i] == 'u' ? 1 : -1);
  return h;
}

int DyckPath::height_at(int x) const {
  int h = 0;
  for (int i = 0; i < x; ++i) h += (word_[static_cast<size_t>(i)] == 'u' ? 1 : -1);
  return h;
}

std::strong_ordering DyckPath::operator<=>(const DyckPath& o) const {
  if (auto c = word_.size() <=> o.word_.size(); c != 0) return c;
  for (size_t i = 0; i < word_.size(); ++i) {
    // rank u before d
    int a = word_[i] == 'u' ? 0 : 1;
    int b = o.word_[i] == 'u' ? 0 : 1;
    if (auto c = a <=> b; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void check_same_size(const DyckPath& p, const DyckPath& q) {
  if (p.semilength() != q.semilength())
    throw std::invalid_argument("paths have different semilengths: " +
                                std::to_string(p.semilength()) + " vs " +
                                std::to_string(q.semilength()));
}

DyckPath path_of_heights(const std::vector<int>& h) {
  std::string w(h.size() - 1, 'u');
  for (size_t i = 0; i + 1 < h.size(); ++i)
    w[i] = h[i + 1] > h[i] ? 'u' : 'd';
  return DyckPath::from_word(w);
}

}  // namespace

bool leq(const DyckPath& p, const DyckPath& q) {
  check_same_size(p, q);
  int hp = 0, hq = 0;
  for (int i = 0; i < p.steps(); ++i) {
    hp += p.step(i) == 'u' ? 1 : -1;
    hq += q.step(i) == 'u' ? 1 : -1;
    if (hp > hq) return false;
  }
  return true;
}

DyckPath meet(const DyckPath& p, const DyckPath& q) {
  check_same_size(p, q);
  auto hp = p.heights(), hq = q.heights();
  for (size_t i = 0; i < hp.size(); ++i) hp[i] = std::min(hp[i], hq[i]);
  return path_of_heights(hp);
}

DyckPath join(const DyckPath& p, const DyckPath& q) {
  check_same_size(p, q);
  auto hp = p.heights(), hq = q.heights();
  for (size_t i = 0; i < hp.size(); ++i) hp[i] = std::max(hp[i], hq[i]);
  return path_of_heights(hp);
}

PathFeatures features(const DyckPath& p) {
  PathFeatures out;
  int h = 0;
  int prev_return = 0;
  for (int x = 1; x <= p.steps(); ++x) {
    h += p.step(x - 1) == 'u' ? 1 : -1;
    if (x < p.steps() && p.step(x - 1) == 'u' && p.step(x) == 'd') {
      out.peaks.push_back({x, h});
      if (h == 1) out.hills.push_back({x, h});
    }
    if (h == 0) {
      out.returns.push_back(x);
      out.factors.emplace_back(prev_return, x);
      prev_return = x;
    }
  }
  return out;
}

std::vector<DyckPath> enumerate(int n) {
  if (n < 1 || n > kEnumerateCap)
    throw std::invalid_argument("semilength " + std::to_string(n) +
                                " outside [1, " +
                                std::to_string(kEnumerateCap) + "]");
  std::vector<DyckPath> out;
  std::string w;
  w.reserve(static_cast<size_t>(2 * n));
  // backtracking with u tried first gives lexicographic order (u < d)
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (static_cast<int>(w.size()) == 2 * n) {
      out.push_back(DyckPath::from_word(w));
      return;
    }
    if (ups < n) {
      w.push_back('u');
      self(self, ups + 1, downs);
      w.pop_back();
    }
    if (downs < ups) {
      w.push_back('d');
      self(self, ups, downs + 1);
      w.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace dyckal
