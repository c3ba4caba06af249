#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Dyck paths of semilength n: words over {u,d} with n of each letter and
// every prefix containing at least as many u as d.  The lattice order is
// pointwise comparison of height profiles.
namespace dyckal {

class DyckPath {
 public:
  DyckPath() = default;

  // Parses a u/d word; rejects bad letters, odd length, negative prefixes
  // and unbalanced words with a position in the message.
  static DyckPath from_word(std::string_view word);

  static DyckPath bottom(int n);  // (ud)^n
  static DyckPath top(int n);     // u^n d^n

  int semilength() const { return static_cast<int>(word_.size() / 2); }
  int steps() const { return static_cast<int>(word_.size()); }
  const std::string& word() const { return word_; }

  // Height profile h(0..2n); h(0)=h(2n)=0.
  std::vector<int> heights() const;
  int height_at(int x) const;

  // 'u' or 'd' of the step from abscissa x to x+1.
  char step(int x) const { return word_[static_cast<size_t>(x)]; }

  bool operator==(const DyckPath&) const = default;
  // Orders words letterwise with u < d, matching enumeration order.
  std::strong_ordering operator<=>(const DyckPath& o) const;

 private:
  explicit DyckPath(std::string w) : word_(std::move(w)) {}
  std::string word_;
};

struct Peak {
  int x = 0;       // abscissa of the peak vertex
  int height = 0;  // its height
  bool operator==(const Peak&) const = default;
};

struct PathFeatures {
  std::vector<Peak> peaks;                    // left to right
  std::vector<Peak> hills;                    // the peaks of height 1
  std::vector<int> returns;                   // abscissas x > 0 with h(x) = 0
  std::vector<std::pair<int, int>> factors;   // [a,b] spans between returns
};

// Pointwise comparison; both paths must have the same semilength.
bool leq(const DyckPath& p, const DyckPath& q);

// Lattice operations: pointwise min/max of height profiles.
DyckPath meet(const DyckPath& p, const DyckPath& q);
DyckPath join(const DyckPath& p, const DyckPath& q);

PathFeatures features(const DyckPath& p);

// Largest semilength enumerate() accepts; C(12) = 208012 paths.
inline constexpr int kEnumerateCap = 12;

// All Dyck paths of semilength n in lexicographic order with u < d.
std::vector<DyckPath> enumerate(int n);

}  // namespace dyckal
