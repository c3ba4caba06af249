#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dyckal/dyck.hpp"

// Brute-force cross-checks of the geometric shortcuts.  The oracles here
// re-derive everything from first principles (their own height-profile
// comparison, profile folds, naive down-set arithmetic) and never call the
// operations they check.
namespace dyckal {

struct VerifyFailure {
  std::string input;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  int n = 0;
  long long checked = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;  // documented boundary exceptions etc.
  bool ok() const { return failures.empty(); }
};

// Definitional relative pseudocomplement: pointwise max of the height
// profiles of every z with min(p, z) pointwise below q.  Shares no code
// with crossing sets.
DyckPath relpseudo_bruteforce(const DyckPath& p, const DyckPath& q);

inline constexpr std::uint64_t kDefaultSeed = 42;

// Suites: "heyting" (n <= 6; adjunction triples only for n <= 5),
// "stats" (n <= 6), "logic" (2 <= n <= 5, n the Dyck semilength),
// "poset" (2 <= n <= 5, n the largest chain specialization), and
// "all" (2 <= n <= 5, every suite).  Throws on unknown suite or a
// violated cap.  The seed drives the randomized logic cases.
VerifyReport run_suite(const std::string& suite, int n,
                       std::uint64_t seed = kDefaultSeed);

}  // namespace dyckal
