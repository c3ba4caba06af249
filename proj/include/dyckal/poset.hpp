#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dyckal/dyck.hpp"

// Finite posets, their interval posets, and the down-set lattices over them.
// Down-sets of any finite poset form a Heyting algebra under inclusion; the
// Dyck lattice is the special case of the interval poset of a chain.
namespace dyckal {

class FinitePoset {
 public:
  FinitePoset() = default;

  // Reflexive-transitive closure of the given pairs; rejects duplicate or
  // unknown labels and cycles (naming an offending pair).
  static FinitePoset from_generators(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& leq_pairs);

  static FinitePoset chain(int m);      // c1 < c2 < ... < cm
  static FinitePoset antichain(int m);  // a1, ..., am incomparable
  static FinitePoset diamond();         // bot < x, y < top

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  int index(std::string_view label) const;  // throws on unknown label
  bool leq(int a, int b) const;

  std::vector<int> minimal_elements() const;
  // Hasse edges (a, b) with a covered by b, ordered by (a, b).
  std::vector<std::pair<int, int>> covers() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

// Parses {"elements": [...], "leq": [["a","b"], ...]} and closes it.
FinitePoset parse_poset(std::string_view json_text);

// An interval [lo, hi] of a poset: the elements z with lo <= z <= hi,
// for a comparable pair lo <= hi (indices into the base poset).
struct IntervalElement {
  int lo = 0;
  int hi = 0;
  bool operator==(const IntervalElement&) const = default;
};

struct IntervalPoset {
  FinitePoset poset;                     // ordered by containment of the
                                         // denoted sets; labels "[lo,hi]"
  std::vector<IntervalElement> elements; // parallel to poset indices
};

IntervalPoset intervals_poset(const FinitePoset& p);

// A down-set of a poset of at most 64 elements, as a bitmask.
struct DownSet {
  std::uint64_t bits = 0;
  bool contains(int i) const { return (bits >> i) & 1u; }
  int size() const;
  bool subset_of(const DownSet& o) const { return (bits & ~o.bits) == 0; }
  bool operator==(const DownSet&) const = default;
  auto operator<=>(const DownSet&) const = default;
};

// Caps for downset_lattice: the base poset must fit a 64-bit mask and the
// lattice itself must stay desk-sized.
inline constexpr int kDownSetElementCap = 64;
inline constexpr long long kDownSetCountCap = 100000;

// All down-sets of q, grown one element at a time along a fixed linear
// extension; result sorted by (size, mask).  Bottom {} first, top last.
std::vector<DownSet> downset_lattice(const FinitePoset& q);

// Largest down-set w with (u intersect w) inside v:
// the elements whose principal down-set meets u only inside v.
DownSet ds_implies(const FinitePoset& q, const DownSet& u, const DownSet& v);

// ds_implies(u, {}).
DownSet ds_pseudo(const FinitePoset& q, const DownSet& u);

// Atoms of the down-set lattice: singletons of minimal elements.
std::vector<DownSet> lattice_atoms(const FinitePoset& q);

// A finite lattice given by its order matrix, for isomorphism testing.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  FiniteLattice(std::vector<std::string> labels,
                std::vector<std::vector<bool>> leq);

  static FiniteLattice from_downsets(const FinitePoset& q,
                                     const std::vector<DownSet>& downsets);
  static FiniteLattice from_dyck(int n);   // the Dyck lattice of semilength n
  static FiniteLattice boolean(int k);     // subsets of a k-set

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }
  bool leq(int a, int b) const;
  int join(int a, int b) const;  // throws if no least upper bound exists
  int meet(int a, int b) const;

  std::vector<int> join_irreducibles() const;  // exactly one lower cover
  bool distributive() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

inline constexpr int kIsoSizeCap = 4096;

// Index mapping L1 -> L2 if the lattices are isomorphic, nullopt otherwise.
// Compares posets of join-irreducibles first (conclusive for distributive
// lattices), falling back to a full backtracking search on small inputs.
std::optional<std::vector<int>> is_isomorphic(const FiniteLattice& l1,
                                              const FiniteLattice& l2);

}  // namespace dyckal
